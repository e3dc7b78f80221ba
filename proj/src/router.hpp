#pragma once

// Drawing new edges into a partial planarized map by walking faces.
//
// An edge is drawn from a corner ("pen") by repeatedly crossing a segment
// of the current face, each crossing splitting that segment with a new
// crossing node, until it ends at a new vertex or at a corner of an
// existing node. Every step stays inside one face, so the map keeps genus 0.

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "thrackle/drawing.hpp"

namespace thrackle::detail {

struct Budget {
  std::atomic<std::int64_t> used{0};
  std::int64_t limit = 0;  // 0: unlimited
  void tick();             // Errors: ResourceLimit.
};

struct Sketch {
  MapBuilder b;
  int circles = 0;  // scaffold circles present (labels scaffold_label(0..))
  int d_max = 0;    // 0: new vertices are free; else they join circles, at most d_max
  std::vector<Corner> anchors;  // corners kept valid while segments split
};

struct EdgeJob {
  std::int32_t tag = 0;        // segment label of the new edge
  std::uint64_t need = 0;      // graph edges to cross, once each
  NodeId target = kNoNode;     // end at a corner of this node, else at a new vertex
  std::int32_t vertex_tag = 0; // node tag of the new vertex
  Budget* budget = nullptr;
};

// Called once per completed routing with the sketch and the end node.
using RouteDone = std::function<void(Sketch&, NodeId)>;

void route_edge(const Sketch& s, Corner start, const EdgeJob& job, const RouteDone& done);

// Corners at v outside every disc, as {v, x} with x a dart at v.
std::vector<Corner> free_corners(const MapBuilder& b, NodeId v);

// Face index per dart of a builder with no dead darts.
std::vector<int> builder_faces(const MapBuilder& b, int* count);

// Per-dart colors matching dart_colors() (node tag >= 0 marks a vertex).
std::vector<std::uint32_t> builder_colors(const MapBuilder& b, bool mirrored);

// Splits the segment of x; anchors referring to the moved dart follow it.
NodeId split_segment(Sketch& s, Dart x, std::int32_t node_tag);

// Extends the pen (anchors.back()) across the segment of x into the face
// on the left of x; x must bound the pen's face on its right.
void cross_segment(Sketch& s, Dart x, std::int32_t tag);

// Ends the pen at corner c; pops it. Returns the dart at the pen end.
Dart finish_at(Sketch& s, Corner c, std::int32_t tag);

// Can a curve from one of the start faces cross exactly the graph edges in
// `need` once each (no other segment) and finish in a face with stop_ok?
bool curve_reachable(const MapBuilder& b, const std::vector<int>& face, int faces,
                     const std::vector<int>& start_faces, std::uint64_t need,
                     const std::vector<char>& stop_ok);

}  // namespace thrackle::detail
