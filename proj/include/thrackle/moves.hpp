#pragma once

// Local rewrites of thrackle drawings: edge removal and insertion,
// Reidemeister-III moves and their closure, vertex splitting.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "thrackle/drawing.hpp"
#include "thrackle/enumerate.hpp"

namespace thrackle {

// Three-path v1 v2 v3 v4 with deg v2 = deg v3 = 2, edges a = v1v2, b = v2v3,
// c = v3v4 crossing at q. The triangle is bounded by b, the part of a from
// q to v2 and the part of c from v3 to q, on the side away from v1 and v4.
struct ThreePathRemoval {
  std::array<int, 4> path{};
  std::array<int, 3> edges{};
  NodeId q = kNoNode;
  std::vector<int> triangle;  // face indices (face_index numbering)
  bool empty = false;         // nothing inside but circle arcs between path[1] and path[2]
};

// Triangle data of a three-path, or nullopt when it is not one (wrong
// degrees, missing edges, a and c adjacent).
std::optional<ThreePathRemoval> three_path(const Drawing& d, std::array<int, 4> path);

// Every three-path with an empty triangle, one per middle edge.
std::vector<ThreePathRemoval> find_removals(const Drawing& d);

// Replaces the three-path by the edge v1 -> q -> v4 (same id as a).
// Errors: TriangleNotEmpty, StaleTriangle.
Drawing remove_edge(const Drawing& d, const ThreePathRemoval& r);

// Three-paths replacing `edge`, pairwise non-isomorphic (scaffolded codes).
// New vertices are free without a constraint; under a constraint they join
// circles of the drawing's scaffold, or of every scaffold with at most d
// discs when the drawing has none. The new edges are: a = id of `edge`
// (from its tail to the first new vertex), b = m + 1, c = m (ending at the
// old head).
std::vector<Drawing> insert_edge(const Drawing& d, int edge, ClassConstraint constraint);

struct R3Triangle {
  std::array<int, 3> edges{};
  std::array<NodeId, 3> crossings{};
  std::array<Dart, 3> face{};  // face walk of the triangle
};

std::vector<R3Triangle> find_r3(const Drawing& d);

// Errors: StaleTriangle.
Drawing apply_r3(const Drawing& d, const R3Triangle& t);

// Codes (chiral: drawing_code, achiral: achiral_code) of every drawing
// reachable by R3 moves. Errors: BudgetExceeded.
std::vector<std::vector<std::uint32_t>> reidemeister_class(const Drawing& d, std::int64_t budget,
                                                           MirrorMode mode = MirrorMode::Chiral);

// Fills census.reid_classes. Errors: BudgetExceeded.
void group_reidemeister(Census& census, std::int64_t budget = 200000);

enum class SplitMode { Degree3DoubleMiddle, Degree4 };

// Splits a vertex on a scaffold circle. With edges E1..Ek at v in
// counterclockwise order outside the disc, E1 moves to a new circle vertex
// v' placed after Ek, and E2 is doubled by a new edge from v' to its far
// end. The new vertex gets the largest id, the new edge id m.
// Errors: WrongDegree, NotOnScaffold.
Drawing vertex_split(const Drawing& d, int vertex, SplitMode mode);

// Inverse of vertex_split applied to `vertex`, whose split partner is the
// last vertex. Errors: InvalidDrawing.
Drawing vertex_merge(const Drawing& d, int vertex);

// Bare spec and scaffold corners describing a drawing.
DrawingSpec spec_of(const Drawing& d);
std::vector<CornerSpec> scaffold_corners(const Drawing& d);
Drawing rebuild(const DrawingSpec& spec, std::span<const CornerSpec> corners);

}  // namespace thrackle
