#include "thrackle/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "thrackle/error.hpp"

namespace thrackle {

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidDrawing, why); }

}  // namespace

int Drawing::crossing_count() const {
  return static_cast<int>(std::count(kind.begin(), kind.end(), NodeKind::Crossing));
}

int Drawing::graph_degree(int v) const {
  int k = 0;
  for (Dart d : map.darts_at(vertex_node[v])) k += !is_scaffold_dart(d);
  return k;
}

int Drawing::disc_of_vertex(int v) const {
  for (Dart d : map.darts_at(vertex_node[v])) {
    if (is_scaffold_dart(d)) return disc_of_label(segment_of(d));
  }
  return -1;
}

std::vector<Dart> Drawing::edge_darts_at(int v) const {
  std::vector<Dart> out;
  for (Dart d : map.darts_at(vertex_node[v])) {
    if (!is_scaffold_dart(d)) out.push_back(d);
  }
  return out;
}

Drawing Drawing::bare() const {
  if (!has_scaffold()) return *this;
  MapBuilder b = to_builder(*this);
  for (Dart d = 0; d < map.dart_count(); d += 2) {
    if (is_scaffold_dart(d)) b.remove_edge(d);
  }
  for (NodeId v = 0; v < map.node_count(); ++v) {
    if (kind[v] == NodeKind::ScaffoldPoint) b.remove_node(v);
  }
  std::vector<std::pair<int, int>> orient;
  for (const auto& e : edges) orient.emplace_back(e.tail, e.head);
  Drawing out = from_builder(b, orient);
  out.name = name;
  return out;
}

MapBuilder to_builder(const Drawing& d) {
  MapBuilder b(d.map);
  for (NodeId v = 0; v < d.map.node_count(); ++v) {
    switch (d.kind[v]) {
      case NodeKind::Vertex: b.set_node_tag(v, d.vertex_id[v]); break;
      case NodeKind::Crossing: b.set_node_tag(v, kCrossingTag); break;
      case NodeKind::ScaffoldPoint: b.set_node_tag(v, kScaffoldPointTag); break;
    }
  }
  for (Dart x = 0; x < d.map.dart_count(); ++x) {
    if (x % 2 == 0) b.set_edge_tag(x, d.segment[x >> 1]);
    b.set_dart_flag(x, d.disc_side[x]);
  }
  return b;
}

Drawing from_builder(const MapBuilder& b, std::span<const std::pair<int, int>> orientation) {
  std::vector<Dart> dmap;
  std::vector<NodeId> nmap;
  Drawing d;
  d.map = b.build(&dmap, &nmap);

  std::vector<int> old_vertices;
  for (NodeId v = 0; v < b.node_capacity(); ++v) {
    if (nmap[v] != kNoNode && b.node_tag(v) >= 0) old_vertices.push_back(b.node_tag(v));
  }
  std::sort(old_vertices.begin(), old_vertices.end());
  std::map<int, int> vertex_rename;
  for (int v : old_vertices) vertex_rename.emplace(v, static_cast<int>(vertex_rename.size()));

  d.kind.assign(d.map.node_count(), NodeKind::Crossing);
  d.vertex_id.assign(d.map.node_count(), -1);
  d.vertex_node.assign(vertex_rename.size(), kNoNode);
  for (NodeId v = 0; v < b.node_capacity(); ++v) {
    const NodeId w = nmap[v];
    if (w == kNoNode) continue;
    const std::int32_t tag = b.node_tag(v);
    if (tag >= 0) {
      d.kind[w] = NodeKind::Vertex;
      d.vertex_id[w] = vertex_rename.at(tag);
      d.vertex_node[d.vertex_id[w]] = w;
    } else if (tag == kScaffoldPointTag) {
      d.kind[w] = NodeKind::ScaffoldPoint;
    }
  }

  std::set<int> graph_labels, disc_labels;
  for (Dart x = 0; x < b.dart_capacity(); x += 2) {
    if (dmap[x] == kNoDart) continue;
    const int tag = b.edge_tag(x);
    if (tag >= 0) graph_labels.insert(tag);
    else disc_labels.insert(disc_of_label(tag));
  }
  std::map<int, int> edge_rename, disc_rename;
  for (int e : graph_labels) edge_rename.emplace(e, static_cast<int>(edge_rename.size()));
  for (int k : disc_labels) disc_rename.emplace(k, static_cast<int>(disc_rename.size()));

  d.segment.assign(d.map.edge_count(), 0);
  d.disc_side.assign(d.map.dart_count(), 0);
  for (Dart x = 0; x < b.dart_capacity(); ++x) {
    if (dmap[x] == kNoDart) continue;
    const int tag = b.edge_tag(x);
    d.segment[dmap[x] >> 1] = tag >= 0 ? edge_rename.at(tag) : scaffold_label(disc_rename.at(disc_of_label(tag)));
    d.disc_side[dmap[x]] = b.dart_flag(x);
  }
  d.disc_count = static_cast<int>(disc_rename.size());

  std::vector<std::pair<int, int>> hint;
  if (!orientation.empty()) {
    hint.assign(edge_rename.size(), {-1, -1});
    for (auto [old_e, new_e] : edge_rename) {
      if (old_e >= static_cast<int>(orientation.size())) continue;
      auto [t, h] = orientation[old_e];
      auto it = vertex_rename.find(t);
      auto jt = vertex_rename.find(h);
      hint[new_e] = {it == vertex_rename.end() ? -1 : it->second, jt == vertex_rename.end() ? -1 : jt->second};
    }
  }
  trace_edges(d, hint);
  return d;
}

void trace_edges(Drawing& d, std::span<const std::pair<int, int>> hint) {
  int m = 0;
  for (int s : d.segment) m = std::max(m, s + 1);
  d.edges.assign(m, GraphEdge{});
  std::vector<char> done(m, 0), best(m, 0);
  for (NodeId v = 0; v < d.map.node_count(); ++v) {
    if (d.kind[v] != NodeKind::Vertex) continue;
    for (Dart start : d.map.darts_at(v)) {
      const int e = d.segment_of(start);
      if (e < 0) continue;
      GraphEdge g;
      g.tail = d.vertex_id[v];
      Dart x = start;
      int guard = 0;
      while (true) {
        g.darts.push_back(x);
        const NodeId w = d.map.node_of(mate(x));
        if (d.kind[w] == NodeKind::Vertex) {
          g.head = d.vertex_id[w];
          break;
        }
        if (d.kind[w] != NodeKind::Crossing || d.map.degree(w) != 4) invalid("edge chain enters a non-crossing node");
        x = d.map.next_ccw(d.map.next_ccw(mate(x)));
        if (d.segment_of(x) != e) invalid("edge " + std::to_string(e) + " does not pass straight through a crossing");
        if (++guard > d.map.dart_count()) invalid("edge chain does not terminate");
      }
      const bool hinted = static_cast<int>(hint.size()) > e && hint[e].first >= 0;
      const bool preferred = hinted ? g.tail == hint[e].first : g.tail <= g.head;
      if (!done[e] || (preferred && !best[e])) {
        best[e] = preferred;
        d.edges[e] = std::move(g);
        done[e] = 1;
      }
    }
  }
  for (int e = 0; e < m; ++e) {
    if (!done[e]) invalid("edge " + std::to_string(e) + " has no vertex endpoint");
  }
}

void check_structure(const Drawing& d) {
  const auto& map = d.map;
  if (static_cast<int>(d.kind.size()) != map.node_count() || static_cast<int>(d.vertex_id.size()) != map.node_count())
    invalid("node tables do not match the map");
  if (static_cast<int>(d.segment.size()) != map.edge_count() || static_cast<int>(d.disc_side.size()) != map.dart_count())
    invalid("segment tables do not match the map");
  if (!map.connected()) invalid("map is disconnected");
  if (genus(map) != 0) invalid("map has genus " + std::to_string(genus(map)));
  for (int v = 0; v < d.vertex_count(); ++v) {
    const NodeId x = d.vertex_node[v];
    if (x < 0 || x >= map.node_count() || d.kind[x] != NodeKind::Vertex || d.vertex_id[x] != v)
      invalid("vertex table inconsistent at vertex " + std::to_string(v));
  }
  for (NodeId v = 0; v < map.node_count(); ++v) {
    const auto darts = map.darts_at(v);
    int scaffold = 0;
    for (Dart x : darts) scaffold += d.is_scaffold_dart(x);
    switch (d.kind[v]) {
      case NodeKind::Crossing: {
        if (darts.size() != 4) invalid("crossing node " + std::to_string(v) + " has degree " + std::to_string(darts.size()));
        const int a = d.segment_of(darts[0]), b = d.segment_of(darts[1]);
        if (a < 0 || b < 0 || a == b || d.segment_of(darts[2]) != a || d.segment_of(darts[3]) != b)
          invalid("crossing node " + std::to_string(v) + " is not a transversal crossing of two edges");
        break;
      }
      case NodeKind::Vertex:
        if (scaffold != 0 && scaffold != 2) invalid("vertex node " + std::to_string(v) + " meets a circle badly");
        if (d.vertex_id[v] < 0) invalid("vertex node without id");
        break;
      case NodeKind::ScaffoldPoint:
        if (scaffold != static_cast<int>(darts.size()) || darts.size() != 2) invalid("bad scaffold point");
        break;
    }
  }
  // Disc faces are bounded by circle darts only.
  int face_count = 0;
  const auto face = face_index(map, &face_count);
  std::vector<int> disc_face_of(d.disc_count, -1);
  std::vector<int> face_state(face_count, -1);  // -1 unknown, 0 plain, 1 disc
  for (Dart x = 0; x < map.dart_count(); ++x) {
    const int s = d.disc_side[x];
    if (s && !d.is_scaffold_dart(x)) invalid("graph dart marked as disc side");
    if (face_state[face[x]] == -1) face_state[face[x]] = s;
    else if (face_state[face[x]] != s) invalid("disc face with a non-disc boundary dart");
    if (s) {
      const int k = disc_of_label(d.segment_of(x));
      if (k >= d.disc_count) invalid("disc id out of range");
      if (disc_face_of[k] == -1) disc_face_of[k] = face[x];
      else if (disc_face_of[k] != face[x]) invalid("disc with two faces");
    }
  }
  for (Dart x = 0; x < map.dart_count(); x += 2) {
    if (d.is_scaffold_dart(x) && d.disc_side[x] == d.disc_side[x + 1]) invalid("circle segment without a disc side");
  }
  for (int k = 0; k < d.disc_count; ++k) {
    if (disc_face_of[k] == -1) invalid("disc " + std::to_string(k) + " has no face");
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    const auto& g = d.edges[e];
    if (g.darts.empty()) invalid("empty edge chain");
    if (map.node_of(g.darts.front()) != d.vertex_node[g.tail] || map.node_of(mate(g.darts.back())) != d.vertex_node[g.head])
      invalid("edge chain endpoints wrong for edge " + std::to_string(e));
    for (std::size_t i = 0; i < g.darts.size(); ++i) {
      if (d.segment_of(g.darts[i]) != e) invalid("edge chain leaves its edge");
      if (i + 1 < g.darts.size() && map.next_ccw(map.next_ccw(mate(g.darts[i]))) != g.darts[i + 1])
        invalid("edge chain is not straight at a crossing");
    }
  }
}

ThrackleReport validate_thrackle(const Drawing& d) {
  const int m = d.edge_count();
  std::vector<int> meets(m * m, 0);
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      const auto& a = d.edges[e];
      const auto& b = d.edges[f];
      int shared = 0;
      for (int x : {a.tail, a.head}) {
        for (int y : {b.tail, b.head}) shared += x == y;
      }
      meets[e * m + f] = shared;
    }
  }
  ThrackleReport r;
  for (NodeId v = 0; v < d.map.node_count(); ++v) {
    if (d.kind[v] != NodeKind::Crossing) continue;
    ++r.crossing_total;
    const Dart x = d.map.node_dart(v);
    int e = d.segment_of(x), f = d.segment_of(d.map.next_ccw(x));
    if (e > f) std::swap(e, f);
    ++meets[e * m + f];
  }
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      if (meets[e * m + f] != 1) r.violations.push_back({e, f, meets[e * m + f]});
    }
  }
  r.ok = r.violations.empty();
  return r;
}

int crossing_count_formula(const Drawing& d) {
  if (!validate_thrackle(d).ok) throw Error(ErrorCode::NotAThrackle, "drawing is not a thrackle");
  const int m = d.edge_count();
  int total = m * (m - 1) / 2;
  for (int v = 0; v < d.vertex_count(); ++v) {
    const int k = d.graph_degree(v);
    total -= k * (k - 1) / 2;
  }
  return total;
}

namespace {

// Dart of directed edge e leaving crossing x, or kNoDart.
Dart outgoing_at(const Drawing& d, NodeId x, DirectedEdge e) {
  for (Dart y : d.edges[e.edge].darts) {
    if (d.map.node_of(y) == x) return e.reversed ? d.map.next_ccw(d.map.next_ccw(y)) : y;
  }
  return kNoDart;
}

}  // namespace

int crossing_sign(const Drawing& d, NodeId crossing, DirectedEdge first, DirectedEdge second) {
  if (crossing < 0 || crossing >= d.map.node_count() || d.kind[crossing] != NodeKind::Crossing)
    throw Error(ErrorCode::EdgesDontCrossHere, "node is not a crossing");
  const Dart a = outgoing_at(d, crossing, first);
  const Dart b = outgoing_at(d, crossing, second);
  if (a == kNoDart || b == kNoDart || first.edge == second.edge)
    throw Error(ErrorCode::EdgesDontCrossHere, "edges do not cross at this node");
  return d.map.next_ccw(a) == b ? +1 : -1;
}

NodeId crossing_of(const Drawing& d, int e, int f) {
  const auto& chain = d.edges[e].darts;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Dart x = chain[i];
    if (d.segment_of(d.map.next_ccw(x)) == f) return d.map.node_of(x);
  }
  return kNoNode;
}

std::vector<int> cycle_vertices(const Drawing& d, std::vector<DirectedEdge>* edge_order) {
  const int n = d.vertex_count();
  if (n < 3 || d.edge_count() != n) throw Error(ErrorCode::NotACycle, "edge and vertex counts differ");
  std::vector<std::vector<int>> inc(n);
  for (int e = 0; e < n; ++e) {
    inc[d.edges[e].tail].push_back(e);
    inc[d.edges[e].head].push_back(e);
  }
  for (int v = 0; v < n; ++v) {
    if (inc[v].size() != 2) throw Error(ErrorCode::NotACycle, "vertex of degree other than 2");
  }
  std::vector<int> verts;
  std::vector<DirectedEdge> order;
  int v = d.edges[0].tail;
  int e = 0;
  for (int i = 0; i < n; ++i) {
    verts.push_back(v);
    const bool rev = d.edges[e].tail != v;
    order.push_back({e, rev});
    v = rev ? d.edges[e].tail : d.edges[e].head;
    e = inc[v][0] == e ? inc[v][1] : inc[v][0];
  }
  if (v != verts[0]) throw Error(ErrorCode::NotACycle, "graph is not a single cycle");
  std::vector<char> seen(n, 0);
  for (int x : verts) {
    if (seen[x]) throw Error(ErrorCode::NotACycle, "graph is not a single cycle");
    seen[x] = 1;
  }
  if (edge_order) *edge_order = std::move(order);
  return verts;
}

bool is_alternating(const Drawing& d) {
  std::vector<DirectedEdge> order;
  cycle_vertices(d, &order);
  const int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int off = ((j - i) % n + n) % n;
      // f = order[j], g = order[j+1] must avoid both ends of order[i].
      if (off == 0 || off == 1 || off == n - 1 || off == n - 2) continue;
      const DirectedEdge e = order[i], f = order[j], g = order[(j + 1) % n];
      const int sf = crossing_sign(d, crossing_of(d, e.edge, f.edge), e, f);
      const int sg = crossing_sign(d, crossing_of(d, e.edge, g.edge), e, g);
      if (sf == sg) return false;
    }
  }
  return true;
}

bool alternation_holds(const Drawing& d) {
  const int m = d.edge_count();
  auto other = [&](int e, int v) { return d.edges[e].tail == v ? d.edges[e].head : d.edges[e].tail; };
  auto on = [&](int e, int v) { return d.edges[e].tail == v || d.edges[e].head == v; };
  for (int w = 0; w < d.vertex_count(); ++w) {
    const std::vector<Dart> at = d.edge_darts_at(w);
    for (Dart a : at) {
      for (Dart b : at) {
        const int f = d.segment_of(a), g = d.segment_of(b);
        if (f == g) continue;
        const int u = other(f, w), x = other(g, w);
        // f directed u -> w, g directed w -> x.
        const DirectedEdge df{f, d.edges[f].tail != u}, dg{g, d.edges[g].tail != w};
        for (int e = 0; e < m; ++e) {
          if (e == f || e == g || on(e, u) || on(e, w) || on(e, x)) continue;
          const DirectedEdge de{e, false};
          if (crossing_sign(d, crossing_of(d, e, f), de, df) == crossing_sign(d, crossing_of(d, e, g), de, dg)) return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Scaffolds

Drawing attach_scaffold(const Drawing& bare, std::span<const DiscSpec> discs) {
  if (bare.has_scaffold()) throw Error(ErrorCode::NoScaffold, "drawing already has a scaffold");
  const auto face = face_index(bare.map);
  std::vector<char> on_circle(bare.vertex_count(), 0);
  MapBuilder b = to_builder(bare);
  for (int k = 0; k < static_cast<int>(discs.size()); ++k) {
    const DiscSpec& s = discs[k];
    if (s.corners.empty()) throw Error(ErrorCode::NoScaffold, "disc without vertices");
    std::vector<NodeId> nodes;
    for (Dart c : s.corners) {
      if (c < 0 || c >= bare.map.dart_count() || face[c] != s.face)
        throw Error(ErrorCode::NoScaffold, "corner not on the disc face");
      const NodeId v = bare.map.node_of(c);
      if (bare.kind[v] != NodeKind::Vertex) throw Error(ErrorCode::NoScaffold, "corner is not at a vertex");
      if (on_circle[bare.vertex_id[v]]) throw Error(ErrorCode::NoScaffold, "vertex on two circles");
      on_circle[bare.vertex_id[v]] = 1;
      nodes.push_back(v);
    }
    // Order corners along the face walk.
    std::vector<Dart> walk;
    {
      Dart x = s.corners[0];
      do {
        walk.push_back(x);
        x = bare.map.face_next(x);
      } while (x != s.corners[0]);
    }
    std::vector<Dart> corners;
    for (Dart x : walk) {
      if (std::find(s.corners.begin(), s.corners.end(), x) != s.corners.end()) corners.push_back(x);
    }
    const int label = scaffold_label(k);
    if (corners.size() == 1) {
      const NodeId v = b.node_of(corners[0]);
      const Dart loop = b.add_edge(Corner{v, corners[0]}, Corner{v, corners[0]}, label);
      b.set_dart_flag(mate(loop), 1);
      continue;
    }
    std::vector<Dart> chords;
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
      chords.push_back(b.add_edge(Corner{b.node_of(corners[i]), corners[i]},
                                  Corner{b.node_of(corners[i + 1]), corners[i + 1]}, label));
    }
    chords.push_back(b.add_edge(Corner{b.node_of(corners.back()), corners.back()},
                                Corner{b.node_of(corners[0]), chords[0]}, label));
    for (Dart c : chords) b.set_dart_flag(c, 1);
  }
  std::vector<std::pair<int, int>> orient;
  for (const auto& e : bare.edges) orient.emplace_back(e.tail, e.head);
  Drawing out = from_builder(b, orient);
  if (genus(out.map) != 0) throw Error(ErrorCode::NoScaffold, "discs interleave in one face");
  out.name = bare.name;
  return out;
}

Scaffold scaffold_of(const Drawing& d) {
  Scaffold s;
  s.d = d.disc_count;
  s.circles.assign(d.disc_count, {});
  s.disc_faces.assign(d.disc_count, -1);
  s.assignment.assign(d.vertex_count(), -1);
  const auto face = face_index(d.map);
  for (Dart x = 0; x < d.map.dart_count(); ++x) {
    if (!d.disc_side[x]) continue;
    const int k = disc_of_label(d.segment_of(x));
    if (s.disc_faces[k] != -1) continue;
    s.disc_faces[k] = face[x];
    // The disc face, walked backwards, visits the circle counterclockwise.
    Dart y = x;
    do {
      const NodeId v = d.map.node_of(y);
      if (d.kind[v] == NodeKind::Vertex) {
        s.circles[k].push_back(d.vertex_id[v]);
        s.assignment[d.vertex_id[v]] = k;
      }
      y = d.map.face_next(y);
    } while (y != x);
    std::reverse(s.circles[k].begin(), s.circles[k].end());
  }
  return s;
}

namespace {

struct CornerChoice {
  int face;
  Dart dart;
};

// Corners of each vertex grouped by face, for the bare drawing.
std::vector<std::vector<CornerChoice>> vertex_corners(const Drawing& bare, const std::vector<int>& face) {
  std::vector<std::vector<CornerChoice>> out(bare.vertex_count());
  for (int v = 0; v < bare.vertex_count(); ++v) {
    for (Dart x : bare.map.darts_at(bare.vertex_node[v])) out[v].push_back({face[x], x});
  }
  return out;
}

// Face subsets of size exactly k covering every vertex.
void covers_of_size(const std::vector<std::uint64_t>& vertex_faces, int face_count, int k, int start,
                    std::uint64_t chosen, int depth, std::vector<std::uint64_t>& out) {
  if (depth == k) {
    for (std::uint64_t m : vertex_faces) {
      if (!(m & chosen)) return;
    }
    out.push_back(chosen);
    return;
  }
  for (int f = start; f < face_count; ++f) {
    covers_of_size(vertex_faces, face_count, k, f + 1, chosen | (std::uint64_t{1} << f), depth + 1, out);
  }
}

std::vector<std::uint64_t> vertex_face_masks(const Drawing& bare, const std::vector<int>& face, int face_count) {
  if (face_count > 64) throw Error(ErrorCode::ResourceLimit, "too many faces for scaffold search");
  std::vector<std::uint64_t> masks(bare.vertex_count(), 0);
  for (int v = 0; v < bare.vertex_count(); ++v) {
    for (Dart x : bare.map.darts_at(bare.vertex_node[v])) masks[v] |= std::uint64_t{1} << face[x];
  }
  return masks;
}

}  // namespace

int minimal_class(const Drawing& bare_in, int d_max) {
  const Drawing bare = bare_in.bare();
  int face_count = 0;
  const auto face = face_index(bare.map, &face_count);
  const auto masks = vertex_face_masks(bare, face, face_count);
  for (int k = 1; k <= std::min(d_max, bare.vertex_count()); ++k) {
    std::vector<std::uint64_t> covers;
    covers_of_size(masks, face_count, k, 0, 0, 0, covers);
    if (!covers.empty()) return k;
  }
  return 0;
}

std::vector<Drawing> scaffolds_with(const Drawing& bare_in, int d) {
  const Drawing bare = bare_in.bare();
  int face_count = 0;
  const auto face = face_index(bare.map, &face_count);
  const auto masks = vertex_face_masks(bare, face, face_count);
  const auto corners = vertex_corners(bare, face);
  std::vector<std::uint64_t> covers;
  covers_of_size(masks, face_count, d, 0, 0, 0, covers);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Drawing> out;
  for (std::uint64_t cover : covers) {
    std::vector<int> faces_in;
    for (int f = 0; f < face_count; ++f) {
      if (cover >> f & 1) faces_in.push_back(f);
    }
    std::vector<std::vector<CornerChoice>> options(bare.vertex_count());
    for (int v = 0; v < bare.vertex_count(); ++v) {
      for (const auto& c : corners[v]) {
        if (cover >> c.face & 1) options[v].push_back(c);
      }
    }
    std::vector<int> pick(bare.vertex_count(), 0);
    while (true) {
      std::vector<DiscSpec> specs(faces_in.size());
      for (std::size_t i = 0; i < faces_in.size(); ++i) specs[i].face = faces_in[i];
      for (int v = 0; v < bare.vertex_count(); ++v) {
        const auto& c = options[v][pick[v]];
        const auto it = std::find(faces_in.begin(), faces_in.end(), c.face);
        specs[it - faces_in.begin()].corners.push_back(c.dart);
      }
      const bool all_used = std::all_of(specs.begin(), specs.end(), [](const DiscSpec& s) { return !s.corners.empty(); });
      if (all_used) {
        Drawing s = attach_scaffold(bare, specs);
        if (seen.insert(drawing_code(s)).second) out.push_back(std::move(s));
      }
      int v = 0;
      while (v < bare.vertex_count() && ++pick[v] == static_cast<int>(options[v].size())) pick[v++] = 0;
      if (v == bare.vertex_count()) break;
    }
  }
  return out;
}

std::vector<Drawing> classify_td(const Drawing& bare, int d_max) {
  const int d = minimal_class(bare, d_max);
  if (d == 0) return {};
  return scaffolds_with(bare, d);
}

// ---------------------------------------------------------------------------
// Codes

std::vector<std::uint32_t> dart_colors(const Drawing& d) {
  std::vector<std::uint32_t> color(d.map.dart_count());
  for (Dart x = 0; x < d.map.dart_count(); ++x) {
    const auto k = static_cast<std::uint32_t>(d.kind[d.map.node_of(x)]);
    color[x] = k * 4 + (d.is_scaffold_dart(x) ? 2 : 0) + d.disc_side[x];
  }
  return color;
}

std::vector<std::uint32_t> drawing_code(const Drawing& d) {
  return canonical_form(d.map, dart_colors(d)).code;
}

Drawing mirror(const Drawing& d) {
  Drawing out = d;
  out.map = d.map.mirrored();
  for (Dart x = 0; x < d.map.dart_count(); ++x) out.disc_side[x] = d.disc_side[mate(x)];
  return out;
}

std::vector<std::uint32_t> mirror_drawing_code(const Drawing& d) { return drawing_code(mirror(d)); }

std::vector<std::uint32_t> achiral_code(const Drawing& d) {
  return std::min(drawing_code(d), mirror_drawing_code(d));
}

}  // namespace thrackle
