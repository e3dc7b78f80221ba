#include "thrackle/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "router.hpp"
#include "thrackle/error.hpp"

namespace thrackle {

namespace {

using Code = std::vector<std::uint32_t>;

// Darts of edge e leaving each node in turn, starting at vertex `from`.
std::vector<Dart> chain_from(const Drawing& d, int e, int from) {
  const auto& g = d.edges[e];
  if (g.tail == from) return g.darts;
  std::vector<Dart> out;
  for (auto it = g.darts.rbegin(); it != g.darts.rend(); ++it) out.push_back(mate(*it));
  return out;
}

int edge_between(const Drawing& d, int u, int w) {
  for (Dart x : d.edge_darts_at(u)) {
    const auto& g = d.edges[d.segment_of(x)];
    if ((g.tail == u && g.head == w) || (g.tail == w && g.head == u)) return d.segment_of(x);
  }
  return -1;
}

int other_end(const Drawing& d, int e, int v) { return d.edges[e].tail == v ? d.edges[e].head : d.edges[e].tail; }

bool incident(const Drawing& d, int e, int v) { return d.edges[e].tail == v || d.edges[e].head == v; }

EdgeIncidence incidence_of(const Drawing& d, Dart x) {
  const int e = d.segment_of(x);
  return {e, d.edges[e].darts.front() == x};
}

std::vector<std::pair<int, int>> orientation_of(const Drawing& d) {
  std::vector<std::pair<int, int>> o;
  for (const auto& g : d.edges) o.emplace_back(g.tail, g.head);
  return o;
}

// Removes a vertex node that only carries scaffold darts, keeping its circle
// closed; an emptied single-vertex circle disappears.
void drop_circle_vertex(MapBuilder& b, NodeId v) {
  const Dart x = b.node_dart(v);
  if (x == kNoDart) {
    b.remove_node(v);
    return;
  }
  const Dart y = b.next_ccw(x);
  if (y == mate(x)) {
    b.remove_edge(x);
    b.remove_node(v);
    return;
  }
  b.smooth(v, x);
}

}  // namespace

DrawingSpec spec_of(const Drawing& d) {
  DrawingSpec spec;
  spec.vertex_count = d.vertex_count();
  std::vector<int> id(d.map.node_count(), -1);
  for (NodeId v = 0; v < d.map.node_count(); ++v) {
    if (d.kind[v] != NodeKind::Crossing) continue;
    id[v] = static_cast<int>(spec.crossings.size());
    spec.crossings.push_back({-1, -1, 0});
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    const auto& g = d.edges[e];
    spec.edges.emplace_back(g.tail, g.head);
    std::vector<int> route;
    for (std::size_t i = 1; i < g.darts.size(); ++i) {
      const NodeId x = d.map.node_of(g.darts[i]);
      route.push_back(id[x]);
      auto& c = spec.crossings[id[x]];
      if (c[0] < 0) {
        c[0] = e;
      } else {
        c[1] = e;
        c[2] = crossing_sign(d, x, {c[0], false}, {e, false});
      }
    }
    spec.routes.push_back(std::move(route));
  }
  spec.rotation.resize(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) {
    for (Dart x : d.edge_darts_at(v)) spec.rotation[v].push_back(incidence_of(d, x));
  }
  return spec;
}

std::vector<CornerSpec> scaffold_corners(const Drawing& d) {
  std::vector<CornerSpec> out;
  if (!d.has_scaffold()) return out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    const NodeId node = d.vertex_node[v];
    for (Dart x : d.map.darts_at(node)) {
      if (!d.is_scaffold_dart(x) || !d.disc_side[x]) continue;
      const Dart before = d.map.next_ccw(x);
      if (d.is_scaffold_dart(before)) throw Error(ErrorCode::NoScaffold, "circle vertex without edges");
      out.push_back({v, disc_of_label(d.segment_of(x)), incidence_of(d, before)});
    }
  }
  return out;
}

Drawing rebuild(const DrawingSpec& spec, std::span<const CornerSpec> corners) {
  Drawing d = assemble_drawing(spec);
  if (corners.empty()) return d;
  return attach_scaffold(d, corners);
}

// ---------------------------------------------------------------------------
// Edge removal

std::optional<ThreePathRemoval> three_path(const Drawing& d, std::array<int, 4> p) {
  const int n = d.vertex_count();
  for (int v : p) {
    if (v < 0 || v >= n) return std::nullopt;
  }
  if (d.graph_degree(p[1]) != 2 || d.graph_degree(p[2]) != 2) return std::nullopt;
  const int a = edge_between(d, p[0], p[1]);
  const int b = edge_between(d, p[1], p[2]);
  const int c = edge_between(d, p[2], p[3]);
  if (a < 0 || b < 0 || c < 0 || a == b || b == c || a == c) return std::nullopt;
  if (p[0] == p[3] || p[0] == p[2] || p[1] == p[3]) return std::nullopt;
  const NodeId q = crossing_of(d, a, c);
  if (q == kNoNode) return std::nullopt;

  const std::vector<Dart> ca = chain_from(d, a, p[0]);
  const std::vector<Dart> cc = chain_from(d, c, p[2]);
  std::vector<char> blocked(d.map.edge_count(), 0);
  for (Dart x : d.edges[b].darts) blocked[x >> 1] = 1;
  std::size_t iq = 0;
  while (d.map.node_of(ca[iq]) != q) ++iq;
  for (std::size_t i = iq; i < ca.size(); ++i) blocked[ca[i] >> 1] = 1;
  std::size_t jq = 0;
  while (d.map.node_of(mate(cc[jq])) != q) ++jq;
  for (std::size_t j = 0; j <= jq; ++j) blocked[cc[j] >> 1] = 1;

  const Dart qa = ca[iq], qc = mate(cc[jq]);
  int count = 0;
  const std::vector<int> face = face_index(d.map, &count);
  int start;
  if (d.map.next_ccw(qa) == qc) start = face[qc];
  else if (d.map.next_ccw(qc) == qa) start = face[qa];
  else throw Error(ErrorCode::InvalidDrawing, "crossing is not transversal");

  std::vector<std::vector<Dart>> walk(count);
  for (Dart x = 0; x < d.map.dart_count(); ++x) walk[face[x]].push_back(x);
  std::vector<char> in(count, 0);
  std::vector<int> queue{start};
  in[start] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (Dart x : walk[queue[h]]) {
      if (blocked[x >> 1]) continue;
      const int g = face[mate(x)];
      if (!in[g]) in[g] = 1, queue.push_back(g);
    }
  }
  ThreePathRemoval r;
  r.path = p;
  r.edges = {a, b, c};
  r.q = q;
  r.empty = true;
  // Circle arcs between the two removed vertices go away with them.
  auto removed_node = [&](NodeId v) { return v == d.vertex_node[p[1]] || v == d.vertex_node[p[2]]; };
  for (int f = 0; f < count; ++f) {
    if (!in[f]) continue;
    r.triangle.push_back(f);
    for (Dart x : walk[f]) {
      const NodeId v = d.map.node_of(x);
      if (d.is_scaffold_dart(x) && !(removed_node(v) && removed_node(d.map.node_of(mate(x))))) r.empty = false;
      if (d.kind[v] == NodeKind::Vertex && d.vertex_id[v] != p[1] && d.vertex_id[v] != p[2]) r.empty = false;
    }
  }
  return r;
}

std::vector<ThreePathRemoval> find_removals(const Drawing& d) {
  std::vector<ThreePathRemoval> out;
  for (int b = 0; b < d.edge_count(); ++b) {
    const int v2 = d.edges[b].tail, v3 = d.edges[b].head;
    if (d.graph_degree(v2) != 2 || d.graph_degree(v3) != 2) continue;
    int a = -1, c = -1;
    for (Dart x : d.edge_darts_at(v2)) {
      if (d.segment_of(x) != b) a = d.segment_of(x);
    }
    for (Dart x : d.edge_darts_at(v3)) {
      if (d.segment_of(x) != b) c = d.segment_of(x);
    }
    if (a < 0 || c < 0) continue;
    auto r = three_path(d, {other_end(d, a, v2), v2, v3, other_end(d, c, v3)});
    if (r && r->empty) out.push_back(std::move(*r));
  }
  return out;
}

Drawing remove_edge(const Drawing& d, const ThreePathRemoval& r) {
  const auto fresh = three_path(d, r.path);
  if (!fresh || fresh->q != r.q || fresh->edges != r.edges) throw Error(ErrorCode::StaleTriangle, "three-path no longer matches");
  if (!fresh->empty) throw Error(ErrorCode::TriangleNotEmpty, "triangle contains a vertex or a circle arc");
  const auto [v1, v2, v3, v4] = r.path;
  const auto [a, b, c] = r.edges;
  const std::vector<Dart> ca = chain_from(d, a, v1);
  const std::vector<Dart> cc = chain_from(d, c, v3);
  std::size_t iq = 0;
  while (d.map.node_of(ca[iq]) != r.q) ++iq;
  std::size_t jq = 0;
  while (d.map.node_of(mate(cc[jq])) != r.q) ++jq;

  MapBuilder bd = to_builder(d);
  std::vector<Dart> doomed;
  std::vector<NodeId> loose;
  for (std::size_t i = iq; i < ca.size(); ++i) doomed.push_back(ca[i]);
  for (std::size_t j = 0; j <= jq; ++j) doomed.push_back(cc[j]);
  for (Dart x : d.edges[b].darts) doomed.push_back(x);
  for (Dart x : doomed) {
    const NodeId u = d.map.node_of(x), w = d.map.node_of(mate(x));
    for (NodeId y : {u, w}) {
      if (d.kind[y] == NodeKind::Crossing && y != r.q) loose.push_back(y);
    }
  }
  for (std::size_t j = jq + 1; j < cc.size(); ++j) bd.set_edge_tag(cc[j], a);
  for (Dart x : doomed) bd.remove_edge(x);
  std::sort(loose.begin(), loose.end());
  loose.erase(std::unique(loose.begin(), loose.end()), loose.end());
  for (NodeId y : loose) bd.smooth(y, bd.node_dart(y));
  bd.smooth(r.q, bd.node_dart(r.q));
  drop_circle_vertex(bd, d.vertex_node[v2]);
  drop_circle_vertex(bd, d.vertex_node[v3]);

  auto orient = orientation_of(d);
  orient[a] = d.edges[a].tail == v1 ? std::pair{v1, v4} : std::pair{v4, v1};
  Drawing out = from_builder(bd, orient);
  out.name = d.name;
  return out;
}

// ---------------------------------------------------------------------------
// Edge insertion

namespace {

void insert_into(const Drawing& base, int edge, int d_max, std::map<Code, Drawing>& results) {
  using detail::Sketch;
  const int n = base.vertex_count();
  const int m = base.edge_count();
  if (m + 2 > 64) throw Error(ErrorCode::ResourceLimit, "too many edges for insertion");
  const int u = base.edges[edge].tail, w = base.edges[edge].head;
  const std::vector<Dart>& chain = base.edges[edge].darts;

  Sketch root;
  root.b = to_builder(base);
  root.circles = base.disc_count;
  root.d_max = d_max;

  std::vector<std::pair<int, int>> orient = orientation_of(base);
  orient[edge] = {u, n};
  orient.push_back({n + 1, w});
  orient.push_back({n, n + 1});

  std::uint64_t all = 0;
  for (int g = 0; g < m; ++g) {
    if (g != edge) all |= std::uint64_t{1} << g;
  }
  std::uint64_t at_u = 0, at_w = 0;
  for (int g = 0; g < m; ++g) {
    if (incident(base, g, u)) at_u |= std::uint64_t{1} << g;
    if (incident(base, g, w)) at_w |= std::uint64_t{1} << g;
  }

  for (std::size_t i = 0; i < chain.size(); ++i) {
    // Crossings of edge with others before and after the cut point.
    std::uint64_t before = 0, after = 0;
    for (std::size_t k = 1; k < chain.size(); ++k) {
      const int g = base.segment_of(base.map.next_ccw(chain[k]));
      (k <= i ? before : after) |= std::uint64_t{1} << g;
    }
    const std::uint64_t need_a = all & ~at_u & ~before;
    const std::uint64_t need_c = all & ~at_w & ~after;
    const std::uint64_t need_b = all;
    for (int orientation = 0; orientation < 2; ++orientation) {
      Sketch s = root;
      const NodeId p = detail::split_segment(s, chain[i], kCrossingTag);
      const Dart a_in = mate(chain[i]);
      const Dart c_out = s.b.next_ccw(a_in);
      for (Dart x = c_out;;) {
        s.b.set_edge_tag(x, m);
        if (s.b.node_tag(s.b.node_of(mate(x))) != kCrossingTag) break;
        x = s.b.next_ccw(s.b.next_ccw(mate(x)));
      }
      detail::EdgeJob ja;
      ja.tag = edge;
      ja.need = need_a;
      ja.vertex_tag = n;
      const Corner a_start = orientation == 0 ? Corner{p, a_in} : Corner{p, c_out};
      detail::route_edge(s, a_start, ja, [&](Sketch& s1, NodeId x) {
        Dart a0 = kNoDart;
        for (Dart y = s1.b.node_dart(p), y0 = y;;) {
          if (y != a_in && s1.b.edge_tag(y) == edge) a0 = y;
          if ((y = s1.b.next_ccw(y)) == y0) break;
        }
        const Corner c_start = orientation == 0 ? Corner{p, a_in} : Corner{p, a0};
        for (Corner cx : detail::free_corners(s1.b, x)) {
          Sketch s2 = s1;
          s2.anchors.push_back(cx);
          detail::EdgeJob jc;
          jc.tag = m;
          jc.need = need_c;
          jc.vertex_tag = n + 1;
          detail::route_edge(s2, c_start, jc, [&](Sketch& s3, NodeId y) {
            const Corner b_start = s3.anchors.back();
            s3.anchors.pop_back();
            detail::EdgeJob jb;
            jb.tag = m + 1;
            jb.need = need_b;
            jb.target = y;
            detail::route_edge(s3, b_start, jb, [&](Sketch& s4, NodeId) {
              Drawing out = from_builder(s4.b, orient);
              if (!validate_thrackle(out).ok) return;
              Code code = drawing_code(out);
              results.emplace(std::move(code), std::move(out));
            });
          });
        }
      });
    }
  }
}

}  // namespace

std::vector<Drawing> insert_edge(const Drawing& d, int edge, ClassConstraint constraint) {
  if (edge < 0 || edge >= d.edge_count()) throw Error(ErrorCode::WalkNotInGraph, "no such edge");
  std::map<Code, Drawing> results;
  const int d_max = static_cast<int>(constraint);
  if (d_max == 0) {
    insert_into(d.bare(), edge, 0, results);
  } else if (d.has_scaffold()) {
    if (d.disc_count <= d_max) insert_into(d, edge, d_max, results);
  } else {
    const Drawing bare = d.bare();
    for (int k = 1; k <= d_max; ++k) {
      for (const Drawing& s : scaffolds_with(bare, k)) insert_into(s, edge, d_max, results);
    }
  }
  std::vector<Drawing> out;
  for (auto& [code, drawing] : results) {
    drawing.name = d.name.empty() ? "insertion" : d.name + "+";
    out.push_back(std::move(drawing));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reidemeister-III

std::vector<R3Triangle> find_r3(const Drawing& d) {
  std::vector<R3Triangle> out;
  int count = 0;
  const std::vector<int> face = face_index(d.map, &count);
  std::vector<char> seen(count, 0);
  for (Dart x = 0; x < d.map.dart_count(); ++x) {
    if (seen[face[x]]) continue;
    seen[face[x]] = 1;
    const Dart y = d.map.face_next(x), z = d.map.face_next(y);
    if (d.map.face_next(z) != x || x == y) continue;
    R3Triangle t;
    t.face = {x, y, z};
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      const Dart s = t.face[i];
      const NodeId v = d.map.node_of(s);
      if (d.kind[v] != NodeKind::Crossing || d.is_scaffold_dart(s)) ok = false;
      t.crossings[i] = v;
      t.edges[i] = d.segment_of(s);
    }
    if (!ok || t.edges[0] == t.edges[1] || t.edges[1] == t.edges[2] || t.edges[0] == t.edges[2]) continue;
    // Rotate so the face starts at its smallest dart.
    out.push_back(t);
  }
  return out;
}

Drawing apply_r3(const Drawing& d, const R3Triangle& t) {
  for (int i = 0; i < 3; ++i) {
    const Dart s = t.face[i];
    if (s < 0 || s >= d.map.dart_count() || d.map.face_next(s) != t.face[(i + 1) % 3] ||
        d.map.node_of(s) != t.crossings[i] || d.kind[t.crossings[i]] != NodeKind::Crossing ||
        d.segment_of(s) != t.edges[i])
      throw Error(ErrorCode::StaleTriangle, "triangle is not a face of this drawing");
  }
  DrawingSpec spec = spec_of(d);
  std::vector<int> id(d.map.node_count(), -1);
  for (NodeId v = 0, k = 0; v < d.map.node_count(); ++v) {
    if (d.kind[v] == NodeKind::Crossing) id[v] = k++;
  }
  // Side i runs along edge i between crossings i and i+1: swap them.
  for (int i = 0; i < 3; ++i) {
    auto& route = spec.routes[t.edges[i]];
    const int x = id[t.crossings[i]], y = id[t.crossings[(i + 1) % 3]];
    auto px = std::find(route.begin(), route.end(), x);
    auto py = std::find(route.begin(), route.end(), y);
    if (px == route.end() || py == route.end() || std::abs(px - py) != 1)
      throw Error(ErrorCode::StaleTriangle, "triangle side is not a single segment");
    std::iter_swap(px, py);
  }
  const std::vector<CornerSpec> corners = scaffold_corners(d);
  Drawing out = rebuild(spec, corners);
  out.name = d.name;
  return out;
}

std::vector<Code> reidemeister_class(const Drawing& d, std::int64_t budget, MirrorMode mode) {
  auto code_of = [&](const Drawing& x) { return mode == MirrorMode::Achiral ? achiral_code(x) : drawing_code(x); };
  std::set<Code> seen{code_of(d)};
  std::deque<Drawing> queue{d};
  while (!queue.empty()) {
    const Drawing cur = std::move(queue.front());
    queue.pop_front();
    for (const R3Triangle& t : find_r3(cur)) {
      Drawing next = apply_r3(cur, t);
      Code c = code_of(next);
      if (!seen.insert(std::move(c)).second) continue;
      if (static_cast<std::int64_t>(seen.size()) > budget)
        throw Error(ErrorCode::BudgetExceeded, "Reidemeister closure exceeds budget");
      queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

void group_reidemeister(Census& census, std::int64_t budget) {
  std::map<Code, int> index;
  for (std::size_t i = 0; i < census.codes.size(); ++i) index.emplace(census.codes[i], static_cast<int>(i));
  std::vector<int> cls(census.reps.size(), -1);
  census.reid_classes.clear();
  for (std::size_t i = 0; i < census.reps.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(census.reid_classes.size());
    census.reid_classes.emplace_back();
    for (const Code& c : reidemeister_class(census.reps[i], budget, census.mode)) {
      auto it = index.find(c);
      if (it == index.end()) throw Error(ErrorCode::InvalidDrawing, "Reidemeister move leaves the census");
      cls[it->second] = id;
      census.reid_classes.back().push_back(it->second);
    }
    std::sort(census.reid_classes.back().begin(), census.reid_classes.back().end());
  }
  census.grouped = true;
}

// ---------------------------------------------------------------------------
// Vertex splitting

Drawing vertex_split(const Drawing& d, int vertex, SplitMode mode) {
  if (vertex < 0 || vertex >= d.vertex_count()) throw Error(ErrorCode::WalkNotInGraph, "no such vertex");
  if (d.disc_of_vertex(vertex) < 0) throw Error(ErrorCode::NotOnScaffold, "vertex is not on a circle");
  const int k = d.graph_degree(vertex);
  if (k != (mode == SplitMode::Degree4 ? 4 : 3)) throw Error(ErrorCode::WrongDegree, "vertex has degree " + std::to_string(k));
  const int n = d.vertex_count(), m = d.edge_count();
  const NodeId v = d.vertex_node[vertex];
  Dart c1 = kNoDart;
  for (Dart x : d.map.darts_at(v)) {
    if (d.is_scaffold_dart(x) && d.disc_side[x]) c1 = x;
  }
  const Dart c2 = d.map.prev_ccw(c1);
  std::vector<Dart> e;  // E_1..E_k
  for (Dart x = d.map.next_ccw(c1); x != c2; x = d.map.next_ccw(x)) e.push_back(x);
  const int l_edge = d.segment_of(e[0]), m_edge = d.segment_of(e[1]);
  const int far_m = other_end(d, m_edge, vertex);

  detail::Sketch s;
  s.b = to_builder(d);
  const NodeId vp = detail::split_segment(s, c2, n);
  const Dart nn = s.b.next_ccw(mate(c2));
  std::vector<NodeId> xs(k, kNoNode);
  std::vector<Dart> onward(k, kNoDart);
  for (int j = 1; j < k; ++j) {
    xs[j] = detail::split_segment(s, e[j], kCrossingTag);
    onward[j] = s.b.next_ccw(mate(e[j]));
  }
  const Dart l0 = e[0];
  const NodeId y = s.b.node_of(mate(l0));
  const Dart yc = s.b.next_ccw(mate(l0)) == mate(l0) ? kNoDart : s.b.next_ccw(mate(l0));
  s.b.remove_edge(l0);

  // E1 rerouted from v' around v, crossing E_k .. E_2 next to v.
  std::vector<Dart> path;
  Corner pen{vp, nn};
  for (int j = k - 1; j >= 1; --j) {
    const Dart in = mate(e[j]);
    const Dart out = s.b.add_edge(pen, Corner{xs[j], in}, l_edge);
    path.push_back(out);
    pen = Corner{xs[j], s.b.next_ccw(in)};
  }
  s.b.add_edge(pen, Corner{y, yc}, l_edge);
  // Continue the path along E_2 to its far end.
  for (Dart x = onward[1];;) {
    path.push_back(x);
    if (s.b.node_tag(s.b.node_of(mate(x))) != kCrossingTag) break;
    x = s.b.next_ccw(s.b.next_ccw(mate(x)));
  }
  // The doubled edge follows that path on its left.
  s.anchors.push_back(Corner{vp, nn});
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Dart back = mate(path[i]), out = path[i + 1];
    for (Dart g = s.b.prev_ccw(back); g != out;) {
      const Dart next = s.b.prev_ccw(g);
      detail::cross_segment(s, mate(g), m);
      g = next;
    }
  }
  detail::finish_at(s, Corner{s.b.node_of(mate(path.back())), mate(path.back())}, m);

  auto orient = orientation_of(d);
  if (d.edges[l_edge].tail == vertex) orient[l_edge].first = n;
  else orient[l_edge].second = n;
  orient.push_back({n, far_m});
  Drawing out = from_builder(s.b, orient);
  out.name = d.name;
  return out;
}

Drawing vertex_merge(const Drawing& d, int vertex) {
  const int n = d.vertex_count(), m = d.edge_count();
  const int vp = n - 1;
  if (vertex < 0 || vertex >= vp || d.graph_degree(vp) != 2) throw Error(ErrorCode::InvalidDrawing, "no split partner");
  const int m_prime = m - 1;
  if (!incident(d, m_prime, vp)) throw Error(ErrorCode::InvalidDrawing, "last edge does not leave the partner");
  int l_edge = -1;
  for (Dart x : d.edge_darts_at(vp)) {
    if (d.segment_of(x) != m_prime) l_edge = d.segment_of(x);
  }
  MapBuilder b = to_builder(d);
  std::vector<NodeId> loose;
  for (Dart x : d.edges[m_prime].darts) {
    for (NodeId y : {d.map.node_of(x), d.map.node_of(mate(x))}) {
      if (d.kind[y] == NodeKind::Crossing) loose.push_back(y);
    }
    b.remove_edge(x);
  }
  // Prefix of E1 crossing the edges at `vertex`.
  const std::vector<Dart> cl = chain_from(d, l_edge, vp);
  std::size_t cut = 0;
  while (cut + 1 < cl.size()) {
    const Dart at = mate(cl[cut]);
    const int other = d.segment_of(d.map.next_ccw(at));
    if (d.kind[d.map.node_of(at)] != NodeKind::Crossing || !incident(d, other, vertex)) break;
    loose.push_back(d.map.node_of(at));
    ++cut;
  }
  const NodeId y = d.map.node_of(mate(cl[cut]));
  Dart yc = b.next_ccw(mate(cl[cut]));
  if (yc == mate(cl[cut])) yc = kNoDart;
  for (std::size_t i = 0; i <= cut; ++i) b.remove_edge(cl[i]);
  std::sort(loose.begin(), loose.end());
  loose.erase(std::unique(loose.begin(), loose.end()), loose.end());
  for (NodeId x : loose) {
    if (b.node_dart(x) != kNoDart && b.degree(x) == 2) b.smooth(x, b.node_dart(x));
  }
  const NodeId v = d.vertex_node[vertex];
  Dart c1 = kNoDart;
  for (Dart x : d.map.darts_at(v)) {
    if (d.is_scaffold_dart(x) && d.disc_side[x]) c1 = x;
  }
  b.add_edge(Corner{v, b.next_ccw(c1)}, Corner{y, yc}, l_edge);
  drop_circle_vertex(b, d.vertex_node[vp]);
  auto orient = orientation_of(d);
  orient.pop_back();
  if (orient[l_edge].first == vp) orient[l_edge].first = vertex;
  else orient[l_edge].second = vertex;
  Drawing out = from_builder(b, orient);
  out.name = d.name;
  return out;
}

}  // namespace thrackle
