#include <string>

#include "thrackle/drawing.hpp"
#include "thrackle/error.hpp"

namespace thrackle {

Dart incidence_dart(const Drawing& d, EdgeIncidence inc) {
  const auto& g = d.edges.at(inc.edge);
  return inc.at_tail ? g.darts.front() : mate(g.darts.back());
}

Drawing assemble_drawing(const DrawingSpec& spec) {
  const int n = spec.vertex_count;
  const int m = static_cast<int>(spec.edges.size());
  const int x = static_cast<int>(spec.crossings.size());
  if (static_cast<int>(spec.routes.size()) != m) throw Error(ErrorCode::InvalidDrawing, "one route per edge required");

  // Segment s of edge e is the dart pair (2q, 2q+1), q = first[e] + s.
  std::vector<int> first(m + 1, 0);
  for (int e = 0; e < m; ++e) first[e + 1] = first[e] + static_cast<int>(spec.routes[e].size()) + 1;
  const int darts = 2 * first[m];

  // out/in darts of each edge at each crossing.
  struct Pass {
    int edge = -1;
    Dart out = kNoDart, in = kNoDart;
  };
  std::vector<std::vector<Pass>> at(x);
  for (int e = 0; e < m; ++e) {
    const auto& r = spec.routes[e];
    for (std::size_t i = 0; i < r.size(); ++i) {
      const int c = r[i];
      if (c < 0 || c >= x) throw Error(ErrorCode::InvalidDrawing, "crossing id out of range");
      const int q = first[e] + static_cast<int>(i);
      at[c].push_back({e, 2 * (q + 1), 2 * q + 1});
    }
  }
  std::vector<std::vector<Dart>> cycles(n + x);
  for (int c = 0; c < x; ++c) {
    const auto [e, f, sign] = spec.crossings[c];
    if (at[c].size() != 2) throw Error(ErrorCode::InvalidDrawing, "crossing " + std::to_string(c) + " not on two routes");
    Pass pe = at[c][0], pf = at[c][1];
    if (pe.edge == f && pf.edge == e) std::swap(pe, pf);
    if (pe.edge != e || pf.edge != f) throw Error(ErrorCode::InvalidDrawing, "crossing " + std::to_string(c) + " edges mismatch");
    if (sign > 0) cycles[n + c] = {pe.out, pf.out, pe.in, pf.in};
    else cycles[n + c] = {pe.out, pf.in, pe.in, pf.out};
  }
  auto tail_dart = [&](int e) { return 2 * first[e]; };
  auto head_dart = [&](int e) { return 2 * (first[e + 1] - 1) + 1; };
  for (int v = 0; v < n; ++v) {
    if (v < static_cast<int>(spec.rotation.size()) && !spec.rotation[v].empty()) {
      for (const auto& inc : spec.rotation[v]) cycles[v].push_back(inc.at_tail ? tail_dart(inc.edge) : head_dart(inc.edge));
    }
  }
  for (int e = 0; e < m; ++e) {
    const auto [t, h] = spec.edges[e];
    for (auto [v, dart] : {std::pair{t, tail_dart(e)}, std::pair{h, head_dart(e)}}) {
      if (v < 0 || v >= n) throw Error(ErrorCode::InvalidDrawing, "edge endpoint out of range");
      if (v < static_cast<int>(spec.rotation.size()) && !spec.rotation[v].empty()) continue;
      cycles[v].push_back(dart);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (cycles[v].empty()) throw Error(ErrorCode::InvalidDrawing, "isolated vertex " + std::to_string(v));
    if (cycles[v].size() > 2 && !(v < static_cast<int>(spec.rotation.size()) && !spec.rotation[v].empty()))
      throw Error(ErrorCode::InvalidDrawing, "vertex " + std::to_string(v) + " needs a rotation");
  }

  Drawing d;
  try {
    d.map = build_map(cycles, darts);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::MalformedPermutation) throw Error(ErrorCode::InvalidDrawing, err.what());
    throw;
  }
  d.kind.assign(n + x, NodeKind::Crossing);
  d.vertex_id.assign(n + x, -1);
  d.vertex_node.resize(n);
  for (int v = 0; v < n; ++v) {
    d.kind[v] = NodeKind::Vertex;
    d.vertex_id[v] = v;
    d.vertex_node[v] = v;
  }
  d.segment.assign(darts / 2, 0);
  for (int e = 0; e < m; ++e) {
    for (int q = first[e]; q < first[e + 1]; ++q) d.segment[q] = e;
  }
  d.disc_side.assign(darts, 0);
  trace_edges(d, spec.edges);
  return d;
}

Drawing attach_scaffold(const Drawing& bare, std::span<const CornerSpec> corners) {
  const auto face = face_index(bare.map);
  int discs = 0;
  for (const auto& c : corners) discs = std::max(discs, c.disc + 1);
  std::vector<DiscSpec> specs(discs);
  for (const auto& c : corners) {
    const Dart x = incidence_dart(bare, c.before);
    if (bare.map.node_of(x) != bare.vertex_node.at(c.vertex))
      throw Error(ErrorCode::NoScaffold, "corner dart is not at vertex " + std::to_string(c.vertex));
    auto& s = specs[c.disc];
    if (s.face == -1) s.face = face[x];
    if (s.face != face[x]) throw Error(ErrorCode::NoScaffold, "disc corners lie on different faces");
    s.corners.push_back(x);
  }
  return attach_scaffold(bare, specs);
}

}  // namespace thrackle
