#include <cmath>
#include <numbers>

#include "thrackle/enumerate.hpp"
#include "thrackle/error.hpp"

namespace thrackle {

namespace {

struct Point {
  double x = 0, y = 0;
};

Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

}  // namespace

Drawing standard_musquash(int n, bool with_scaffold) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::EvenN, "standard musquash needs odd n >= 3");
  const int h = (n - 1) / 2;
  std::vector<Point> p(n);
  for (int k = 0; k < n; ++k) {
    const double t = 2 * std::numbers::pi * k / n + std::numbers::pi / 2;
    p[k] = {std::cos(t), std::sin(t)};
  }
  // Cycle order: vertex i*h, edge i from cycle[i] to cycle[i+1].
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i * h) % n;
  DrawingSpec spec;
  spec.vertex_count = n;
  for (int i = 0; i < n; ++i) spec.edges.emplace_back(cyc[i], cyc[(i + 1) % n]);
  std::vector<std::vector<std::pair<double, int>>> along(n);
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      if (f == e + 1 || (e == 0 && f == n - 1)) continue;
      const Point a = p[spec.edges[e].first], b = p[spec.edges[e].second];
      const Point c = p[spec.edges[f].first], d = p[spec.edges[f].second];
      const double den = cross(b - a, d - c);
      const double t = cross(c - a, d - c) / den;
      const double u = cross(c - a, b - a) / den;
      if (!(t > 0 && t < 1 && u > 0 && u < 1)) throw Error(ErrorCode::InvalidDrawing, "musquash chords fail to cross");
      const int id = static_cast<int>(spec.crossings.size());
      spec.crossings.push_back({e, f, cross(b - a, d - c) > 0 ? 1 : -1});
      along[e].emplace_back(t, id);
      along[f].emplace_back(u, id);
    }
  }
  for (auto& a : along) {
    std::sort(a.begin(), a.end());
    std::vector<int> r;
    for (auto [t, id] : a) r.push_back(id);
    spec.routes.push_back(std::move(r));
  }
  Drawing d = assemble_drawing(spec);
  d.name = "standard-musquash-" + std::to_string(n);
  if (!with_scaffold) return d;
  // Outer corner: the sector between the two chords containing the
  // outward radial direction.
  std::vector<CornerSpec> corners;
  for (int v = 0; v < n; ++v) {
    const Dart a = d.map.node_dart(d.vertex_node[v]);
    const Dart b = d.map.next_ccw(a);
    auto angle_of = [&](Dart x) {
      const auto& g = d.edges[d.segment_of(x)];
      const int other = g.tail == v ? g.head : g.tail;
      const Point dir = p[other] - p[v];
      return std::atan2(dir.y, dir.x);
    };
    const double two_pi = 2 * std::numbers::pi;
    const double alpha = angle_of(a), beta = angle_of(b), theta = std::atan2(p[v].y, p[v].x);
    const double span = std::fmod(beta - alpha + 2 * two_pi, two_pi);
    const double off = std::fmod(theta - alpha + 2 * two_pi, two_pi);
    const Dart before = off < span ? b : a;
    const int e = d.segment_of(before);
    corners.push_back({v, 0, {e, d.edges[e].tail == v}});
  }
  Drawing s = attach_scaffold(d, corners);
  s.name = d.name;
  return s;
}

Drawing pants_six_cycle() {
  // Vertices: 0,1 on the outer boundary, 2,3 on the left hole, 4,5 on the
  // right hole.
  DrawingSpec spec;
  spec.vertex_count = 6;
  spec.edges = {{0, 3}, {1, 2}, {2, 4}, {3, 5}, {0, 4}, {1, 5}};
  spec.routes = {{2, 1, 0}, {4, 3, 0}, {1, 6, 5}, {3, 7, 5}, {8, 4, 7}, {8, 2, 6}};
  spec.crossings = {{0, 1, 1},  {0, 2, -1}, {0, 5, -1}, {1, 3, 1}, {1, 4, 1},
                    {2, 3, 1},  {2, 5, 1},  {3, 4, -1}, {4, 5, -1}};
  Drawing d = assemble_drawing(spec);
  const CornerSpec corners[] = {
      {0, 0, {0, true}}, {1, 0, {5, true}}, {2, 1, {2, true}},
      {3, 1, {0, false}}, {5, 2, {5, false}}, {4, 2, {2, false}},
  };
  Drawing s = attach_scaffold(d, corners);
  s.name = "pants-six-cycle";
  return s;
}

MusquashCertificate is_musquash(const Drawing& d) {
  std::vector<DirectedEdge> order;
  cycle_vertices(d, &order);
  const int n = static_cast<int>(order.size());
  std::vector<int> position(d.edge_count());
  for (int i = 0; i < n; ++i) position[order[i].edge] = i;
  MusquashCertificate cert;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<std::vector<int>> rel(n);
    for (int i = 0; i < n; ++i) {
      const DirectedEdge e = order[i];
      const auto& darts = d.edges[e.edge].darts;
      const bool backwards = e.reversed != (dir == 1);
      std::vector<int> seq;
      for (std::size_t k = 1; k < darts.size(); ++k) {
        const int f = d.segment_of(d.map.next_ccw(darts[k]));
        seq.push_back(position[f]);
      }
      if (backwards) std::reverse(seq.begin(), seq.end());
      for (int& k : seq) k = dir == 0 ? ((k - i) % n + n) % n : ((i - k) % n + n) % n;
      rel[i] = std::move(seq);
    }
    bool same = true;
    for (int i = 1; i < n; ++i) same = same && rel[i] == rel[0];
    if (dir == 0 || same) cert.order = rel[0];
    if (same) {
      cert.verdict = true;
      break;
    }
  }
  return cert;
}

}  // namespace thrackle
