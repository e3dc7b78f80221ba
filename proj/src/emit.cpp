#include <Eigen/Sparse>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "thrackle/io.hpp"

namespace thrackle {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kSize = 600.0;
constexpr double kMargin = 30.0;

struct Point {
  double x = 0, y = 0;
};

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << (std::abs(v) < 0.005 ? 0.0 : v);
  return os.str();
}

// Tutte barycentric layout with the largest face pinned to a circle.
std::vector<Point> tutte_layout(const CombinatorialMap& m) {
  const int n = m.node_count();
  std::vector<Point> pos(n);
  const FaceStructure fs = faces(m);
  std::size_t outer = 0;
  for (std::size_t f = 1; f < fs.faces.size(); ++f) {
    if (fs.faces[f].size() > fs.faces[outer].size()) outer = f;
  }
  std::vector<NodeId> ring;
  std::vector<char> pinned(n, 0);
  for (Dart x : fs.faces[outer]) {
    const NodeId v = m.node_of(x);
    if (!pinned[v]) {
      pinned[v] = 1;
      ring.push_back(v);
    }
  }
  const double r = kSize / 2 - kMargin;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
    pos[ring[i]] = {kSize / 2 + r * std::cos(a), kSize / 2 - r * std::sin(a)};
  }

  std::vector<int> index(n, -1);
  int free_count = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (!pinned[v]) index[v] = free_count++;
  }
  if (free_count == 0) return pos;
  std::vector<Eigen::Triplet<double>> entries;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(free_count), by = Eigen::VectorXd::Zero(free_count);
  for (NodeId v = 0; v < n; ++v) {
    if (pinned[v]) continue;
    double diag = 0;
    for (Dart x : m.darts_at(v)) {
      const NodeId w = m.node_of(mate(x));
      if (w == v) continue;
      diag += 1;
      if (pinned[w]) {
        bx[index[v]] += pos[w].x;
        by[index[v]] += pos[w].y;
      } else {
        entries.emplace_back(index[v], index[w], -1.0);
      }
    }
    entries.emplace_back(index[v], index[v], diag);
  }
  Eigen::SparseMatrix<double> a(free_count, free_count);
  a.setFromTriplets(entries.begin(), entries.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.compute(a);
  const Eigen::VectorXd sx = solver.solve(bx), sy = solver.solve(by);
  for (NodeId v = 0; v < n; ++v) {
    if (!pinned[v]) pos[v] = {sx[index[v]], sy[index[v]]};
  }
  return pos;
}

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Vertex: return "vertex";
    case NodeKind::Crossing: return "crossing";
    case NodeKind::ScaffoldPoint: return "point";
  }
  return "?";
}

// Darts with disc k on their right, in face order.
std::vector<Dart> disc_boundary(const Drawing& d, int k) {
  for (Dart x = 0; x < d.map.dart_count(); ++x) {
    if (!d.disc_side[x] || d.segment_of(x) != scaffold_label(k)) continue;
    std::vector<Dart> walk;
    Dart y = x;
    do {
      walk.push_back(y);
      y = d.map.face_next(y);
    } while (y != x);
    return walk;
  }
  return {};
}

std::vector<int> vertices_on(const Drawing& d, const std::vector<Dart>& walk) {
  std::vector<int> out;
  for (Dart x : walk) {
    const NodeId v = d.map.node_of(x);
    if (d.kind[v] == NodeKind::Vertex) out.push_back(d.vertex_id[v]);
  }
  return out;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

ordered_json check_json(const Check& c) {
  ordered_json j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["population"] = c.population;
  j["pass"] = c.pass;
  j["witnesses"] = ordered_json::array();
  for (const Drawing& w : c.witnesses) j["witnesses"].push_back(to_tmf(w));
  return j;
}

}  // namespace

std::string to_svg(const Drawing& d) {
  const auto& m = d.map;
  const std::vector<Point> pos = tutte_layout(m);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
     << kSize << ' ' << kSize << "\">\n";
  if (!d.name.empty()) os << "<title>" << d.name << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int k = 0; k < d.disc_count; ++k) {
    os << "<polygon class=\"disc\" data-disc=\"" << k << "\" fill=\"#eeeeee\" fill-opacity=\"0.5\" stroke=\"none\" points=\"";
    bool first = true;
    for (Dart x : disc_boundary(d, k)) {
      const Point p = pos[m.node_of(x)];
      os << (first ? "" : " ") << num(p.x) << ',' << num(p.y);
      first = false;
    }
    os << "\"/>\n";
  }

  // Parallel map edges are bent apart so each stays visible.
  std::map<std::pair<NodeId, NodeId>, int> seen, total;
  for (int s = 0; s < m.edge_count(); ++s) {
    const NodeId u = m.node_of(2 * s), v = m.node_of(2 * s + 1);
    ++total[{std::min(u, v), std::max(u, v)}];
  }
  for (int s = 0; s < m.edge_count(); ++s) {
    NodeId u = m.node_of(2 * s), v = m.node_of(2 * s + 1);
    const std::pair<NodeId, NodeId> key{std::min(u, v), std::max(u, v)};
    const int i = seen[key]++;
    const int count = total[key];
    const Point a = pos[key.first], b = pos[key.second];
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len = std::max(std::hypot(dx, dy), 1e-9);
    const double bend = (static_cast<double>(i) - (count - 1) / 2.0) * 18.0;
    const Point c{(a.x + b.x) / 2 - dy / len * bend, (a.y + b.y) / 2 + dx / len * bend};
    const int label = d.segment[s];
    if (label >= 0) {
      os << "<path class=\"edge\" data-edge=\"" << label << "\" stroke=\"" << kPalette[label % 8] << "\"";
    } else {
      os << "<path class=\"scaffold\" data-disc=\"" << disc_of_label(label) << "\" stroke=\"#777777\" stroke-dasharray=\"6 4\"";
    }
    os << " stroke-width=\"2\" fill=\"none\" d=\"M " << num(a.x) << ' ' << num(a.y) << " Q " << num(c.x) << ' ' << num(c.y)
       << ' ' << num(b.x) << ' ' << num(b.y) << "\"/>\n";
  }

  for (NodeId v = 0; v < m.node_count(); ++v) {
    const Point p = pos[v];
    if (d.kind[v] == NodeKind::Vertex) {
      os << "<circle class=\"vertex\" data-vertex=\"" << d.vertex_id[v] << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
         << "\" r=\"7\" fill=\"black\"/>\n";
      os << "<text x=\"" << num(p.x + 9) << "\" y=\"" << num(p.y - 9) << "\" font-size=\"12\">" << d.vertex_id[v]
         << "</text>\n";
    } else {
      os << "<circle class=\"" << kind_name(d.kind[v]) << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
         << "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string to_dot(const Drawing& d) {
  const auto& m = d.map;
  std::ostringstream os;
  os << "graph thrackle {\n";
  for (NodeId v = 0; v < m.node_count(); ++v) {
    os << "  n" << v;
    if (d.kind[v] == NodeKind::Vertex) {
      os << " [shape=circle, label=\"" << d.vertex_id[v] << "\"];\n";
    } else {
      os << " [shape=point, label=\"\", kind=" << kind_name(d.kind[v]) << "];\n";
    }
  }
  for (int s = 0; s < m.edge_count(); ++s) {
    os << "  n" << m.node_of(2 * s) << " -- n" << m.node_of(2 * s + 1);
    const int label = d.segment[s];
    if (label >= 0) {
      os << " [edge=" << label << "];\n";
    } else {
      os << " [style=dashed, disc=" << disc_of_label(label) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const Drawing& d) {
  ordered_json j;
  j["name"] = d.name;
  j["darts"] = d.map.dart_count();
  j["vertices"] = d.vertex_count();
  j["disc_count"] = d.disc_count;
  ordered_json nodes = ordered_json::array();
  for (NodeId v = 0; v < d.map.node_count(); ++v) {
    ordered_json n;
    n["id"] = v;
    n["kind"] = kind_name(d.kind[v]);
    if (d.kind[v] == NodeKind::Vertex) n["vertex"] = d.vertex_id[v];
    n["rotation"] = d.map.darts_at(v);
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (int e = 0; e < d.edge_count(); ++e) {
    ordered_json g;
    g["id"] = e;
    g["tail"] = d.edges[e].tail;
    g["head"] = d.edges[e].head;
    g["darts"] = d.edges[e].darts;
    edges.push_back(std::move(g));
  }
  j["edges"] = std::move(edges);
  ordered_json discs = ordered_json::array();
  for (int k = 0; k < d.disc_count; ++k) {
    const std::vector<Dart> walk = disc_boundary(d, k);
    ordered_json c;
    c["id"] = k;
    c["vertices"] = vertices_on(d, walk);
    c["darts"] = walk;
    discs.push_back(std::move(c));
  }
  j["discs"] = std::move(discs);
  const ThrackleReport r = validate_thrackle(d);
  j["crossings"] = d.crossing_count();
  j["thrackle"] = r.ok;
  return j.dump(2) + "\n";
}

std::string report_text(const VerdictReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (n <= " << r.n_max << "): " << (r.all_pass ? "PASS" : "FAIL") << '\n';
  for (const Check& c : r.checks) {
    os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.id << "  [" << c.population << " tested]  " << c.statement
       << '\n';
  }
  for (const Check& c : r.checks) {
    for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
      os << "\n# counterexample " << i + 1 << " to " << c.id << '\n' << to_tmf(c.witnesses[i]);
    }
  }
  return os.str();
}

std::string report_json(const VerdictReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["n_max"] = r.n_max;
  j["all_pass"] = r.all_pass;
  j["checks"] = ordered_json::array();
  for (const Check& c : r.checks) j["checks"].push_back(check_json(c));
  return j.dump(2) + "\n";
}

std::string census_json(const Census& c, const std::vector<std::string>& file_names) {
  constexpr int kClassSearch = 4;
  ordered_json j;
  j["n"] = c.n;
  j["class"] = c.constraint == ClassConstraint::None ? "any" : "T" + std::to_string(static_cast<int>(c.constraint));
  j["mode"] = c.mode == MirrorMode::Achiral ? "achiral" : "chiral";
  j["isotopy_reps"] = c.reps.size();
  j["reidemeister_classes"] = c.grouped || c.reps.empty() ? ordered_json(c.reid_classes.size()) : ordered_json(nullptr);

  std::vector<int> minimal(c.reps.size());
  std::vector<bool> musquash(c.reps.size());
  ordered_json reps = ordered_json::array();
  for (std::size_t i = 0; i < c.reps.size(); ++i) {
    const Drawing& d = c.reps[i];
    minimal[i] = minimal_class(d.bare(), kClassSearch);
    musquash[i] = is_musquash(d).verdict;
    ordered_json r;
    r["file"] = file_names.at(i);
    r["crossings"] = d.crossing_count();
    r["discs"] = d.disc_count;
    r["minimal_class"] = minimal[i] > 0 ? ordered_json(minimal[i]) : ordered_json(nullptr);
    r["musquash"] = musquash[i];
    reps.push_back(std::move(r));
  }
  j["minimal_class_search_limit"] = kClassSearch;
  if (c.grouped) {
    ordered_json classes = ordered_json::array();
    for (const auto& group : c.reid_classes) {
      ordered_json g;
      int best = 0;
      bool any_musquash = false;
      ordered_json members = ordered_json::array();
      for (int i : group) {
        members.push_back(file_names.at(i));
        if (minimal[i] > 0 && (best == 0 || minimal[i] < best)) best = minimal[i];
        any_musquash = any_musquash || musquash[i];
      }
      g["members"] = std::move(members);
      g["minimal_class"] = best > 0 ? ordered_json(best) : ordered_json(nullptr);
      g["contains_musquash"] = any_musquash;
      classes.push_back(std::move(g));
    }
    j["classes"] = std::move(classes);
  }
  j["reps"] = std::move(reps);
  return j.dump(2) + "\n";
}

}  // namespace thrackle
