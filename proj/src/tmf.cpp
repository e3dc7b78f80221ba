#include <algorithm>
#include <sstream>

#include "thrackle/error.hpp"
#include "thrackle/io.hpp"

namespace thrackle {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Darts with disc k on their right, in face order from the smallest one.
std::vector<Dart> disc_walk(const Drawing& d, int k) {
  Dart start = kNoDart;
  for (Dart x = 0; x < d.map.dart_count(); ++x) {
    if (d.disc_side[x] && d.segment_of(x) == scaffold_label(k)) {
      start = x;
      break;
    }
  }
  std::vector<Dart> walk;
  if (start == kNoDart) return walk;
  Dart x = start;
  do {
    walk.push_back(x);
    x = d.map.face_next(x);
  } while (x != start && walk.size() <= static_cast<std::size_t>(d.map.dart_count()));
  return walk;
}

std::vector<int> walk_vertices(const Drawing& d, const std::vector<Dart>& walk) {
  std::vector<int> out;
  for (Dart x : walk) {
    const NodeId v = d.map.node_of(x);
    if (d.kind[v] == NodeKind::Vertex) out.push_back(d.vertex_id[v]);
  }
  return out;
}

void put_list(std::ostringstream& os, const std::vector<int>& xs) {
  for (int x : xs) os << ' ' << x;
}

// Integer tokens of a record, split at ':' into head and tail lists.
struct Record {
  std::string tag;
  std::vector<std::string> words;
  std::vector<int> head;
  std::vector<int> tail;
  bool has_colon = false;
};

int to_int(const std::string& s, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    parse_error(line, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) parse_error(line, "expected an integer, got '" + s + "'");
  return v;
}

Record split_record(const std::string& text, int line) {
  std::istringstream is(text);
  Record r;
  is >> r.tag;
  std::string w;
  while (is >> w) {
    if (w == ":") {
      if (r.has_colon) parse_error(line, "two ':' separators");
      r.has_colon = true;
    } else if (r.has_colon) {
      r.tail.push_back(to_int(w, line));
    } else {
      r.words.push_back(w);
    }
  }
  return r;
}

}  // namespace

Drawing canonical_relabel(const Drawing& d) {
  const CanonicalForm cf = canonical_form(d.map, dart_colors(d));
  const std::vector<Dart>& perm = cf.relabel;
  std::vector<Dart> inverse(perm.size());
  for (Dart x = 0; x < d.map.dart_count(); ++x) inverse[perm[x]] = x;

  Drawing out;
  out.map = d.map.relabeled(perm);
  const int nodes = out.map.node_count();
  out.kind.resize(nodes);
  out.vertex_id.assign(nodes, -1);
  for (NodeId w = 0; w < nodes; ++w) {
    const NodeId v = d.map.node_of(inverse[out.map.node_dart(w)]);
    out.kind[w] = d.kind[v];
    if (d.kind[v] == NodeKind::Vertex) {
      out.vertex_id[w] = static_cast<int>(out.vertex_node.size());
      out.vertex_node.push_back(w);
    }
  }

  // Graph edges and discs renumbered by their smallest new dart.
  std::vector<int> edge_rename(d.edge_count(), -1), disc_rename(d.disc_count, -1);
  int edges = 0, discs = 0;
  for (Dart y = 0; y < out.map.dart_count(); ++y) {
    const int s = d.segment_of(inverse[y]);
    if (s >= 0 && edge_rename[s] < 0) edge_rename[s] = edges++;
    if (s < 0 && disc_rename[disc_of_label(s)] < 0) disc_rename[disc_of_label(s)] = discs++;
  }
  out.segment.resize(out.map.edge_count());
  out.disc_side.resize(out.map.dart_count());
  for (Dart y = 0; y < out.map.dart_count(); ++y) {
    const int s = d.segment_of(inverse[y]);
    out.segment[y >> 1] = s >= 0 ? edge_rename[s] : scaffold_label(disc_rename[disc_of_label(s)]);
    out.disc_side[y] = d.disc_side[inverse[y]];
  }
  out.disc_count = d.disc_count;
  trace_edges(out);
  return out;
}

std::string to_tmf(const Drawing& input, bool canonical) {
  const Drawing relabeled = canonical ? canonical_relabel(input) : Drawing{};
  const Drawing& d = canonical ? relabeled : input;
  std::ostringstream os;
  os << "tmf 1\n";
  if (!d.name.empty()) os << "name " << d.name << '\n';
  os << "darts " << d.map.dart_count() << '\n';
  for (NodeId v = 0; v < d.map.node_count(); ++v) {
    os << "node " << v;
    switch (d.kind[v]) {
      case NodeKind::Vertex: os << " vertex " << d.vertex_id[v]; break;
      case NodeKind::Crossing: os << " crossing"; break;
      case NodeKind::ScaffoldPoint: os << " point"; break;
    }
    os << " :";
    put_list(os, d.map.darts_at(v));
    os << '\n';
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    const GraphEdge& g = d.edges[e];
    os << "edge " << e << ' ' << g.tail << ' ' << g.head << " :";
    put_list(os, g.darts);
    os << '\n';
  }
  for (int k = 0; k < d.disc_count; ++k) {
    const std::vector<Dart> walk = disc_walk(d, k);
    os << "disc " << k;
    put_list(os, walk_vertices(d, walk));
    os << " :";
    put_list(os, walk);
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

Drawing parse_tmf(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string raw;
  int line = 0;
  bool header = false, ended = false;
  int dart_count = -1;
  std::string name;
  std::vector<std::vector<Dart>> cycles;
  std::vector<NodeKind> kinds;
  std::vector<int> vids;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<int>> disc_vertices;
  std::vector<std::vector<Dart>> disc_darts;

  while (std::getline(is, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    if (ended) parse_error(line, "content after 'end'");
    if (!header) {
      if (raw.substr(first) != "tmf 1") parse_error(line, "expected header 'tmf 1'");
      header = true;
      continue;
    }
    if (raw.compare(first, 5, "name ") == 0) {
      name = raw.substr(first + 5);
      continue;
    }
    const Record r = split_record(raw, line);
    if (r.tag == "end") {
      if (!r.words.empty() || r.has_colon) parse_error(line, "junk after 'end'");
      ended = true;
    } else if (r.tag == "darts") {
      if (r.words.size() != 1 || r.has_colon || dart_count >= 0) parse_error(line, "bad 'darts' record");
      dart_count = to_int(r.words[0], line);
      if (dart_count < 2 || dart_count % 2 != 0) parse_error(line, "dart count must be even and positive");
    } else if (r.tag == "node") {
      if (dart_count < 0) parse_error(line, "'node' before 'darts'");
      if (r.words.size() < 2 || !r.has_colon) parse_error(line, "bad 'node' record");
      if (to_int(r.words[0], line) != static_cast<int>(cycles.size())) parse_error(line, "node ids must be 0, 1, 2, ...");
      if (r.words[1] == "vertex" && r.words.size() == 3) {
        kinds.push_back(NodeKind::Vertex);
        vids.push_back(to_int(r.words[2], line));
      } else if (r.words[1] == "crossing" && r.words.size() == 2) {
        kinds.push_back(NodeKind::Crossing);
        vids.push_back(-1);
      } else if (r.words[1] == "point" && r.words.size() == 2) {
        kinds.push_back(NodeKind::ScaffoldPoint);
        vids.push_back(-1);
      } else {
        parse_error(line, "unknown node kind");
      }
      if (r.tail.empty()) parse_error(line, "node without darts");
      cycles.push_back(r.tail);
    } else if (r.tag == "edge") {
      if (r.words.size() != 3 || !r.has_colon || r.tail.empty()) parse_error(line, "bad 'edge' record");
      if (to_int(r.words[0], line) != static_cast<int>(edges.size())) parse_error(line, "edge ids must be 0, 1, 2, ...");
      edges.push_back({to_int(r.words[1], line), to_int(r.words[2], line), r.tail});
    } else if (r.tag == "disc") {
      if (r.words.empty() || !r.has_colon || r.tail.empty()) parse_error(line, "bad 'disc' record");
      if (to_int(r.words[0], line) != static_cast<int>(disc_darts.size())) parse_error(line, "disc ids must be 0, 1, 2, ...");
      std::vector<int> vs;
      for (std::size_t i = 1; i < r.words.size(); ++i) vs.push_back(to_int(r.words[i], line));
      disc_vertices.push_back(std::move(vs));
      disc_darts.push_back(r.tail);
    } else {
      parse_error(line, "unknown record '" + r.tag + "'");
    }
  }
  if (!header) parse_error(line, "empty file");
  if (!ended) parse_error(line, "missing 'end' (truncated file?)");
  if (dart_count < 0) parse_error(line, "missing 'darts'");

  Drawing d;
  d.name = name;
  try {
    d.map = build_map(cycles, dart_count);
  } catch (const Error& e) {
    parse_error(line, std::string("rotation: ") + e.what());
  }
  d.kind = kinds;
  d.vertex_id = vids;
  int vertex_total = 0;
  for (int v : vids) vertex_total += v >= 0;
  d.vertex_node.assign(vertex_total, kNoNode);
  for (NodeId v = 0; v < static_cast<NodeId>(vids.size()); ++v) {
    if (vids[v] < 0) continue;
    if (vids[v] >= vertex_total || d.vertex_node[vids[v]] != kNoNode) parse_error(line, "vertex ids must be 0..n-1, once each");
    d.vertex_node[vids[v]] = v;
  }

  constexpr int kUnset = 1 << 30;
  d.segment.assign(d.map.edge_count(), kUnset);
  d.disc_side.assign(dart_count, 0);
  auto claim = [&](Dart x, int label) {
    if (x < 0 || x >= dart_count) parse_error(line, "dart " + std::to_string(x) + " out of range");
    if (d.segment[x >> 1] != kUnset) parse_error(line, "dart " + std::to_string(x) + " listed twice");
    d.segment[x >> 1] = label;
  };
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    for (Dart x : edges[e].darts) claim(x, e);
  }
  d.disc_count = static_cast<int>(disc_darts.size());
  for (int k = 0; k < d.disc_count; ++k) {
    for (Dart x : disc_darts[k]) {
      claim(x, scaffold_label(k));
      d.disc_side[x] = 1;
    }
  }
  for (int s : d.segment) {
    if (s == kUnset) parse_error(line, "map edge without an edge or disc label");
  }
  d.edges = std::move(edges);

  try {
    check_structure(d);
  } catch (const Error& e) {
    parse_error(line, e.what());
  }
  std::vector<std::pair<int, int>> hint;
  for (const auto& g : d.edges) hint.emplace_back(g.tail, g.head);
  Drawing traced = d;
  try {
    trace_edges(traced, hint);
  } catch (const Error& e) {
    parse_error(line, e.what());
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    const GraphEdge& a = d.edges[e];
    const GraphEdge& b = traced.edges[e];
    if (a.tail != b.tail || a.head != b.head || a.darts != b.darts)
      parse_error(line, "edge " + std::to_string(e) + " does not match the map");
  }
  for (int k = 0; k < d.disc_count; ++k) {
    const std::vector<Dart> walk = disc_walk(d, k);
    if (walk.size() != disc_darts[k].size() || !std::is_permutation(walk.begin(), walk.end(), disc_darts[k].begin()))
      parse_error(line, "disc " + std::to_string(k) + " darts do not bound one face");
    if (walk != disc_darts[k]) parse_error(line, "disc " + std::to_string(k) + " darts are not in face order");
    if (walk_vertices(d, walk) != disc_vertices[k])
      parse_error(line, "disc " + std::to_string(k) + " vertex cycle does not match its darts");
  }
  return d;
}

bool identical(const Drawing& a, const Drawing& b) {
  if (!(a.map == b.map) || a.map.node_count() != b.map.node_count()) return false;
  for (NodeId v = 0; v < a.map.node_count(); ++v) {
    if (a.map.node_dart(v) != b.map.node_dart(v)) return false;
  }
  if (a.kind != b.kind || a.vertex_id != b.vertex_id || a.vertex_node != b.vertex_node || a.segment != b.segment ||
      a.disc_side != b.disc_side || a.disc_count != b.disc_count || a.name != b.name || a.edges.size() != b.edges.size())
    return false;
  for (std::size_t e = 0; e < a.edges.size(); ++e) {
    if (a.edges[e].tail != b.edges[e].tail || a.edges[e].head != b.edges[e].head || a.edges[e].darts != b.edges[e].darts)
      return false;
  }
  return true;
}

}  // namespace thrackle
