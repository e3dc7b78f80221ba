#include "thrackle/map.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "thrackle/error.hpp"

namespace thrackle {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedPermutation: return "MalformedPermutation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidDrawing: return "InvalidDrawing";
    case ErrorCode::NotAThrackle: return "NotAThrackle";
    case ErrorCode::EdgesDontCrossHere: return "EdgesDontCrossHere";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::WalkNotInGraph: return "WalkNotInGraph";
    case ErrorCode::NoScaffold: return "NoScaffold";
    case ErrorCode::TriangleNotEmpty: return "TriangleNotEmpty";
    case ErrorCode::StaleTriangle: return "StaleTriangle";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::NotOnScaffold: return "NotOnScaffold";
    case ErrorCode::EvenN: return "EvenN";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// CombinatorialMap

int CombinatorialMap::degree(NodeId v) const {
  int k = 0;
  Dart d = first_[v];
  do {
    ++k;
    d = next_[d];
  } while (d != first_[v]);
  return k;
}

std::vector<Dart> CombinatorialMap::darts_at(NodeId v) const {
  std::vector<Dart> out;
  Dart d = first_[v];
  do {
    out.push_back(d);
    d = next_[d];
  } while (d != first_[v]);
  return out;
}

CombinatorialMap CombinatorialMap::from_rotation(std::vector<Dart> next_ccw) {
  const int n = static_cast<int>(next_ccw.size());
  if (n % 2 != 0) {
    throw Error(ErrorCode::MalformedPermutation, "odd dart count " + std::to_string(n));
  }
  CombinatorialMap m;
  m.prev_.assign(n, kNoDart);
  for (int d = 0; d < n; ++d) {
    const Dart e = next_ccw[d];
    if (e < 0 || e >= n || m.prev_[e] != kNoDart) {
      throw Error(ErrorCode::MalformedPermutation, "rotation is not a permutation at dart " + std::to_string(d));
    }
    m.prev_[e] = d;
  }
  m.next_ = std::move(next_ccw);
  m.node_.assign(n, kNoNode);
  for (int d = 0; d < n; ++d) {
    if (m.node_[d] != kNoNode) continue;
    const NodeId v = static_cast<NodeId>(m.first_.size());
    m.first_.push_back(d);
    Dart e = d;
    do {
      m.node_[e] = v;
      e = m.next_[e];
    } while (e != d);
  }
  return m;
}

CombinatorialMap CombinatorialMap::assemble(std::vector<Dart> next_ccw, const std::vector<Dart>& firsts) {
  CombinatorialMap m;
  const int n = static_cast<int>(next_ccw.size());
  m.prev_.assign(n, kNoDart);
  for (int d = 0; d < n; ++d) m.prev_[next_ccw[d]] = d;
  m.next_ = std::move(next_ccw);
  m.node_.assign(n, kNoNode);
  m.first_ = firsts;
  for (NodeId v = 0; v < static_cast<NodeId>(firsts.size()); ++v) {
    Dart e = firsts[v];
    do {
      m.node_[e] = v;
      e = m.next_[e];
    } while (e != firsts[v]);
  }
  return m;
}

CombinatorialMap CombinatorialMap::mirrored() const {
  CombinatorialMap m = *this;
  std::swap(m.next_, m.prev_);
  return m;
}

CombinatorialMap CombinatorialMap::relabeled(std::span<const Dart> perm) const {
  std::vector<Dart> next(next_.size());
  for (int d = 0; d < dart_count(); ++d) next[perm[d]] = perm[next_[d]];
  return from_rotation(std::move(next));
}

bool CombinatorialMap::connected() const {
  if (next_.empty()) return true;
  std::vector<char> seen(next_.size(), 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {next_[d], mate(d)}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++count;
        stack.push_back(e);
      }
    }
  }
  return count == dart_count();
}

CombinatorialMap build_map(const std::vector<std::vector<Dart>>& rotation_cycles, int dart_count) {
  if (dart_count <= 0 || dart_count % 2 != 0) {
    throw Error(ErrorCode::MalformedPermutation, "dart count must be positive and even");
  }
  std::vector<Dart> next(dart_count, kNoDart);
  std::vector<char> used(dart_count, 0);
  for (const auto& cycle : rotation_cycles) {
    if (cycle.empty()) throw Error(ErrorCode::MalformedPermutation, "empty rotation cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Dart d = cycle[i];
      if (d < 0 || d >= dart_count) {
        throw Error(ErrorCode::MalformedPermutation, "dart " + std::to_string(d) + " out of range");
      }
      if (used[d]) throw Error(ErrorCode::MalformedPermutation, "dart " + std::to_string(d) + " repeated");
      used[d] = 1;
      next[d] = cycle[(i + 1) % cycle.size()];
    }
  }
  for (int d = 0; d < dart_count; ++d) {
    if (!used[d]) throw Error(ErrorCode::MalformedPermutation, "dart " + std::to_string(d) + " missing");
  }
  std::vector<Dart> firsts;
  firsts.reserve(rotation_cycles.size());
  for (const auto& cycle : rotation_cycles) firsts.push_back(cycle[0]);
  CombinatorialMap m = CombinatorialMap::assemble(std::move(next), firsts);
  if (!m.connected()) throw Error(ErrorCode::Disconnected, "map is not connected");
  return m;
}

std::vector<int> face_index(const CombinatorialMap& map, int* face_count) {
  std::vector<int> face(map.dart_count(), -1);
  int f = 0;
  for (Dart d = 0; d < map.dart_count(); ++d) {
    if (face[d] >= 0) continue;
    Dart e = d;
    do {
      face[e] = f;
      e = map.face_next(e);
    } while (e != d);
    ++f;
  }
  if (face_count) *face_count = f;
  return face;
}

FaceStructure faces(const CombinatorialMap& map) {
  FaceStructure fs;
  int count = 0;
  fs.face_of = face_index(map, &count);
  fs.faces.resize(count);
  std::vector<char> seen(map.dart_count(), 0);
  for (Dart d = 0; d < map.dart_count(); ++d) {
    if (seen[d]) continue;
    auto& walk = fs.faces[fs.face_of[d]];
    Dart e = d;
    do {
      seen[e] = 1;
      walk.push_back(e);
      e = map.face_next(e);
    } while (e != d);
  }
  fs.euler_characteristic = map.node_count() - map.edge_count() + count;
  fs.genus = (2 - fs.euler_characteristic) / 2;
  return fs;
}

int genus(const CombinatorialMap& map) {
  int count = 0;
  face_index(map, &count);
  return (2 - (map.node_count() - map.edge_count() + count)) / 2;
}

// ---------------------------------------------------------------------------
// Canonical codes
//
// Traversal from a root r: label r as 0 and mate(r) as 1; then process darts
// in label order, and whenever the rotation successor of the processed dart
// is unlabeled, give it and its mate the next two labels. The code lists,
// per label, the dart color followed by the label of its rotation successor.
// Because mates get consecutive labels the code determines the map.

namespace {

class Traversal {
 public:
  Traversal(const CombinatorialMap& map, std::span<const std::uint32_t> color, bool mirror)
      : map_(map), color_(color), mirror_(mirror), label_(map.dart_count(), -1) {
    order_.reserve(map.dart_count());
  }

  void start(Dart root) {
    for (Dart d : order_) label_[d] = -1;
    order_.clear();
    assign(root);
    pos_ = 0;
    half_ = false;
  }

  bool done() const { return pos_ >= static_cast<int>(order_.size()); }

  // Emits the next code entry.
  std::uint32_t next() {
    const Dart d = order_[pos_];
    if (!half_) {
      half_ = true;
      return color_[d];
    }
    half_ = false;
    ++pos_;
    const Dart r = mirror_ ? map_.prev_ccw(d) : map_.next_ccw(d);
    if (label_[r] < 0) assign(r);
    return static_cast<std::uint32_t>(label_[r]);
  }

  const std::vector<int>& labels() const { return label_; }

 private:
  void assign(Dart d) {
    label_[d] = static_cast<int>(order_.size());
    order_.push_back(d);
    label_[mate(d)] = static_cast<int>(order_.size());
    order_.push_back(mate(d));
  }

  const CombinatorialMap& map_;
  std::span<const std::uint32_t> color_;
  bool mirror_;
  std::vector<int> label_;
  std::vector<Dart> order_;
  int pos_ = 0;
  bool half_ = false;
};

using RootKey = std::tuple<std::uint32_t, int, int>;

std::vector<Dart> root_candidates(const CombinatorialMap& map, std::span<const std::uint32_t> color) {
  const int n = map.dart_count();
  std::vector<int> face_len(n, 0);
  {
    int count = 0;
    std::vector<int> face = face_index(map, &count);
    std::vector<int> len(count, 0);
    for (Dart d = 0; d < n; ++d) ++len[face[d]];
    for (Dart d = 0; d < n; ++d) face_len[d] = len[face[d]];
  }
  std::vector<int> deg(map.node_count());
  for (NodeId v = 0; v < map.node_count(); ++v) deg[v] = map.degree(v);
  RootKey best{UINT32_MAX, INT32_MAX, INT32_MAX};
  std::vector<Dart> out;
  for (Dart d = 0; d < n; ++d) {
    RootKey k{color[d], deg[map.node_of(d)], face_len[d]};
    if (k < best) {
      best = k;
      out.clear();
    }
    if (k == best) out.push_back(d);
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> rooted_code(const CombinatorialMap& map, std::span<const std::uint32_t> dart_color,
                                       Dart root, bool mirror) {
  Traversal t(map, dart_color, mirror);
  t.start(root);
  std::vector<std::uint32_t> code;
  code.reserve(2 * map.dart_count());
  while (!t.done()) code.push_back(t.next());
  return code;
}

CanonicalForm canonical_form(const CombinatorialMap& map, std::span<const std::uint32_t> dart_color, bool mirror) {
  if (mirror) return canonical_form(map.mirrored(), dart_color, false);
  CanonicalForm best;
  const std::vector<Dart> cands = root_candidates(map, dart_color);
  Traversal t(map, dart_color, false);
  std::vector<std::uint32_t> code;
  for (Dart r : cands) {
    t.start(r);
    if (best.root == kNoDart) {
      while (!t.done()) best.code.push_back(t.next());
      best.root = r;
      continue;
    }
    std::size_t i = 0;
    int cmp = 0;
    code.clear();
    while (!t.done()) {
      const std::uint32_t x = t.next();
      code.push_back(x);
      if (cmp == 0) {
        if (x < best.code[i]) cmp = -1;
        else if (x > best.code[i]) break;
      }
      ++i;
    }
    if (cmp < 0) {
      best.code = code;
      best.root = r;
    }
  }
  t.start(best.root);
  while (!t.done()) t.next();
  best.relabel.assign(t.labels().begin(), t.labels().end());
  return best;
}

bool is_canonical_root(const CombinatorialMap& map, std::span<const std::uint32_t> dart_color, Dart root,
                       std::span<const Dart> candidates, bool include_mirror,
                       std::span<const std::uint32_t> mirror_color) {
  const std::vector<std::uint32_t> mine = rooted_code(map, dart_color, root, false);
  if (mirror_color.empty()) mirror_color = dart_color;
  for (int pass = 0; pass < (include_mirror ? 2 : 1); ++pass) {
    Traversal t(map, pass == 1 ? mirror_color : dart_color, pass == 1);
    for (Dart r : candidates) {
      if (pass == 0 && r == root) continue;
      t.start(r);
      std::size_t i = 0;
      while (!t.done()) {
        const std::uint32_t x = t.next();
        if (x < mine[i]) return false;
        if (x > mine[i]) break;
        ++i;
      }
    }
  }
  return true;
}

CanonicalCode canonical_code(const CombinatorialMap& map, const Marks& marks) {
  std::vector<std::uint32_t> color(map.dart_count(), 0);
  std::vector<int> face;
  if (!marks.face_color.empty()) face = face_index(map);
  for (Dart d = 0; d < map.dart_count(); ++d) {
    std::uint32_t c = marks.node_color.empty() ? 0 : marks.node_color[map.node_of(d)];
    if (!face.empty()) c = c * 65599u + marks.face_color[face[d]] + 1;
    color[d] = c;
  }
  // Mirroring keeps node colors and maps the face on the right of d to the
  // face on the right of mate(d); recolor accordingly.
  std::vector<std::uint32_t> mirror_color = color;
  if (!face.empty()) {
    for (Dart d = 0; d < map.dart_count(); ++d) {
      const std::uint32_t nc = marks.node_color.empty() ? 0 : marks.node_color[map.node_of(d)];
      mirror_color[d] = nc * 65599u + marks.face_color[face[mate(d)]] + 1;
    }
  }
  CanonicalCode out;
  out.code = canonical_form(map, color, false).code;
  out.mirror_code = canonical_form(map, mirror_color, true).code;
  return out;
}

// ---------------------------------------------------------------------------
// MapBuilder

MapBuilder::MapBuilder(const CombinatorialMap& map) {
  const int n = map.dart_count();
  next_.resize(n);
  prev_.resize(n);
  node_.resize(n);
  for (Dart d = 0; d < n; ++d) {
    next_[d] = map.next_ccw(d);
    prev_[d] = map.prev_ccw(d);
    node_[d] = map.node_of(d);
  }
  flag_.assign(n, 0);
  edge_tag_.assign(n / 2, 0);
  first_.resize(map.node_count());
  for (NodeId v = 0; v < map.node_count(); ++v) first_[v] = map.node_dart(v);
  node_tag_.assign(map.node_count(), 0);
}

int MapBuilder::degree(NodeId v) const {
  if (first_[v] == kNoDart) return 0;
  int k = 0;
  Dart d = first_[v];
  do {
    ++k;
    d = next_[d];
  } while (d != first_[v]);
  return k;
}

NodeId MapBuilder::add_node(std::int32_t tag) {
  first_.push_back(kNoDart);
  node_tag_.push_back(tag);
  return static_cast<NodeId>(first_.size() - 1);
}

void MapBuilder::link_before(Dart d, Corner c) {
  node_[d] = c.node;
  if (c.before == kNoDart) {
    if (first_[c.node] == kNoDart) {
      next_[d] = prev_[d] = d;
      first_[c.node] = d;
      return;
    }
    c.before = first_[c.node];
  }
  const Dart p = prev_[c.before];
  next_[p] = d;
  prev_[d] = p;
  next_[d] = c.before;
  prev_[c.before] = d;
}

void MapBuilder::unlink(Dart d) {
  const NodeId v = node_[d];
  if (next_[d] == d) {
    first_[v] = kNoDart;
  } else {
    next_[prev_[d]] = next_[d];
    prev_[next_[d]] = prev_[d];
    if (first_[v] == d) first_[v] = next_[d];
  }
  node_[d] = kNoNode;
}

Dart MapBuilder::add_edge(Corner a, Corner b, std::int32_t tag) {
  const Dart d = static_cast<Dart>(next_.size());
  for (int i = 0; i < 2; ++i) {
    next_.push_back(kNoDart);
    prev_.push_back(kNoDart);
    node_.push_back(kNoNode);
    flag_.push_back(0);
  }
  edge_tag_.push_back(tag);
  link_before(d, a);
  if (b.node == a.node && b.before == kNoDart) b.before = d;
  link_before(mate(d), b);
  return d;
}

NodeId MapBuilder::split_edge(Dart d, std::int32_t tag) {
  const Dart m = mate(d);
  const NodeId far = node_[m];
  const NodeId w = add_node(tag);
  const Dart n = add_edge(Corner{w, kNoDart}, Corner{far, m}, edge_tag_[d >> 1]);
  // n sits at w; mate(n) now sits right before m at far. Replace m by mate(n).
  flag_[n] = flag_[d];
  flag_[mate(n)] = flag_[m];
  unlink(m);
  link_before(m, Corner{w, n});
  return w;
}

void MapBuilder::remove_edge(Dart d) {
  unlink(d);
  unlink(mate(d));
}

void MapBuilder::remove_node(NodeId v) {
  first_[v] = kNoDart;
  node_tag_[v] = kDeadNode;
}

void MapBuilder::smooth(NodeId v, Dart keep) {
  const Dart other = next_[keep];
  const Dart far = mate(other);
  const NodeId y = node_[far];
  unlink(keep);
  // Put keep where far is, then drop the other pair.
  link_before(keep, Corner{y, far});
  unlink(far);
  unlink(other);
  remove_node(v);
}

void MapBuilder::reverse_rotations() { std::swap(next_, prev_); }

CombinatorialMap MapBuilder::build(std::vector<Dart>* dart_map, std::vector<NodeId>* node_map) const {
  const int cap = dart_capacity();
  std::vector<Dart> dmap(cap, kNoDart);
  Dart k = 0;
  for (Dart d = 0; d < cap; d += 2) {
    if (node_[d] == kNoNode) continue;
    dmap[d] = k;
    dmap[d + 1] = k + 1;
    k += 2;
  }
  std::vector<Dart> next(k);
  for (Dart d = 0; d < cap; ++d) {
    if (dmap[d] != kNoDart) next[dmap[d]] = dmap[next_[d]];
  }
  std::vector<NodeId> nmap(node_capacity(), kNoNode);
  std::vector<Dart> firsts;
  for (NodeId v = 0; v < node_capacity(); ++v) {
    if (first_[v] == kNoDart) continue;
    nmap[v] = static_cast<NodeId>(firsts.size());
    firsts.push_back(dmap[first_[v]]);
  }
  CombinatorialMap m = CombinatorialMap::assemble(std::move(next), firsts);
  if (dart_map) *dart_map = std::move(dmap);
  if (node_map) *node_map = std::move(nmap);
  return m;
}

}  // namespace thrackle
