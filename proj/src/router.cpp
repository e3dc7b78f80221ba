#include "router.hpp"

#include <bit>

#include "thrackle/error.hpp"

namespace thrackle::detail {

void Budget::tick() {
  const std::int64_t u = used.fetch_add(1, std::memory_order_relaxed) + 1;
  if (limit > 0 && u > limit) throw Error(ErrorCode::ResourceLimit, "search node limit exceeded");
}

std::vector<int> builder_faces(const MapBuilder& b, int* count) {
  const int n = b.dart_capacity();
  std::vector<int> face(n, -1);
  int f = 0;
  for (Dart s = 0; s < n; ++s) {
    if (face[s] >= 0) continue;
    for (Dart x = s; face[x] < 0; x = b.face_next(x)) face[x] = f;
    ++f;
  }
  if (count) *count = f;
  return face;
}

std::vector<std::uint32_t> builder_colors(const MapBuilder& b, bool mirrored) {
  std::vector<std::uint32_t> c(b.dart_capacity());
  for (Dart x = 0; x < b.dart_capacity(); ++x) {
    const std::uint32_t kind = b.node_tag(b.node_of(x)) >= 0 ? 0 : 1;
    const std::uint32_t scaffold = b.edge_tag(x) < 0 ? 2 : 0;
    c[x] = kind * 4 + scaffold + b.dart_flag(mirrored ? mate(x) : x);
  }
  return c;
}

std::vector<Corner> free_corners(const MapBuilder& b, NodeId v) {
  std::vector<Corner> out;
  const Dart s = b.node_dart(v);
  if (s == kNoDart) return {Corner{v, kNoDart}};
  Dart x = s;
  do {
    if (!b.dart_flag(x)) out.push_back(Corner{v, x});
    x = b.next_ccw(x);
  } while (x != s);
  return out;
}

NodeId split_segment(Sketch& s, Dart x, std::int32_t node_tag) {
  const Dart m = mate(x);
  const NodeId w = s.b.split_edge(x, node_tag);
  // m moved to w; at its old node the far dart of the new pair replaced it.
  const Dart replacement = mate(s.b.next_ccw(m));
  for (Corner& c : s.anchors) {
    if (c.before == m) c.before = replacement;
  }
  return w;
}

void cross_segment(Sketch& s, Dart x, std::int32_t tag) {
  const NodeId w = split_segment(s, x, kCrossingTag);
  const Dart n = s.b.next_ccw(mate(x));
  s.b.add_edge(s.anchors.back(), Corner{w, n}, tag);
  s.anchors.back() = Corner{w, mate(x)};
}

Dart finish_at(Sketch& s, Corner c, std::int32_t tag) {
  const Corner at = s.anchors.back();
  s.anchors.pop_back();
  return s.b.add_edge(at, c, tag);
}

bool curve_reachable(const MapBuilder& b, const std::vector<int>& face, int faces,
                     const std::vector<int>& start_faces, std::uint64_t need,
                     const std::vector<char>& stop_ok) {
  std::vector<std::vector<Dart>> walk(faces);
  for (Dart x = 0; x < b.dart_capacity(); ++x) {
    const int t = b.edge_tag(x);
    if (t >= 0 && t < 64 && (need >> t & 1)) walk[face[x]].push_back(x);
  }
  const int k = std::popcount(need);
  if (k > 10) {
    // Relaxed: ignore the once-only rule.
    std::vector<char> seen(faces, 0);
    std::vector<int> queue;
    for (int f : start_faces) {
      if (!seen[f]) queue.push_back(f), seen[f] = 1;
    }
    std::uint64_t touched = 0;
    bool stop = false;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int f = queue[h];
      stop = stop || stop_ok[f];
      for (Dart x : walk[f]) {
        touched |= std::uint64_t{1} << b.edge_tag(x);
        const int g = face[mate(x)];
        if (!seen[g]) queue.push_back(g), seen[g] = 1;
      }
    }
    return stop && touched == need;
  }
  std::vector<int> slot(64, -1);
  {
    int i = 0;
    for (int j = 0; j < 64; ++j) {
      if (need >> j & 1) slot[j] = i++;
    }
  }
  const int masks = 1 << k;
  const int full = masks - 1;
  std::vector<char> seen(static_cast<std::size_t>(faces) * masks, 0);
  std::vector<std::pair<int, int>> queue;
  for (int f : start_faces) {
    if (!seen[f * masks]) {
      seen[f * masks] = 1;
      queue.emplace_back(f, 0);
    }
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const auto [f, m] = queue[h];
    if (m == full && stop_ok[f]) return true;
    for (Dart x : walk[f]) {
      const int bit = 1 << slot[b.edge_tag(x)];
      if (m & bit) continue;
      const int g = face[mate(x)];
      const int nm = m | bit;
      if (!seen[g * masks + nm]) {
        seen[g * masks + nm] = 1;
        queue.emplace_back(g, nm);
      }
    }
  }
  return false;
}

namespace {

std::vector<Dart> face_walk(const MapBuilder& b, Dart start) {
  std::vector<Dart> out;
  if (start == kNoDart) return out;
  Dart x = start;
  do {
    out.push_back(x);
    x = b.face_next(x);
  } while (x != start);
  return out;
}

bool may_stop_new_vertex(const Sketch& s) { return s.d_max == 0 || s.circles < s.d_max; }

bool feasible(const Sketch& s, Corner pen, const EdgeJob& job, std::uint64_t remaining) {
  if (pen.before == kNoDart) return remaining == 0;
  int faces = 0;
  const std::vector<int> face = builder_faces(s.b, &faces);
  std::vector<char> ok(faces, 0);
  if (job.target != kNoNode) {
    for (Dart x = 0; x < s.b.dart_capacity(); ++x) {
      if (s.b.node_of(x) == job.target && !s.b.dart_flag(x)) ok[face[x]] = 1;
    }
  } else if (may_stop_new_vertex(s)) {
    ok.assign(faces, 1);
  } else {
    for (Dart x = 0; x < s.b.dart_capacity(); ++x) {
      if (s.b.edge_tag(x) < 0 && !s.b.dart_flag(x)) ok[face[x]] = 1;
    }
  }
  return curve_reachable(s.b, face, faces, {face[pen.before]}, remaining, ok);
}

void step(Sketch& s, std::uint64_t crossed, const EdgeJob& job, const RouteDone& done) {
  if (job.budget) job.budget->tick();
  const Corner pen = s.anchors.back();
  const std::uint64_t remaining = job.need & ~crossed;
  if (!feasible(s, pen, job, remaining)) return;
  const std::vector<Dart> walk = face_walk(s.b, pen.before);
  if (remaining != 0) {
    for (Dart x : walk) {
      const int t = s.b.edge_tag(x);
      if (t < 0 || t >= 64 || !(remaining >> t & 1)) continue;
      Sketch c = s;
      cross_segment(c, x, job.tag);
      step(c, crossed | std::uint64_t{1} << t, job, done);
    }
    return;
  }
  if (job.target != kNoNode) {
    for (Dart x : walk) {
      if (s.b.node_of(x) != job.target) continue;
      Sketch c = s;
      const Corner at = c.anchors.back();
      c.anchors.pop_back();
      c.b.add_edge(at, Corner{job.target, x}, job.tag);
      done(c, job.target);
    }
    return;
  }
  if (s.d_max == 0) {
    Sketch c = s;
    const Corner at = c.anchors.back();
    c.anchors.pop_back();
    const NodeId v = c.b.add_node(job.vertex_tag);
    c.b.add_edge(at, Corner{v, kNoDart}, job.tag);
    done(c, v);
    return;
  }
  for (Dart x : walk) {
    if (s.b.edge_tag(x) >= 0) continue;
    Sketch c = s;
    const NodeId v = split_segment(c, x, job.vertex_tag);
    const Dart n = c.b.next_ccw(mate(x));
    const Corner at = c.anchors.back();
    c.anchors.pop_back();
    c.b.add_edge(at, Corner{v, n}, job.tag);
    done(c, v);
  }
  if (s.circles < s.d_max) {
    Sketch c = s;
    const Corner at = c.anchors.back();
    c.anchors.pop_back();
    const NodeId v = c.b.add_node(job.vertex_tag);
    const Dart t = mate(c.b.add_edge(at, Corner{v, kNoDart}, job.tag));
    const Dart l = c.b.add_edge(Corner{v, t}, Corner{v, t}, scaffold_label(c.circles));
    c.b.set_dart_flag(c.b.face_next(l) == l ? l : mate(l), 1);
    ++c.circles;
    done(c, v);
  }
}

}  // namespace

void route_edge(const Sketch& s, Corner start, const EdgeJob& job, const RouteDone& done) {
  Sketch c = s;
  c.anchors.push_back(start);
  step(c, 0, job, done);
}

}  // namespace thrackle::detail
