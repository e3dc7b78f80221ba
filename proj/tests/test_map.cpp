#include <doctest.h>

#include <algorithm>
#include <random>

#include "thrackle/error.hpp"
#include "thrackle/map.hpp"

using namespace thrackle;

namespace {

// Random pairing-preserving relabeling.
std::vector<Dart> random_perm(int darts, std::mt19937& rng) {
  std::vector<int> edges(darts / 2);
  for (int i = 0; i < darts / 2; ++i) edges[i] = i;
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<Dart> perm(darts);
  for (int i = 0; i < darts / 2; ++i) {
    const bool flip = rng() & 1;
    perm[2 * i] = 2 * edges[i] + (flip ? 1 : 0);
    perm[2 * i + 1] = 2 * edges[i] + (flip ? 0 : 1);
  }
  return perm;
}

// Brute force: does some pairing-preserving bijection carry a onto b?
bool isomorphic_brute(const CombinatorialMap& a, const CombinatorialMap& b) {
  if (a.dart_count() != b.dart_count()) return false;
  const int n = a.dart_count();
  for (Dart r = 0; r < n; ++r) {
    std::vector<Dart> f(n, kNoDart);
    std::vector<Dart> stack{0};
    f[0] = r;
    bool ok = true;
    while (ok && !stack.empty()) {
      const Dart d = stack.back();
      stack.pop_back();
      const std::pair<Dart, Dart> steps[] = {{mate(d), mate(f[d])}, {a.next_ccw(d), b.next_ccw(f[d])}};
      for (auto [x, y] : steps) {
        if (f[x] == kNoDart) {
          f[x] = y;
          stack.push_back(x);
        } else if (f[x] != y) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<char> hit(n, 0);
      for (Dart d = 0; d < n; ++d) {
        if (hit[f[d]]) ok = false;
        hit[f[d]] = 1;
      }
    }
    if (ok) return true;
  }
  return false;
}

CombinatorialMap random_connected_map(int edges, std::mt19937& rng) {
  std::vector<Dart> next(2 * edges);
  while (true) {
    std::vector<Dart> p(2 * edges);
    for (int i = 0; i < 2 * edges; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    // Random permutation with random cycle structure.
    for (int i = 0; i < 2 * edges; ++i) next[p[i]] = p[(i + 1) % (2 * edges)];
    int cut = static_cast<int>(rng() % (2 * edges));
    if (cut > 0) {
      next[p[cut - 1]] = p[0];
      next[p[2 * edges - 1]] = p[cut];
    }
    auto m = CombinatorialMap::from_rotation(next);
    if (m.connected()) return m;
  }
}

}  // namespace

TEST_CASE("bigon map") {
  auto m = build_map({{0, 2}, {1, 3}}, 4);
  CHECK(m.node_count() == 2);
  CHECK(m.edge_count() == 2);
  auto fs = faces(m);
  CHECK(fs.faces.size() == 2);
  CHECK(fs.genus == 0);
  CHECK(fs.euler_characteristic == 2);
}

TEST_CASE("interleaved double loop is a torus") {
  auto m = build_map({{0, 2, 1, 3}}, 4);
  CHECK(genus(m) == 1);
  CHECK(faces(m).faces.size() == 1);
}

TEST_CASE("build_map rejects bad input") {
  CHECK_THROWS_AS(build_map({{0, 5}, {1, 5, 2, 3, 4}}, 6), Error);
  try {
    build_map({{0, 5}, {1, 5, 2, 3, 4}}, 6);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedPermutation);
  }
  try {
    build_map({{0, 1}, {2, 3}}, 4);
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
}

TEST_CASE("node ids follow caller cycle order") {
  auto m = build_map({{1, 3}, {0, 2}}, 4);
  CHECK(m.node_of(1) == 0);
  CHECK(m.node_of(0) == 1);
}

TEST_CASE("canonical code is relabeling invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_connected_map(2 + trial % 6, rng);
    std::vector<std::uint32_t> color(m.dart_count(), 0);
    auto base = canonical_form(m, color).code;
    for (int k = 0; k < 100; ++k) {
      auto perm = random_perm(m.dart_count(), rng);
      auto r = m.relabeled(perm);
      CHECK(canonical_form(r, color).code == base);
    }
  }
}

TEST_CASE("canonical codes agree with brute-force isomorphism up to 12 darts") {
  std::mt19937 rng(11);
  std::vector<CombinatorialMap> maps;
  for (int i = 0; i < 60; ++i) maps.push_back(random_connected_map(1 + i % 6, rng));
  std::vector<std::uint32_t> color(12, 0);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i; j < maps.size(); ++j) {
      const auto& a = maps[i];
      const auto& b = maps[j];
      if (a.dart_count() != b.dart_count()) continue;
      std::span<const std::uint32_t> ca(color.data(), a.dart_count());
      const bool same = canonical_form(a, ca).code == canonical_form(b, ca).code;
      CHECK(same == isomorphic_brute(a, b));
    }
  }
}

TEST_CASE("relabel from canonical form reproduces the code") {
  std::mt19937 rng(3);
  auto m = random_connected_map(5, rng);
  std::vector<std::uint32_t> color(m.dart_count(), 0);
  auto cf = canonical_form(m, color);
  auto r = m.relabeled(cf.relabel);
  CHECK(rooted_code(r, color, 0) == cf.code);
}

TEST_CASE("builder split and smooth round trip") {
  auto m = build_map({{0, 2}, {1, 3}}, 4);
  MapBuilder b(m);
  NodeId w = b.split_edge(0);
  CHECK(b.degree(w) == 2);
  CHECK(b.node_of(1) == w);
  Dart n = b.next_ccw(1);
  CHECK(b.node_of(n) == w);
  CHECK(b.node_of(mate(n)) == m.node_of(1));
  auto split = b.build();
  CHECK(split.node_count() == 3);
  CHECK(genus(split) == 0);
  b.smooth(w, 0 ^ 1);
  auto back = b.build();
  CHECK(isomorphic_brute(back, m));
}

TEST_CASE("builder add_edge inside a face keeps genus 0") {
  auto m = build_map({{0, 2}, {1, 3}}, 4);
  MapBuilder b(m);
  // Chord between the two nodes inside the face right of dart 0.
  b.add_edge(Corner{m.node_of(0), 0}, Corner{m.node_of(1), m.face_next(0)});
  auto r = b.build();
  CHECK(genus(r) == 0);
  CHECK(faces(r).faces.size() == 3);
}
