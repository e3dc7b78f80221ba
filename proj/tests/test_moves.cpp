#include <doctest.h>

#include <set>

#include "samples.hpp"
#include "thrackle/enumerate.hpp"
#include "thrackle/error.hpp"
#include "thrackle/moves.hpp"
#include "router.hpp"

using namespace thrackle;

namespace {

// Star with k leaves on one circle through every vertex.
Drawing scaffolded_star(int k) {
  DrawingSpec s;
  s.vertex_count = k + 1;
  s.rotation.resize(k + 1);
  for (int i = 0; i < k; ++i) {
    s.edges.emplace_back(0, i + 1);
    s.routes.push_back({});
    s.rotation[0].push_back({i, true});
  }
  Drawing bare = assemble_drawing(s);
  std::vector<CornerSpec> corners{{0, 0, {0, true}}};
  for (int i = 0; i < k; ++i) corners.push_back({i + 1, 0, {i, false}});
  return attach_scaffold(bare, corners);
}

std::set<std::vector<std::uint32_t>> class_of(const Drawing& d) {
  auto c = reidemeister_class(d, 100000, MirrorMode::Achiral);
  return {c.begin(), c.end()};
}

}  // namespace

TEST_CASE("removal on the 5-musquash") {
  Drawing d = standard_musquash(5);
  auto rs = find_removals(d);
  REQUIRE_FALSE(rs.empty());
  for (const auto& r : rs) {
    Drawing t = remove_edge(d, r);
    CHECK_NOTHROW(check_structure(t));
    CHECK(validate_thrackle(t).ok);
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
    CHECK(t.disc_count == 1);
    CHECK(achiral_code(t) == achiral_code(standard_musquash(3)));
  }
}

TEST_CASE("irreducible drawings have no removal") {
  CHECK(find_removals(pants_six_cycle()).empty());
  CHECK(find_removals(standard_musquash(3)).empty());
  CHECK(find_removals(standard_musquash(3, false)).empty());
}

TEST_CASE("removal across a vertex is refused") {
  int refused = 0;
  Census c = enumerate_cycles(7, ClassConstraint::None, MirrorMode::Chiral, {.group_reidemeister = false});
  for (const Drawing& d : c.reps) {
    auto verts = cycle_vertices(d);
    for (int i = 0; i < 7; ++i) {
      std::array<int, 4> p{verts[i], verts[(i + 1) % 7], verts[(i + 2) % 7], verts[(i + 3) % 7]};
      auto r = three_path(d, p);
      REQUIRE(r.has_value());
      if (r->empty) {
        CHECK(validate_thrackle(remove_edge(d, *r)).ok);
      } else {
        ++refused;
        CHECK_THROWS_WITH_AS(remove_edge(d, *r), doctest::Contains("TriangleNotEmpty"), Error);
      }
    }
  }
  CHECK(refused > 0);
}

TEST_CASE("insertion on the 5-musquash reaches the sample seven-cycles") {
  Drawing m5 = standard_musquash(5, false);
  std::set<std::vector<std::uint32_t>> found;
  for (int e = 0; e < 5; ++e) {
    for (const Drawing& d : insert_edge(m5, e, ClassConstraint::None)) {
      CHECK(validate_thrackle(d).ok);
      CHECK(d.vertex_count() == 7);
      found.insert(achiral_code(d));
      bool back = false;
      for (const auto& r : find_removals(d)) back = back || drawing_code(remove_edge(d, r)) == drawing_code(m5);
      CHECK(back);
    }
  }
  for (int k : {0, 1}) {
    auto cls = class_of(samples::seven_cycle(k));
    bool hit = false;
    for (const auto& c : cls) hit = hit || found.count(c);
    CHECK(hit);
  }
}

TEST_CASE("no pants insertion on the pants six-cycle") {
  Drawing p = pants_six_cycle();
  for (int e = 0; e < 6; ++e) CHECK(insert_edge(p, e, ClassConstraint::T3).empty());
}

TEST_CASE("Reidemeister moves") {
  CHECK(find_r3(standard_musquash(3)).empty());
  Drawing d = standard_musquash(7);
  auto ts = find_r3(d);
  REQUIRE_FALSE(ts.empty());
  for (const auto& t : ts) {
    Drawing e = apply_r3(d, t);
    CHECK_NOTHROW(check_structure(e));
    CHECK(validate_thrackle(e).ok);
    CHECK(e.crossing_count() == d.crossing_count());
    CHECK(e.disc_count == d.disc_count);
    bool back = false;
    for (const auto& u : find_r3(e)) back = back || drawing_code(apply_r3(e, u)) == drawing_code(d);
    CHECK(back);
  }
  CHECK_THROWS_AS(apply_r3(standard_musquash(5), ts[0]), Error);
}

TEST_CASE("sample seven-cycles are Reidemeister inequivalent") {
  auto a = class_of(samples::seven_cycle(0));
  auto b = class_of(samples::seven_cycle(1));
  CHECK(a.count(achiral_code(samples::seven_cycle(0))));
  for (const auto& c : a) CHECK_FALSE(b.count(c));
  auto m = class_of(standard_musquash(7, false));
  for (const auto& c : m) CHECK_FALSE(a.count(c));
  for (const auto& c : m) CHECK_FALSE(b.count(c));
}

TEST_CASE("Reidemeister budget") {
  CHECK_THROWS_WITH_AS(reidemeister_class(standard_musquash(9, false), 2), doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("vertex splitting") {
  for (auto [k, mode] : {std::pair{3, SplitMode::Degree3DoubleMiddle}, std::pair{4, SplitMode::Degree4}}) {
    Drawing star = scaffolded_star(k);
    REQUIRE(validate_thrackle(star).ok);
    Drawing s = vertex_split(star, 0, mode);
    CHECK_NOTHROW(check_structure(s));
    CHECK(validate_thrackle(s).ok);
    CHECK(s.vertex_count() == k + 2);
    CHECK(s.edge_count() == k + 1);
    CHECK(minimal_class(s.bare(), 3) == 1);
    Drawing m = vertex_merge(s, 0);
    CHECK(drawing_code(m) == drawing_code(star));
  }
  CHECK_THROWS_WITH_AS(vertex_split(standard_musquash(5), 0, SplitMode::Degree4), doctest::Contains("WrongDegree"), Error);
  CHECK_THROWS_WITH_AS(vertex_split(scaffolded_star(3).bare(), 0, SplitMode::Degree3DoubleMiddle),
                       doctest::Contains("NotOnScaffold"), Error);
}

TEST_CASE("mirror") {
  Drawing d = pants_six_cycle();
  Drawing m = mirror(d);
  CHECK(drawing_code(mirror(m)) == drawing_code(d));
  CHECK(validate_thrackle(m).ok);
  CHECK(minimal_class(m.bare(), 3) == 3);
  for (NodeId x = 0; x < d.map.node_count(); ++x) {
    if (d.kind[x] != NodeKind::Crossing) continue;
    const int e = d.segment_of(d.map.node_dart(x));
    const int f = d.segment_of(d.map.next_ccw(d.map.node_dart(x)));
    CHECK(crossing_sign(m, x, {e, false}, {f, false}) == -crossing_sign(d, x, {e, false}, {f, false}));
  }
}

TEST_CASE("vertex splitting next to crossings") {
  // 5-musquash plus every pendant edge at vertex 0 ending on the circle.
  Drawing m5 = standard_musquash(5);
  detail::Sketch s;
  s.b = to_builder(m5);
  s.circles = 1;
  s.d_max = 1;
  detail::EdgeJob job;
  job.tag = 5;
  job.vertex_tag = 5;
  for (int e = 0; e < 5; ++e) {
    if (m5.edges[e].tail != 0 && m5.edges[e].head != 0) job.need |= std::uint64_t{1} << e;
  }
  std::vector<Drawing> base;
  for (Corner c : detail::free_corners(s.b, m5.vertex_node[0])) {
    detail::route_edge(s, c, job, [&](detail::Sketch& t, NodeId) { base.push_back(from_builder(t.b)); });
  }
  REQUIRE_FALSE(base.empty());
  for (const Drawing& d : base) {
    REQUIRE(validate_thrackle(d).ok);
    Drawing sp = vertex_split(d, 0, SplitMode::Degree3DoubleMiddle);
    CHECK_NOTHROW(check_structure(sp));
    CHECK(validate_thrackle(sp).ok);
    CHECK(minimal_class(sp.bare(), 3) == minimal_class(d.bare(), 3));
    CHECK(drawing_code(vertex_merge(sp, 0)) == drawing_code(d));
  }
}
