#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "samples.hpp"
#include "support.hpp"
#include "thrackle/error.hpp"
#include "thrackle/io.hpp"
#include "thrackle/moves.hpp"

using namespace thrackle;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int count(const std::string& text, const std::string& needle) {
  int k = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++k;
  return k;
}

// Same drawing under a random dart numbering.
Drawing shuffled(const Drawing& d, std::mt19937_64& rng) {
  const int m = d.map.edge_count();
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Dart> perm(d.map.dart_count());
  for (int i = 0; i < m; ++i) {
    const int flip = static_cast<int>(rng() & 1);
    perm[2 * i] = 2 * order[i] + flip;
    perm[2 * i + 1] = 2 * order[i] + (1 - flip);
  }
  Drawing out;
  out.map = d.map.relabeled(perm);
  std::vector<Dart> inverse(perm.size());
  for (Dart x = 0; x < d.map.dart_count(); ++x) inverse[perm[x]] = x;
  out.kind.resize(out.map.node_count());
  out.vertex_id.assign(out.map.node_count(), -1);
  out.vertex_node.assign(d.vertex_count(), kNoNode);
  for (NodeId w = 0; w < out.map.node_count(); ++w) {
    const NodeId v = d.map.node_of(inverse[out.map.node_dart(w)]);
    out.kind[w] = d.kind[v];
    out.vertex_id[w] = d.vertex_id[v];
    if (d.vertex_id[v] >= 0) out.vertex_node[d.vertex_id[v]] = w;
  }
  out.segment.resize(out.map.edge_count());
  out.disc_side.resize(out.map.dart_count());
  for (Dart y = 0; y < out.map.dart_count(); ++y) {
    out.segment[y >> 1] = d.segment_of(inverse[y]);
    out.disc_side[y] = d.disc_side[inverse[y]];
  }
  out.disc_count = d.disc_count;
  trace_edges(out);
  return out;
}

std::vector<Drawing> sample_drawings() {
  std::vector<Drawing> ds{pants_six_cycle(), standard_musquash(9), standard_musquash(5, false),
                          samples::annular_six_vertices(), samples::non_alternating_path(), samples::seven_cycle(0),
                          samples::seven_cycle(1)};
  for (int k = 0; k < 3; ++k) ds.push_back(samples::eight_cycle(k));
  return ds;
}

}  // namespace

TEST_CASE("TMF round trip on fixtures") {
  for (const char* name : {"pants_six_cycle.tmf", "zero_crossing_square.tmf"}) {
    const std::string text = fixture(name);
    const Drawing d = parse_tmf(text);
    std::istringstream lines(text);
    std::string line, stripped;
    while (std::getline(lines, line)) {
      if (!line.starts_with("#")) stripped += line + "\n";
    }
    CHECK(to_tmf(d) == stripped);
    CHECK(identical(parse_tmf(to_tmf(d)), d));
  }
  const Drawing p = parse_tmf(fixture("pants_six_cycle.tmf"));
  CHECK(identical(p, pants_six_cycle()));
  CHECK(validate_thrackle(p).crossing_total == 9);
}

TEST_CASE("TMF round trip on built-ins, samples and censuses") {
  support::Tally tally;
  tally.note(sample_drawings());
  for (int n : {3, 5, 7, 8}) tally.note(enumerate_cycles(n, ClassConstraint::None, MirrorMode::Chiral).reps);
  for (auto c : {ClassConstraint::T1, ClassConstraint::T2, ClassConstraint::T3}) {
    for (int n : {3, 5, 6, 7}) tally.note(enumerate_cycles(n, c, MirrorMode::Achiral).reps);
  }
  for (const auto& f : tally.failures) MESSAGE(f);
  CHECK(tally.ok());
  CHECK(tally.checked > 400);
}

TEST_CASE("canonical TMF identifies exactly the isomorphic drawings") {
  std::mt19937_64 rng(7);
  const auto ds = sample_drawings();
  std::set<std::string> texts;
  for (const Drawing& d : ds) {
    const std::string c = to_tmf(d, true);
    for (int i = 0; i < 5; ++i) {
      const Drawing s = shuffled(d, rng);
      CHECK_NOTHROW(check_structure(s));
      CHECK(to_tmf(s, true) == c);
    }
    texts.insert(c);
  }
  CHECK(texts.size() == ds.size());
  // Orientation matters: a chiral drawing and its mirror differ.
  const Drawing f = samples::seven_cycle(0);
  CHECK((to_tmf(f, true) == to_tmf(mirror(f), true)) == (drawing_code(f) == mirror_drawing_code(f)));
}

TEST_CASE("TMF parse errors") {
  const std::string good = to_tmf(pants_six_cycle());
  auto fails = [](const std::string& text) {
    CHECK_THROWS_WITH_AS(parse_tmf(text), doctest::Contains("ParseError"), Error);
  };
  fails(fixture("truncated.tmf"));
  fails("");
  fails("tmf 2\nend\n");
  fails(good.substr(0, good.size() - 4));
  fails(good + "darts 4\n");
  std::string dup = good;
  dup.replace(dup.find("edge 5 1 5 : 40"), 15, "edge 5 1 5 : 41");
  fails(dup);
  std::string bad_disc = good;
  bad_disc.replace(bad_disc.find("disc 2 5 4"), 10, "disc 2 4 5");
  fails(bad_disc);
  std::string junk = good;
  junk.replace(junk.find("darts 60"), 8, "darts sixty");
  fails(junk);
  CHECK_NOTHROW(parse_tmf("# leading comment\n" + good));
}

TEST_CASE("SVG output") {
  const std::string svg = to_svg(pants_six_cycle());
  CHECK(count(svg, "class=\"vertex\"") == 6);
  CHECK(count(svg, "class=\"crossing\"") == 9);
  CHECK(count(svg, "class=\"disc\"") == 3);
  CHECK(svg == to_svg(parse_tmf(to_tmf(pants_six_cycle()))));
  const std::string m9 = to_svg(standard_musquash(9));
  CHECK(count(m9, "class=\"crossing\"") == 27);
  CHECK(count(m9, "class=\"vertex\"") == 9);
  CHECK(count(m9, "nan") == 0);
}

TEST_CASE("DOT and JSON output") {
  const Drawing p = pants_six_cycle();
  const std::string dot = to_dot(p);
  CHECK(count(dot, " -- ") == p.map.edge_count());
  CHECK(count(dot, "style=dashed") == 6);
  const auto j = nlohmann::json::parse(to_json(p));
  CHECK(j["crossings"] == 9);
  CHECK(j["thrackle"] == true);
  CHECK(j["nodes"].size() == 15);
  CHECK(j["edges"].size() == 6);
  CHECK(j["discs"].size() == 3);
}

TEST_CASE("census summary") {
  Census c4 = enumerate_cycles(4, ClassConstraint::None, MirrorMode::Achiral);
  auto j4 = nlohmann::json::parse(census_json(c4, {}));
  CHECK(j4["isotopy_reps"] == 0);
  CHECK(j4["reidemeister_classes"] == 0);

  Census c7 = enumerate_cycles(7, ClassConstraint::None, MirrorMode::Achiral);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < c7.reps.size(); ++i) names.push_back("rep-" + std::to_string(i) + ".tmf");
  auto j7 = nlohmann::ordered_json::parse(census_json(c7, names));
  CHECK(j7["reidemeister_classes"] == 3);
  int musquash_classes = 0;
  for (const auto& g : j7["classes"]) musquash_classes += g["contains_musquash"].get<bool>();
  CHECK(musquash_classes == 1);
  CHECK(census_json(c7, names) == census_json(c7, names));
}

TEST_CASE("verdict reports carry TMF witnesses") {
  CensusSet cs = class_censuses(ClassConstraint::T1, 5);
  cs[6].n = 6;
  cs[6].reps.push_back(pants_six_cycle());
  const VerdictReport r = suite_outerplanar(cs, 6);
  CHECK_FALSE(r.all_pass);
  const auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["all_pass"] == false);
  bool found = false;
  for (const auto& c : j["checks"]) {
    if (c["id"] != "odd-length") continue;
    CHECK(c["pass"] == false);
    REQUIRE(c["witnesses"].size() == 1);
    found = identical(parse_tmf(c["witnesses"][0].get<std::string>()), pants_six_cycle());
  }
  CHECK(found);
  CHECK(report_text(r).find("FAIL  odd-length") != std::string::npos);
}
