// One line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <string>

#include "support.hpp"
#include "thrackle/io.hpp"
#include "thrackle/moves.hpp"
#include "thrackle/verify.hpp"

using namespace thrackle;

namespace {

support::Tally tally;

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool run(int id, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = s < limit_seconds;
  const bool pass = o.pass && in_time;
  std::printf("criterion %d: %s  %s (%.1f s, limit %.0f s%s)\n", id, pass ? "PASS" : "FAIL", o.detail.c_str(), s,
              limit_seconds, in_time ? "" : ", over time");
  std::fflush(stdout);
  return pass;
}

std::string str(std::size_t v) { return std::to_string(v); }

Outcome census_n4() {
  const Census c = enumerate_cycles(4, ClassConstraint::None, MirrorMode::Achiral);
  const auto j = nlohmann::json::parse(census_json(c, {}));
  const bool ok = c.reps.empty() && j["isotopy_reps"] == 0 && j["reidemeister_classes"] == 0;
  return {ok, "n=4: " + str(c.reps.size()) + " thrackled four-cycles"};
}

Outcome census_n7() {
  const Census c = enumerate_cycles(7, ClassConstraint::None, MirrorMode::Achiral);
  tally.note(c.reps);
  const auto m7 = achiral_code(standard_musquash(7, false));
  int with_m7 = 0;
  bool verdict = false;
  for (const auto& group : c.reid_classes) {
    bool hit = false;
    for (int i : group) {
      if (c.codes[i] == m7) {
        hit = true;
        verdict = is_musquash(c.reps[i]).verdict;
      }
    }
    with_m7 += hit;
  }
  const bool ok = c.grouped && c.reid_classes.size() == 3 && with_m7 == 1 && verdict;
  return {ok, "n=7 achiral: " + str(c.reps.size()) + " isotopy reps, " + str(c.reid_classes.size()) +
                  " Reidemeister classes, " + std::to_string(with_m7) + " containing the standard musquash (is_musquash " +
                  (verdict ? "true" : "false") + ")"};
}

Outcome census_n8() {
  const Census c = enumerate_cycles(8, ClassConstraint::None, MirrorMode::Achiral);
  tally.note(c.reps);
  int d4 = 0, pants = 0;
  for (const Drawing& d : c.reps) {
    d4 += minimal_class(d.bare(), 4) == 4;
    pants += minimal_class(d.bare(), 3) != 0;
  }
  const bool ok = c.grouped && c.reid_classes.size() == 3 && d4 == static_cast<int>(c.reps.size()) && pants == 0;
  return {ok, "n=8 achiral: " + str(c.reps.size()) + " isotopy reps, " + str(c.reid_classes.size()) +
                  " Reidemeister classes, " + std::to_string(d4) + " reps with minimal d = 4, " + std::to_string(pants) +
                  " with a T_3 scaffold"};
}

Outcome oracle_agreement() {
  EnumerateOptions opt;
  opt.group_reidemeister = false;
  bool ok = true;
  std::ostringstream detail;
  for (int n = 3; n <= 6; ++n) {
    const Census a = enumerate_cycles(n, ClassConstraint::None, MirrorMode::Chiral, opt);
    const Census b = oracle_enumerate(n, MirrorMode::Chiral);
    tally.note(b.reps);
    ok = ok && a.codes == b.codes;
    detail << (n > 3 ? ", " : "") << "n=" << n << ": " << a.reps.size() << "/" << b.reps.size();
  }
  return {ok, "enumerator/oracle isotopy reps " + detail.str()};
}

Outcome pants_six() {
  const Drawing p = pants_six_cycle();
  tally.note(p);
  const ThrackleReport r = validate_thrackle(p);
  const bool irreducible = find_removals(p).empty();
  const int d = minimal_class(p.bare(), 3);
  std::vector<int> walk = cycle_vertices(p);
  walk.push_back(walk.front());
  const Word w = word_of(p, walk, true);
  const bool word = words_equivalent(w, parse_word("b-c+a-b+c-a+"), true);
  bool no_insert = true;
  for (int e = 0; e < p.edge_count(); ++e) no_insert = no_insert && insert_edge(p, e, ClassConstraint::T3).empty();
  const bool ok = r.ok && r.crossing_total == 9 && irreducible && d == 3 && word && no_insert;
  return {ok, "pants six-cycle: " + std::to_string(r.crossing_total) + " crossings, " +
                  (irreducible ? "irreducible" : "reducible") + ", minimal d = " + std::to_string(d) + ", word " + w.str() +
                  (word ? " (matches)" : " (differs)") + ", T_3 insertions " + (no_insert ? "none" : "found")};
}

std::string suite_detail(const VerdictReport& r) {
  std::string out = r.suite + " n <= " + std::to_string(r.n_max) + ":";
  for (const Check& c : r.checks) out += " " + c.id + (c.pass ? "" : "[FAIL]") + "(" + std::to_string(c.population) + ")";
  for (const Check& c : r.checks) tally.note(c.witnesses);
  return out;
}

Outcome annular() {
  const VerdictReport r = suite_annular(9);
  return {r.all_pass, suite_detail(r)};
}

Outcome pants() {
  const VerdictReport r = suite_pants(8, 11);
  return {r.all_pass, suite_detail(r)};
}

Outcome moves() {
  const auto pool = support::census_pool();
  tally.note([&] {
    std::vector<Drawing> ds;
    for (const auto& p : pool) ds.push_back(p.drawing);
    return ds;
  }());
  const support::TrialStats s = support::run_move_trials(pool, 10000, 2024, tally);
  std::string detail = std::to_string(s.trials) + " trials over " + str(pool.size()) + " census reps:";
  for (const auto& [name, c] : s.by_property)
    detail += " " + name + " " + std::to_string(c.failures) + "/" + std::to_string(c.trials) + " failed";
  for (const auto& m : s.messages) std::fprintf(stderr, "%s\n", m.c_str());
  return {s.ok() && s.trials == 10000, detail};
}

Outcome invariants() {
  for (const auto& f : tally.failures) std::fprintf(stderr, "invariant: %s\n", f.c_str());
  return {tally.ok() && tally.checked > 0,
          std::to_string(tally.checked) + " drawings checked (genus 0, crossing formula, TMF round trip), " +
              str(tally.failures.size()) + " failures"};
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, 1, census_n4);
  all &= run(2, 60, census_n7);
  all &= run(3, 900, census_n8);
  all &= run(4, 60, oracle_agreement);
  all &= run(5, 1, pants_six);
  all &= run(6, 600, annular);
  all &= run(7, 1800, pants);
  all &= run(8, 600, moves);
  all &= run(9, 60, invariants);
  return all ? 0 : 1;
}
