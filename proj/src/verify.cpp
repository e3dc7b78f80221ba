#include "thrackle/verify.hpp"

#include <deque>
#include <set>

#include "thrackle/error.hpp"
#include "thrackle/moves.hpp"

namespace thrackle {

namespace {

constexpr std::size_t kMaxWitnesses = 3;
constexpr std::int64_t kClosureBudget = 200000;

using Code = std::vector<std::uint32_t>;

class Suite {
 public:
  Suite(std::string name, int n_max) {
    report_.suite = std::move(name);
    report_.n_max = n_max;
  }

  Check& add(std::string id, std::string statement) {
    checks_.push_back({std::move(id), std::move(statement), 0, true, {}});
    return checks_.back();
  }

  VerdictReport finish() {
    for (Check& c : checks_) {
      report_.all_pass = report_.all_pass && c.pass;
      report_.checks.push_back(std::move(c));
    }
    return std::move(report_);
  }

 private:
  VerdictReport report_;
  std::deque<Check> checks_;  // stable references while checks are added
};

void record(Check& c, bool ok, const Drawing& d) {
  ++c.population;
  if (ok) return;
  c.pass = false;
  if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(d);
}

Word cycle_word(const Drawing& d, bool signed_word) {
  std::vector<int> walk = cycle_vertices(d);
  walk.push_back(walk.front());
  return word_of(d, walk, signed_word);
}

bool repetition_free(const Word& w) {
  const std::size_t n = w.letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (w.letters[i] == w.letters[(i + 1) % n]) return false;
  }
  return true;
}

bool has_cube(const Word& w) { return !word_form_check(w, WordPattern::NoTripleRepeat); }

bool all_one_letter(const Word& w) {
  for (int l : w.letters) {
    if (l != w.letters.front()) return false;
  }
  return true;
}

// Removes edges greedily; true when a three-cycle is reached.
bool reduces_to_triangle(Drawing d) {
  while (d.vertex_count() > 3) {
    const auto rs = find_removals(d);
    if (rs.empty()) return false;
    d = remove_edge(d, rs.front());
  }
  return true;
}

std::set<Code> closure(const Drawing& d) {
  const auto c = reidemeister_class(d, kClosureBudget, MirrorMode::Achiral);
  return {c.begin(), c.end()};
}

// Checks shared by the annular and pants suites.
void word_lemmas(Suite& s, const CensusSet& cs, int n_max) {
  Check& squares = s.add("no-two-squares", "no drawing has edges with words x_i^2 and x_j^2 for i != j");
  Check& cube = s.add("cube-reducible", "a cycle whose word contains x_i^3 admits an edge removal");
  for (const auto& [n, census] : cs) {
    if (n > n_max) continue;
    for (const Drawing& d : census.reps) {
      const Word w = cycle_word(d, false);
      record(squares, word_form_check(std::vector<Word>{w}, WordPattern::NoTwoDiscSquares), d);
      if (n > 3 && has_cube(w)) record(cube, !find_removals(d).empty(), d);
    }
  }
}

}  // namespace

CensusSet class_censuses(ClassConstraint constraint, int n_max) {
  const int cap = constraint == ClassConstraint::T3 ? 8 : constraint == ClassConstraint::T2 ? 9 : 11;
  if (n_max > cap) throw Error(ErrorCode::ResourceLimit, "n_max above " + std::to_string(cap) + " for this class");
  CensusSet out;
  for (int n = 3; n <= n_max; ++n) out.emplace(n, enumerate_cycles(n, constraint, MirrorMode::Achiral));
  return out;
}

VerdictReport suite_outerplanar(const CensusSet& cs, int n_max) {
  Suite s("outerplanar", n_max);
  Check& odd = s.add("odd-length", "every outerplanar thrackled cycle has odd length");
  Check& cls = s.add("musquash-class", "every outerplanar class contains the standard musquash");
  for (const auto& [n, census] : cs) {
    if (n > n_max) continue;
    for (const Drawing& d : census.reps) record(odd, d.vertex_count() % 2 == 1, d);
    if (n % 2 == 0) continue;
    const Code m = achiral_code(standard_musquash(n));
    for (const auto& group : census.reid_classes) {
      bool hit = false;
      for (int i : group) hit = hit || census.codes[i] == m;
      record(cls, hit, census.reps[group.front()]);
    }
    if (!census.grouped) {
      for (const Drawing& d : census.reps) record(cls, closure(d).count(m) > 0, d);
    }
  }
  return s.finish();
}

VerdictReport suite_annular(const CensusSet& cs, int n_max) {
  Suite s("annular", n_max);
  Check& odd = s.add("odd-length", "every annular thrackled cycle has odd length");
  Check& outer = s.add("outerplanar", "every annular thrackled cycle is outerplanar");
  Check& irreducible = s.add("irreducible-triangle", "an irreducible annular thrackled cycle is a three-cycle");
  Check& form = s.add("word-form", "the cycle word is a^(2p)(ba)^r b or uses one letter");
  Check& alt = s.add("alternating", "every annular thrackled cycle is alternating");
  for (const auto& [n, census] : cs) {
    if (n > n_max) continue;
    for (const Drawing& d : census.reps) {
      record(odd, d.vertex_count() % 2 == 1, d);
      record(outer, minimal_class(d.bare(), 1) == 1, d);
      if (find_removals(d).empty()) record(irreducible, d.vertex_count() == 3, d);
      const Word w = cycle_word(d, false);
      record(form, all_one_letter(w) || annular_form(w).has_value(), d);
      record(alt, is_alternating(d), d);
    }
  }
  word_lemmas(s, cs, n_max);
  return s.finish();
}

VerdictReport suite_pants(const CensusSet& cs, int n_max, int small_graph_limit) {
  Suite s("pants", n_max);
  Check& even = s.add("even-six", "an even pants thrackled cycle has length six and is Reidemeister equivalent to the "
                                  "pants six-cycle");
  Check& irreducible = s.add("irreducible-three-six", "an irreducible pants thrackled cycle has length three or six");
  Check& caba = s.add("no-caba", "an irreducible cycle word without bb and cc contains no caba or baca");
  Check& abc = s.add("abc-power", "a repetition-free irreducible cycle word is (abc)^m, with alternating turn signs beyond length three");
  Check& odd = s.add("odd-reduces", "an odd pants thrackled cycle reduces to a three-cycle by edge removals");
  const std::set<Code> six = closure(pants_six_cycle());
  for (const auto& [n, census] : cs) {
    if (n > n_max) continue;
    for (const Drawing& d : census.reps) {
      const int len = d.vertex_count();
      if (len % 2 == 0) record(even, len == 6 && six.count(achiral_code(d)) > 0, d);
      const bool reducible = !find_removals(d).empty();
      if (!reducible) record(irreducible, len == 3 || len == 6, d);
      if (len % 2 == 1) record(odd, reduces_to_triangle(d), d);
      if (reducible) continue;
      const Word w = cycle_word(d, false);
      record(caba, word_form_check(w, WordPattern::NoCabaBaca), d);
      if (repetition_free(w)) {
        const Word ws = cycle_word(d, true);
        record(abc, abc_power(w).has_value() && (len == 3 || word_form_check(ws, WordPattern::AlternatingSigns)), d);
      }
    }
  }
  word_lemmas(s, cs, n_max);
  if (small_graph_limit > 0) {
    const std::pair<SmallShape, const char*> shapes[] = {
        {SmallShape::Theta, "no-theta"}, {SmallShape::Dumbbell, "no-dumbbell"}, {SmallShape::Figure8, "no-figure-8"}};
    for (auto [shape, id] : shapes) {
      const SmallGraphCensus g = search_small_graphs(shape, small_graph_limit, ClassConstraint::T3);
      Check& c = s.add(id, std::string("no pants drawing of a ") +
                               (shape == SmallShape::Theta      ? "theta graph"
                                : shape == SmallShape::Dumbbell ? "dumbbell"
                                                                : "figure-8 graph") +
                               " built on a six-cycle with at most " + std::to_string(small_graph_limit) + " edges");
      c.population = static_cast<long>(g.graphs.size());
      c.pass = g.hits.empty();
      for (std::size_t i = 0; i < g.hits.size() && i < kMaxWitnesses; ++i) c.witnesses.push_back(g.hits[i]);
    }
  }
  return s.finish();
}

VerdictReport suite_outerplanar(int n_max) { return suite_outerplanar(class_censuses(ClassConstraint::T1, n_max), n_max); }
VerdictReport suite_annular(int n_max) { return suite_annular(class_censuses(ClassConstraint::T2, n_max), n_max); }
VerdictReport suite_pants(int n_max, int small_graph_limit) {
  return suite_pants(class_censuses(ClassConstraint::T3, n_max), n_max, small_graph_limit);
}

}  // namespace thrackle
