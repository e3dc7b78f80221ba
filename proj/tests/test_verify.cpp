#include <doctest.h>

#include "thrackle/verify.hpp"

using namespace thrackle;

namespace {

const Check& check_named(const VerdictReport& r, const std::string& id) {
  for (const Check& c : r.checks) {
    if (c.id == id) return c;
  }
  FAIL("no check " << id);
  return r.checks.front();
}

}  // namespace

TEST_CASE("outerplanar suite") {
  const VerdictReport r = suite_outerplanar(9);
  CHECK(r.all_pass);
  CHECK(check_named(r, "odd-length").population > 0);
  CHECK(check_named(r, "musquash-class").population > 0);
}

TEST_CASE("annular and pants suites on small censuses") {
  const VerdictReport a = suite_annular(7);
  CHECK(a.all_pass);
  CHECK(check_named(a, "alternating").population > 0);
  const VerdictReport p = suite_pants(7, 0);
  CHECK(p.all_pass);
  CHECK(check_named(p, "even-six").population > 0);
  CHECK(check_named(p, "irreducible-three-six").population > 0);
}

TEST_CASE("suites report an injected counterexample") {
  CensusSet t1 = class_censuses(ClassConstraint::T1, 5);
  t1[6].reps.push_back(pants_six_cycle());
  const VerdictReport r = suite_outerplanar(t1, 6);
  CHECK_FALSE(r.all_pass);
  CHECK_FALSE(check_named(r, "odd-length").pass);
  CHECK(check_named(r, "odd-length").witnesses.size() == 1);

  CensusSet t2 = class_censuses(ClassConstraint::T2, 5);
  t2[6].reps.push_back(pants_six_cycle());
  const VerdictReport a = suite_annular(t2, 6);
  CHECK_FALSE(check_named(a, "odd-length").pass);
  CHECK_FALSE(check_named(a, "outerplanar").pass);
  CHECK(check_named(a, "no-two-squares").pass);

  CensusSet t3 = class_censuses(ClassConstraint::T3, 5);
  t3[6].reps.push_back(pants_six_cycle());
  CHECK(suite_pants(t3, 6, 0).all_pass);
  // An eight-cycle on four discs breaks the even-length claim.
  const Drawing eight = enumerate_cycles(8, ClassConstraint::None, MirrorMode::Achiral, {.group_reidemeister = false}).reps[0];
  t3[8].reps.push_back(classify_td(eight, 4).at(0));
  const VerdictReport p = suite_pants(t3, 8, 0);
  CHECK_FALSE(check_named(p, "even-six").pass);
}

TEST_CASE("cycle alternation agrees with the general test") {
  for (auto c : {ClassConstraint::None, ClassConstraint::T2}) {
    for (int n : {3, 5, 7}) {
      for (const Drawing& d : enumerate_cycles(n, c, MirrorMode::Chiral, {.group_reidemeister = false}).reps) {
        CHECK(is_alternating(d) == alternation_holds(d));
      }
    }
  }
}
