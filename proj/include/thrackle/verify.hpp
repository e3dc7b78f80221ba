#pragma once

// Theorem suites: universally quantified checks over finite censuses of
// scaffolded thrackled cycles. A pass means no counterexample exists in the
// population, nothing more.

#include <map>
#include <string>
#include <vector>

#include "thrackle/enumerate.hpp"

namespace thrackle {

struct Check {
  std::string id;         // short claim id, e.g. "odd-length"
  std::string statement;  // the claim in words
  long population = 0;    // objects the claim was tested on
  bool pass = true;
  std::vector<Drawing> witnesses;  // counterexamples (at most a few)
};

struct VerdictReport {
  std::string suite;
  int n_max = 0;
  std::vector<Check> checks;
  bool all_pass = true;
};

// Census per cycle length, all in achiral mode under one constraint.
using CensusSet = std::map<int, Census>;

// Enumerates n = 3..n_max under the constraint. Errors: ResourceLimit.
CensusSet class_censuses(ClassConstraint constraint, int n_max);

// Suites over explicit censuses (tests inject doctored entries here).
VerdictReport suite_outerplanar(const CensusSet& censuses, int n_max);
VerdictReport suite_annular(const CensusSet& censuses, int n_max);
// small_graph_limit <= 0 skips the theta/dumbbell/figure-8 searches.
VerdictReport suite_pants(const CensusSet& censuses, int n_max, int small_graph_limit);

// Same, enumerating the censuses first. Errors: ResourceLimit.
VerdictReport suite_outerplanar(int n_max);
VerdictReport suite_annular(int n_max);
VerdictReport suite_pants(int n_max, int small_graph_limit = 11);

}  // namespace thrackle
