#pragma once

// Shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "thrackle/drawing.hpp"
#include "thrackle/enumerate.hpp"

namespace support {

// Structural invariants: genus 0, crossing total equal to the formula (for
// thrackles), TMF round trip in plain and canonical numbering.
struct Tally {
  long checked = 0;
  std::vector<std::string> failures;

  void note(const thrackle::Drawing& d);
  void note(const std::vector<thrackle::Drawing>& ds) {
    for (const auto& d : ds) note(d);
  }
  bool ok() const { return failures.empty(); }
};

// Empty string when every invariant holds, else the first broken one.
std::string invariant_failure(const thrackle::Drawing& d);

struct PooledDrawing {
  thrackle::Drawing drawing;
  thrackle::ClassConstraint constraint = thrackle::ClassConstraint::None;
};

// Census reps under every class constraint, small enough for fast moves.
std::vector<PooledDrawing> census_pool();

struct PropertyCount {
  long trials = 0;
  long failures = 0;
};

struct TrialStats {
  long trials = 0;
  std::map<std::string, PropertyCount> by_property;
  std::vector<std::string> messages;  // first few failures

  bool ok() const;
};

// Randomized move trials over the pool: removal, insertion round trip, R3
// involution, mirror sign flip. Every produced drawing goes through tally.
TrialStats run_move_trials(const std::vector<PooledDrawing>& pool, int trials, std::uint64_t seed, Tally& tally);

}  // namespace support
