#include <doctest.h>

#include "support.hpp"

TEST_CASE("randomized move trials") {
  const auto pool = support::census_pool();
  support::Tally tally;
  const auto stats = support::run_move_trials(pool, 2000, 11, tally);
  for (const auto& m : stats.messages) MESSAGE(m);
  for (const auto& f : tally.failures) MESSAGE(f);
  CHECK(stats.trials == 2000);
  for (const auto& [name, c] : stats.by_property) {
    INFO(name);
    CHECK(c.trials >= 400);
    CHECK(c.failures == 0);
  }
  CHECK(stats.by_property.size() == 4);
  CHECK(tally.ok());
}
