#include "support.hpp"

#include <random>

#include "thrackle/error.hpp"
#include "thrackle/io.hpp"
#include "thrackle/moves.hpp"

using namespace thrackle;

namespace support {

std::string invariant_failure(const Drawing& d) {
  try {
    if (genus(d.map) != 0) return "genus " + std::to_string(genus(d.map));
    const ThrackleReport r = validate_thrackle(d);
    if (r.ok && r.crossing_total != crossing_count_formula(d)) return "crossing total differs from the formula";
    const std::string text = to_tmf(d);
    if (!identical(parse_tmf(text), d)) return "TMF round trip changed the drawing";
    const std::string canon = to_tmf(d, true);
    const Drawing back = parse_tmf(canon);
    if (to_tmf(back) != canon) return "canonical TMF round trip changed the text";
    if (drawing_code(back) != drawing_code(d)) return "canonical TMF changed the isomorphism class";
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

void Tally::note(const Drawing& d) {
  ++checked;
  std::string why = invariant_failure(d);
  if (!why.empty() && failures.size() < 20) failures.push_back((d.name.empty() ? "drawing" : d.name) + ": " + why);
}

std::vector<PooledDrawing> census_pool() {
  const std::pair<ClassConstraint, std::vector<int>> plan[] = {
      {ClassConstraint::None, {3, 5, 6, 7, 8}},
      {ClassConstraint::T1, {3, 5, 7, 9}},
      {ClassConstraint::T2, {3, 5, 7}},
      {ClassConstraint::T3, {3, 5, 6, 7}},
  };
  EnumerateOptions opt;
  opt.group_reidemeister = false;
  std::vector<PooledDrawing> pool;
  for (const auto& [c, ns] : plan) {
    for (int n : ns) {
      for (Drawing& d : enumerate_cycles(n, c, MirrorMode::Chiral, opt).reps) pool.push_back({std::move(d), c});
    }
  }
  return pool;
}

bool TrialStats::ok() const {
  for (const auto& [name, c] : by_property) {
    if (c.failures > 0) return false;
  }
  return true;
}

namespace {

bool insertion_is_cheap(const PooledDrawing& p) {
  const int n = p.drawing.vertex_count();
  return n <= 6 || (n == 7 && p.constraint <= ClassConstraint::T1);
}

class Trials {
 public:
  Trials(const std::vector<PooledDrawing>& pool, std::uint64_t seed, Tally& tally, TrialStats& stats)
      : pool_(pool), rng_(seed), tally_(tally), stats_(stats) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const PooledDrawing& p = pool[i];
      if (!p.drawing.has_scaffold() || p.drawing.vertex_count() >= 5) removable_.push_back(i);
      if (insertion_is_cheap(p)) insertable_.push_back(i);
      all_.push_back(i);
    }
  }

  void run(int trials) {
    for (int t = 0; t < trials; ++t) {
      switch (t % 4) {
        case 0: removal(); break;
        case 1: insertion(); break;
        case 2: r3(); break;
        default: mirror_signs(); break;
      }
      ++stats_.trials;
    }
  }

 private:
  std::size_t pick(const std::vector<std::size_t>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng_)];
  }
  template <class T>
  const T& pick_item(const std::vector<T>& xs) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng_)];
  }

  void result(const std::string& property, bool ok, const Drawing& d, const std::string& what) {
    PropertyCount& c = stats_.by_property[property];
    ++c.trials;
    if (ok) return;
    ++c.failures;
    if (stats_.messages.size() < 10) stats_.messages.push_back(property + " on " + d.name + ": " + what + "\n" + to_tmf(d));
  }

  // Draws until the move has a candidate; a few misses are expected.
  template <class F>
  void until_applicable(const std::vector<std::size_t>& from, F&& attempt) {
    for (int tries = 0; tries < 1000; ++tries) {
      if (attempt(pool_[pick(from)])) return;
    }
    throw Error(ErrorCode::ResourceLimit, "no drawing admits the move");
  }

  void removal() {
    until_applicable(removable_, [&](const PooledDrawing& p) {
      const Drawing& d = p.drawing;
      const auto rs = find_removals(d);
      if (rs.empty()) return false;
      const Drawing out = remove_edge(d, pick_item(rs));
      tally_.note(out);
      const bool ok = validate_thrackle(out).ok && out.vertex_count() == d.vertex_count() - 2 &&
                      out.edge_count() == d.edge_count() - 2 && out.disc_count <= d.disc_count;
      result("remove-shrinks", ok, d, "removal output invalid or wrong size");
      return true;
    });
  }

  void insertion() {
    until_applicable(insertable_, [&](const PooledDrawing& p) {
      const Drawing& d = p.drawing;
      const int e = std::uniform_int_distribution<int>(0, d.edge_count() - 1)(rng_);
      const auto key = std::make_pair(&p, e);
      auto it = inserted_.find(key);
      if (it == inserted_.end()) it = inserted_.emplace(key, insert_edge(d, e, p.constraint)).first;
      if (it->second.empty()) return false;
      const Drawing& out = pick_item(it->second);
      tally_.note(out);
      bool back = false;
      for (const auto& r : find_removals(out)) {
        if (r.empty) back = back || drawing_code(remove_edge(out, r)) == drawing_code(d);
      }
      const bool ok = validate_thrackle(out).ok && out.vertex_count() == d.vertex_count() + 2 && back;
      result("insert-remove-round-trip", ok, d, "insertion on edge " + std::to_string(e) + " did not round trip");
      return true;
    });
  }

  void r3() {
    until_applicable(all_, [&](const PooledDrawing& p) {
      const Drawing& d = p.drawing;
      const auto ts = find_r3(d);
      if (ts.empty()) return false;
      const Drawing out = apply_r3(d, pick_item(ts));
      tally_.note(out);
      const ThrackleReport r = validate_thrackle(out);
      bool back = false;
      for (const auto& u : find_r3(out)) back = back || drawing_code(apply_r3(out, u)) == drawing_code(d);
      const bool ok = r.ok && r.crossing_total == validate_thrackle(d).crossing_total && out.disc_count == d.disc_count && back;
      result("r3-involution", ok, d, "R3 move not an involution or not conserving");
      return true;
    });
  }

  void mirror_signs() {
    until_applicable(all_, [&](const PooledDrawing& p) {
      const Drawing& d = p.drawing;
      const Drawing m = mirror(d);
      tally_.note(m);
      bool ok = validate_thrackle(m).ok && drawing_code(mirror(m)) == drawing_code(d);
      for (NodeId x = 0; x < d.map.node_count(); ++x) {
        if (d.kind[x] != NodeKind::Crossing) continue;
        const int e = d.segment_of(d.map.node_dart(x));
        const int f = d.segment_of(d.map.next_ccw(d.map.node_dart(x)));
        const DirectedEdge a{e, std::bernoulli_distribution(0.5)(rng_)}, b{f, std::bernoulli_distribution(0.5)(rng_)};
        ok = ok && crossing_sign(m, x, a, b) == -crossing_sign(d, x, a, b);
      }
      result("mirror-flips-signs", ok, d, "mirror kept a crossing sign");
      return true;
    });
  }

  const std::vector<PooledDrawing>& pool_;
  std::mt19937_64 rng_;
  Tally& tally_;
  TrialStats& stats_;
  std::vector<std::size_t> removable_, insertable_, all_;
  std::map<std::pair<const PooledDrawing*, int>, std::vector<Drawing>> inserted_;
};

}  // namespace

TrialStats run_move_trials(const std::vector<PooledDrawing>& pool, int trials, std::uint64_t seed, Tally& tally) {
  TrialStats stats;
  Trials(pool, seed, tally, stats).run(trials);
  return stats;
}

}  // namespace support
