#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "thrackle/enumerate.hpp"
#include "thrackle/error.hpp"
#include "thrackle/moves.hpp"
#include "router.hpp"

namespace thrackle {

int worker_threads(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("THRACKLE_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(n, 1);
}

namespace {

using detail::Budget;
using detail::Sketch;

struct Frontier {
  Sketch s;
  int k = 0;
  Corner at;
};

class CycleSearch {
 public:
  CycleSearch(int n, int d_max, MirrorMode mode, Budget* budget)
      : n_(n), d_max_(d_max), achiral_(mode == MirrorMode::Achiral), budget_(budget) {}

  // Starts from a lone v0 (on its own circle under a class constraint).
  void start(int split_k, std::vector<Frontier>* frontier) {
    split_k_ = split_k;
    frontier_ = frontier;
    Sketch s;
    s.d_max = d_max_;
    const NodeId v0 = s.b.add_node(0);
    Corner at{v0, kNoDart};
    if (d_max_ > 0) {
      const Dart l = s.b.add_edge(Corner{v0, kNoDart}, Corner{v0, kNoDart}, scaffold_label(0));
      s.b.set_dart_flag(mate(l), 1);
      s.circles = 1;
      at = Corner{v0, l};
    }
    edge(s, 0, at);
  }

  void resume(const Frontier& f) {
    frontier_ = nullptr;
    edge(f.s, f.k, f.at);
  }

  std::vector<Drawing>& found() { return found_; }

 private:
  std::uint64_t required(int k) const {
    std::uint64_t m = 0;
    const int lo = k == n_ - 1 ? 1 : 0;
    for (int j = lo; j <= k - 2; ++j) m |= std::uint64_t{1} << j;
    return m;
  }

  // Edge k runs from vertex k to vertex k+1 (to v0 for the last edge).
  void edge(const Sketch& s, int k, Corner at) {
    if (frontier_ && k == split_k_) {
      frontier_->push_back({s, k, at});
      return;
    }
    detail::EdgeJob job;
    job.tag = k;
    job.need = required(k);
    job.target = k == n_ - 1 ? 0 : kNoNode;
    job.vertex_tag = k + 1;
    job.budget = budget_;
    detail::route_edge(s, at, job, [&](Sketch& t, NodeId v) {
      if (k == n_ - 1) {
        leaf(t);
        return;
      }
      if (k < n_ - 2 && !closing_feasible(t, k)) return;
      for (Corner c : detail::free_corners(t.b, v)) edge(t, k + 1, c);
    });
  }

  // With edges 0..k drawn, the closing edge must still leave v0 and cross
  // edges 1..min(k, n-3) once each.
  bool closing_feasible(const Sketch& s, int k) const {
    std::uint64_t need = 0;
    for (int j = 1; j <= std::min(k, n_ - 3); ++j) need |= std::uint64_t{1} << j;
    int faces = 0;
    const std::vector<int> face = detail::builder_faces(s.b, &faces);
    std::vector<int> starts;
    for (Dart x = 0; x < s.b.dart_capacity(); ++x) {
      if (s.b.node_of(x) == 0 && !s.b.dart_flag(x)) starts.push_back(face[x]);
    }
    return detail::curve_reachable(s.b, face, faces, starts, need, std::vector<char>(faces, 1));
  }

  // Keeps the labelled drawing only when its root (v0 along edge 0) is a
  // canonical root among all vertex darts, so each drawing is kept once.
  void leaf(const Sketch& s) {
    const CombinatorialMap m = s.b.build();
    const std::vector<std::uint32_t> color = detail::builder_colors(s.b, false);
    std::vector<Dart> cand;
    Dart root = kNoDart;
    for (Dart x = 0; x < s.b.dart_capacity(); ++x) {
      if (s.b.edge_tag(x) < 0 || s.b.node_tag(s.b.node_of(x)) < 0) continue;
      cand.push_back(x);
      if (s.b.node_of(x) == 0 && s.b.edge_tag(x) == 0) root = x;
    }
    const std::vector<std::uint32_t> mc = achiral_ ? detail::builder_colors(s.b, true) : std::vector<std::uint32_t>{};
    if (!is_canonical_root(m, color, root, cand, achiral_, mc)) return;
    std::vector<std::pair<int, int>> orient(n_);
    for (int e = 0; e < n_; ++e) orient[e] = {e, (e + 1) % n_};
    found_.push_back(from_builder(s.b, orient));
  }

  int n_;
  int d_max_;
  bool achiral_;
  Budget* budget_;
  int split_k_ = -1;
  std::vector<Frontier>* frontier_ = nullptr;
  std::vector<Drawing> found_;
};

std::vector<std::uint32_t> census_code(const Drawing& d, MirrorMode mode) {
  return mode == MirrorMode::Achiral ? achiral_code(d) : drawing_code(d);
}

void finish_census(Census& c, std::vector<Drawing> found) {
  std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> keyed;
  keyed.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) keyed.emplace_back(census_code(found[i], c.mode), i);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    Drawing d = std::move(found[keyed[i].second]);
    d.name = "cycle-" + std::to_string(c.n) + "-" + std::to_string(c.reps.size());
    c.reps.push_back(std::move(d));
    c.codes.push_back(keyed[i].first);
  }
}

}  // namespace

Census enumerate_cycles(int n, ClassConstraint constraint, MirrorMode mode, const EnumerateOptions& opt) {
  if (n < 3 || n > 24) throw Error(ErrorCode::ResourceLimit, "cycle length out of range");
  Census census;
  census.n = n;
  census.constraint = constraint;
  census.mode = mode;
  const int d_max = static_cast<int>(constraint);
  Budget budget;
  budget.limit = opt.node_limit;
  CycleSearch root(n, d_max, mode, &budget);
  std::vector<Frontier> frontier;
  root.start(std::min(n - 1, 3), &frontier);
  std::vector<Drawing> found = std::move(root.found());

  const int threads = std::max(1, std::min<int>(worker_threads(opt.threads), static_cast<int>(frontier.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::vector<Drawing>> per(threads);
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&](int w) {
    try {
      CycleSearch s(n, d_max, mode, &budget);
      for (std::size_t i; (i = next.fetch_add(1)) < frontier.size();) s.resume(frontier[i]);
      per[w] = std::move(s.found());
    } catch (...) {
      std::lock_guard lock(failure_lock);
      if (!failure) failure = std::current_exception();
      next = frontier.size();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& v : per) {
    for (auto& d : v) found.push_back(std::move(d));
  }
  finish_census(census, std::move(found));
  if (opt.group_reidemeister) group_reidemeister(census);
  return census;
}

}  // namespace thrackle
