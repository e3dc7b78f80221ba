#include <map>

#include "router.hpp"
#include "thrackle/enumerate.hpp"
#include "thrackle/error.hpp"

namespace thrackle {

namespace {

using detail::Sketch;

// Edge to add: from an existing vertex to an existing one, or to a new
// vertex (to < 0) that takes the next vertex id.
struct PlannedEdge {
  int from = -1;
  int to = -1;
};

class Extender {
 public:
  Extender(const Drawing& base, std::vector<PlannedEdge> plan, detail::Budget* budget,
           std::map<std::vector<std::uint32_t>, Drawing>* hits)
      : plan_(std::move(plan)), budget_(budget), hits_(hits) {
    for (const auto& g : base.edges) ends_.emplace_back(g.tail, g.head);
    next_vertex_ = base.vertex_count();
  }

  void run(const Sketch& s) { extend(s, 0, next_vertex_); }

 private:
  static NodeId node_of_vertex(const MapBuilder& b, int v) {
    for (NodeId x = 0; x < b.node_capacity(); ++x) {
      if (b.node_alive(x) && b.node_tag(x) == v) return x;
    }
    throw Error(ErrorCode::WalkNotInGraph, "vertex missing from sketch");
  }

  void extend(const Sketch& s, std::size_t i, int fresh) {
    if (i == plan_.size()) {
      Drawing d = from_builder(s.b, ends_);
      if (!validate_thrackle(d).ok) return;
      d.name = "small-graph-hit";
      hits_->emplace(drawing_code(d), std::move(d));
      return;
    }
    const PlannedEdge p = plan_[i];
    const int to = p.to >= 0 ? p.to : fresh;
    detail::EdgeJob job;
    job.tag = static_cast<std::int32_t>(ends_.size());
    job.vertex_tag = fresh;
    job.budget = budget_;
    for (std::size_t e = 0; e < ends_.size(); ++e) {
      const auto [a, b] = ends_[e];
      if (a != p.from && b != p.from && a != to && b != to) job.need |= std::uint64_t{1} << e;
    }
    const NodeId start = node_of_vertex(s.b, p.from);
    if (p.to >= 0) job.target = node_of_vertex(s.b, p.to);
    ends_.emplace_back(p.from, to);
    for (Corner c : detail::free_corners(s.b, start)) {
      detail::route_edge(s, c, job, [&](Sketch& t, NodeId) { extend(t, i + 1, p.to >= 0 ? fresh : fresh + 1); });
    }
    ends_.pop_back();
  }

  std::vector<PlannedEdge> plan_;
  detail::Budget* budget_;
  std::map<std::vector<std::uint32_t>, Drawing>* hits_;
  std::vector<std::pair<int, int>> ends_;
  int next_vertex_ = 0;
};

struct Job {
  std::string what;
  std::vector<PlannedEdge> plan;
};

// Graphs built on the six-cycle 0..5; new vertices are numbered from 6.
std::vector<Job> jobs_for(SmallShape shape, int size_limit) {
  std::vector<Job> jobs;
  const std::string pre = "six-cycle";
  if (shape == SmallShape::Theta) {
    for (int u = 0; u < 6; ++u) {
      for (int w = u + 2; w < 6; ++w) {
        if (u == 0 && w == 5) continue;
        if (size_limit >= 7) jobs.push_back({pre + " + edge " + std::to_string(u) + "-" + std::to_string(w), {{u, w}}});
      }
      for (int w = u + 1; w < 6; ++w) {
        if (size_limit >= 8)
          jobs.push_back({pre + " + two-path " + std::to_string(u) + "-" + std::to_string(w), {{u, -1}, {6, w}}});
      }
    }
  } else {
    // Second cycle of length len, reached by a path of `join` edges
    // (join = 0: it shares the vertex u).
    const int min_join = shape == SmallShape::Dumbbell ? 1 : 0;
    const int max_join = shape == SmallShape::Dumbbell ? 2 : 0;
    for (int join = min_join; join <= max_join; ++join) {
      for (int len = 3; 6 + join + len <= size_limit; ++len) {
        for (int u = 0; u < 6; ++u) {
          std::vector<PlannedEdge> plan;
          int at = u;
          for (int k = 0; k < join + len - 1; ++k) {
            plan.push_back({at, -1});
            at = 6 + k;
          }
          const int entry = join == 0 ? u : 6 + join - 1;
          plan.push_back({at, entry});
          jobs.push_back({pre + " + " + std::to_string(len) + "-cycle " +
                              (join == 0 ? "at " : "via " + std::to_string(join) + "-path from ") + std::to_string(u),
                          std::move(plan)});
        }
      }
    }
  }
  return jobs;
}

}  // namespace

SmallGraphCensus search_small_graphs(SmallShape shape, int size_limit, ClassConstraint constraint) {
  if (size_limit > 16) throw Error(ErrorCode::ResourceLimit, "size limit above 16 edges");
  SmallGraphCensus out;
  out.shape = shape;
  out.size_limit = size_limit;
  out.constraint = constraint;
  const int d_max = static_cast<int>(constraint);
  if (d_max == 0) throw Error(ErrorCode::NoScaffold, "search needs a class constraint");
  EnumerateOptions opt;
  opt.group_reidemeister = false;
  const Census bases = enumerate_cycles(6, constraint, MirrorMode::Chiral, opt);
  detail::Budget budget;
  std::map<std::vector<std::uint32_t>, Drawing> hits;
  for (const Job& job : jobs_for(shape, size_limit)) {
    out.graphs.push_back(job.what);
    for (const Drawing& base : bases.reps) {
      Sketch s;
      s.b = to_builder(base);
      s.circles = base.disc_count;
      s.d_max = d_max;
      Extender(base, job.plan, &budget, &hits).run(s);
    }
  }
  for (auto& [code, d] : hits) out.hits.push_back(std::move(d));
  out.explored = budget.used;
  return out;
}

}  // namespace thrackle
