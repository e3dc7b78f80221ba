#include <algorithm>
#include <map>
#include <numeric>

#include "thrackle/enumerate.hpp"
#include "thrackle/error.hpp"

namespace thrackle {

namespace {

// Edge i of the cycle joins vertex i to vertex i+1 and crosses every edge
// not adjacent to it. A labelled drawing is a crossing order per edge plus
// a sign per crossing; it is spherical iff its face count is 2 + X.
class Oracle {
 public:
  explicit Oracle(int n) : n_(n) {
    id_.assign(n * n, -1);
    for (int e = 0; e < n; ++e) {
      for (int f = e + 2; f < n; ++f) {
        if (e == 0 && f == n - 1) continue;
        id_[e * n + f] = id_[f * n + e] = static_cast<int>(pairs_.size());
        pairs_.push_back({e, f});
      }
    }
    partners_.resize(n);
    for (int e = 0; e < n; ++e) {
      for (int f = 0; f < n; ++f) {
        if (id_[e * n + f] >= 0) partners_[e].push_back(f);
      }
    }
    seg_ = n - 3 + 1;
    next_.assign(2 * n * seg_, 0);
    seen_.assign(next_.size(), 0);
  }

  int crossings() const { return static_cast<int>(pairs_.size()); }

  // Orders: orders[e] lists the partners of e along e. Signs: bit c is the
  // sign of crossing c with its lower edge first (set = +1).
  bool spherical(const std::vector<std::vector<int>>& orders, std::uint32_t signs) {
    const int x = crossings();
    // Dart 2q leaves the start of segment q; 2q+1 leaves its end backwards.
    auto seg = [&](int e, int s) { return e * seg_ + s; };
    std::vector<int> pos(2 * x, 0);
    for (int e = 0; e < n_; ++e) {
      for (int i = 0; i < static_cast<int>(orders[e].size()); ++i) {
        const int c = id_[e * n_ + orders[e][i]];
        pos[2 * c + (pairs_[c].first == e ? 0 : 1)] = i;
      }
    }
    for (int v = 0; v < n_; ++v) {
      const int in = 2 * seg((v + n_ - 1) % n_, seg_ - 1) + 1;
      const int out = 2 * seg(v, 0);
      next_[in] = out;
      next_[out] = in;
    }
    for (int c = 0; c < x; ++c) {
      const auto [e, f] = pairs_[c];
      const int ie = pos[2 * c], jf = pos[2 * c + 1];
      const int e_out = 2 * seg(e, ie + 1), e_in = 2 * seg(e, ie) + 1;
      const int f_out = 2 * seg(f, jf + 1), f_in = 2 * seg(f, jf) + 1;
      const int cyc[4] = {e_out, (signs >> c & 1) ? f_out : f_in, e_in, (signs >> c & 1) ? f_in : f_out};
      for (int k = 0; k < 4; ++k) next_[cyc[k]] = cyc[(k + 1) % 4];
    }
    std::fill(seen_.begin(), seen_.end(), 0);
    int faces = 0;
    const int darts = static_cast<int>(next_.size());
    for (int s = 0; s < darts; ++s) {
      if (seen_[s]) continue;
      ++faces;
      for (int y = s; !seen_[y]; y = next_[y ^ 1]) seen_[y] = 1;
    }
    return faces == 2 + x;
  }

  DrawingSpec spec(const std::vector<std::vector<int>>& orders, std::uint32_t signs) const {
    DrawingSpec s;
    s.vertex_count = n_;
    for (int e = 0; e < n_; ++e) s.edges.emplace_back(e, (e + 1) % n_);
    for (int c = 0; c < crossings(); ++c) s.crossings.push_back({pairs_[c].first, pairs_[c].second, (signs >> c & 1) ? 1 : -1});
    for (int e = 0; e < n_; ++e) {
      std::vector<int> r;
      for (int f : orders[e]) r.push_back(id_[e * n_ + f]);
      s.routes.push_back(std::move(r));
    }
    return s;
  }

  const std::vector<int>& partners(int e) const { return partners_[e]; }

 private:
  int n_;
  int seg_;
  std::vector<int> id_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> partners_;
  std::vector<int> next_;
  std::vector<char> seen_;
};

}  // namespace

Census oracle_enumerate(int n, MirrorMode mode) {
  if (n < 3 || n > 6) throw Error(ErrorCode::ResourceLimit, "oracle supports 3 <= n <= 6");
  Census census;
  census.n = n;
  census.mode = mode;
  Oracle o(n);
  // Every permutation of each edge's partners.
  std::vector<std::vector<std::vector<int>>> perms(n);
  for (int e = 0; e < n; ++e) {
    std::vector<int> p = o.partners(e);
    do perms[e].push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::map<std::vector<std::uint32_t>, Drawing> found;
  std::vector<int> pick(n, 0);
  std::vector<std::vector<int>> orders(n);
  const std::uint32_t sign_count = std::uint32_t{1} << o.crossings();
  for (;;) {
    for (int e = 0; e < n; ++e) orders[e] = perms[e][pick[e]];
    for (std::uint32_t signs = 0; signs < sign_count; ++signs) {
      if (!o.spherical(orders, signs)) continue;
      Drawing d = assemble_drawing(o.spec(orders, signs));
      auto code = mode == MirrorMode::Achiral ? achiral_code(d) : drawing_code(d);
      found.emplace(std::move(code), std::move(d));
    }
    int e = 0;
    while (e < n && ++pick[e] == static_cast<int>(perms[e].size())) pick[e++] = 0;
    if (e == n) break;
  }
  for (auto& [code, d] : found) {
    d.name = "oracle-" + std::to_string(n) + "-" + std::to_string(census.reps.size());
    census.codes.push_back(code);
    census.reps.push_back(std::move(d));
  }
  return census;
}

}  // namespace thrackle
