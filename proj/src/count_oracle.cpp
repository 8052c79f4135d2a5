#include <kgon/count_oracle.hpp>

#include <kgon/predicates.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kgon {
namespace {

class Fenwick {
 public:
  explicit Fenwick(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}
  void add(int i) {
    for (++i; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[static_cast<std::size_t>(i)];
  }
  int prefix(int count) const {  // sum of first `count` slots
    int s = 0;
    for (int i = count; i > 0; i -= i & -i) s += tree_[static_cast<std::size_t>(i)];
    return s;
  }

 private:
  std::vector<int> tree_;
};

}  // namespace

CountOracle::CountOracle(const PointSet& ps) : n_(ps.size()), ps_(&ps) {
  if (n_ < 2) throw std::invalid_argument("CountOracle: need at least two points");
  // Perturbed x-order.
  std::vector<int> by_x(static_cast<std::size_t>(n_));
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](int a, int b) { return x_less(ps[a], ps[b]); });
  x_rank_.assign(static_cast<std::size_t>(n_), 0);
  for (int r = 0; r < n_; ++r) x_rank_[static_cast<std::size_t>(by_x[static_cast<std::size_t>(r)])] = r;

  below_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, 0);

  // For each anchor u: points to the right of u in x-order, sorted by the
  // slope of the line u->w (perturbed). For a pair (u,v), the points below
  // segment uv are exactly those w that are left of v in x-order and below
  // the line u->v, i.e. with smaller slope rank.
  std::vector<int> right;
  std::vector<int> slope_rank(static_cast<std::size_t>(n_));
  for (int ur = 0; ur + 1 < n_; ++ur) {
    const int u = by_x[static_cast<std::size_t>(ur)];
    right.assign(by_x.begin() + ur + 1, by_x.end());
    std::vector<int> by_slope = right;
    std::sort(by_slope.begin(), by_slope.end(), [&](int a, int b) {
      // slope(u,a) < slope(u,b)  <=>  b above line u->a (both right of u)
      return orient_sos(ps[u], ps[a], ps[b]) == Turn::Left;
    });
    for (int r = 0; r < static_cast<int>(by_slope.size()); ++r)
      slope_rank[static_cast<std::size_t>(by_slope[static_cast<std::size_t>(r)])] = r;
    Fenwick fen(static_cast<int>(right.size()));
    for (int v : right) {  // ascending x-order
      below_[pair_index(u, v)] =
          static_cast<std::int32_t>(fen.prefix(slope_rank[static_cast<std::size_t>(v)]));
      fen.add(slope_rank[static_cast<std::size_t>(v)]);
    }
  }
}

std::size_t CountOracle::pair_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(a) * (2 * n_ - a - 1) / 2 + static_cast<std::size_t>(b - a - 1);
}

int CountOracle::below(int a_pos, int b_pos) const {
  if (a_pos == b_pos || a_pos < 0 || b_pos < 0 || a_pos >= n_ || b_pos >= n_)
    throw std::invalid_argument("CountOracle::below: bad positions");
  return below_[pair_index(a_pos, b_pos)];
}

int CountOracle::triangle_count(int a_pos, int b_pos, int c_pos) const {
  int l = a_pos, m = b_pos, r = c_pos;
  if (l == m || l == r || m == r)
    throw std::invalid_argument("CountOracle::triangle_count: positions must be distinct");
  // Sort the corners by perturbed x-rank.
  if (x_rank_[static_cast<std::size_t>(l)] > x_rank_[static_cast<std::size_t>(m)]) std::swap(l, m);
  if (x_rank_[static_cast<std::size_t>(m)] > x_rank_[static_cast<std::size_t>(r)]) std::swap(m, r);
  if (x_rank_[static_cast<std::size_t>(l)] > x_rank_[static_cast<std::size_t>(m)]) std::swap(l, m);
  const PointSet& ps = *ps_;
  if (orient_sos(ps[l], ps[r], ps[m]) == Turn::Left) {
    // middle corner above the chord: interior = under the roof, minus under the chord
    return below(l, m) + below(m, r) - below(l, r);
  }
  // middle corner below the chord (it is itself counted by below(l,r))
  return below(l, r) - below(l, m) - below(m, r) - 1;
}

}  // namespace kgon
