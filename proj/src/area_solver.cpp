#include <kgon/area_solver.hpp>

#include <kgon/count_oracle.hpp>
#include <kgon/geometry.hpp>
#include <kgon/predicates.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace kgon {

namespace {

constexpr double kNoSolution = std::numeric_limits<double>::quiet_NaN();

inline bool has_value(double v) { return !std::isnan(v); }

inline double min_keep(double acc, double v) {
  if (!has_value(v)) return acc;
  if (!has_value(acc) || v < acc) return v;
  return acc;
}

// Fan DP for one choice of bottommost point p. States are (head v, constraint
// c, k): the minimum total area of the remaining fan triangles when the region
// built so far ends at vertex v, the previous vertex was c (the sentinel c=-1
// stands for p itself, before the first vertex), and the remaining region must
// contain exactly k points counting p and v. The next vertex w must lie left
// of the directed line c->v (convexity at v) and after v in the angular order
// around p. k=2 is the base layer: the region degenerates to the segment p-v.
class FanDP {
 public:
  FanDP(const PointSet& ps, const CountOracle& oracle, int p_pos, int kmax, AreaVariant variant)
      : ps_(ps), oracle_(oracle), p_pos_(p_pos), kmax_(kmax), variant_(variant) {
    const Point& p = ps[p_pos];
    for (int i = 0; i < ps.size(); ++i) {
      if (i == p_pos) continue;
      if (y_less(p, ps[i])) cand_.push_back(i);
    }
    std::sort(cand_.begin(), cand_.end(), [&](int a, int b) {
      return orient_sos(p, ps[a], ps[b]) == Turn::Left;
    });
    m_ = static_cast<int>(cand_.size());
    if (variant_ == AreaVariant::SweepCompressed) {
      heads_.resize(m_);
    } else {
      dense_.assign(static_cast<std::size_t>(m_) * (m_ + 1) * (kmax_ + 1), kNoSolution);
    }
    for (int i = m_ - 1; i >= 0; --i) {
      if (variant_ == AreaVariant::Basic) {
        fill_basic(i);
      } else {
        fill_sweep(i);
      }
    }
  }

  int num_candidates() const { return m_; }
  const std::vector<int>& candidates() const { return cand_; }
  long long entries_created() const { return entries_; }

  // cidx in [-1, head): -1 is the sentinel (previous vertex = p).
  double value(int head, int cidx, int k) const {
    if (k == 2) return 0.0;
    if (k < 2 || k > kmax_) return kNoSolution;
    if (variant_ == AreaVariant::SweepCompressed) {
      const HeadTable& t = heads_[static_cast<std::size_t>(head)];
      const std::size_t c = static_cast<std::size_t>(cidx + 1);
      const auto ov = t.overrides.find(override_key(cidx, k));
      const double base = pool_at(t, k, t.read_ordinal[c]);
      if (ov != t.overrides.end()) return min_keep(ov->second, base);
      return base;
    }
    return dense_[dense_index(head, cidx, k)];
  }

  // Best completed region with p bottommost: min over first vertices v.
  double best(int k) const {
    double acc = kNoSolution;
    for (int i = 0; i < m_; ++i) acc = min_keep(acc, value(i, -1, k));
    return acc;
  }

  // Cardinality left for the sub-region after appending w = cand[j]: the
  // triangle p-v-w absorbs its interior points plus the departing head v.
  int tail_k(int head, int j, int k) const {
    return k - oracle_.triangle_count(p_pos_, cand_[head], cand_[j]) - 1;
  }

  // A(p,v,w) + points bookkeeping for appending w after head v.
  double contribution(int head, int j, int k) const {
    const int k_rest = tail_k(head, j, k);
    if (k_rest < 2) return kNoSolution;
    const double sub = value(j, head, k_rest);
    if (!has_value(sub)) return kNoSolution;
    return triangle_area(ps_[p_pos_], ps_[cand_[head]], ps_[cand_[j]]) + sub;
  }

  // Whether w = cand[j] is admissible after head given constraint cidx.
  bool admissible(int head, int cidx, int j) const {
    if (j <= head) return false;
    if (cidx < 0) return true;  // angular order already gives orient(p,v,w)=Left
    return orient_sos(ps_[cand_[cidx]], ps_[cand_[head]], ps_[cand_[j]]) == Turn::Left;
  }

 private:
  std::size_t dense_index(int head, int cidx, int k) const {
    return (static_cast<std::size_t>(head) * (m_ + 1) + static_cast<std::size_t>(cidx + 1)) *
               (kmax_ + 1) +
           static_cast<std::size_t>(k);
  }

  void fill_basic(int head) {
    for (int j = head + 1; j < m_; ++j) {
      for (int cidx = -1; cidx < head; ++cidx) {
        if (!admissible(head, cidx, j)) continue;
        double* row = &dense_[dense_index(head, cidx, 0)];
        for (int k = 3; k <= kmax_; ++k) row[k] = min_keep(row[k], contribution(head, j, k));
      }
    }
    entries_ += static_cast<long long>(head + 1) * (kmax_ - 1);
  }

  // One rotational sweep fills value(head, c, k) for every constraint c. Event
  // directions all lie in the open half circle starting at dir(v-p): w-events
  // carry direction w-v, c-events direction v-c. Processing in descending
  // direction, the pool of already-inserted w's at the moment c is read is
  // exactly {w : orient(c,v,w) = Left}. Exactly-parallel event groups are
  // resolved by an explicit perturbed orientation scan before insertion.
  void fill_sweep(int head) {
    struct Event {
      bool is_w;
      int idx;  // candidate index (w) or constraint index (c, -1 = sentinel)
    };
    const Point& p = ps_[p_pos_];
    const Point& v = ps_[cand_[head]];
    auto dir_tail = [&](const Event& e) -> const Point& {
      if (e.is_w) return v;
      return e.idx < 0 ? p : ps_[cand_[e.idx]];
    };
    auto dir_head = [&](const Event& e) -> const Point& {
      return e.is_w ? ps_[cand_[e.idx]] : v;
    };

    std::vector<Event> events;
    events.reserve(static_cast<std::size_t>(m_ - head) + head + 1);
    for (int j = head + 1; j < m_; ++j) events.push_back({true, j});
    for (int c = -1; c < head; ++c) events.push_back({false, c});
    // Descending direction within the half circle: u1 comes first iff
    // u1 x u2 < 0. Exact ties form groups; the within-group order is an
    // arbitrary deterministic one and is never used for decisions.
    std::sort(events.begin(), events.end(), [&](const Event& a, const Event& b) {
      const int s = cross_sign(dir_tail(a), dir_head(a), dir_tail(b), dir_head(b));
      if (s != 0) return s < 0;
      if (a.is_w != b.is_w) return a.is_w < b.is_w;
      return a.idx < b.idx;
    });

    HeadTable compressed;
    std::vector<double> pool(static_cast<std::size_t>(kmax_) + 1, kNoSolution);
    std::vector<double> contrib;
    if (variant_ == AreaVariant::SweepCompressed) {
      compressed.read_ordinal.assign(static_cast<std::size_t>(head) + 1, 0);
      compressed.breakpoints.assign(static_cast<std::size_t>(kmax_) + 1, {});
    }

    int group_ordinal = 0;
    std::size_t g = 0;
    while (g < events.size()) {
      std::size_t h = g + 1;
      while (h < events.size() &&
             cross_sign(dir_tail(events[g]), dir_head(events[g]), dir_tail(events[h]),
                        dir_head(events[h])) == 0) {
        ++h;
      }
      // Contributions of this group's w-events, computed once.
      std::vector<std::pair<int, std::vector<double>>> group_w;
      for (std::size_t e = g; e < h; ++e) {
        if (!events[e].is_w) continue;
        const int j = events[e].idx;
        contrib.assign(static_cast<std::size_t>(kmax_) + 1, kNoSolution);
        for (int k = 3; k <= kmax_; ++k) contrib[static_cast<std::size_t>(k)] = contribution(head, j, k);
        group_w.emplace_back(j, contrib);
      }
      // Reads happen before this group's inserts; perturbed-parallel w's that
      // still fall left of c->v are folded in per constraint.
      for (std::size_t e = g; e < h; ++e) {
        if (events[e].is_w) continue;
        const int cidx = events[e].idx;
        const Point& cpt = cidx < 0 ? p : ps_[cand_[cidx]];
        if (variant_ == AreaVariant::SweepCompressed) {
          compressed.read_ordinal[static_cast<std::size_t>(cidx + 1)] = group_ordinal;
          for (const auto& [j, cv] : group_w) {
            if (orient_sos(cpt, v, ps_[cand_[j]]) != Turn::Left) continue;
            for (int k = 3; k <= kmax_; ++k) {
              const double val = cv[static_cast<std::size_t>(k)];
              if (!has_value(val)) continue;
              const long long key = override_key(cidx, k);
              auto it = compressed.overrides.find(key);
              if (it == compressed.overrides.end()) {
                compressed.overrides.emplace(key, val);
                ++entries_;
              } else {
                it->second = min_keep(it->second, val);
              }
            }
          }
        } else {
          double* row = &dense_[dense_index(head, cidx, 0)];
          for (int k = 3; k <= kmax_; ++k) row[k] = pool[static_cast<std::size_t>(k)];
          for (const auto& [j, cv] : group_w) {
            if (orient_sos(cpt, v, ps_[cand_[j]]) != Turn::Left) continue;
            for (int k = 3; k <= kmax_; ++k)
              row[k] = min_keep(row[k], cv[static_cast<std::size_t>(k)]);
          }
        }
      }
      // Now insert the group's w contributions into the pool.
      for (const auto& [j, cv] : group_w) {
        (void)j;
        for (int k = 3; k <= kmax_; ++k) {
          const std::size_t kk = static_cast<std::size_t>(k);
          const double nv = min_keep(pool[kk], cv[kk]);
          const bool improved =
              has_value(nv) && (!has_value(pool[kk]) || nv < pool[kk]);
          pool[kk] = nv;
          if (improved && variant_ == AreaVariant::SweepCompressed) {
            compressed.breakpoints[kk].emplace_back(group_ordinal, nv);
            ++entries_;
          }
        }
      }
      ++group_ordinal;
      g = h;
    }

    if (variant_ == AreaVariant::SweepCompressed) {
      entries_ += static_cast<long long>(compressed.read_ordinal.size());
      heads_[static_cast<std::size_t>(head)] = std::move(compressed);
    } else {
      entries_ += static_cast<long long>(head + 1) * (kmax_ - 1);
    }
  }

  struct HeadTable {
    std::vector<int> read_ordinal;  // per constraint (index cidx+1): group at read
    std::vector<std::vector<std::pair<int, double>>> breakpoints;  // per k: pool improvements
    std::unordered_map<long long, double> overrides;  // tie-group extras per (cidx, k)
  };

  long long override_key(int cidx, int k) const {
    return static_cast<long long>(cidx + 1) * (kmax_ + 1) + k;
  }

  // Pool value visible to a read in group `ordinal` (inserts from strictly
  // earlier groups only).
  static double pool_at(const HeadTable& t, int k, int ordinal) {
    const auto& bps = t.breakpoints[static_cast<std::size_t>(k)];
    double out = kNoSolution;
    std::size_t lo = 0, hi = bps.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (bps[mid].first < ordinal) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo > 0) out = bps[lo - 1].second;
    return out;
  }

  const PointSet& ps_;
  const CountOracle& oracle_;
  int p_pos_;
  int kmax_;
  AreaVariant variant_;
  std::vector<int> cand_;
  int m_ = 0;
  std::vector<double> dense_;
  std::vector<HeadTable> heads_;
  long long entries_ = 0;
};

// Deterministic enumeration of all vertex sequences realizing `target` from
// the DP of one bottommost point. Sequences come out as CCW position lists
// starting at p. Equality is exact: every variant materializes the same
// minima, so optimal transitions are recognized by bit-equal comparison.
void reconstruct(const FanDP& dp, int p_pos, int k, double target,
                 std::vector<std::vector<int>>& out, int cap) {
  std::vector<int> path;
  path.push_back(p_pos);

  auto dfs = [&](auto&& self, int head, int cidx, int kk, double rest) -> void {
    if (static_cast<int>(out.size()) >= cap) return;
    path.push_back(dp.candidates()[static_cast<std::size_t>(head)]);
    for (int j = head + 1; j < dp.num_candidates() && static_cast<int>(out.size()) < cap; ++j) {
      if (!dp.admissible(head, cidx, j)) continue;
      const double c = dp.contribution(head, j, kk);
      if (!has_value(c) || c != rest) continue;
      const int k_rest = dp.tail_k(head, j, kk);
      if (k_rest == 2) {
        path.push_back(dp.candidates()[static_cast<std::size_t>(j)]);
        out.push_back(path);
        path.pop_back();
      } else {
        const double sub = dp.value(j, head, k_rest);
        const double tri = rest - sub;  // not used for decisions, only recursion
        (void)tri;
        self(self, j, head, k_rest, sub);
      }
    }
    path.pop_back();
  };

  for (int head = 0; head < dp.num_candidates(); ++head) {
    if (static_cast<int>(out.size()) >= cap) break;
    const double v = dp.value(head, -1, k);
    if (has_value(v) && v == target) dfs(dfs, head, -1, k, target);
  }
}

// Tie rule shared by all solvers: fewer vertices first, then lexicographically
// smallest sorted vertex-id sequence.
bool better_by_tie_rule(const PointSet& ps, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ids = [&](const std::vector<int>& seq) {
    std::vector<std::int32_t> v;
    v.reserve(seq.size());
    for (int pos : seq) v.push_back(ps[pos].id);
    std::sort(v.begin(), v.end());
    return v;
  };
  return ids(a) < ids(b);
}

// One full pass over bottommost candidates: merges every candidate's per-k
// minima into `table`. `skip(above)` is the early exit; `kmax_of` limits the
// table depth per candidate.
template <typename KmaxFn, typename SkipFn, typename VisitFn>
void run_all_bottoms(const PointSet& ps, const CountOracle& oracle, AreaVariant variant,
                     KmaxFn&& kmax_of, SkipFn&& skip, std::vector<double>& table,
                     long long& entries, VisitFn&& visit) {
  const auto order = area_early_exit_order(ps);
  for (const BottomCandidate& bc : order) {
    if (skip(bc.above)) continue;
    const int kmax = kmax_of(bc);
    if (kmax < 3) continue;
    FanDP dp(ps, oracle, bc.pos, kmax, variant);
    entries += dp.entries_created();
    for (int k = 3; k <= kmax && k < static_cast<int>(table.size()); ++k) {
      table[static_cast<std::size_t>(k)] = min_keep(table[static_cast<std::size_t>(k)], dp.best(k));
    }
    visit(bc.pos, bc.above, dp);
  }
}

// Re-derive and rank every optimal polygon for (k, target) over the eligible
// bottommost candidates. Candidates whose DP does not attain `target` simply
// contribute nothing.
std::vector<std::vector<int>> collect_optimal_sequences(const PointSet& ps,
                                                        const CountOracle& oracle,
                                                        AreaVariant variant, int k, double target,
                                                        int cap) {
  std::vector<std::vector<int>> seqs;
  for (const BottomCandidate& bc : area_early_exit_order(ps)) {
    if (static_cast<int>(seqs.size()) >= cap) break;
    if (bc.above + 1 < k) continue;
    FanDP dp(ps, oracle, bc.pos, k, variant);
    reconstruct(dp, bc.pos, k, target, seqs, cap);
  }
  std::sort(seqs.begin(), seqs.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
    return better_by_tie_rule(ps, a, b);
  });
  return seqs;
}

std::vector<double> fresh_table(int n) {
  return std::vector<double>(static_cast<std::size_t>(n) + 1, kNoSolution);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::optional<RegionSolution> min_area_k(const PointSet& ps, int k, AreaVariant variant,
                                         ARunStats* stats, bool prune) {
  const int n = ps.size();
  if (k < 3 || k > n) {
    throw std::invalid_argument("min_area_k: k must satisfy 3 <= k <= n (k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
  }
  const auto t0 = std::chrono::steady_clock::now();
  CountOracle oracle(ps);
  std::vector<double> table = fresh_table(n);
  long long entries = 0;
  run_all_bottoms(
      ps, oracle, variant, [&](const BottomCandidate& bc) { return std::min(k, bc.above + 1); },
      [&](int above) { return prune && above + 1 < k; }, table, entries,
      [](int, int, const FanDP&) {});
  const double best = table[static_cast<std::size_t>(k)];
  std::optional<RegionSolution> out;
  if (has_value(best)) {
    const auto seqs = collect_optimal_sequences(ps, oracle, variant, k, best, 256);
    out = make_region_solution(ps, seqs.front(), true);
  }
  if (stats) {
    stats->wall_time_s = seconds_since(t0);
    stats->entries_created = entries;
    stats->min_area_by_k = std::move(table);
  }
  return out;
}

std::vector<RegionSolution> min_area_k_all(const PointSet& ps, int k, AreaVariant variant,
                                           int max_solutions) {
  const int n = ps.size();
  if (k < 3 || k > n) {
    throw std::invalid_argument("min_area_k_all: k must satisfy 3 <= k <= n");
  }
  CountOracle oracle(ps);
  std::vector<double> table = fresh_table(n);
  long long entries = 0;
  run_all_bottoms(
      ps, oracle, variant, [&](const BottomCandidate& bc) { return std::min(k, bc.above + 1); },
      [&](int above) { return above + 1 < k; }, table, entries, [](int, int, const FanDP&) {});
  const double best = table[static_cast<std::size_t>(k)];
  std::vector<RegionSolution> out;
  if (!has_value(best)) return out;
  for (const auto& seq : collect_optimal_sequences(ps, oracle, variant, k, best, max_solutions)) {
    out.push_back(make_region_solution(ps, seq, true));
  }
  return out;
}

std::optional<RegionSolution> max_points_under_area(const PointSet& ps, double max_area,
                                                    AreaVariant variant, ARunStats* stats,
                                                    bool prune) {
  if (!(max_area > 0.0) || !std::isfinite(max_area)) {
    throw std::invalid_argument("max_points_under_area: max area must be positive and finite");
  }
  const int n = ps.size();
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<RegionSolution> out;
  if (n >= 3) {
    CountOracle oracle(ps);
    std::vector<double> table = fresh_table(n);
    long long entries = 0;
    int best_k = 0;
    // Doubling on the table depth: a pass capped at `cap` is conclusive when
    // the winner stays below the cap (skipped bottoms have too few points
    // above to reach any k >= best_k). Restart deeper otherwise; the wasted
    // work is geometric in the final depth. Without pruning, run full depth.
    int cap = prune ? std::min(n, 8) : n;
    for (;;) {
      table = fresh_table(n);
      entries = 0;
      best_k = 0;
      run_all_bottoms(
          ps, oracle, variant,
          [&](const BottomCandidate& bc) { return std::min(cap, bc.above + 1); },
          [&](int above) { return prune && best_k >= 3 && above + 1 < best_k; }, table, entries,
          [&](int, int above, const FanDP&) {
            for (int k = std::min(cap, above + 1); k > best_k && k >= 3; --k) {
              const double a = table[static_cast<std::size_t>(k)];
              if (has_value(a) && a <= max_area) {
                best_k = k;
                break;
              }
            }
          });
      if (best_k < cap || cap >= n) break;
      cap = std::min(n, cap * 2);
    }
    if (best_k >= 3) {
      const double target = table[static_cast<std::size_t>(best_k)];
      const auto seqs = collect_optimal_sequences(ps, oracle, variant, best_k, target, 256);
      out = make_region_solution(ps, seqs.front(), true);
    }
    if (stats) {
      stats->wall_time_s = seconds_since(t0);
      stats->entries_created = entries;
      stats->min_area_by_k = std::move(table);
    }
  } else if (stats) {
    stats->wall_time_s = seconds_since(t0);
    stats->entries_created = 0;
    stats->min_area_by_k = fresh_table(n);
  }
  return out;
}

std::vector<BottomCandidate> area_early_exit_order(const PointSet& ps) {
  const int n = ps.size();
  std::vector<BottomCandidate> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int above = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i && y_less(ps[i], ps[j])) ++above;
    }
    order[static_cast<std::size_t>(i)] = {i, above};
  }
  std::sort(order.begin(), order.end(), [](const BottomCandidate& a, const BottomCandidate& b) {
    if (a.above != b.above) return a.above > b.above;
    return a.pos < b.pos;
  });
  return order;
}

}  // namespace kgon
