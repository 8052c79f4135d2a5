#include <kgon/area_diameter_solver.hpp>

#include <kgon/geometry.hpp>
#include <kgon/predicates.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace kgon {

namespace {

constexpr double kNoSolution = std::numeric_limits<double>::quiet_NaN();

inline bool has_value(double v) { return !std::isnan(v); }

inline double min_keep(double acc, double v) {
  if (!has_value(v)) return acc;
  if (!has_value(acc) || v < acc) return v;
  return acc;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

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

}  // namespace

// The DP peels the polygon the way rotating calipers traverse it: the right
// chain is consumed upward from p (fan triangles apexed at p), the left chain
// downward from q (fan triangles apexed at q), interleaved in the rotational
// order of edge directions. State R(r, r', l, k): the edge r->r' is the
// pending right edge, l is the left vertex currently opposite it, and the
// region still to be paid for contains exactly k points (p, q and the head
// vertices included). L(l, l', r, k) is the 180-degree mirror. Distance
// guards |r l| <= |pq| at every state are exactly the antipodal-pair checks;
// the cross-sign guards on chain switches force the true rotational
// interleaving, so no antipodal pair escapes its check. Fan-monotonicity
// guards around the apexes keep the chains from spiraling: each step must
// advance the angle seen from p (right chain) respectively q (left chain).
struct PairSolver::Impl {
  const PointSet& ps;
  const CountOracle& oracle;
  int p, q;
  double pq2;
  std::vector<int> rights, lefts;  // lune members by side of p->q
  std::unordered_map<long long, double> rmemo, lmemo;
  long long n = 0;  // key stride

  Impl(const PointSet& ps_in, const CountOracle& oracle_in, const DiameterPairTask& task)
      : ps(ps_in), oracle(oracle_in), p(task.p_pos), q(task.q_pos) {
    pq2 = squared_distance(ps[p], ps[q]);
    n = ps.size();
    for (int pos : task.lune) {
      if (pos == p || pos == q) continue;
      if (orient_sos(ps[p], ps[q], ps[pos]) == Turn::Right) {
        rights.push_back(pos);
      } else {
        lefts.push_back(pos);
      }
    }
  }

  bool within(int a, int b) const {
    return compare_squared_distance(ps[a], ps[b], ps[p], ps[q]) <= 0;
  }

  Turn turn(int a, int b, int c) const { return orient_sos(ps[a], ps[b], ps[c]); }

  int cross(int a, int b, int c, int d) const {
    return cross_sign_sos(ps[a], ps[b], ps[c], ps[d]);
  }

  long long key(int a, int b, int c, int k) const { return ((a * n + b) * n + c) * (n + 1) + k; }

  double area3(int a, int b, int c) const { return triangle_area(ps[a], ps[b], ps[c]); }

  int count3(int a, int b, int c) const { return oracle.triangle_count(a, b, c); }

  // Candidate continuations of the pending right edge r->rp: r2 in
  // rights+{q} keeping the chain convex at rp (turn left), angularly
  // advancing around p (fan monotone), and inside the slab right of rp->q.
  template <typename F>
  void right_steps(int r, int rp, F&& f) const {
    for (int r2 : rights) {
      if (r2 == r || r2 == rp) continue;
      if (turn(r, rp, r2) != Turn::Left) continue;
      if (turn(p, rp, r2) != Turn::Left) continue;
      if (turn(rp, q, r2) != Turn::Right) continue;
      f(r2);
    }
    if (turn(r, rp, q) == Turn::Left) f(q);
  }

  // Candidate continuations of the pending left edge l->lp (mirror of
  // right_steps under the 180-degree rotation p<->q, rights<->lefts).
  template <typename F>
  void left_steps(int l, int lp, F&& f) const {
    for (int l2 : lefts) {
      if (l2 == l || l2 == lp) continue;
      if (turn(l, lp, l2) != Turn::Left) continue;
      if (turn(q, lp, l2) != Turn::Left) continue;
      if (turn(lp, p, l2) != Turn::Right) continue;
      f(l2);
    }
    if (turn(l, lp, p) == Turn::Left) f(p);
  }

  // First left edge l->l2 committed while the right edge r->rp is pending:
  // fan monotone at q, slab guard at p, and the rotational-interleaving
  // cross guard against the pending right edge.
  template <typename F>
  void left_switches(int r, int rp, int l, F&& f) const {
    for (int l2 : lefts) {
      if (l2 == l) continue;
      if (turn(q, l, l2) != Turn::Left) continue;
      if (turn(p, l, l2) != Turn::Left) continue;
      if (cross(r, rp, l, l2) >= 0) continue;
      f(l2);
    }
    if (turn(q, l, p) == Turn::Left && cross(r, rp, l, p) < 0) f(p);
  }

  // Mirror: first right edge r->r2 committed while the left edge l->lp is
  // pending.
  template <typename F>
  void right_switches(int l, int lp, int r, F&& f) const {
    for (int r2 : rights) {
      if (r2 == r) continue;
      if (turn(p, r, r2) != Turn::Left) continue;
      if (turn(r, q, r2) != Turn::Right) continue;
      if (cross(lp, l, r, r2) <= 0) continue;
      f(r2);
    }
    if (turn(p, r, q) == Turn::Left && cross(lp, l, r, q) > 0) f(q);
  }

  template <typename F>
  void initial_states_r(F&& f) const {
    auto each_l = [&](int r1, int r2) {
      for (int l1 : lefts) f(r1, r2, l1);
      f(r1, r2, p);
    };
    for (int r1 : rights) {
      for (int r2 : rights) {
        if (r2 != r1 && turn(p, r1, r2) == Turn::Left && turn(r1, q, r2) == Turn::Right) {
          each_l(r1, r2);
        }
      }
      if (turn(p, r1, q) == Turn::Left) each_l(r1, q);
    }
  }

  template <typename F>
  void initial_states_l(F&& f) const {
    auto each_r = [&](int l1, int l2) {
      for (int r1 : rights) f(l1, l2, r1);
      f(l1, l2, q);
    };
    for (int l1 : lefts) {
      for (int l2 : lefts) {
        if (l2 != l1 && turn(q, l1, l2) == Turn::Left && turn(l1, p, l2) == Turn::Right) {
          each_r(l1, l2);
        }
      }
      if (turn(q, l1, p) == Turn::Left) each_r(l1, p);
    }
  }

  double solveR(int r, int rp, int l, int k) {
    if (!within(r, l) || !within(rp, l)) return kNoSolution;
    const long long memo_key = key(r, rp, l, k);
    auto it = rmemo.find(memo_key);
    if (it != rmemo.end()) return it->second;
    double best = kNoSolution;
    if (rp == q && l == p) {
      if (k == 3 + count3(p, r, q)) best = area3(p, r, q);
    } else {
      const int rest = k - count3(p, r, rp) - 1;
      if (rest >= 3) {
        const double tri = area3(p, r, rp);
        if (rp != q) {
          right_steps(r, rp, [&](int r2) { best = min_keep(best, tri + solveR(rp, r2, l, rest)); });
        }
        if (l != p) {
          left_switches(r, rp, l,
                        [&](int l2) { best = min_keep(best, tri + solveL(l, l2, rp, rest)); });
        }
      }
    }
    rmemo.emplace(memo_key, best);
    return best;
  }

  double solveL(int l, int lp, int r, int k) {
    if (!within(l, r) || !within(lp, r)) return kNoSolution;
    const long long memo_key = key(l, lp, r, k);
    auto it = lmemo.find(memo_key);
    if (it != lmemo.end()) return it->second;
    double best = kNoSolution;
    if (lp == p && r == q) {
      if (k == 3 + count3(q, l, p)) best = area3(q, l, p);
    } else {
      const int rest = k - count3(q, l, lp) - 1;
      if (rest >= 3) {
        const double tri = area3(q, l, lp);
        if (lp != p) {
          left_steps(l, lp, [&](int l2) { best = min_keep(best, tri + solveL(lp, l2, r, rest)); });
        }
        if (r != q) {
          right_switches(l, lp, r,
                         [&](int r2) { best = min_keep(best, tri + solveR(r, r2, lp, rest)); });
        }
      }
    }
    lmemo.emplace(memo_key, best);
    return best;
  }

  double solve(int k) {
    if (k < 3) return kNoSolution;
    double best = kNoSolution;
    initial_states_r([&](int r1, int r2, int l1) { best = min_keep(best, solveR(r1, r2, l1, k)); });
    initial_states_l([&](int l1, int l2, int r1) { best = min_keep(best, solveL(l1, l2, r1, k)); });
    return best;
  }
};

PairSolver::PairSolver(const PointSet& ps, const CountOracle& oracle, const DiameterPairTask& task)
    : impl_(std::make_shared<Impl>(ps, oracle, task)) {}

double PairSolver::solve(int k) { return impl_->solve(k); }

long long PairSolver::entries_created() const {
  return static_cast<long long>(impl_->rmemo.size() + impl_->lmemo.size());
}

std::vector<std::vector<int>> PairSolver::reconstruct(int k, double target, int cap) {
  Impl& s = *impl_;
  std::vector<std::vector<int>> out;
  std::vector<int> right_seq, left_seq;
  auto emit = [&]() {
    std::vector<int> seq;
    seq.push_back(s.p);
    seq.insert(seq.end(), right_seq.begin(), right_seq.end());
    seq.push_back(s.q);
    seq.insert(seq.end(), left_seq.begin(), left_seq.end());
    out.push_back(std::move(seq));
  };

  // Mirrors solveR/solveL using the same step enumerators, following only
  // transitions whose memoized value matches the remaining target exactly.
  auto dfsR = [&](auto&& selfR, auto&& selfL, int r, int rp, int l, int k_in,
                  double rest) -> void {
    if (static_cast<int>(out.size()) >= cap) return;
    if (rp == s.q && l == s.p) {
      emit();
      return;
    }
    const int kk = k_in - s.count3(s.p, r, rp) - 1;
    if (kk < 3) return;
    const double tri = s.area3(s.p, r, rp);
    if (rp != s.q) {
      s.right_steps(r, rp, [&](int r2) {
        if (static_cast<int>(out.size()) >= cap) return;
        const double v = s.solveR(rp, r2, l, kk);
        if (!has_value(v) || tri + v != rest) return;
        if (r2 != s.q) right_seq.push_back(r2);
        selfR(selfR, selfL, rp, r2, l, kk, v);
        if (r2 != s.q) right_seq.pop_back();
      });
    }
    if (l != s.p) {
      s.left_switches(r, rp, l, [&](int l2) {
        if (static_cast<int>(out.size()) >= cap) return;
        const double v = s.solveL(l, l2, rp, kk);
        if (!has_value(v) || tri + v != rest) return;
        if (l2 != s.p) left_seq.push_back(l2);
        selfL(selfR, selfL, l, l2, rp, kk, v);
        if (l2 != s.p) left_seq.pop_back();
      });
    }
  };

  auto dfsL = [&](auto&& selfR, auto&& selfL, int l, int lp, int r, int k_in,
                  double rest) -> void {
    if (static_cast<int>(out.size()) >= cap) return;
    if (lp == s.p && r == s.q) {
      emit();
      return;
    }
    const int kk = k_in - s.count3(s.q, l, lp) - 1;
    if (kk < 3) return;
    const double tri = s.area3(s.q, l, lp);
    if (lp != s.p) {
      s.left_steps(l, lp, [&](int l2) {
        if (static_cast<int>(out.size()) >= cap) return;
        const double v = s.solveL(lp, l2, r, kk);
        if (!has_value(v) || tri + v != rest) return;
        if (l2 != s.p) left_seq.push_back(l2);
        selfL(selfR, selfL, lp, l2, r, kk, v);
        if (l2 != s.p) left_seq.pop_back();
      });
    }
    if (r != s.q) {
      s.right_switches(l, lp, r, [&](int r2) {
        if (static_cast<int>(out.size()) >= cap) return;
        const double v = s.solveR(r, r2, lp, kk);
        if (!has_value(v) || tri + v != rest) return;
        if (r2 != s.q) right_seq.push_back(r2);
        selfR(selfR, selfL, r, r2, lp, kk, v);
        if (r2 != s.q) right_seq.pop_back();
      });
    }
  };

  s.initial_states_r([&](int r1, int r2, int l1) {
    if (static_cast<int>(out.size()) >= cap) return;
    const double v = s.solveR(r1, r2, l1, k);
    if (!has_value(v) || v != target) return;
    right_seq.clear();
    left_seq.clear();
    right_seq.push_back(r1);
    if (r2 != s.q) right_seq.push_back(r2);
    if (l1 != s.p) left_seq.push_back(l1);
    dfsR(dfsR, dfsL, r1, r2, l1, k, v);
  });
  s.initial_states_l([&](int l1, int l2, int r1) {
    if (static_cast<int>(out.size()) >= cap) return;
    const double v = s.solveL(l1, l2, r1, k);
    if (!has_value(v) || v != target) return;
    right_seq.clear();
    left_seq.clear();
    left_seq.push_back(l1);
    if (l2 != s.p) left_seq.push_back(l2);
    if (r1 != s.q) right_seq.push_back(r1);
    dfsL(dfsR, dfsL, l1, l2, r1, k, v);
  });
  return out;
}

double solve_pair(const PointSet& ps, const CountOracle& oracle, const DiameterPairTask& task,
                  int k, long long* entries_created) {
  PairSolver solver(ps, oracle, task);
  const double v = solver.solve(k);
  if (entries_created) *entries_created += solver.entries_created();
  return v;
}

std::vector<DiameterPairTask> pair_schedule(const PointSet& ps, double max_diameter) {
  const int n = ps.size();
  const double d2 = max_diameter * max_diameter;
  std::vector<DiameterPairTask> tasks;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!(squared_distance(ps[i], ps[j]) <= d2)) continue;
      DiameterPairTask t;
      const bool i_lower = y_less(ps[i], ps[j]);
      t.p_pos = i_lower ? i : j;
      t.q_pos = i_lower ? j : i;
      t.lune = lune_positions(ps, t.p_pos, t.q_pos);
      t.lune_count = static_cast<int>(t.lune.size());
      tasks.push_back(std::move(t));
    }
  }
  std::sort(tasks.begin(), tasks.end(), [&](const DiameterPairTask& a, const DiameterPairTask& b) {
    if (a.lune_count != b.lune_count) return a.lune_count > b.lune_count;
    if (ps[a.p_pos].id != ps[b.p_pos].id) return ps[a.p_pos].id < ps[b.p_pos].id;
    return ps[a.q_pos].id < ps[b.q_pos].id;
  });
  return tasks;
}

namespace {

// Minimum over all tasks at fixed k, plus the tie-broken winning polygon.
std::optional<RegionSolution> best_over_tasks(const PointSet& ps, const CountOracle& oracle,
                                              const std::vector<DiameterPairTask>& tasks, int k,
                                              AdRunStats* stats, bool prune, int cap = 256) {
  double best = kNoSolution;
  std::vector<const DiameterPairTask*> winners;
  long long considered = 0, pruned = 0, entries = 0;
  for (const DiameterPairTask& t : tasks) {
    if (prune && t.lune_count < k) {
      ++pruned;
      continue;
    }
    ++considered;
    PairSolver solver(ps, oracle, t);
    const double v = solver.solve(k);
    entries += solver.entries_created();
    if (!has_value(v)) continue;
    if (!has_value(best) || v < best) {
      best = v;
      winners.clear();
      winners.push_back(&t);
    } else if (v == best) {
      winners.push_back(&t);
    }
  }
  if (stats) {
    stats->pairs_considered = considered;
    stats->pairs_pruned = pruned;
    stats->entries_created += entries;
    if (static_cast<int>(stats->min_area_by_k.size()) > k) {
      stats->min_area_by_k[static_cast<std::size_t>(k)] =
          min_keep(stats->min_area_by_k[static_cast<std::size_t>(k)], best);
    }
  }
  if (!has_value(best)) return std::nullopt;
  std::vector<int> best_seq;
  int budget = cap;
  for (const DiameterPairTask* t : winners) {
    if (budget <= 0) break;
    PairSolver solver(ps, oracle, *t);
    for (const auto& seq : solver.reconstruct(k, best, budget)) {
      --budget;
      if (best_seq.empty() || better_by_tie_rule(ps, seq, best_seq)) best_seq = seq;
    }
  }
  return make_region_solution(ps, best_seq, true);
}

}  // namespace

std::optional<RegionSolution> min_area_k_diameter(const PointSet& ps, int k, double max_diameter,
                                                  AdRunStats* stats, bool prune) {
  const int n = ps.size();
  if (k < 3 || k > n) {
    throw std::invalid_argument("min_area_k_diameter: k must satisfy 3 <= k <= n (k=" +
                                std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  if (!(max_diameter > 0.0)) {
    throw std::invalid_argument("min_area_k_diameter: max diameter must be positive");
  }
  const auto t0 = std::chrono::steady_clock::now();
  CountOracle oracle(ps);
  const auto tasks = pair_schedule(ps, max_diameter);
  if (stats) {
    stats->entries_created = 0;
    stats->min_area_by_k.assign(static_cast<std::size_t>(n) + 1, kNoSolution);
  }
  auto out = best_over_tasks(ps, oracle, tasks, k, stats, prune);
  if (stats) stats->wall_time_s = seconds_since(t0);
  return out;
}

std::optional<RegionSolution> max_points_under_area_diameter(const PointSet& ps, double max_area,
                                                             double max_diameter,
                                                             AdRunStats* stats, bool prune) {
  if (!(max_area > 0.0) || !std::isfinite(max_area)) {
    throw std::invalid_argument("max_points_under_area_diameter: max area must be positive");
  }
  if (!(max_diameter > 0.0)) {
    throw std::invalid_argument("max_points_under_area_diameter: max diameter must be positive");
  }
  const int n = ps.size();
  const auto t0 = std::chrono::steady_clock::now();
  if (stats) {
    stats->entries_created = 0;
    stats->min_area_by_k.assign(static_cast<std::size_t>(n) + 1, kNoSolution);
  }
  std::optional<RegionSolution> out;
  if (n >= 3) {
    CountOracle oracle(ps);
    const auto tasks = pair_schedule(ps, max_diameter);
    int best_k = 0;
    // Doubling rounds on the cardinality horizon (4, 8, ... capped at n).
    for (int kmax = std::min(4, n);; kmax = std::min(n, 2 * kmax)) {
      for (const DiameterPairTask& t : tasks) {
        if (prune && t.lune_count < best_k) break;  // sorted by lune count
        PairSolver solver(ps, oracle, t);
        for (int k = std::min(kmax, t.lune_count); k > std::max(2, best_k); --k) {
          const double v = solver.solve(k);
          if (stats && has_value(v)) {
            stats->min_area_by_k[static_cast<std::size_t>(k)] =
                min_keep(stats->min_area_by_k[static_cast<std::size_t>(k)], v);
          }
          if (has_value(v) && v <= max_area) {
            best_k = k;
            break;
          }
        }
        if (stats) stats->entries_created += solver.entries_created();
      }
      if (best_k < kmax || kmax >= n) break;
    }
    // Definitive pass at the winning cardinality: minimum area and winner
    // reconstruction; this pass also provides the pair accounting reported.
    if (best_k >= 3) {
      out = best_over_tasks(ps, oracle, tasks, best_k, stats, prune);
    } else if (stats) {
      stats->pairs_considered = 0;
      stats->pairs_pruned = static_cast<long long>(tasks.size());
    }
  }
  if (stats) stats->wall_time_s = seconds_since(t0);
  return out;
}

}  // namespace kgon
