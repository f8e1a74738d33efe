/*
 * Solvers for the group-pattern selection problem: exact unbounded-knapsack
 * dynamic programming with solution recovery, the one-pass greedy with its
 * 1/2 guarantee, and a brute-force enumerator used as a test oracle.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#ifndef GIA_SOLVERS_HPP
#define GIA_SOLVERS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gia/errors.hpp"
#include "gia/ia_math.hpp"
#include "gia/patterns.hpp"
#include "gia/rational.hpp"

namespace gia {

/// One chosen pattern and how many copies of it the plan schedules.
struct PlanChoice {
  GroupPattern pattern;
  std::uint64_t count = 0;

  friend bool operator==(const PlanChoice&, const PlanChoice&) = default;
};

/// A resource partition: chosen patterns, their exact objective z, and the
/// resulting total MG r = 1 + z. Leftover dimensions stay on the orthogonal
/// baseline (each worth MG 1, i.e. value 0).
struct Plan {
  Instance instance;
  std::vector<PlanChoice> choices;
  Dim used = 0;
  Dim leftover = 0;
  Rational z;
  Rational total_mg;
};

struct SolveLimits {
  Dim dp_capacity_limit = Dim(1) << 24;
  std::size_t brute_max_items = 30;
  Dim brute_max_ratio = 20;  // M / min(m_j)
};

/// Final DP state, exposed for inspection: value[c] / value_denominator is
/// the exact best objective using at most c dimensions, and choice[c] is the
/// last pattern index that achieved it (-1 = none, the empty plan).
struct DpTable {
  std::vector<Int> value;
  std::vector<std::int32_t> choice;
  Int value_denominator = 1;
  std::uint64_t relaxations = 0;

  Rational value_at(Dim capacity) const {
    return Rational(value.at(static_cast<std::size_t>(capacity)),
                    value_denominator);
  }
};

namespace detail {

// All pattern values share the structure (integer)/(2n*+N+2), pre-scaled by
// M. Lifting them onto the common denominator L turns the DP into integer
// arithmetic: value[j] = v_j * M * L, and z = table / (M * L) at the end.
struct ScaledValues {
  Int common_denominator = 1;  // L
  std::vector<Int> value;
};

inline ScaledValues scale_values(const std::vector<GroupPattern>& entries,
                                 Dim M) {
  ScaledValues sv;
  std::vector<Rational> scaled;
  scaled.reserve(entries.size());
  for (const auto& e : entries) {
    scaled.push_back(e.v * Rational(Int(M)));
    sv.common_denominator =
        boost::multiprecision::lcm(sv.common_denominator, scaled.back().den());
  }
  sv.value.reserve(entries.size());
  for (const auto& r : scaled)
    sv.value.push_back(r.num() * (sv.common_denominator / r.den()));
  return sv;
}

inline Plan assemble_plan(const PatternSet& ps, Dim M,
                          const std::vector<std::uint64_t>& counts,
                          const Rational& z) {
  Plan plan;
  plan.instance = Instance{ps.K, 1, M};
  Dim used = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    plan.choices.push_back(PlanChoice{ps.entries[j], counts[j]});
    used += static_cast<Dim>(counts[j]) * ps.entries[j].m;
  }
  plan.used = used;
  plan.leftover = M - used;
  plan.z = z;
  plan.total_mg = Rational(1) + z;
  return plan;
}

}  // namespace detail

/// Exact optimum of the unbounded knapsack over a sorted pattern set:
/// a capacity-indexed table relaxed once per (pattern, capacity) pair, with
/// ">=" so later-scanned patterns overwrite equal values, then a walk over
/// the recorded choices to recover one optimal multiset. Recovery stops when
/// capacity reaches 0 or no pattern improved the cell; the remaining
/// capacity is reported as leftover. O(M W) relaxations.
inline Plan solve_optimal(const PatternSet& ps, Dim M,
                          const SolveLimits& limits = {},
                          DpTable* table_out = nullptr) {
  if (ps.stage != Stage::sorted)
    throw std::invalid_argument("solve_optimal: pattern set must be sorted");
  if (M < 1) throw std::domain_error("solve_optimal: requires M >= 1");
  if (M > limits.dp_capacity_limit)
    throw LimitError("solve_optimal: M=" + std::to_string(M) +
                     " exceeds the DP capacity limit (" +
                     std::to_string(limits.dp_capacity_limit) +
                     "); use greedy");

  const auto& entries = ps.entries;
  const auto sv = detail::scale_values(entries, M);
  DpTable table;
  table.value.assign(static_cast<std::size_t>(M) + 1, Int(0));
  table.choice.assign(static_cast<std::size_t>(M) + 1, -1);
  table.value_denominator = Int(M) * sv.common_denominator;

  Int candidate;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const Dim mj = entries[j].m;
    if (mj > M) continue;
    const Int& vj = sv.value[j];
    for (Dim cap = mj; cap <= M; ++cap) {
      ++table.relaxations;
      candidate = table.value[static_cast<std::size_t>(cap - mj)];
      candidate += vj;
      if (candidate >= table.value[static_cast<std::size_t>(cap)]) {
        table.value[static_cast<std::size_t>(cap)] = candidate;
        table.choice[static_cast<std::size_t>(cap)] =
            static_cast<std::int32_t>(j);
      }
    }
  }

  std::vector<std::uint64_t> counts(entries.size(), 0);
  Dim cap = M;
  while (cap > 0 && table.choice[static_cast<std::size_t>(cap)] >= 0) {
    const auto j =
        static_cast<std::size_t>(table.choice[static_cast<std::size_t>(cap)]);
    ++counts[j];
    cap -= entries[j].m;
  }

  const Rational z(table.value[static_cast<std::size_t>(M)],
                   table.value_denominator);
  Plan plan = detail::assemble_plan(ps, M, counts, z);
  if (table_out) *table_out = std::move(table);
  return plan;
}

/// One pass over the efficiency-sorted patterns, packing floor((M-used)/m_j)
/// copies of each pattern that still fits. O(W); never worse than half the
/// optimum.
inline Plan solve_greedy(const PatternSet& ps, Dim M) {
  if (ps.stage != Stage::sorted)
    throw std::invalid_argument("solve_greedy: pattern set must be sorted");
  if (M < 1) throw std::domain_error("solve_greedy: requires M >= 1");

  std::vector<std::uint64_t> counts(ps.entries.size(), 0);
  Dim used = 0;
  Rational z(0);
  for (std::size_t j = 0; j < ps.entries.size(); ++j) {
    const Dim mj = ps.entries[j].m;
    if (used + mj > M) continue;
    const Dim x = (M - used) / mj;
    counts[j] = static_cast<std::uint64_t>(x);
    used += x * mj;
    z += ps.entries[j].v * Rational(Int(x));
  }
  return detail::assemble_plan(ps, M, counts, z);
}

/// Exhaustive depth-first enumeration of every count vector with total
/// weight <= M. Independent of the DP; guarded because the search space is
/// the number of multisets of pattern dimensions fitting in M.
inline Plan solve_brute(const PatternSet& ps, Dim M,
                        const SolveLimits& limits = {}) {
  if (ps.stage != Stage::pruned && ps.stage != Stage::sorted)
    throw std::invalid_argument("solve_brute: pattern set must be pruned or sorted");
  if (M < 1) throw std::domain_error("solve_brute: requires M >= 1");

  const auto& entries = ps.entries;
  if (entries.empty())
    return detail::assemble_plan(ps, M, {}, Rational(0));

  if (entries.size() > limits.brute_max_items)
    throw LimitError("solve_brute: " + std::to_string(entries.size()) +
                     " patterns exceed the brute-force guard (" +
                     std::to_string(limits.brute_max_items) + ")");
  Dim min_m = entries.front().m;
  for (const auto& e : entries) min_m = std::min(min_m, e.m);
  if (M / min_m > limits.brute_max_ratio)
    throw LimitError("solve_brute: M/min(m)=" + std::to_string(M / min_m) +
                     " exceeds the brute-force guard (" +
                     std::to_string(limits.brute_max_ratio) +
                     "); instance too large for brute force");

  const auto sv = detail::scale_values(entries, M);
  std::vector<std::uint64_t> current(entries.size(), 0);
  std::vector<std::uint64_t> best_counts(entries.size(), 0);
  Int best(-1);

  const std::function<void(std::size_t, Dim, Int)> walk =
      [&](std::size_t idx, Dim capacity, Int z) {
        if (idx == entries.size()) {
          if (z > best) {
            best = std::move(z);
            best_counts = current;
          }
          return;
        }
        const Dim mj = entries[idx].m;
        for (Dim x = capacity / mj; x >= 0; --x) {
          current[idx] = static_cast<std::uint64_t>(x);
          walk(idx + 1, capacity - x * mj, z + sv.value[idx] * x);
        }
        current[idx] = 0;
      };
  walk(0, M, Int(0));

  const Rational z(best, Int(M) * sv.common_denominator);
  return detail::assemble_plan(ps, M, best_counts, z);
}

/// Total MG of a plan, r = 1 + z. Also evaluated through the accounting
/// identity sum_j x_j (m_j / M) r_BF(k_j, n*_j) + leftover / M; the two
/// routes must agree exactly.
inline Rational plan_total_mg(const Plan& plan) {
  const Dim M = plan.instance.resources;
  const Rational direct = Rational(1) + plan.z;
  Rational accounted(Int(plan.leftover), Int(M));
  for (const auto& c : plan.choices) {
    const Rational group_mg = mg_bf(c.pattern.k, c.pattern.n_star);
    accounted += Rational(Int(c.pattern.m) * c.count, Int(M)) * group_mg;
  }
  if (accounted != direct)
    throw std::logic_error("plan_total_mg: accounting identity violated");
  return direct;
}

}  // namespace gia

#endif
