/*
 * Sweep harness: evaluate the grouped plan against the single-group BF-IA
 * baseline across a range of resource budgets.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#ifndef GIA_SWEEP_HPP
#define GIA_SWEEP_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gia/cache.hpp"
#include "gia/ia_math.hpp"
#include "gia/patterns.hpp"
#include "gia/rational.hpp"
#include "gia/solvers.hpp"

namespace gia {

enum class Algo { optimal, greedy, brute };

inline const char* to_string(Algo a) {
  switch (a) {
    case Algo::optimal: return "optimal";
    case Algo::greedy: return "greedy";
    default: return "brute";
  }
}

/// One sweep row: the grouped-plan MG next to the single-group BF-IA MG.
/// mg_bf is present only when M is a feasible dimension for all K' users
/// (BF-IA has no solution elsewhere).
struct SweepPoint {
  Dim M = 0;
  std::optional<Rational> mg_bf;
  Rational mg_gia;
  Algo algo = Algo::greedy;
  std::int64_t wall_ms = 0;
};

struct SweepConfig {
  std::int64_t users = 0;
  std::int64_t antennas_per_user = 1;
  Dim m_min = 1;
  Dim m_max = 0;
  Algo algo = Algo::greedy;
  BuildMode mode = BuildMode::sparse;
  bool any_m = false;  // sample every `step`-th M instead of ladder points
  Dim step = 1;
  std::optional<std::filesystem::path> cache_dir;
  GenLimits gen_limits;
  SolveLimits solve_limits;
};

/// Cache-aware pattern-set construction shared by the sweep and the CLI.
inline PatternSet build_sorted_cached(
    std::int64_t K, Dim M, BuildMode mode, const GenLimits& limits,
    const std::optional<std::filesystem::path>& cache_dir,
    std::ostream* warn = nullptr, bool* cache_hit = nullptr) {
  const GenMode resolved =
      (mode == BuildMode::exhaustive ||
       (mode == BuildMode::automatic && M <= limits.exhaustive_limit))
          ? GenMode::exhaustive
          : GenMode::sparse;
  if (cache_hit) *cache_hit = false;
  if (cache_dir) {
    if (auto ps = cache_load(*cache_dir, K, M, resolved, warn)) {
      if (cache_hit) *cache_hit = true;
      return *std::move(ps);
    }
  }
  PatternSet ps = build_sorted(K, M, mode, limits);
  if (cache_dir) cache_store(ps, *cache_dir);
  return ps;
}

inline Plan solve_with(Algo algo, const PatternSet& ps, Dim M,
                       const SolveLimits& limits) {
  switch (algo) {
    case Algo::optimal: return solve_optimal(ps, M, limits);
    case Algo::greedy: return solve_greedy(ps, M);
    default: return solve_brute(ps, M, limits);
  }
}

/// Run the sweep: one point per ladder dimension of K' = K*T users within
/// [m_min, m_max] (or per sampled M with any_m), in increasing M order.
inline std::vector<SweepPoint> run_sweep(const SweepConfig& cfg,
                                         std::ostream* warn = nullptr) {
  if (cfg.m_max < 1)
    throw std::domain_error("run_sweep: requires m_max >= 1");
  if (cfg.step < 1) throw std::domain_error("run_sweep: requires step >= 1");
  const std::int64_t Kp =
      virtual_users(cfg.users, cfg.antennas_per_user);
  if (Kp < 3)
    throw std::invalid_argument(
        "run_sweep: needs K*T >= 3 (below that, orthogonal multiplexing is "
        "the whole story and there is nothing to sweep)");

  // The M values to visit; off-ladder points carry no BF-IA column.
  std::vector<std::pair<Dim, std::optional<std::int64_t>>> domain;
  if (cfg.any_m) {
    for (Dim M = std::max<Dim>(cfg.m_min, 1); M <= cfg.m_max; M += cfg.step)
      domain.emplace_back(M, invert_dim(Kp, M));
  } else {
    for (const auto& entry : feasible_dims(Kp, cfg.m_max).entries)
      if (entry.m >= cfg.m_min) domain.emplace_back(entry.m, entry.n_star);
  }

  std::vector<SweepPoint> points;
  points.reserve(domain.size());
  for (const auto& [M, n_star] : domain) {
    const auto t0 = std::chrono::steady_clock::now();
    const PatternSet ps = build_sorted_cached(Kp, M, cfg.mode, cfg.gen_limits,
                                              cfg.cache_dir, warn);
    const Plan plan = solve_with(cfg.algo, ps, M, cfg.solve_limits);
    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    SweepPoint pt;
    pt.M = M;
    if (n_star) pt.mg_bf = mg_bf(Kp, *n_star);
    pt.mg_gia = plan.total_mg;
    pt.algo = cfg.algo;
    pt.wall_ms = wall;
    points.push_back(std::move(pt));
  }
  return points;
}

}  // namespace gia

#endif
