/*
 * Group-pattern universe: enumeration over feasible ladders, dominance
 * pruning, efficiency sort, and a sparse construction that skips the dense
 * k=3 enumeration for large resource budgets.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#ifndef GIA_PATTERNS_HPP
#define GIA_PATTERNS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gia/errors.hpp"
#include "gia/ia_math.hpp"
#include "gia/rational.hpp"

namespace gia {

/// e = {k, m, v}: schedule k users on m of the M dimensions, worth relative
/// MG v over orthogonal multiplexing. n_star is the ladder index behind m
/// and rho = v/m the value per dimension. k < 3 patterns carry v = 0 and are
/// never generated: leaving their dimensions as leftover is value-equivalent.
struct GroupPattern {
  std::int64_t k = 0;
  Dim m = 0;
  std::int64_t n_star = 0;
  Rational v;
  Rational rho;

  friend bool operator==(const GroupPattern&, const GroupPattern&) = default;
};

enum class GenMode { exhaustive, sparse };
enum class Stage { raw, pruned, sorted };

inline const char* to_string(GenMode m) {
  return m == GenMode::exhaustive ? "exhaustive" : "sparse";
}
inline const char* to_string(Stage s) {
  switch (s) {
    case Stage::raw: return "raw";
    case Stage::pruned: return "pruned";
    default: return "sorted";
  }
}

struct GenLimits {
  Dim exhaustive_limit = Dim(1) << 24;
};

/// The pattern list for one (K, M) problem, together with how it was built
/// and how far the pipeline has taken it. Immutable once built.
struct PatternSet {
  std::int64_t K = 0;
  Dim M = 0;
  GenMode mode = GenMode::exhaustive;
  Stage stage = Stage::raw;
  std::vector<GroupPattern> entries;

  std::size_t size() const { return entries.size(); }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;
};

namespace detail {

inline GroupPattern make_pattern(std::int64_t k, std::int64_t n_star, Dim m,
                                 Dim M) {
  const std::int64_t N = (k - 1) * (k - 2) - 1;
  const Int scaled_den = Int(2 * n_star + N + 2);
  // v = (m/M) (k-2)(n*+1) / (2n*+N+2), rho = v/m
  Rational v(Int(m) * (k - 2) * (n_star + 1), Int(M) * scaled_den);
  Rational rho(Int(k - 2) * (n_star + 1), Int(M) * scaled_den);
  return GroupPattern{k, m, n_star, std::move(v), std::move(rho)};
}

/// Append every ladder pattern with k_lo <= k <= k_hi and m <= M.
inline void enumerate_ladders(std::int64_t k_lo, std::int64_t k_hi, Dim M,
                              std::vector<GroupPattern>& out) {
  for (std::int64_t k = std::max<std::int64_t>(3, k_lo); k <= k_hi; ++k) {
    // Smallest ladder point is N + 2 = (k-1)(k-2) + 1; computed wide since
    // k_hi may come from a virtual-user product.
    if (Int(k - 1) * (k - 2) + 1 > M) break;
    const std::int64_t N = interference_index(k);
    for (std::int64_t n = 0;; ++n) {
      const Int m = ladder_dim_int(n, N);
      if (m > M) break;
      out.push_back(make_pattern(k, n, static_cast<Dim>(m), M));
    }
  }
}

/// Dominance removal on a bare entry list. A pattern is removed exactly when
/// some pattern with m' <= m has strictly greater value; patterns tying the
/// running maximum at a larger m survive. Exact (m, v) duplicates collapse
/// to the smallest k. Output is sorted by m ascending.
inline std::vector<GroupPattern> prune_entries(std::vector<GroupPattern> es) {
  std::sort(es.begin(), es.end(),
            [](const GroupPattern& a, const GroupPattern& b) {
              if (a.m != b.m) return a.m < b.m;
              if (a.v != b.v) return a.v > b.v;
              return a.k < b.k;
            });
  std::vector<GroupPattern> kept;
  kept.reserve(es.size());
  for (auto& e : es) {
    if (kept.empty() || e.v > kept.back().v) {
      kept.push_back(std::move(e));
    } else if (e.v == kept.back().v && e.m != kept.back().m) {
      kept.push_back(std::move(e));  // equal value at strictly larger m
    }
  }
  kept.shrink_to_fit();
  return kept;
}

inline void sort_entries_by_efficiency(std::vector<GroupPattern>& es) {
  std::sort(es.begin(), es.end(),
            [](const GroupPattern& a, const GroupPattern& b) {
              if (a.rho != b.rho) return a.rho > b.rho;
              if (a.m != b.m) return a.m < b.m;
              return a.k < b.k;
            });
}

}  // namespace detail

PatternSet generate_sparse(std::int64_t K, Dim M, const GenLimits& limits);

/// Build the raw pattern universe E_K^M: one entry per (k, feasible m <= M)
/// with 3 <= k <= K. In sparse mode this forwards to generate_sparse and the
/// result arrives already pruned and sorted.
inline PatternSet generate(std::int64_t K, Dim M,
                           GenMode mode = GenMode::exhaustive,
                           const GenLimits& limits = {}) {
  if (K < 1) throw std::domain_error("generate: requires K >= 1");
  if (M < 1) throw std::domain_error("generate: requires M >= 1");
  if (mode == GenMode::sparse) return generate_sparse(K, M, limits);
  if (M > limits.exhaustive_limit)
    throw LimitError("generate: M=" + std::to_string(M) +
                     " exceeds the exhaustive limit (" +
                     std::to_string(limits.exhaustive_limit) +
                     "); use sparse mode");
  PatternSet ps{K, M, GenMode::exhaustive, Stage::raw, {}};
  detail::enumerate_ladders(3, K, M, ps.entries);
  return ps;
}

/// Remove dominated patterns. Accepts raw or pruned input (pruning is
/// idempotent); the result is an antichain under strict-value dominance.
inline PatternSet prune(const PatternSet& ps) {
  if (ps.stage == Stage::sorted)
    throw std::invalid_argument("prune: expected a raw or pruned set");
  PatternSet out{ps.K, ps.M, ps.mode, Stage::pruned,
                 detail::prune_entries(ps.entries)};
  return out;
}

/// Sort a pruned set by efficiency, non-increasing; ties break toward
/// smaller m, then smaller k, so downstream plans are reproducible.
inline PatternSet sort_by_efficiency(const PatternSet& ps) {
  if (ps.stage != Stage::pruned)
    throw std::invalid_argument("sort_by_efficiency: expected a pruned set");
  PatternSet out = ps;
  out.stage = Stage::sorted;
  detail::sort_entries_by_efficiency(out.entries);
  return out;
}

/// Same entry set as sort_by_efficiency(prune(generate(K, M, exhaustive)))
/// but without walking every k=3 dimension: the k >= 4 ladders are sparse in
/// M, and the k=3 survivors against their running value maximum form
/// contiguous odd ranges computed arithmetically from v3 = (n*+1)/M.
inline PatternSet generate_sparse(std::int64_t K, Dim M,
                                  const GenLimits& limits = {}) {
  if (K < 1) throw std::domain_error("generate_sparse: requires K >= 1");
  if (M < 1) throw std::domain_error("generate_sparse: requires M >= 1");
  if (K < 4 && M > limits.exhaustive_limit)
    throw LimitError(
        "generate_sparse: for K < 4 every k=3 pattern is undominated, so the "
        "result itself has ~M/2 entries; refusing to materialize");

  std::vector<GroupPattern> high;  // k >= 4
  detail::enumerate_ladders(4, K, M, high);
  high = detail::prune_entries(high);  // m ascending, v non-decreasing

  std::vector<GroupPattern> merged;
  if (K >= 3 && M >= 3) {
    // Emit k=3 survivors per gap between consecutive kept k>=4 patterns.
    // Within [gap_lo, gap_hi) the running maximum V is constant, and
    // {3, m=2n+3} survives iff (n+1)/M >= V, i.e. n+1 >= ceil(V*M).
    const auto emit_range = [&](Dim gap_lo, Dim gap_hi, const Rational& V) {
      if (gap_lo < 3) gap_lo = 3;
      if (gap_hi > M + 1) gap_hi = M + 1;
      if (gap_lo >= gap_hi) return;
      Dim start = 3;
      if (!V.is_zero()) {
        const Rational t = V * Rational(Int(M));
        const Int n_min_plus1 = (t.num() + t.den() - 1) / t.den();  // ceil
        const Int first_m = 2 * n_min_plus1 + 1;                    // 2n+3
        if (first_m > gap_hi) return;
        if (first_m > start) start = static_cast<Dim>(first_m);
      }
      if (start < gap_lo) start = gap_lo;
      if (start % 2 == 0) ++start;
      for (Dim m = start; m < gap_hi; m += 2)
        merged.push_back(detail::make_pattern(3, (m - 3) / 2, m, M));
    };

    Rational running_max(0);
    Dim cursor = 3;
    for (const auto& q : high) {
      if (q.m > cursor) {
        emit_range(cursor, q.m, running_max);
        cursor = q.m;
      }
      if (q.v > running_max) running_max = q.v;
    }
    emit_range(cursor, M + 1, running_max);
  }

  merged.insert(merged.end(), std::make_move_iterator(high.begin()),
                std::make_move_iterator(high.end()));
  merged = detail::prune_entries(std::move(merged));
  detail::sort_entries_by_efficiency(merged);
  return PatternSet{K, M, GenMode::sparse, Stage::sorted, std::move(merged)};
}

/// Resolve the pattern pipeline for solver input: exhaustive below the
/// configured limit, sparse above it when asked to decide automatically.
enum class BuildMode { automatic, exhaustive, sparse };

inline PatternSet build_sorted(std::int64_t K, Dim M,
                               BuildMode mode = BuildMode::automatic,
                               const GenLimits& limits = {}) {
  const bool exhaustive =
      mode == BuildMode::exhaustive ||
      (mode == BuildMode::automatic && M <= limits.exhaustive_limit);
  if (exhaustive)
    return sort_by_efficiency(prune(generate(K, M, GenMode::exhaustive, limits)));
  return generate_sparse(K, M, limits);
}

}  // namespace gia

#endif
