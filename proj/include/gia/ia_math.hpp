/*
 * Combinatorial core: feasible-dimension ladders, BF-IA and OIA
 * multiplexing gains, group-pattern value/efficiency closed forms, and
 * the multi-antenna virtual-user mapping. Everything is exact.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#ifndef GIA_IA_MATH_HPP
#define GIA_IA_MATH_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gia/rational.hpp"

namespace gia {

/// Extended-channel dimensions and resource budgets. Ladder dimensions grow
/// combinatorially, so the library guards conversions out of big-int space.
using Dim = std::int64_t;

/// C(a, b), exact. Returns 0 when b > a. Multiplicative evaluation with a
/// division at every step keeps intermediates at C(a, i) size.
inline Int binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::domain_error("binomial: negative argument");
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  Int r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // C(a-b+i, i) is integral, so this divides exactly
  }
  return r;
}

/// N = (k-1)(k-2) - 1, the interference-index of a k-user group. Only
/// defined for k >= 3; smaller groups use orthogonal multiplexing and are
/// handled by convention at the call sites.
inline std::int64_t interference_index(std::int64_t k) {
  if (k < 3) throw std::domain_error("interference_index: requires k >= 3");
  return (k - 1) * (k - 2) - 1;
}

/// One feasible extended-channel dimension: k users can align interference
/// over exactly m dimensions, where m = C(n*+N+1, N) + C(n*+N, N).
struct LadderEntry {
  std::int64_t k = 0;
  std::int64_t n_star = 0;
  Dim m = 0;

  friend bool operator==(const LadderEntry&, const LadderEntry&) = default;
};

namespace detail {

inline Dim to_dim(const Int& x, const char* what) {
  if (x > std::numeric_limits<Dim>::max())
    throw std::overflow_error(std::string(what) + ": dimension exceeds 2^63");
  return static_cast<Dim>(x);
}

inline Int ladder_dim_int(std::int64_t n_star, std::int64_t N) {
  return binomial(n_star + N + 1, N) + binomial(n_star + N, N);
}

}  // namespace detail

inline LadderEntry ladder_dim(std::int64_t k, std::int64_t n_star) {
  const std::int64_t N = interference_index(k);
  if (n_star < 0) throw std::domain_error("ladder_dim: n_star must be >= 0");
  const Int m = detail::ladder_dim_int(n_star, N);
  return LadderEntry{k, n_star, detail::to_dim(m, "ladder_dim")};
}

/// The ladder L_k restricted to m <= m_max. For k < 3 every positive integer
/// is feasible (orthogonal multiplexing); that case is reported as a range
/// sentinel and never materialized entry by entry.
struct FeasibleDims {
  std::int64_t k = 0;
  Dim m_max = 0;
  bool all_integers = false;          // k < 3: the "ladder" is 1..m_max
  std::vector<LadderEntry> entries;   // k >= 3: increasing in m

  friend bool operator==(const FeasibleDims&, const FeasibleDims&) = default;
};

inline FeasibleDims feasible_dims(std::int64_t k, Dim m_max) {
  if (k < 1) throw std::domain_error("feasible_dims: requires k >= 1");
  if (m_max < 1) throw std::domain_error("feasible_dims: requires m_max >= 1");
  FeasibleDims out{k, m_max, k < 3, {}};
  if (k < 3) return out;
  const std::int64_t N = interference_index(k);
  for (std::int64_t n = 0;; ++n) {
    const Int m = detail::ladder_dim_int(n, N);
    if (m > m_max) break;
    out.entries.push_back(LadderEntry{k, n, static_cast<Dim>(m)});
  }
  return out;
}

/// Inverse of ladder_dim in m: the n* with ladder_dim(k, n*).m == m, if m is
/// a feasible dimension for k users. m is strictly increasing in n*, so a
/// doubling search brackets it and a binary search settles it.
inline std::optional<std::int64_t> invert_dim(std::int64_t k, Dim m) {
  const std::int64_t N = interference_index(k);
  if (m < N + 2) return std::nullopt;  // smallest ladder point is N + 2
  std::int64_t lo = 0, hi = 1;
  while (detail::ladder_dim_int(hi, N) < m) {
    lo = hi;
    hi *= 2;
  }
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (detail::ladder_dim_int(mid, N) < m)
      lo = mid + 1;
    else
      hi = mid;
  }
  return detail::ladder_dim_int(lo, N) == m ? std::optional(lo) : std::nullopt;
}

/// BF-IA multiplexing gain, closed form:
/// r = ((k-1)(n*+1) + n* + N + 1) / (2n* + N + 2).
inline Rational mg_bf(std::int64_t k, std::int64_t n_star) {
  const std::int64_t N = interference_index(k);
  if (n_star < 0) throw std::domain_error("mg_bf: n_star must be >= 0");
  return Rational(Int((k - 1) * (n_star + 1) + n_star + N + 1),
                  Int(2 * n_star + N + 2));
}

/// BF-IA multiplexing gain from the per-user stream counts
/// d1 = C(n*+N+1, N), d2 = C(n*+N, N): r = (d1 + (k-1) d2) / (d1 + d2).
/// Algebraically equal to mg_bf; kept as an independent route for checking.
inline Rational mg_bf_streams(std::int64_t k, std::int64_t n_star) {
  const std::int64_t N = interference_index(k);
  if (n_star < 0) throw std::domain_error("mg_bf_streams: n_star must be >= 0");
  const Int d1 = binomial(n_star + N + 1, N);
  const Int d2 = binomial(n_star + N, N);
  return Rational(d1 + (k - 1) * d2, d1 + d2);
}

/// Aggregate OIA multiplexing gain over m = (n+1)^N + n^N dimensions:
/// r = ((n+1)^N + (k-1) n^N) / m.
struct OiaPoint {
  Dim m = 0;
  Rational r;
};

inline OiaPoint mg_oia(std::int64_t k, std::int64_t n) {
  const std::int64_t N = interference_index(k);
  if (n < 1) throw std::domain_error("mg_oia: n must be >= 1");
  const Int hi = boost::multiprecision::pow(Int(n + 1), static_cast<unsigned>(N));
  const Int lo = boost::multiprecision::pow(Int(n), static_cast<unsigned>(N));
  const Int m = hi + lo;
  return OiaPoint{detail::to_dim(m, "mg_oia"), Rational(hi + (k - 1) * lo, m)};
}

/// Relative MG of scheduling k users on m of M dimensions, against the
/// orthogonal baseline: v = (m/M)(r_BF(k, m) - 1) for k >= 3, else 0.
/// Simplifies to (m/M) * (k-2)(n*+1) / (2n* + N + 2).
inline Rational pattern_value(std::int64_t k, Dim m, Dim M) {
  if (m < 1 || M < 1) throw std::domain_error("pattern_value: m, M must be >= 1");
  if (m > M) throw std::invalid_argument("pattern_value: m exceeds M");
  if (k < 3) return Rational(0);
  const auto n_star = invert_dim(k, m);
  if (!n_star)
    throw std::invalid_argument("pattern_value: not a ladder dimension for k=" +
                                std::to_string(k) + ": m=" + std::to_string(m));
  const std::int64_t N = interference_index(k);
  return Rational(Int(m) * (k - 2) * (*n_star + 1),
                  Int(M) * (2 * *n_star + N + 2));
}

/// Efficiency rho = v/m = (1/M)(r_BF - 1): relative MG per dimension.
inline Rational pattern_efficiency(std::int64_t k, Dim m, Dim M) {
  return pattern_value(k, m, M) / Rational(Int(m));
}

inline std::int64_t virtual_users(std::int64_t K, std::int64_t T) {
  if (K < 1 || T < 1) throw std::domain_error("virtual_users: K, T must be >= 1");
  if (K > std::numeric_limits<std::int64_t>::max() / T)
    throw std::overflow_error("virtual_users: K*T overflows");
  return K * T;
}

/// A planning problem: K users, T antennas each, M signaling dimensions.
/// All pattern machinery runs over the K' = K*T virtual users.
struct Instance {
  std::int64_t users = 0;
  std::int64_t antennas_per_user = 1;
  Dim resources = 0;

  std::int64_t virtual_user_count() const {
    return virtual_users(users, antennas_per_user);
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace gia

#endif
