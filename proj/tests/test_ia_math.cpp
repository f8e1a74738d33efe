/*
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#include <catch2/catch_amalgamated.hpp>

#include "gia/ia_math.hpp"

using gia::Int;
using gia::Rational;

namespace {

// Independent binomial oracle: plain factorial ratio.
Int factorial(std::int64_t n) {
  Int r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial_oracle(std::int64_t a, std::int64_t b) {
  if (b > a) return 0;
  return factorial(a) / (factorial(b) * factorial(a - b));
}

}  // namespace

TEST_CASE("binomial matches the factorial-ratio oracle") {
  for (std::int64_t a = 0; a <= 40; ++a)
    for (std::int64_t b = 0; b <= a + 3; ++b)
      CHECK(gia::binomial(a, b) == binomial_oracle(a, b));

  CHECK(gia::binomial(6, 5) == 6);
  CHECK(gia::binomial(30, 29) == 30);
  CHECK(gia::binomial(33, 29) == binomial_oracle(33, 29));
  CHECK(gia::binomial(33, 29) == 40920);
  CHECK(gia::binomial(5, 9) == 0);
  CHECK(gia::binomial(0, 0) == 1);
  CHECK_THROWS_AS(gia::binomial(-1, 2), std::domain_error);

  // stays exact far past 64 bits
  CHECK(gia::binomial(200, 100) == binomial_oracle(200, 100));
}

TEST_CASE("interference index") {
  CHECK(gia::interference_index(4) == 5);
  CHECK(gia::interference_index(3) == 1);
  CHECK(gia::interference_index(7) == 29);
  CHECK_THROWS_AS(gia::interference_index(2), std::domain_error);
  CHECK_THROWS_AS(gia::interference_index(0), std::domain_error);
}

TEST_CASE("ladder dimensions") {
  CHECK(gia::ladder_dim(4, 0).m == 7);
  CHECK(gia::ladder_dim(4, 3).m == 182);
  CHECK(gia::ladder_dim(7, 3).m == 45880);
  for (std::int64_t n : {0, 1, 2})
    CHECK(gia::ladder_dim(3, n).m == 2 * n + 3);
  CHECK_THROWS_AS(gia::ladder_dim(2, 0), std::domain_error);
  CHECK_THROWS_AS(gia::ladder_dim(4, -1), std::domain_error);
  CHECK_THROWS_AS(gia::ladder_dim(3, std::int64_t(1) << 62),
                  std::overflow_error);

  // consistency with the binomial building block
  CHECK(Int(gia::ladder_dim(7, 3).m) ==
        gia::binomial(33, 29) + gia::binomial(32, 29));

  SECTION("m strictly increases with n*") {
    for (std::int64_t k = 3; k <= 8; ++k) {
      gia::Dim prev = 0;
      for (std::int64_t n = 0; n <= 25; ++n) {
        if (k >= 6 && n > 12) break;  // keep well inside 2^63
        const auto e = gia::ladder_dim(k, n);
        CHECK(e.m > prev);
        prev = e.m;
      }
    }
  }
}

TEST_CASE("feasible dimension lists") {
  const auto l4 = gia::feasible_dims(4, 200);
  REQUIRE(l4.entries.size() == 4);
  CHECK(l4.entries[0].m == 7);
  CHECK(l4.entries[1].m == 27);
  CHECK(l4.entries[2].m == 77);
  CHECK(l4.entries[3].m == 182);
  CHECK_FALSE(l4.all_integers);

  const auto l7 = gia::feasible_dims(7, 45880);
  REQUIRE(l7.entries.size() == 4);
  CHECK(l7.entries[0].m == 31);
  CHECK(l7.entries[1].m == 495);
  CHECK(l7.entries[2].m == 5425);
  CHECK(l7.entries[3].m == 45880);

  const auto l3 = gia::feasible_dims(3, 10);
  REQUIRE(l3.entries.size() == 4);
  CHECK(l3.entries[0].m == 3);
  CHECK(l3.entries[3].m == 9);

  const auto l2 = gia::feasible_dims(2, 5);
  CHECK(l2.all_integers);
  CHECK(l2.entries.empty());
  CHECK(l2.m_max == 5);

  CHECK_THROWS_AS(gia::feasible_dims(0, 5), std::domain_error);
  CHECK_THROWS_AS(gia::feasible_dims(4, 0), std::domain_error);
}

TEST_CASE("invert_dim") {
  CHECK(gia::invert_dim(4, 35853) == 15);
  CHECK(gia::mg_bf(4, 15) == Rational(Int(69), Int(37)));
  CHECK_FALSE(gia::invert_dim(4, 8).has_value());
  CHECK(gia::invert_dim(3, 17) == 7);
  CHECK_FALSE(gia::invert_dim(4, 6).has_value());
  CHECK(gia::invert_dim(4, 7) == 0);

  SECTION("round-trips the ladder") {
    for (std::int64_t k = 3; k <= 8; ++k)
      for (std::int64_t n = 0; n <= (k >= 6 ? 10 : 25); ++n) {
        const auto e = gia::ladder_dim(k, n);
        CHECK(gia::invert_dim(k, e.m) == n);
        CHECK_FALSE(gia::invert_dim(k, e.m + 1).has_value());
      }
  }
}

TEST_CASE("BF-IA multiplexing gain") {
  CHECK(gia::mg_bf(4, 0) == Rational(Int(9), Int(7)));
  CHECK(gia::mg_bf(3, 2) == Rational(Int(10), Int(7)));
  CHECK(gia::mg_bf(7, 3) == Rational(Int(57), Int(37)));
  CHECK(gia::mg_bf(4, 0).decimal(5) == "1.2857");
  CHECK(gia::mg_bf(3, 2).decimal(5) == "1.4286");
  CHECK(gia::mg_bf(7, 3).decimal(5) == "1.5405");
  CHECK_THROWS_AS(gia::mg_bf(2, 0), std::domain_error);

  SECTION("closed form equals the stream-count route") {
    for (std::int64_t k = 3; k <= 10; ++k)
      for (std::int64_t n = 0; n <= 50; ++n)
        CHECK(gia::mg_bf(k, n) == gia::mg_bf_streams(k, n));
  }

  SECTION("strictly increasing in n*, strictly inside (1, k/2)") {
    for (std::int64_t k = 3; k <= 8; ++k) {
      Rational prev(0);
      const Rational half_k(Int(k), Int(2));
      for (std::int64_t n = 0; n <= 60; ++n) {
        const Rational r = gia::mg_bf(k, n);
        CHECK(r > prev);
        CHECK(r > Rational(1));
        CHECK(r < half_k);
        prev = r;
      }
    }
  }

  SECTION("approaches k/2") {
    const Rational eps(Int(1), Int(100000));
    for (std::int64_t k : {3, 4}) {
      const Rational gap = Rational(Int(k), Int(2)) - gia::mg_bf(k, 1000000);
      CHECK(gap > Rational(0));
      CHECK(gap < eps);
    }
    // the gap is exactly N(k-2) / (2 (2n* + N + 2)); for k=7 that is still
    // 145/4000062 > 1e-5 at n* = 1e6
    CHECK(Rational(Int(7), Int(2)) - gia::mg_bf(7, 1000000) ==
          Rational(Int(145), Int(4000062)));
    for (std::int64_t k = 3; k <= 8; ++k)
      CHECK(Rational(Int(k), Int(2)) - gia::mg_bf(k, 1000000) <
            Rational(Int(k), Int(2)) - gia::mg_bf(k, 1000));
  }
}

TEST_CASE("OIA multiplexing gain") {
  const auto p31 = gia::mg_oia(3, 1);
  CHECK(p31.m == 3);
  CHECK(p31.r == Rational(Int(4), Int(3)));

  const auto p41 = gia::mg_oia(4, 1);
  CHECK(p41.m == 33);
  CHECK(p41.r == Rational(Int(35), Int(33)));

  // K/2 asymptote: r_OIA(3, n=1e6) within 1e-5 of 3/2
  const auto big = gia::mg_oia(3, 1000000);
  const Rational gap = Rational(Int(3), Int(2)) - big.r;
  CHECK(gap > Rational(0));
  CHECK(gap < Rational(Int(1), Int(100000)));

  CHECK_THROWS_AS(gia::mg_oia(2, 1), std::domain_error);
  CHECK_THROWS_AS(gia::mg_oia(3, 0), std::domain_error);
}

TEST_CASE("pattern value") {
  const Rational v1 = gia::pattern_value(4, 35853, 45880);
  CHECK(v1 == Rational(Int(31008), Int(45880)));
  CHECK(v1.decimal(4) == "0.6759");

  CHECK(gia::pattern_value(3, 17, 45880) == Rational(Int(8), Int(45880)));

  const Rational v5 = gia::pattern_value(5, 44200, 45880);
  CHECK(v5 == Rational(Int(37128), Int(45880)));
  CHECK(v5.decimal(4) == "0.8092");

  CHECK(gia::pattern_value(2, 10, 45880) == Rational(0));
  CHECK(gia::pattern_value(1, 3, 45880) == Rational(0));

  CHECK_THROWS_AS(gia::pattern_value(4, 8, 45880), std::invalid_argument);
  CHECK_THROWS_AS(gia::pattern_value(4, 100, 50), std::invalid_argument);

  SECTION("closed form equals the definition (m/M)(r_BF - 1)") {
    const gia::Dim M = 100000;
    for (std::int64_t k = 3; k <= 7; ++k)
      for (const auto& e : gia::feasible_dims(k, M).entries) {
        const Rational via_mg = Rational(Int(e.m), Int(M)) *
                                (gia::mg_bf(k, e.n_star) - Rational(1));
        CHECK(gia::pattern_value(k, e.m, M) == via_mg);
      }
  }

  SECTION("k=3 collapses to (n*+1)/M") {
    const gia::Dim M = 1001;
    for (std::int64_t n = 0; 2 * n + 3 <= M; n += 37)
      CHECK(gia::pattern_value(3, 2 * n + 3, M) ==
            Rational(Int(n + 1), Int(M)));
  }
}

TEST_CASE("pattern efficiency") {
  CHECK(gia::pattern_efficiency(4, 35853, 45880) ==
        Rational(Int(32), Int(37) * 45880));
  CHECK(gia::pattern_efficiency(4, 35853, 45880).decimal(5) == "1.8851e-05");
  CHECK(gia::pattern_efficiency(3, 17, 45880).decimal(5) == "1.0257e-05");
  CHECK(gia::pattern_efficiency(7, 45880, 45880).decimal(5) == "1.1782e-05");
  CHECK(gia::pattern_efficiency(2, 10, 45880) == Rational(0));
}

TEST_CASE("virtual users") {
  CHECK(gia::virtual_users(7, 2) == 14);
  CHECK(gia::virtual_users(7, 1) == 7);
  CHECK(gia::virtual_users(3, 4) == 12);
  CHECK_THROWS_AS(gia::virtual_users(0, 1), std::domain_error);
  CHECK_THROWS_AS(gia::virtual_users(1, 0), std::domain_error);

  const gia::Instance inst{7, 2, 157};
  CHECK(inst.virtual_user_count() == 14);
}
