/*
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <tuple>
#include <vector>

#include "gia/patterns.hpp"

using gia::GroupPattern;
using gia::Int;
using gia::PatternSet;
using gia::Rational;

namespace {

const GroupPattern* find(const PatternSet& ps, std::int64_t k, gia::Dim m) {
  for (const auto& e : ps.entries)
    if (e.k == k && e.m == m) return &e;
  return nullptr;
}

// Entry-by-entry equality that ignores how the set was built.
bool same_entries(const PatternSet& a, const PatternSet& b) {
  return a.entries == b.entries;
}

PatternSet exhaustive_pipeline(std::int64_t K, gia::Dim M) {
  return gia::sort_by_efficiency(gia::prune(gia::generate(K, M)));
}

}  // namespace

TEST_CASE("generate enumerates the raw pattern universe") {
  const PatternSet raw = gia::generate(7, 45880);
  CHECK(raw.stage == gia::Stage::raw);

  const auto* e1 = find(raw, 4, 35853);
  REQUIRE(e1 != nullptr);
  CHECK(e1->v == Rational(Int(31008), Int(45880)));
  CHECK(e1->v.decimal(4) == "0.6759");
  CHECK(e1->n_star == 15);
  CHECK(e1->rho == e1->v / Rational(Int(e1->m)));

  // every feasible ladder dimension appears, including ones pruned later
  CHECK(find(raw, 4, 7) != nullptr);
  CHECK(find(raw, 3, 7) != nullptr);
  CHECK(find(raw, 7, 45880) != nullptr);

  // k=3 has one pattern per odd m in [3, 45879]
  std::size_t k3 = 0;
  for (const auto& e : raw.entries) k3 += e.k == 3;
  CHECK(k3 == 22939);

  SECTION("k=3 closed-form values") {
    const PatternSet small = gia::generate(3, 10);
    REQUIRE(small.entries.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(small.entries[i].m == static_cast<gia::Dim>(2 * i + 3));
      CHECK(small.entries[i].v == Rational(Int(i + 1), Int(10)));
    }
  }

  SECTION("no groups of fewer than three users") {
    CHECK(gia::generate(2, 100).entries.empty());
    CHECK(gia::generate(1, 100).entries.empty());
  }

  SECTION("exhaustive limit") {
    gia::GenLimits limits;
    limits.exhaustive_limit = 1000;
    CHECK_THROWS_MATCHES(
        gia::generate(4, 2000, gia::GenMode::exhaustive, limits),
        gia::LimitError,
        Catch::Matchers::MessageMatches(
            Catch::Matchers::ContainsSubstring("sparse")));
  }

  CHECK_THROWS_AS(gia::generate(0, 10), std::domain_error);
  CHECK_THROWS_AS(gia::generate(4, 0), std::domain_error);
}

TEST_CASE("prune removes value-dominated patterns") {
  const PatternSet raw = gia::generate(7, 45880);
  const PatternSet pruned = gia::prune(raw);
  CHECK(pruned.stage == gia::Stage::pruned);
  CHECK(pruned.entries.size() == 470);

  // {4,7} loses to {3,7}: v 2/45880 vs 3/45880 at the same m
  CHECK(find(raw, 4, 7) != nullptr);
  CHECK(find(pruned, 4, 7) == nullptr);
  CHECK(find(pruned, 3, 7) != nullptr);

  // equal value at larger m survives: v({4,77}) = v({3,85}) = 42/M
  REQUIRE(find(pruned, 4, 77) != nullptr);
  REQUIRE(find(pruned, 3, 85) != nullptr);
  CHECK(find(pruned, 4, 77)->v == find(pruned, 3, 85)->v);
  CHECK(find(pruned, 4, 77)->v == Rational(Int(42), Int(45880)));

  SECTION("strict-value antichain, by pairwise scan") {
    const auto& es = pruned.entries;
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t l = 0; l < es.size(); ++l)
        if (i != l)
          CHECK_FALSE((es[i].m <= es[l].m && es[i].v > es[l].v));
  }

  SECTION("idempotent") { CHECK(gia::prune(pruned) == pruned); }

  SECTION("singleton unchanged") {
    const PatternSet one = gia::prune(gia::generate(3, 3));
    REQUIRE(one.entries.size() == 1);
    CHECK(one.entries[0].m == 3);
  }

  SECTION("a unique value maximum at its dimension is never removed") {
    auto sorted_raw = raw.entries;
    std::sort(sorted_raw.begin(), sorted_raw.end(),
              [](const GroupPattern& a, const GroupPattern& b) {
                return a.m < b.m;
              });
    Rational best_below(0);
    std::size_t i = 0;
    while (i < sorted_raw.size()) {
      std::size_t j = i;
      while (j < sorted_raw.size() && sorted_raw[j].m == sorted_raw[i].m) ++j;
      const GroupPattern* champion = nullptr;
      int at_max = 0;
      for (std::size_t t = i; t < j; ++t) {
        if (!champion || sorted_raw[t].v > champion->v) {
          champion = &sorted_raw[t];
          at_max = 1;
        } else if (sorted_raw[t].v == champion->v) {
          ++at_max;
        }
      }
      if (at_max == 1 && champion->v > best_below)
        CHECK(find(pruned, champion->k, champion->m) != nullptr);
      if (champion->v > best_below) best_below = champion->v;
      i = j;
    }
  }

  CHECK_THROWS_AS(gia::prune(exhaustive_pipeline(4, 100)),
                  std::invalid_argument);
}

TEST_CASE("sort_by_efficiency orders by rho with deterministic ties") {
  const PatternSet sorted = exhaustive_pipeline(7, 45880);
  CHECK(sorted.stage == gia::Stage::sorted);
  REQUIRE(sorted.entries.size() == 470);

  const auto head = [&](std::size_t i) { return sorted.entries[i]; };
  CHECK(head(0).k == 4);
  CHECK(head(0).m == 35853);
  CHECK(head(1).k == 4);
  CHECK(head(1).m == 27132);
  CHECK(head(2).k == 4);
  CHECK(head(2).m == 20196);
  CHECK(head(3).k == 5);
  CHECK(head(3).m == 44200);

  CHECK(head(0).v.decimal(4) == "0.6759");
  CHECK(head(1).v.decimal(4) == "0.5069");
  CHECK(head(2).v.decimal(4) == "0.3735");
  CHECK(head(3).v.decimal(4) == "0.8092");
  CHECK(head(0).rho.decimal(5) == "1.8851e-05");
  CHECK(head(1).rho.decimal(5) == "1.8682e-05");
  CHECK(head(2).rho.decimal(5) == "1.8494e-05");
  CHECK(head(3).rho.decimal(5) == "1.8309e-05");

  SECTION("rho non-increasing; exact rho ties break by smaller m") {
    for (std::size_t i = 1; i < sorted.entries.size(); ++i) {
      CHECK(sorted.entries[i - 1].rho >= sorted.entries[i].rho);
      if (sorted.entries[i - 1].rho == sorted.entries[i].rho)
        CHECK(sorted.entries[i - 1].m < sorted.entries[i].m);
    }
    // a real tie in this instance: {4,3289} and {5,16744} share rho
    const auto pos = [&](std::int64_t k, gia::Dim m) {
      for (std::size_t i = 0; i < sorted.entries.size(); ++i)
        if (sorted.entries[i].k == k && sorted.entries[i].m == m) return i;
      FAIL("pattern not found");
      return std::size_t(0);
    };
    REQUIRE(find(sorted, 4, 3289) != nullptr);
    REQUIRE(find(sorted, 5, 16744) != nullptr);
    CHECK(find(sorted, 4, 3289)->rho == find(sorted, 5, 16744)->rho);
    CHECK(pos(4, 3289) < pos(5, 16744));
  }

  SECTION("empty set sorts to empty") {
    CHECK(exhaustive_pipeline(2, 50).entries.empty());
  }

  CHECK_THROWS_AS(gia::sort_by_efficiency(gia::generate(4, 100)),
                  std::invalid_argument);
}

TEST_CASE("within fixed k, value strictly increases with m") {
  for (std::int64_t k = 3; k <= 7; ++k) {
    const PatternSet raw = gia::generate(k, 100000);
    Rational prev(-1);
    for (const auto& e : raw.entries)
      if (e.k == k) {
        CHECK(e.v > prev);
        prev = e.v;
      }
  }
}

TEST_CASE("single-group pattern is present and never strictly beaten") {
  const PatternSet raw = gia::generate(7, 45880);
  const auto* single = find(raw, 7, 45880);
  REQUIRE(single != nullptr);
  const PatternSet pruned = gia::prune(raw);
  bool witnessed = false;
  for (const auto& e : pruned.entries)
    witnessed |= (e.m <= 45880 && e.v >= single->v);
  CHECK(witnessed);
}

TEST_CASE("generate_sparse equals the exhaustive pipeline") {
  for (gia::Dim M : {31, 495, 5425, 45880}) {
    const PatternSet a = exhaustive_pipeline(7, M);
    const PatternSet b = gia::generate_sparse(7, M);
    CHECK(b.stage == gia::Stage::sorted);
    CHECK(b.mode == gia::GenMode::sparse);
    CHECK(same_entries(a, b));
  }

  SECTION("k=3-only sets survive whole") {
    const PatternSet s = gia::generate_sparse(3, 9);
    REQUIRE(s.entries.size() == 4);
    for (gia::Dim m : {3, 5, 7, 9}) CHECK(find(s, 3, m) != nullptr);
    CHECK(same_entries(exhaustive_pipeline(3, 9), s));
  }

  SECTION("randomized equivalence") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::int64_t> dk(1, 8);
    std::uniform_int_distribution<gia::Dim> dm(1, 20000);
    for (int i = 0; i < 50; ++i) {
      const std::int64_t K = dk(rng);
      const gia::Dim M = dm(rng);
      CAPTURE(K, M);
      CHECK(
          same_entries(exhaustive_pipeline(K, M), gia::generate_sparse(K, M)));
    }
  }

  SECTION("large-M sparse set matches the exhaustive prefix") {
    const PatternSet big = gia::generate_sparse(4, 1000000000);
    const PatternSet small = exhaustive_pipeline(4, 1000000);
    // values scale with 1/M, so compare M-free scaled values (v*M) on the
    // shared prefix m <= 1e6
    std::vector<std::tuple<std::int64_t, gia::Dim, std::int64_t, Rational>> a,
        b;
    for (const auto& e : big.entries)
      if (e.m <= 1000000)
        a.emplace_back(e.k, e.m, e.n_star, e.v * Rational(Int(1000000000)));
    for (const auto& e : small.entries)
      b.emplace_back(e.k, e.m, e.n_star, e.v * Rational(Int(1000000)));
    CHECK(a == b);
    CHECK(a.size() > 400);  // the k=3 survivor runs all sit below 1e6
  }

  SECTION("K < 4 with huge M has no sparse representation") {
    CHECK_THROWS_AS(gia::generate_sparse(3, gia::Dim(1) << 30),
                    gia::LimitError);
  }
}

TEST_CASE("build_sorted resolves the pipeline automatically") {
  gia::GenLimits limits;
  limits.exhaustive_limit = 1000;

  const PatternSet below =
      gia::build_sorted(5, 900, gia::BuildMode::automatic, limits);
  CHECK(below.mode == gia::GenMode::exhaustive);
  CHECK(below.stage == gia::Stage::sorted);

  const PatternSet above =
      gia::build_sorted(5, 2000, gia::BuildMode::automatic, limits);
  CHECK(above.mode == gia::GenMode::sparse);
  CHECK(same_entries(above, exhaustive_pipeline(5, 2000)));

  // generate() with sparse mode forwards to the sparse pipeline
  const PatternSet forwarded = gia::generate(5, 2000, gia::GenMode::sparse);
  CHECK(forwarded.stage == gia::Stage::sorted);
  CHECK(same_entries(forwarded, above));
}
