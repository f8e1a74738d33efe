/*
 * Minimal library walkthrough: build the pattern set for K=7 users over
 * M=45880 dimensions, solve it exactly and greedily, and print both plans.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#include <iostream>

#include "gia/gia.hpp"

int main() {
  const std::int64_t K = 7;
  const gia::Dim M = 45880;

  const gia::PatternSet ps = gia::build_sorted(K, M);
  std::cout << "pattern set: W = " << ps.size() << "\n\n";

  const gia::Plan optimal = gia::solve_optimal(ps, M);
  std::cout << gia::render_plan_text(optimal, gia::Algo::optimal) << '\n';

  const gia::Plan greedy = gia::solve_greedy(ps, M);
  std::cout << gia::render_plan_text(greedy, gia::Algo::greedy) << '\n';

  std::cout << "greedy/optimal = " << (greedy.z / optimal.z).decimal(6)
            << '\n';
  return 0;
}
