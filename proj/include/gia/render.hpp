/*
 * Machine- and human-readable rendering of ladders, pattern sets, plans,
 * and sweeps. Every decimal printed here is derived from an exact rational
 * that is emitted alongside it.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#ifndef GIA_RENDER_HPP
#define GIA_RENDER_HPP

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "gia/ia_math.hpp"
#include "gia/patterns.hpp"
#include "gia/solvers.hpp"
#include "gia/sweep.hpp"

namespace gia {

inline constexpr int kDisplayDigits = 6;  // significant digits, half-to-even

namespace detail {

inline nlohmann::json rational_json(const Rational& r) {
  return {{"num", r.num().str()}, {"den", r.den().str()}};
}

inline nlohmann::json rational_json_decimal(const Rational& r) {
  auto j = rational_json(r);
  j["decimal"] = r.decimal(kDisplayDigits);
  return j;
}

}  // namespace detail

// ---- dims ----

inline std::string render_dims_text(const FeasibleDims& fd) {
  std::ostringstream out;
  if (fd.all_integers) {
    out << "1.." << fd.m_max << '\n'
        << "orthogonal multiplexing is MG optimal for k < 3; every dimension "
           "count is feasible\n";
    return out.str();
  }
  for (std::size_t i = 0; i < fd.entries.size(); ++i)
    out << (i ? " " : "") << fd.entries[i].m;
  out << '\n';
  return out.str();
}

inline std::string render_dims_csv(const FeasibleDims& fd) {
  std::ostringstream out;
  out << "n_star,m\n";
  if (fd.all_integers) {
    for (Dim m = 1; m <= fd.m_max; ++m) out << "," << m << "\n";
    return out.str();
  }
  for (const auto& e : fd.entries) out << e.n_star << ',' << e.m << '\n';
  return out.str();
}

inline std::string render_dims_json(const FeasibleDims& fd) {
  nlohmann::json j;
  j["k"] = fd.k;
  j["m_max"] = fd.m_max;
  if (fd.all_integers) {
    j["all_integers"] = true;
    j["note"] = "orthogonal multiplexing is MG optimal for k < 3";
  } else {
    j["all_integers"] = false;
    auto arr = nlohmann::json::array();
    for (const auto& e : fd.entries)
      arr.push_back({{"n_star", e.n_star}, {"m", e.m}});
    j["dims"] = arr;
  }
  return j.dump(2) + "\n";
}

// ---- pattern sets ----

inline std::string render_patterns_text(const PatternSet& ps) {
  std::ostringstream out;
  out << "K=" << ps.K << " M=" << ps.M << " mode=" << to_string(ps.mode)
      << " stage=" << to_string(ps.stage) << " W=" << ps.entries.size()
      << '\n';
  for (const auto& e : ps.entries)
    out << "k=" << e.k << " m=" << e.m << " n*=" << e.n_star << " v=" << e.v
        << " (" << e.v.decimal(kDisplayDigits) << ") rho=" << e.rho << " ("
        << e.rho.decimal(kDisplayDigits) << ")\n";
  return out.str();
}

inline std::string render_patterns_csv(const PatternSet& ps) {
  std::ostringstream out;
  out << "k,m,n_star,v_num,v_den,v,rho_num,rho_den,rho\n";
  for (const auto& e : ps.entries)
    out << e.k << ',' << e.m << ',' << e.n_star << ',' << e.v.num() << ','
        << e.v.den() << ',' << e.v.decimal(kDisplayDigits) << ','
        << e.rho.num() << ',' << e.rho.den() << ','
        << e.rho.decimal(kDisplayDigits) << '\n';
  return out.str();
}

inline std::string render_patterns_json(const PatternSet& ps) {
  nlohmann::json j;
  j["K"] = ps.K;
  j["M"] = ps.M;
  j["mode"] = to_string(ps.mode);
  j["stage"] = to_string(ps.stage);
  j["W"] = ps.entries.size();
  auto arr = nlohmann::json::array();
  for (const auto& e : ps.entries) {
    arr.push_back({{"k", e.k},
                   {"m", e.m},
                   {"n_star", e.n_star},
                   {"v", detail::rational_json_decimal(e.v)},
                   {"rho", detail::rational_json_decimal(e.rho)}});
  }
  j["entries"] = arr;
  return j.dump(2) + "\n";
}

// ---- plans ----

/// Optional BF-IA baseline shown next to a plan when M is itself a feasible
/// single-group dimension for all K' users.
struct BfComparison {
  Rational mg_bf;
  Rational improvement;  // (r_plan - r_bf) / r_bf
};

inline std::optional<BfComparison> bf_comparison(const Plan& plan) {
  const std::int64_t Kp = plan.instance.virtual_user_count();
  if (Kp < 3) return std::nullopt;
  const auto n_star = invert_dim(Kp, plan.instance.resources);
  if (!n_star) return std::nullopt;
  const Rational bf = mg_bf(Kp, *n_star);
  return BfComparison{bf, (plan.total_mg - bf) / bf};
}

inline std::string render_plan_text(const Plan& plan, Algo algo) {
  std::ostringstream out;
  const auto& inst = plan.instance;
  out << "instance: K=" << inst.users << " T=" << inst.antennas_per_user
      << " M=" << inst.resources << " (K'=" << inst.virtual_user_count()
      << ")\n";
  out << "algo: " << to_string(algo) << '\n';
  out << "partition:";
  if (plan.choices.empty()) {
    out << " (none; all dimensions stay orthogonal)";
  } else {
    bool first = true;
    for (const auto& c : plan.choices)
      for (std::uint64_t i = 0; i < c.count; ++i) {
        out << (first ? " " : " + ") << c.pattern.m;
        first = false;
      }
  }
  out << '\n';
  for (const auto& c : plan.choices)
    out << "  " << c.count << " x {k=" << c.pattern.k << ", m=" << c.pattern.m
        << ", n*=" << c.pattern.n_star << "} v=" << c.pattern.v << " ("
        << c.pattern.v.decimal(kDisplayDigits) << ")\n";
  out << "used: " << plan.used << "  leftover: " << plan.leftover << '\n';
  out << "z = " << plan.z << " (" << plan.z.decimal(kDisplayDigits) << ")\n";
  out << "total MG = " << plan.total_mg << " ("
      << plan.total_mg.decimal(kDisplayDigits) << ")\n";
  if (const auto cmp = bf_comparison(plan)) {
    out << "BF-IA single group: " << cmp->mg_bf << " ("
        << cmp->mg_bf.decimal(kDisplayDigits) << ")\n";
    out << "improvement over BF-IA: "
        << (cmp->improvement * Rational(100)).decimal(4) << "%\n";
  }
  return out.str();
}

inline std::string render_plan_json(const Plan& plan, Algo algo) {
  nlohmann::json j;
  j["instance"] = {{"k", plan.instance.users},
                   {"t", plan.instance.antennas_per_user},
                   {"m", plan.instance.resources}};
  j["algo"] = to_string(algo);
  auto choices = nlohmann::json::array();
  for (const auto& c : plan.choices)
    choices.push_back({{"k", c.pattern.k},
                       {"m", c.pattern.m},
                       {"n_star", c.pattern.n_star},
                       {"count", c.count},
                       {"v", detail::rational_json(c.pattern.v)}});
  j["choices"] = choices;
  j["leftover"] = plan.leftover;
  j["z"] = detail::rational_json(plan.z);
  j["total_mg"] = detail::rational_json_decimal(plan.total_mg);
  if (const auto cmp = bf_comparison(plan)) {
    j["bf_single_group"] = detail::rational_json_decimal(cmp->mg_bf);
    j["improvement"] = detail::rational_json_decimal(cmp->improvement);
  }
  return j.dump(2) + "\n";
}

// ---- sweeps ----

inline constexpr const char* kSweepCsvHeader =
    "M,mg_bf_num,mg_bf_den,mg_bf,mg_gia_num,mg_gia_den,mg_gia,algo,wall_ms";

inline std::string render_sweep_csv(const std::vector<SweepPoint>& points) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto& p : points) {
    out << p.M << ',';
    if (p.mg_bf)
      out << p.mg_bf->num() << ',' << p.mg_bf->den() << ','
          << p.mg_bf->decimal(kDisplayDigits) << ',';
    else
      out << ",,,";
    out << p.mg_gia.num() << ',' << p.mg_gia.den() << ','
        << p.mg_gia.decimal(kDisplayDigits) << ',' << to_string(p.algo) << ','
        << p.wall_ms << '\n';
  }
  return out.str();
}

inline std::string render_sweep_json(const std::vector<SweepPoint>& points) {
  auto arr = nlohmann::json::array();
  for (const auto& p : points) {
    nlohmann::json row;
    row["M"] = p.M;
    if (p.mg_bf) row["mg_bf"] = detail::rational_json_decimal(*p.mg_bf);
    row["mg_gia"] = detail::rational_json_decimal(p.mg_gia);
    row["algo"] = to_string(p.algo);
    row["wall_ms"] = p.wall_ms;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

}  // namespace gia

#endif
