/*
 * Command-line front end: dims, patterns, plan, sweep, cache.
 *
 * Exit codes: 0 success, 2 precondition or limit violation, 3 I/O failure.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#ifndef GIA_TOOLS_CLI_APP_HPP
#define GIA_TOOLS_CLI_APP_HPP

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gia/gia.hpp"

namespace gia::cli {

/// Accepts plain integers and round scientific notation ("45880", "1e12").
inline Dim parse_dim(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(text, &pos);
    if (pos == text.size()) {
      if (v < 1) throw std::domain_error(std::string(what) + " must be >= 1");
      return static_cast<Dim>(v);
    }
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    // fall through to the scientific-notation path
  }
  try {
    std::size_t pos = 0;
    const long double d = std::stold(text, &pos);
    if (pos == text.size() && d >= 1 && d <= 9e18L && d == std::floor(d))
      return static_cast<Dim>(d);
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string(what) + ": cannot parse '" + text +
                              "' as a dimension count");
}

inline Algo parse_algo(const std::string& s, const char* fallback) {
  const std::string& name = s.empty() ? fallback : s;
  if (name == "optimal") return Algo::optimal;
  if (name == "greedy") return Algo::greedy;
  if (name == "brute") return Algo::brute;
  throw std::invalid_argument("unknown --algo '" + name + "'");
}

inline BuildMode parse_mode(const std::string& s, const char* fallback) {
  const std::string& name = s.empty() ? fallback : s;
  if (name == "auto") return BuildMode::automatic;
  if (name == "exhaustive") return BuildMode::exhaustive;
  if (name == "sparse") return BuildMode::sparse;
  throw std::invalid_argument("unknown --mode '" + name + "'");
}

inline Stage parse_stage(const std::string& s, const char* fallback) {
  const std::string& name = s.empty() ? fallback : s;
  if (name == "raw") return Stage::raw;
  if (name == "pruned") return Stage::pruned;
  if (name == "sorted") return Stage::sorted;
  throw std::invalid_argument("unknown --stage '" + name + "'");
}

inline std::string parse_format(const std::string& s, const char* fallback,
                                std::initializer_list<const char*> allowed) {
  const std::string name = s.empty() ? fallback : s;
  for (const char* a : allowed)
    if (name == a) return name;
  throw std::invalid_argument("unknown --format '" + name + "'");
}

inline void emit(const std::string& text, const std::string& out_path,
                 std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open output file " + out_path);
  f << text;
  if (!f) throw IoError("write failed for " + out_path);
}

struct Options {
  std::int64_t k = 0;
  std::int64_t t = 1;
  std::string m_text;
  std::string max_text;
  std::string min_text = "1";
  std::string algo_text;
  std::string mode_text;
  std::string stage_text;
  std::string format_text;
  std::string out_path;
  std::string cache_dir;
  bool any_m = false;
  std::string step_text = "1";
};

inline std::optional<std::filesystem::path> cache_dir_opt(const Options& opt) {
  if (opt.cache_dir.empty()) return std::nullopt;
  return std::filesystem::path(opt.cache_dir);
}

inline void run_dims(const Options& opt, std::ostream& out) {
  if (opt.k < 1) throw std::domain_error("dims: requires k >= 1");
  const Dim m_max = parse_dim(opt.max_text, "--max");
  const auto format = parse_format(opt.format_text, "table",
                                   {"table", "csv", "json"});
  const FeasibleDims fd = feasible_dims(opt.k, m_max);
  std::string text;
  if (format == "csv")
    text = render_dims_csv(fd);
  else if (format == "json")
    text = render_dims_json(fd);
  else
    text = render_dims_text(fd);
  emit(text, opt.out_path, out);
}

inline void run_patterns(const Options& opt, std::ostream& out,
                         std::ostream& err) {
  if (opt.k < 1) throw std::domain_error("patterns: requires K >= 1");
  const Dim M = parse_dim(opt.m_text, "--m");
  const auto stage = parse_stage(opt.stage_text, "sorted");
  const auto mode = parse_mode(opt.mode_text, "auto");
  const auto format = parse_format(opt.format_text, "table",
                                   {"table", "csv", "json"});
  const GenLimits limits;
  PatternSet ps;
  if (stage == Stage::sorted) {
    ps = build_sorted_cached(opt.k, M, mode, limits, cache_dir_opt(opt), &err);
  } else {
    const bool exhaustive =
        mode == BuildMode::exhaustive ||
        (mode == BuildMode::automatic && M <= limits.exhaustive_limit);
    if (!exhaustive)
      throw LimitError(
          "the sparse pipeline produces sorted sets only; use --mode "
          "exhaustive for raw/pruned stages");
    ps = generate(opt.k, M, GenMode::exhaustive, limits);
    if (stage == Stage::pruned) ps = prune(ps);
  }
  std::string text;
  if (format == "csv")
    text = render_patterns_csv(ps);
  else if (format == "json")
    text = render_patterns_json(ps);
  else
    text = render_patterns_text(ps);
  emit(text, opt.out_path, out);
}

inline void run_plan(const Options& opt, std::ostream& out,
                     std::ostream& err) {
  if (opt.k < 1 || opt.t < 1)
    throw std::domain_error("plan: requires K >= 1 and T >= 1");
  const Dim M = parse_dim(opt.m_text, "--m");
  const auto algo = parse_algo(opt.algo_text, "optimal");
  const auto mode = parse_mode(opt.mode_text, "auto");
  const auto format = parse_format(opt.format_text, "table", {"table", "json"});
  const std::int64_t Kp = virtual_users(opt.k, opt.t);
  const GenLimits gen_limits;
  const SolveLimits solve_limits;
  const PatternSet ps =
      build_sorted_cached(Kp, M, mode, gen_limits, cache_dir_opt(opt), &err);
  Plan plan = solve_with(algo, ps, M, solve_limits);
  plan.instance = Instance{opt.k, opt.t, M};
  plan_total_mg(plan);  // exercises the accounting identity
  const std::string text = format == "json" ? render_plan_json(plan, algo)
                                            : render_plan_text(plan, algo);
  emit(text, opt.out_path, out);
}

inline void run_sweep_cmd(const Options& opt, std::ostream& out,
                          std::ostream& err) {
  if (opt.k < 1 || opt.t < 1)
    throw std::domain_error("sweep: requires K >= 1 and T >= 1");
  const auto format = parse_format(opt.format_text, "csv", {"csv", "json"});
  SweepConfig cfg;
  cfg.users = opt.k;
  cfg.antennas_per_user = opt.t;
  cfg.m_max = parse_dim(opt.max_text, "--max");
  cfg.m_min = parse_dim(opt.min_text, "--min");
  cfg.algo = parse_algo(opt.algo_text, "greedy");
  cfg.mode = parse_mode(opt.mode_text, "sparse");
  cfg.any_m = opt.any_m;
  cfg.step = parse_dim(opt.step_text, "--step");
  cfg.cache_dir = cache_dir_opt(opt);
  const auto points = run_sweep(cfg, &err);
  const std::string text =
      format == "json" ? render_sweep_json(points) : render_sweep_csv(points);
  emit(text, opt.out_path, out);
}

inline void run_cache(const Options& opt, std::ostream& out,
                      std::ostream& err) {
  if (opt.k < 1) throw std::domain_error("cache: requires K >= 1");
  const Dim M = parse_dim(opt.m_text, "--m");
  const auto mode = parse_mode(opt.mode_text, "auto");
  if (opt.cache_dir.empty())
    throw std::invalid_argument(
        "cache: requires --cache-dir (or GIA_CACHE_DIR)");
  const GenLimits limits;
  const auto t0 = std::chrono::steady_clock::now();
  bool hit = false;
  const PatternSet ps =
      build_sorted_cached(opt.k, M, mode, limits, cache_dir_opt(opt), &err, &hit);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  const auto path = cache_file_path(std::filesystem::path(opt.cache_dir),
                                    ps.K, ps.M, ps.mode);
  out << (hit ? "cache hit: " : "generated and stored: ") << path.string()
      << " (W=" << ps.size() << ", " << ms << " ms)\n";
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"group-pattern planner for interference alignment"};
  app.require_subcommand(1);
  Options opt;

  const auto add_cache_dir = [&](CLI::App* cmd) {
    cmd->add_option("--cache-dir", opt.cache_dir,
                    "pattern-set cache directory")
        ->envname("GIA_CACHE_DIR");
  };

  auto* dims =
      app.add_subcommand("dims", "list feasible extended-channel dimensions");
  dims->add_option("--k", opt.k, "user count")->required();
  dims->add_option("--max", opt.max_text, "largest dimension to list")
      ->required();
  dims->add_option("--format", opt.format_text, "table|csv|json");
  dims->add_option("--out", opt.out_path, "write to file instead of stdout");
  dims->callback([&] { run_dims(opt, out); });

  auto* patterns =
      app.add_subcommand("patterns", "build the group-pattern set");
  patterns->add_option("--k", opt.k, "total user count K")->required();
  patterns->add_option("--m", opt.m_text, "total dimensions M")->required();
  patterns->add_option("--stage", opt.stage_text, "raw|pruned|sorted");
  patterns->add_option("--mode", opt.mode_text, "auto|exhaustive|sparse");
  patterns->add_option("--format", opt.format_text, "table|csv|json");
  patterns->add_option("--out", opt.out_path,
                       "write to file instead of stdout");
  add_cache_dir(patterns);
  patterns->callback([&] { run_patterns(opt, out, err); });

  auto* plan =
      app.add_subcommand("plan", "choose a pattern multiset for (K, T, M)");
  plan->add_option("--k", opt.k, "user count K")->required();
  plan->add_option("--t", opt.t, "antennas per user (default 1)");
  plan->add_option("--m", opt.m_text, "total dimensions M")->required();
  plan->add_option("--algo", opt.algo_text,
                   "optimal|greedy|brute (default optimal)");
  plan->add_option("--mode", opt.mode_text, "auto|exhaustive|sparse");
  plan->add_option("--format", opt.format_text, "table|json");
  plan->add_option("--out", opt.out_path, "write to file instead of stdout");
  add_cache_dir(plan);
  plan->callback([&] { run_plan(opt, out, err); });

  auto* sweep = app.add_subcommand(
      "sweep", "tabulate grouped vs single-group MG over a range of M");
  sweep->add_option("--k", opt.k, "user count K")->required();
  sweep->add_option("--t", opt.t, "antennas per user (default 1)");
  sweep->add_option("--max", opt.max_text, "largest M")->required();
  sweep->add_option("--min", opt.min_text, "smallest M (default 1)");
  sweep->add_option("--algo", opt.algo_text,
                    "optimal|greedy|brute (default greedy)");
  sweep->add_option("--mode", opt.mode_text,
                    "auto|exhaustive|sparse (default sparse)");
  sweep->add_flag("--any-m", opt.any_m,
                  "sample every --step-th M instead of ladder points "
                  "(BF-IA columns stay empty off the ladder)");
  sweep->add_option("--step", opt.step_text, "sample stride with --any-m");
  sweep->add_option("--format", opt.format_text, "csv|json");
  sweep->add_option("--out", opt.out_path, "write to file instead of stdout");
  add_cache_dir(sweep);
  sweep->callback([&] { run_sweep_cmd(opt, out, err); });

  auto* cache =
      app.add_subcommand("cache", "prewarm or probe the pattern-set cache");
  cache->add_option("--k", opt.k, "user count K")->required();
  cache->add_option("--m", opt.m_text, "total dimensions M")->required();
  cache->add_option("--mode", opt.mode_text, "auto|exhaustive|sparse");
  add_cache_dir(cache);
  cache->callback([&] { run_cache(opt, out, err); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gia");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gia::cli

#endif
