/*
 * On-disk pattern-set cache: line-delimited records keyed by
 * (K, M, mode, format-version), written atomically, regenerated (never
 * trusted) on any version or key mismatch.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#ifndef GIA_CACHE_HPP
#define GIA_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "gia/errors.hpp"
#include "gia/patterns.hpp"
#include "gia/rational.hpp"

namespace gia {

inline constexpr const char* kCacheFormatVersion = "v1";

inline std::filesystem::path cache_file_path(const std::filesystem::path& dir,
                                             std::int64_t K, Dim M,
                                             GenMode mode) {
  std::ostringstream name;
  name << "gia-K" << K << "-M" << M << "-" << to_string(mode) << ".cache";
  return dir / name.str();
}

/// Serialize a sorted pattern set. Returns the final path. Writes to a
/// sibling temp file and renames, so readers never observe a partial file.
inline std::filesystem::path cache_store(const PatternSet& ps,
                                         const std::filesystem::path& dir) {
  if (ps.stage != Stage::sorted)
    throw std::invalid_argument("cache_store: only sorted sets are cached");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cache_store: cannot create " + dir.string() + ": " +
                        ec.message());
  const auto path = cache_file_path(dir, ps.K, ps.M, ps.mode);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cache_store: cannot open " + tmp);
    out << "GIA-CACHE " << kCacheFormatVersion << ' ' << ps.K << ' ' << ps.M
        << ' ' << to_string(ps.mode) << ' ' << to_string(ps.stage) << '\n';
    for (const auto& e : ps.entries)
      out << e.k << ' ' << e.m << ' ' << e.n_star << ' ' << e.v.num() << ' '
          << e.v.den() << '\n';
    if (!out) throw IoError("cache_store: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cache_store: rename failed for " + path.string() +
                        ": " + ec.message());
  return path;
}

/// Load a cached set, or nullopt when the file is absent, was written by a
/// different format version, or does not parse. Mismatch and corruption are
/// reported on `warn` and treated as a miss: the caller regenerates.
inline std::optional<PatternSet> cache_load(const std::filesystem::path& dir,
                                            std::int64_t K, Dim M,
                                            GenMode mode,
                                            std::ostream* warn = nullptr) {
  const auto path = cache_file_path(dir, K, M, mode);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;

  const auto miss = [&](const std::string& why) -> std::optional<PatternSet> {
    if (warn) *warn << "cache: ignoring " << path.string() << " (" << why
                    << "); regenerating\n";
    return std::nullopt;
  };

  std::string line;
  if (!std::getline(in, line)) return miss("empty file");
  std::istringstream header(line);
  std::string magic, version, mode_str, stage_str;
  std::int64_t file_K = 0;
  Dim file_M = 0;
  if (!(header >> magic >> version >> file_K >> file_M >> mode_str >>
        stage_str) ||
      magic != "GIA-CACHE")
    return miss("bad header");
  if (version != kCacheFormatVersion)
    return miss("format version " + version + " != " + kCacheFormatVersion);
  if (file_K != K || file_M != M || mode_str != to_string(mode))
    return miss("key mismatch");
  if (stage_str != to_string(Stage::sorted)) return miss("not a sorted set");

  PatternSet ps{K, M, mode, Stage::sorted, {}};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    GroupPattern e;
    std::string num_str, den_str;
    if (!(row >> e.k >> e.m >> e.n_star >> num_str >> den_str))
      return miss("corrupt record");
    try {
      e.v = Rational(Int(num_str), Int(den_str));
    } catch (const std::exception&) {
      return miss("corrupt record");
    }
    if (e.k < 3 || e.m < 1 || e.m > M || e.n_star < 0)
      return miss("corrupt record");
    e.rho = e.v / Rational(Int(e.m));
    ps.entries.push_back(std::move(e));
  }
  return ps;
}

}  // namespace gia

#endif
