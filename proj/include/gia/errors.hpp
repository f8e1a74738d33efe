/*
 * Error types shared across the library.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#ifndef GIA_ERRORS_HPP
#define GIA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gia {

// A configured limit was exceeded (DP capacity, exhaustive generation
// bound, brute-force guard). Maps to CLI exit code 2.
struct LimitError : std::runtime_error {
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// File-system or serialization failure. Maps to CLI exit code 3.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gia

#endif
