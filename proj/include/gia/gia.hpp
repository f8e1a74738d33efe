/*
 * Umbrella header.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#ifndef GIA_GIA_HPP
#define GIA_GIA_HPP

#include "gia/cache.hpp"
#include "gia/errors.hpp"
#include "gia/ia_math.hpp"
#include "gia/patterns.hpp"
#include "gia/rational.hpp"
#include "gia/render.hpp"
#include "gia/solvers.hpp"
#include "gia/sweep.hpp"

#endif
