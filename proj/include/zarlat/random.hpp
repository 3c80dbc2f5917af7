#pragma once

#include <random>

#include "zarlat/ring.hpp"

namespace zarlat {

/// All randomized suites draw from an explicitly seeded generator; there is
/// no ambient entropy anywhere in the library.
using Rng = std::mt19937_64;

/// A random element of the given ring. `size` scales magnitudes and degrees;
/// values are derived from raw generator output so a fixed seed gives the
/// same stream on every platform.
Elem random_elem(Rng& rng, const RingPtr& ring, int size = 2);
Elem random_nonzero(Rng& rng, const RingPtr& ring, int size = 2);

} // namespace zarlat
