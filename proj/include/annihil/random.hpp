#pragma once

// Random test data for property checks.

#include "annihil/algebra.hpp"

#include <random>

namespace annihil {

using Rng = std::mt19937_64;

/// Uniform over compositions of d into s positive parts (d >= s >= 0).
Monomial random_monomial(Rng& rng, Bidegree at);

/// A random homogeneous element: each basis monomial of `at` is kept with
/// probability 1/2, capped at `max_terms` samples for large pieces.
Element random_element(Rng& rng, Bidegree at, int max_terms = 8);

/// As random_element, but never zero (when the piece is nonzero).
Element random_nonzero_element(Rng& rng, Bidegree at, int max_terms = 8);

/// A random bidegree with s_min <= s <= s_max and s <= d <= s + extra;
/// length zero always gives (0,0).
Bidegree random_bidegree(Rng& rng, int s_min, int s_max, int extra);

}  // namespace annihil
