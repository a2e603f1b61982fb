#pragma once

#include "ladderlab/errors.hpp"

namespace ladderlab {

inline constexpr double kPrimeCountLimit = 1e7;

// Exact count of primes <= x, backed by a sieve over [2, kPrimeCountLimit].
// Throws RangeTooLarge above the limit; x < 2 counts zero primes.
long long prime_count(double x);

}  // namespace ladderlab
