#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>

#include "doctest.h"
#include "ladderlab/errors.hpp"
#include "ladderlab/primes.hpp"
#include "oracle/oracle_data.hpp"

using namespace ladderlab;

namespace {

// Independent reference: trial division, fine for small x.
long long pi_trial(long long x) {
  long long count = 0;
  for (long long n = 2; n <= x; ++n) {
    bool prime = true;
    for (long long d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("prime_count matches the frozen reference table") {
  for (const auto& e : oracle::kPrimePi)
    CHECK(prime_count(e.x) == e.count);
}

TEST_CASE("prime_count matches trial division at pseudorandom points") {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < 60; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    const long long x = 2 + static_cast<long long>(state % 20000);
    CHECK(prime_count(static_cast<double>(x)) == pi_trial(x));
  }
}

TEST_CASE("prime_count edge behavior") {
  CHECK(prime_count(0.0) == 0);
  CHECK(prime_count(1.0) == 0);
  CHECK(prime_count(1.99) == 0);
  CHECK(prime_count(2.0) == 1);
  CHECK(prime_count(2.5) == 1);
  CHECK(prime_count(3.0) == 2);
  CHECK(prime_count(-10.0) == 0);
}

TEST_CASE("prime_count rejects arguments beyond the sieve") {
  CHECK_THROWS_AS(prime_count(2e7), RangeTooLarge);
  CHECK(prime_count(kPrimeCountLimit) >= 0);  // the limit itself is in range
}
