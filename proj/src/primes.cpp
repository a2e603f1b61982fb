#include "ladderlab/primes.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace ladderlab {

namespace {

struct Sieve {
  static constexpr std::uint64_t kLimit = 10'000'000;
  std::vector<std::uint64_t> composite;  // bit n set => n is composite

  Sieve() : composite(kLimit / 64 + 1, 0) {
    mark(0);
    mark(1);
    for (std::uint64_t i = 2; i * i <= kLimit; ++i)
      if (!test(i))
        for (std::uint64_t j = i * i; j <= kLimit; j += i) mark(j);
  }

  void mark(std::uint64_t n) { composite[n >> 6] |= 1ull << (n & 63); }
  bool test(std::uint64_t n) const {
    return composite[n >> 6] >> (n & 63) & 1;
  }

  long long count_upto(std::uint64_t n) const {
    const std::uint64_t words = n >> 6;
    std::uint64_t composites = 0;
    for (std::uint64_t w = 0; w < words; ++w)
      composites += std::popcount(composite[w]);
    const std::uint64_t rem = (n & 63) + 1;
    composites += std::popcount(
        composite[words] & (rem == 64 ? ~0ull : (1ull << rem) - 1));
    return static_cast<long long>(n + 1 - composites);
  }
};

}  // namespace

long long prime_count(double x) {
  if (x > kPrimeCountLimit)
    throw RangeTooLarge("prime_count: x above sieve limit");
  if (x < 2.0) return 0;
  static const Sieve sieve;
  return sieve.count_upto(static_cast<std::uint64_t>(std::floor(x)));
}

}  // namespace ladderlab
