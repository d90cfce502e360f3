#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace adjq {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// Deterministic random source. All randomized checks thread one of these
// through explicitly; identical seeds give identical runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform integer in [lo, hi]. Modulo bias is irrelevant for sampling checks.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Nonzero rational with |numerator| <= max_num and 1 <= denominator <= max_den.
  mpq_class rational(long max_num, long max_den) {
    long num = 0;
    while (num == 0) num = uniform(-max_num, max_num);
    long den = uniform(1, max_den);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  // Ratio of two distinct primes <= 97. Products of such values collide
  // with 1 only when they cancel exactly, which keeps multiplicative
  // fiber checks honest.
  mpq_class prime_ratio() {
    static const std::vector<int> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                            43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    int p = primes[static_cast<std::size_t>(uniform(0, static_cast<long>(primes.size()) - 1))];
    int q = p;
    while (q == p)
      q = primes[static_cast<std::size_t>(uniform(0, static_cast<long>(primes.size()) - 1))];
    mpq_class v(p, q);
    v.canonicalize();
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace adjq
