#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace efg {

// Seeded PRNG with platform-stable draw helpers. std::mt19937_64 produces
// the same stream everywhere; the helpers below avoid std::*_distribution,
// whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 bits of randomness.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), unbiased via rejection.
  std::uint64_t uniform_u64(std::uint64_t n) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  int uniform_int(int n) { return static_cast<int>(uniform_u64(n)); }

  // Index drawn from an unnormalized weight vector.
  int sample_index(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double r = uniform() * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      r -= weights[i];
      if (r < 0.0) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }

  // Derives an independent stream, e.g. one per worker or per iteration.
  std::uint64_t fork_seed() { return next_u64() ^ 0x9e3779b97f4a7c15ull; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace efg
