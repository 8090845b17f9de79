#ifndef LNAT_RNG_HPP
#define LNAT_RNG_HPP

// Seeded pseudorandom stream shared by adversaries and learners.
//
// One stream per experiment run. Consumption order is part of the
// reproducibility contract:
//   1. adversary generation draws (all of them, in round order),
//   2. per learner round t:
//        full information: one unit draw (the rounding threshold),
//        bandit: one unit draw (arm selection), then one sign draw
//                only when an interior arm was selected.
// Traces are bit-reproducible given (seed, config).

#include <cstdint>
#include <random>

#include "lnat/rational.hpp"

namespace lnat {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_raw() { return eng_(); }

  /// Uniform on [0,1) with 53-bit resolution.
  double uniform_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Same distribution as uniform_unit but exact: k / 2^53.
  Rat unit_rational() { return rat(static_cast<Int>(eng_() >> 11), Int{1} << 53); }

  /// Uniform sign in {-1, +1}.
  int rademacher() { return (eng_() & 1u) ? 1 : -1; }

  /// Uniform integer in [lo, hi], inclusive; rejection sampling.
  Int uniform_int(Int lo, Int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<Int>(eng_());  // full 2^64 range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return lo + static_cast<Int>(r % span);
  }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform_unit(); }

  /// Derives an independent child stream; deterministic in (seed, salt).
  RngStream split(std::uint64_t salt) const {
    return RngStream(splitmix64(seed_ ^ splitmix64(salt + 0x5851f42d4c957f2dULL)));
  }

 private:
  std::mt19937_64 eng_;
  std::uint64_t seed_;
};

}  // namespace lnat

#endif
