#ifndef STOLARSKY_RNG_HPP_
#define STOLARSKY_RNG_HPP_

#include <cstdint>

namespace stolarsky {

// SplitMix64 (Steele, Lea, Doug; the java.util.SplittableRandom finalizer).
// Chosen over std::mt19937_64 + distributions because the *entire* mapping
// to doubles is pinned here: identical seeds give bit-identical sweeps on
// every platform with IEEE-754 doubles.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

 private:
  std::uint64_t state_;
};

}  // namespace stolarsky

#endif  // STOLARSKY_RNG_HPP_
