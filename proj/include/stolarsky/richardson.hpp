#ifndef STOLARSKY_RICHARDSON_HPP_
#define STOLARSKY_RICHARDSON_HPP_

#include <cmath>
#include <optional>
#include <span>

namespace stolarsky {

// Empirical convergence order from a sequence of differences d_k taken as a
// step parameter halves: order ~ mean of log2(|d_k| / |d_{k+1}|).
// Pairs where either difference is at or below `floor` are skipped -- once a
// difference sits in roundoff the ratio carries no information.  Returns
// nullopt when no informative pair remains (the sequence converged below the
// floor immediately, which callers should treat as success).
inline std::optional<double> estimate_order(std::span<const double> diffs,
                                            double floor = 0.0) {
  double sum = 0.0;
  int used = 0;
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
    const double d0 = std::fabs(diffs[i]);
    const double d1 = std::fabs(diffs[i + 1]);
    if (d0 <= floor || d1 <= floor) continue;
    sum += std::log2(d0 / d1);
    ++used;
  }
  if (used == 0) return std::nullopt;
  return sum / used;
}

// One step of Richardson extrapolation for a first-order sequence:
// q(r) = q* + C r + O(r^2) sampled at r and r/2.
inline double extrapolate_order1(double coarse, double fine) {
  return 2.0 * fine - coarse;
}

}  // namespace stolarsky

#endif  // STOLARSKY_RICHARDSON_HPP_
