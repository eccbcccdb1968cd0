#ifndef MPROF_ROLLING_HPP
#define MPROF_ROLLING_HPP

#include <span>
#include <vector>

#include "mprof/types.hpp"

namespace mprof {

// Per-window mean and population standard deviation (divisor w) for every
// window of length `window`. Both sequences have length n - window + 1.
struct RollingStats {
  std::vector<double> means;
  std::vector<double> stds;
  Index window = 0;

  Index size() const { return static_cast<Index>(means.size()); }
};

// A window whose standard deviation falls below this (relative to its mean
// magnitude) is treated as flat; z-normalization is undefined there.
bool is_flat_std(double sd, double mean);

// O(n) rolling statistics via cumulative sums of x and x^2. The series is
// centred on its global mean before accumulating so the variance sums do not
// cancel catastrophically; sub-threshold variances are floored to exactly 0
// so flat windows test as sd == 0.
RollingStats rolling_mean_std(std::span<const double> ts, Index window);

// Rolling sum of squares per window (non-normalized distance support).
std::vector<double> rolling_sumsq(std::span<const double> ts, Index window);

} // namespace mprof

#endif
