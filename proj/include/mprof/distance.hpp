#ifndef MPROF_DISTANCE_HPP
#define MPROF_DISTANCE_HPP

#include <span>
#include <vector>

#include "mprof/rolling.hpp"
#include "mprof/types.hpp"

namespace mprof {

// z-normalized Euclidean distance recovered from a dot product:
//   d^2 = 2w (1 - (qt - w mu_a mu_b) / (w sd_a sd_b))
// clamped to [0, 4w]. Flat-window convention: both windows flat -> 0,
// exactly one flat -> sqrt(w).
double znorm_dist_from_qt(double qt, Index w, double mu_a, double sd_a, double mu_b,
                          double sd_b);

// Resolved exclusion-zone half-width: round-half-up of w * fraction.
Index zone_size(Index window, double fraction);

// Sets entries with |i - center| <= zone to +infinity.
DistanceProfile apply_exclusion_zone(DistanceProfile dp, Index center, Index zone);
void apply_exclusion_zone_inplace(std::span<double> distances, Index center, Index zone);

// MASS: distances from `query` to every window of `ts`, dot products via FFT.
// `stats` are the rolling statistics of `ts` with the same window length as
// the query; query_mean / query_std follow the same population convention.
// Near-zero hits are recomputed directly so exact matches come out as 0.
DistanceProfile mass_distance_profile(std::span<const double> query,
                                      std::span<const double> ts,
                                      const RollingStats &stats, double query_mean,
                                      double query_std, Index query_index = kNone);

// Per-window sums of squares for every dimension of a multivariate series;
// precomputed support for the non-normalized distance path.
struct RawNorms {
  std::vector<std::vector<double>> window_sumsq; // [dim][window]
  Index window = 0;
};

RawNorms raw_norms(const MultiTimeSeries &mts, Index window);

// Non-normalized Euclidean distance summed across dimensions:
//   d[i] = sqrt( sum_dims ( |q_d|^2 + |T_i,d|^2 - 2 QT_d[i] ) ).
// The query is one window per dimension, aligned with `mts` dims.
DistanceProfile raw_distance_profile(const std::vector<std::span<const double>> &query,
                                     const MultiTimeSeries &mts, const RawNorms &norms,
                                     Index query_index = kNone);

// One dimension's squared contribution, clamped at 0.
double raw_sq_term(double sumsq_a, double sumsq_b, double qt);

// Total raw distance with a relative snap: squared totals that are rounding
// residue of an exact match (relative to `scale`, the summed window energies)
// come out as exactly 0.
double raw_distance_from_terms(double dsq_total, double scale);

} // namespace mprof

#endif
