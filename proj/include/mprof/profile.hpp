#ifndef MPROF_PROFILE_HPP
#define MPROF_PROFILE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mprof/distance.hpp"
#include "mprof/types.hpp"

namespace mprof {

enum class Mode { brute, stamp, stomp, scrimp, mstomp, simple };
enum class JoinKind { self, ab };

const char *mode_name(Mode mode);
std::optional<Mode> mode_from_name(const std::string &name);

// Run everything: sentinel for the anytime s_size arguments.
inline constexpr Index kFullRun = std::numeric_limits<Index>::max();

// Coarse progress callback, fraction in [0, 1]. Invoked from one thread only.
using ProgressFn = std::function<void(double)>;

// The similarity-join result: per window, the z-normalized distance to its
// nearest admissible neighbor and where that neighbor sits.
struct MatrixProfile {
  std::vector<double> values;      // length n_a - w + 1, +inf where excluded/uncomputed
  std::vector<Index> index;        // nearest neighbor (-1 undefined)
  std::vector<Index> left_index;   // neighbor restricted to j < i; empty if absent
  std::vector<Index> right_index;  // neighbor restricted to j > i; empty if absent
  Index window = 0;
  Index exclusion_zone = 0;        // resolved half-width, 0 for AB-joins
  Mode mode = Mode::brute;
  JoinKind join_kind = JoinKind::self;
  double coverage = 1.0;           // fraction of distance profiles computed
  std::uint64_t seed = 0;          // order seed for the anytime algorithms
  Index data_len = 0;              // n_a
  Index data_len_b = 0;            // n_b, 0 for self-joins
  Index data_dims = 1;

  Index size() const { return static_cast<Index>(values.size()); }
  bool full_coverage() const { return coverage >= 1.0; }
  bool has_left_right() const { return !left_index.empty(); }
};

// The d-by-(n-w+1) stack of k-dimensional profiles: row k is the best
// (k+1)-dimensional profile. dim_order[k][i] records which dimension filled
// the (k+1)-th slot when row k at column i last improved (-1 when the slot
// repeats an exhausted selection).
struct MultiMatrixProfile {
  std::vector<std::vector<double>> values;   // [k][i]
  std::vector<std::vector<Index>> index;     // [k][i]
  std::vector<std::vector<Index>> dim_order; // [k][i]
  Index window = 0;
  Index exclusion_zone = 0;
  std::vector<Index> must_dims;
  std::vector<Index> exc_dims;
  Index data_len = 0;
  Index data_dims = 0;

  Index size() const { return values.empty() ? 0 : static_cast<Index>(values.front().size()); }
};

// Element-wise minimum merge of one distance profile into an accumulating
// profile. Index updates on strict improvement only; ties keep the incumbent.
void merge_min(MatrixProfile &acc, const DistanceProfile &dp, Index source_index);

// O(n^2 w) reference join by direct per-window z-normalization. The
// correctness oracle for every other algorithm. ts_b == nullptr -> self-join.
MatrixProfile brute_force_mp(const TimeSeries &ts_a, const TimeSeries *ts_b, Index window,
                             double ez_fraction);

// Anytime join: MASS distance profiles merged in a seeded random query order.
MatrixProfile stamp(const TimeSeries &ts_a, const TimeSeries *ts_b, Index window,
                    double ez_fraction, Index s_size = kFullRun, int n_workers = 1,
                    std::uint64_t seed = 0, const ProgressFn &progress = {});

// Ordered O(n^2) join via the incremental dot-product recurrence.
MatrixProfile stomp(const TimeSeries &ts_a, const TimeSeries *ts_b, Index window,
                    double ez_fraction, int n_workers = 1,
                    const ProgressFn &progress = {});

// Anytime O(n^2) self-join over the diagonals of the distance matrix in a
// seeded random order.
MatrixProfile scrimp(const TimeSeries &ts_a, Index window, double ez_fraction,
                     Index s_size = kFullRun, std::uint64_t seed = 0,
                     const ProgressFn &progress = {});

// k-dimensional profiles for every k at once; self-join only.
MultiMatrixProfile mstomp(const MultiTimeSeries &mts, Index window, double ez_fraction,
                          const std::vector<Index> &must_dims = {},
                          const std::vector<Index> &exc_dims = {}, int n_workers = 1,
                          const ProgressFn &progress = {});

// STOMP-style join on non-normalized distances summed over all dimensions.
MatrixProfile simple_join(const MultiTimeSeries &mts_a, const MultiTimeSeries *mts_b,
                          Index window, double ez_fraction,
                          const ProgressFn &progress = {});

} // namespace mprof

#endif
