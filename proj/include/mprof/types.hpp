#ifndef MPROF_TYPES_HPP
#define MPROF_TYPES_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mprof/error.hpp"

namespace mprof {

using Index = std::int64_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr Index kNone = -1;

// Smallest admissible sliding window. Below this, z-normalized distances are
// dominated by the flat-window convention and carry no signal.
inline constexpr Index kMinWindow = 4;

// A finite, regularly sampled sequence of real values. Validated on
// construction: length >= kMinWindow and every sample finite.
class TimeSeries {
public:
  explicit TimeSeries(std::vector<double> values);

  Index size() const { return static_cast<Index>(values_.size()); }
  double operator[](Index i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<double> &values() const { return values_; }
  std::span<const double> span() const { return values_; }
  std::span<const double> window(Index start, Index w) const {
    return std::span<const double>(values_).subspan(static_cast<std::size_t>(start),
                                                    static_cast<std::size_t>(w));
  }

private:
  std::vector<double> values_;
};

// d aligned dimensions of identical length.
class MultiTimeSeries {
public:
  explicit MultiTimeSeries(std::vector<TimeSeries> dims);

  Index dims() const { return static_cast<Index>(dims_.size()); }
  Index size() const { return dims_.front().size(); }
  const TimeSeries &dim(Index k) const { return dims_[static_cast<std::size_t>(k)]; }

private:
  std::vector<TimeSeries> dims_;
};

// Distances from one fixed query subsequence to every window of a series.
// Excluded positions carry +infinity.
struct DistanceProfile {
  std::vector<double> distances;
  Index query_index = kNone; // position of the query in a self-join, else -1

  Index size() const { return static_cast<Index>(distances.size()); }
};

} // namespace mprof

#endif
