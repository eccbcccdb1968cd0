#include "mprof/types.hpp"

#include <cmath>

namespace mprof {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
  const auto n = static_cast<Index>(values_.size());
  if (n < kMinWindow) {
    throw ParameterError("time series too short: length " + std::to_string(n) +
                         " < minimum " + std::to_string(kMinWindow));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ParameterError("time series sample " + std::to_string(i) + " is not finite");
    }
  }
}

MultiTimeSeries::MultiTimeSeries(std::vector<TimeSeries> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw ParameterError("multivariate series needs at least one dimension");
  }
  const Index n = dims_.front().size();
  for (std::size_t k = 1; k < dims_.size(); ++k) {
    if (dims_[k].size() != n) {
      throw ParameterError("dimension " + std::to_string(k) + " has length " +
                           std::to_string(dims_[k].size()) + ", expected " +
                           std::to_string(n));
    }
  }
}

} // namespace mprof
