#ifndef MPROF_FFT_HPP
#define MPROF_FFT_HPP

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "mprof/types.hpp"

namespace mprof {

std::size_t next_pow2(std::size_t n);

// Real-to-complex FFT of a fixed power-of-two size, backed by FFTW with
// deterministic (FFTW_ESTIMATE) plans. Instances are not shareable across
// threads; create one per worker. Plan creation is internally serialized.
class RealFft {
public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft &) = delete;
  RealFft &operator=(const RealFft &) = delete;

  std::size_t size() const { return n_; }

  // out must hold n/2 + 1 complex values.
  void forward(std::span<const double> in, std::complex<double> *out);
  // Unnormalized inverse: the caller divides by size().
  void inverse(std::span<const std::complex<double>> in, double *out);

private:
  struct Impl;
  std::size_t n_;
  std::unique_ptr<Impl> impl_;
};

// Sliding dot products of one query against every window of a fixed series:
// out[i] = sum_k query[k] * series[i + k], i in [0, n - w].
//
// The plan caches the series spectrum so repeated queries (STAMP) cost one
// forward and one inverse transform each.
class SlidingDotPlan {
public:
  SlidingDotPlan(std::span<const double> series, Index window);

  Index profile_len() const { return static_cast<Index>(n_ - w_ + 1); }

  std::vector<double> query(std::span<const double> q);
  void query_into(std::span<const double> q, double *out);

private:
  std::size_t n_, w_, fft_n_;
  RealFft fft_;
  std::vector<std::complex<double>> series_hat_;
  std::vector<double> real_buf_;
  std::vector<std::complex<double>> cx_buf_;
};

// FFT path, O(n log n). Throws ParameterError on length mismatch.
std::vector<double> sliding_dot_product(std::span<const double> query,
                                        std::span<const double> series);

// Direct O(nw) reference path.
std::vector<double> sliding_dot_product_direct(std::span<const double> query,
                                               std::span<const double> series);

} // namespace mprof

#endif
