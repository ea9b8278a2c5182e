#pragma once

#include "bergman/cpoly.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace bergman {

/// Taylor coefficients d_0..d_K of a candidate kernel or range element.
///
/// Each coefficient is stored as a mantissa together with a natural-log scale,
/// d_k = mantissa(k) * exp(log_scale(k)), so geometrically growing or decaying
/// streams survive K in the tens of thousands without overflow.
class CoefficientStream {
 public:
  std::size_t size() const { return mant_.size(); }
  bool empty() const { return mant_.empty(); }

  cplx mantissa(std::size_t k) const { return mant_[k]; }
  double log_scale(std::size_t k) const { return scale_[k]; }

  /// The true coefficient; may overflow to inf or underflow to 0.
  cplx value(std::size_t k) const;
  /// log |d_k|, -inf for an exact zero.
  double log_abs(std::size_t k) const;
  /// The first `count` true coefficients (all of them when count == 0).
  std::vector<cplx> values(std::size_t count = 0) const;

  /// Partial sums sum_{j<=k} |d_j|^2 / (j+1); saturate at +inf.
  const std::vector<double>& norm_partials() const { return norm_partials_; }
  /// d_{o+(j+1)m} / d_{o+jm} with o the first nonzero seed index.
  const std::vector<cplx>& ratio_trace() const { return ratio_trace_; }

  /// m: the ratio-trace stride.
  int stride() const { return stride_; }
  /// Length of the linear recurrence that produced the stream; a nontrivial
  /// solution has no run of this many consecutive zeros.
  int block_length() const { return block_length_; }
  /// Index of the first nonzero coefficient (size() when identically zero).
  std::size_t first_nonzero() const;

  /// CSV with columns k, re, im, norm_partial, log_scale.
  void write_csv(std::ostream& os) const;

 private:
  friend class StreamBuilder;
  int stride_ = 1;
  int block_length_ = 1;
  std::vector<cplx> mant_;
  std::vector<double> scale_;
  std::vector<double> norm_partials_;
  std::vector<cplx> ratio_trace_;
};

/// Incrementally builds a CoefficientStream from a recursion.
///
/// push() takes values expressed in the current working scale; get() returns
/// earlier coefficients converted to that same scale. The builder rescales by
/// the recent maximum modulus every `renorm_period` pushes and whenever a
/// value leaves [1e-150, 1e150]. A non-positive period disables rescaling.
class StreamBuilder {
 public:
  StreamBuilder(int stride, int block_length, std::size_t reserve = 0, int renorm_period = 512);

  void push(cplx v);
  cplx get(std::size_t k) const;
  std::size_t size() const { return out_.mant_.size(); }

  CoefficientStream finish() &&;

 private:
  void renormalize();

  CoefficientStream out_;
  int renorm_period_;
  double cur_scale_ = 0.0;
  std::vector<std::size_t> segment_;   // segment id per coefficient
  std::vector<double> seg_scale_;
  std::vector<double> seg_factor_;     // exp(seg_scale - cur_scale)
  std::size_t last_renorm_ = 0;
};

}  // namespace bergman
