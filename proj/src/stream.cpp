#include "bergman/stream.hpp"

#include "bergman/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace bergman {

namespace {
constexpr double kHuge = 1e150;
constexpr double kTiny = 1e-150;
}  // namespace

cplx CoefficientStream::value(std::size_t k) const {
  if (mant_[k] == cplx{}) return {};
  return mant_[k] * std::exp(scale_[k]);
}

double CoefficientStream::log_abs(std::size_t k) const {
  const double a = std::abs(mant_[k]);
  if (a == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(a) + scale_[k];
}

std::vector<cplx> CoefficientStream::values(std::size_t count) const {
  const std::size_t n = count == 0 ? size() : std::min(count, size());
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = value(k);
  return out;
}

std::size_t CoefficientStream::first_nonzero() const {
  for (std::size_t k = 0; k < mant_.size(); ++k) {
    if (mant_[k] != cplx{}) return k;
  }
  return mant_.size();
}

void CoefficientStream::write_csv(std::ostream& os) const {
  os << "k,re,im,norm_partial,log_scale\n";
  for (std::size_t k = 0; k < size(); ++k) {
    os << k << ',' << io::fmt(mant_[k].real()) << ',' << io::fmt(mant_[k].imag()) << ','
       << io::fmt(norm_partials_[k]) << ',' << io::fmt(scale_[k]) << '\n';
  }
}

StreamBuilder::StreamBuilder(int stride, int block_length, std::size_t reserve, int renorm_period)
    : renorm_period_(renorm_period) {
  out_.stride_ = std::max(stride, 1);
  out_.block_length_ = std::max(block_length, 1);
  out_.mant_.reserve(reserve);
  out_.scale_.reserve(reserve);
  out_.norm_partials_.reserve(reserve);
  segment_.reserve(reserve);
  seg_scale_.push_back(0.0);
  seg_factor_.push_back(1.0);
}

cplx StreamBuilder::get(std::size_t k) const { return out_.mant_[k] * seg_factor_[segment_[k]]; }

void StreamBuilder::push(cplx v) {
  const std::size_t k = out_.mant_.size();
  out_.mant_.push_back(v);
  out_.scale_.push_back(cur_scale_);
  segment_.push_back(seg_scale_.size() - 1);

  const double prev = k == 0 ? 0.0 : out_.norm_partials_.back();
  const double a = std::abs(v);
  double term = 0.0;
  if (a > 0.0) term = std::exp(2.0 * (std::log(a) + cur_scale_) - std::log(static_cast<double>(k + 1)));
  out_.norm_partials_.push_back(prev + term);

  const bool out_of_range = a > kHuge || (a > 0.0 && a < kTiny);
  if (renorm_period_ <= 0) return;
  if (out_of_range || k + 1 - last_renorm_ >= static_cast<std::size_t>(renorm_period_)) renormalize();
}

void StreamBuilder::renormalize() {
  const std::size_t n = out_.mant_.size();
  last_renorm_ = n;
  // Only the trailing block_length coefficients feed the next recursion step.
  const std::size_t window = 2 * static_cast<std::size_t>(out_.block_length_) + 2;
  const std::size_t lo = n > window ? n - window : 0;
  double mx = 0.0;
  for (std::size_t k = lo; k < n; ++k) mx = std::max(mx, std::abs(get(k)));
  if (!(mx > 0.0) || !std::isfinite(mx)) return;
  if (std::abs(std::log(mx)) < 16.0) return;
  cur_scale_ += std::log(mx);
  seg_scale_.push_back(cur_scale_);
  seg_factor_.push_back(1.0);
  for (std::size_t s = 0; s + 1 < seg_scale_.size(); ++s) seg_factor_[s] = std::exp(seg_scale_[s] - cur_scale_);
}

CoefficientStream StreamBuilder::finish() && {
  CoefficientStream s = std::move(out_);
  const std::size_t o = s.first_nonzero();
  const std::size_t m = static_cast<std::size_t>(s.stride_);
  for (std::size_t a = o; a + m < s.size(); a += m) {
    const std::size_t b = a + m;
    if (s.mant_[a] == cplx{}) continue;
    s.ratio_trace_.push_back(s.mant_[b] / s.mant_[a] * std::exp(s.scale_[b] - s.scale_[a]));
  }
  return s;
}

}  // namespace bergman
