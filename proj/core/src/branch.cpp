#include "nodal_theta/branch.hpp"

#include <algorithm>
#include <cmath>

#include "nodal_theta/errors.hpp"

namespace nodal_theta {

namespace {

void check_value(Complex v) {
  if (v == Complex{} || !std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw BranchStepTooLarge("continued log: function vanishes or is not finite");
  }
}

}  // namespace

ContinuousLog::ContinuousLog(Function f, double max_step, int max_depth)
    : f_(std::move(f)), max_step_(max_step), max_depth_(max_depth) {
  const Complex f0 = f_(0.0);
  check_value(f0);
  build(std::log(f0));
}

ContinuousLog::ContinuousLog(Function f, Complex log_start, double max_step,
                             int max_depth)
    : f_(std::move(f)), max_step_(max_step), max_depth_(max_depth) {
  build(log_start);
}

void ContinuousLog::build(Complex log_start) {
  const Complex f0 = f_(0.0);
  const Complex f1 = f_(1.0);
  check_value(f0);
  check_value(f1);
  xs_ = {0.0};
  values_ = {f0};
  logs_ = {log_start};
  refine(0.0, f0, 1.0, f1, 0);
}

void ContinuousLog::refine(double xa, Complex fa, double xb, Complex fb,
                           int depth) {
  const double xm = 0.5 * (xa + xb);
  const Complex fm = f_(xm);
  check_value(fm);
  const Complex whole = std::log(fb / fa);
  const Complex left = std::log(fm / fa);
  const Complex right = std::log(fb / fm);
  const bool small = std::abs(whole.imag()) < max_step_ &&
                     std::abs(left.imag()) < max_step_ &&
                     std::abs(right.imag()) < max_step_;
  const bool consistent = std::abs((left + right - whole).imag()) < 1e-6;
  if (small && consistent) {
    xs_.push_back(xm);
    values_.push_back(fm);
    logs_.push_back(logs_.back() + left);
    xs_.push_back(xb);
    values_.push_back(fb);
    logs_.push_back(logs_.back() + right);
    return;
  }
  if (depth >= max_depth_) {
    throw BranchStepTooLarge("continued log: argument step stays above bound");
  }
  refine(xa, fa, xm, fm, depth + 1);
  refine(xm, fm, xb, fb, depth + 1);
}

Complex ContinuousLog::operator()(double x) const {
  x = std::clamp(x, 0.0, 1.0);
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = it == xs_.begin() ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
  if (i + 1 >= xs_.size() && i > 0) --i;
  const Complex fx = f_(x);
  check_value(fx);
  return logs_[i] + std::log(fx / values_[i]);
}

}  // namespace nodal_theta
