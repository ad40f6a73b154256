#pragma once

#include <functional>
#include <vector>

#include "nodal_theta/complex_pair.hpp"

namespace nodal_theta {

/// Continuous branch of log f(x) for a nonvanishing f on [0, 1].
///
/// Knots are placed adaptively so that the argument of f changes by less than
/// max_step between neighbours; each step is cross-checked at its midpoint.
/// Evaluation between knots adds the principal log of f(x)/f(knot).
class ContinuousLog {
 public:
  using Function = std::function<Complex(double)>;

  /// log_start is the branch value at x = 0; by default the principal Log.
  ContinuousLog(Function f, double max_step = kPi / 4.0, int max_depth = 40);
  ContinuousLog(Function f, Complex log_start, double max_step = kPi / 4.0,
                int max_depth = 40);

  Complex operator()(double x) const;
  Complex at_end() const { return logs_.back(); }
  /// at_end() minus the start value.
  Complex delta() const { return logs_.back() - logs_.front(); }
  std::size_t knot_count() const { return xs_.size(); }

 private:
  void build(Complex log_start);
  void refine(double xa, Complex fa, double xb, Complex fb, int depth);

  Function f_;
  double max_step_;
  int max_depth_;
  std::vector<double> xs_;
  std::vector<Complex> values_;
  std::vector<Complex> logs_;
};

}  // namespace nodal_theta
