#pragma once

#include <stdexcept>
#include <string>

namespace nodal_theta {

/// Base class of every numerical failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theta series needed more than SeriesPolicy::max_index terms.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

/// eta was evaluated on top of one of its poles.
class PoleAt : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// Continuation of a logarithm could not keep argument steps below the bound.
class BranchStepTooLarge : public Error {
 public:
  using Error::Error;
};

/// A path came closer to p1 or p2 than the curve allows.
class PoleProximity : public Error {
 public:
  using Error::Error;
};

/// The shift c is unusable for this draw; callers resample c and retry.
class ResampleRequired : public Error {
 public:
  using Error::Error;
};

class ContourThroughZero : public ResampleRequired {
 public:
  using ResampleRequired::ResampleRequired;
};

class ZeroCollision : public ResampleRequired {
 public:
  using ResampleRequired::ResampleRequired;
};

/// Genericity guard on c failed (theta value at p1 too small, or a zero of
/// the pullback inside one of the excluded disks).
class NonGeneric : public ResampleRequired {
 public:
  using ResampleRequired::ResampleRequired;
};

/// The Laurent leading coefficient at p2 vanishes (numerically).
class DegenerateC : public ResampleRequired {
 public:
  using ResampleRequired::ResampleRequired;
};

class NewtonDivergence : public Error {
 public:
  using Error::Error;
};

/// The target lies on another sheet: the continued logarithm inside H3 differs
/// from the requested value by a nonzero integer multiple of 2*pi*i.
class OutsideSheet : public NewtonDivergence {
 public:
  OutsideSheet(const std::string& what, long offset)
      : NewtonDivergence(what), offset_(offset) {}
  long offset() const noexcept { return offset_; }

 private:
  long offset_;
};

class JacobianSingular : public Error {
 public:
  using Error::Error;
};

class NoValidEpsilon : public Error {
 public:
  using Error::Error;
};

}  // namespace nodal_theta
