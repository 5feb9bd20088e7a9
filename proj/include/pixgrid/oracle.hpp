#pragma once

#include <stdexcept>

#include "pixgrid/classify.hpp"

namespace pixgrid {

struct OracleConfig {
  double abs_tol = 1e-12;  // absolute error target, in squared length
  int max_depth = 60;

  void validate() const;
};

class OracleConvergenceError : public std::runtime_error {
 public:
  OracleConvergenceError(double lo, double hi, double estimate_error);

  double panel_lo() const { return lo_; }
  double panel_hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// Numerical overlap of the origin-centred disc with `rect` by adaptive
/// Simpson quadrature over x = R sin(theta), split at every abscissa where
/// a horizontal side meets the circle. Independent of the closed-form path.
double rect_circle_area(const CenteredRect& rect, double radius,
                        const OracleConfig& cfg = {});

}  // namespace pixgrid
