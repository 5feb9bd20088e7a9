#include "pixgrid/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace pixgrid {

namespace {

std::string convergence_message(double lo, double hi, double err) {
  std::ostringstream os;
  os.precision(17);
  os << "oracle quadrature did not converge on panel [" << lo << ", " << hi
     << "] (error estimate " << err << ")";
  return os.str();
}

class Integrand {
 public:
  Integrand(const CenteredRect& rect, double radius)
      : y1_(rect.y1), y3_(rect.y3), radius_(radius) {}

  // Chord height clipped to [y1, y3] at x = R sin(theta), times dx/dtheta.
  double operator()(double theta) const {
    const double half = radius_ * std::cos(theta);
    const double height = std::min(y3_, half) - std::max(y1_, -half);
    return height > 0.0 ? height * half : 0.0;
  }

 private:
  double y1_;
  double y3_;
  double radius_;
};

struct Panel {
  double lo;
  double hi;
  double f_lo;
  double f_mid;
  double f_hi;
  double whole;
};

class AdaptiveSimpson {
 public:
  AdaptiveSimpson(const Integrand& f, double tol_per_width, int max_depth)
      : f_(f), tol_per_width_(tol_per_width), max_depth_(max_depth) {}

  double integrate(double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double f_lo = f_(lo), f_mid = f_(mid), f_hi = f_(hi);
    return refine({lo, hi, f_lo, f_mid, f_hi, simpson(lo, hi, f_lo, f_mid, f_hi)}, 0);
  }

 private:
  static double simpson(double lo, double hi, double a, double m, double b) {
    return (hi - lo) / 6.0 * (a + 4.0 * m + b);
  }

  double refine(const Panel& p, int depth) {
    const double mid = 0.5 * (p.lo + p.hi);
    const double lm = 0.5 * (p.lo + mid);
    const double rm = 0.5 * (mid + p.hi);
    const double f_lm = f_(lm), f_rm = f_(rm);
    const double left = simpson(p.lo, mid, p.f_lo, f_lm, p.f_mid);
    const double right = simpson(mid, p.hi, p.f_mid, f_rm, p.f_hi);
    const double delta = left + right - p.whole;
    const double tol = tol_per_width_ * (p.hi - p.lo);
    if (std::abs(delta) <= 15.0 * tol) {
      return left + right + delta / 15.0;
    }
    if (depth >= max_depth_) {
      throw OracleConvergenceError(p.lo, p.hi, std::abs(delta) / 15.0);
    }
    return refine({p.lo, mid, p.f_lo, f_lm, p.f_mid, left}, depth + 1) +
           refine({mid, p.hi, p.f_mid, f_rm, p.f_hi, right}, depth + 1);
  }

  const Integrand& f_;
  double tol_per_width_;
  int max_depth_;
};

double to_angle(double x, double radius) {
  return std::asin(std::clamp(x / radius, -1.0, 1.0));
}

}  // namespace

void OracleConfig::validate() const {
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("oracle abs_tol must be positive");
  }
  if (max_depth < 20) {
    throw std::invalid_argument("oracle max_depth must be at least 20");
  }
}

OracleConvergenceError::OracleConvergenceError(double lo, double hi,
                                               double estimate_error)
    : std::runtime_error(convergence_message(lo, hi, estimate_error)),
      lo_(lo),
      hi_(hi) {}

double rect_circle_area(const CenteredRect& rect, double radius,
                        const OracleConfig& cfg) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("oracle radius must be positive");
  }
  const double x_lo = std::max(rect.x1, -radius);
  const double x_hi = std::min(rect.x3, radius);
  if (!(x_lo < x_hi) || rect.y1 >= radius || rect.y3 <= -radius) {
    return 0.0;
  }

  std::vector<double> cuts{to_angle(x_lo, radius), to_angle(x_hi, radius)};
  for (const double y : {rect.y1, rect.y3}) {
    if (std::abs(y) < radius) {
      const double root = std::sqrt(radius * radius - y * y);
      for (const double x : {-root, root}) {
        if (x > x_lo && x < x_hi) {
          cuts.push_back(to_angle(x, radius));
        }
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double span = cuts.back() - cuts.front();
  if (!(span > 0.0)) {
    return 0.0;
  }
  const Integrand f(rect, radius);
  AdaptiveSimpson simpson(f, cfg.abs_tol / span, cfg.max_depth);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) {
      total += simpson.integrate(cuts[i], cuts[i + 1]);
    }
  }
  return total;
}

}  // namespace pixgrid
