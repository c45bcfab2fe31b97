#ifndef XORGAMES_TRIG_MAX_HPP
#define XORGAMES_TRIG_MAX_HPP

#include <Eigen/Dense>

namespace xorgames {

/// Certified bracket on a global maximum over the circle.
struct ValueEnclosure {
  double lower = 0.0;
  double upper = 0.0;
  double argmax_angle = 0.0;  // in [0, 2pi)
  int grid_size = 0;
};

/// Which scalar function of the coefficient vector c is maximized:
///   Modulus  — |sum_j c_j e^{i j a}|
///   Cosine   — |sum_j c_j cos(j a)|
enum class TrigKind { Modulus, Cosine };

/// Certified global maximum of the target over a in [0, 2pi).
///
/// Works on the square S(a) of the target, a real trigonometric
/// polynomial of degree 2n: S is evaluated on an equispaced power-of-two
/// grid (FFT), its true maximum is bounded above by the grid maximum
/// divided by cos(pi*2n/(2m)) for m > 2n grid points, and the best grid
/// cells are refined by Newton on S' safeguarded by bisection. The grid
/// is doubled until upper - lower <= tol; throws ToleranceNotReached if
/// that would take more than 2^22 points.
ValueEnclosure max_abs_trig(const Eigen::ArrayXd& coeffs, TrigKind kind,
                            double tol);

/// Target value at a single angle (the function whose max is enclosed).
double eval_abs_trig(const Eigen::ArrayXd& coeffs, TrigKind kind, double angle);

}  // namespace xorgames

#endif
