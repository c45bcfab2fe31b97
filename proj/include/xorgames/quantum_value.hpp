#ifndef XORGAMES_QUANTUM_VALUE_HPP
#define XORGAMES_QUANTUM_VALUE_HPP

#include <Eigen/Dense>

#include "xorgames/combinatorics.hpp"
#include "xorgames/game.hpp"
#include "xorgames/trig_max.hpp"

namespace xorgames {

/// Signed weighted polynomial on the unit circle whose maximum modulus
/// is the entangled value: q_j = (-1)^{G_j} p_j.
struct CirclePolynomial {
  int degree = 0;
  Eigen::ArrayXd coefficients;
};

inline constexpr double kDefaultTol = 1e-9;

CirclePolynomial build_polynomial(const SymmetricGame& g, const WeightVector& w);

/// |sum_j q_j e^{i j angle}|; 2pi-periodic.
double eval_magnitude(const CirclePolynomial& poly, double angle);

/// Certified enclosure of the maximum modulus over the unit circle.
ValueEnclosure global_max(const CirclePolynomial& poly, double tol);

/// Entangled value of the game, as a certified enclosure.
ValueEnclosure entangled_value(const SymmetricGame& g, double tol = kDefaultTol);

}  // namespace xorgames

#endif
