#include "xorgames/quantum_value.hpp"

#include "xorgames/errors.hpp"

namespace xorgames {

CirclePolynomial build_polynomial(const SymmetricGame& g,
                                  const WeightVector& w) {
  if (w.n != g.n) {
    throw DimensionMismatch("game has n=" + std::to_string(g.n) +
                            " but weights have n=" + std::to_string(w.n));
  }
  CirclePolynomial poly;
  poly.degree = g.n;
  poly.coefficients.resize(g.n + 1);
  for (int j = 0; j <= g.n; ++j) {
    poly.coefficients[j] = g.bits[j] ? -w.p[j] : w.p[j];
  }
  return poly;
}

double eval_magnitude(const CirclePolynomial& poly, double angle) {
  return eval_abs_trig(poly.coefficients, TrigKind::Modulus, angle);
}

ValueEnclosure global_max(const CirclePolynomial& poly, double tol) {
  return max_abs_trig(poly.coefficients, TrigKind::Modulus, tol);
}

ValueEnclosure entangled_value(const SymmetricGame& g, double tol) {
  return global_max(build_polynomial(g, weights(g.n)), tol);
}

}  // namespace xorgames
