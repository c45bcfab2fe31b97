#include "xorgames/combinatorics.hpp"

#include <cassert>
#include <cmath>

#include "xorgames/errors.hpp"

namespace xorgames {

BinomialRow binomial_row(int n) {
  assert(n >= 0);
  BinomialRow row;
  row.n = n;
  row.coefficients.resize(static_cast<std::size_t>(n) + 1);
  row.coefficients[0] = 1;
  // Multiplicative recurrence C(n,k+1) = C(n,k) * (n-k) / (k+1); the
  // division is always exact.
  for (int k = 0; k < n; ++k) {
    row.coefficients[k + 1] = row.coefficients[k] * (n - k) / (k + 1);
  }
  return row;
}

WeightVector weights(int n) {
  assert(n >= 0);
  if (n > kMaxWeightN) {
    throw OverflowOrUnderflow("weights: n exceeds supported double range (" +
                              std::to_string(n) + " > " +
                              std::to_string(kMaxWeightN) + ")");
  }
  WeightVector w;
  w.n = n;
  w.p.resize(n + 1);
  w.p[0] = std::ldexp(1.0, -n);
  for (int j = 0; j + 1 <= n / 2; ++j) {
    w.p[j + 1] = w.p[j] * static_cast<double>(n - j) / static_cast<double>(j + 1);
  }
  // Mirror the lower half so p_j = p_{n-j} is bit-exact.
  for (int j = n / 2 + 1; j <= n; ++j) {
    w.p[j] = w.p[n - j];
  }
  return w;
}

PowerSums power_sums(int n) {
  assert(n >= 0);
  const BinomialRow row = binomial_row(n);
  PowerSums ps;
  ps.n = n;
  for (const BigInt& r : row.coefficients) {
    const BigInt r2 = r * r;
    ps.R += r2;
    ps.T += r2 * r2;
  }
  // Vandermonde: sum of squared entries of row n equals the central
  // coefficient of row 2n.
  const BigInt central = binomial_row(2 * n).coefficients[static_cast<std::size_t>(n)];
  assert(ps.R == central);
  (void)central;
  return ps;
}

Lemma5Result lemma5_check(int n) {
  assert(n >= 1);
  const PowerSums ps = power_sums(n);
  Lemma5Result res;
  res.ratio = BigRational(ps.T, ps.R * ps.R);
  // ratio <= (4/3) / sqrt(n)  <=>  9 n T^2 <= 16 R^4
  const BigInt lhs = 9 * n * ps.T * ps.T;
  const BigInt r2 = ps.R * ps.R;
  const BigInt rhs = 16 * r2 * r2;
  res.holds = lhs <= rhs;
  return res;
}

double log2_big(const BigInt& v) {
  assert(v > 0);
  const long shift = static_cast<long>(boost::multiprecision::msb(v)) - 52;
  if (shift <= 0) {
    return std::log2(v.convert_to<double>());
  }
  const BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace xorgames
