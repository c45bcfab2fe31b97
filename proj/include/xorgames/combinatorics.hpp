#ifndef XORGAMES_COMBINATORICS_HPP
#define XORGAMES_COMBINATORICS_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace xorgames {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// One row of Pascal's triangle, kept exact.
struct BinomialRow {
  int n = 0;
  std::vector<BigInt> coefficients;  // C(n,0) .. C(n,n)
};

/// p_j = C(n,j)/2^n as doubles; p_j = p_{n-j} holds bit-exactly.
struct WeightVector {
  int n = 0;
  Eigen::ArrayXd p;
};

/// R = sum of squared binomial coefficients, T = sum of fourth powers.
struct PowerSums {
  int n = 0;
  BigInt R;
  BigInt T;
};

struct Lemma5Result {
  BigRational ratio;  // T_n / R_n^2
  bool holds = false;
};

BinomialRow binomial_row(int n);

/// Largest n for which the weight vector is representable in doubles
/// (p_0 = 2^{-n} must stay normalized).
inline constexpr int kMaxWeightN = 1024;

WeightVector weights(int n);

PowerSums power_sums(int n);

/// Checks T_n/R_n^2 <= (4/3) n^{-1/2} by squaring both sides, so the
/// comparison stays in exact integer arithmetic.
Lemma5Result lemma5_check(int n);

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& v);

}  // namespace xorgames

#endif
