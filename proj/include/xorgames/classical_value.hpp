#ifndef XORGAMES_CLASSICAL_VALUE_HPP
#define XORGAMES_CLASSICAL_VALUE_HPP

#include <Eigen/Dense>

#include "xorgames/game.hpp"

namespace xorgames {

/// Bias of each deterministic strategy class: B_k is the bias when
/// exactly k players answer with their input's parity contribution.
struct BiasProfile {
  int n = 0;
  Eigen::ArrayXd biases;  // B_0 .. B_n
};

struct ClassicalResult {
  double value = 0.0;
  int best_k = 0;
  int best_c = 0;  // answer-parity offset of the best strategy class
};

/// B_k = 2^{-n} sum_j (-1)^{G_j} K_k(j) with the Krawtchouk kernel
/// K_k(j) = sum_i (-1)^i C(k,i) C(n-k,j-i), evaluated with exact integer
/// numerators and one final division.
double krawtchouk_bias(const SymmetricGame& g, int k);

BiasProfile bias_profile(const SymmetricGame& g);

/// Exact classical value: max_k |B_k|, ties broken toward smallest k.
ClassicalResult classical_value(const SymmetricGame& g);

inline constexpr int kMaxBruteForceN = 12;

/// Independent oracle: maximum bias over all deterministic strategies,
/// by exhaustive sum over inputs. Throws TooLarge for n > 12.
double brute_force_value(const SymmetricGame& g);

}  // namespace xorgames

#endif
