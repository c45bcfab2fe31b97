#include "xorgames/classical_value.hpp"

#include <bit>
#include <cassert>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "xorgames/combinatorics.hpp"
#include "xorgames/errors.hpp"

namespace xorgames {

namespace {

using KrawtchoukTable = std::vector<std::vector<BigInt>>;

KrawtchoukTable build_table(int n) {
  std::vector<BinomialRow> rows;
  rows.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    rows.push_back(binomial_row(k));
  }
  KrawtchoukTable table(n + 1, std::vector<BigInt>(n + 1));
  for (int k = 0; k <= n; ++k) {
    const auto& ck = rows[k].coefficients;
    const auto& cnk = rows[n - k].coefficients;
    for (int j = 0; j <= n; ++j) {
      BigInt sum = 0;
      const int i_lo = std::max(0, j - (n - k));
      const int i_hi = std::min(k, j);
      for (int i = i_lo; i <= i_hi; ++i) {
        const BigInt term = ck[i] * cnk[j - i];
        if (i % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      table[k][j] = std::move(sum);
    }
  }
  return table;
}

// The kernel depends only on n; games of the same size share it.
std::shared_ptr<const KrawtchoukTable> table_for(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::shared_ptr<const KrawtchoukTable>> cache;
  std::scoped_lock lock(mutex);
  auto& entry = cache[n];
  if (!entry) {
    entry = std::make_shared<const KrawtchoukTable>(build_table(n));
  }
  return entry;
}

double to_double_over_2n(const BigInt& numerator, int n) {
  return BigRational(numerator, BigInt(1) << n).convert_to<double>();
}

BigInt signed_row_sum(const SymmetricGame& g, const std::vector<BigInt>& row) {
  BigInt sum = 0;
  for (int j = 0; j <= g.n; ++j) {
    if (g.bits[j]) {
      sum -= row[j];
    } else {
      sum += row[j];
    }
  }
  return sum;
}

}  // namespace

double krawtchouk_bias(const SymmetricGame& g, int k) {
  assert(k >= 0 && k <= g.n);
  const auto table = table_for(g.n);
  return to_double_over_2n(signed_row_sum(g, (*table)[k]), g.n);
}

BiasProfile bias_profile(const SymmetricGame& g) {
  const auto table = table_for(g.n);
  BiasProfile profile;
  profile.n = g.n;
  profile.biases.resize(g.n + 1);
  for (int k = 0; k <= g.n; ++k) {
    profile.biases[k] = to_double_over_2n(signed_row_sum(g, (*table)[k]), g.n);
  }
  return profile;
}

ClassicalResult classical_value(const SymmetricGame& g) {
  const BiasProfile profile = bias_profile(g);
  ClassicalResult res;
  res.value = -1.0;
  for (int k = 0; k <= g.n; ++k) {
    const double b = profile.biases[k];
    if (std::abs(b) > res.value) {
      res.value = std::abs(b);
      res.best_k = k;
      res.best_c = b < 0.0 ? 1 : 0;
    }
  }
  return res;
}

double brute_force_value(const SymmetricGame& g) {
  if (g.n > kMaxBruteForceN) {
    throw TooLarge("brute_force_value supports n <= " +
                   std::to_string(kMaxBruteForceN) + ", got n=" +
                   std::to_string(g.n));
  }
  const int n = g.n;
  const std::uint32_t inputs = 1u << n;

  // Game sign by input weight.
  std::vector<int> sign_by_weight(n + 1);
  for (int j = 0; j <= n; ++j) {
    sign_by_weight[j] = g.bits[j] ? -1 : 1;
  }

  // A deterministic strategy y_i = a_i xor b_i x_i contributes output
  // parity (xor a_i) xor popcount(x & b); the a-part only flips the
  // global sign, so scanning all b and taking |.| covers all 4^n
  // strategies.
  std::int64_t best = 0;
  for (std::uint32_t b = 0; b < inputs; ++b) {
    std::int64_t sum = 0;
    for (std::uint32_t x = 0; x < inputs; ++x) {
      const int s = sign_by_weight[std::popcount(x)];
      sum += (std::popcount(x & b) & 1) ? -s : s;
    }
    best = std::max(best, std::abs(sum));
  }
  return static_cast<double>(best) / static_cast<double>(inputs);
}

}  // namespace xorgames
