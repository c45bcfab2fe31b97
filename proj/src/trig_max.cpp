#include "xorgames/trig_max.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <unordered_map>
#include <vector>

#include "xorgames/errors.hpp"

namespace xorgames {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxGrid = 1 << 22;

// FFTW's planner is not thread-safe; plans are cached per size and the
// new-array execute below is safe to run concurrently.
std::mutex g_plan_mutex;
std::unordered_map<int, fftw_plan>& plan_cache() {
  static std::unordered_map<int, fftw_plan> cache;
  return cache;
}

fftw_plan plan_for(int m) {
  std::scoped_lock lock(g_plan_mutex);
  auto& cache = plan_cache();
  if (auto it = cache.find(m); it != cache.end()) {
    return it->second;
  }
  std::vector<double> in(m);
  std::vector<std::complex<double>> out(m / 2 + 1);
  fftw_plan p = fftw_plan_dft_r2c_1d(
      m, in.data(), reinterpret_cast<fftw_complex*>(out.data()),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(m, p);
  return p;
}

// S(a_k) on the half grid a_k = 2*pi*k/m for k = 0..m/2. The
// coefficients are real, so S is mirror-symmetric about pi and the
// half spectrum of a real-input FFT carries the full grid.
Eigen::ArrayXd grid_squared(const Eigen::ArrayXd& c, TrigKind kind, int m) {
  assert(m > c.size() - 1);
  assert(m % 2 == 0);
  std::vector<double> in(m, 0.0);
  std::vector<std::complex<double>> out(m / 2 + 1);
  for (int j = 0; j < c.size(); ++j) {
    in[j] = c[j];
  }
  fftw_execute_dft_r2c(plan_for(m), in.data(),
                       reinterpret_cast<fftw_complex*>(out.data()));
  Eigen::ArrayXd s(m / 2 + 1);
  if (kind == TrigKind::Modulus) {
    for (int k = 0; k <= m / 2; ++k) {
      s[k] = std::norm(out[k]);
    }
  } else {
    for (int k = 0; k <= m / 2; ++k) {
      const double re = out[k].real();
      s[k] = re * re;
    }
  }
  return s;
}

struct Derivs {
  double value = 0.0;  // target (|P| or |sum c cos|)
  double S = 0.0;
  double dS = 0.0;
  double d2S = 0.0;
};

Derivs eval_derivs(const Eigen::ArrayXd& c, TrigKind kind, double a) {
  Derivs d;
  if (kind == TrigKind::Modulus) {
    double A = 0, B = 0, dA = 0, dB = 0, d2A = 0, d2B = 0;
    for (int j = 0; j < c.size(); ++j) {
      const double cj = std::cos(j * a);
      const double sj = std::sin(j * a);
      A += c[j] * cj;
      B += c[j] * sj;
      dA -= c[j] * j * sj;
      dB += c[j] * j * cj;
      d2A -= c[j] * j * static_cast<double>(j) * cj;
      d2B -= c[j] * j * static_cast<double>(j) * sj;
    }
    d.S = A * A + B * B;
    d.dS = 2.0 * (A * dA + B * dB);
    d.d2S = 2.0 * (dA * dA + A * d2A + dB * dB + B * d2B);
    d.value = std::sqrt(d.S);
  } else {
    double P = 0, dP = 0, d2P = 0;
    for (int j = 0; j < c.size(); ++j) {
      const double cj = std::cos(j * a);
      const double sj = std::sin(j * a);
      P += c[j] * cj;
      dP -= c[j] * j * sj;
      d2P -= c[j] * j * static_cast<double>(j) * cj;
    }
    d.S = P * P;
    d.dS = 2.0 * P * dP;
    d.d2S = 2.0 * (dP * dP + P * d2P);
    d.value = std::abs(P);
  }
  return d;
}

struct Candidate {
  double angle = 0.0;
  double value = 0.0;
};

// Newton on S' = 0 inside [lo, hi], falling back to bisection whenever
// the Newton step leaves the bracket or S'' is unusable.
Candidate refine_cell(const Eigen::ArrayXd& c, TrigKind kind, double lo,
                      double mid, double hi) {
  double flo = eval_derivs(c, kind, lo).dS;
  double fmid = eval_derivs(c, kind, mid).dS;
  double fhi = eval_derivs(c, kind, hi).dS;

  Candidate best{mid, eval_derivs(c, kind, mid).value};
  auto consider = [&](double a) {
    const double v = eval_derivs(c, kind, a).value;
    if (v > best.value) {
      best = {a, v};
    }
  };
  consider(lo);
  consider(hi);

  // A maximum inside the bracket means S' changes sign from + to -.
  double a = lo, b = hi;
  if (flo >= 0.0 && fhi <= 0.0) {
    // keep full bracket
  } else if (flo >= 0.0 && fmid <= 0.0) {
    b = mid;
  } else if (fmid >= 0.0 && fhi <= 0.0) {
    a = mid;
  } else {
    return best;  // no interior sign change; endpoints already checked
  }

  double x = 0.5 * (a + b);
  for (int iter = 0; iter < 80 && b - a > 1e-15; ++iter) {
    const Derivs d = eval_derivs(c, kind, x);
    double xn = 0.5 * (a + b);
    if (d.d2S != 0.0) {
      const double step = x - d.dS / d.d2S;
      if (step > a && step < b) {
        xn = step;
      }
    }
    if (d.dS >= 0.0) {
      a = x;
    } else {
      b = x;
    }
    x = std::clamp(xn, a, b);
  }
  consider(x);
  return best;
}

int next_pow2(int v) {
  int m = 1;
  while (m < v) {
    m <<= 1;
  }
  return m;
}

}  // namespace

double eval_abs_trig(const Eigen::ArrayXd& coeffs, TrigKind kind,
                     double angle) {
  return eval_derivs(coeffs, kind, angle).value;
}

ValueEnclosure max_abs_trig(const Eigen::ArrayXd& coeffs, TrigKind kind,
                            double tol) {
  assert(tol > 0.0);
  assert(coeffs.size() >= 1);
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n == 0) {
    const double v = std::abs(coeffs[0]);
    return {v, v, 0.0, 1};
  }
  const int deg_s = 2 * n;  // degree of the squared target

  int m = next_pow2(std::max(64, 8 * n + 1));
  for (;;) {
    // Half grid k = 0..m/2; S is mirror-symmetric about pi, so the
    // smallest-angle maximizer always lies in [0, pi].
    const Eigen::ArrayXd s = grid_squared(coeffs, kind, m);
    const int half = m / 2;
    int k_best = 0;
    const double grid_max = s.maxCoeff(&k_best);
    // Equispaced sup-norm bound applied to |P| itself: at the global
    // maximizer some fixed-phase real part of P attains max |P|, and
    // that is a degree-n real trig polynomial whose grid maximum is at
    // most max_k |P(a_k)| = sqrt(grid_max).
    const double cf = std::cos(std::numbers::pi * n / (2.0 * m));
    const double upper = std::sqrt(grid_max) / cf;

    if (grid_max == 0.0) {
      return {0.0, 0.0, 0.0, m};
    }

    // Any cell containing the true maximizer has a grid point within
    // h/2 of it, hence with S >= max_S * (1 - (pi*deg_s/m)^2 / 2); the
    // factor-2 slack below absorbs the grid_max <= max_S gap.
    const double dx = std::numbers::pi * deg_s / m;
    const double thresh = grid_max * std::max(0.0, 1.0 - dx * dx);
    const double h = kTwoPi / m;

    std::vector<Candidate> cands;
    for (int k = 0; k <= half; ++k) {
      const double sk = s[k];
      if (sk < thresh) {
        continue;
      }
      const double prev = s[k == 0 ? 1 : k - 1];        // S(-h) = S(h)
      const double next = s[k == half ? half - 1 : k + 1];  // mirror at pi
      if (sk >= prev && sk >= next) {
        cands.push_back(
            refine_cell(coeffs, kind, (k - 1) * h, k * h, (k + 1) * h));
      }
    }
    double best_value = std::sqrt(grid_max);
    for (const Candidate& cand : cands) {
      best_value = std::max(best_value, cand.value);
    }

    // Smallest angle attaining the refined maximum (within a slice of
    // the requested tolerance, so the reported width stays <= tol).
    const double tie = std::max(0.25 * tol, 8e-16 * best_value);
    Candidate chosen{kTwoPi, 0.0};
    for (const Candidate& cand : cands) {
      double ang = std::fmod(cand.angle, kTwoPi);
      if (ang < 0.0) {
        ang += kTwoPi;
      }
      if (ang > std::numbers::pi) {
        ang = kTwoPi - ang;  // mirror partner attains the same value
      }
      if (cand.value >= best_value - tie && ang < chosen.angle) {
        chosen = {ang, cand.value};
      }
    }
    if (chosen.value == 0.0) {  // refinement never beat the raw grid
      chosen = {k_best * h, std::sqrt(grid_max)};
    }

    if (upper - chosen.value <= tol) {
      return {chosen.value, upper, chosen.angle, m};
    }
    if (m >= kMaxGrid) {
      throw ToleranceNotReached(
          "grid limit 2^22 reached; achieved width " +
          std::to_string(upper - chosen.value) + " > tol " +
          std::to_string(tol));
    }
    // Predict the grid size that makes the certification gap about half
    // of tol (gap ~ max * (pi*n/(2m))^2 / 2), then jump there.
    const double x_req = std::sqrt(tol / best_value);
    const double m_req = std::numbers::pi * n / (2.0 * x_req);
    int m_next = std::max(2 * m, next_pow2(static_cast<int>(
                                     std::min<double>(m_req, kMaxGrid)) +
                                 1));
    m = std::min(m_next, kMaxGrid);
  }
}

}  // namespace xorgames
