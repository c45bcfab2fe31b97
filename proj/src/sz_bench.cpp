#include "xorgames/sz_bench.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <vector>

#include "xorgames/combinatorics.hpp"
#include "xorgames/ensemble.hpp"
#include "xorgames/errors.hpp"

namespace xorgames {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// log cosh without overflow for large |x|.
double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

double eval_cosine(const Eigen::ArrayXd& c, double x) {
  double p = 0.0;
  for (int m = 0; m < c.size(); ++m) {
    p += c[m] * std::cos(m * x);
  }
  return p;
}

}  // namespace

RademacherCosinePoly sample_rademacher(int n, const SampleDescriptor& desc) {
  assert(n >= 0);
  const SymmetricGame g = sample_game(std::max(n, 1), desc);
  RademacherCosinePoly p;
  p.n = n;
  p.signs.resize(n + 1);
  for (int m = 0; m <= n; ++m) {
    p.signs[m] = g.bits[m] ? -1.0 : 1.0;
  }
  p.coefficients = weights(n).p;
  return p;
}

double exact_mgf(const Eigen::ArrayXd& c, double lambda) {
  double log_sum = 0.0;
  for (int m = 0; m < c.size(); ++m) {
    log_sum += log_cosh(lambda * c[m]);
  }
  return std::exp(log_sum);
}

MomentBoundReport lemma1_check(const Eigen::ArrayXd& c, double lambda) {
  MomentBoundReport rep;
  rep.lambda = lambda;
  rep.C = (c * c).sum();
  rep.D = (c * c * c * c).sum();

  double log_mgf = 0.0;
  for (int m = 0; m < c.size(); ++m) {
    log_mgf += log_cosh(lambda * c[m]);
  }
  const double l2 = lambda * lambda;
  const double log_upper = 0.5 * l2 * rep.C;
  const double log_lower = log_upper - l2 * l2 * rep.D;

  rep.mgf = std::exp(log_mgf);
  rep.lower = std::exp(log_lower);
  rep.upper = std::exp(log_upper);
  // Compared in log space; 1e-12 absorbs the rounding of the two sums.
  rep.holds = log_lower <= log_mgf + 1e-12 && log_mgf <= log_upper + 1e-12;
  return rep;
}

ValueEnclosure max_abs_rademacher_poly(const RademacherCosinePoly& p,
                                       double tol) {
  return max_abs_trig(p.signs * p.coefficients, TrigKind::Cosine, tol);
}

LevelInterval level_interval(const RademacherCosinePoly& p, double theta) {
  assert(theta > 0.0 && theta < 1.0);
  const Eigen::ArrayXd c = p.signs * p.coefficients;
  if ((c == 0.0).all()) {
    throw DegeneratePolynomial("level_interval: all coefficients are zero");
  }
  const int n = std::max(p.n, 1);
  // M only gates a threshold with (1-theta)/n of slack, so a relative
  // 1e-7 enclosure is plenty and keeps the grids small.
  const ValueEnclosure enc =
      max_abs_trig(c, TrigKind::Cosine, 1e-7 * c.abs().sum());
  const double target = theta * enc.lower;  // attained value, so > target at argmax

  const double step = (1.0 - theta) / (4.0 * n);
  auto above = [&](double x) { return std::abs(eval_cosine(c, x)) >= target; };

  // |P| >= target at the argmax; march outward and bisect the crossings.
  auto find_edge = [&](double dir) {
    double inside = enc.argmax_angle;
    double x = inside;
    while (std::abs(x - enc.argmax_angle) < kTwoPi) {
      const double next = x + dir * step;
      if (!above(next)) {
        // bisect between x (above) and next (below)
        double a = x, b = next;
        for (int it = 0; it < 80 && std::abs(b - a) > 1e-14; ++it) {
          const double mid = 0.5 * (a + b);
          (above(mid) ? a : b) = mid;
        }
        return a;
      }
      x = next;
    }
    return x;  // above target all the way around
  };

  double lo = find_edge(-1.0);
  double hi = find_edge(+1.0);
  if (hi - lo > kTwoPi) {
    lo = 0.0;
    hi = kTwoPi;
  }

  LevelInterval iv;
  iv.ok = (hi - lo) >= (1.0 - theta) / n;
  double shift = std::floor(lo / kTwoPi) * kTwoPi;
  iv.lo = lo - shift;
  iv.hi = hi - shift;
  return iv;
}

PaleyZygmundReport paley_zygmund_check(const std::vector<double>& samples,
                                       double A, double B, double delta) {
  if (samples.empty() || !(A > 0.0) || !(delta > 0.0 && delta < 1.0)) {
    throw PreconditionViolated("paley_zygmund_check: need samples, A > 0, 0 < delta < 1");
  }
  double mean = 0.0, mean_sq = 0.0;
  for (double s : samples) {
    if (s < 0.0) {
      throw PreconditionViolated("paley_zygmund_check: negative sample");
    }
    mean += s;
    mean_sq += s * s;
  }
  mean /= static_cast<double>(samples.size());
  mean_sq /= static_cast<double>(samples.size());
  if (mean < A || mean_sq > B) {
    throw PreconditionViolated(
        "paley_zygmund_check: moment preconditions fail (mean=" +
        std::to_string(mean) + ", mean_sq=" + std::to_string(mean_sq) + ")");
  }

  PaleyZygmundReport rep;
  std::size_t count = 0;
  for (double s : samples) {
    if (s >= delta * A) {
      ++count;
    }
  }
  rep.empirical = static_cast<double>(count) / static_cast<double>(samples.size());
  rep.bound = (1.0 - delta) * (1.0 - delta) * A * A / B;
  const double slack =
      3.0 * std::sqrt(rep.bound / static_cast<double>(samples.size()));
  rep.holds = rep.empirical >= rep.bound - slack;
  return rep;
}

EventFrequencies theorem_event_frequency(int n, std::uint64_t samples,
                                         std::uint64_t master_seed) {
  assert(n >= 2);
  assert(samples >= 1);
  // sqrt(R_n ln n)/2^n, the threshold scale matching the 2^{-n}-scaled
  // coefficients.
  const double scale = norm_factor(n);
  const double thr_lower = kTheoremC1 * scale;
  const double thr_upper = kTheoremC2 * scale;
  const double tol = 1e-7 * scale;

  std::uint64_t count_lower = 0, count_upper = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const RademacherCosinePoly p = sample_rademacher(n, {master_seed, i});
    const ValueEnclosure enc = max_abs_rademacher_poly(p, tol);
    const double m_val = 0.5 * (enc.lower + enc.upper);
    if (m_val >= thr_lower) {
      ++count_lower;
    }
    if (m_val <= thr_upper) {
      ++count_upper;
    }
  }
  EventFrequencies freq;
  freq.freq_lower = static_cast<double>(count_lower) / static_cast<double>(samples);
  freq.freq_upper = static_cast<double>(count_upper) / static_cast<double>(samples);
  return freq;
}

}  // namespace xorgames
