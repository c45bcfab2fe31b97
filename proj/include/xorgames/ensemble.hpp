#ifndef XORGAMES_ENSEMBLE_HPP
#define XORGAMES_ENSEMBLE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace xorgames {

/// Two-sided thresholds on the normalized value: C1 <= ratio <= 2*C2.
inline constexpr double kEq2Lower = 0.14433756729740643;  // 1/(4 sqrt 3)
inline constexpr double kEq2Upper = 4.0;                  // 2 * C2

/// sqrt(C(2n,n) * ln n) / 2^n, evaluated in log space.
double norm_factor(int n);

struct EnsembleConfig {
  int n = 2;
  std::uint64_t samples = 1;
  std::uint64_t master_seed = 0;
  double tol = 1e-9;
  int workers = 1;
  bool classical = false;
  bool exhaustive = false;  // enumerate all 2^{n+1} games instead of sampling
};

struct EnsembleStats {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double norm_factor = 0.0;
  double mean_ratio = 0.0;
  double std_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double frac_in_bounds = 0.0;
  std::optional<double> mean_classical;
  std::optional<double> mean_gap;  // mean of quantum/classical per game
};

/// Monte Carlo over games sampled from (master_seed, index); the
/// reduction is done in index order with compensated summation, so the
/// result is byte-identical for any worker count.
EnsembleStats run_ensemble(const EnsembleConfig& cfg);

/// One stats row per n, same sample count and seed for each.
std::vector<EnsembleStats> figure1_series(const std::vector<int>& n_values,
                                          std::uint64_t samples,
                                          std::uint64_t master_seed,
                                          double tol = 1e-9, int workers = 1);

struct BoundsReport {
  int n = 0;
  std::uint64_t samples = 0;
  double fraction = 0.0;     // both thresholds hold
  double frac_lower = 0.0;   // ratio >= C1
  double frac_upper = 0.0;   // ratio <= 2*C2
};

BoundsReport verify_bounds(int n, std::uint64_t samples,
                           std::uint64_t master_seed, double tol = 1e-9,
                           int workers = 1);

inline constexpr char kCsvHeader[] =
    "n,samples,seed,norm_factor,mean_ratio,std_ratio,min_ratio,max_ratio,"
    "frac_in_bounds,mean_classical,mean_gap";

/// CSV with the documented header; doubles printed with 17 significant
/// digits so parsing reproduces them exactly.
std::string stats_csv(const std::vector<EnsembleStats>& rows);

std::vector<EnsembleStats> parse_stats_csv(std::istream& in);

/// gnuplot script rendering mean_ratio vs n with standard-error bars;
/// throws MissingColumns if the CSV lacks the needed columns.
std::string plot_script(const std::string& csv_path);

}  // namespace xorgames

#endif
