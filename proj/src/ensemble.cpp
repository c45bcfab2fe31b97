#include "xorgames/ensemble.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include "xorgames/classical_value.hpp"
#include "xorgames/combinatorics.hpp"
#include "xorgames/errors.hpp"
#include "xorgames/quantum_value.hpp"

namespace xorgames {

namespace {

void parallel_for(std::uint64_t count, int workers,
                  const std::function<void(std::uint64_t)>& body) {
  workers = std::max(1, workers);
  if (workers == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::vector<std::thread> threads;
  std::mutex err_mutex;
  std::exception_ptr first_error;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(count, lo + chunk);
    if (lo >= hi) {
      break;
    }
    threads.emplace_back([lo, hi, &body, &err_mutex, &first_error] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) {
          body(i);
        }
      } catch (...) {
        std::scoped_lock lock(err_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : threads) {
    t.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

SymmetricGame exhaustive_game(int n, std::uint64_t index) {
  SymmetricGame g;
  g.n = n;
  g.bits.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    g.bits[j] = static_cast<std::uint8_t>((index >> j) & 1u);
  }
  return g;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

double norm_factor(int n) {
  assert(n >= 2);
  const BigInt central = power_sums(n).R;  // = C(2n,n)
  const double log2_r = log2_big(central);
  const double log2_ln_n = std::log2(std::log(static_cast<double>(n)));
  return std::exp2(0.5 * (log2_r + log2_ln_n) - n);
}

EnsembleStats run_ensemble(const EnsembleConfig& cfg) {
  assert(cfg.n >= 2);
  assert(cfg.samples >= 1);
  assert(cfg.tol > 0.0);

  const std::uint64_t count =
      cfg.exhaustive ? (std::uint64_t{1} << (cfg.n + 1)) : cfg.samples;
  const double nf = norm_factor(cfg.n);

  std::vector<double> ratios(count);
  std::vector<double> classicals(cfg.classical ? count : 0);
  parallel_for(count, cfg.workers, [&](std::uint64_t i) {
    const SymmetricGame g = cfg.exhaustive
                                ? exhaustive_game(cfg.n, i)
                                : sample_game(cfg.n, {cfg.master_seed, i});
    const ValueEnclosure enc = entangled_value(g, cfg.tol);
    ratios[i] = 0.5 * (enc.lower + enc.upper) / nf;
    if (cfg.classical) {
      classicals[i] = classical_value(g).value;
    }
  });

  EnsembleStats stats;
  stats.n = cfg.n;
  stats.samples = count;
  stats.seed = cfg.master_seed;
  stats.norm_factor = nf;

  KahanSum mean;
  stats.min_ratio = ratios[0];
  stats.max_ratio = ratios[0];
  std::uint64_t in_bounds = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    mean.add(ratios[i]);
    stats.min_ratio = std::min(stats.min_ratio, ratios[i]);
    stats.max_ratio = std::max(stats.max_ratio, ratios[i]);
    if (ratios[i] >= kEq2Lower && ratios[i] <= kEq2Upper) {
      ++in_bounds;
    }
  }
  stats.mean_ratio = mean.sum / static_cast<double>(count);
  KahanSum var;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double d = ratios[i] - stats.mean_ratio;
    var.add(d * d);
  }
  stats.std_ratio = std::sqrt(var.sum / static_cast<double>(count));
  stats.frac_in_bounds =
      static_cast<double>(in_bounds) / static_cast<double>(count);

  if (cfg.classical) {
    KahanSum mean_cl, mean_gap;
    for (std::uint64_t i = 0; i < count; ++i) {
      mean_cl.add(classicals[i]);
      mean_gap.add(ratios[i] * nf / classicals[i]);
    }
    stats.mean_classical = mean_cl.sum / static_cast<double>(count);
    stats.mean_gap = mean_gap.sum / static_cast<double>(count);
  }
  return stats;
}

std::vector<EnsembleStats> figure1_series(const std::vector<int>& n_values,
                                          std::uint64_t samples,
                                          std::uint64_t master_seed,
                                          double tol, int workers) {
  std::vector<EnsembleStats> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    EnsembleConfig cfg;
    cfg.n = n;
    cfg.samples = samples;
    cfg.master_seed = master_seed;
    cfg.tol = tol;
    cfg.workers = workers;
    rows.push_back(run_ensemble(cfg));
  }
  return rows;
}

BoundsReport verify_bounds(int n, std::uint64_t samples,
                           std::uint64_t master_seed, double tol,
                           int workers) {
  assert(n >= 2);
  const double nf = norm_factor(n);
  std::vector<std::uint8_t> lower_ok(samples), upper_ok(samples);
  parallel_for(samples, workers, [&](std::uint64_t i) {
    const SymmetricGame g = sample_game(n, {master_seed, i});
    const ValueEnclosure enc = entangled_value(g, tol);
    const double ratio = 0.5 * (enc.lower + enc.upper) / nf;
    lower_ok[i] = ratio >= kEq2Lower;
    upper_ok[i] = ratio <= kEq2Upper;
  });
  std::uint64_t n_lower = 0, n_upper = 0, n_both = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    n_lower += lower_ok[i];
    n_upper += upper_ok[i];
    n_both += lower_ok[i] & upper_ok[i];
  }
  BoundsReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.fraction = static_cast<double>(n_both) / static_cast<double>(samples);
  rep.frac_lower = static_cast<double>(n_lower) / static_cast<double>(samples);
  rep.frac_upper = static_cast<double>(n_upper) / static_cast<double>(samples);
  return rep;
}

std::string stats_csv(const std::vector<EnsembleStats>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const EnsembleStats& s : rows) {
    out += std::to_string(s.n);
    out += ',';
    out += std::to_string(s.samples);
    out += ',';
    out += std::to_string(s.seed);
    for (double v : {s.norm_factor, s.mean_ratio, s.std_ratio, s.min_ratio,
                     s.max_ratio, s.frac_in_bounds}) {
      out += ',';
      out += format_double(v);
    }
    out += ',';
    if (s.mean_classical) {
      out += format_double(*s.mean_classical);
    }
    out += ',';
    if (s.mean_gap) {
      out += format_double(*s.mean_gap);
    }
    out += '\n';
  }
  return out;
}

std::vector<EnsembleStats> parse_stats_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      split_csv_line(line) != split_csv_line(kCsvHeader)) {
    throw MissingColumns("stats CSV must start with the documented header");
  }
  std::vector<EnsembleStats> rows;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 11) {
      throw MissingColumns("stats CSV row has " + std::to_string(f.size()) +
                           " fields, expected 11");
    }
    EnsembleStats s;
    s.n = std::stoi(f[0]);
    s.samples = std::stoull(f[1]);
    s.seed = std::stoull(f[2]);
    s.norm_factor = std::stod(f[3]);
    s.mean_ratio = std::stod(f[4]);
    s.std_ratio = std::stod(f[5]);
    s.min_ratio = std::stod(f[6]);
    s.max_ratio = std::stod(f[7]);
    s.frac_in_bounds = std::stod(f[8]);
    if (!f[9].empty()) {
      s.mean_classical = std::stod(f[9]);
    }
    if (!f[10].empty()) {
      s.mean_gap = std::stod(f[10]);
    }
    rows.push_back(s);
  }
  return rows;
}

std::string plot_script(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) {
    throw MissingColumns("cannot open CSV: " + csv_path);
  }
  std::string header;
  std::getline(in, header);
  const std::vector<std::string> cols = split_csv_line(header);
  auto col = [&](const std::string& name) {
    const auto it = std::find(cols.begin(), cols.end(), name);
    if (it == cols.end()) {
      throw MissingColumns("CSV is missing column '" + name + "'");
    }
    return static_cast<int>(it - cols.begin()) + 1;  // gnuplot is 1-based
  };
  const int c_n = col("n");
  const int c_samples = col("samples");
  const int c_mean = col("mean_ratio");
  const int c_std = col("std_ratio");

  std::ostringstream out;
  out << "# gnuplot script: normalized mean entangled value vs n\n"
      << "set datafile separator ','\n"
      << "set xlabel 'n'\n"
      << "set ylabel 'mean Val / (sqrt(R_n ln n)/2^n)'\n"
      << "set grid\n"
      << "set terminal pngcairo size 960,640\n"
      << "set output '" << csv_path << ".png'\n"
      << "plot '" << csv_path << "' skip 1 using " << c_n << ":" << c_mean
      << ":($" << c_std << "/sqrt($" << c_samples << "))"
      << " with yerrorlines pointtype 7 title 'mean ratio'\n";
  return out.str();
}

}  // namespace xorgames
