#pragma once

// One-parameter sweeps of M and the runtime scaling benchmark.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "truncorr/tolerances.hpp"

namespace truncorr {

struct SweepRow {
  double param = 0.0;
  double M = 0.0;
  double entropy = 0.0;  // S_vN(Tr_B rho)
};

struct SweepSpec {
  std::string family;                   // any catalog name with numeric parameters
  std::string vary;                     // parameter swept
  double from = 0.0;
  double to = 1.0;
  int steps = 2;                        // number of sample points, endpoints included
  std::map<std::string, double> fixed;  // other parameters
};

/// Throws InputError for steps < 1, non-finite bounds, or a fixed parameter
/// that collides with the swept one.
std::vector<SweepRow> sweep(const SweepSpec& spec, const Tolerances& tol = default_tolerances());

std::string sweep_csv(const std::vector<SweepRow>& rows);

struct BenchRow {
  int n = 0;              // per-side dimension
  int trials = 0;
  double median_seconds = 0.0;
  double min_seconds = 0.0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  double slope = 0.0;     // least-squares d log(t) / d log(n); 0 with < 2 rows
};

/// Times measure_M on seeded random full-rank n x n states for
/// n = 2, 4, ... <= max_dim.
BenchResult run_bench(int max_dim, int trials, std::uint64_t seed,
                      const Tolerances& tol = default_tolerances());

std::string bench_csv(const BenchResult& r);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace truncorr
