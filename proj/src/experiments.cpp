#include "truncorr/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "truncorr/errors.hpp"
#include "truncorr/io.hpp"
#include "truncorr/measures.hpp"
#include "truncorr/states.hpp"

namespace truncorr {

std::vector<SweepRow> sweep(const SweepSpec& spec, const Tolerances& tol) {
  if (spec.steps < 1) throw InputError("sweep: steps must be at least 1");
  if (!std::isfinite(spec.from) || !std::isfinite(spec.to))
    throw InputError("sweep: range bounds must be finite");
  if (spec.steps == 1 && spec.from != spec.to)
    throw InputError("sweep: a single step needs from == to");
  if (spec.vary.empty()) throw InputError("sweep: no parameter to vary");
  if (spec.fixed.count(spec.vary))
    throw InputError("sweep: parameter '" + spec.vary + "' is both fixed and varied");

  std::vector<SweepRow> rows;
  rows.reserve(spec.steps);
  StateSpec state{spec.family, spec.fixed};
  for (int k = 0; k < spec.steps; ++k) {
    // endpoints hit exactly
    double x = spec.from;
    if (spec.steps > 1) {
      x = k == spec.steps - 1
              ? spec.to
              : spec.from + (spec.to - spec.from) * static_cast<double>(k) / (spec.steps - 1);
    }
    state.params[spec.vary] = x;
    const DensityMatrix rho = build(state);
    const double m = measure_M(rho, tol).M;
    rows.push_back({x, m, von_neumann_entropy(rho.reduced(Side::A), tol)});
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "param,M,S_vN\n";
  for (const auto& r : rows)
    os << format_decimal(r.param) << ',' << format_decimal(r.M) << ','
       << format_decimal(r.entropy) << '\n';
  return os.str();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

BenchResult run_bench(int max_dim, int trials, std::uint64_t seed, const Tolerances& tol) {
  if (max_dim < 2) throw InputError("bench: max-dim must be at least 2");
  if (max_dim > 16) throw CapabilityError("bench: max-dim above 16 per side is not supported");
  if (trials < 0) throw InputError("bench: trials must be non-negative");

  BenchResult out;
  if (trials == 0) return out;
  std::vector<double> ns, ts;
  std::uint64_t stream = 0;
  for (int n = 2; n <= max_dim; n *= 2) {
    const BipartiteDims dims{n, n};
    std::vector<double> times;
    for (int t = 0; t < trials; ++t) {
      const DensityMatrix rho = random_density(dims, dims.total(), seed + stream++);
      const auto start = std::chrono::steady_clock::now();
      volatile double sink = measure_M(rho, tol).M;
      (void)sink;
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      times.push_back(dt.count());
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    const double median =
        times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
    out.rows.push_back({n, trials, median, times.front()});
    ns.push_back(n);
    ts.push_back(std::max(median, 1e-9));
  }
  out.slope = loglog_slope(ns, ts);
  return out;
}

std::string bench_csv(const BenchResult& r) {
  std::ostringstream os;
  os << "N,trials,median_seconds,min_seconds\n";
  for (const auto& row : r.rows)
    os << row.n << ',' << row.trials << ',' << format_decimal(row.median_seconds) << ','
       << format_decimal(row.min_seconds) << '\n';
  return os.str();
}

}  // namespace truncorr
