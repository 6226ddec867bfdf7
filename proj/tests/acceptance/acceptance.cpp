// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <array>
#include <cmath>
#include <map>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "truncorr/detect.hpp"
#include "truncorr/experiments.hpp"
#include "truncorr/measures.hpp"
#include "truncorr/partition_measure.hpp"
#include "truncorr/states.hpp"

using namespace truncorr;

namespace {

constexpr double kPrinted = 5e-4;  // values printed to three decimals
constexpr double kExact = 1e-9;

class Criterion {
 public:
  void near(const std::string& what, double got, double want, double tol) {
    ++checks_;
    if (!(std::abs(got - want) <= tol) && failures_.size() < 5)
      failures_.push_back(what + ": got " + fmt(got) + ", want " + fmt(want) + " +- " + fmt(tol));
    if (!(std::abs(got - want) <= tol)) ++failed_;
  }
  void is(const std::string& what, bool ok) {
    ++checks_;
    if (!ok) {
      ++failed_;
      if (failures_.size() < 5) failures_.push_back(what);
    }
  }
  bool passed() const { return failed_ == 0 && checks_ > 0; }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
  }

 private:
  int checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

ComplexVector schmidt_form(const BipartiteDims& dims, const std::vector<double>& lambdas,
                           std::uint64_t seed) {
  const auto [uA, uB] = random_local_unitary(dims, seed);
  ComplexVector v = ComplexVector::Zero(dims.total());
  for (std::size_t k = 0; k < lambdas.size(); ++k)
    v += std::sqrt(lambdas[k]) * kron(ComplexVector(uA.col(k)), ComplexVector(uB.col(k)));
  return v;
}

void c1(Criterion& c) {
  const auto r = measure_M(varsigma());
  c.near("M", r.M, 0.220, kPrinted);
  c.near("M^A", r.MA, 0.0, kExact);
  c.near("M^B", r.MB, 0.439, kPrinted);
}

void c2(Criterion& c) {
  for (auto [a, b] : {std::pair<int, int>{1, 2}, {3, 4}, {5, 6}}) {
    const auto r = measure_M(zeta_prime(a, b));
    const std::string tag = "seeds " + std::to_string(a) + "," + std::to_string(b);
    c.near(tag + " M", r.M, 0.366, kPrinted);
    c.near(tag + " M^A - M^B", r.MA - r.MB, 0.0, kExact);
  }
}

void c3(Criterion& c) {
  c.near("M(sigma)", measure_M(sigma()).M, 0.0, kExact);
  const double g = measure_G(sigma());
  c.near("G(sigma) closed form", g, oracle::g_sigma(), kExact);
  c.near("G(sigma) printed", g, 0.1287, kPrinted);
}

void c4(Criterion& c) {
  c.near("M(sigma')", measure_M(sigma_prime()).M, 0.5, kExact);
  c.near("G(sigma')", measure_G(sigma_prime()), 0.0, kExact);
}

void c5(Criterion& c) {
  const DensityMatrix t = tau();
  c.near("M(tau)", measure_M(t).M, 0.0, kExact);
  const RealVector pt = hermitian_eigenvalues(t.partial_transposed(Side::B));
  const auto want = oracle::tau_pt_spectrum();
  c.is("PT has 9 eigenvalues", pt.size() == 9);
  for (Index k = 0; k < pt.size() && k < 9; ++k)
    c.near("PT eigenvalue " + std::to_string(k), pt(k), want[k], kExact);
  const auto v = classify(t);
  c.is("classify(tau) NONCLASSICAL", v.verdict == Verdict::Nonclassical);
  c.is("decided by NPT (got '" + v.decided_by + "')", v.decided_by == "NPT");
}

void c6(Criterion& c) {
  const auto x = measure_M(xi());
  c.near("M(xi)", x.M, 0.151, kPrinted);
  c.near("M^BD(xi)", x.MB, 0.302, kPrinted);
  c.near("M^AC(xi)", x.MA, 0.0, kExact);
  c.near("M(sigma'')", measure_M(sigma_dprime()).M, 0.25, kExact);
  c.near("M(xi')", measure_M(xi_prime()).M, 0.125, kExact);
}

void c7(Criterion& c) {
  for (int n = 2; n <= 8; ++n)
    c.near("M(Bell " + std::to_string(n) + ")", measure_M(bell(n)).M, std::log2(n), kExact);
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i < 100; ++i) {
      const Index rank = 1 + i % (n * n);
      const double m = measure_M(random_density({n, n}, rank, 7000 + 100 * n + i)).M;
      c.is("random " + std::to_string(n) + "x" + std::to_string(n) + " #" + std::to_string(i) +
               " M = " + Criterion::fmt(m) + " > log2 N",
           m <= std::log2(n) + kExact);
    }
  }
}

void c8(Criterion& c) {
  for (int n = 2; n <= 4; ++n) {
    Rng rng(800 + n);
    for (int i = 0; i < 200; ++i) {
      const int rank = 1 + i % n;
      std::vector<double> lambdas(rank);
      double total = 0.0;
      for (auto& l : lambdas) total += (l = -std::log(rng.uniform()));
      for (auto& l : lambdas) l /= total;
      const BipartiteDims dims{n, n};
      const DensityMatrix rho =
          DensityMatrix::pure(schmidt_form(dims, lambdas, 900000 + 1000 * n + i), dims);
      double s = 0.0, largest = 0.0;
      for (double l : lambdas) {
        s -= l * std::log2(l);
        largest = std::max(largest, l);
      }
      const double m = measure_M(rho).M;
      const std::string tag = std::to_string(n) + "x" + std::to_string(n) + " #" +
                              std::to_string(i) + " rank " + std::to_string(rank);
      c.is(tag + ": M = " + Criterion::fmt(m) + " exceeds S = " + Criterion::fmt(s),
           m <= s + kExact);
      if (largest <= 0.5) c.near(tag + ": M = S", m, s, kExact);
      c.is(tag + ": M > 0 iff rank >= 2 (M = " + Criterion::fmt(m) + ")",
           (m > default_tolerances().measure) == (rank >= 2) && (rank >= 2 || m <= kExact));
    }
  }
}

void c9(Criterion& c) {
  const BipartiteDims shapes[] = {{2, 2}, {2, 3}, {3, 3}, {3, 2}, {4, 4}};
  for (int i = 0; i < 50; ++i) {
    const BipartiteDims dims = shapes[i % 5];
    const Index rank = 1 + i % dims.total();
    const DensityMatrix rho = random_density(dims, rank, 9100 + i);
    const auto [uA, uB] = random_local_unitary(dims, 9200 + i);
    const double before = measure_M(rho).M;
    const double after = measure_M(rho.local_conjugated(uA, uB)).M;
    c.near("state " + std::to_string(i) + " |dM|", after - before, 0.0, 1e-7);
  }
}

void c10(Criterion& c) {
  const BipartiteDims shapes[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};
  for (int i = 0; i < 200; ++i) {
    const BipartiteDims dims = shapes[i % 5];
    const ClassicalSample s = random_classical(dims, 10000 + i);
    const std::string tag = "sample " + std::to_string(i);
    c.is(tag + " M = " + Criterion::fmt(measure_M(s.state).M), measure_M(s.state).M <= 1e-8);
    const double g = measure_G(s.state);
    c.is(tag + " G = " + Criterion::fmt(g), g <= 1e-8);
    c.is(tag + " classified NONCLASSICAL", classify(s.state).verdict != Verdict::Nonclassical);
  }
}

void c11(Criterion& c) {
  const auto rows = sweep({"phi_p", "p", 0.0, 1.0, 201, {}});
  c.is("201 rows", rows.size() == 201);
  double peak = -1, peak_at = -1;
  for (const auto& r : rows) {
    const std::string tag = "p = " + Criterion::fmt(r.param);
    c.near(tag + " closed form", r.M, oracle::phi_p_M(r.param), kExact);
    c.near(tag + " S_vN", r.entropy, oracle::binary_entropy(r.param), kExact);
    c.is(tag + " M <= S_vN", r.M <= r.entropy + kExact);
    if (r.M > peak) {
      peak = r.M;
      peak_at = r.param;
    }
  }
  c.near("M(1/2)", rows[100].M, 1.0, kExact);
  c.near("argmax", peak_at, 0.5, kExact);
  c.near("M(0)", rows.front().M, 0.0, kExact);
  c.near("M(1)", rows.back().M, 0.0, kExact);
}

void c12(Criterion& c) {
  auto compare = [&](const std::string& tag, const DensityMatrix& rho,
                     const std::vector<oracle::Component>& comps) {
    const auto r = measure_M(rho);
    c.near(tag + " M^A", r.MA, oracle::side_measure(comps, true), kExact);
    c.near(tag + " M^B", r.MB, oracle::side_measure(comps, false), kExact);
    c.near(tag + " M", r.M, oracle::measure(comps), kExact);
  };
  for (const std::string name : {"varsigma", "sigma", "sigma_prime", "sigma_dprime", "tau", "zeta",
                                 "xi", "xi_prime"})
    compare(name, build({name, {}}), oracle::named_components(name));
  for (int s = 0; s < 4; ++s) {
    const std::map<std::string, double> p{{"seed_a", 10 + s}, {"seed_b", 20 + s}};
    compare("zeta_prime", build({"zeta_prime", p}), oracle::named_components("zeta_prime", p));
  }
  for (int n = 2; n <= 6; ++n) {
    const std::map<std::string, double> p{{"N", n}};
    compare("bell N=" + std::to_string(n), build({"bell", p}), oracle::named_components("bell", p));
  }
  for (double x : {0.0, 0.1, 0.25, 0.5, 0.7, 0.9, 1.0}) {
    const std::map<std::string, double> p{{"p", x}};
    compare("phi_p p=" + Criterion::fmt(x), build({"phi_p", p}),
            oracle::named_components("phi_p", p));
  }
  const std::vector<std::array<double, 3>> ks = {
      {0, 0, 0}, {1, -1, 1}, {0.5, 0.5, 0}, {0.2, 0.3, 0.1}, {-0.3, -0.3, -0.3}, {0.6, 0.2, 0.2}};
  for (const auto& k : ks) {
    const std::map<std::string, double> p{{"cx", k[0]}, {"cy", k[1]}, {"cz", k[2]}};
    compare("kappa", build({"kappa", p}), oracle::named_components("kappa", p));
  }
  for (int s = 0; s < 6; ++s) {
    const int dA = 2 + s % 2, dB = 2 + (s / 2) % 2;
    const std::map<std::string, double> p{{"dA", dA}, {"dB", dB}, {"seed", 40 + s}};
    const DensityMatrix rho = build({"random", p});
    compare("random seed " + std::to_string(40 + s), rho,
            oracle::generic_components(rho.matrix(), dA, dB));
    compare("random_classical", build({"random_classical", p}),
            oracle::named_components("random_classical", p));
  }
}

void c13(Criterion& c) {
  const BenchResult r = run_bench(16, 3, 13);
  c.is("four dimensions timed", r.rows.size() == 4);
  std::printf("    bench slope %.4f over N = 2, 4, 8, 16\n", r.slope);
  c.is("slope " + Criterion::fmt(r.slope) + " <= 6.8", r.slope <= 6.8);
}

void c14(Criterion& c) {
  const auto s = classify(sigma());
  c.is("sigma NONCLASSICAL", s.verdict == Verdict::Nonclassical);
  c.is("sigma decided by case (i), got '" + s.decided_by + "'", s.decided_by == "case (i)");
  const auto v = classify(varsigma());
  c.is("varsigma NONCLASSICAL", v.verdict == Verdict::Nonclassical);
  c.is("varsigma decided by case (iii), got '" + v.decided_by + "'", v.decided_by == "case (iii)");
  for (int n = 2; n <= 4; ++n)
    c.is("commutator on Bell " + std::to_string(n) + " inconclusive",
         detect_commutator(bell(n)).outcome == Outcome::Inconclusive);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria = {
      {"M(varsigma) = 0.220, M^A = 0, M^B = 0.439", c1},
      {"M(zeta') = 0.366, M^A = M^B, three local-unitary seeds", c2},
      {"M(sigma) = 0, G(sigma) = H(1/3) - H((6 - sqrt 10)/12)", c3},
      {"M(sigma') = 1/2, G(sigma') = 0", c4},
      {"M(tau) = 0, PT spectrum, classify(tau) via NPT", c5},
      {"additivity: M(xi), M(sigma''), M(xi')", c6},
      {"Bell maximum log2 N and the log2 N bound", c7},
      {"pure-state bound, equality and support", c8},
      {"local-unitary invariance", c9},
      {"vanishing on classical states", c10},
      {"phi_p sweep against the closed form", c11},
      {"oracle equivalence on the catalog", c12},
      {"runtime slope <= 6.8", c13},
      {"detection regression", c14},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    std::string error;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = c.passed() && error.empty();
    failed += !ok;
    std::printf("criterion %2zu %s  %s (%d checks)\n", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].first, c.checks());
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    for (const auto& f : c.failures()) std::printf("    %s\n", f.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
