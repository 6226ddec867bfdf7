#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "truncorr/detect.hpp"
#include "truncorr/errors.hpp"
#include "truncorr/experiments.hpp"
#include "truncorr/io.hpp"
#include "truncorr/measures.hpp"
#include "truncorr/partition_measure.hpp"
#include "truncorr/states.hpp"

namespace truncorr::cli {
namespace {

struct Globals {
  bool json = false;
  std::optional<double> eps_deg, eps_tie;
  std::optional<std::uint64_t> seed;

  Tolerances tolerances() const {
    Tolerances t = default_tolerances();
    if (eps_deg) t.deg = *eps_deg;
    if (eps_tie) t.tie = *eps_tie;
    if (!(t.deg > 0.0)) throw InputError("--eps-deg must be positive");
    if (!(t.tie >= 0.0 && t.tie < 0.5)) throw InputError("--eps-tie must lie in [0, 0.5)");
    return t;
  }
};

std::string fmt(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kv) {
  std::map<std::string, double> out;
  for (const auto& item : kv) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InputError("--param expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != val.size())
      throw InputError("--param " + key + ": '" + val + "' is not a number");
    out[key] = d;
  }
  return out;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
  if (!f) throw InputError("failed writing '" + path + "'");
}

void print_tolerances(const Tolerances& t, std::ostream& out) {
  out << "tolerances:\n"
      << "  eps_herm " << fmt(t.herm, "%g") << "  eps_tr " << fmt(t.trace, "%g") << "  eps_psd "
      << fmt(t.psd, "%g") << "  eps_recon " << fmt(t.recon, "%g") << "  eps_orth "
      << fmt(t.orth, "%g") << "\n"
      << "  eps_deg " << fmt(t.deg, "%g") << "  eps_zero " << fmt(t.zero, "%g") << "  eps_rank "
      << fmt(t.rank, "%g") << "  eps_tie " << fmt(t.tie, "%g") << "\n"
      << "  eps_offdiag " << fmt(t.offdiag, "%g") << "  eps_comm " << fmt(t.comm, "%g")
      << "  eps_local " << fmt(t.local, "%g") << "  eps_measure " << fmt(t.measure, "%g")
      << "  partition_limit " << t.partition_limit << "\n";
}

void print_measures(const MeasureReport& m, std::ostream& out) {
  out << "M    " << fmt(m.M) << "\n"
      << "M^A  " << fmt(m.MA) << "\n"
      << "M^B  " << fmt(m.MB) << "\n";
  if (m.G) {
    out << "G    " << fmt(*m.G) << "\n"
        << "F^A  " << fmt(*m.FA) << "\n"
        << "F^B  " << fmt(*m.FB) << "\n";
  }
  if (m.entropyA)
    out << "S(A) " << fmt(*m.entropyA) << "   S(B) " << fmt(*m.entropyB) << "   S(AB) "
        << fmt(*m.entropyAB) << "\n";
  if (m.ppt_min_eigenvalue)
    out << "min eig PT " << fmt(*m.ppt_min_eigenvalue) << "   negativity "
        << fmt(*m.negativity) << "\n";
  out << "eigenspaces:\n"
      << "  eta                  mult   M^A term             M^B term\n";
  for (const auto& c : m.per_component) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-20.12g %-6ld %-20.12g %-20.12g\n", c.eta,
                  static_cast<long>(c.mult), c.sideA, c.sideB);
    out << line;
  }
}

void print_detection(const DetectionVerdict& d, std::ostream& out) {
  out << "verdict: " << to_string(d.verdict);
  if (!d.decided_by.empty()) out << " (" << d.decided_by << ")";
  out << "\nevidence:\n";
  for (const auto& e : d.evidence)
    out << "  [" << to_string(e.outcome) << "] " << e.detail << "\n";
  if (d.basis) {
    out << "product basis weights (a, b, weight):\n";
    for (Index a = 0; a < d.basis->weights.rows(); ++a)
      for (Index b = 0; b < d.basis->weights.cols(); ++b)
        out << "  " << a << " " << b << " " << fmt(d.basis->weights(a, b)) << "\n";
  }
}

void finish_report(const Report& r, const Globals& g, std::ostream& out) {
  if (g.json) {
    out << emit_report(r);
    return;
  }
  out << r.command << " " << r.source << "  dims " << r.dims.dA << "x" << r.dims.dB << "\n";
  if (r.measures) print_measures(*r.measures, out);
  if (r.detection) print_detection(*r.detection, out);
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  print_tolerances(r.tolerances, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncation- and partition-based measures of nonclassical correlation", "truncorr"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--eps-deg", g.eps_deg, "Eigenvalue degeneracy threshold");
  app.add_option("--eps-tie", g.eps_tie, "Half-point tie band for nim");
  app.add_option("--seed", g.seed, "Seed for random states and the benchmark");

  std::string state_name, state_out;
  std::vector<std::string> state_params;
  auto* cmd_state = app.add_subcommand("state", "Write a catalog state to a state file");
  cmd_state->add_option("--name", state_name, "Catalog name")->required();
  cmd_state->add_option("--param", state_params, "Parameter key=value (repeatable)");
  cmd_state->add_option("--out", state_out, "Output path (stdout if omitted)");

  std::string compute_path, which = "all";
  std::optional<std::size_t> g_limit;
  auto* cmd_compute = app.add_subcommand("compute", "Compute M and/or G for a state file");
  cmd_compute->add_option("path", compute_path, "State file")->required();
  cmd_compute->add_option("--which", which, "M, G or all")
      ->check(CLI::IsMember({"M", "G", "all"}));
  cmd_compute->add_option("--g-limit", g_limit, "Largest dA*dB for which G is evaluated");

  std::string detect_path;
  auto* cmd_detect = app.add_subcommand("detect", "Test a state file for a product eigenbasis");
  cmd_detect->add_option("path", detect_path, "State file")->required();

  SweepSpec sw;
  std::vector<std::string> sweep_params;
  std::string sweep_out;
  auto* cmd_sweep = app.add_subcommand("sweep", "Tabulate M and S_vN(Tr_B) along a family");
  cmd_sweep->add_option("--family", sw.family, "Catalog family (phi_p, kappa, ...)")->required();
  cmd_sweep->add_option("--vary", sw.vary, "Parameter to vary (default p for phi_p, cx for kappa)");
  cmd_sweep->add_option("--from", sw.from, "Start of the range");
  cmd_sweep->add_option("--to", sw.to, "End of the range");
  cmd_sweep->add_option("--steps", sw.steps, "Number of sample points")->default_val(201);
  cmd_sweep->add_option("--param", sweep_params, "Fixed parameter key=value (repeatable)");
  cmd_sweep->add_option("--out", sweep_out, "CSV path (stdout if omitted)");

  int max_dim = 16, trials = 3;
  std::string bench_out;
  auto* cmd_bench = app.add_subcommand("bench", "Runtime scaling of M on random states");
  cmd_bench->add_option("--max-dim", max_dim, "Largest per-side dimension")->default_val(16);
  cmd_bench->add_option("--trials", trials, "States per dimension")->default_val(3);
  cmd_bench->add_option("--out", bench_out, "CSV path (stdout if omitted)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    Tolerances tol = g.tolerances();

    if (cmd_state->parsed()) {
      StateSpec spec{state_name, parse_params(state_params)};
      if (g.seed && (state_name == "random" || state_name == "random_classical") &&
          !spec.params.count("seed"))
        spec.params["seed"] = static_cast<double>(*g.seed);
      write_text(state_out, write_state_file(build(spec)), out);
      return kOk;
    }

    if (cmd_compute->parsed()) {
      if (g_limit) tol.partition_limit = *g_limit;
      const DensityMatrix rho = load_state_file(compute_path, tol);
      Report r;
      r.command = "compute";
      r.source = compute_path;
      r.dims = rho.dims();
      r.tolerances = tol;
      const bool over = static_cast<std::size_t>(rho.dims().total()) > tol.partition_limit;
      if (which == "G" && over)
        throw CapabilityError(partition_guard_message(rho.dims(), tol.partition_limit));
      const bool want_G = which != "M" && !over;
      if (which == "all" && over)
        r.notes.push_back("G skipped: " + partition_guard_message(rho.dims(), tol.partition_limit));
      r.measures = measure_report(rho, want_G, tol);
      finish_report(r, g, out);
      return kOk;
    }

    if (cmd_detect->parsed()) {
      const DensityMatrix rho = load_state_file(detect_path, tol);
      Report r;
      r.command = "detect";
      r.source = detect_path;
      r.dims = rho.dims();
      r.tolerances = tol;
      r.detection = classify(rho, tol);
      finish_report(r, g, out);
      return kOk;
    }

    if (cmd_sweep->parsed()) {
      sw.fixed = parse_params(sweep_params);
      if (sw.vary.empty()) {
        if (sw.family == "phi_p") sw.vary = "p";
        else if (sw.family == "kappa") sw.vary = "cx";
        else throw InputError("sweep: --vary is required for family '" + sw.family + "'");
      }
      if (cmd_sweep->count("--from") == 0 && cmd_sweep->count("--to") == 0 &&
          sw.family == "kappa") {
        sw.from = -1.0;
        sw.to = 1.0;
      }
      const auto rows = sweep(sw, tol);
      write_text(sweep_out, sweep_csv(rows), out);
      return kOk;
    }

    if (cmd_bench->parsed()) {
      const BenchResult res = run_bench(max_dim, trials, g.seed.value_or(2024), tol);
      write_text(bench_out, bench_csv(res), out);
      if (!bench_out.empty() && bench_out != "-")
        out << "log-log slope " << fmt(res.slope, "%.4f") << "\n";
      else
        err << "log-log slope " << fmt(res.slope, "%.4f") << "\n";
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapabilityError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace truncorr::cli
