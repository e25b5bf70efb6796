// Copyright 2026 The extwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extwit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "extwit/error.hpp"
#include "extwit/io.hpp"
#include "extwit/random.hpp"

namespace extwit::cli {

namespace {

const std::map<std::string, Command> kCommands{
    {"state", Command::State},
    {"ppt-check", Command::PptCheck},
    {"detect", Command::Detect},
    {"sweep", Command::Sweep},
    {"verify-identities", Command::VerifyIdentities},
    {"positivity", Command::Positivity},
    {"unextendability", Command::Unextendability},
};

const std::map<std::string, MapFamily> kFamilies{
    {"choi1", MapFamily::Choi1},
    {"choi2", MapFamily::Choi2},
    {"generalized", MapFamily::Generalized},
    {"transpose", MapFamily::Transpose},
};

const std::map<std::string, StateSource> kSources{
    {"tiles", StateSource::Tiles},
    {"pyramid", StateSource::Pyramid},
    {"file", StateSource::File},
};

const std::map<std::string, AutomorphismKind> kKinds{
    {"inner", AutomorphismKind::Inner},
    {"outer", AutomorphismKind::Outer},
};

template <typename T>
std::vector<std::string> keys(const std::map<std::string, T>& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ConfigError, field + ": " + what);
}

double angle_option(const std::string& field, const std::string& text) {
  try {
    return io::parse_angle(text);
  } catch (const Error& e) {
    config_error(field, e.what());
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::size_t map_dim(const RunConfig& cfg) {
  return cfg.map_family == MapFamily::Transpose ? cfg.dB : 3;
}

// Everything the user controls; bound to CLI11 options.
struct Options {
  std::string command;
  std::string map = "choi1";
  std::vector<double> abc;
  std::optional<double> t;
  std::string automorphism;
  std::string auto_theta;
  std::vector<double> auto_diag;
  std::string auto_matrix;
  bool clamp = false;
  std::string state = "tiles";
  std::string state_file;
  std::size_t dA = 3;
  std::size_t dB = 3;
  std::string theta_start = "0";
  std::string theta_end = "2pi";
  int samples = kDefaultSamples;
  double tol = kNegativityTol;
  std::uint64_t seed = 0;
  int restarts = 50;
  double threshold = 0.01;
  std::string output;
  std::string basis_output;
};

void add_options(CLI::App& app, Options& o) {
  app.add_option("command", o.command, "Action to run")
      ->required()
      ->check(CLI::IsMember(keys(kCommands)));
  app.add_option("--map", o.map, "Map family")->check(CLI::IsMember(keys(kFamilies)));
  app.add_option("--abc", o.abc, "Generalized Choi weights a,b,c")->delimiter(',')->expected(3);
  app.add_option("--t", o.t, "Extremal Cho-Kye parameter t >= 0");
  app.add_option("--automorphism", o.automorphism, "Compose the map with a factor")
      ->check(CLI::IsMember(keys(kKinds)));
  app.add_option("--auto-theta", o.auto_theta, "Factor U(theta), radians or multiples of pi");
  app.add_option("--auto-diag", o.auto_diag, "Factor diag(a1,...,an)")->delimiter(',');
  app.add_option("--auto-matrix", o.auto_matrix, "Factor read from a matrix file");
  app.add_flag("--clamp", o.clamp, "Rescale the factor so that A A^dagger <= I");
  app.add_option("--state", o.state, "State source")->check(CLI::IsMember(keys(kSources)));
  app.add_option("--state-file", o.state_file, "Density matrix file for --state file");
  app.add_option("--dA", o.dA, "First subsystem dimension for --state file");
  app.add_option("--dB", o.dB, "Second subsystem dimension for --state file");
  app.add_option("--theta-start", o.theta_start, "Sweep start angle");
  app.add_option("--theta-end", o.theta_end, "Sweep end angle");
  app.add_option("--samples", o.samples, "Sweep grid size (inclusive endpoints)");
  app.add_option("--tol", o.tol, "Negativity tolerance");
  app.add_option("--seed", o.seed, "Seed for randomized commands");
  app.add_option("--restarts", o.restarts, "Seesaw restarts");
  app.add_option("--threshold", o.threshold, "Unextendability overlap threshold");
  app.add_option("--output", o.output, "Output file (CSV curve or state matrix)");
  app.add_option("--basis-output", o.basis_output, "Write basis vectors as matrix rows");
  app.set_config("--config", "", "Read options from a TOML/INI file");
}

std::string usage() {
  CLI::App app{"Positive-map entanglement witnesses and UPB states", "extwit"};
  Options o;
  add_options(app, o);
  return app.help();
}

OperatorFactor build_factor(const RunConfig& cfg, const Automorphism& a) {
  ComplexMatrix m = [&] {
    if (a.theta) return unitary_u(*a.theta).matrix();
    if (!a.diagonal.empty()) {
      ComplexVector d(a.diagonal.begin(), a.diagonal.end());
      return ComplexMatrix::diagonal(d);
    }
    return io::read_matrix_file(*a.matrix_file);
  }();
  if (m.rows() != map_dim(cfg) || m.cols() != map_dim(cfg)) {
    config_error("--auto-matrix", "factor must be " + std::to_string(map_dim(cfg)) + "x" +
                                      std::to_string(map_dim(cfg)));
  }
  if (a.clamp) return clamp_to_operation(m);
  return OperatorFactor(std::move(m), a.theta ? "U(" + fmt(*a.theta) + ")" : "A");
}

std::size_t numerical_rank(const std::vector<double>& eig, double tol) {
  return static_cast<std::size_t>(
      std::count_if(eig.begin(), eig.end(), [tol](double v) { return v > tol; }));
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ConfigError, "--output: cannot open " + path.string());
  f << content;
}

int run_state(const RunConfig& cfg, std::ostream& out) {
  const DensityOperator rho = build_state(cfg);
  const auto eig = hermitian_eigenvalues(rho.matrix());
  out << "state: " << rho.label() << " (" << rho.dims().dA << "x" << rho.dims().dB << ")\n";
  out << "trace: " << fmt(rho.matrix().trace().real()) << "\n";
  out << "rank: " << numerical_rank(eig, 1e-10) << "\n";
  out << "lambda_min: " << fmt(eig.front()) << "\n";
  out << "eigenvalues:";
  for (double v : eig) out << ' ' << fmt(v);
  out << "\n";
  if (cfg.output_path) {
    std::ostringstream os;
    io::write_matrix(os, rho.matrix());
    write_file(*cfg.output_path, os.str());
  }
  if (cfg.basis_output_path) {
    const ProductBasisSet basis = build_basis(cfg);
    ComplexMatrix rows(basis.size(), basis.dims().total());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t k = 0; k < basis.dims().total(); ++k) rows(i, k) = basis.joint()[i][k];
    std::ostringstream os;
    io::write_matrix(os, rows);
    write_file(*cfg.basis_output_path, os.str());
  }
  return kExitOk;
}

int run_ppt(const RunConfig& cfg, std::ostream& out) {
  const DensityOperator rho = build_state(cfg);
  const double lam = min_eigenvalue(partial_transpose(rho.matrix(), rho.dims()));
  const bool ppt = lam >= -cfg.sweep.negativity_tol;
  out << "state: " << rho.label() << "\n";
  out << "lambda_min(partial transpose): " << fmt(lam) << "\n";
  out << "PPT: " << (ppt ? "yes" : "no") << "\n";
  return ppt ? kExitOk : kExitCheckFailed;
}

int run_detect(const RunConfig& cfg, std::ostream& out) {
  const MapSpec phi = build_map(cfg);
  const DensityOperator rho = build_state(cfg);
  const Detection d = detect(phi, rho, cfg.sweep.negativity_tol);
  out << "map: " << phi.label() << "\n";
  out << "state: " << rho.label() << "\n";
  out << "lambda_min: " << fmt(d.lambda_min) << "\n";
  if (d.detected) {
    out << "lambda_min < 0, entangled\n";
    return kExitOk;
  }
  out << (d.lambda_min > 0.0 ? "lambda_min > 0" : "lambda_min >= -tol") << ", inconclusive\n";
  return kExitCheckFailed;
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const MapSpec base = build_map(cfg);
  const DensityOperator rho = build_state(cfg);
  const SweepCurve curve = sweep(base, rho, cfg.sweep);
  const DetectionReport report =
      detection_intervals(curve, cfg.sweep.negativity_tol,
                          [&](double theta) { return sweep_point(base, rho, theta); });

  std::ostringstream csv;
  io::write_curve_csv(csv, curve);
  std::ostream* summary = &out;
  if (cfg.output_path) {
    write_file(*cfg.output_path, csv.str());
  } else {
    out << csv.str();
    summary = &err;
  }
  *summary << "map: " << curve.map_label << "\n";
  *summary << "state: " << curve.state_label << "\n";
  *summary << "samples: " << curve.records.size() << "\n";
  *summary << "global_min: " << fmt(report.global_min) << " at theta " << fmt(report.global_argmin)
           << "\n";
  *summary << "detection intervals: " << report.intervals.size() << "\n";
  for (const auto& [lo, hi] : report.intervals) {
    *summary << "  [" << fmt(lo) << ", " << fmt(hi) << "]\n";
  }
  return kExitOk;
}

int run_identities(const RunConfig& cfg, std::ostream& out) {
  constexpr double kTol = 1e-12;
  bool ok = true;
  auto line = [&](const std::string& name, double r) {
    const bool pass = r <= kTol;
    ok = ok && pass;
    out << name << ": " << fmt(r) << (pass ? "  ok" : "  FAIL") << "\n";
  };
  line("choi1 = U(3pi/2) o choi2 o U(pi/2)", choi_relation_residual());
  for (double t : {0.2, 0.5, 2.0, 5.0}) {
    line("phi_t = U(3pi/2) o phi_1/t o U(pi/2), t=" + fmt(t), cho_kye_relation_residual(t));
  }

  const MapSpec phi = build_map(cfg);
  ComplexVector scales;
  if (cfg.automorphism && !cfg.automorphism->diagonal.empty()) {
    scales.assign(cfg.automorphism->diagonal.begin(), cfg.automorphism->diagonal.end());
  } else {
    random::Engine rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.25, 2.0);
    for (std::size_t i = 0; i < phi.dim(); ++i) scales.emplace_back(u(rng));
  }
  std::string name = "diagonal extension = " + phi.label() + " o diag(";
  for (std::size_t i = 0; i < scales.size(); ++i) name += (i ? "," : "") + fmt(scales[i].real());
  line(name + ")", diagonal_extension_residual(phi, scales));
  return ok ? kExitOk : kExitCheckFailed;
}

int run_positivity(const RunConfig& cfg, std::ostream& out) {
  const MapSpec phi = build_map(cfg);
  SeesawOptions opts;
  opts.restarts = cfg.restarts;
  opts.seed = cfg.seed;
  const PositivityResult r = positivity_seesaw(phi, opts);
  const bool positive = r.min_value >= -cfg.sweep.negativity_tol;
  out << "map: " << phi.label() << "\n";
  out << "min biquadratic form: " << fmt(r.min_value) << "\n";
  out << (positive ? "positive (numerical evidence)" : "not positive") << "\n";
  return positive ? kExitOk : kExitCheckFailed;
}

int run_unextendability(const RunConfig& cfg, std::ostream& out) {
  const ProductBasisSet basis = build_basis(cfg);
  UnextendabilityOptions opts;
  opts.restarts = cfg.restarts;
  opts.seed = cfg.seed;
  const double overlap = unextendability_seesaw(basis, opts);
  const bool unext = overlap > cfg.threshold;
  out << "basis: " << basis.label() << "\n";
  out << "min product-state overlap: " << fmt(overlap) << "\n";
  out << (unext ? "no product state found in the complement" : "complement may contain a product state")
      << "\n";
  return unext ? kExitOk : kExitCheckFailed;
}

}  // namespace

void RunConfig::validate() const {
  if (map_family == MapFamily::Generalized) {
    if (abc.has_value() == t.has_value()) {
      config_error("--abc/--t", "the generalized family needs exactly one of (a,b,c) or t");
    }
  } else if (abc || t) {
    config_error(abc ? "--abc" : "--t", "only valid with --map generalized");
  }
  if (abc) ChoKyeParams((*abc)[0], (*abc)[1], (*abc)[2]);
  if (t && (!std::isfinite(*t) || *t < 0.0)) config_error("--t", "must be finite and >= 0");

  if (dA < 2 || dB < 2) config_error("--dA/--dB", "dimensions must be at least 2");
  if (map_family != MapFamily::Transpose && dB != 3) {
    config_error("--dB", "Choi-type maps act on 3x3 matrices");
  }

  if (automorphism) {
    const auto& a = *automorphism;
    const int sources = int(a.theta.has_value()) + int(!a.diagonal.empty()) +
                        int(a.matrix_file.has_value());
    if (sources != 1) {
      config_error("--automorphism",
                   "needs exactly one of --auto-theta, --auto-diag, --auto-matrix");
    }
    if (a.theta && map_dim(*this) != 3) config_error("--auto-theta", "U(theta) is 3x3");
    if (!a.diagonal.empty()) {
      if (a.diagonal.size() != map_dim(*this)) {
        config_error("--auto-diag", "needs " + std::to_string(map_dim(*this)) + " entries");
      }
      for (double v : a.diagonal) {
        if (v == 0.0 || !std::isfinite(v)) config_error("--auto-diag", "entries must be nonzero");
      }
    }
  }

  if (state_source == StateSource::File && !state_file) {
    config_error("--state-file", "required with --state file");
  }
  if (state_source != StateSource::File && state_file) {
    config_error("--state-file", "only valid with --state file");
  }
  if (state_source != StateSource::File && (dA != 3 || dB != 3)) {
    config_error("--dA/--dB", "tiles and pyramid states are 3x3");
  }
  if (command == Command::Unextendability && state_source == StateSource::File) {
    config_error("--state", "unextendability needs a product basis (tiles or pyramid)");
  }
  if (basis_output_path && state_source == StateSource::File) {
    config_error("--basis-output", "no basis for --state file");
  }

  try {
    sweep.validate();
  } catch (const Error& e) {
    config_error("--theta-start/--theta-end/--samples/--tol", e.what());
  }
  if (restarts < 1) config_error("--restarts", "must be positive");
  if (!(threshold >= 0.0)) config_error("--threshold", "must be non-negative");
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Positive-map entanglement witnesses and UPB states", "extwit"};
  Options o;
  add_options(app, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::ConfigError, e.what());
  }

  RunConfig cfg;
  cfg.command = kCommands.at(o.command);
  cfg.map_family = kFamilies.at(o.map);
  if (!o.abc.empty()) cfg.abc = std::array<double, 3>{o.abc[0], o.abc[1], o.abc[2]};
  cfg.t = o.t;

  const bool any_factor = !o.auto_theta.empty() || !o.auto_diag.empty() || !o.auto_matrix.empty();
  if (!o.automorphism.empty() || any_factor) {
    if (o.automorphism.empty()) config_error("--automorphism", "factor given without inner|outer");
    Automorphism a;
    a.kind = kKinds.at(o.automorphism);
    if (!o.auto_theta.empty()) a.theta = angle_option("--auto-theta", o.auto_theta);
    a.diagonal = o.auto_diag;
    if (!o.auto_matrix.empty()) a.matrix_file = o.auto_matrix;
    a.clamp = o.clamp;
    cfg.automorphism = a;
  }

  cfg.state_source = kSources.at(o.state);
  if (!o.state_file.empty()) cfg.state_file = o.state_file;
  cfg.dA = o.dA;
  cfg.dB = o.dB;
  cfg.sweep.theta_start = angle_option("--theta-start", o.theta_start);
  cfg.sweep.theta_end = angle_option("--theta-end", o.theta_end);
  cfg.sweep.samples = o.samples;
  cfg.sweep.negativity_tol = o.tol;
  cfg.seed = o.seed;
  cfg.restarts = o.restarts;
  cfg.threshold = o.threshold;
  if (!o.output.empty()) cfg.output_path = o.output;
  if (!o.basis_output.empty()) cfg.basis_output_path = o.basis_output;
  cfg.validate();
  return cfg;
}

MapSpec build_map(const RunConfig& cfg) {
  MapSpec phi = [&] {
    switch (cfg.map_family) {
      case MapFamily::Choi1: return choi_c1();
      case MapFamily::Choi2: return choi_c2();
      case MapFamily::Transpose: return transpose_map(cfg.dB);
      case MapFamily::Generalized:
        if (cfg.abc) return generalized_choi(ChoKyeParams((*cfg.abc)[0], (*cfg.abc)[1], (*cfg.abc)[2]));
        return generalized_choi(cho_kye_t(*cfg.t));
    }
    throw Error(ErrorKind::ConfigError, "--map: unknown family");
  }();
  if (!cfg.automorphism) return phi;
  const OperatorFactor a = build_factor(cfg, *cfg.automorphism);
  return cfg.automorphism->kind == AutomorphismKind::Inner ? inner_automorphism(phi, a)
                                                            : outer_automorphism(a, phi);
}

ProductBasisSet build_basis(const RunConfig& cfg) {
  switch (cfg.state_source) {
    case StateSource::Tiles: return tiles();
    case StateSource::Pyramid: return pyramid();
    case StateSource::File: break;
  }
  throw Error(ErrorKind::ConfigError, "--state: a file state has no product basis");
}

DensityOperator build_state(const RunConfig& cfg) {
  if (cfg.state_source == StateSource::File) {
    return DensityOperator(io::read_matrix_file(*cfg.state_file), BipartiteDims(cfg.dA, cfg.dB),
                           cfg.state_file->filename().string());
  }
  return upb_complement_state(build_basis(cfg));
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::State: return run_state(cfg, out);
      case Command::PptCheck: return run_ppt(cfg, out);
      case Command::Detect: return run_detect(cfg, out);
      case Command::Sweep: return run_sweep(cfg, out, err);
      case Command::VerifyIdentities: return run_identities(cfg, out);
      case Command::Positivity: return run_positivity(cfg, out);
      case Command::Unextendability: return run_unextendability(cfg, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::NoConvergence:
      case ErrorKind::NotCP:
      case ErrorKind::NonRealValue:
        return kExitCheckFailed;
      default:
        return kExitConfigError;
    }
  }
  return kExitConfigError;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (std::any_of(args.begin(), args.end(),
                  [](const std::string& a) { return a == "-h" || a == "--help"; })) {
    out << usage();
    return kExitOk;
  }
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return run(cfg, out, err);
}

}  // namespace extwit::cli
