// Command-line front end: analyze state specs, sweep a parameter, or dump
// discretized Schmidt modes for plotting.
//
// Exit codes: 0 success, 2 state-spec parse failure, 3 normalization failure,
// 4 numeric failure.  CLI usage errors return CLI11's standard codes.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "quadent/io.hpp"
#include "quadent/schmidt_analytic.hpp"
#include "quadent/schmidt_numeric.hpp"
#include "quadent/states.hpp"

namespace {

using namespace quadent;

struct RunConfig {
  int node_count = 0;  // 0 = auto: 2 * n_max + 16
  GridKind grid_kind = GridKind::GaussHermite;
  double extent_hint = 0.0;  // uniform grids only; 0 = auto
  double tail_epsilon = 1e-12;
  int n_cap = 4096;
  double lambda_floor = 1e-14;
  int rank_cut = 0;  // 0 = keep everything above the floor
  std::string format = "json";
  std::string out_path;  // empty = stdout
};

int effective_rank_cut(const RunConfig& cfg) {
  return cfg.rank_cut > 0 ? cfg.rank_cut : std::numeric_limits<int>::max();
}

GridSpec build_grid(const RunConfig& cfg, const TwoModeState& state) {
  const int n_max =
      std::max(state.max_oscillator_index(0), state.max_oscillator_index(1));
  const int count =
      cfg.node_count > 0 ? cfg.node_count : std::max(2 * n_max + 16, 16);
  std::optional<double> hint;
  if (cfg.extent_hint > 0.0) hint = cfg.extent_hint;
  return make_grid(cfg.grid_kind, count, hint, n_max);
}

// Machine check before anything is written: 1 <= K <= spectrum length.
void check_report(const EntanglementReport& report) {
  const double upper =
      static_cast<double>(report.spectrum.lambdas.size()) + 1e-12;
  if (!(report.K >= 1.0 - 1e-12 && report.K <= upper))
    throw NumericError("report failed the 1 <= K <= rank bound check");
}

EntanglementReport run_numeric(const TwoModeState& state,
                               const RunConfig& cfg) {
  const GridSpec grid = build_grid(cfg, state);
  const WaveFunctionSample sample = sample_wavefunction(state, grid, grid);
  const DiscretizedSchmidtModes modes =
      numeric_schmidt(sample, effective_rank_cut(cfg), cfg.lambda_floor);
  return k_numeric(modes);
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write output: " + cfg.out_path);
}

void cmd_analyze(const std::string& spec_path, const RunConfig& cfg,
                 bool numeric) {
  const nlohmann::json doc = load_json_document(spec_path);
  const std::string kind = spec_kind(doc);
  const TwoModeState state = parse_state_spec(doc);

  const EntanglementReport analytic = schmidt_K(analytic_spectrum(state));
  check_report(analytic);
  std::optional<EntanglementReport> numeric_report;
  if (numeric) {
    numeric_report = run_numeric(state, cfg);
    check_report(*numeric_report);
  }

  const EntanglementReport* numeric_ptr =
      numeric_report ? &*numeric_report : nullptr;
  write_output(cfg, cfg.format == "csv"
                        ? combined_report_csv(analytic, numeric_ptr)
                        : combined_report_json(kind, analytic, numeric_ptr));
}

struct SweepSpec {
  std::string parameter;  // alpha | r | beta
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
  std::map<std::string, double> fixed;
};

double fixed_or(const SweepSpec& sweep, const std::string& key,
                double fallback) {
  const auto it = sweep.fixed.find(key);
  return it == sweep.fixed.end() ? fallback : it->second;
}

TwoModeState sweep_state(const SweepSpec& sweep, const RunConfig& cfg,
                         double value) {
  const double theta = fixed_or(sweep, "theta", 0.0);
  if (sweep.parameter == "alpha") return make_single_photon(value, theta);
  if (sweep.parameter == "r")
    return make_squeezed_vacuum(value, fixed_or(sweep, "phi", 0.0),
                                cfg.tail_epsilon, cfg.n_cap, theta);
  // beta: rotate a single-photon state with fixed alpha.
  const auto it = sweep.fixed.find("alpha");
  if (it == sweep.fixed.end())
    throw SpecParseError("sweep over beta requires --set alpha=<value>");
  return rotate_basis(make_single_photon(it->second, theta), value);
}

void cmd_sweep(const SweepSpec& sweep, const RunConfig& cfg, bool numeric) {
  if (sweep.steps < 2)
    throw std::invalid_argument("sweep: steps must be >= 2");
  if (!(sweep.start < sweep.stop))
    throw std::invalid_argument("sweep: start must be < stop");
  for (const auto& [key, value] : sweep.fixed) {
    (void)value;
    if (key != "theta" && key != "phi" && key != "alpha")
      throw SpecParseError("sweep: unknown --set key \"" + key + "\"");
  }

  const double step = (sweep.stop - sweep.start) / (sweep.steps - 1);
  std::string csv = sweep.parameter + ",K_analytic,degree_analytic";
  if (numeric) csv += ",K_numeric,k_difference";
  csv += '\n';
  std::string jsn = "[";

  for (int i = 0; i < sweep.steps; ++i) {
    const double value = sweep.start + i * step;
    const TwoModeState state = sweep_state(sweep, cfg, value);
    const EntanglementReport analytic = schmidt_K(analytic_spectrum(state));
    check_report(analytic);
    std::optional<EntanglementReport> numeric_report;
    if (numeric) {
      numeric_report = run_numeric(state, cfg);
      check_report(*numeric_report);
    }

    csv += format_double(value) + ',' + format_double(analytic.K) + ',' +
           format_double(analytic.degree);
    if (i) jsn += ',';
    jsn += "{\"" + sweep.parameter + "\":" + format_double(value) +
           ",\"K_analytic\":" + format_double(analytic.K) +
           ",\"degree_analytic\":" + format_double(analytic.degree);
    if (numeric_report) {
      csv += ',' + format_double(numeric_report->K) + ',' +
             format_double(numeric_report->K - analytic.K);
      jsn += ",\"K_numeric\":" + format_double(numeric_report->K) +
             ",\"k_difference\":" +
             format_double(numeric_report->K - analytic.K);
    }
    csv += '\n';
    jsn += '}';
  }
  jsn += "]\n";

  write_output(cfg, cfg.format == "csv" ? csv : jsn);
}

void cmd_dump_modes(const std::string& spec_path, const RunConfig& cfg,
                    const std::string& prefix_flag) {
  const TwoModeState state = load_state_spec(spec_path);
  const GridSpec grid = build_grid(cfg, state);
  const WaveFunctionSample sample = sample_wavefunction(state, grid, grid);
  const DiscretizedSchmidtModes modes =
      numeric_schmidt(sample, effective_rank_cut(cfg), cfg.lambda_floor);

  std::string prefix = prefix_flag;
  if (prefix.empty()) {
    std::filesystem::path p(spec_path);
    prefix = (p.parent_path() / p.stem()).string();
  }
  const auto emit = [](const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write output: " + path);
    std::cout << "wrote " << path << "\n";
  };
  emit(prefix + "_lambdas.csv", lambdas_csv(modes));
  emit(prefix + "_modes_x.csv", modes_csv(modes, 0));
  emit(prefix + "_modes_y.csv", modes_csv(modes, 1));
  emit(prefix + "_density.csv", density_csv(sample));
}

void add_grid_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--grid", cfg.node_count,
                  "Quadrature nodes per axis (default: 2*n_max + 16)");
  cmd->add_option("--grid-kind", cfg.grid_kind, "Grid kind (default gh)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, GridKind>{{"gh", GridKind::GaussHermite},
                                          {"uniform", GridKind::Uniform}},
          CLI::ignore_case));
  cmd->add_option("--extent", cfg.extent_hint,
                  "Half-width hint for uniform grids (default: auto)");
  cmd->add_option("--lambda-floor", cfg.lambda_floor,
                  "Discard lambda below this value (default 1e-14)");
  cmd->add_option("--rank-cut", cfg.rank_cut,
                  "Keep at most this many Schmidt modes (default: all)");
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out", cfg.out_path, "Output path (default: stdout)");
  cmd->add_option("--format", cfg.format, "Output format (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Schmidt-mode analysis of two-mode multiphoton states in quadrature "
      "variables"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string spec_path;
  bool numeric = true;
  SweepSpec sweep;
  std::vector<std::string> set_pairs;
  std::string prefix;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Entanglement report (analytic and numeric K) for one state");
  analyze->add_option("spec", spec_path, "State-spec JSON file")->required();
  analyze->add_flag("--numeric,!--no-numeric", numeric,
                    "Also run the grid/SVD pipeline (default on)");
  add_grid_options(analyze, cfg);
  add_output_options(analyze, cfg);
  analyze->callback([&] { cmd_analyze(spec_path, cfg, numeric); });

  CLI::App* sw = app.add_subcommand(
      "sweep", "Tabulate K against one state parameter (CSV or JSON)");
  sw->add_option("--param", sweep.parameter, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"alpha", "r", "beta"}));
  sw->add_option("--from", sweep.start, "First parameter value")->required();
  sw->add_option("--to", sweep.stop, "Last parameter value")->required();
  sw->add_option("--steps", sweep.steps, "Number of rows (>= 2)")->required();
  sw->add_option("--set", set_pairs,
                 "Fixed state field, key=value (theta, phi, alpha)");
  sw->add_flag("--numeric", "Also run the grid/SVD pipeline per row");
  sw->add_option("--tail-epsilon", cfg.tail_epsilon,
                 "Squeezed-vacuum truncation tail (default 1e-12)");
  sw->add_option("--n-cap", cfg.n_cap,
                 "Squeezed-vacuum coefficient cap (default 4096)");
  add_grid_options(sw, cfg);
  add_output_options(sw, cfg);
  sw->callback([&] {
    for (const std::string& pair : set_pairs) {
      const size_t eq = pair.find('=');
      if (eq == std::string::npos)
        throw SpecParseError("sweep: --set expects key=value, got \"" + pair +
                             "\"");
      try {
        sweep.fixed[pair.substr(0, eq)] = std::stod(pair.substr(eq + 1));
      } catch (const std::exception&) {
        throw SpecParseError("sweep: bad --set value in \"" + pair + "\"");
      }
    }
    cmd_sweep(sweep, cfg, sw->count("--numeric") > 0);
  });

  CLI::App* dump = app.add_subcommand(
      "dump-modes", "Write lambda list, mode profiles and |Psi|^2 as CSV");
  dump->add_option("spec", spec_path, "State-spec JSON file")->required();
  dump->add_option("--out-prefix", prefix,
                   "Output file prefix (default: spec path stem)");
  add_grid_options(dump, cfg);
  dump->callback([&] { cmd_dump_modes(spec_path, cfg, prefix); });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NormalizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
