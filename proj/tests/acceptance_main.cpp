// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Tolerances are pinned in code next to each check.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quadent/schmidt_analytic.hpp"
#include "quadent/schmidt_numeric.hpp"
#include "quadent/states.hpp"

using namespace quadent;

namespace {

namespace fs = std::filesystem;

struct Failure {
  std::string detail;
};

using Check = std::function<void(std::ostringstream&)>;

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

double pipeline_K(const TwoModeState& state) {
  return schmidt_K(analytic_spectrum(state)).K;
}

struct ExampleState {
  std::string name;
  TwoModeState state;
};

std::vector<ExampleState> example_states() {
  const double third = 1.0 / std::sqrt(3.0);
  std::vector<ExampleState> states;
  states.push_back({"single_photon(0)", make_single_photon(0.0)});
  states.push_back({"single_photon(pi/6)", make_single_photon(M_PI / 6)});
  states.push_back({"single_photon(pi/4)", make_single_photon(M_PI / 4)});
  states.push_back({"qutrit_equal", make_qutrit(third, third, third)});
  states.push_back({"qutrit_1H1V", make_qutrit(0.0, 1.0, 0.0)});
  states.push_back({"product_vacuum", make_product({1.0}, {1.0})});
  states.push_back({"product_1H1V", make_product({0.0, 1.0}, {0.0, 1.0})});
  states.push_back(
      {"squeezed(0.5)", make_squeezed_vacuum(0.5, 0.0, 1e-12, 4096)});
  states.push_back(
      {"squeezed(1.0)", make_squeezed_vacuum(1.0, 0.0, 1e-12, 4096)});
  return states;
}

GridSpec grid_for(const TwoModeState& state) {
  const int n_max =
      std::max(state.max_oscillator_index(0), state.max_oscillator_index(1));
  return make_grid(GridKind::GaussHermite, 2 * n_max + 16, std::nullopt, n_max);
}

// ---------------------------------------------------------------------------

void criterion_1_single_photon_curve(std::ostringstream& note) {
  double max_k = 0.0, min_k = 10.0;
  for (int i = 0; i <= 100; ++i) {
    const double alpha = M_PI * i / 100.0;
    const double k = pipeline_K(make_single_photon(alpha));
    require(std::abs(k - k_single_photon(alpha)) < 1e-12,
            "pipeline != closed form at alpha=" + std::to_string(alpha));
    max_k = std::max(max_k, k);
    min_k = std::min(min_k, k);
  }
  require(std::abs(pipeline_K(make_single_photon(M_PI / 4)) - 2.0) < 1e-12,
          "K(pi/4) != 2");
  require(std::abs(pipeline_K(make_single_photon(0.0)) - 1.0) < 1e-12,
          "K(0) != 1");
  require(std::abs(pipeline_K(make_single_photon(M_PI / 2)) - 1.0) < 1e-12,
          "K(pi/2) != 1");
  require(std::abs(max_k - 2.0) < 1e-12 && std::abs(min_k - 1.0) < 1e-12,
          "lattice extrema are not 2 and 1");
  note << "101 points, max " << max_k << " at pi/4, min " << min_k;
}

void criterion_2_qutrit_values(std::ostringstream& note) {
  const double third = 1.0 / std::sqrt(3.0);
  const double k_quadr = pipeline_K(make_qutrit(third, third, third));
  const double k_pol = k_qutrit_polarization(third, third, third);
  require(std::abs(k_quadr - 3.0) < 1e-12, "equal qutrit K_quadr != 3");
  require(std::abs(k_pol - 18.0 / 17.0) < 1e-12, "equal qutrit K_pol != 18/17");
  const double k_quadr_11 = pipeline_K(make_qutrit(0.0, 1.0, 0.0));
  const double k_pol_11 = k_qutrit_polarization(0.0, 1.0, 0.0);
  require(std::abs(k_quadr_11 - 1.0) < 1e-12, "|1,1> K_quadr != 1");
  require(std::abs(k_pol_11 - 2.0) < 1e-12, "|1,1> K_pol != 2");
  note << "K_quadr=3, K_pol=18/17; |1,1>: K_quadr=1, K_pol=2";
}

void criterion_3_squeezed_vacuum(std::ostringstream& note) {
  for (double r : {0.25, 0.5, 1.0, 2.0}) {
    const TwoModeState sq = make_squeezed_vacuum(r, 0.0, 1e-12, 4096);
    const double k = pipeline_K(sq);
    const double closed = std::cosh(2.0 * r);
    const double n_tot = total_photon_number(sq);
    const double n_closed = 2.0 * std::sinh(r) * std::sinh(r);
    require(std::abs(k - closed) < 1e-8 * closed,
            "K(r=" + std::to_string(r) + ") off cosh 2r");
    require(std::abs(n_tot - n_closed) < 1e-8 * n_closed,
            "N_tot(r=" + std::to_string(r) + ") off 2 sinh^2 r");
    require(std::abs(n_tot - (k - 1.0)) < 1e-8 * std::max(1.0, k - 1.0),
            "N_tot != K - 1 at r=" + std::to_string(r));
  }
  const TwoModeState sq3 = make_squeezed_vacuum(3.0, 0.0, 1e-12, 4096);
  const double asymptote = std::exp(6.0) / 2.0;
  const double k3 = pipeline_K(sq3);
  const double n3 = total_photon_number(sq3);
  require(std::abs(k3 - asymptote) < 0.01 * asymptote,
          "K(3) misses e^{2r}/2 by more than 1%");
  require(std::abs(n3 - asymptote) < 0.01 * asymptote,
          "N_tot(3) misses e^{2r}/2 by more than 1%");
  note << "r in {0.25,0.5,1,2} at 1e-8 rel; r=3 within 1% of e^6/2";
}

void criterion_4_k_max_bound(std::ostringstream& note) {
  std::mt19937 gen(20260809);
  std::uniform_int_distribution<int> total_dist(0, 12);
  std::normal_distribution<double> coeff(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int trial = 0; trial < 1000; ++trial) {
    const int total = total_dist(gen);
    CoeffVector coeffs(static_cast<size_t>(total) + 1);
    double sum = 0.0;
    for (Complex& c : coeffs) {
      c = Complex(coeff(gen), coeff(gen));
      sum += std::norm(c);
    }
    for (Complex& c : coeffs) c /= std::sqrt(sum);
    const double k = pipeline_K(make_stationary(std::move(coeffs)));
    require(k >= 1.0 - 1e-12 && k <= total + 1.0 + 1e-12,
            "K outside [1, N+1] at trial " + std::to_string(trial));
  }
  for (int total = 0; total <= 12; ++total) {
    CoeffVector uniform(static_cast<size_t>(total) + 1);
    for (Complex& c : uniform)
      c = std::polar(1.0 / std::sqrt(total + 1.0), angle(gen));
    const double k = pipeline_K(make_stationary(std::move(uniform)));
    require(std::abs(k - (total + 1.0)) < 1e-12,
            "uniform coefficients missed K = N+1 at N=" + std::to_string(total));
  }
  note << "1000 random states bounded; uniform states reach N+1 exactly";
}

void criterion_5_numeric_equivalence(std::ostringstream& note) {
  double worst_dk = 0.0, worst_fidelity = 1.0;
  for (const ExampleState& example : example_states()) {
    const GridSpec grid = grid_for(example.state);
    const WaveFunctionSample sample =
        sample_wavefunction(example.state, grid, grid);
    const DiscretizedSchmidtModes modes = numeric_schmidt(sample);
    const double k_num = k_numeric(modes).K;
    const SchmidtSpectrum analytic = analytic_spectrum(example.state);
    const double k_ana = schmidt_K(analytic).K;
    require(std::abs(k_num - k_ana) < 1e-6,
            example.name + ": |K_numeric - K_analytic| >= 1e-6");
    worst_dk = std::max(worst_dk, std::abs(k_num - k_ana));

    if (!(example.state.is_stationary() || example.state.is_diagonal()))
      continue;
    const Eigen::MatrixXd psi = eval_psi_batch(
        std::max(example.state.max_oscillator_index(0),
                 example.state.max_oscillator_index(1)),
        grid);
    const int total = example.state.is_stationary()
                          ? example.state.stationary().total_photons
                          : 0;
    const size_t ranks =
        std::min(analytic.lambdas.size(), modes.lambdas.size());
    for (size_t k = 0; k < ranks; ++k) {
      if (analytic.lambdas[k] < 1e-8) break;
      const double gap_up =
          k == 0 ? 1.0 : analytic.lambdas[k - 1] - analytic.lambdas[k];
      const double gap_down = k + 1 < analytic.lambdas.size()
                                  ? analytic.lambdas[k] - analytic.lambdas[k + 1]
                                  : 1.0;
      if (gap_up <= 1e-8 || gap_down <= 1e-8) continue;  // degenerate block
      const int n = analytic.mode_pairing[k];
      const int n_y = example.state.is_stationary() ? total - n : n;
      Complex ox(0.0, 0.0), oy(0.0, 0.0);
      for (int i = 0; i < grid.node_count(); ++i) {
        ox += grid.weights[static_cast<size_t>(i)] *
              std::conj(modes.modes_x(i, static_cast<Eigen::Index>(k))) *
              psi(n, i);
        oy += grid.weights[static_cast<size_t>(i)] *
              std::conj(modes.modes_y(i, static_cast<Eigen::Index>(k))) *
              psi(n_y, i);
      }
      require(std::abs(ox) > 1.0 - 1e-6 && std::abs(oy) > 1.0 - 1e-6,
              example.name + ": mode " + std::to_string(k) +
                  " fidelity below 1 - 1e-6");
      worst_fidelity =
          std::min({worst_fidelity, std::abs(ox), std::abs(oy)});
    }
  }
  note << "max |dK| = " << worst_dk << ", min fidelity = " << worst_fidelity;
}

void criterion_6_orthonormality(std::ostringstream& note) {
  const GridSpec grid =
      make_grid(GridKind::GaussHermite, 110, std::nullopt, 50);
  const Eigen::MatrixXd table = eval_psi_batch(50, grid);
  const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(
      grid.weights.data(), grid.node_count());
  const Eigen::MatrixXd gram = table * w.asDiagonal() * table.transpose();
  const double deviation =
      (gram - Eigen::MatrixXd::Identity(51, 51)).cwiseAbs().maxCoeff();
  require(deviation < 1e-10, "Gram deviation " + std::to_string(deviation));
  note << "max |Gram - I| = " << deviation;
}

void criterion_7_rotation(std::ostringstream& note) {
  for (int i = 0; i < 16; ++i) {
    const double alpha = M_PI * i / 16.0;
    for (int j = 0; j < 16; ++j) {
      const double beta = M_PI * j / 16.0;
      const double k =
          pipeline_K(rotate_basis(make_single_photon(alpha), beta));
      require(std::abs(k - k_single_photon(alpha - beta)) < 1e-12,
              "K mismatch at alpha=" + std::to_string(alpha) +
                  ", beta=" + std::to_string(beta));
    }
  }
  for (int j = 0; j < 16; ++j) {
    const double beta = M_PI * j / 16.0;
    const double at_max =
        pipeline_K(rotate_basis(make_single_photon(beta + M_PI / 4), beta));
    const double at_min_1 =
        pipeline_K(rotate_basis(make_single_photon(beta), beta));
    const double at_min_2 =
        pipeline_K(rotate_basis(make_single_photon(beta + M_PI / 2), beta));
    require(std::abs(at_max - 2.0) < 1e-12, "maximum not at alpha = beta+pi/4");
    require(std::abs(at_min_1 - 1.0) < 1e-12, "minimum not at alpha = beta");
    require(std::abs(at_min_2 - 1.0) < 1e-12,
            "minimum not at alpha = beta+pi/2");
  }
  note << "16x16 lattice matches K(alpha - beta); extrema at beta+pi/4, "
          "beta, beta+pi/2";
}

void criterion_8_reconstruction(std::ostringstream& note) {
  double worst = 0.0;
  for (const ExampleState& example : example_states()) {
    const GridSpec grid = grid_for(example.state);
    const WaveFunctionSample sample =
        sample_wavefunction(example.state, grid, grid);
    const DiscretizedSchmidtModes modes = numeric_schmidt(sample);
    const double err = l2_distance(reconstruct(modes, grid, grid), sample);
    require(err < 1e-8, example.name + ": reconstruction error " +
                            std::to_string(err));
    worst = std::max(worst, err);
  }
  const GridSpec grid = make_grid(GridKind::GaussHermite, 48, std::nullopt, 1);
  const WaveFunctionSample balanced =
      sample_wavefunction(make_single_photon(M_PI / 4), grid, grid);
  const double rank1_err = l2_distance(
      reconstruct(numeric_schmidt(balanced, 1), grid, grid), balanced);
  require(std::abs(rank1_err - std::sqrt(0.5)) < 1e-8,
          "rank-1 truncation error != sqrt(0.5)");
  note << "complete-rank errors <= " << worst << "; rank-1 error sqrt(0.5)";
}

void criterion_9_cli_contract(std::ostringstream& note) {
  const std::string cli = QUADENT_CLI_PATH;
  const std::string fixtures = QUADENT_FIXTURE_DIR;
  const fs::path tmp = fs::path(QUADENT_TEST_TMPDIR) / "acceptance";
  fs::create_directories(tmp);
  const auto run = [&](const std::string& args, const std::string& out) {
    const std::string command = cli + " " + args + " > " +
                                (tmp / out).string() + " 2> /dev/null";
    return WEXITSTATUS(std::system(command.c_str()));
  };
  const auto slurp = [&](const std::string& name) {
    std::ifstream in(tmp / name, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };

  const std::string spec = fixtures + "/qutrit_max.json";
  require(run("analyze " + spec, "a.json") == 0, "analyze exit != 0");
  require(run("analyze " + spec, "b.json") == 0, "analyze exit != 0");
  const std::string first = slurp("a.json");
  require(!first.empty() && first == slurp("b.json"),
          "repeated analyze runs differ");
  require(run("analyze " + fixtures + "/bad_syntax.json", "e.txt") == 2,
          "parse failure exit != 2");
  require(run("analyze " + fixtures + "/bad_norm.json", "e.txt") == 3,
          "normalization failure exit != 3");
  require(run("analyze " + fixtures + "/squeezed_r1.json --grid 16",
              "e.txt") == 4,
          "numeric failure exit != 4");
  note << "byte-identical reports; exit codes 0/2/3/4 honored";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria{
      {"criterion 1: single-photon curve K = 1/(sin^4 + cos^4)",
       criterion_1_single_photon_curve},
      {"criterion 2: qutrit quadrature and polarization values",
       criterion_2_qutrit_values},
      {"criterion 3: squeezed vacuum cosh 2r, 2 sinh^2 r, N = K - 1",
       criterion_3_squeezed_vacuum},
      {"criterion 4: K bounds and K_max = N + 1", criterion_4_k_max_bound},
      {"criterion 5: numeric/analytic equivalence and mode fidelity",
       criterion_5_numeric_equivalence},
      {"criterion 6: orthonormality of psi_0..psi_50",
       criterion_6_orthonormality},
      {"criterion 7: rotation shifts the single-photon curve",
       criterion_7_rotation},
      {"criterion 8: reconstruction completeness and Eckart-Young",
       criterion_8_reconstruction},
      {"criterion 9: CLI determinism and exit-code contract",
       criterion_9_cli_contract},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    std::ostringstream detail;
    try {
      check(detail);
      std::cout << "PASS  " << name;
      if (!detail.str().empty()) std::cout << "  [" << detail.str() << "]";
      std::cout << "\n";
    } catch (const Failure& failure) {
      ++failures;
      std::cout << "FAIL  " << name << "  [" << failure.detail << "]\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL  " << name << "  [exception: " << e.what() << "]\n";
    }
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
