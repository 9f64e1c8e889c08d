#include "quadent/schmidt_numeric.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "quadent/errors.hpp"

namespace quadent {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

VectorXd weights_of(const GridSpec& grid) {
  return Eigen::Map<const VectorXd>(grid.weights.data(),
                                    static_cast<Eigen::Index>(grid.weights.size()));
}

double grid_coverage(const GridSpec& grid) {
  return std::max(std::abs(grid.nodes.front()), std::abs(grid.nodes.back()));
}

void require_coverage(const GridSpec& grid, int n_max, const char* axis) {
  const double required = std::sqrt(2.0 * n_max + 1.0);
  if (grid_coverage(grid) < required) {
    std::ostringstream msg;
    msg << "sample_wavefunction: " << axis << " grid reaches |x| = "
        << grid_coverage(grid) << " but oscillator level " << n_max
        << " requires extent >= " << required;
    throw NumericError(msg.str());
  }
}

// Coefficients with the per-term phase factors of the Schroedinger picture.
VectorXcd phased_coeffs(const CoeffVector& coeffs, double theta,
                        double phase_per_index) {
  VectorXcd v(static_cast<Eigen::Index>(coeffs.size()));
  for (Eigen::Index n = 0; n < v.size(); ++n)
    v(n) = coeffs[static_cast<size_t>(n)] *
           std::polar(1.0, phase_per_index * static_cast<double>(n) * theta);
  return v;
}

void check_same_grid(const GridSpec& a, const GridSpec& b, const char* who) {
  if (a.kind != b.kind || a.nodes != b.nodes || a.weights != b.weights)
    throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

}  // namespace

WaveFunctionSample sample_wavefunction(const TwoModeState& state,
                                       const GridSpec& grid_x,
                                       const GridSpec& grid_y) {
  if (grid_x.nodes.empty() || grid_y.nodes.empty())
    throw std::invalid_argument("sample_wavefunction: empty grid");
  require_coverage(grid_x, state.max_oscillator_index(0), "x");
  require_coverage(grid_y, state.max_oscillator_index(1), "y");

  WaveFunctionSample sample;
  sample.grid_x = grid_x;
  sample.grid_y = grid_y;
  const double theta = state.phase_theta();

  if (state.is_product()) {
    const ProductState& p = state.product();
    const MatrixXd psi_x =
        eval_psi_batch(static_cast<int>(p.a_coeffs.size()) - 1, grid_x);
    const MatrixXd psi_y =
        eval_psi_batch(static_cast<int>(p.b_coeffs.size()) - 1, grid_y);
    const VectorXcd fa = psi_x.transpose().cast<Complex>() *
                         phased_coeffs(p.a_coeffs, theta, 1.0);
    const VectorXcd fb = psi_y.transpose().cast<Complex>() *
                         phased_coeffs(p.b_coeffs, theta, 1.0);
    sample.values = fa * fb.transpose();
    return sample;
  }

  if (state.is_stationary()) {
    const StationaryState& st = state.stationary();
    const int total = st.total_photons;
    const MatrixXd psi_x = eval_psi_batch(total, grid_x);
    const MatrixXd psi_y = eval_psi_batch(total, grid_y);
    VectorXcd c(total + 1);
    for (int n = 0; n <= total; ++n)
      c(n) = st.c_coeffs[static_cast<size_t>(n)];
    // Psi = e^{iN theta} sum_n C_n psi_n(x) psi_{N-n}(y): pair row n of the
    // x table with row N-n of the y table.
    const Complex global = std::polar(1.0, total * theta);
    sample.values = global *
                    (psi_x.transpose().cast<Complex>() * c.asDiagonal() *
                     psi_y.colwise().reverse().cast<Complex>());
    return sample;
  }

  const DiagonalState& d = state.diagonal();
  const int n_max = static_cast<int>(d.c_coeffs.size()) - 1;
  const MatrixXd psi_x = eval_psi_batch(n_max, grid_x);
  const MatrixXd psi_y = eval_psi_batch(n_max, grid_y);
  const VectorXcd c = phased_coeffs(d.c_coeffs, theta, 2.0);
  sample.values = psi_x.transpose().cast<Complex>() * c.asDiagonal() *
                  psi_y.cast<Complex>();
  return sample;
}

DiscretizedSchmidtModes numeric_schmidt(const WaveFunctionSample& sample,
                                        int rank_cut, double lambda_floor) {
  if (rank_cut < 1)
    throw std::invalid_argument("numeric_schmidt: rank_cut must be >= 1");
  if (lambda_floor < 0.0)
    throw std::invalid_argument("numeric_schmidt: lambda_floor must be >= 0");
  if (!sample.values.allFinite())
    throw NumericError("numeric_schmidt: sample contains non-finite values");

  const VectorXd wx = weights_of(sample.grid_x);
  const VectorXd wy = weights_of(sample.grid_y);
  const VectorXd sqrt_wx = wx.cwiseSqrt();
  const VectorXd sqrt_wy = wy.cwiseSqrt();

  // Nystrom-style symmetrization: M_ij = sqrt(w_i w_j) Psi_ij turns the
  // integral equations into a plain matrix SVD with orthonormal vectors.
  const MatrixXcd kernel = sqrt_wx.cast<Complex>().asDiagonal() *
                           sample.values *
                           sqrt_wy.cast<Complex>().asDiagonal();
  Eigen::JacobiSVD<MatrixXcd> svd(kernel,
                                  Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw NumericError("numeric_schmidt: singular value decomposition failed");

  const VectorXd sigma = svd.singularValues();
  const double sigma_floor = std::sqrt(lambda_floor);
  int kept = 0;
  while (kept < sigma.size() && sigma(kept) > sigma_floor &&
         kept < rank_cut)
    ++kept;
  if (kept == 0)
    throw NumericError(
        "numeric_schmidt: every singular value is below the floor");

  DiscretizedSchmidtModes modes;
  modes.grid_x = sample.grid_x;
  modes.grid_y = sample.grid_y;
  modes.lambdas.resize(static_cast<size_t>(kept));
  modes.modes_x = svd.matrixU().leftCols(kept);
  modes.modes_y = svd.matrixV().leftCols(kept).conjugate();
  modes.modes_x.array().colwise() /= sqrt_wx.cast<Complex>().array();
  modes.modes_y.array().colwise() /= sqrt_wy.cast<Complex>().array();

  for (int n = 0; n < kept; ++n) {
    modes.lambdas[static_cast<size_t>(n)] = sigma(n) * sigma(n);
    // Deterministic phase: largest-magnitude component of phi_n is made real
    // positive; chi_n absorbs the opposite phase so the product is unchanged.
    Eigen::Index peak = 0;
    modes.modes_x.col(n).cwiseAbs().maxCoeff(&peak);
    const Complex value = modes.modes_x(peak, n);
    if (std::abs(value) > 0.0) {
      const Complex phase = value / std::abs(value);
      modes.modes_x.col(n) *= std::conj(phase);
      modes.modes_y.col(n) *= phase;
    }
  }
  return modes;
}

WaveFunctionSample reconstruct(const DiscretizedSchmidtModes& modes,
                               const GridSpec& grid_x,
                               const GridSpec& grid_y) {
  check_same_grid(modes.grid_x, grid_x, "reconstruct(x)");
  check_same_grid(modes.grid_y, grid_y, "reconstruct(y)");
  VectorXd sqrt_lambda(static_cast<Eigen::Index>(modes.lambdas.size()));
  for (Eigen::Index n = 0; n < sqrt_lambda.size(); ++n)
    sqrt_lambda(n) = std::sqrt(modes.lambdas[static_cast<size_t>(n)]);
  WaveFunctionSample sample;
  sample.grid_x = grid_x;
  sample.grid_y = grid_y;
  sample.values = modes.modes_x * sqrt_lambda.cast<Complex>().asDiagonal() *
                  modes.modes_y.transpose();
  return sample;
}

EntanglementReport k_numeric(const DiscretizedSchmidtModes& modes) {
  if (modes.lambdas.empty())
    throw std::invalid_argument("k_numeric: empty spectrum");
  const double sum =
      std::accumulate(modes.lambdas.begin(), modes.lambdas.end(), 0.0);
  if (sum <= 0.0) throw std::invalid_argument("k_numeric: all-zero spectrum");

  SchmidtSpectrum spectrum;
  spectrum.source = SpectrumSource::Numeric;
  spectrum.lambdas.reserve(modes.lambdas.size());
  spectrum.mode_pairing.reserve(modes.lambdas.size());
  for (size_t n = 0; n < modes.lambdas.size(); ++n) {
    spectrum.lambdas.push_back(modes.lambdas[n] / sum);
    spectrum.mode_pairing.push_back(static_cast<int>(n));
  }
  EntanglementReport report = schmidt_K(spectrum);
  report.norm_residual = std::abs(sum - 1.0);
  return report;
}

double sample_squared_norm(const WaveFunctionSample& sample) {
  const VectorXd wx = weights_of(sample.grid_x);
  const VectorXd wy = weights_of(sample.grid_y);
  return (wx.transpose() * sample.values.cwiseAbs2() * wy).value();
}

double l2_distance(const WaveFunctionSample& a, const WaveFunctionSample& b) {
  check_same_grid(a.grid_x, b.grid_x, "l2_distance(x)");
  check_same_grid(a.grid_y, b.grid_y, "l2_distance(y)");
  const VectorXd wx = weights_of(a.grid_x);
  const VectorXd wy = weights_of(a.grid_y);
  const Eigen::MatrixXd diff2 = (a.values - b.values).cwiseAbs2();
  return std::sqrt((wx.transpose() * diff2 * wy).value());
}

}  // namespace quadent
