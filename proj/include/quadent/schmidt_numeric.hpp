#pragma once

#include <Eigen/Dense>
#include <limits>

#include "quadent/hermite.hpp"
#include "quadent/schmidt_analytic.hpp"
#include "quadent/states.hpp"

namespace quadent {

/// Psi(x_i, y_j) tabulated on a pair of quadrature grids.
struct WaveFunctionSample {
  GridSpec grid_x;
  GridSpec grid_y;
  Eigen::MatrixXcd values;  // node_count_x rows, node_count_y columns
};

/// Discretized Schmidt modes phi_n(x), chi_n(y) and their weights lambda_n
/// (descending).  Columns of modes_x/modes_y are orthonormal under the
/// weighted dot product sum_i w_i f(x_i) g*(x_i).
struct DiscretizedSchmidtModes {
  GridSpec grid_x;
  GridSpec grid_y;
  std::vector<double> lambdas;
  Eigen::MatrixXcd modes_x;  // column n = phi_n at grid_x nodes
  Eigen::MatrixXcd modes_y;  // column n = chi_n at grid_y nodes
};

/// Tabulate the state's wave function, phase factors included (e^{iN theta}
/// for stationary states, e^{2in theta} per term for diagonal ones).
///
/// Throws NumericError when a grid does not reach the classical turning point
/// sqrt(2n+1) of the highest oscillator level present; the message names the
/// required extent.
WaveFunctionSample sample_wavefunction(const TwoModeState& state,
                                       const GridSpec& grid_x,
                                       const GridSpec& grid_y);

/// Solve the Schmidt integral equations on the grid: form the weighted kernel
/// M_ij = sqrt(w_i w_j) Psi(x_i, y_j), take its SVD, and map singular vectors
/// back to mode profiles (phi_n(x_i) = U_in / sqrt(w_i), chi_n(y_j) =
/// conj(V_jn) / sqrt(w_j)).  lambda_n = sigma_n^2, keeping at most rank_cut
/// values and discarding sigma <= sqrt(lambda_floor) as numerical noise.  Each
/// mode's phase is fixed by making its largest-magnitude component real
/// positive.
DiscretizedSchmidtModes numeric_schmidt(
    const WaveFunctionSample& sample,
    int rank_cut = std::numeric_limits<int>::max(),
    double lambda_floor = 1e-14);

/// Psi_hat(x_i, y_j) = sum_n sqrt(lambda_n) phi_n(x_i) chi_n(y_j) on the same
/// grids.  Throws on a grid mismatch.
WaveFunctionSample reconstruct(const DiscretizedSchmidtModes& modes,
                               const GridSpec& grid_x, const GridSpec& grid_y);

/// K from the discretized spectrum; lambdas are renormalized to unit sum
/// first, with the pre-normalization residual recorded in the report.
EntanglementReport k_numeric(const DiscretizedSchmidtModes& modes);

/// Quadrature estimate of the squared L2 norm, sum_ij w_i w_j |Psi_ij|^2.
double sample_squared_norm(const WaveFunctionSample& sample);

/// L2 distance between two samples on identical grids.
double l2_distance(const WaveFunctionSample& a, const WaveFunctionSample& b);

}  // namespace quadent
