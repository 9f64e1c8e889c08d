#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace quadent {

enum class GridKind { GaussHermite, Uniform };

/// 1D quadrature rule on the real line.
///
/// Weights are adapted so that  sum_i w_i f(x_i) ~ integral f(x) dx  for
/// integrands of Gaussian-times-polynomial type.  In particular the
/// Gauss-Hermite weights are stored pre-divided by exp(-x^2), so every module
/// integrates plain functions with one convention.
struct GridSpec {
  GridKind kind = GridKind::GaussHermite;
  double extent = 0.0;           // half-width covered by the nodes
  std::vector<double> nodes;     // strictly increasing
  std::vector<double> weights;   // strictly positive, same length as nodes

  int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Oscillator eigenfunction psi_n(x) = (2^n n! sqrt(pi))^{-1/2} e^{-x^2/2} H_n(x),
/// evaluated through the normalized three-term recurrence
///   psi_{k+1} = x sqrt(2/(k+1)) psi_k - sqrt(k/(k+1)) psi_{k-1},
/// seeded with psi_0 = pi^{-1/4} e^{-x^2/2}.  Neither H_n nor n! is ever
/// formed, so the evaluation stays in range for n well beyond 200.
double eval_psi(int n, double x);

/// Row n holds psi_n at all grid nodes, n = 0..n_max.  Each column is produced
/// by the same recurrence as eval_psi, so entries match it bitwise.
Eigen::MatrixXd eval_psi_batch(int n_max, const GridSpec& grid);

/// Build a quadrature grid adequate for states containing oscillator levels
/// up to n_max.
///
/// Uniform grids get extent max(extent_hint, sqrt(2 n_max + 1) + 5): the
/// classically allowed region of psi_{n_max} plus enough tail for the Gaussian
/// decay to pass below 1e-10.  Gauss-Hermite grids ignore the hint; their
/// nodes are the roots of psi_{node_count}.
GridSpec make_grid(GridKind kind, int node_count,
                   std::optional<double> extent_hint = std::nullopt,
                   int n_max = 0);

/// Nodes and adapted weights of the node_count-point Gauss-Hermite rule
/// (weights divided by e^{-x^2} as described on GridSpec).
void gauss_hermite_rule(int node_count, std::vector<double>& nodes,
                        std::vector<double>& weights);

}  // namespace quadent
