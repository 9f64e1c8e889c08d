#include "quadent/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "quadent/errors.hpp"

namespace quadent {

namespace {

constexpr double kPiToMinusQuarter = 0.7511255444649425;  // pi^{-1/4}

// One step of the normalized recurrence; psi_km1 = psi_{k-1}, psi_k = psi_k.
inline double psi_next(int k, double x, double psi_k, double psi_km1) {
  return x * std::sqrt(2.0 / (k + 1)) * psi_k -
         std::sqrt(static_cast<double>(k) / (k + 1)) * psi_km1;
}

}  // namespace

double eval_psi(int n, double x) {
  if (n < 0)
    throw std::invalid_argument("eval_psi: oscillator index must be >= 0");
  if (!std::isfinite(x))
    throw std::invalid_argument("eval_psi: x must be finite");
  double psi_km1 = 0.0;
  double psi_k = kPiToMinusQuarter * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double next = psi_next(k, x, psi_k, psi_km1);
    psi_km1 = psi_k;
    psi_k = next;
  }
  return psi_k;
}

Eigen::MatrixXd eval_psi_batch(int n_max, const GridSpec& grid) {
  if (n_max < 0)
    throw std::invalid_argument("eval_psi_batch: n_max must be >= 0");
  if (grid.nodes.empty() || grid.nodes.size() != grid.weights.size())
    throw std::invalid_argument("eval_psi_batch: malformed grid");
  const int count = grid.node_count();
  Eigen::MatrixXd out(n_max + 1, count);
  for (int j = 0; j < count; ++j) {
    const double x = grid.nodes[static_cast<size_t>(j)];
    // Same operation sequence as eval_psi, so columns match it bitwise.
    double psi_km1 = 0.0;
    double psi_k = kPiToMinusQuarter * std::exp(-0.5 * x * x);
    out(0, j) = psi_k;
    for (int k = 0; k < n_max; ++k) {
      const double next = psi_next(k, x, psi_k, psi_km1);
      psi_km1 = psi_k;
      psi_k = next;
      out(k + 1, j) = psi_k;
    }
  }
  return out;
}

void gauss_hermite_rule(int node_count, std::vector<double>& nodes,
                        std::vector<double>& weights) {
  if (node_count < 1)
    throw std::invalid_argument("gauss_hermite_rule: node_count must be >= 1");
  const int n = node_count;
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);

  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    // Initial guesses for the positive roots of psi_n in descending order.
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) -
          1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * nodes[static_cast<size_t>(n - 1)];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * nodes[static_cast<size_t>(n - 2)];
    } else {
      z = 2.0 * z - nodes[static_cast<size_t>(n - i + 1)];
    }
    // The middle root of an odd-degree function is 0 by parity.
    if (2 * i + 1 == n) z = 0.0;

    // Newton iteration on psi_n; psi_n' = sqrt(2n) psi_{n-1} - x psi_n.
    double psi_nm1 = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100 && !converged; ++iter) {
      double pkm1 = 0.0;
      double pk = kPiToMinusQuarter * std::exp(-0.5 * z * z);
      for (int k = 0; k < n; ++k) {
        const double next = psi_next(k, z, pk, pkm1);
        pkm1 = pk;
        pk = next;
      }
      psi_nm1 = pkm1;
      const double deriv = std::sqrt(2.0 * n) * pkm1 - z * pk;
      const double step = pk / deriv;
      z -= step;
      converged = std::abs(step) <= 1e-14 * (1.0 + std::abs(z));
    }
    if (!converged)
      throw NumericError("gauss_hermite_rule: Newton iteration failed for n=" +
                         std::to_string(n));

    // Adapted weight (Gauss-Hermite weight divided by e^{-x^2}):
    //   w = 2 e^{x^2} / (dH~_n/dx)^2 = 1 / (n psi_{n-1}(x)^2).
    const double w = 1.0 / (n * psi_nm1 * psi_nm1);
    nodes[static_cast<size_t>(n - 1 - i)] = z;
    nodes[static_cast<size_t>(i)] = -z;
    weights[static_cast<size_t>(n - 1 - i)] = w;
    weights[static_cast<size_t>(i)] = w;
  }
}

GridSpec make_grid(GridKind kind, int node_count,
                   std::optional<double> extent_hint, int n_max) {
  if (node_count < 2)
    throw std::invalid_argument("make_grid: node_count must be >= 2");
  if (n_max < 0) throw std::invalid_argument("make_grid: n_max must be >= 0");

  GridSpec grid;
  grid.kind = kind;
  if (kind == GridKind::GaussHermite) {
    gauss_hermite_rule(node_count, grid.nodes, grid.weights);
    grid.extent = grid.nodes.back();
    return grid;
  }

  // Uniform grid: turning point of psi_{n_max} is sqrt(2 n_max + 1); +5
  // covers the evanescent tail below 1e-10.
  const double extent =
      std::max(extent_hint.value_or(0.0), std::sqrt(2.0 * n_max + 1.0) + 5.0);
  const double center = 0.5 * (node_count - 1);
  const double h = extent / center;
  grid.extent = extent;
  grid.nodes.resize(static_cast<size_t>(node_count));
  grid.weights.resize(static_cast<size_t>(node_count));
  for (int i = 0; i < node_count; ++i) {
    // (i - center) is exact, so the node set is exactly symmetric.
    grid.nodes[static_cast<size_t>(i)] = (i - center) * h;
    grid.weights[static_cast<size_t>(i)] =
        (i == 0 || i == node_count - 1) ? 0.5 * h : h;  // trapezoid rule
  }
  return grid;
}

}  // namespace quadent
