#include "quadent/schmidt_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quadent/errors.hpp"

namespace quadent {

namespace {

SchmidtSpectrum spectrum_from_coeffs(const CoeffVector& coeffs) {
  const int count = static_cast<int>(coeffs.size());
  SchmidtSpectrum spectrum;
  spectrum.lambdas.resize(static_cast<size_t>(count));
  spectrum.mode_pairing.resize(static_cast<size_t>(count));
  std::vector<int> order(static_cast<size_t>(count));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> lambdas(static_cast<size_t>(count));
  for (int n = 0; n < count; ++n)
    lambdas[static_cast<size_t>(n)] = std::norm(coeffs[static_cast<size_t>(n)]);
  // Descending lambda; ties broken by ascending oscillator index.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double la = lambdas[static_cast<size_t>(a)];
    const double lb = lambdas[static_cast<size_t>(b)];
    if (la != lb) return la > lb;
    return a < b;
  });
  for (int i = 0; i < count; ++i) {
    spectrum.lambdas[static_cast<size_t>(i)] =
        lambdas[static_cast<size_t>(order[static_cast<size_t>(i)])];
    spectrum.mode_pairing[static_cast<size_t>(i)] = order[static_cast<size_t>(i)];
  }
  spectrum.source = SpectrumSource::Analytic;
  return spectrum;
}

}  // namespace

SchmidtSpectrum analytic_spectrum(const TwoModeState& state) {
  if (state.is_stationary())
    return spectrum_from_coeffs(state.stationary().c_coeffs);
  if (state.is_diagonal())
    return spectrum_from_coeffs(state.diagonal().c_coeffs);
  // Product states are factorized: a single Schmidt term by inspection.
  SchmidtSpectrum spectrum;
  spectrum.lambdas = {1.0};
  spectrum.mode_pairing = {0};
  spectrum.source = SpectrumSource::Analytic;
  return spectrum;
}

EntanglementReport schmidt_K(const SchmidtSpectrum& spectrum) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double lambda : spectrum.lambdas) {
    if (!(lambda >= 0.0))
      throw std::invalid_argument("schmidt_K: lambdas must be non-negative");
    sum += lambda;
    sum_sq += lambda * lambda;
  }
  if (sum_sq <= 0.0)
    throw std::invalid_argument("schmidt_K: all-zero spectrum");
  EntanglementReport report;
  report.K = 1.0 / sum_sq;
  report.degree = report.K - 1.0;
  report.spectrum = spectrum;
  report.norm_residual = std::abs(sum - 1.0);
  report.source = spectrum.source;
  return report;
}

double k_single_photon(double alpha) {
  const double s2 = std::sin(alpha) * std::sin(alpha);
  const double c2 = std::cos(alpha) * std::cos(alpha);
  return 1.0 / (s2 * s2 + c2 * c2);
}

double k_qutrit_polarization(Complex c1, Complex c2, Complex c3) {
  const double sum =
      std::norm(c1) + std::norm(c2) + std::norm(c3);
  if (std::abs(sum - 1.0) > 1e-9)
    throw NormalizationError(
        "k_qutrit_polarization: amplitudes must be unit-normalized");
  const Complex d = 2.0 * c1 * c3 - c2 * c2;
  return 2.0 / (2.0 - std::norm(d));
}

double k_squeezed_closed_form(double r) {
  if (r < 0.0)
    throw std::invalid_argument("k_squeezed_closed_form: r must be >= 0");
  return std::cosh(2.0 * r);
}

}  // namespace quadent
