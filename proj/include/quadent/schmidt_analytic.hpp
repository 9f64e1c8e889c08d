#pragma once

#include <vector>

#include "quadent/states.hpp"

namespace quadent {

enum class SpectrumSource { Analytic, Numeric };

/// Schmidt coefficients lambda_n, sorted descending (ties broken by ascending
/// oscillator index).  mode_pairing[i] names the oscillator index n of the
/// i-th lambda: the mode pair is (psi_n(x), psi_{N-n}(y)) for stationary
/// states and (psi_n(x), psi_n(y)) for diagonal ones.  Numeric spectra use the
/// singular-value rank as the pairing entry.
struct SchmidtSpectrum {
  std::vector<double> lambdas;
  std::vector<int> mode_pairing;
  SpectrumSource source = SpectrumSource::Analytic;
};

/// K = 1 / sum lambda_n^2, the effective number of Schmidt modes.  K = 1 for a
/// disentangled state; K - 1 is the degree of entanglement.
struct EntanglementReport {
  double K = 1.0;
  double degree = 0.0;  // K - 1
  SchmidtSpectrum spectrum;
  double norm_residual = 0.0;  // |sum lambda - 1| before any renormalization
  SpectrumSource source = SpectrumSource::Analytic;
};

/// Schmidt spectrum read directly off the coefficients: lambda_n = |C_n|^2 for
/// the stationary and diagonal families (their expansions are already Schmidt
/// decompositions), a single lambda = 1 for product states (factorized, rank
/// one by inspection).
SchmidtSpectrum analytic_spectrum(const TwoModeState& state);

/// Entanglement parameter of a spectrum.  Throws on an all-zero spectrum.
EntanglementReport schmidt_K(const SchmidtSpectrum& spectrum);

/// Closed form K(alpha) = 1 / (sin^4 alpha + cos^4 alpha) for the
/// single-photon family; oracle for the coefficient pipeline.
double k_single_photon(double alpha);

/// Polarization-variable Schmidt parameter of the qutrit,
/// K = 2 / (2 - |2 c1 c3 - c2^2|^2).  For equal amplitudes this is 18/17,
/// i.e. a degree of entanglement of 1/17.
double k_qutrit_polarization(Complex c1, Complex c2, Complex c3);

/// Closed form K = cosh(2r) for the two-mode squeezed vacuum; oracle for the
/// truncated-state pipeline.  Approaches e^{2r}/2 for large r.
double k_squeezed_closed_form(double r);

}  // namespace quadent
