#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "quadent/errors.hpp"

namespace quadent {

using Complex = std::complex<double>;
using CoeffVector = std::vector<Complex>;

/// What to do when a coefficient set misses unit normalization by more than
/// the accepted residual (1e-9 on the squared-magnitude sum).
enum class Normalize { Reject, Apply };

/// Factorized two-mode state: wave function is a product of one function of x
/// and one of y, with mode expansions A_n over psi_n(x) and B_n over psi_n(y).
struct ProductState {
  CoeffVector a_coeffs;
  CoeffVector b_coeffs;
};

/// Fixed total photon number N: Psi(x,y) = sum_n C_n psi_n(x) psi_{N-n}(y),
/// n = 0..N.  c_coeffs has exactly N+1 entries; index n counts photons in the
/// x (H) mode.
struct StationaryState {
  int total_photons = 0;
  CoeffVector c_coeffs;
};

/// Equal photon numbers per term: Psi(x,y) = sum_n C_n psi_n(x) psi_n(y).
struct DiagonalState {
  CoeffVector c_coeffs;
};

/// Two-mode state in quadrature variables, one of the three families above,
/// plus the scalar phase parameter theta = w t - k r that enters the
/// e^{i n theta} factors of the sampled wave function.  Immutable after
/// construction.
class TwoModeState {
 public:
  using Family = std::variant<ProductState, StationaryState, DiagonalState>;

  TwoModeState(Family family, double phase_theta)
      : family_(std::move(family)), phase_theta_(phase_theta) {}

  const Family& family() const { return family_; }
  double phase_theta() const { return phase_theta_; }

  bool is_product() const;
  bool is_stationary() const;
  bool is_diagonal() const;

  const ProductState& product() const;        // throws if wrong family
  const StationaryState& stationary() const;  // throws if wrong family
  const DiagonalState& diagonal() const;      // throws if wrong family

  /// Largest oscillator index whose eigenfunction appears along the given
  /// axis (0 = x, 1 = y).
  int max_oscillator_index(int axis) const;

 private:
  Family family_;
  double phase_theta_;
};

TwoModeState make_product(CoeffVector a_coeffs, CoeffVector b_coeffs,
                          double theta = 0.0,
                          Normalize normalize = Normalize::Reject);

/// Generic fixed-N state; N is the coefficient count minus one.
TwoModeState make_stationary(CoeffVector c_coeffs, double theta = 0.0,
                             Normalize normalize = Normalize::Reject);

TwoModeState make_diagonal(CoeffVector c_coeffs, double theta = 0.0,
                           Normalize normalize = Normalize::Reject);

/// One photon shared between the modes: C_0 = cos(alpha) on psi_0(x)psi_1(y),
/// C_1 = sin(alpha) on psi_1(x)psi_0(y).
TwoModeState make_single_photon(double alpha, double theta = 0.0);

/// Biphoton qutrit spanned by {|2,0>, |1,1>, |0,2>}; c1, c2, c3 are the
/// amplitudes in that order (c1 on the two-photons-in-x term).
TwoModeState make_qutrit(Complex c1, Complex c2, Complex c3, double theta = 0.0,
                         Normalize normalize = Normalize::Reject);

/// Two-mode squeezed vacuum with C_n = (-e^{2i phi} tanh r)^n / cosh r,
/// truncated at the smallest N with discarded tail mass
/// (tanh r)^{2(N+1)} < tail_epsilon and renormalized.  Throws NumericError if
/// the bound is not achievable with N <= n_cap, reporting the achievable tail.
TwoModeState make_squeezed_vacuum(double r, double phi,
                                  double tail_epsilon = 1e-12,
                                  int n_cap = 4096, double theta = 0.0);

/// Fixed-N projection of a product state: C_n = A_n B_{N-n}, renormalized.
/// Throws NormalizationError when every projected coefficient vanishes.
TwoModeState stationary_from_product(const CoeffVector& a_coeffs,
                                     const CoeffVector& b_coeffs,
                                     int total_photons, double theta = 0.0);

/// Re-express a fixed-N state in the mode pair rotated by beta in the
/// polarization plane.  Chosen so that a single photon state with parameter
/// alpha maps to the one with parameter alpha - beta; rotations compose
/// additively and beta = 0 is the identity.
TwoModeState rotate_basis(const TwoModeState& state, double beta);

/// Mean total photon number: sum over terms of (photons in term) x |coeff|^2.
double total_photon_number(const TwoModeState& state);

}  // namespace quadent
