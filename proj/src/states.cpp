#include "quadent/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace quadent {

namespace {

constexpr double kNormResidual = 1e-9;

double squared_norm(const CoeffVector& coeffs) {
  double sum = 0.0;
  for (const Complex& c : coeffs) sum += std::norm(c);
  return sum;
}

// Validate (or apply) unit normalization of a coefficient array.
void enforce_normalization(CoeffVector& coeffs, Normalize normalize,
                           const char* who) {
  for (const Complex& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument(std::string(who) +
                                  ": non-finite coefficient");
  }
  const double sum = squared_norm(coeffs);
  if (normalize == Normalize::Apply) {
    if (sum <= 0.0)
      throw NormalizationError(std::string(who) +
                               ": cannot normalize a zero coefficient set");
    const double scale = 1.0 / std::sqrt(sum);
    for (Complex& c : coeffs) c *= scale;
    return;
  }
  if (std::abs(sum - 1.0) > kNormResidual) {
    std::ostringstream msg;
    msg << who << ": squared-magnitude sum " << sum
        << " deviates from 1 by more than " << kNormResidual;
    throw NormalizationError(msg.str());
  }
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b *= static_cast<double>(n - k + i) / i;
  return b;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

bool TwoModeState::is_product() const {
  return std::holds_alternative<ProductState>(family_);
}
bool TwoModeState::is_stationary() const {
  return std::holds_alternative<StationaryState>(family_);
}
bool TwoModeState::is_diagonal() const {
  return std::holds_alternative<DiagonalState>(family_);
}

const ProductState& TwoModeState::product() const {
  if (!is_product())
    throw std::invalid_argument("TwoModeState: not a product state");
  return std::get<ProductState>(family_);
}
const StationaryState& TwoModeState::stationary() const {
  if (!is_stationary())
    throw std::invalid_argument("TwoModeState: not a stationary state");
  return std::get<StationaryState>(family_);
}
const DiagonalState& TwoModeState::diagonal() const {
  if (!is_diagonal())
    throw std::invalid_argument("TwoModeState: not a diagonal state");
  return std::get<DiagonalState>(family_);
}

int TwoModeState::max_oscillator_index(int axis) const {
  if (axis != 0 && axis != 1)
    throw std::invalid_argument("max_oscillator_index: axis must be 0 or 1");
  if (is_product()) {
    const ProductState& p = std::get<ProductState>(family_);
    const CoeffVector& coeffs = axis == 0 ? p.a_coeffs : p.b_coeffs;
    return static_cast<int>(coeffs.size()) - 1;
  }
  if (is_stationary()) return std::get<StationaryState>(family_).total_photons;
  return static_cast<int>(std::get<DiagonalState>(family_).c_coeffs.size()) - 1;
}

TwoModeState make_product(CoeffVector a_coeffs, CoeffVector b_coeffs,
                          double theta, Normalize normalize) {
  if (a_coeffs.empty() || b_coeffs.empty())
    throw std::invalid_argument("make_product: empty coefficient array");
  enforce_normalization(a_coeffs, normalize, "make_product(a)");
  enforce_normalization(b_coeffs, normalize, "make_product(b)");
  return TwoModeState(ProductState{std::move(a_coeffs), std::move(b_coeffs)},
                      theta);
}

TwoModeState make_stationary(CoeffVector c_coeffs, double theta,
                             Normalize normalize) {
  if (c_coeffs.empty())
    throw std::invalid_argument("make_stationary: empty coefficient array");
  enforce_normalization(c_coeffs, normalize, "make_stationary");
  const int total = static_cast<int>(c_coeffs.size()) - 1;
  return TwoModeState(StationaryState{total, std::move(c_coeffs)}, theta);
}

TwoModeState make_diagonal(CoeffVector c_coeffs, double theta,
                           Normalize normalize) {
  if (c_coeffs.empty())
    throw std::invalid_argument("make_diagonal: empty coefficient array");
  enforce_normalization(c_coeffs, normalize, "make_diagonal");
  return TwoModeState(DiagonalState{std::move(c_coeffs)}, theta);
}

TwoModeState make_single_photon(double alpha, double theta) {
  CoeffVector coeffs{Complex(std::cos(alpha), 0.0),
                     Complex(std::sin(alpha), 0.0)};
  return TwoModeState(StationaryState{1, std::move(coeffs)}, theta);
}

TwoModeState make_qutrit(Complex c1, Complex c2, Complex c3, double theta,
                         Normalize normalize) {
  // Index n counts photons in the x (H) mode: c1 is the |2,0> amplitude and
  // lands at n = 2, c3 (|0,2>) at n = 0.
  CoeffVector coeffs{c3, c2, c1};
  enforce_normalization(coeffs, normalize, "make_qutrit");
  return TwoModeState(StationaryState{2, std::move(coeffs)}, theta);
}

TwoModeState make_squeezed_vacuum(double r, double phi, double tail_epsilon,
                                  int n_cap, double theta) {
  if (r < 0.0)
    throw std::invalid_argument("make_squeezed_vacuum: r must be >= 0");
  if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0))
    throw std::invalid_argument(
        "make_squeezed_vacuum: tail_epsilon must lie in (0, 1)");
  if (n_cap < 0)
    throw std::invalid_argument("make_squeezed_vacuum: n_cap must be >= 0");

  const double t = std::tanh(r);
  // Discarded lambda mass when keeping n = 0..N is t^{2(N+1)}; find the
  // smallest N that brings it below tail_epsilon.
  int n_max = 0;
  double tail = t * t;
  while (tail >= tail_epsilon) {
    if (n_max + 1 > n_cap) {
      std::ostringstream msg;
      msg << "make_squeezed_vacuum: tail bound " << tail_epsilon
          << " not achievable with n_cap = " << n_cap
          << "; achievable tail mass is " << tail;
      throw NumericError(msg.str());
    }
    ++n_max;
    tail *= t * t;
  }

  // C_n = (-e^{2i phi} tanh r)^n / cosh r, then renormalize the kept part.
  const Complex ratio = -std::polar(t, 2.0 * phi);
  CoeffVector coeffs(static_cast<size_t>(n_max) + 1);
  Complex c = Complex(1.0 / std::cosh(r), 0.0);
  for (int n = 0; n <= n_max; ++n) {
    coeffs[static_cast<size_t>(n)] = c;
    c *= ratio;
  }
  const double scale = 1.0 / std::sqrt(squared_norm(coeffs));
  for (Complex& v : coeffs) v *= scale;
  return TwoModeState(DiagonalState{std::move(coeffs)}, theta);
}

TwoModeState stationary_from_product(const CoeffVector& a_coeffs,
                                     const CoeffVector& b_coeffs,
                                     int total_photons, double theta) {
  if (total_photons < 0)
    throw std::invalid_argument(
        "stationary_from_product: total_photons must be >= 0");
  const size_t needed = static_cast<size_t>(total_photons) + 1;
  if (a_coeffs.size() < needed || b_coeffs.size() < needed)
    throw std::invalid_argument(
        "stationary_from_product: coefficient arrays must cover indices 0..N");

  CoeffVector coeffs(needed);
  for (int n = 0; n <= total_photons; ++n)
    coeffs[static_cast<size_t>(n)] =
        a_coeffs[static_cast<size_t>(n)] *
        b_coeffs[static_cast<size_t>(total_photons - n)];
  const double sum = squared_norm(coeffs);
  if (sum <= 0.0)
    throw NormalizationError(
        "stationary_from_product: all projected coefficients are zero");
  const double scale = 1.0 / std::sqrt(sum);
  for (Complex& v : coeffs) v *= scale;
  return TwoModeState(StationaryState{total_photons, std::move(coeffs)},
                      theta);
}

TwoModeState rotate_basis(const TwoModeState& state, double beta) {
  const StationaryState& st = state.stationary();
  const int total = st.total_photons;
  const double c = std::cos(beta);
  const double s = std::sin(beta);

  // The state is sum_n C_n (aH+)^n (aV+)^{N-n} / sqrt(n!(N-n)!) |0>.  In the
  // rotated pair the old operators read aH+ = c u + s v, aV+ = -s u + c v;
  // expanding and collecting u^m v^{N-m} gives the new amplitudes.  This maps
  // a single photon with parameter alpha to one with alpha - beta.
  CoeffVector rotated(static_cast<size_t>(total) + 1, Complex(0.0, 0.0));
  for (int m = 0; m <= total; ++m) {
    Complex acc(0.0, 0.0);
    for (int n = 0; n <= total; ++n) {
      const int j_lo = std::max(0, m - (total - n));
      const int j_hi = std::min(n, m);
      double inner = 0.0;
      for (int j = j_lo; j <= j_hi; ++j) {
        const double sign = ((m - j) % 2 == 0) ? 1.0 : -1.0;
        inner += sign * binomial(n, j) * binomial(total - n, m - j) *
                 std::pow(c, total - n - m + 2 * j) *
                 std::pow(s, n + m - 2 * j);
      }
      const double weight =
          std::exp(0.5 * (log_factorial(m) + log_factorial(total - m) -
                          log_factorial(n) - log_factorial(total - n)));
      acc += st.c_coeffs[static_cast<size_t>(n)] * (weight * inner);
    }
    rotated[static_cast<size_t>(m)] = acc;
  }

  for (const Complex& v : rotated) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericError("rotate_basis: expansion overflowed");
  }
  return TwoModeState(StationaryState{total, std::move(rotated)},
                      state.phase_theta());
}

double total_photon_number(const TwoModeState& state) {
  if (state.is_stationary())
    return static_cast<double>(state.stationary().total_photons);
  if (state.is_diagonal()) {
    const CoeffVector& coeffs = state.diagonal().c_coeffs;
    double sum = 0.0;
    for (size_t n = 0; n < coeffs.size(); ++n)
      sum += 2.0 * static_cast<double>(n) * std::norm(coeffs[n]);
    return sum;
  }
  const ProductState& p = state.product();
  double sum = 0.0;
  for (size_t n = 0; n < p.a_coeffs.size(); ++n)
    sum += static_cast<double>(n) * std::norm(p.a_coeffs[n]);
  for (size_t n = 0; n < p.b_coeffs.size(); ++n)
    sum += static_cast<double>(n) * std::norm(p.b_coeffs[n]);
  return sum;
}

}  // namespace quadent
