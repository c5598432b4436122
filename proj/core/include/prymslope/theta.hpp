#pragma once

#include <complex>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include "prymslope/json.hpp"

#include "prymslope/characteristic.hpp"
#include "prymslope/rational.hpp"

namespace prym {

using Complex = std::complex<double>;

/// A point of the Siegel upper half-space: complex symmetric with positive
/// definite imaginary part. Validated on construction.
class PeriodMatrix {
 public:
  explicit PeriodMatrix(Eigen::MatrixXcd entries);

  static PeriodMatrix from_json(const Json& doc);
  Json to_json() const;

  int genus() const noexcept { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  /// Smallest eigenvalue of Im(tau); drives the truncation certificate.
  double min_imag_eigenvalue() const noexcept { return min_imag_eigenvalue_; }

 private:
  Eigen::MatrixXcd entries_;
  double min_imag_eigenvalue_;
};

/// Random period matrix with Im(tau) = A^T A / g + 0.5 I and Re(tau) entries
/// uniform in [-1/2, 1/2].
PeriodMatrix random_period_matrix(int genus, std::mt19937_64& rng);

/// Lattice points n with every |n_i + eps_i/2| <= radius are summed.
/// radius == 0 selects the smallest radius whose tail certificate is below
/// tail_tol.
struct TruncationBound {
  int radius = 0;
  double tail_tol = 1e-12;
};

inline constexpr double kDefaultTailTol = 1e-12;
/// |theta| below this multiple of tail_tol is reported as identically zero.
inline constexpr double kZeroThresholdFactor = 1e3;

/// Upper bound on the sum of |terms| outside the radius box, from
///   sum_{|v|_inf > R} exp(-pi lambda |v|^2) <= g * out(R) * all^{g-1}.
double tail_bound(const PeriodMatrix& tau, int radius);

/// Resolves tb against tau. Throws std::domain_error if no radius within the
/// lattice-size budget certifies the tail below tb.tail_tol.
TruncationBound certify(const PeriodMatrix& tau, const TruncationBound& tb);

Complex theta_constant(const Characteristic& m, const PeriodMatrix& tau,
                       const TruncationBound& tb = {});

/// tau(t) = [[t, b^T], [b, base]] with t = re_t + i*im_t.
class DegenerationPath {
 public:
  DegenerationPath(PeriodMatrix base, Eigen::VectorXcd b, double re_t = 0.0);

  static DegenerationPath from_json(const Json& doc);

  int genus() const noexcept { return base_.genus() + 1; }
  const PeriodMatrix& base() const noexcept { return base_; }
  const Eigen::VectorXcd& b() const noexcept { return b_; }

  PeriodMatrix at(double im_t) const;
  Complex q(double im_t) const;
  /// Ramified coordinate, w^2 = q.
  Complex w(double im_t) const;

 private:
  PeriodMatrix base_;
  Eigen::VectorXcd b_;
  double re_t_;
};

/// Raised when a characteristic evaluates to zero at every sample.
class IdenticallyZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Order in q = exp(2 pi i t) of theta_m (or of the product over `factors`)
/// along the path: least-squares slope of log|theta| against -2 pi Im(t).
double fit_vanishing_order(std::span<const Characteristic> factors, const DegenerationPath& path,
                           std::span<const double> im_t_samples, const TruncationBound& tb = {});
double fit_vanishing_order(const Characteristic& m, const DegenerationPath& path,
                           std::span<const double> im_t_samples, const TruncationBound& tb = {});

/// pair(m, mu) / 8: the leading Fourier-Jacobi exponent of theta_m at cusp mu.
Rational leading_fj_exponent(const Characteristic& m, const Characteristic& mu);

/// Vanishing order of the product of theta_m over perp_even_set(eta) along the
/// boundary divisor labelled by (eta, mu), measured in the transverse
/// coordinate of the Prym-curve moduli space (w = q^{1/2} when
/// pair(mu, eta) = 1).
Rational product_vanishing_order(const Characteristic& eta, const Characteristic& mu);

}  // namespace prym
