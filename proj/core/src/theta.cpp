#include "prymslope/theta.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace prym {

namespace {

constexpr double kPi = std::numbers::pi;
// Largest lattice box theta_constant will sum.
constexpr double kMaxLatticePoints = 5e7;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

Eigen::MatrixXd matrix_from_json(const Json& rows, int n, const char* field) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument(std::string("period matrix field \"") + field + "\" must have " +
                                std::to_string(n) + " rows");
  }
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument(std::string("period matrix field \"") + field + "\" row " +
                                  std::to_string(i) + " must have " + std::to_string(n) +
                                  " entries");
    }
    for (int j = 0; j < n; ++j) out(i, j) = row[static_cast<std::size_t>(j)].get<double>();
  }
  return out;
}

Eigen::VectorXd vector_from_json(const Json& values, int n, const char* field) {
  if (!values.is_array() || static_cast<int>(values.size()) != n) {
    throw std::invalid_argument(std::string("field \"") + field + "\" must have " +
                                std::to_string(n) + " entries");
  }
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) out(i) = values[static_cast<std::size_t>(i)].get<double>();
  return out;
}

}  // namespace

PeriodMatrix::PeriodMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("period matrix must be square and nonempty");
  }
  if (entries_.rows() > Characteristic::kMaxGenus) {
    throw std::invalid_argument("period matrix genus exceeds " +
                                std::to_string(Characteristic::kMaxGenus));
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < entries_.cols(); ++j) {
      if (entries_(i, j) != entries_(j, i)) {
        throw std::invalid_argument("period matrix is not symmetric");
      }
    }
  }
  const Eigen::MatrixXd imag = entries_.imag();
  Eigen::LLT<Eigen::MatrixXd> llt(imag);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("imaginary part of period matrix is not positive definite");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(imag, Eigen::EigenvaluesOnly);
  min_imag_eigenvalue_ = eigen.eigenvalues().minCoeff();
  if (!(min_imag_eigenvalue_ > 0.0)) {
    throw std::domain_error("imaginary part of period matrix is not positive definite");
  }
}

PeriodMatrix PeriodMatrix::from_json(const Json& doc) {
  const int g = doc.at("genus").get<int>();
  if (g < 1) throw std::invalid_argument("period matrix genus must be positive");
  const Eigen::MatrixXd re = matrix_from_json(doc.at("re"), g, "re");
  const Eigen::MatrixXd im = matrix_from_json(doc.at("im"), g, "im");
  Eigen::MatrixXcd entries(g, g);
  entries.real() = re;
  entries.imag() = im;
  return PeriodMatrix(std::move(entries));
}

Json PeriodMatrix::to_json() const {
  auto re = Json::array();
  auto im = Json::array();
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    auto re_row = Json::array();
    auto im_row = Json::array();
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      re_row.push_back(entries_(i, j).real());
      im_row.push_back(entries_(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"genus", genus()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

PeriodMatrix random_period_matrix(int genus, std::mt19937_64& rng) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Eigen::MatrixXd a(genus, genus);
  Eigen::MatrixXd x(genus, genus);
  for (int i = 0; i < genus; ++i) {
    for (int j = 0; j < genus; ++j) a(i, j) = unit(rng);
  }
  for (int i = 0; i < genus; ++i) {
    for (int j = i; j < genus; ++j) x(i, j) = x(j, i) = 0.5 * unit(rng);
  }
  Eigen::MatrixXd y = a.transpose() * a / genus +
                      0.5 * Eigen::MatrixXd::Identity(genus, genus);
  // Exact symmetry; the product above can differ in the last ulp.
  y = (0.5 * (y + y.transpose())).eval();
  for (int i = 0; i < genus; ++i) {
    for (int j = i + 1; j < genus; ++j) y(j, i) = y(i, j);
  }
  Eigen::MatrixXcd tau(genus, genus);
  tau.real() = x;
  tau.imag() = y;
  return PeriodMatrix(std::move(tau));
}

double tail_bound(const PeriodMatrix& tau, int radius) {
  if (radius < 1) throw std::invalid_argument("truncation radius must be positive");
  const double lambda = tau.min_imag_eigenvalue();
  const double r = radius + 0.5;
  const double outside = 2.0 * std::exp(-kPi * lambda * r * r) /
                         (1.0 - std::exp(-2.0 * kPi * lambda * r));
  const double e = std::exp(-kPi * lambda);
  const double whole_line = 2.0 + 2.0 * e / (1.0 - e);
  const int g = tau.genus();
  return g * outside * std::pow(whole_line, g - 1);
}

TruncationBound certify(const PeriodMatrix& tau, const TruncationBound& tb) {
  if (!(tb.tail_tol > 0.0)) throw std::invalid_argument("tail_tol must be positive");
  const int g = tau.genus();
  if (tb.radius > 0) {
    if (!(tail_bound(tau, tb.radius) < tb.tail_tol)) {
      throw std::domain_error("truncation radius " + std::to_string(tb.radius) +
                              " does not certify tail below tail_tol");
    }
    return tb;
  }
  for (int radius = 1;; ++radius) {
    if (std::pow(2.0 * radius + 1.0, g) > kMaxLatticePoints) break;
    if (tail_bound(tau, radius) < tb.tail_tol) return {radius, tb.tail_tol};
  }
  throw std::domain_error("truncation bound unachievable: tail_tol too small for Im(tau) "
                          "with smallest eigenvalue " +
                          std::to_string(tau.min_imag_eigenvalue()));
}

Complex theta_constant(const Characteristic& m, const PeriodMatrix& tau, const TruncationBound& tb) {
  const int g = tau.genus();
  if (m.genus() != g) {
    throw std::invalid_argument("genus mismatch between characteristic " + m.to_string() +
                                " and period matrix of genus " + std::to_string(g));
  }
  const int radius = certify(tau, tb).radius;

  std::vector<double> eps(static_cast<std::size_t>(g));
  std::vector<double> delta(static_cast<std::size_t>(g));
  std::vector<int> lo(static_cast<std::size_t>(g));
  std::vector<int> hi(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    const auto k = static_cast<std::size_t>(i);
    eps[k] = m.eps_at(i);
    delta[k] = m.delta_at(i);
    lo[k] = -radius;
    hi[k] = m.eps_at(i) ? radius - 1 : radius;
  }

  const Eigen::MatrixXcd& t = tau.entries();
  std::vector<int> n(lo);
  std::vector<double> v(static_cast<std::size_t>(g));
  CompensatedSum re;
  CompensatedSum im;
  while (true) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = n[i] + 0.5 * eps[i];
    Complex quadratic = 0.0;
    double linear = 0.0;
    for (int i = 0; i < g; ++i) {
      const auto ki = static_cast<std::size_t>(i);
      Complex row = 0.0;
      for (int j = 0; j < g; ++j) row += t(i, j) * v[static_cast<std::size_t>(j)];
      quadratic += v[ki] * row;
      linear += v[ki] * delta[ki];
    }
    const Complex term = std::exp(Complex(0.0, kPi) * (quadratic + linear));
    re.add(term.real());
    im.add(term.imag());

    // Lexicographic odometer, last coordinate fastest.
    int pos = g - 1;
    while (pos >= 0) {
      const auto k = static_cast<std::size_t>(pos);
      if (n[k] < hi[k]) {
        ++n[k];
        break;
      }
      n[k] = lo[k];
      --pos;
    }
    if (pos < 0) break;
  }
  return {re.value(), im.value()};
}

DegenerationPath::DegenerationPath(PeriodMatrix base, Eigen::VectorXcd b, double re_t)
    : base_(std::move(base)), b_(std::move(b)), re_t_(re_t) {
  if (b_.size() != base_.genus()) {
    throw std::invalid_argument("degeneration vector b must have length " +
                                std::to_string(base_.genus()));
  }
}

DegenerationPath DegenerationPath::from_json(const Json& doc) {
  PeriodMatrix base = PeriodMatrix::from_json(doc);
  const int n = base.genus();
  const Eigen::VectorXd re = vector_from_json(doc.at("b_re"), n, "b_re");
  const Eigen::VectorXd im = vector_from_json(doc.at("b_im"), n, "b_im");
  Eigen::VectorXcd b(n);
  b.real() = re;
  b.imag() = im;
  const double re_t = doc.value("re_t", 0.0);
  return {std::move(base), std::move(b), re_t};
}

PeriodMatrix DegenerationPath::at(double im_t) const {
  if (!(im_t > 0.0)) throw std::invalid_argument("Im(t) must be positive so that |q| < 1");
  const int g = genus();
  Eigen::MatrixXcd m(g, g);
  m(0, 0) = Complex(re_t_, im_t);
  m.block(1, 0, g - 1, 1) = b_;
  m.block(0, 1, 1, g - 1) = b_.transpose();
  m.block(1, 1, g - 1, g - 1) = base_.entries();
  return PeriodMatrix(std::move(m));
}

Complex DegenerationPath::q(double im_t) const {
  return std::exp(Complex(0.0, 2.0 * kPi) * Complex(re_t_, im_t));
}

Complex DegenerationPath::w(double im_t) const {
  return std::exp(Complex(0.0, kPi) * Complex(re_t_, im_t));
}

double fit_vanishing_order(std::span<const Characteristic> factors, const DegenerationPath& path,
                           std::span<const double> im_t_samples, const TruncationBound& tb) {
  if (path.genus() < 2) throw std::invalid_argument("fit requires genus >= 2");
  if (factors.empty()) throw std::invalid_argument("fit requires at least one characteristic");
  if (im_t_samples.size() < 3) throw std::invalid_argument("fit requires at least 3 samples");
  for (std::size_t i = 1; i < im_t_samples.size(); ++i) {
    if (!(im_t_samples[i] > im_t_samples[i - 1])) {
      throw std::invalid_argument("Im(t) samples must be strictly increasing");
    }
  }
  const double zero_threshold = kZeroThresholdFactor * tb.tail_tol;

  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<std::size_t> zero_hits(factors.size(), 0);
  for (double s : im_t_samples) {
    const PeriodMatrix tau = path.at(s);
    double log_abs = 0.0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const double magnitude = std::abs(theta_constant(factors[k], tau, tb));
      if (magnitude < zero_threshold) {
        ++zero_hits[k];
      } else {
        log_abs += std::log(magnitude);
      }
    }
    xs.push_back(-2.0 * kPi * s);
    ys.push_back(log_abs);
  }
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (zero_hits[k] == im_t_samples.size()) {
      throw IdenticallyZero("theta constant " + factors[k].to_string() +
                            " is numerically zero at every sample");
    }
    if (zero_hits[k] > 0) {
      throw std::domain_error("theta constant " + factors[k].to_string() +
                              " vanishes at some samples only; path is not generic");
    }
  }

  const auto n = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
  }
  return sxy / sxx;
}

double fit_vanishing_order(const Characteristic& m, const DegenerationPath& path,
                           std::span<const double> im_t_samples, const TruncationBound& tb) {
  return fit_vanishing_order(std::span<const Characteristic>(&m, 1), path, im_t_samples, tb);
}

Rational leading_fj_exponent(const Characteristic& m, const Characteristic& mu) {
  if (mu.is_zero()) throw std::invalid_argument("mu must be a nonzero two-torsion point");
  return Rational(vanishes_at_cusp(m, mu), 8);
}

Rational product_vanishing_order(const Characteristic& eta, const Characteristic& mu) {
  const auto count = vanishing_count(eta, mu);
  if (mu == eta) return Rational(0);
  const int ramification = pair(mu, eta) == 1 ? 2 : 1;
  return Rational(ramification) * Rational(count, 8);
}

}  // namespace prym
