#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "prymslope/theta.hpp"

using prym::Characteristic;
using prym::Complex;
using prym::PeriodMatrix;

namespace {

PeriodMatrix diagonal(std::initializer_list<Complex> entries) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(entries.size(), entries.size());
  int i = 0;
  for (const auto& e : entries) {
    m(i, i) = e;
    ++i;
  }
  return PeriodMatrix(m);
}

// Plain double loop over a large box, no truncation logic.
Complex naive_theta2(const Characteristic& m, const Eigen::MatrixXcd& tau, int box) {
  const double pi = std::numbers::pi;
  Complex sum = 0;
  for (int a = -box; a <= box; ++a) {
    for (int b = -box; b <= box; ++b) {
      const double x = a + m.eps_at(0) / 2.0;
      const double y = b + m.eps_at(1) / 2.0;
      const Complex quad = tau(0, 0) * x * x + 2.0 * tau(0, 1) * x * y + tau(1, 1) * y * y;
      const double lin = x * m.delta_at(0) / 2.0 + y * m.delta_at(1) / 2.0;
      sum += std::exp(Complex(0, pi) * quad + Complex(0, 2 * pi * lin));
    }
  }
  return sum;
}

}  // namespace

TEST(PeriodMatrix, Validation) {
  Eigen::MatrixXcd nonsym(2, 2);
  nonsym << Complex(0, 1), Complex(0.1, 0), Complex(0.2, 0), Complex(0, 1);
  EXPECT_THROW(PeriodMatrix{nonsym}, std::invalid_argument);
  Eigen::MatrixXcd indefinite(2, 2);
  indefinite << Complex(0, 1), Complex(0, 2), Complex(0, 2), Complex(0, 1);
  EXPECT_THROW(PeriodMatrix{indefinite}, std::domain_error);
  EXPECT_THROW(PeriodMatrix{Eigen::MatrixXcd(2, 3)}, std::invalid_argument);
}

TEST(PeriodMatrix, JsonRoundTrip) {
  std::mt19937_64 rng(3);
  const auto tau = prym::random_period_matrix(3, rng);
  const auto back = PeriodMatrix::from_json(tau.to_json());
  EXPECT_EQ(back.entries(), tau.entries());
}

TEST(Theta, GenusOneAtI) {
  const auto tau = diagonal({Complex(0, 1)});
  const double theta3 = 1.0864348112133080146;  // pi^{1/4} / Gamma(3/4)
  const double theta2 = theta3 / std::pow(2.0, 0.25);
  EXPECT_NEAR(std::abs(prym::theta_constant(Characteristic::parse("0;0"), tau) - theta3), 0, 1e-14);
  EXPECT_NEAR(std::abs(prym::theta_constant(Characteristic::parse("0;1"), tau) - theta2), 0, 1e-14);
  EXPECT_NEAR(std::abs(prym::theta_constant(Characteristic::parse("1;0"), tau) - theta2), 0, 1e-14);
  EXPECT_LT(std::abs(prym::theta_constant(Characteristic::parse("1;1"), tau)), 1e-15);
}

TEST(Theta, LargeImaginaryPartLeadingTerms) {
  const auto tau = diagonal({Complex(0, 10)});
  const double pi = std::numbers::pi;
  const double expected = 1 + 2 * std::exp(-10 * pi) + 2 * std::exp(-40 * pi);
  EXPECT_NEAR(prym::theta_constant(Characteristic::parse("0;0"), tau).real(), expected, 1e-15);
}

TEST(Theta, DiagonalFactorizes) {
  const auto tau = diagonal({Complex(0.2, 0.9), Complex(-0.3, 1.4)});
  const auto tau1 = diagonal({Complex(0.2, 0.9)});
  const auto tau2 = diagonal({Complex(-0.3, 1.4)});
  for (const auto& m : prym::all_characteristics(2)) {
    const auto a = Characteristic(1, m.eps() >> 1, m.delta() >> 1);
    const auto b = Characteristic(1, m.eps() & 1, m.delta() & 1);
    const Complex product = prym::theta_constant(a, tau1) * prym::theta_constant(b, tau2);
    EXPECT_NEAR(std::abs(prym::theta_constant(m, tau) - product), 0, 1e-12) << m.to_string();
  }
}

TEST(Theta, MatchesNaiveSumAtGenusTwo) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    const auto tau = prym::random_period_matrix(2, rng);
    for (const auto& m : prym::all_characteristics(2)) {
      const Complex expected = naive_theta2(m, tau.entries(), 25);
      EXPECT_NEAR(std::abs(prym::theta_constant(m, tau) - expected), 0, 1e-11) << m.to_string();
    }
  }
}

TEST(Theta, OddCharacteristicsVanish) {
  std::mt19937_64 rng(20110715);
  const prym::TruncationBound tb{0, 1e-12};
  for (int g = 1; g <= 3; ++g) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto tau = prym::random_period_matrix(g, rng);
      for (const auto& m : prym::all_characteristics(g)) {
        if (prym::parity(m) == 0) continue;
        EXPECT_LT(std::abs(prym::theta_constant(m, tau, tb)), 10 * tb.tail_tol) << m.to_string();
      }
    }
  }
}

TEST(Theta, TailBoundDecreasesWithRadius) {
  std::mt19937_64 rng(9);
  const auto tau = prym::random_period_matrix(3, rng);
  double previous = prym::tail_bound(tau, 1);
  for (int r = 2; r < 8; ++r) {
    const double next = prym::tail_bound(tau, r);
    EXPECT_LT(next, previous);
    previous = next;
  }
  const auto resolved = prym::certify(tau, {0, 1e-12});
  EXPECT_GT(resolved.radius, 0);
  EXPECT_LE(prym::tail_bound(tau, resolved.radius), 1e-12);
  EXPECT_GT(prym::tail_bound(tau, resolved.radius - 1), 1e-12);
}

TEST(Theta, FixedRadiusConverges) {
  const auto tau = diagonal({Complex(0.1, 0.8), Complex(0.0, 1.2)});
  const auto m = Characteristic::parse("10;01");
  const Complex reference = prym::theta_constant(m, tau, {0, 1e-14});
  EXPECT_NEAR(std::abs(prym::theta_constant(m, tau, {12, 1e-12}) - reference), 0, 1e-13);
}

TEST(Theta, GenusTwoFitsMatchLeadingExponent) {
  Eigen::MatrixXcd base(1, 1);
  base(0, 0) = Complex(0.31, 1.13);
  Eigen::VectorXcd b(1);
  b(0) = Complex(0.17, 0.05);
  const prym::DegenerationPath path(PeriodMatrix(base), b);
  EXPECT_EQ(path.genus(), 2);
  const std::vector<double> samples{8.0, 10.0, 12.0};
  const auto cusp = prym::standard_eta(2);
  for (const auto& m : prym::all_characteristics(2)) {
    if (prym::parity(m) == 1) {
      EXPECT_THROW(prym::fit_vanishing_order(m, path, samples), prym::IdenticallyZero);
      continue;
    }
    const double exact = static_cast<double>(prym::leading_fj_exponent(m, cusp));
    EXPECT_NEAR(prym::fit_vanishing_order(m, path, samples), exact, 1e-3) << m.to_string();
  }
}

TEST(Theta, ProductFitMatchesCounts) {
  Eigen::MatrixXcd base(2, 2);
  base << Complex(0.1, 1.2), Complex(0.2, 0.3), Complex(0.2, 0.3), Complex(-0.15, 1.05);
  Eigen::VectorXcd b(2);
  b << Complex(0.11, 0.04), Complex(-0.23, 0.07);
  const prym::DegenerationPath path(PeriodMatrix(base), b);
  // The path degenerates towards the standard cusp.
  const auto cusp = prym::standard_eta(3);
  const std::vector<double> samples{6.0, 7.0, 8.0};
  for (const auto& eta : {Characteristic::parse("100;000"), Characteristic::parse("000;010")}) {
    const auto perp = prym::perp_even_set(eta);
    const auto count = prym::vanishing_count(eta, cusp);
    EXPECT_NEAR(prym::fit_vanishing_order(perp, path, samples), count / 8.0, 1e-3)
        << eta.to_string();
    // Ramified boundaries are measured in w = q^{1/2}.
    const prym::Rational factor = prym::pair(cusp, eta) == 1 ? 2 : 1;
    EXPECT_EQ(prym::product_vanishing_order(eta, cusp),
              factor * prym::Rational(static_cast<long long>(count), 8));
  }
}

TEST(Theta, FitPreconditions) {
  Eigen::MatrixXcd base(1, 1);
  base(0, 0) = Complex(0, 1);
  Eigen::VectorXcd b(1);
  b(0) = Complex(0.1, 0);
  const prym::DegenerationPath path(PeriodMatrix(base), b);
  const auto m = Characteristic::parse("00;00");
  const std::vector<double> two{8.0, 9.0};
  const std::vector<double> unsorted{8.0, 7.0, 9.0};
  EXPECT_THROW(prym::fit_vanishing_order(m, path, two), std::invalid_argument);
  EXPECT_THROW(prym::fit_vanishing_order(m, path, unsorted), std::invalid_argument);
  EXPECT_THROW(path.at(0.0), std::invalid_argument);
}

TEST(Theta, DegenerationCoordinates) {
  Eigen::MatrixXcd base(1, 1);
  base(0, 0) = Complex(0, 1);
  Eigen::VectorXcd b(1);
  b(0) = Complex(0.1, 0);
  const prym::DegenerationPath path(PeriodMatrix(base), b, 0.25);
  const Complex w = path.w(3.0);
  EXPECT_NEAR(std::abs(w * w - path.q(3.0)), 0, 1e-15);
  EXPECT_NEAR(std::abs(path.q(3.0)), std::exp(-2 * std::numbers::pi * 3.0), 1e-20);
}

TEST(VanishingOrder, BridgeFromCounts) {
  for (int g = 2; g <= 6; ++g) {
    const auto eta = prym::standard_eta(g);
    for (const auto& mu : {Characteristic(g, 1u << (g - 1), 0), Characteristic(g, 0, 1u << (g - 2)), eta}) {
      const auto count = prym::vanishing_count(eta, mu);
      const prym::Rational factor = prym::pair(mu, eta) == 1 ? 2 : 1;
      EXPECT_EQ(prym::product_vanishing_order(eta, mu),
                factor * prym::Rational(static_cast<long long>(count), 8));
    }
  }
  const auto eta = prym::standard_eta(6);
  EXPECT_EQ(prym::product_vanishing_order(eta, Characteristic::parse("100000;000000")), 132);
  EXPECT_EQ(prym::product_vanishing_order(eta, Characteristic::parse("000000;010000")), 64);
  EXPECT_EQ(prym::product_vanishing_order(eta, eta), 0);
}

TEST(VanishingOrder, LeadingExponent) {
  const auto mu = prym::standard_eta(3);
  EXPECT_EQ(prym::leading_fj_exponent(Characteristic::parse("100;000"), mu), prym::Rational(1, 8));
  EXPECT_EQ(prym::leading_fj_exponent(Characteristic::parse("010;000"), mu), 0);
}
