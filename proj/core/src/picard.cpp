#include "prymslope/picard.hpp"

#include <algorithm>
#include <stdexcept>

#include "prymslope/characteristic.hpp"
#include "prymslope/theta.hpp"

namespace prym {

namespace {

// Enumerated derivation walks all 4^g characteristics.
constexpr int kMaxEnumeratedGenus = 10;

void require_genus(int g, int min, const char* what) {
  if (g < min) {
    throw std::invalid_argument(std::string(what) + " requires g >= " + std::to_string(min) +
                                ", got " + std::to_string(g));
  }
}

void require_space(const PicardClass& c, Space space, const char* what) {
  if (c.space() != space) {
    throw std::invalid_argument(std::string(what) + " expects a class on " +
                                std::string(to_string(space)) + ", got " +
                                std::string(to_string(c.space())));
  }
}

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

std::string render_coefficient(const Rational& magnitude) {
  if (boost::multiprecision::denominator(magnitude) == 1) {
    return magnitude == 1 ? "" : boost::multiprecision::numerator(magnitude).str();
  }
  return "(" + boost::multiprecision::numerator(magnitude).str() + "/" +
         boost::multiprecision::denominator(magnitude).str() + ")";
}

}  // namespace

std::string_view to_string(Space space) {
  switch (space) {
    case Space::ABar: return "A_bar";
    case Space::MBar: return "M_bar";
    case Space::RBar: return "R_bar";
  }
  return "unknown";
}

Space parse_space(std::string_view text) {
  if (text == "A_bar") return Space::ABar;
  if (text == "M_bar") return Space::MBar;
  if (text == "R_bar") return Space::RBar;
  throw std::invalid_argument("unknown space \"" + std::string(text) + "\"");
}

std::vector<std::string> basis_labels(Space space, int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  switch (space) {
    case Space::ABar: return {"L", "D"};
    case Space::MBar: {
      std::vector<std::string> labels{"lambda1"};
      for (int i = 0; i <= genus / 2; ++i) labels.push_back("delta" + std::to_string(i));
      return labels;
    }
    case Space::RBar: return {"lambda1", "delta0'", "delta0''", "delta0ram", "other"};
  }
  throw std::invalid_argument("unknown space");
}

PicardClass::PicardClass(Space space, int genus, std::vector<Rational> coeffs)
    : space_(space), genus_(genus), coeffs_(std::move(coeffs)) {
  const auto size = basis_labels(space, genus).size();
  if (coeffs_.size() != size) {
    throw std::invalid_argument("class on " + std::string(prym::to_string(space)) + " genus " +
                                std::to_string(genus) + " needs " + std::to_string(size) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  }
  if (space_ == Space::RBar && coeffs_.back() != 0) {
    throw std::invalid_argument("the reserved \"other\" block of R_bar must be zero");
  }
}

PicardClass PicardClass::zero(Space space, int genus) {
  return {space, genus, std::vector<Rational>(basis_labels(space, genus).size())};
}

PicardClass PicardClass::basis(Space space, int genus, std::string_view label) {
  PicardClass out = zero(space, genus);
  out.coeffs_[out.index_of(label)] = 1;
  if (space == Space::RBar && label == "other") {
    throw std::invalid_argument("the reserved \"other\" block of R_bar must be zero");
  }
  return out;
}

std::size_t PicardClass::index_of(std::string_view label) const {
  const auto labels = basis_labels(space_, genus_);
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw std::out_of_range("\"" + std::string(label) + "\" is not a basis label of " +
                            std::string(prym::to_string(space_)) + " genus " + std::to_string(genus_));
  }
  return static_cast<std::size_t>(it - labels.begin());
}

const Rational& PicardClass::operator[](std::string_view label) const {
  return coeffs_[index_of(label)];
}

void PicardClass::require_compatible(const PicardClass& other) const {
  if (space_ != other.space_ || genus_ != other.genus_) {
    throw std::invalid_argument("cannot combine classes on different spaces or genera");
  }
}

PicardClass PicardClass::operator+(const PicardClass& other) const {
  require_compatible(other);
  auto coeffs = coeffs_;
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += other.coeffs_[i];
  return {space_, genus_, std::move(coeffs)};
}

PicardClass PicardClass::operator-(const PicardClass& other) const { return *this + (-other); }

PicardClass PicardClass::operator-() const { return Rational(-1) * *this; }

PicardClass operator*(const Rational& scalar, const PicardClass& c) {
  auto coeffs = c.coeffs_;
  for (auto& x : coeffs) x *= scalar;
  return {c.space_, c.genus_, std::move(coeffs)};
}

std::string PicardClass::to_string() const {
  const auto labels = basis_labels(space_, genus_);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += render_coefficient(c < 0 ? Rational(-c) : c);
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

Json PicardClass::to_json() const {
  const auto labels = basis_labels(space_, genus_);
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) coeffs[labels[i]] = to_fraction(coeffs_[i]);
  return {{"space", prym::to_string(space_)}, {"genus", genus_}, {"coeffs", std::move(coeffs)}};
}

PicardClass PicardClass::from_json(const Json& doc) {
  const Space space = parse_space(doc.at("space").get<std::string>());
  const int genus = doc.at("genus").get<int>();
  PicardClass out = zero(space, genus);
  for (const auto& [label, value] : doc.at("coeffs").items()) {
    out.coeffs_[out.index_of(label)] = parse_rational(value.get<std::string>());
  }
  return PicardClass(out.space_, out.genus_, out.coeffs_);
}

const Rational& SlopeValue::value() const {
  if (!value_) throw std::logic_error("slope is infinite");
  return *value_;
}

std::string SlopeValue::to_string() const {
  return value_ ? to_fraction(*value_) : std::string("infinite");
}

// ---- maps -------------------------------------------------------------------

PicardClass pi_pullback(const PicardClass& c) {
  require_space(c, Space::MBar, "pi_pullback");
  const auto labels = c.labels();
  // Indices from 2 on are delta_i, i >= 1.
  for (std::size_t i = 2; i < labels.size(); ++i) {
    if (c.coeffs()[i] != 0) {
      throw std::domain_error("pi_pullback: nonzero coefficient on " + labels[i] +
                              " is outside the modeled range");
    }
  }
  const Rational& lambda = c["lambda1"];
  const Rational& delta0 = c["delta0"];
  return {Space::RBar, c.genus(), {lambda, delta0, delta0, 2 * delta0, 0}};
}

PicardClass pi_pushforward(const PicardClass& c) {
  require_space(c, Space::RBar, "pi_pushforward");
  const int g = c.genus();
  PicardClass out = PicardClass::zero(Space::MBar, g);
  std::vector<Rational> coeffs = out.coeffs();
  coeffs[0] = (pow2(2 * g) - 1) * c["lambda1"];
  coeffs[1] = (pow2(2 * g - 1) - 2) * c["delta0'"] + c["delta0''"] +
              pow2(2 * g - 2) * c["delta0ram"];
  return {Space::MBar, g, std::move(coeffs)};
}

PicardClass prym_pullback(const PicardClass& c, int g) {
  require_space(c, Space::ABar, "prym_pullback");
  require_genus(g, 6, "prym_pullback");
  if (c.genus() != g - 1) {
    throw std::invalid_argument("prym_pullback maps A_bar of genus g-1 = " +
                                std::to_string(g - 1) + ", got genus " +
                                std::to_string(c.genus()));
  }
  const Rational& a = c["L"];
  const Rational& d = c["D"];
  // p^*L = lambda1 - delta0ram/4, p^*D = delta0'.
  return {Space::RBar, g, {a, d, 0, -a / 4, 0}};
}

PicardClass pi_star_p_star(const PicardClass& c, int g) {
  return pi_pushforward(prym_pullback(c, g));
}

// ---- derivation -------------------------------------------------------------

PicardClass theta_null_class(int g) {
  require_genus(g, 2, "theta_null_class");
  return {Space::ABar, g, {pow2(g - 2) * (pow2(g) + 1), -pow2(2 * g - 5)}};
}

PicardClass counted_theta_null_class(int g) {
  require_genus(g, 2, "counted_theta_null_class");
  if (g > kMaxEnumeratedGenus) {
    throw std::length_error("counted_theta_null_class: genus too large to enumerate");
  }
  const auto even = even_characteristics(g);
  const auto cusp = standard_eta(g);
  const auto at_cusp = std::count_if(even.begin(), even.end(),
                                     [&](const Characteristic& m) { return vanishes_at_cusp(m, cusp) == 1; });
  // Each even theta constant has weight 1/2 and vanishes to order pair/8.
  return {Space::ABar, g,
          {Rational(static_cast<long long>(even.size()), 2),
           -Rational(static_cast<long long>(at_cusp), 8)}};
}

PullbackCounts pullback_counts(int g, CountSource source) {
  require_genus(g, 6, "derive_prym_pullback");
  if (source == CountSource::ClosedForm) {
    return {g,
            pow2(g - 1) * (pow2(g - 1) + 1),
            pow2(g - 4) * (pow2(g - 1) + 1),
            pow2(2 * g - 6),
            Rational(0),
            theta_null_class(g - 1)};
  }
  if (g > kMaxEnumeratedGenus) {
    throw std::length_error("derive_prym_pullback: genus too large to enumerate");
  }
  // eta is the standard two-torsion point; the three boundary classes are
  // represented by mu with pair(mu, eta) = 1, pair(mu, eta) = 0 and mu = eta.
  const Characteristic eta = standard_eta(g);
  const Characteristic mu_ramified(g, 1u << (g - 1), 0);
  const Characteristic mu_unramified(g, 0, 1u << (g - 2));
  const auto perp = perp_even_set(eta);
  return {g,
          Rational(static_cast<long long>(perp.size())),
          product_vanishing_order(eta, mu_ramified),
          product_vanishing_order(eta, mu_unramified),
          product_vanishing_order(eta, eta),
          counted_theta_null_class(g - 1)};
}

PullbackCoefficients derive_prym_pullback(int g, CountSource source) {
  const PullbackCounts counts = pullback_counts(g, source);
  // The product over eta^perp_even equals the pullback of twice the
  // theta-null divisor: weight on lambda1, vanishing orders on the boundary.
  const Rational weight = counts.perp_even_size / 2;
  const Rational hodge = 2 * counts.theta_null["L"];
  const Rational boundary = -2 * counts.theta_null["D"];
  if (hodge == 0 || boundary == 0) {
    throw std::logic_error("derive_prym_pullback: degenerate theta-null class");
  }
  if (counts.fixed_order != 0) {
    throw std::logic_error("derive_prym_pullback: nonzero vanishing along delta0'' is "
                           "inconsistent with the ansatz");
  }
  return {weight / hodge, counts.ramified_order / hodge, counts.unramified_order / boundary};
}

// ---- named classes ----------------------------------------------------------

PicardClass andreotti_mayer_class(int g) {
  require_genus(g, 4, "andreotti_mayer_class");
  const Rational fact_g1(factorial(g + 1));
  const Rational fact_g(factorial(g));
  const Rational a = fact_g1 / 4 + fact_g / 2 - pow2(g - 3) * (pow2(g) + 1);
  const Rational b = fact_g1 / 24 - pow2(2 * g - 6);
  return {Space::ABar, g, {a, -b}};
}

PicardClass modular_form_class(int g, const Rational& weight, const Rational& cusp_order) {
  if (weight < 0 || cusp_order < 0) {
    throw std::invalid_argument("modular_form_class: weight and cusp order must be >= 0");
  }
  return {Space::ABar, g, {weight, -cusp_order}};
}

PicardClass canonical_class_A(int g) {
  require_genus(g, 2, "canonical_class_A");
  return {Space::ABar, g, {Rational(g + 1), Rational(-1)}};
}

// ---- slopes -----------------------------------------------------------------

SlopeValue slope_A(const PicardClass& c) {
  require_space(c, Space::ABar, "slope_A");
  const Rational& a = c["L"];
  const Rational b = -c["D"];
  if (a < 0 || b < 0) {
    throw std::domain_error("slope_A: " + c.to_string() + " is not of the form aL-bD with a,b>=0");
  }
  if (b == 0) return SlopeValue::infinite();
  return SlopeValue::finite(a / b);
}

SlopeValue slope_M(const PicardClass& c) {
  require_space(c, Space::MBar, "slope_M");
  const Rational& a = c.coeffs()[0];
  if (a < 0) throw std::domain_error("slope_M: negative lambda1 coefficient");
  std::optional<Rational> best;
  for (std::size_t i = 1; i < c.coeffs().size(); ++i) {
    const Rational b = -c.coeffs()[i];
    if (b < 0) {
      throw std::domain_error("slope_M: " + c.to_string() + " has a positive boundary coefficient");
    }
    if (b == 0) continue;
    const Rational ratio = a / b;
    if (!best || ratio < *best) best = ratio;
  }
  return best ? SlopeValue::finite(*best) : SlopeValue::infinite();
}

ConsistencyWitness consistency_identity(int g) {
  require_genus(g, 6, "consistency_identity");
  const PicardClass computed = pi_star_p_star(theta_null_class(g - 1), g);
  const Rational scalar = (pow2(g - 1) + 1) * (pow2(g) - 1);
  auto coeffs = PicardClass::zero(Space::MBar, g).coeffs();
  coeffs[0] = pow2(g - 3) * (pow2(g) + 1);
  coeffs[1] = -pow2(2 * g - 6);
  PicardClass cofactor(Space::MBar, g, std::move(coeffs));
  const bool holds = computed == scalar * cofactor;
  return {holds, scalar, std::move(cofactor), computed};
}

Rational slope_lower_bound(int g, const Rational& s_M) {
  require_genus(g, 6, "slope_lower_bound");
  if (s_M < 0) throw std::invalid_argument("slope_lower_bound: s_M must be nonnegative");
  const Rational degree = pow2(2 * g) - 1;
  const Rational hodge_shift = pow2(2 * g - 4);
  const Rational boundary = pow2(2 * g - 1) - 2;
  const Rational denominator = degree - s_M * hodge_shift;
  if (denominator <= 0) {
    throw std::domain_error("slope_lower_bound: s_M = " + to_fraction(s_M) +
                            " >= " + to_fraction(degree / hodge_shift) +
                            ", the bound carries no information");
  }
  return s_M * boundary / denominator;
}

}  // namespace prym
