#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prymslope/json.hpp"

#include "prymslope/rational.hpp"

namespace prym {

/// The three compactified moduli spaces whose rational Picard groups we use:
/// perfect-cone A_g, Deligne-Mumford M_g and Prym curves R_g.
enum class Space { ABar, MBar, RBar };

std::string_view to_string(Space space);
Space parse_space(std::string_view text);

/// Basis labels, in coefficient order.
///   A_bar: L, D
///   M_bar: lambda1, delta0, delta1, ..., delta{g/2}
///   R_bar: lambda1, delta0', delta0'', delta0ram, other
/// "other" stands for the preimages of delta_i (i >= 1) in R_bar and must be 0.
std::vector<std::string> basis_labels(Space space, int genus);

/// An exact rational divisor class. Immutable value type; boundary classes
/// are stored with sign, so aL - bD stores -b on D.
class PicardClass {
 public:
  PicardClass(Space space, int genus, std::vector<Rational> coeffs);

  static PicardClass zero(Space space, int genus);
  static PicardClass basis(Space space, int genus, std::string_view label);

  Space space() const noexcept { return space_; }
  int genus() const noexcept { return genus_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  std::vector<std::string> labels() const { return basis_labels(space_, genus_); }

  /// Throws std::out_of_range for labels outside the basis.
  const Rational& operator[](std::string_view label) const;

  PicardClass operator+(const PicardClass& other) const;
  PicardClass operator-(const PicardClass& other) const;
  PicardClass operator-() const;
  friend PicardClass operator*(const Rational& scalar, const PicardClass& c);

  friend bool operator==(const PicardClass&, const PicardClass&) = default;

  /// Compact rendering, e.g. "108L-14D" or "lambda1-(1/4)delta0ram".
  std::string to_string() const;

  Json to_json() const;
  static PicardClass from_json(const Json& doc);

 private:
  std::size_t index_of(std::string_view label) const;
  void require_compatible(const PicardClass& other) const;

  Space space_;
  int genus_;
  std::vector<Rational> coeffs_;
};

/// A slope: an exact rational, or infinite when no boundary coefficient is
/// positive.
class SlopeValue {
 public:
  static SlopeValue finite(Rational value) { return SlopeValue(std::move(value)); }
  static SlopeValue infinite() { return SlopeValue(std::nullopt); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  /// "p/q" or "infinite".
  std::string to_string() const;

  friend bool operator==(const SlopeValue&, const SlopeValue&) = default;

 private:
  explicit SlopeValue(std::optional<Rational> value) : value_(std::move(value)) {}
  std::optional<Rational> value_;
};

// ---- maps between Picard groups ---------------------------------------------

/// pi^*: Pic(M_bar_g) -> Pic(R_bar_g) for the covering R_g -> M_g.
/// Input must be supported on lambda1, delta0.
PicardClass pi_pullback(const PicardClass& c);

/// pi_*: Pic(R_bar_g) -> Pic(M_bar_g).
PicardClass pi_pushforward(const PicardClass& c);

/// p^*: Pic(A_bar_{g-1}) -> Pic(R_bar_g) for the Prym map; g >= 6.
PicardClass prym_pullback(const PicardClass& c, int g);

/// pi_* p^*: Pic(A_bar_{g-1}) -> Pic(M_bar_g); g >= 6.
PicardClass pi_star_p_star(const PicardClass& c, int g);

// ---- the pullback derivation ------------------------------------------------

/// Where derive_prym_pullback takes its counts from: enumeration over
/// characteristics or the closed-form expressions in g.
enum class CountSource { Enumerated, ClosedForm };

/// Inputs of the derivation, reported for inspection.
struct PullbackCounts {
  int genus;
  Rational perp_even_size;     // |eta^perp_even| at genus g
  Rational ramified_order;     // vanishing order along delta0ram (coordinate w)
  Rational unramified_order;   // vanishing order along delta0'
  Rational fixed_order;        // vanishing order along delta0''
  PicardClass theta_null;      // [theta_null] at genus g-1
};

/// Coefficients of p^*L = a lambda1 - b delta0ram, p^*D = c delta0'.
struct PullbackCoefficients {
  Rational a;
  Rational b;
  Rational c;
  friend bool operator==(const PullbackCoefficients&, const PullbackCoefficients&) = default;
};

PullbackCounts pullback_counts(int g, CountSource source = CountSource::Enumerated);

/// Solves the a-priori ansatz for p^* against the pullback of twice the
/// theta-null divisor of genus g-1. Throws std::logic_error if the counts are
/// inconsistent with the ansatz.
PullbackCoefficients derive_prym_pullback(int g, CountSource source = CountSource::Enumerated);

// ---- named classes ----------------------------------------------------------

/// [theta_null] = 2^{g-2}(2^g+1) L - 2^{2g-5} D on A_bar_g; g >= 2.
PicardClass theta_null_class(int g);

/// The same class recomputed from enumeration: half the number of even
/// characteristics for L, one eighth of the even characteristics with
/// pair(m, mu_std) = 1 for D.
PicardClass counted_theta_null_class(int g);

/// Mumford's class of the Andreotti-Mayer divisor N_0'; g >= 4.
PicardClass andreotti_mayer_class(int g);

/// weight L - cusp_order D on A_bar_g.
PicardClass modular_form_class(int g, const Rational& weight, const Rational& cusp_order);

/// (g+1) L - D on A_bar_g.
PicardClass canonical_class_A(int g);

// ---- slopes -----------------------------------------------------------------

SlopeValue slope_A(const PicardClass& c);
SlopeValue slope_M(const PicardClass& c);

struct ConsistencyWitness {
  bool holds;
  Rational scalar;            // (2^{g-1}+1)(2^g-1)
  PicardClass cofactor;       // 2^{g-3}(2^g+1) lambda1 - 2^{2g-6} delta0
  PicardClass computed;       // pi_* p^* [theta_null_{g-1}] via the maps
};

/// pi_* p^* [theta_null] against its factored form on M_bar_g; g >= 6.
ConsistencyWitness consistency_identity(int g);

/// Lower bound on a/b for effective aL - bD on A_bar_{g-1}, given that every
/// effective divisor on M_bar_g has slope >= s_M. Throws std::domain_error when
/// s_M >= (2^{2g}-1)/2^{2g-4}.
Rational slope_lower_bound(int g, const Rational& s_M);

}  // namespace prym
