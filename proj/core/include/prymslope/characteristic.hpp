#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prymslope/json.hpp"

namespace prym {

/// A theta characteristic, equivalently a two-torsion point of a ppav:
/// a pair (eps, delta) of length-g bit vectors over F2.
///
/// Position i of a row (0 = leftmost character of the text form) is stored
/// at bit g-1-i of the word, so unsigned comparison of (eps, delta) matches
/// lexicographic comparison of the text form.
class Characteristic {
 public:
  static constexpr int kMaxGenus = 16;

  Characteristic(int genus, std::uint32_t eps, std::uint32_t delta);

  static Characteristic zero(int genus);
  /// Index in canonical enumeration order: (eps << g) | delta.
  static Characteristic from_index(int genus, std::uint64_t index);
  /// Parses "eps;delta", e.g. "000000;100000".
  static Characteristic parse(std::string_view text);

  int genus() const noexcept { return genus_; }
  std::uint32_t eps() const noexcept { return eps_; }
  std::uint32_t delta() const noexcept { return delta_; }
  std::uint64_t index() const noexcept {
    return (static_cast<std::uint64_t>(eps_) << genus_) | delta_;
  }
  bool is_zero() const noexcept { return eps_ == 0 && delta_ == 0; }

  int eps_at(int position) const;
  int delta_at(int position) const;

  std::string to_string() const;

  /// Addition in (Z/2Z)^{2g}.
  Characteristic operator+(const Characteristic& other) const;

  friend bool operator==(const Characteristic&, const Characteristic&) = default;
  friend auto operator<=>(const Characteristic& a, const Characteristic& b) {
    if (auto c = a.genus_ <=> b.genus_; c != 0) return c;
    return a.index() <=> b.index();
  }

 private:
  int genus_;
  std::uint32_t eps_;
  std::uint32_t delta_;
};

/// eps . delta mod 2; 0 is even, 1 is odd.
int parity(const Characteristic& m);

/// Symplectic pairing eps_m . delta_n + eps_n . delta_m mod 2.
int pair(const Characteristic& m, const Characteristic& n);

/// [0...0; 10...0], the distinguished two-torsion point used both as the
/// standard eta of the Schottky-Jung relation and as the standard cusp.
Characteristic standard_eta(int genus);

/// All 4^g characteristics in canonical order.
std::vector<Characteristic> all_characteristics(int genus);
std::vector<Characteristic> even_characteristics(int genus);

/// Even characteristics m with m + eta also even, canonically ordered. For
/// even eta this is pair(m, eta) = 0; for odd eta it is pair(m, eta) = 1.
std::vector<Characteristic> perp_even_set(const Characteristic& eta);

/// 1 when theta_m has positive order at the cusp mu, i.e. m and m + mu have
/// opposite parity. Equals pair(m, mu) for even mu, in particular at the
/// standard cusp [0...0;10...0].
int vanishes_at_cusp(const Characteristic& m, const Characteristic& mu);

/// #{ m in perp_even_set(eta) : vanishes_at_cusp(m, mu) = 1 }.
std::uint64_t vanishing_count(const Characteristic& eta, const Characteristic& mu);

/// T_v(x) = x + pair(x, v) v. An involution preserving the pairing.
class Transvection {
 public:
  explicit Transvection(Characteristic v) : v_(v) {}
  const Characteristic& vector() const noexcept { return v_; }
  Characteristic operator()(const Characteristic& x) const;

 private:
  Characteristic v_;
};

enum class OrbitLabel { FixedPoint, Perp, NonPerp };
std::string_view to_string(OrbitLabel label);

struct Orbit {
  OrbitLabel label;
  std::vector<Characteristic> members;  // canonical order
};

struct OrbitPartition {
  int genus;
  Characteristic eta;
  std::vector<Orbit> orbits;  // ordered by smallest member
};

/// Largest genus accepted by stabilizer_orbits.
inline constexpr int kMaxOrbitGenus = 6;

/// Orbits of the nonzero two-torsion points under the group generated by the
/// transvections T_v with pair(v, eta) = 0, computed by breadth-first closure.
/// Throws std::length_error when genus exceeds kMaxOrbitGenus.
OrbitPartition stabilizer_orbits(const Characteristic& eta);

/// The Schottky-Jung pairing n -> (j(n), j(n) + eta_std), where j prepends a
/// zero to both rows.
std::pair<Characteristic, Characteristic> sj_pair(const Characteristic& n);

void to_json(Json& out, const Characteristic& m);
void to_json(Json& out, const OrbitPartition& partition);

}  // namespace prym
