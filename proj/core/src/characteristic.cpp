#include "prymslope/characteristic.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace prym {

namespace {

std::uint32_t row_mask(int genus) {
  return genus == 32 ? ~0u : ((1u << genus) - 1u);
}

void check_genus(int genus) {
  if (genus < 1 || genus > Characteristic::kMaxGenus) {
    throw std::invalid_argument("genus must be in 1.." +
                                std::to_string(Characteristic::kMaxGenus) + ", got " +
                                std::to_string(genus));
  }
}

void check_same_genus(const Characteristic& a, const Characteristic& b) {
  if (a.genus() != b.genus()) {
    throw std::invalid_argument("genus mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

void require_nonzero(const Characteristic& m, const char* name) {
  if (m.is_zero()) {
    throw std::invalid_argument(std::string(name) + " must be a nonzero two-torsion point");
  }
}

std::uint32_t parse_row(std::string_view row, std::string_view whole) {
  std::uint32_t bits = 0;
  for (char c : row) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("malformed characteristic \"" + std::string(whole) + "\"");
    }
    bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return bits;
}

}  // namespace

Characteristic::Characteristic(int genus, std::uint32_t eps, std::uint32_t delta)
    : genus_(genus), eps_(eps), delta_(delta) {
  check_genus(genus);
  if ((eps & ~row_mask(genus)) != 0 || (delta & ~row_mask(genus)) != 0) {
    throw std::invalid_argument("characteristic rows exceed genus " + std::to_string(genus));
  }
}

Characteristic Characteristic::zero(int genus) { return {genus, 0, 0}; }

Characteristic Characteristic::from_index(int genus, std::uint64_t index) {
  check_genus(genus);
  if (index >> (2 * genus) != 0) {
    throw std::invalid_argument("characteristic index out of range");
  }
  return {genus, static_cast<std::uint32_t>(index >> genus),
          static_cast<std::uint32_t>(index & row_mask(genus))};
}

Characteristic Characteristic::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("malformed characteristic \"" + std::string(text) +
                                "\": expected \"eps;delta\"");
  }
  const auto top = text.substr(0, semi);
  const auto bottom = text.substr(semi + 1);
  if (top.size() != bottom.size() || top.empty()) {
    throw std::invalid_argument("malformed characteristic \"" + std::string(text) +
                                "\": rows must have equal nonzero length");
  }
  return {static_cast<int>(top.size()), parse_row(top, text), parse_row(bottom, text)};
}

int Characteristic::eps_at(int position) const {
  if (position < 0 || position >= genus_) throw std::out_of_range("row position");
  return static_cast<int>((eps_ >> (genus_ - 1 - position)) & 1u);
}

int Characteristic::delta_at(int position) const {
  if (position < 0 || position >= genus_) throw std::out_of_range("row position");
  return static_cast<int>((delta_ >> (genus_ - 1 - position)) & 1u);
}

std::string Characteristic::to_string() const {
  std::string out;
  out.reserve(2 * static_cast<std::size_t>(genus_) + 1);
  for (int i = 0; i < genus_; ++i) out.push_back(static_cast<char>('0' + eps_at(i)));
  out.push_back(';');
  for (int i = 0; i < genus_; ++i) out.push_back(static_cast<char>('0' + delta_at(i)));
  return out;
}

Characteristic Characteristic::operator+(const Characteristic& other) const {
  check_same_genus(*this, other);
  return {genus_, eps_ ^ other.eps_, delta_ ^ other.delta_};
}

int parity(const Characteristic& m) {
  return std::popcount(m.eps() & m.delta()) & 1;
}

int pair(const Characteristic& m, const Characteristic& n) {
  check_same_genus(m, n);
  return (std::popcount(m.eps() & n.delta()) + std::popcount(n.eps() & m.delta())) & 1;
}

Characteristic standard_eta(int genus) {
  check_genus(genus);
  return {genus, 0, 1u << (genus - 1)};
}

std::vector<Characteristic> all_characteristics(int genus) {
  check_genus(genus);
  const std::uint64_t count = std::uint64_t{1} << (2 * genus);
  std::vector<Characteristic> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(Characteristic::from_index(genus, i));
  return out;
}

std::vector<Characteristic> even_characteristics(int genus) {
  auto all = all_characteristics(genus);
  std::erase_if(all, [](const Characteristic& m) { return parity(m) != 0; });
  return all;
}

std::vector<Characteristic> perp_even_set(const Characteristic& eta) {
  require_nonzero(eta, "eta");
  auto even = even_characteristics(eta.genus());
  std::erase_if(even, [&](const Characteristic& m) { return parity(m + eta) != 0; });
  return even;
}

std::uint64_t vanishing_count(const Characteristic& eta, const Characteristic& mu) {
  require_nonzero(eta, "eta");
  require_nonzero(mu, "mu");
  check_same_genus(eta, mu);
  std::uint64_t count = 0;
  for (const auto& m : perp_even_set(eta)) {
    count += static_cast<std::uint64_t>(vanishes_at_cusp(m, mu));
  }
  return count;
}

int vanishes_at_cusp(const Characteristic& m, const Characteristic& mu) {
  check_same_genus(m, mu);
  return parity(m + mu) ^ parity(m);
}

Characteristic Transvection::operator()(const Characteristic& x) const {
  return pair(x, v_) ? x + v_ : x;
}

std::string_view to_string(OrbitLabel label) {
  switch (label) {
    case OrbitLabel::FixedPoint: return "fixed-point";
    case OrbitLabel::Perp: return "perp";
    case OrbitLabel::NonPerp: return "non-perp";
  }
  return "unknown";
}

OrbitPartition stabilizer_orbits(const Characteristic& eta) {
  require_nonzero(eta, "eta");
  const int g = eta.genus();
  if (g > kMaxOrbitGenus) {
    throw std::length_error("stabilizer_orbits: genus " + std::to_string(g) +
                            " exceeds the breadth-first closure bound " +
                            std::to_string(kMaxOrbitGenus));
  }
  const std::uint64_t count = std::uint64_t{1} << (2 * g);

  std::vector<Transvection> generators;
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto v = Characteristic::from_index(g, i);
    if (pair(v, eta) == 0) generators.emplace_back(v);
  }

  std::vector<bool> visited(count, false);
  visited[0] = true;
  OrbitPartition partition{g, eta, {}};
  for (std::uint64_t seed = 1; seed < count; ++seed) {
    if (visited[seed]) continue;
    std::vector<Characteristic> members;
    std::deque<Characteristic> frontier{Characteristic::from_index(g, seed)};
    visited[seed] = true;
    while (!frontier.empty()) {
      const auto x = frontier.front();
      frontier.pop_front();
      members.push_back(x);
      for (const auto& t : generators) {
        const auto y = t(x);
        if (!visited[y.index()]) {
          visited[y.index()] = true;
          frontier.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    const auto& first = members.front();
    const OrbitLabel label = first == eta           ? OrbitLabel::FixedPoint
                             : pair(first, eta) == 0 ? OrbitLabel::Perp
                                                     : OrbitLabel::NonPerp;
    partition.orbits.push_back({label, std::move(members)});
  }
  return partition;
}

std::pair<Characteristic, Characteristic> sj_pair(const Characteristic& n) {
  const int g = n.genus() + 1;
  const Characteristic lifted(g, n.eps(), n.delta());
  return {lifted, lifted + standard_eta(g)};
}

void to_json(Json& out, const Characteristic& m) { out = m.to_string(); }

void to_json(Json& out, const OrbitPartition& partition) {
  auto orbits = Json::array();
  for (const auto& orbit : partition.orbits) {
    orbits.push_back({{"label", to_string(orbit.label)},
                      {"size", orbit.members.size()},
                      {"members", orbit.members}});
  }
  out = {{"genus", partition.genus}, {"eta", partition.eta}, {"orbits", std::move(orbits)}};
}

}  // namespace prym
