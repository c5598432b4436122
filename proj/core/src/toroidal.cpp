#include "prymslope/toroidal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace prym {

namespace {

using Wide = __int128;

void require_square_symmetric(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("matrix must be square");
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix must be symmetric");
    }
  }
}

// Fraction-free Gaussian elimination; returns the determinant.
Wide bareiss_determinant(std::vector<std::vector<Wide>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Wide sign = 1;
  Wide previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::int64_t isqrt(std::int64_t v) {
  if (v <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

Json rational_matrix_json(const SemiIntegralMatrix& s) {
  auto rows = Json::array();
  for (int i = 0; i < s.dim(); ++i) {
    auto row = Json::array();
    for (int j = 0; j < s.dim(); ++j) row.push_back(to_fraction(s.entry(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SlopeValue general_slope(const BoundaryWeightedClass& h, MinConvention convention) {
  if (h.a < 0) throw std::domain_error("general_slope: negative Hodge coefficient");
  for (const auto& b : h.b) {
    if (b < 0) throw std::domain_error("general_slope: negative boundary coefficient");
  }
  std::optional<Rational> minimum;
  for (const auto& b : h.b) {
    if (convention == MinConvention::PositiveOnly && b == 0) continue;
    if (!minimum || b < *minimum) minimum = b;
  }
  if (!minimum || *minimum == 0) return SlopeValue::infinite();
  return SlopeValue::finite(h.a / *minimum);
}

bool is_positive_semidefinite(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  }
  auto a = m;
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  while (!active.empty()) {
    // Pivot on the largest remaining diagonal entry.
    auto pivot_it = std::max_element(active.begin(), active.end(),
                                     [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });
    const std::size_t k = *pivot_it;
    const Rational pivot = a[k][k];
    if (pivot < 0) return false;
    if (pivot == 0) {
      // Zero diagonal forces the whole remaining block to vanish.
      for (auto i : active) {
        for (auto j : active) {
          if (a[i][j] != 0) return false;
        }
      }
      return true;
    }
    active.erase(pivot_it);
    for (auto i : active) {
      for (auto j : active) a[i][j] -= a[i][k] * a[k][j] / pivot;
    }
  }
  return true;
}

bool is_positive_semidefinite(const IntMatrix& m) {
  require_square_symmetric(m);
  const std::size_t n = m.size();
  if (n > 20) throw std::length_error("principal-minor PSD test limited to small matrices");
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (subset & (1u << i)) idx.push_back(i);
    }
    std::vector<std::vector<Wide>> minor(idx.size(), std::vector<Wide>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) minor[i][j] = m[idx[i]][idx[j]];
    }
    if (bareiss_determinant(std::move(minor)) < 0) return false;
  }
  return true;
}

int matrix_rank(const IntMatrix& m) {
  std::vector<std::vector<Wide>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  int rank = 0;
  Wide previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / previous;
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

SemiIntegralMatrix SemiIntegralMatrix::from_doubled(IntMatrix doubled) {
  require_square_symmetric(doubled);
  if (doubled.empty()) throw std::invalid_argument("semi-integral matrix must be nonempty");
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    if (doubled[i][i] % 2 != 0) {
      throw std::invalid_argument("semi-integral matrix must have an integer diagonal");
    }
  }
  if (!is_positive_semidefinite(doubled)) {
    throw std::invalid_argument("semi-integral matrix must be positive semidefinite");
  }
  return SemiIntegralMatrix(std::move(doubled));
}

SemiIntegralMatrix SemiIntegralMatrix::from_entries(
    const std::vector<std::vector<Rational>>& entries) {
  IntMatrix doubled(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != entries.size()) throw std::invalid_argument("matrix must be square");
    for (const auto& e : entries[i]) {
      const Rational twice = 2 * e;
      if (boost::multiprecision::denominator(twice) != 1) {
        throw std::invalid_argument("entry " + to_fraction(e) + " is not a half-integer");
      }
      doubled[i].push_back(boost::multiprecision::numerator(twice).convert_to<std::int64_t>());
    }
  }
  return from_doubled(std::move(doubled));
}

Rational SemiIntegralMatrix::entry(int i, int j) const {
  return Rational(doubled_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)), 2);
}

Rational SemiIntegralMatrix::evaluate(const std::vector<std::int64_t>& x) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("vector length mismatch");
  Wide total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) total += Wide(doubled_[i][j]) * x[i] * x[j];
  }
  return Rational(static_cast<long long>(total), 2);
}

Rational SemiIntegralMatrix::trace_with(const IntMatrix& x) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("matrix size mismatch");
  Wide total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) total += Wide(doubled_[i][j]) * x[j][i];
  }
  return Rational(static_cast<long long>(total), 2);
}

SemiIntegralMatrix SemiIntegralMatrix::scaled(std::int64_t c) const {
  if (c < 0) throw std::invalid_argument("scale factor must be nonnegative");
  IntMatrix out = doubled_;
  for (auto& row : out) {
    for (auto& e : row) e *= c;
  }
  return SemiIntegralMatrix(std::move(out));
}

Json SemiIntegralMatrix::to_json() const { return rational_matrix_json(*this); }

RankOneMin rank_one_min(const SemiIntegralMatrix& s, int bound) {
  if (bound < 1) throw std::invalid_argument("rank_one_min: bound must be >= 1");
  const auto n = static_cast<std::size_t>(s.dim());
  const auto& t = s.doubled();
  std::vector<std::int64_t> x(n, -bound);
  std::optional<Wide> best;
  std::vector<std::int64_t> argmin;
  while (true) {
    const auto first = std::find_if(x.begin(), x.end(), [](std::int64_t v) { return v != 0; });
    if (first != x.end() && *first > 0) {
      Wide value = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) value += Wide(t[i][j]) * x[i] * x[j];
      }
      if (!best || value < *best) {
        best = value;
        argmin = x;
      }
    }
    std::size_t pos = n;
    while (pos > 0) {
      if (x[pos - 1] < bound) {
        ++x[pos - 1];
        break;
      }
      x[pos - 1] = -bound;
      --pos;
    }
    if (pos == 0) break;
  }
  return {Rational(static_cast<long long>(*best), 2), std::move(argmin)};
}

FullMin full_min(const SemiIntegralMatrix& s, int bound) {
  if (bound < 1) throw std::invalid_argument("full_min: bound must be >= 1");
  const int n = s.dim();
  if (n > kMaxFullMinDim) {
    throw std::length_error("full_min: dimension " + std::to_string(n) +
                            " too large for exhaustive search (max " +
                            std::to_string(kMaxFullMinDim) + ")");
  }
  const std::int64_t limit = std::int64_t{bound} * bound * n;
  const auto& t = s.doubled();
  const auto un = static_cast<std::size_t>(n);

  // Slots: the diagonal first, then the upper off-diagonal entries, whose
  // range |X_ij| <= sqrt(X_ii X_jj) follows from PSD.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < un; ++i) slots.emplace_back(i, i);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = i + 1; j < un; ++j) slots.emplace_back(i, j);
  }

  IntMatrix x(un, std::vector<std::int64_t>(un, 0));
  std::optional<Wide> best;
  IntMatrix argmin;
  std::uint64_t enumerated = 0;

  std::function<void(std::size_t, Wide, bool)> search = [&](std::size_t slot, Wide value,
                                                             bool nonzero) {
    if (slot == slots.size()) {
      ++enumerated;
      if (!nonzero) return;
      if (best && value >= *best) return;
      if (!is_positive_semidefinite(x)) return;
      best = value;
      argmin = x;
      return;
    }
    const auto [i, j] = slots[slot];
    if (i == j) {
      for (std::int64_t d = 0; d <= limit; ++d) {
        x[i][i] = d;
        search(slot + 1, value + Wide(t[i][i]) * d, nonzero || d != 0);
      }
      x[i][i] = 0;
      return;
    }
    const std::int64_t reach = std::min(limit, isqrt(x[i][i] * x[j][j]));
    for (std::int64_t e = -reach; e <= reach; ++e) {
      x[i][j] = x[j][i] = e;
      search(slot + 1, value + 2 * Wide(t[i][j]) * e, nonzero || e != 0);
    }
    x[i][j] = x[j][i] = 0;
  };
  search(0, 0, false);

  const int rank = matrix_rank(argmin);
  return {Rational(static_cast<long long>(*best), 2), std::move(argmin), rank, enumerated};
}

SemiIntegralMatrix random_semi_integral(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  std::uniform_int_distribution<std::int64_t> entry(-2, 2);
  const auto n = static_cast<std::size_t>(dim);
  IntMatrix m(n, std::vector<std::int64_t>(n));
  for (auto& row : m) {
    for (auto& e : row) e = entry(rng);
  }
  // Doubled S = M^T M + diag(M^T M): even diagonal, PSD as a sum of PSD terms.
  IntMatrix doubled(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) doubled[i][j] += m[k][i] * m[k][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) doubled[i][i] *= 2;
  return SemiIntegralMatrix::from_doubled(std::move(doubled));
}

Json BarnesCohnReport::to_json() const {
  auto fails = Json::array();
  for (const auto& f : failures) {
    fails.push_back({{"trial", f.trial},
                     {"S", f.s.to_json()},
                     {"rank_one_min", to_fraction(f.rank_one_value)},
                     {"full_min", to_fraction(f.full_value)}});
  }
  return {{"dim", dim},
          {"trials", trials},
          {"passes", passes},
          {"failures", std::move(fails)},
          {"bound", bound},
          {"seed", seed},
          {"scope", "bounded search: rank-one x in [-B,B]^n, integral PSD X with |X_ij| <= "
                    "B^2*n; confirms instances only and cannot refute the unbounded claim"}};
}

BarnesCohnReport verify_barnes_cohn(int trials, int dim, int bound, std::uint64_t seed) {
  if (dim < 1 || dim > kMaxFullMinDim) {
    throw std::invalid_argument("verify_barnes_cohn: dim must be in 1.." +
                                std::to_string(kMaxFullMinDim));
  }
  if (trials < 0) throw std::invalid_argument("verify_barnes_cohn: negative trial count");
  BarnesCohnReport report{dim, trials, 0, bound, seed, {}};
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const auto s = random_semi_integral(dim, rng);
    const auto rank_one = rank_one_min(s, bound);
    const auto full = full_min(s, bound);
    if (rank_one.value == full.value) {
      ++report.passes;
    } else {
      report.failures.push_back({trial, s, rank_one.value, full.value});
    }
  }
  return report;
}

}  // namespace prym
