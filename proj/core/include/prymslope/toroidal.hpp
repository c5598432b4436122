#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "prymslope/json.hpp"
#include "prymslope/picard.hpp"
#include "prymslope/rational.hpp"

namespace prym {

/// H = a L - b_0 D_0 - sum b_i D_i on a toroidal compactification, with the
/// boundary coefficients b_i stored as nonnegative numbers.
struct BoundaryWeightedClass {
  Rational a;
  std::vector<Rational> b;
};

/// Which boundary coefficients enter min{b_i}.
enum class MinConvention {
  PositiveOnly,  // minimum over b_i > 0
  AllDivisors,   // literal minimum; a zero b_i gives an infinite slope
};

/// a / min{b_i}; infinite when the minimum taken is zero or empty.
SlopeValue general_slope(const BoundaryWeightedClass& h,
                         MinConvention convention = MinConvention::PositiveOnly);

/// Symmetric integer matrix, row-major.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Exact PSD test by pivoted symmetric elimination over the rationals.
bool is_positive_semidefinite(const std::vector<std::vector<Rational>>& m);
/// Exact PSD test for integer matrices via all principal minors.
bool is_positive_semidefinite(const IntMatrix& m);
/// Exact rank by fraction-free elimination.
int matrix_rank(const IntMatrix& m);

/// A semi-integral positive semidefinite matrix: integer diagonal and
/// half-integer off-diagonal entries. Stored as its double, which is an
/// integer matrix with even diagonal.
class SemiIntegralMatrix {
 public:
  /// Throws std::invalid_argument unless `doubled` is symmetric with even
  /// diagonal and PSD.
  static SemiIntegralMatrix from_doubled(IntMatrix doubled);
  static SemiIntegralMatrix from_entries(const std::vector<std::vector<Rational>>& entries);

  int dim() const noexcept { return static_cast<int>(doubled_.size()); }
  const IntMatrix& doubled() const noexcept { return doubled_; }
  Rational entry(int i, int j) const;

  /// x S x^T.
  Rational evaluate(const std::vector<std::int64_t>& x) const;
  /// tr(S X).
  Rational trace_with(const IntMatrix& x) const;

  SemiIntegralMatrix scaled(std::int64_t c) const;

  Json to_json() const;

 private:
  explicit SemiIntegralMatrix(IntMatrix doubled) : doubled_(std::move(doubled)) {}
  IntMatrix doubled_;
};

struct RankOneMin {
  Rational value;
  std::vector<std::int64_t> argmin;  // first nonzero entry positive
};

/// min x S x^T over nonzero x in [-B, B]^n. Among minimizers, x and -x are
/// identified by taking the first nonzero entry positive, and the
/// lexicographically smallest representative is returned.
RankOneMin rank_one_min(const SemiIntegralMatrix& s, int bound);

/// Largest dimension full_min will search.
inline constexpr int kMaxFullMinDim = 3;

struct FullMin {
  Rational value;
  IntMatrix argmin;
  int rank;
  std::uint64_t candidates;  // matrices enumerated
};

/// min tr(S X) over nonzero integral PSD X with |X_ij| <= B^2 * n, by
/// exhaustive search. Throws std::length_error when n > kMaxFullMinDim.
FullMin full_min(const SemiIntegralMatrix& s, int bound);

/// S = (M^T M + diag(M^T M)) / 2 for M with entries uniform in [-2, 2].
SemiIntegralMatrix random_semi_integral(int dim, std::mt19937_64& rng);

struct BarnesCohnFailure {
  int trial;
  SemiIntegralMatrix s;
  Rational rank_one_value;
  Rational full_value;
};

struct BarnesCohnReport {
  int dim;
  int trials;
  int passes;
  int bound;
  std::uint64_t seed;
  std::vector<BarnesCohnFailure> failures;

  bool all_passed() const noexcept { return passes == trials; }
  Json to_json() const;
};

/// Checks full_min == rank_one_min on `trials` seeded random matrices. A
/// bounded search can confirm but never refute the unbounded statement.
BarnesCohnReport verify_barnes_cohn(int trials, int dim, int bound, std::uint64_t seed);

}  // namespace prym
