#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "prymslope/characteristic.hpp"
#include "prymslope/json.hpp"
#include "prymslope/rational.hpp"
#include "prymslope/theta.hpp"

namespace prym {

enum class Format { Text, Json, Markdown };
Format parse_format(std::string_view text);

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus status);

struct Check {
  std::string name;
  std::string section;  // topic heading used to group the markdown report
  std::string anchor;   // the published statement this check reproduces
  std::string expected;
  std::string computed;
  std::string detail;
  CheckStatus status;
};

struct VerifyOptions {
  int genus_min = 2;  // counting and orbit checks
  int genus_max = 6;
  double tail_tol = kDefaultTailTol;
  std::uint64_t seed = 20110715;
  bool skip_numeric = false;
};

class VerificationReport {
 public:
  VerificationReport(VerifyOptions environment, std::vector<Check> checks)
      : environment_(environment), checks_(std::move(checks)) {}

  const VerifyOptions& environment() const noexcept { return environment_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }

  /// True when every non-skipped check passed.
  bool passed() const;

  Json to_json() const;
  std::string to_text() const;
  std::string to_markdown() const;
  std::string render(Format format) const;

 private:
  VerifyOptions environment_;
  std::vector<Check> checks_;
};

/// Runs the full reproduction suite. Mathematical failures become failed
/// checks; only malformed options throw.
VerificationReport cmd_verify(const VerifyOptions& options);

// Thin wrappers used by the command-line tool. Each returns the rendered
// output; domain errors propagate as exceptions.
std::string cmd_counts(const Characteristic& eta, const Characteristic& mu, Format format);
std::string cmd_orbits(const Characteristic& eta, Format format);
std::string cmd_classes(int g, Format format);
std::string cmd_slope_bound(int g, const Rational& s_M, Format format);
std::string cmd_theta(const Characteristic& m, const Json& tau_doc, const TruncationBound& tb,
                      Format format);

struct BarnesCohnOutput {
  std::string rendered;
  bool passed;
};
BarnesCohnOutput cmd_barnes_cohn(int trials, int dim, int bound, std::uint64_t seed,
                                 Format format);

/// Shortest round-trip decimal for a double.
std::string format_double(double value);

}  // namespace prym
