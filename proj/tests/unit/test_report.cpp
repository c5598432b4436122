#include <gtest/gtest.h>

#include <set>

#include "prymslope/report.hpp"

namespace {

prym::VerifyOptions quick_options() {
  prym::VerifyOptions options;
  options.skip_numeric = true;
  options.genus_max = 4;
  return options;
}

const prym::Check& find_check(const prym::VerificationReport& report, const std::string& name) {
  for (const auto& c : report.checks()) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST(Report, NamedChecks) {
  const auto report = prym::cmd_verify(quick_options());
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.checks().size(), 10u);
  EXPECT_EQ(find_check(report, "slope_lower_bound g=6").expected, "48081/6269");
  EXPECT_EQ(find_check(report, "andreotti_mayer g=5").expected, "108L-14D");
  for (const auto& c : report.checks()) EXPECT_FALSE(c.anchor.empty()) << c.name;
}

TEST(Report, SkipNumericMarksThetaSkipped) {
  const auto report = prym::cmd_verify(quick_options());
  const auto& theta = find_check(report, "theta numerics g=1..3");
  EXPECT_EQ(theta.status, prym::CheckStatus::Skipped);
  EXPECT_EQ(report.to_json()["status"], "pass");
}

TEST(Report, FailedCheckFailsReport) {
  std::vector<prym::Check> checks{
      {"a", "s", "anchor", "1", "1", "", prym::CheckStatus::Pass},
      {"b", "s", "anchor", "1", "-", "", prym::CheckStatus::Skipped},
  };
  EXPECT_TRUE(prym::VerificationReport({}, checks).passed());
  checks.push_back({"c", "s", "anchor", "1", "2", "", prym::CheckStatus::Fail});
  const prym::VerificationReport report({}, checks);
  EXPECT_FALSE(report.passed());
  EXPECT_NE(report.to_text().find("[FAIL] c"), std::string::npos);
}

TEST(Report, RenderingsAreDeterministic) {
  const auto a = prym::cmd_verify(quick_options());
  const auto b = prym::cmd_verify(quick_options());
  for (auto f : {prym::Format::Text, prym::Format::Json, prym::Format::Markdown}) {
    EXPECT_EQ(a.render(f), b.render(f));
  }
  const auto md = a.render(prym::Format::Markdown);
  EXPECT_NE(md.find("## Slope bounds"), std::string::npos);
  EXPECT_NE(md.find("| check |"), std::string::npos);
}

TEST(Report, RejectsBadOptions) {
  prym::VerifyOptions options;
  options.genus_min = 1;
  EXPECT_THROW(prym::cmd_verify(options), std::invalid_argument);
  options.genus_min = 2;
  options.genus_max = 9;
  EXPECT_THROW(prym::cmd_verify(options), std::invalid_argument);
}

TEST(Commands, CountsAndOrbits) {
  const auto eta = prym::standard_eta(6);
  const auto mu = prym::Characteristic::parse("100000;000000");
  EXPECT_EQ(prym::cmd_counts(eta, mu, prym::Format::Text).substr(0, 4), "528\n");
  const auto doc = prym::Json::parse(prym::cmd_counts(eta, mu, prym::Format::Json));
  EXPECT_EQ(doc["vanishing_count"], 528);
  EXPECT_EQ(doc["product_vanishing_order"], "132/1");
  const auto orbits =
      prym::Json::parse(prym::cmd_orbits(prym::Characteristic::parse("00;10"), prym::Format::Json));
  std::multiset<int> sizes;
  for (const auto& o : orbits["orbits"]) sizes.insert(o["size"].get<int>());
  EXPECT_EQ(sizes, (std::multiset<int>{1, 6, 8}));
}

TEST(Commands, SlopeBoundAndClasses) {
  const auto out = prym::cmd_slope_bound(6, prym::Rational(47, 6), prym::Format::Text);
  EXPECT_EQ(out.substr(0, out.find('\n')), "48081/6269");
  const auto classes = prym::Json::parse(prym::cmd_classes(6, prym::Format::Json));
  EXPECT_EQ(classes["andreotti_mayer(A_5)"]["coeffs"]["L"], "108/1");
  EXPECT_EQ(classes["p^*L"]["coeffs"]["delta0ram"], "-1/4");
}

TEST(Commands, ThetaFromDocument) {
  const prym::Json tau{{"genus", 1}, {"re", {{0.0}}}, {"im", {{1.0}}}};
  const auto doc = prym::Json::parse(
      prym::cmd_theta(prym::Characteristic::parse("0;0"), tau, {}, prym::Format::Json));
  EXPECT_NEAR(doc["re"].get<double>(), 1.0864348112133080, 1e-14);
  const auto odd = prym::Json::parse(
      prym::cmd_theta(prym::Characteristic::parse("1;1"), tau, {}, prym::Format::Json));
  EXPECT_TRUE(odd["identically_zero"].get<bool>());
  const prym::Json path{{"genus", 1},      {"re", {{0.31}}},  {"im", {{1.13}}},
                        {"b_re", {0.17}}, {"b_im", {0.05}}, {"im_t", {8.0, 10.0, 12.0}}};
  const auto fit = prym::Json::parse(
      prym::cmd_theta(prym::Characteristic::parse("10;00"), path, {}, prym::Format::Json));
  EXPECT_NEAR(fit["fitted_order"].get<double>(), 0.125, 1e-3);
  EXPECT_EQ(fit["leading_fj_exponent"], "1/8");
}

TEST(Commands, FormatParsing) {
  EXPECT_EQ(prym::parse_format("md"), prym::Format::Markdown);
  EXPECT_THROW(prym::parse_format("xml"), std::invalid_argument);
}
