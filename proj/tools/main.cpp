#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "prymslope/report.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

prym::Characteristic parse_characteristic(const std::string& text, std::optional<int> genus) {
  auto m = prym::Characteristic::parse(text);
  if (genus && *genus != m.genus()) {
    throw std::invalid_argument("characteristic " + text + " has genus " +
                                std::to_string(m.genus()) + ", expected " +
                                std::to_string(*genus));
  }
  return m;
}

prym::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return prym::Json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for slopes of Prym and abelian moduli spaces"};
  app.require_subcommand(1);

  std::string format_text = "text";
  std::uint64_t seed = prym::VerifyOptions{}.seed;
  double tail_tol = prym::kDefaultTailTol;
  bool skip_numeric = false;
  app.add_option("--format", format_text, "Output encoding")
      ->check(CLI::IsMember({"text", "json", "md"}));
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--tail-tol", tail_tol, "Certified tail tolerance for theta sums")
      ->check(CLI::PositiveNumber);
  app.add_flag("--skip-numeric", skip_numeric, "Skip floating-point theta checks");

  auto* verify = app.add_subcommand("verify", "Run every reproduction check");
  int genus_min = 2;
  int genus_max = 6;
  verify->add_option("--genus-min", genus_min, "Smallest genus for counting and orbit checks");
  verify->add_option("--genus-max", genus_max, "Largest genus for counting and orbit checks");

  auto* counts = app.add_subcommand("counts", "Vanishing count of eta-perp even characteristics");
  std::optional<int> counts_genus;
  std::string eta_text;
  std::string mu_text;
  counts->add_option("-g,--genus", counts_genus, "Genus (checked against the characteristics)");
  counts->add_option("eta", eta_text, "Characteristic eta, e.g. 00;10")->required();
  counts->add_option("mu", mu_text, "Characteristic mu")->required();

  auto* orbits = app.add_subcommand("orbits", "Orbits of the stabilizer of eta");
  std::optional<int> orbits_genus;
  orbits->add_option("-g,--genus", orbits_genus, "Genus (checked against eta)");
  orbits->add_option("eta", eta_text, "Characteristic eta")->required();

  auto* classes = app.add_subcommand("classes", "Divisor classes for curves of genus g");
  int classes_genus = 6;
  classes->add_option("g", classes_genus, "Curve genus")->required();

  auto* slope_bound = app.add_subcommand("slope-bound", "Lower bound on the slope of A_{g-1}");
  int bound_genus = 6;
  std::string s_m_text;
  slope_bound->add_option("g", bound_genus, "Curve genus")->required();
  slope_bound->add_option("s_M", s_m_text, "Slope of M_g as p/q")->required();

  auto* theta = app.add_subcommand("theta", "Theta constant or fitted vanishing order");
  std::optional<int> theta_genus;
  std::string m_text;
  std::string tau_file;
  int radius = 0;
  theta->add_option("-g,--genus", theta_genus, "Genus (checked against m)");
  theta->add_option("--radius", radius, "Fixed truncation radius (0 selects automatically)")
      ->check(CLI::NonNegativeNumber);
  theta->add_option("m", m_text, "Characteristic m")->required();
  theta->add_option("tau_file", tau_file, "JSON period matrix or degeneration path")
      ->required()
      ->check(CLI::ExistingFile);

  auto* barnes_cohn = app.add_subcommand("barnes-cohn", "Bounded rank-one minimum search");
  int trials = 100;
  int dim = 2;
  int search_bound = 3;
  barnes_cohn->add_option("--trials", trials, "Number of random matrices")
      ->check(CLI::PositiveNumber);
  barnes_cohn->add_option("--dim", dim, "Matrix dimension")->check(CLI::Range(1, 3));
  barnes_cohn->add_option("--bound", search_bound, "Entry bound B")->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const auto format = prym::parse_format(format_text);
    if (verify->parsed()) {
      prym::VerifyOptions options;
      options.genus_min = genus_min;
      options.genus_max = genus_max;
      options.tail_tol = tail_tol;
      options.seed = seed;
      options.skip_numeric = skip_numeric;
      const auto report = prym::cmd_verify(options);
      std::cout << report.render(format);
      return report.passed() ? 0 : kExitFailed;
    }
    if (counts->parsed()) {
      std::cout << prym::cmd_counts(parse_characteristic(eta_text, counts_genus),
                                    parse_characteristic(mu_text, counts_genus), format);
    } else if (orbits->parsed()) {
      std::cout << prym::cmd_orbits(parse_characteristic(eta_text, orbits_genus), format);
    } else if (classes->parsed()) {
      std::cout << prym::cmd_classes(classes_genus, format);
    } else if (slope_bound->parsed()) {
      std::cout << prym::cmd_slope_bound(bound_genus, prym::parse_rational(s_m_text), format);
    } else if (theta->parsed()) {
      const prym::TruncationBound tb{radius, tail_tol};
      std::cout << prym::cmd_theta(parse_characteristic(m_text, theta_genus),
                                   read_json_file(tau_file), tb, format);
    } else if (barnes_cohn->parsed()) {
      const auto out = prym::cmd_barnes_cohn(trials, dim, search_bound, seed, format);
      std::cout << out.rendered;
      return out.passed ? 0 : kExitFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
