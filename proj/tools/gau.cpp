#include <chrono>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "gau/error.hpp"
#include "gau/group.hpp"
#include "gau/report.hpp"

namespace {

// 0 success, 1 verification failure, 2 usage or validation, 3 internal.
int exit_code_for(gau::errc c) {
  switch (c) {
    case gau::errc::parse:
    case gau::errc::non_prime:
    case gau::errc::degree_zero:
    case gau::errc::too_large:
    case gau::errc::odd_dihedral:
      return 2;
    default:
      return 3;
  }
}

int run_analyze(const std::string& group, std::uint64_t p, int k,
                std::uint64_t seed, const std::string& format) {
  gau::GroupTable G = gau::build_group(group);
  gau::Fq F = gau::Fq::make(p, std::uint32_t(k));
  auto t0 = std::chrono::steady_clock::now();
  gau::UnitReport r = gau::structure_report(G, F, seed);
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  if (format == "json")
    std::printf("%s\n", gau::record_json(r, ms).c_str());
  else
    std::fputs(gau::report_text(r).c_str(), stdout);
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed,
               const std::string& format) {
  gau::SuiteResult res;
  if (suite == "theorem")
    res = gau::run_theorem_suite(seed);
  else if (suite == "p5")
    res = gau::run_p5_suite(seed);
  else
    res = gau::run_oracle_suite(seed);
  if (format == "json")
    std::printf("%s\n", gau::suite_json(res).c_str());
  else
    std::fputs(gau::suite_text(res).c_str(), stdout);
  return res.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit groups of modular group algebras: radicals, Wedderburn "
               "decompositions, and unit-group structure over finite fields"};
  app.require_subcommand(1);

  std::string group = "C3xD10";
  std::uint64_t p = 0;
  int k = 1;
  std::uint64_t seed = 0;
  std::string format = "text";

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Compute the full structure report for one group algebra");
  analyze->add_option("--group", group, "Group spec, e.g. C3xD10, D10, C6, C2xC2")
      ->capture_default_str();
  analyze->add_option("--p", p, "Field characteristic (prime)")->required();
  analyze->add_option("--k", k, "Extension degree over the prime field")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--seed", seed, "Seed for randomized certification")
      ->capture_default_str();
  analyze->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string suite;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite and print a per-case table");
  verify->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember({"theorem", "p5", "oracle"}))
      ->required();
  verify->add_option("--seed", seed, "Seed for randomized checks")
      ->capture_default_str();
  verify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(group, p, k, seed, format);
    return run_verify(suite, seed, format);
  } catch (const gau::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.code());
  }
}
