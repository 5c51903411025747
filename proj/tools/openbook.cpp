// openbook: analyze and synthesize contact open books of simply connected
// five-manifolds.
//
// Exit codes: 0 success, 2 malformed input, 3 unsupported assembly or
// non-coprime exponents, 4 target not almost contact, 5 profile check failed,
// 6 profile grid too coarse, 1 anything else.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cob/analysis.hpp"
#include "cob/barden.hpp"
#include "cob/contactgeom.hpp"
#include "cob/error.hpp"

namespace {

using cob::Error;
using cob::ErrorKind;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidRecipe:
    case ErrorKind::InvalidTarget:
    case ErrorKind::InvalidProfile:
    case ErrorKind::InvalidExponent:
    case ErrorKind::InvalidIndex:
      return 2;
    case ErrorKind::UnsupportedAssembly:
    case ErrorKind::NonCoprime:
    case ErrorKind::MatrixTooLarge:
      return 3;
    case ErrorKind::NotAlmostContact:
    case ErrorKind::ChernParityMismatch:
    case ErrorKind::MultipleXSummands:
      return 4;
    case ErrorKind::GridTooCoarse:
      return 6;
    default:
      return 1;
  }
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void print_report(const cob::AnalysisReport& r, const std::string& format) {
  if (format == "text") {
    std::cout << cob::format_text(r);
  } else {
    nlohmann::json j;
    to_json(j, r);
    print_json(j);
  }
}

int run_analyze(const std::vector<std::string>& paths, const std::string& format, bool trace) {
  cob::OpenBookRecipe combined;
  for (const auto& path : paths) {
    auto r = cob::recipe_from_json(read_json(path));
    combined.pages.insert(combined.pages.end(), r.pages.begin(), r.pages.end());
  }
  auto opts = cob::options_from_environment();
  if (trace) opts.trace = &std::cerr;
  print_report(cob::analyze(combined, opts), format);
  return 0;
}

int run_realize(const std::string& path) {
  const auto target = cob::target_from_json(read_json(path));
  nlohmann::json j;
  to_json(j, cob::realize(target));
  print_json(j);
  return 0;
}

int run_profiles(const std::string& path, const std::string& kind, double tolerance) {
  const auto j = read_json(path);
  const cob::ProfileVerdict v = kind == "binding"
                                    ? cob::validate_binding_profiles(cob::binding_profile_from_json(j), tolerance)
                                    : cob::validate_deformation_profile(cob::deformation_profile_from_json(j), tolerance);
  if (v.pass) {
    std::cout << "pass\n";
    return 0;
  }
  std::cout << "fail " << v.violation << ' ' << v.detail << '\n';
  return 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contact open books for simply connected five-manifolds"};
  app.require_subcommand(1);

  std::string format = "json";
  bool trace = false;
  std::string recipe_path;
  auto* analyze = app.add_subcommand("analyze", "Compute homology, Chern data and Barden type of a recipe");
  analyze->add_option("recipe", recipe_path, "Recipe JSON file")->required();
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  analyze->add_flag("--trace", trace, "Dump monodromy matrices and Smith diagonals to stderr");

  std::string target_path;
  auto* realize = app.add_subcommand("realize", "Synthesize an open-book recipe for a target manifold");
  realize->add_option("target", target_path, "Target JSON file")->required();

  std::vector<std::string> sum_paths;
  auto* booksum = app.add_subcommand("booksum", "Analyze the book-connected sum of several recipes");
  booksum->add_option("recipes", sum_paths, "Recipe JSON files")->required();
  booksum->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  booksum->add_flag("--trace", trace, "Dump monodromy matrices and Smith diagonals to stderr");

  std::string profile_path;
  std::string kind = "binding";
  double tolerance = cob::kDefaultProfileTolerance;
  auto* profiles = app.add_subcommand("profiles", "Validate radial profile functions");
  profiles->add_option("profile", profile_path, "Profile JSON file")->required();
  profiles->add_option("--kind", kind, "Profile kind")->check(CLI::IsMember({"binding", "deformation"}));
  profiles->add_option("--tolerance", tolerance, "Relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze({recipe_path}, format, trace);
    if (realize->parsed()) return run_realize(target_path);
    if (booksum->parsed()) return run_analyze(sum_paths, format, trace);
    if (profiles->parsed()) return run_profiles(profile_path, kind, tolerance);
  } catch (const Error& e) {
    std::cerr << "openbook: " << cob::to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "openbook: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
