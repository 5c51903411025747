#pragma once

// Recipe analysis: runs every page through its homology pipeline, sums the
// books and identifies the result in Barden's list.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cob/barden.hpp"

namespace cob {

struct PageDiagnostics {
  std::string label;
  std::string kind;
  std::optional<MappingTorusHomology> wang;
  std::optional<FgAbelianGroup> binding;
  std::optional<BigInt> t0;
  std::optional<LegendrianInvariants> legendrian;
  std::optional<std::string> total_space;  // "S2xS3" / "S2x~S3" / "S5" / Barden name
  std::optional<long> chern;
  ClosedBookHomology homology;

  bool operator==(const PageDiagnostics&) const = default;
};

struct AnalysisReport {
  std::vector<PageDiagnostics> pages;
  ClosedBookHomology homology;
  bool spin = true;
  std::vector<long> chern;
  SummandSet summands;
  std::string identification;
  bool almost_contact = true;

  bool operator==(const AnalysisReport&) const = default;
};

struct AnalysisOptions {
  /// Largest Pham basis accepted for a Brieskorn page.
  std::size_t max_matrix = 4096;
  /// Receives monodromy matrices and Smith diagonals when non-null.
  std::ostream* trace = nullptr;
};

/// Reads OPENBOOK_MAX_MATRIX, falling back to 4096.
AnalysisOptions options_from_environment();

PageDiagnostics analyze_page(const PageSpec& page, const AnalysisOptions& opts = {});

/// Errors name the offending page in their message.
AnalysisReport analyze(const OpenBookRecipe& recipe, const AnalysisOptions& opts = {});

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

/// Two-column text rendering.
std::string format_text(const AnalysisReport& r);

/// Target read back from a report, for round-trip comparison.
TargetSpec target_of(const AnalysisReport& r);

}  // namespace cob
