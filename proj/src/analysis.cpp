#include "cob/analysis.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

#include "cob/contactgeom.hpp"
#include "cob/error.hpp"

namespace cob {

AnalysisOptions options_from_environment() {
  AnalysisOptions opts;
  if (const char* env = std::getenv("OPENBOOK_MAX_MATRIX")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw Error(ErrorKind::Parse, std::string("OPENBOOK_MAX_MATRIX must be a positive integer, got \"") + env + '"');
    opts.max_matrix = static_cast<std::size_t>(v);
  }
  return opts;
}

namespace {

void trace_diagonal(std::ostream& os, const char* what, const IntegerMatrix& m) {
  os << "  snf(" << what << "):";
  for (const auto& d : smith_invariants(m)) os << ' ' << d;
  os << '\n';
}

PageDiagnostics analyze_brieskorn(const BrieskornPage& b, const AnalysisOptions& opts, PageDiagnostics d) {
  const auto& a = b.exponents;
  a.check_basis_size(opts.max_matrix);
  d.t0 = isotopy_parameter(a, b.rotated_coordinate, b.rotation_power);
  const IntegerMatrix monodromy = rotation_matrix(a, b.rotated_coordinate, b.rotation_power);
  d.wang = wang_homology(monodromy);
  d.binding = binding_homology(a);
  if (opts.trace) {
    auto& os = *opts.trace;
    os << "page " << d.label << '\n' << "  monodromy on H_2(page): " << monodromy << '\n';
    trace_diagonal(os, "monodromy - id", monodromy - IntegerMatrix::identity(monodromy.rows()));
    const IntegerMatrix h = full_monodromy_matrix(a);
    os << "  Milnor monodromy: " << h << '\n';
    trace_diagonal(os, "Milnor monodromy - id", h - IntegerMatrix::identity(h.rows()));
  }
  d.homology = assemble_closed_homology(*d.wang, *d.binding);
  d.total_space = connected_sum_string(identify(d.homology, {true}));
  return d;
}

}  // namespace

PageDiagnostics analyze_page(const PageSpec& page, const AnalysisOptions& opts) {
  PageDiagnostics d;
  d.label = describe(page);
  d.kind = page_kind(page);
  if (const auto* db = std::get_if<DiskBundlePage>(&page)) {
    const auto space = trivial_monodromy_total_space(*db);
    d.wang = wang_homology(IntegerMatrix::identity(1));
    d.binding = FgAbelianGroup::cyclic(db->k());
    d.legendrian = db->invariants();
    d.chern = space.contact_chern;
    d.total_space = to_string(space.tag);
    d.homology = space.homology;
    if (opts.trace) *opts.trace << "page " << d.label << "\n  monodromy on H_2(page): [[1]]\n";
    return d;
  }
  if (const auto* b = std::get_if<BrieskornPage>(&page)) return analyze_brieskorn(*b, opts, std::move(d));
  d.total_space = "S5";
  d.homology = ClosedBookHomology::sphere();
  return d;
}

AnalysisReport analyze(const OpenBookRecipe& recipe, const AnalysisOptions& opts) {
  validate_recipe(recipe);
  AnalysisReport r;
  std::vector<ClosedBookHomology> parts;
  for (std::size_t i = 0; i < recipe.pages.size(); ++i) {
    const auto& page = recipe.pages[i];
    try {
      r.pages.push_back(analyze_page(page, opts));
    } catch (const Error& e) {
      throw Error(e.kind(), "page " + std::to_string(i) + " (" + describe(page) + "): " + e.what());
    }
    parts.push_back(r.pages.back().homology);
    if (const auto* db = std::get_if<DiskBundlePage>(&page)) {
      if (db->k() % 2 != 0) r.spin = false;
      r.chern.push_back(page_chern_class(*db));
    }
  }
  r.homology = book_connected_sum(parts);
  r.summands = identify(r.homology, {r.spin});
  r.identification = connected_sum_string(r.summands);
  r.almost_contact = admits_almost_contact(r.summands);
  return r;
}

namespace {

PrimeSummand summand_from_name(const std::string& s) {
  static const std::regex param(R"((M|X)\((\d+)\))");
  if (s == "S5") return PrimeSummand::s5();
  if (s == "M_inf") return PrimeSummand::m_inf();
  if (s == "X_inf") return PrimeSummand::x_inf();
  if (s == "X_wu") return PrimeSummand::x_wu();
  std::smatch m;
  if (std::regex_match(s, m, param)) {
    const long v = std::stol(m[2].str());
    try {
      return m[1] == "M" ? PrimeSummand::m(v) : PrimeSummand::x(v);
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
  }
  throw Error(ErrorKind::Parse, "unknown prime summand \"" + s + '"');
}

void to_json(nlohmann::json& j, const PageDiagnostics& d) {
  j = nlohmann::json{{"label", d.label}, {"kind", d.kind}, {"homology", d.homology}};
  if (d.wang) j["wang"] = *d.wang;
  if (d.binding) j["binding"] = *d.binding;
  if (d.t0) {
    nlohmann::json t;
    cob::to_json(t, *d.t0);
    j["t0"] = t;
  }
  if (d.legendrian)
    j["legendrian"] = {{"tb", d.legendrian->tb}, {"rot", d.legendrian->rot}, {"framing", d.legendrian->framing}};
  if (d.total_space) j["total_space"] = *d.total_space;
  if (d.chern) j["chern"] = *d.chern;
}

PageDiagnostics diagnostics_from_json(const nlohmann::json& j) {
  PageDiagnostics d;
  d.label = j.at("label").get<std::string>();
  d.kind = j.at("kind").get<std::string>();
  d.homology = j.at("homology").get<ClosedBookHomology>();
  if (j.contains("wang")) d.wang = j.at("wang").get<MappingTorusHomology>();
  if (j.contains("binding")) d.binding = j.at("binding").get<FgAbelianGroup>();
  if (j.contains("t0")) d.t0 = big_from_json(j.at("t0"));
  if (j.contains("legendrian")) {
    const auto& l = j.at("legendrian");
    d.legendrian = LegendrianInvariants{l.at("tb").get<long>(), l.at("rot").get<long>(), l.at("framing").get<long>()};
  }
  if (j.contains("total_space")) d.total_space = j.at("total_space").get<std::string>();
  if (j.contains("chern")) d.chern = j.at("chern").get<long>();
  return d;
}

}  // namespace

void to_json(nlohmann::json& j, const AnalysisReport& r) {
  nlohmann::json pages = nlohmann::json::array();
  for (const auto& p : r.pages) {
    nlohmann::json e;
    to_json(e, p);
    pages.push_back(std::move(e));
  }
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& s : r.summands) summands.push_back(s.name());
  j = nlohmann::json{{"pages", std::move(pages)},
                     {"homology", r.homology},
                     {"spin", r.spin},
                     {"chern", r.chern},
                     {"summands", std::move(summands)},
                     {"identification", r.identification},
                     {"almost_contact", r.almost_contact}};
}

void from_json(const nlohmann::json& j, AnalysisReport& r) {
  try {
    r.pages.clear();
    for (const auto& p : j.at("pages")) r.pages.push_back(diagnostics_from_json(p));
    r.homology = j.at("homology").get<ClosedBookHomology>();
    r.spin = j.at("spin").get<bool>();
    r.chern = j.at("chern").get<std::vector<long>>();
    r.summands.clear();
    for (const auto& s : j.at("summands")) r.summands.push_back(summand_from_name(s.get<std::string>()));
    r.identification = j.at("identification").get<std::string>();
    r.almost_contact = j.at("almost_contact").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed report: ") + e.what());
  }
}

namespace {

constexpr int kKeyWidth = 22;

void row(std::ostream& os, const std::string& key, const std::string& value) {
  os << std::left << std::setw(kKeyWidth) << key << value << '\n';
}

std::string list_string(const std::vector<long>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace

std::string format_text(const AnalysisReport& r) {
  std::ostringstream os;
  row(os, "identification", r.identification);
  row(os, "H1", "0");
  row(os, "H2", r.homology.h2.to_string());
  row(os, "H3", r.homology.h3.to_string());
  row(os, "spin", r.spin ? "yes" : "no");
  row(os, "chern", list_string(r.chern));
  row(os, "almost_contact", r.almost_contact ? "yes" : "no");
  for (std::size_t i = 0; i < r.pages.size(); ++i) {
    const auto& p = r.pages[i];
    row(os, "page[" + std::to_string(i) + "]", p.label);
    if (p.wang) {
      row(os, "  H2(mapping torus)", p.wang->h2.to_string());
      row(os, "  H3(mapping torus)", p.wang->h3.to_string());
    }
    if (p.binding) row(os, "  H(binding)", p.binding->to_string());
    if (p.t0) row(os, "  t0", p.t0->str());
    if (p.legendrian) {
      row(os, "  tb", std::to_string(p.legendrian->tb));
      row(os, "  rot", std::to_string(p.legendrian->rot));
      row(os, "  framing", std::to_string(p.legendrian->framing));
    }
    if (p.chern) row(os, "  chern", std::to_string(*p.chern));
    if (p.total_space) row(os, "  total space", *p.total_space);
    row(os, "  H2(X)", p.homology.h2.to_string());
  }
  return os.str();
}

TargetSpec target_of(const AnalysisReport& r) { return {r.homology.h2, r.spin, r.chern}; }

}  // namespace cob
