#include "cob/barden.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cob/error.hpp"

namespace cob {

PrimeSummand PrimeSummand::m(long k) {
  if (!is_prime_power(BigInt(k)))
    throw std::invalid_argument("M(k) needs a prime power k, got " + std::to_string(k));
  return {Kind::M, k};
}

PrimeSummand PrimeSummand::x(long j) {
  if (j < 1) throw std::invalid_argument("X(j) needs j >= 1");
  return {Kind::X, j};
}

std::string PrimeSummand::name() const {
  switch (kind_) {
    case Kind::S5: return "S5";
    case Kind::M: return "M(" + std::to_string(param_) + ")";
    case Kind::MInf: return "M_inf";
    case Kind::XInf: return "X_inf";
    case Kind::X: return "X(" + std::to_string(param_) + ")";
    case Kind::XWu: return "X_wu";
  }
  return "?";
}

namespace {

int print_rank(PrimeSummand::Kind k) {
  using K = PrimeSummand::Kind;
  switch (k) {
    case K::XWu: return 0;
    case K::X: return 1;
    case K::XInf: return 2;
    case K::MInf: return 3;
    case K::M: return 4;
    case K::S5: return 5;
  }
  return 6;
}

bool is_x_type(PrimeSummand::Kind k) {
  using K = PrimeSummand::Kind;
  return k == K::XWu || k == K::X || k == K::XInf;
}

}  // namespace

std::strong_ordering PrimeSummand::operator<=>(const PrimeSummand& o) const {
  if (auto c = print_rank(kind_) <=> print_rank(o.kind_); c != 0) return c;
  return param_ <=> o.param_;
}

SummandInvariants summand_invariants(const PrimeSummand& s) {
  using K = PrimeSummand::Kind;
  switch (s.kind()) {
    case K::S5: return {{}, true, true};
    case K::M: return {FgAbelianGroup::homogeneous(s.parameter(), 2), true, true};
    case K::MInf: return {FgAbelianGroup::free(1), true, true};
    case K::XInf: return {FgAbelianGroup::free(1), false, true};
    case K::X: return {FgAbelianGroup::homogeneous(BigInt(1) << s.parameter(), 2), false, false};
    case K::XWu: return {FgAbelianGroup::cyclic(2), false, false};
  }
  return {};
}

SummandSet canonical(SummandSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::string connected_sum_string(const SummandSet& s) {
  const SummandSet sorted = canonical(s);
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += " # ";
    out += sorted[i].name();
  }
  return out.empty() ? "S5" : out;
}

bool admits_almost_contact(const SummandSet& summands) {
  const auto x_count = std::count_if(summands.begin(), summands.end(),
                                     [](const PrimeSummand& s) { return is_x_type(s.kind()); });
  if (x_count > 1)
    throw Error(ErrorKind::MultipleXSummands,
                "a prime decomposition has at most one X-type summand, got " + std::to_string(x_count));
  return std::all_of(summands.begin(), summands.end(),
                     [](const PrimeSummand& s) { return summand_invariants(s).w3_zero; });
}

std::vector<long> normalized_chern(const TargetSpec& t) {
  const std::size_t rank = t.h2.rank();
  std::vector<long> c = t.chern;
  if (c.empty() && rank > 0) {
    c.assign(rank, 0);
    if (!t.spin) c[0] = 1;
  }
  if (c.size() != rank)
    throw Error(ErrorKind::InvalidTarget, "chern lists one value per free generator: expected " +
                                              std::to_string(rank) + ", got " + std::to_string(c.size()));
  const auto odd = std::count_if(c.begin(), c.end(), [](long x) { return x % 2 != 0; });
  if (t.spin && odd != 0)
    throw Error(ErrorKind::ChernParityMismatch, "spin target needs every chern value even (c1 = w2 mod 2)");
  if (!t.spin && odd != 1)
    throw Error(ErrorKind::ChernParityMismatch,
                "non-spin target needs exactly one odd chern value (on the X_inf generator), got " +
                    std::to_string(odd));
  return c;
}

SummandSet decompose(const TargetSpec& t) {
  std::map<BigInt, std::size_t> counts;
  for (const auto& q : t.h2.primary_factors()) ++counts[q];
  SummandSet out;
  for (const auto& [q, n] : counts) {
    if (n % 2 != 0) {
      const bool two = q % 2 == 0;
      throw Error(ErrorKind::NotAlmostContact,
                  "torsion " + t.h2.to_string() + " is not of the form T + T (Z/" + q.str() +
                      " has multiplicity " + std::to_string(n) + ")" +
                      (two ? "; the class needs an X_j or Wu summand, which has W3 != 0" : ""));
    }
    const auto k = to_int64(q);
    if (!k) throw Error(ErrorKind::InvalidTarget, "torsion order " + q.str() + " is too large");
    for (std::size_t i = 0; i < n / 2; ++i) out.push_back(PrimeSummand::m(static_cast<long>(*k)));
  }
  const std::size_t rank = t.h2.rank();
  if (!t.spin && rank == 0)
    throw Error(ErrorKind::NotAlmostContact,
                "non-spin target with finite H_2 needs an X_j or Wu summand, which has W3 != 0");
  for (std::size_t i = 0; i < rank; ++i)
    out.push_back(!t.spin && i == 0 ? PrimeSummand::x_inf() : PrimeSummand::m_inf());
  if (out.empty()) out.push_back(PrimeSummand::s5());
  return canonical(std::move(out));
}

SummandSet identify(const ClosedBookHomology& h, const BookProvenance& provenance) {
  return decompose(TargetSpec{h.h2, provenance.spin, {}});
}

void validate_recipe(const OpenBookRecipe& r) {
  if (r.pages.empty()) throw Error(ErrorKind::InvalidRecipe, "recipe has no pages");
  const auto odd = std::count_if(r.pages.begin(), r.pages.end(), [](const PageSpec& p) {
    const auto* d = std::get_if<DiskBundlePage>(&p);
    return d && d->k() % 2 != 0;
  });
  if (odd > 1)
    throw Error(ErrorKind::InvalidRecipe,
                "at most one disk-bundle page may have odd k (one X_inf summand), got " + std::to_string(odd));
}

BrieskornExponents brieskorn_exponents_for(long prime_power) {
  const auto f = factorize(BigInt(prime_power));
  if (f.size() != 1) throw std::invalid_argument("not a prime power: " + std::to_string(prime_power));
  const BigInt& p = f.front().first;
  if (p == 2) return BrieskornExponents({prime_power, 3, 3});
  if (p == 3) return BrieskornExponents({prime_power, 4, 2});
  return BrieskornExponents({prime_power, 3, 2});
}

OpenBookRecipe realize(const TargetSpec& t) {
  const SummandSet summands = decompose(t);
  const std::vector<long> chern = normalized_chern(t);
  OpenBookRecipe recipe;
  for (long c : chern) {
    const long parity = c % 2 != 0 ? 1 : 0;
    const long k = std::max(2 + parity, std::abs(c) + 2);
    recipe.pages.emplace_back(DiskBundlePage(k, (k - 2 - c) / 2, (k - 2 + c) / 2));
  }
  for (const auto& s : summands)
    if (s.kind() == PrimeSummand::Kind::M)
      recipe.pages.emplace_back(BrieskornPage{brieskorn_exponents_for(s.parameter()), 0, 1});
  if (recipe.pages.empty()) recipe.pages.emplace_back(DiskPage{});
  return recipe;
}

void to_json(nlohmann::json& j, const TargetSpec& t) {
  j = nlohmann::json{{"h2", t.h2}, {"spin", t.spin}, {"chern", t.chern}};
}

TargetSpec target_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("h2"))
    throw Error(ErrorKind::Parse, "target must be {\"h2\": {...}, \"spin\": bool, \"chern\": [...]}");
  TargetSpec t;
  t.h2 = j.at("h2").get<FgAbelianGroup>();
  if (j.contains("spin")) {
    if (!j.at("spin").is_boolean()) throw Error(ErrorKind::Parse, "\"spin\" must be a boolean");
    t.spin = j.at("spin").get<bool>();
  }
  if (j.contains("chern")) {
    if (!j.at("chern").is_array()) throw Error(ErrorKind::Parse, "\"chern\" must be an array");
    for (const auto& c : j.at("chern")) {
      if (!c.is_number_integer()) throw Error(ErrorKind::Parse, "chern values must be integers");
      t.chern.push_back(c.get<long>());
    }
  }
  return t;
}

void to_json(nlohmann::json& j, const OpenBookRecipe& r) {
  nlohmann::json pages = nlohmann::json::array();
  for (const auto& p : r.pages) {
    nlohmann::json e;
    to_json(e, p);
    pages.push_back(std::move(e));
  }
  j = nlohmann::json{{"pages", std::move(pages)}};
}

OpenBookRecipe recipe_from_json(const nlohmann::json& j) {
  const nlohmann::json* pages = &j;
  if (j.is_object()) {
    if (!j.contains("pages")) throw Error(ErrorKind::Parse, "recipe needs a \"pages\" array");
    pages = &j.at("pages");
  }
  if (!pages->is_array()) throw Error(ErrorKind::Parse, "recipe pages must be an array");
  OpenBookRecipe r;
  for (const auto& p : *pages) r.pages.push_back(page_from_json(p));
  validate_recipe(r);
  return r;
}

}  // namespace cob
