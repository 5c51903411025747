#pragma once

// Barden's classification of simply connected five-manifolds, restricted to
// what is needed to decide and realize almost contact targets.

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

#include "cob/abelian.hpp"
#include "cob/openbook.hpp"
#include "cob/pages.hpp"

namespace cob {

class PrimeSummand {
 public:
  enum class Kind { S5, M, MInf, XInf, X, XWu };

  static PrimeSummand s5() { return {Kind::S5, 0}; }
  /// k must be a prime power >= 2.
  static PrimeSummand m(long k);
  static PrimeSummand m_inf() { return {Kind::MInf, 0}; }
  static PrimeSummand x_inf() { return {Kind::XInf, 0}; }
  /// X_j, H_2 = (Z/2^j)^2, j >= 1.
  static PrimeSummand x(long j);
  static PrimeSummand x_wu() { return {Kind::XWu, 0}; }

  Kind kind() const noexcept { return kind_; }
  long parameter() const noexcept { return param_; }

  /// "S5", "M(9)", "M_inf", "X_inf", "X(2)", "X_wu".
  std::string name() const;

  /// Canonical print order: X-types, then M_inf, then M(k) by k, then S5.
  std::strong_ordering operator<=>(const PrimeSummand& o) const;
  bool operator==(const PrimeSummand&) const = default;

 private:
  PrimeSummand(Kind kind, long param) : kind_(kind), param_(param) {}
  Kind kind_;
  long param_;
};

struct SummandInvariants {
  FgAbelianGroup h2;
  bool w2_trivial;
  bool w3_zero;
};

SummandInvariants summand_invariants(const PrimeSummand& s);

/// Sorted multiset.
using SummandSet = std::vector<PrimeSummand>;

SummandSet canonical(SummandSet s);
/// "M_inf # M_inf # M(4)"
std::string connected_sum_string(const SummandSet& s);

/// W_3 = 0 test. Throws Error(MultipleXSummands).
bool admits_almost_contact(const SummandSet& summands);

struct TargetSpec {
  FgAbelianGroup h2;
  bool spin = true;
  std::vector<long> chern;

  bool operator==(const TargetSpec&) const = default;
};

/// Chern vector with an empty list expanded to the default (all zero, or a
/// single 1 on the first generator when not spin). Throws
/// Error(ChernParityMismatch) or Error(InvalidTarget).
std::vector<long> normalized_chern(const TargetSpec& t);

/// Throws Error(NotAlmostContact) when the target needs an X_j or Wu summand.
SummandSet decompose(const TargetSpec& t);

/// Spin flag inferred from the pages that produced a closed book: a disk
/// bundle with odd k is the only source of w_2 != 0.
struct BookProvenance {
  bool spin = true;
};

SummandSet identify(const ClosedBookHomology& h, const BookProvenance& provenance);

struct OpenBookRecipe {
  std::vector<PageSpec> pages;

  bool operator==(const OpenBookRecipe&) const = default;
};

/// Throws Error(InvalidRecipe) if empty or with more than one odd disk bundle.
void validate_recipe(const OpenBookRecipe& r);

OpenBookRecipe realize(const TargetSpec& t);

/// Page choice for one M(p^k) summand.
BrieskornExponents brieskorn_exponents_for(long prime_power);

void to_json(nlohmann::json& j, const TargetSpec& t);
TargetSpec target_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const OpenBookRecipe& r);
/// Accepts {"pages": [...]} or a bare array of pages.
OpenBookRecipe recipe_from_json(const nlohmann::json& j);

}  // namespace cob
