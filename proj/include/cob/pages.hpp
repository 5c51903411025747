#pragma once

// Stein pages used to build the open books, with their contact invariants.

#include <optional>
#include <set>
#include <string>
#include <variant>

#include <json.hpp>

#include "cob/openbook.hpp"
#include "cob/pham.hpp"

namespace cob {

struct LegendrianInvariants {
  long tb = 0;
  long rot = 0;
  long framing = 0;

  bool operator==(const LegendrianInvariants&) const = default;
};

/// Legendrian unknot stabilized stab_left times negatively and stab_right
/// times positively. Handle framing is tb - 1.
LegendrianInvariants legendrian_invariants(long stab_left, long stab_right);

/// Disk bundle over S^2 with Euler number -k, presented by a Legendrian unknot
/// with stab_left + stab_right = k - 2 stabilizations.
class DiskBundlePage {
 public:
  /// Throws Error(InvalidRecipe) unless k >= 2, counts >= 0 and they sum to k - 2.
  DiskBundlePage(long k, long stab_left, long stab_right);

  long k() const noexcept { return k_; }
  long stab_left() const noexcept { return stab_left_; }
  long stab_right() const noexcept { return stab_right_; }
  LegendrianInvariants invariants() const { return legendrian_invariants(stab_left_, stab_right_); }

  bool operator==(const DiskBundlePage&) const = default;

 private:
  long k_;
  long stab_left_;
  long stab_right_;
};

struct BrieskornPage {
  BrieskornExponents exponents;
  std::size_t rotated_coordinate = 0;
  long rotation_power = 1;

  bool operator==(const BrieskornPage&) const = default;
};

struct DiskPage {
  bool operator==(const DiskPage&) const = default;
};

using PageSpec = std::variant<DiskBundlePage, BrieskornPage, DiskPage>;

std::set<long> realizable_chern_values(long k);

long page_chern_class(const DiskBundlePage& p);

enum class SphereBundle { Trivial, Twisted };  // S^2 x S^3, S^2 x~ S^3

struct TrivialMonodromySpace {
  SphereBundle tag;
  long contact_chern;
  ClosedBookHomology homology;
};

std::string to_string(SphereBundle tag);

/// Open book (Sigma_k, id): the S^3-bundle over S^2 with w_2 = k mod 2.
TrivialMonodromySpace trivial_monodromy_total_space(const DiskBundlePage& p);

DiskBundlePage mirror(const DiskBundlePage& p);

std::string page_kind(const PageSpec& p);
/// Short human label, e.g. "disk_bundle(k=4,0,2)" or "brieskorn(5,3,2)".
std::string describe(const PageSpec& p);

void to_json(nlohmann::json& j, const PageSpec& p);
/// Throws Error(Parse) or Error(InvalidRecipe) on malformed input.
PageSpec page_from_json(const nlohmann::json& j);

}  // namespace cob
