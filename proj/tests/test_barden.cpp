#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cob/barden.hpp"
#include "cob/error.hpp"

using cob::FgAbelianGroup;
using cob::PrimeSummand;
using cob::SummandSet;
using cob::TargetSpec;

namespace {

std::vector<cob::BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

cob::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const cob::Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return cob::ErrorKind::Parse;
}

// H_2 and spin flag of a connected sum, from the per-summand table.
TargetSpec invariants_of(const SummandSet& s) {
  TargetSpec t;
  for (const auto& p : s) {
    const auto inv = cob::summand_invariants(p);
    t.h2 = cob::direct_sum(t.h2, inv.h2);
    t.spin = t.spin && inv.w2_trivial;
  }
  return t;
}

}  // namespace

TEST_CASE("summand names and invariants") {
  CHECK(PrimeSummand::m(9).name() == "M(9)");
  CHECK(PrimeSummand::x(2).name() == "X(2)");
  CHECK_THROWS(PrimeSummand::m(6));
  CHECK_THROWS(PrimeSummand::m(1));
  CHECK(cob::summand_invariants(PrimeSummand::m(4)).h2.torsion() == big({4, 4}));
  CHECK(cob::summand_invariants(PrimeSummand::x_wu()).h2.torsion() == big({2}));
  CHECK_FALSE(cob::summand_invariants(PrimeSummand::x_wu()).w3_zero);
  CHECK_FALSE(cob::summand_invariants(PrimeSummand::x(1)).w3_zero);
  CHECK(cob::summand_invariants(PrimeSummand::x_inf()).w3_zero);
  CHECK_FALSE(cob::summand_invariants(PrimeSummand::x_inf()).w2_trivial);
  CHECK(cob::summand_invariants(PrimeSummand::s5()).h2.is_trivial());
}

TEST_CASE("connected sum strings use the canonical order") {
  CHECK(cob::connected_sum_string({}) == "S5");
  CHECK(cob::connected_sum_string(cob::canonical({PrimeSummand::m(4), PrimeSummand::m_inf(), PrimeSummand::m_inf()})) ==
        "M_inf # M_inf # M(4)");
  CHECK(cob::connected_sum_string(cob::canonical({PrimeSummand::m(9), PrimeSummand::x_inf()})) == "X_inf # M(9)");
}

TEST_CASE("almost contact test") {
  CHECK(cob::admits_almost_contact({PrimeSummand::x_inf(), PrimeSummand::m(5)}));
  CHECK_FALSE(cob::admits_almost_contact({PrimeSummand::x_wu()}));
  CHECK_FALSE(cob::admits_almost_contact({PrimeSummand::x(2)}));
  CHECK(kind_of([] { cob::admits_almost_contact({PrimeSummand::x_inf(), PrimeSummand::x_inf()}); }) ==
        cob::ErrorKind::MultipleXSummands);
}

TEST_CASE("decompose") {
  CHECK(cob::decompose({FgAbelianGroup::homogeneous(5, 2), true, {}}) == SummandSet{PrimeSummand::m(5)});
  CHECK(cob::decompose({FgAbelianGroup::free(2), true, {}}) == SummandSet{PrimeSummand::m_inf(), PrimeSummand::m_inf()});
  CHECK(cob::decompose({FgAbelianGroup::free(2), false, {}}) == SummandSet{PrimeSummand::x_inf(), PrimeSummand::m_inf()});
  CHECK(cob::decompose({FgAbelianGroup(), true, {}}) == SummandSet{PrimeSummand::s5()});
  CHECK(cob::decompose({FgAbelianGroup::from_cyclic_orders(0, big({6, 6})), true, {}}) ==
        SummandSet{PrimeSummand::m(2), PrimeSummand::m(3)});
  for (bool spin : {true, false})
    CHECK(kind_of([spin] { cob::decompose({FgAbelianGroup::cyclic(2), spin, {}}); }) ==
          cob::ErrorKind::NotAlmostContact);
  CHECK(kind_of([] { cob::decompose({FgAbelianGroup::homogeneous(5, 2), false, {}}); }) ==
        cob::ErrorKind::NotAlmostContact);
  CHECK(kind_of([] { cob::decompose({FgAbelianGroup::homogeneous(3, 3), true, {}}); }) ==
        cob::ErrorKind::NotAlmostContact);
}

TEST_CASE("decompose inverts the summand table on random multisets") {
  std::mt19937_64 rng(99);
  const std::vector<long> prime_powers{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};
  for (int trial = 0; trial < 300; ++trial) {
    SummandSet s;
    const std::size_t count = 1 + rng() % 6;
    bool have_x = false;
    for (std::size_t i = 0; i < count; ++i) {
      switch (rng() % 3) {
        case 0:
          s.push_back(PrimeSummand::m(prime_powers[rng() % prime_powers.size()]));
          break;
        case 1:
          s.push_back(PrimeSummand::m_inf());
          break;
        default:
          if (!have_x) {
            s.push_back(PrimeSummand::x_inf());
            have_x = true;
          } else {
            s.push_back(PrimeSummand::m_inf());
          }
      }
    }
    const auto t = invariants_of(s);
    const auto d = cob::decompose(t);
    CHECK(d == cob::canonical(s));
    CHECK(cob::admits_almost_contact(d));
  }
}

TEST_CASE("chern normalization") {
  CHECK(cob::normalized_chern({FgAbelianGroup::free(2), true, {}}) == std::vector<long>{0, 0});
  CHECK(cob::normalized_chern({FgAbelianGroup::free(2), false, {}}) == std::vector<long>{1, 0});
  CHECK(cob::normalized_chern({FgAbelianGroup::free(2), false, {3, -2}}) == std::vector<long>{3, -2});
  CHECK(kind_of([] { cob::normalized_chern({FgAbelianGroup::free(2), true, {1, 0}}); }) ==
        cob::ErrorKind::ChernParityMismatch);
  CHECK(kind_of([] { cob::normalized_chern({FgAbelianGroup::free(2), false, {2, 0}}); }) ==
        cob::ErrorKind::ChernParityMismatch);
  CHECK(kind_of([] { cob::normalized_chern({FgAbelianGroup::free(2), true, {0}}); }) == cob::ErrorKind::InvalidTarget);
}

TEST_CASE("realize picks the documented pages") {
  auto pages = [](const TargetSpec& t) { return cob::realize(t).pages; };
  CHECK(pages({FgAbelianGroup::homogeneous(25, 2), true, {}}) ==
        std::vector<cob::PageSpec>{cob::BrieskornPage{cob::BrieskornExponents({25, 3, 2})}});
  CHECK(pages({FgAbelianGroup::homogeneous(8, 2), true, {}}) ==
        std::vector<cob::PageSpec>{cob::BrieskornPage{cob::BrieskornExponents({8, 3, 3})}});
  CHECK(pages({FgAbelianGroup::homogeneous(9, 2), true, {}}) ==
        std::vector<cob::PageSpec>{cob::BrieskornPage{cob::BrieskornExponents({9, 4, 2})}});
  CHECK(pages({FgAbelianGroup::free(1), false, {3}}) == std::vector<cob::PageSpec>{cob::DiskBundlePage(5, 0, 3)});
  CHECK(pages({FgAbelianGroup::free(1), false, {1}}) == std::vector<cob::PageSpec>{cob::DiskBundlePage(3, 0, 1)});
  CHECK(pages({FgAbelianGroup::free(1), true, {0}}) == std::vector<cob::PageSpec>{cob::DiskBundlePage(2, 0, 0)});
  CHECK(pages({FgAbelianGroup::free(1), true, {-4}}) == std::vector<cob::PageSpec>{cob::DiskBundlePage(6, 4, 0)});
  CHECK(pages({FgAbelianGroup(), true, {}}) == std::vector<cob::PageSpec>{cob::DiskPage{}});
  CHECK(kind_of([] { cob::realize({FgAbelianGroup::cyclic(2), true, {}}); }) == cob::ErrorKind::NotAlmostContact);
}

TEST_CASE("recipe validation") {
  CHECK(kind_of([] { cob::validate_recipe({}); }) == cob::ErrorKind::InvalidRecipe);
  CHECK(kind_of([] {
          cob::validate_recipe({{cob::DiskBundlePage(3, 0, 1), cob::DiskBundlePage(5, 0, 3)}});
        }) == cob::ErrorKind::InvalidRecipe);
  CHECK_NOTHROW(cob::validate_recipe({{cob::DiskBundlePage(3, 0, 1), cob::DiskBundlePage(4, 0, 2)}}));
}

TEST_CASE("target and recipe JSON") {
  const TargetSpec t{FgAbelianGroup::from_cyclic_orders(1, big({9, 9})), false, {3}};
  nlohmann::json j;
  to_json(j, t);
  CHECK(cob::target_from_json(j) == t);
  const auto r = cob::realize(t);
  nlohmann::json k;
  to_json(k, r);
  CHECK(cob::recipe_from_json(k) == r);
  CHECK(cob::recipe_from_json(k.at("pages")) == r);
  CHECK_THROWS_AS(cob::target_from_json(nlohmann::json::parse(R"({"spin":true})")), cob::Error);
  CHECK_THROWS_AS(cob::recipe_from_json(nlohmann::json::parse("42")), cob::Error);
}
