#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cob/abelian.hpp"
#include "cob/error.hpp"
#include "cob/pham.hpp"

using cob::BrieskornExponents;
using cob::IntegerMatrix;

namespace {

cob::FgAbelianGroup coker_minus_id(const IntegerMatrix& m) {
  return cob::cokernel(m - IntegerMatrix::identity(m.rows()));
}

std::vector<cob::BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("exponent validation") {
  CHECK_THROWS_AS(BrieskornExponents({5}), cob::Error);
  CHECK_THROWS_AS(BrieskornExponents({5, 1, 2}), cob::Error);
  CHECK_NOTHROW(BrieskornExponents({2, 2}));
  const BrieskornExponents a({5, 3, 2});
  CHECK(a.basis_size() == 8);
  CHECK(a.n() == 2);
  CHECK_NOTHROW(a.check_basis_size(8));
  CHECK_THROWS_AS(a.check_basis_size(7), cob::Error);
  CHECK(cob::exponent_lcm(a) == 30);
  CHECK(cob::exponents_from_json(nlohmann::json::parse("[5,3,2]")) == a);
  CHECK_THROWS_AS(cob::exponents_from_json(nlohmann::json::parse("[5,\"x\"]")), cob::Error);
}

TEST_CASE("basis enumeration runs k_0 fastest") {
  const auto b = cob::basis(BrieskornExponents({4, 3, 2}));
  REQUIRE(b.size() == 6);
  CHECK(b.at(0) == cob::PhamIndex{0, 0, 0});
  CHECK(b.at(1) == cob::PhamIndex{1, 0, 0});
  CHECK(b.at(3) == cob::PhamIndex{0, 1, 0});
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.position(b.at(i)) == i);
  CHECK(b.elements().size() == 6);
}

TEST_CASE("rotation on a single coordinate") {
  // w acting on Z[w]/(1 + w + w^2): 1 -> w, w -> -1 - w.
  CHECK(cob::rotation_matrix(BrieskornExponents({3, 2}), 0, 1) == IntegerMatrix{{0, -1}, {1, -1}});
  CHECK_THROWS_AS(cob::rotation_matrix(BrieskornExponents({3, 2}), 2, 1), cob::Error);
}

TEST_CASE("rotation algebra") {
  for (const auto& v : {std::vector<long>{5, 3, 2}, {2, 3, 3}, {3, 4, 2}, {4, 3, 3}, {3, 3, 2, 2}}) {
    const BrieskornExponents a(v);
    const std::size_t n = a.basis_size();
    const IntegerMatrix id = IntegerMatrix::identity(n);
    IntegerMatrix product = id;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const IntegerMatrix r = cob::rotation_matrix(a, j, 1);
      CHECK(r.pow(static_cast<unsigned long>(a[j])) == id);
      CHECK(abs(r.determinant()) == 1);
      CHECK(cob::rotation_matrix(a, j, 2) == r * r);
      CHECK(cob::rotation_matrix(a, j, -1) * r == id);
      CHECK(cob::rotation_matrix(a, j, a[j]) == id);
      for (std::size_t i = 0; i < j; ++i) {
        const IntegerMatrix s = cob::rotation_matrix(a, i, 1);
        CHECK(r * s == s * r);
      }
      product = product * r;
    }
    const IntegerMatrix h = cob::full_monodromy_matrix(a);
    CHECK(h == product);
    CHECK(h.pow(cob::exponent_lcm(a)) == id);
    for (const auto& x : h.entries()) CHECK((x == 0 || x == 1 || x == -1));
  }
}

TEST_CASE("cokernels of the rotation on the first coordinate") {
  CHECK(coker_minus_id(cob::rotation_matrix(BrieskornExponents({5, 3, 2}), 0, 1)).torsion() == big({5, 5}));
  CHECK(coker_minus_id(cob::rotation_matrix(BrieskornExponents({2, 3, 3}), 0, 1)).torsion() == big({2, 2, 2, 2}));
  CHECK(coker_minus_id(cob::rotation_matrix(BrieskornExponents({3, 4, 2}), 0, 1)).torsion() == big({3, 3, 3}));
  // Multiplication by w_0 - 1 has cokernel (Z/a_0)^(prod of the other a_j - 1).
  for (const auto& v : {std::vector<long>{7, 3, 2}, {4, 3, 3}, {9, 4, 2}, {5, 4, 3}}) {
    const BrieskornExponents a(v);
    const auto g = coker_minus_id(cob::rotation_matrix(a, 0, 1));
    CHECK(g == cob::FgAbelianGroup::homogeneous(v[0], a.basis_size() / static_cast<std::size_t>(v[0] - 1)));
  }
}
