#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cob/error.hpp"
#include "cob/openbook.hpp"
#include "oracles.hpp"

using cob::BrieskornExponents;
using cob::FgAbelianGroup;
using cob::IntegerMatrix;

namespace {

std::vector<cob::BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("Wang sequence for identity and rotations") {
  const auto id = cob::wang_homology(IntegerMatrix::identity(3));
  CHECK(id.h1 == FgAbelianGroup::free(1));
  CHECK(id.h2 == FgAbelianGroup::free(3));
  CHECK(id.h3 == FgAbelianGroup::free(3));
  CHECK(id.page_h2_rank == 3);
  const auto r = cob::wang_homology(cob::rotation_matrix(BrieskornExponents({5, 3, 2}), 0, 1));
  CHECK(r.h2.torsion() == big({5, 5}));
  CHECK(r.h3.is_trivial());
  CHECK_THROWS_AS(cob::wang_homology(IntegerMatrix(2, 3)), cob::Error);
}

TEST_CASE("binding homology of three-dimensional Brieskorn manifolds") {
  CHECK(cob::binding_homology(BrieskornExponents({5, 3, 2})).is_trivial());
  CHECK(cob::binding_homology(BrieskornExponents({7, 3, 2})).is_trivial());
  CHECK(cob::binding_homology(BrieskornExponents({2, 3, 3})).torsion() == big({2, 2}));
  CHECK(cob::binding_homology(BrieskornExponents({3, 4, 2})).torsion() == big({3}));
  CHECK(cob::binding_homology(BrieskornExponents({2, 2, 2})).torsion() == big({2}));
  CHECK(cob::binding_homology(BrieskornExponents({4, 3, 3})).torsion() == big({4, 4}));
  CHECK(cob::binding_homology(BrieskornExponents({8, 3, 3})).torsion() == big({8, 8}));
  CHECK(cob::binding_homology(BrieskornExponents({9, 4, 2})).torsion() == big({9}));
  CHECK_THROWS(cob::binding_homology(BrieskornExponents({3, 2})));
}

TEST_CASE("homology spheres are exactly the pairwise coprime triples") {
  for (long a = 2; a <= 8; ++a)
    for (long b = 2; b <= 8; ++b)
      for (long c = 2; c <= 8; ++c) {
        const std::vector<long> v{a, b, c};
        CHECK_MESSAGE(cob::is_homology_sphere(BrieskornExponents(v)) == oracle::pairwise_coprime(v),
                      a << "," << b << "," << c);
      }
}

TEST_CASE("assembly of the closed book") {
  auto mt = [](const std::vector<long>& v) {
    const BrieskornExponents a(v);
    return cob::wang_homology(cob::rotation_matrix(a, 0, 1));
  };
  // homology sphere binding
  const auto x5 = cob::assemble_closed_homology(mt({5, 3, 2}), FgAbelianGroup());
  CHECK(x5.h2.torsion() == big({5, 5}));
  CHECK(x5.h3.is_trivial());
  CHECK(x5.simply_connected);
  // homogeneous torsion, binding subtracts
  CHECK(cob::assemble_closed_homology(mt({2, 3, 3}), FgAbelianGroup::homogeneous(2, 2)).h2.torsion() ==
        big({2, 2}));
  CHECK(cob::assemble_closed_homology(mt({3, 4, 2}), FgAbelianGroup::cyclic(3)).h2.torsion() == big({3, 3}));
  // free H_2 with trivial binding
  const auto free = cob::assemble_closed_homology(cob::wang_homology(IntegerMatrix::identity(2)), FgAbelianGroup());
  CHECK(free.h2 == FgAbelianGroup::free(2));
  CHECK(free.h3 == FgAbelianGroup::free(2));
  // mixed primes, or binding larger than the mapping torus, are refused
  CHECK_THROWS_AS(cob::assemble_closed_homology(mt({2, 3, 3}), FgAbelianGroup::cyclic(6)), cob::Error);
  CHECK_THROWS_AS(cob::assemble_closed_homology(mt({3, 4, 2}), FgAbelianGroup::homogeneous(3, 4)), cob::Error);
  CHECK_THROWS_AS(cob::assemble_closed_homology(cob::wang_homology(IntegerMatrix::identity(1)),
                                                FgAbelianGroup::cyclic(2)),
                  cob::Error);
}

TEST_CASE("five-dimensional Brieskorn bindings") {
  CHECK(cob::remark_higher_binding(BrieskornExponents({5, 3, 3, 3})).torsion() == big({5, 5}));
  CHECK(cob::remark_higher_binding(BrieskornExponents({5, 2, 4, 4})).torsion() == big({5, 5}));
  CHECK(cob::remark_higher_binding(BrieskornExponents({7, 3, 3, 3})).torsion() == big({7, 7}));
  const auto z = cob::binding_homology(BrieskornExponents({2, 2, 2, 2}));
  CHECK(z == FgAbelianGroup::free(1));
  CHECK_THROWS(cob::remark_higher_binding(BrieskornExponents({5, 3, 2})));
}

TEST_CASE("book-connected sums add H_2") {
  const std::vector<cob::ClosedBookHomology> parts{
      cob::ClosedBookHomology::from_h2(FgAbelianGroup::homogeneous(2, 2)),
      cob::ClosedBookHomology::from_h2(FgAbelianGroup::homogeneous(3, 2)),
      cob::ClosedBookHomology::from_h2(FgAbelianGroup::free(1)), cob::ClosedBookHomology::sphere()};
  const auto sum = cob::book_connected_sum(parts);
  CHECK(sum.h2 == FgAbelianGroup::from_cyclic_orders(1, big({6, 6})));
  CHECK(sum.h3 == FgAbelianGroup::free(1));
  CHECK(cob::book_connected_sum(std::span<const cob::ClosedBookHomology>{}) == cob::ClosedBookHomology::sphere());
}

TEST_CASE("JSON of closed book homology") {
  const auto h = cob::ClosedBookHomology::from_h2(FgAbelianGroup::from_cyclic_orders(1, big({4})));
  nlohmann::json j = h;
  CHECK(j.dump() ==
        R"({"h1":{"rank":0,"torsion":[]},"h2":{"rank":1,"torsion":[4]},"h3":{"rank":1,"torsion":[]},"simply_connected":true})");
  CHECK(j.get<cob::ClosedBookHomology>() == h);
  cob::MappingTorusHomology mt = cob::wang_homology(IntegerMatrix::identity(2));
  nlohmann::json k = mt;
  CHECK(k.get<cob::MappingTorusHomology>() == mt);
}
