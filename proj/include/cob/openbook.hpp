#pragma once

#include <cstddef>
#include <span>

#include <json.hpp>

#include "cob/abelian.hpp"
#include "cob/pham.hpp"

namespace cob {

/// Homology of the mapping torus of a simply connected page with H_1 = H_3 = 0.
struct MappingTorusHomology {
  FgAbelianGroup h1 = FgAbelianGroup::free(1);
  FgAbelianGroup h2;
  FgAbelianGroup h3;
  std::size_t page_h2_rank = 0;

  bool operator==(const MappingTorusHomology&) const = default;
};

/// Homology of the closed open book X = A u B. H_0 = H_5 = Z and
/// H_1 = H_4 = 0 are implied; only the middle groups are stored.
struct ClosedBookHomology {
  FgAbelianGroup h2;
  FgAbelianGroup h3;
  bool simply_connected = true;

  FgAbelianGroup h1() const { return {}; }
  FgAbelianGroup h4() const { return {}; }

  /// Builds the report for a given H_2; H_3 is Z^rank(H_2) by duality.
  static ClosedBookHomology from_h2(FgAbelianGroup h2);
  static ClosedBookHomology sphere() { return from_h2({}); }

  bool operator==(const ClosedBookHomology&) const = default;
};

/// Wang sequence: H_2 = coker(M - id), H_3 = ker(M - id). Throws Error(NonSquare).
MappingTorusHomology wang_homology(const IntegerMatrix& monodromy_on_h2);

/// H_{n-1} of the Brieskorn manifold K = boundary of the page, computed as
/// coker(h - id) for the full monodromy h. Requires n >= 2.
FgAbelianGroup binding_homology(const BrieskornExponents& a);

bool is_homology_sphere(const BrieskornExponents& a);

/// Mayer-Vietoris for X = A u (K x D^2) in the three configurations where the
/// sequence splits far enough to read off H_2(X):
///   (i)   K is a homology sphere: H_2(X) = H_2(A);
///   (ii)  H_2(A) = (Z/m)^a, H_1(K) = (Z/m)^b with m a prime power, b <= a:
///         H_2(A n B) injects as a direct summand and H_2(X) = (Z/m)^(a-b);
///   (iii) H_2(A) free and K a homology sphere.
/// Anything else throws Error(UnsupportedAssembly).
ClosedBookHomology assemble_closed_homology(const MappingTorusHomology& mt,
                                            const FgAbelianGroup& binding_h1);

/// H_2 of a five-dimensional Brieskorn manifold (four exponents).
FgAbelianGroup remark_higher_binding(const BrieskornExponents& a);

/// Homology of the book-connected sum: H_2 adds.
ClosedBookHomology book_connected_sum(std::span<const ClosedBookHomology> reports);

void to_json(nlohmann::json& j, const MappingTorusHomology& h);
void from_json(const nlohmann::json& j, MappingTorusHomology& h);
void to_json(nlohmann::json& j, const ClosedBookHomology& h);
void from_json(const nlohmann::json& j, ClosedBookHomology& h);

}  // namespace cob
