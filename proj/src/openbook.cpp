#include "cob/openbook.hpp"

#include <optional>
#include <string>

#include "cob/error.hpp"

namespace cob {

ClosedBookHomology ClosedBookHomology::from_h2(FgAbelianGroup h2) {
  ClosedBookHomology h;
  h.h3 = FgAbelianGroup::free(h2.rank());
  h.h2 = std::move(h2);
  return h;
}

MappingTorusHomology wang_homology(const IntegerMatrix& monodromy_on_h2) {
  if (!monodromy_on_h2.is_square())
    throw Error(ErrorKind::NonSquare, "monodromy matrix is " + std::to_string(monodromy_on_h2.rows()) +
                                          "x" + std::to_string(monodromy_on_h2.cols()));
  const IntegerMatrix shifted =
      monodromy_on_h2 - IntegerMatrix::identity(monodromy_on_h2.rows());
  MappingTorusHomology h;
  h.h2 = cokernel(shifted);
  h.h3 = FgAbelianGroup::free(kernel_rank(shifted));
  h.page_h2_rank = monodromy_on_h2.rows();
  return h;
}

namespace {

void require_binding_dimension(const BrieskornExponents& a, std::size_t min_n) {
  if (a.n() < min_n)
    throw Error(ErrorKind::InvalidExponent, "binding homology needs at least " +
                                                std::to_string(min_n + 1) + " exponents");
}

}  // namespace

FgAbelianGroup binding_homology(const BrieskornExponents& a) {
  require_binding_dimension(a, 2);
  const IntegerMatrix h = full_monodromy_matrix(a);
  return cokernel(h - IntegerMatrix::identity(h.rows()));
}

bool is_homology_sphere(const BrieskornExponents& a) { return binding_homology(a).is_trivial(); }

namespace {

// (Z/m)^copies with m a prime power; nullopt otherwise. The trivial group
// does not match.
struct Homogeneous {
  BigInt m;
  std::size_t copies;
};

std::optional<Homogeneous> homogeneous_prime_power(const FgAbelianGroup& g) {
  if (!g.is_finite() || g.torsion().empty()) return std::nullopt;
  const BigInt& m = g.torsion().front();
  for (const auto& d : g.torsion())
    if (d != m) return std::nullopt;
  if (!is_prime_power(m)) return std::nullopt;
  return Homogeneous{m, g.torsion().size()};
}

}  // namespace

ClosedBookHomology assemble_closed_homology(const MappingTorusHomology& mt,
                                            const FgAbelianGroup& binding_h1) {
  // (iii) free H_2(A) over a homology-sphere binding
  if (mt.h2.is_free() && binding_h1.is_trivial()) return ClosedBookHomology::from_h2(mt.h2);
  // (i) homology-sphere binding: H_2(A n B) = H_2(B) = 0
  if (binding_h1.is_trivial()) return ClosedBookHomology::from_h2(mt.h2);

  // (ii) homogeneous prime-power torsion on both sides
  const auto page = homogeneous_prime_power(mt.h2);
  const auto bind = homogeneous_prime_power(binding_h1);
  if (!page || !bind)
    throw Error(ErrorKind::UnsupportedAssembly,
                "cannot assemble H_2(A) = " + mt.h2.to_string() + " with H_1(K) = " +
                    binding_h1.to_string() + ": both must be (Z/p^k)^n for one prime power");
  if (page->m != bind->m)
    throw Error(ErrorKind::UnsupportedAssembly, "torsion orders differ: H_2(A) = " + mt.h2.to_string() +
                                                    ", H_1(K) = " + binding_h1.to_string());
  if (bind->copies > page->copies)
    throw Error(ErrorKind::UnsupportedAssembly, "H_1(K) = " + binding_h1.to_string() +
                                                    " cannot inject into H_2(A) = " + mt.h2.to_string());
  return ClosedBookHomology::from_h2(FgAbelianGroup::homogeneous(page->m, page->copies - bind->copies));
}

FgAbelianGroup remark_higher_binding(const BrieskornExponents& a) {
  if (a.size() != 4)
    throw Error(ErrorKind::InvalidExponent,
                "five-dimensional Brieskorn manifolds take 4 exponents, got " + std::to_string(a.size()));
  return binding_homology(a);
}

ClosedBookHomology book_connected_sum(std::span<const ClosedBookHomology> reports) {
  FgAbelianGroup h2;
  for (const auto& r : reports) h2 = direct_sum(h2, r.h2);
  return ClosedBookHomology::from_h2(std::move(h2));
}

void to_json(nlohmann::json& j, const MappingTorusHomology& h) {
  j = nlohmann::json{{"h1", h.h1}, {"h2", h.h2}, {"h3", h.h3}, {"page_h2_rank", h.page_h2_rank}};
}

void from_json(const nlohmann::json& j, MappingTorusHomology& h) {
  h.h1 = j.at("h1").get<FgAbelianGroup>();
  h.h2 = j.at("h2").get<FgAbelianGroup>();
  h.h3 = j.at("h3").get<FgAbelianGroup>();
  h.page_h2_rank = j.at("page_h2_rank").get<std::size_t>();
}

void to_json(nlohmann::json& j, const ClosedBookHomology& h) {
  j = nlohmann::json{{"h1", h.h1()}, {"h2", h.h2}, {"h3", h.h3}, {"simply_connected", h.simply_connected}};
}

void from_json(const nlohmann::json& j, ClosedBookHomology& h) {
  if (!j.at("h1").get<FgAbelianGroup>().is_trivial())
    throw Error(ErrorKind::Parse, "closed book homology must have trivial H_1");
  h.h2 = j.at("h2").get<FgAbelianGroup>();
  h.h3 = j.at("h3").get<FgAbelianGroup>();
  h.simply_connected = j.at("simply_connected").get<bool>();
}

}  // namespace cob
