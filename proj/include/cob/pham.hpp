#pragma once

// Middle homology of a Brieskorn variety through Pham's join retract.
//
// H_n is the quotient of the group ring Z[w_0, ..., w_n] by the ideal
// generated by 1 + w_j + ... + w_j^(a_j - 1). Monomials w^k with
// 0 <= k_j <= a_j - 2 form a lattice basis; multiplying by w_j acts on it.

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "cob/matrix.hpp"

namespace cob {

class BrieskornExponents {
 public:
  /// Throws Error(InvalidExponent) if fewer than two entries or any entry < 2.
  explicit BrieskornExponents(std::vector<long> a);

  std::span<const long> values() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.size(); }
  /// Index of the last coordinate: the variety has complex dimension n.
  std::size_t n() const noexcept { return a_.size() - 1; }
  long operator[](std::size_t j) const { return a_[j]; }

  /// prod (a_j - 1)
  std::size_t basis_size() const;
  /// Throws Error(MatrixTooLarge) if basis_size() exceeds `limit`.
  void check_basis_size(std::size_t limit) const;

  bool operator==(const BrieskornExponents&) const = default;

 private:
  std::vector<long> a_;
};

void to_json(nlohmann::json& j, const BrieskornExponents& a);
BrieskornExponents exponents_from_json(const nlohmann::json& j);

using PhamIndex = std::vector<long>;

class PhamBasis {
 public:
  explicit PhamBasis(BrieskornExponents a);

  const BrieskornExponents& exponents() const noexcept { return a_; }
  std::size_t size() const noexcept { return size_; }
  /// Index tuple of the i-th basis element; k_0 varies fastest.
  PhamIndex at(std::size_t i) const;
  std::size_t position(std::span<const long> k) const;
  std::vector<PhamIndex> elements() const;

 private:
  BrieskornExponents a_;
  std::vector<std::size_t> stride_;
  std::size_t size_;
};

PhamBasis basis(const BrieskornExponents& a);

/// Multiplication by w_j^power on the Pham basis, reduced modulo the ideal.
/// Negative powers are taken modulo a_j. Throws Error(InvalidIndex).
IntegerMatrix rotation_matrix(const BrieskornExponents& a, std::size_t j, long power);

/// Multiplication by w_0 w_1 ... w_n, the monodromy of the Milnor fibration.
IntegerMatrix full_monodromy_matrix(const BrieskornExponents& a);

/// lcm(a_0, ..., a_n)
unsigned long exponent_lcm(const BrieskornExponents& a);

}  // namespace cob
