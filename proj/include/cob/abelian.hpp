#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cob/bigint.hpp"
#include "cob/matrix.hpp"

namespace cob {

/// D = U * A * V with U, V unimodular and D diagonal in Smith form.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  std::size_t source_rows = 0;
  std::size_t source_cols = 0;

  /// Diagonal of D (length min(rows, cols)); nonnegative, each dividing the next.
  std::vector<BigInt> diagonal() const;
};

/// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk held in
/// invariant-factor form: every d >= 2 and d_i | d_{i+1}. Two values compare
/// equal exactly when the groups are isomorphic.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  /// Accepts any list of cyclic orders (entries 0 and 1 are dropped,
  /// negatives are taken in absolute value) and canonicalizes.
  static FgAbelianGroup from_cyclic_orders(std::size_t rank, std::vector<BigInt> orders);
  static FgAbelianGroup free(std::size_t rank) { return from_cyclic_orders(rank, {}); }
  static FgAbelianGroup cyclic(const BigInt& order) { return from_cyclic_orders(0, {order}); }
  /// (Z/m)^copies
  static FgAbelianGroup homogeneous(const BigInt& m, std::size_t copies);
  /// Throws Error(Parse) unless `torsion` is already a valid chain.
  static FgAbelianGroup from_canonical(std::size_t rank, std::vector<BigInt> torsion);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return rank_ == 0 && torsion_.empty(); }
  bool is_free() const noexcept { return torsion_.empty(); }
  bool is_finite() const noexcept { return rank_ == 0; }
  /// Order of the torsion subgroup (1 when torsion-free).
  BigInt torsion_order() const;

  /// Prime-power cyclic orders of the torsion subgroup, ascending.
  std::vector<BigInt> primary_factors() const;

  /// "0", "Z", "Z^2 + Z/5 + Z/5", ...
  std::string to_string() const;

  bool operator==(const FgAbelianGroup&) const = default;

 private:
  std::size_t rank_ = 0;
  std::vector<BigInt> torsion_;
};

/// Auto starts on int64 storage and restarts on big integers if an entry
/// outgrows it; Wide skips the first attempt. Both give identical output.
enum class SmithPrecision { Auto, Wide };

SmithDecomposition smith_normal_form(const IntegerMatrix& a,
                                     SmithPrecision precision = SmithPrecision::Auto);

/// Smith diagonal only, skipping the transform bookkeeping.
std::vector<BigInt> smith_invariants(const IntegerMatrix& a,
                                     SmithPrecision precision = SmithPrecision::Auto);

std::size_t matrix_rank(const IntegerMatrix& a);

/// Z^rows / image(A).
FgAbelianGroup cokernel(const IntegerMatrix& a);

/// Rank of the kernel lattice of A : Z^cols -> Z^rows.
std::size_t kernel_rank(const IntegerMatrix& a);

FgAbelianGroup direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h);

bool is_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h);

/// Trial-division factorization into (prime, exponent) pairs; n >= 1.
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n);
bool is_prime_power(const BigInt& n);

void to_json(nlohmann::json& j, const FgAbelianGroup& g);
void from_json(const nlohmann::json& j, FgAbelianGroup& g);

void to_json(nlohmann::json& j, const BigInt& x);
BigInt big_from_json(const nlohmann::json& j);

}  // namespace cob
