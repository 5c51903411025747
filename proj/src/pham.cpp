#include "cob/pham.hpp"

#include <numeric>
#include <string>

#include "cob/error.hpp"

namespace cob {

BrieskornExponents::BrieskornExponents(std::vector<long> a) : a_(std::move(a)) {
  if (a_.size() < 2)
    throw Error(ErrorKind::InvalidExponent, "need at least two exponents, got " + std::to_string(a_.size()));
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] < 2)
      throw Error(ErrorKind::InvalidExponent,
                  "exponent a_" + std::to_string(i) + " = " + std::to_string(a_[i]) + " is below 2");
}

std::size_t BrieskornExponents::basis_size() const {
  std::size_t s = 1;
  for (long x : a_) {
    const auto f = static_cast<std::size_t>(x - 1);
    if (s > std::numeric_limits<std::size_t>::max() / f)
      return std::numeric_limits<std::size_t>::max();
    s *= f;
  }
  return s;
}

void BrieskornExponents::check_basis_size(std::size_t limit) const {
  const std::size_t s = basis_size();
  if (s > limit)
    throw Error(ErrorKind::MatrixTooLarge, "Pham basis of size " + std::to_string(s) +
                                               " exceeds the limit " + std::to_string(limit));
}

void to_json(nlohmann::json& j, const BrieskornExponents& a) {
  j = nlohmann::json::array();
  for (long x : a.values()) j.push_back(x);
}

BrieskornExponents exponents_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "exponents must be an integer list");
  std::vector<long> a;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw Error(ErrorKind::Parse, "exponents must be integers");
    a.push_back(e.get<long>());
  }
  return BrieskornExponents(std::move(a));
}

PhamBasis::PhamBasis(BrieskornExponents a) : a_(std::move(a)), stride_(a_.size()) {
  std::size_t s = 1;
  for (std::size_t j = 0; j < a_.size(); ++j) {
    stride_[j] = s;
    s *= static_cast<std::size_t>(a_[j] - 1);
  }
  size_ = s;
}

PhamIndex PhamBasis::at(std::size_t i) const {
  PhamIndex k(a_.size());
  for (std::size_t j = 0; j < a_.size(); ++j) {
    const auto w = static_cast<std::size_t>(a_[j] - 1);
    k[j] = static_cast<long>(i % w);
    i /= w;
  }
  return k;
}

std::size_t PhamBasis::position(std::span<const long> k) const {
  std::size_t i = 0;
  for (std::size_t j = 0; j < a_.size(); ++j) i += static_cast<std::size_t>(k[j]) * stride_[j];
  return i;
}

std::vector<PhamIndex> PhamBasis::elements() const {
  std::vector<PhamIndex> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

PhamBasis basis(const BrieskornExponents& a) { return PhamBasis(a); }

namespace {

long mod_pos(long x, long m) {
  const long r = x % m;
  return r < 0 ? r + m : r;
}

// Column of w^shift * w^k: each coordinate whose shifted exponent lands on
// a_j - 1 expands into -(1 + w_j + ... + w_j^(a_j - 2)), so the image is
// (-1)^(#expanded) times the product of those sums.
void accumulate_shifted(const PhamBasis& b, std::span<const long> shift, std::size_t col,
                        IntegerMatrix& out) {
  const auto& a = b.exponents();
  const std::size_t len = a.size();
  PhamIndex k = b.at(col);
  std::vector<std::size_t> expanded;
  for (std::size_t j = 0; j < len; ++j) {
    k[j] = mod_pos(k[j] + shift[j], a[j]);
    if (k[j] == a[j] - 1) {
      expanded.push_back(j);
      k[j] = 0;
    }
  }
  const int sign = expanded.size() % 2 == 0 ? 1 : -1;
  // Odometer over the expanded coordinates.
  for (;;) {
    out(b.position(k), col) += sign;
    std::size_t e = 0;
    for (; e < expanded.size(); ++e) {
      const std::size_t j = expanded[e];
      if (++k[j] <= a[j] - 2) break;
      k[j] = 0;
    }
    if (e == expanded.size()) break;
  }
}

}  // namespace

IntegerMatrix rotation_matrix(const BrieskornExponents& a, std::size_t j, long power) {
  if (j >= a.size())
    throw Error(ErrorKind::InvalidIndex, "coordinate " + std::to_string(j) + " out of range for " +
                                             std::to_string(a.size()) + " exponents");
  const PhamBasis b(a);
  std::vector<long> shift(a.size(), 0);
  shift[j] = power;
  IntegerMatrix m(b.size(), b.size());
  for (std::size_t c = 0; c < b.size(); ++c) accumulate_shifted(b, shift, c, m);
  return m;
}

IntegerMatrix full_monodromy_matrix(const BrieskornExponents& a) {
  const PhamBasis b(a);
  const std::vector<long> shift(a.size(), 1);
  IntegerMatrix m(b.size(), b.size());
  for (std::size_t c = 0; c < b.size(); ++c) accumulate_shifted(b, shift, c, m);
  return m;
}

unsigned long exponent_lcm(const BrieskornExponents& a) {
  unsigned long l = 1;
  for (long x : a.values()) l = std::lcm(l, static_cast<unsigned long>(x));
  return l;
}

}  // namespace cob
