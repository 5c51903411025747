#include "cob/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>


#include "cob/error.hpp"

namespace cob {

namespace {

BigInt gcd_big(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

// Pairwise (gcd, lcm) sweep; afterwards each entry divides every later one.
void to_invariant_chain(std::vector<BigInt>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] % v[i] == 0) continue;
      BigInt g = gcd_big(v[i], v[j]);
      BigInt l = v[i] / g * v[j];
      v[i] = std::move(g);
      v[j] = std::move(l);
    }
  }
  std::erase_if(v, [](const BigInt& x) { return x == 1; });
}

}  // namespace

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(std::size_t rank, std::vector<BigInt> orders) {
  for (auto& d : orders) {
    if (d == 0) throw std::invalid_argument("FgAbelianGroup: cyclic order 0 (use rank)");
    if (d < 0) d = -d;
  }
  std::erase_if(orders, [](const BigInt& x) { return x == 1; });
  to_invariant_chain(orders);
  FgAbelianGroup g;
  g.rank_ = rank;
  g.torsion_ = std::move(orders);
  return g;
}

FgAbelianGroup FgAbelianGroup::homogeneous(const BigInt& m, std::size_t copies) {
  return from_cyclic_orders(0, std::vector<BigInt>(copies, m));
}

FgAbelianGroup FgAbelianGroup::from_canonical(std::size_t rank, std::vector<BigInt> torsion) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2)
      throw Error(ErrorKind::Parse, "torsion factor " + torsion[i].str() + " is below 2");
    if (i > 0 && torsion[i] % torsion[i - 1] != 0)
      throw Error(ErrorKind::Parse, "torsion factors " + torsion[i - 1].str() + ", " +
                                        torsion[i].str() + " break the divisibility chain");
  }
  FgAbelianGroup g;
  g.rank_ = rank;
  g.torsion_ = std::move(torsion);
  return g;
}

BigInt FgAbelianGroup::torsion_order() const {
  BigInt o = 1;
  for (const auto& d : torsion_) o *= d;
  return o;
}

std::vector<BigInt> FgAbelianGroup::primary_factors() const {
  std::vector<BigInt> out;
  for (const auto& d : torsion_) {
    for (const auto& [p, e] : factorize(d)) out.push_back(boost::multiprecision::pow(p, e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << 'Z';
    if (rank_ > 1) os << '^' << rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

std::size_t matrix_rank(const IntegerMatrix& a) {
  const auto d = smith_invariants(a);
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const BigInt& x) { return x != 0; }));
}

FgAbelianGroup cokernel(const IntegerMatrix& a) {
  const auto d = smith_invariants(a);
  std::size_t nonzero = 0;
  std::vector<BigInt> torsion;
  for (const auto& x : d) {
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) torsion.push_back(x);
  }
  // Smith diagonal is already a divisibility chain.
  return FgAbelianGroup::from_canonical(a.rows() - nonzero, std::move(torsion));
}

std::size_t kernel_rank(const IntegerMatrix& a) { return a.cols() - matrix_rank(a); }

FgAbelianGroup direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  std::vector<BigInt> t = g.torsion();
  t.insert(t.end(), h.torsion().begin(), h.torsion().end());
  return FgAbelianGroup::from_cyclic_orders(g.rank() + h.rank(), std::move(t));
}

bool is_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  return g.rank() == h.rank() && g.torsion() == h.torsion();
}

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<BigInt, unsigned>> out;
  for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime_power(const BigInt& n) { return n >= 2 && factorize(n).size() == 1; }

void to_json(nlohmann::json& j, const BigInt& x) {
  if (auto v = to_int64(x))
    j = *v;
  else
    j = x.str();
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                  [](char c) { return c >= '0' && c <= '9'; });
    if (digits && s != "-") return BigInt(s);
  }
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

void to_json(nlohmann::json& j, const FgAbelianGroup& g) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& d : g.torsion()) {
    nlohmann::json e;
    to_json(e, d);
    torsion.push_back(std::move(e));
  }
  j = nlohmann::json{{"rank", g.rank()}, {"torsion", std::move(torsion)}};
}

void from_json(const nlohmann::json& j, FgAbelianGroup& g) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("torsion"))
    throw Error(ErrorKind::Parse, "abelian group must be {\"rank\": n, \"torsion\": [...]}");
  const auto& r = j.at("rank");
  if (!r.is_number_unsigned() && !(r.is_number_integer() && r.get<std::int64_t>() >= 0))
    throw Error(ErrorKind::Parse, "rank must be a nonnegative integer");
  if (!j.at("torsion").is_array()) throw Error(ErrorKind::Parse, "torsion must be an array");
  std::vector<BigInt> t;
  for (const auto& e : j.at("torsion")) t.push_back(big_from_json(e));
  g = FgAbelianGroup::from_canonical(r.get<std::size_t>(), std::move(t));
}

}  // namespace cob
