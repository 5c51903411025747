#include "cob/contactgeom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cob/error.hpp"

namespace cob {

namespace {

void require_coordinate(const BrieskornExponents& a, std::size_t coordinate) {
  if (coordinate >= a.size())
    throw Error(ErrorKind::InvalidIndex, "coordinate " + std::to_string(coordinate) + " out of range");
}

BigInt lcm_of_others(const BrieskornExponents& a, std::size_t coordinate) {
  BigInt l = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == coordinate) continue;
    const long ai = a[i];
    const long g = std::gcd(a[coordinate], ai);
    if (g > 1) {
      std::ostringstream os;
      os << "a_" << coordinate << " = " << a[coordinate] << " and a_" << i << " = " << ai
         << " share the factor " << g << "; no isotopy time undoes the rotation";
      throw Error(ErrorKind::NonCoprime, os.str());
    }
    l = l / boost::multiprecision::gcd(l, BigInt(ai)) * ai;
  }
  return l;
}

// x with (l * x) = 1 (mod m), gcd(l, m) = 1.
long inverse_mod(long l, long m) {
  long old_r = l, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const long q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  const long x = old_s % m;
  return x < 0 ? x + m : x;
}

}  // namespace

BigInt crt_modulus(const BrieskornExponents& a) {
  BigInt l = 1;
  for (long x : a.values()) l = l / boost::multiprecision::gcd(l, BigInt(x)) * x;
  return l;
}

BigInt isotopy_parameter(const BrieskornExponents& a, std::size_t coordinate, long power) {
  require_coordinate(a, coordinate);
  const long m = a[coordinate];
  const BigInt l = lcm_of_others(a, coordinate);
  const long l_mod = static_cast<long>(l % m);
  const long target = ((-power) % m + m) % m;
  const long x = static_cast<long>((static_cast<__int128>(target) * inverse_mod(l_mod, m)) % m);
  return x == 0 ? BigInt(l * m) : BigInt(l * x);
}

std::vector<BigInt> isotopy_parameters(const BrieskornExponents& a, std::size_t count,
                                       std::size_t coordinate, long power) {
  const BigInt first = isotopy_parameter(a, coordinate, power);
  const BigInt step = lcm_of_others(a, coordinate) * a[coordinate];
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(first + step * i);
  return out;
}

std::vector<double> finite_difference(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  d[0] = (y[1] - y[0]) / (x[1] - x[0]);
  d[n - 1] = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i - 1]) / (x[i + 1] - x[i - 1]);
  return d;
}

namespace {

void check_grid(const std::vector<double>& r, std::initializer_list<const std::vector<double>*> values,
                bool starts_at_zero) {
  if (r.size() < kMinProfileGrid)
    throw Error(ErrorKind::GridTooCoarse, "profile grid has " + std::to_string(r.size()) +
                                              " points; at least " + std::to_string(kMinProfileGrid) +
                                              " required");
  for (const auto* v : values)
    if (v->size() != r.size()) throw Error(ErrorKind::InvalidProfile, "profile arrays differ in length");
  if (starts_at_zero && r.front() != 0.0) throw Error(ErrorKind::InvalidProfile, "grid must start at r = 0");
  if (r.front() < 0.0) throw Error(ErrorKind::InvalidProfile, "grid must be nonnegative");
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!(r[i] > r[i - 1])) throw Error(ErrorKind::InvalidProfile, "grid must be strictly increasing");
  for (const auto* v : values)
    for (double x : *v)
      if (!std::isfinite(x)) throw Error(ErrorKind::InvalidProfile, "profile values must be finite");
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string at_radius(double r) {
  std::ostringstream os;
  os << "at r = " << r;
  return os.str();
}

}  // namespace

ProfileVerdict validate_binding_profiles(const ProfileSample& p, double tolerance) {
  check_grid(p.r, {&p.h1, &p.h2}, true);
  if (p.collar < 0.0 || p.collar >= 1.0) throw Error(ErrorKind::InvalidProfile, "collar must lie in [0, 1)");
  const std::size_t n = p.r.size();
  const double radius = p.r.back();
  const double scale = max_abs(p.h1) * max_abs(p.h2) / (radius * radius);
  const double collar_start = (1.0 - p.collar) * radius;
  const auto in_collar = [&](std::size_t i) { return p.collar > 0.0 && p.r[i] >= collar_start; };

  for (std::size_t i = 0; i < n; ++i)
    if (!(p.h1[i] > 0.0)) return ProfileVerdict::fail("h1_not_positive", at_radius(p.r[i]));

  if (scale == 0.0) return ProfileVerdict::fail("wronskian_vanishes", "h2 is identically zero");

  // (h1 h2' - h2 h1') / r, continued to r = 0 by h2 ~ c r^2.
  const auto d1 = finite_difference(p.r, p.h1);
  const auto d2 = finite_difference(p.r, p.h2);
  const double c0 = p.h2[1] / (p.r[1] * p.r[1]);
  const double threshold = tolerance * scale;
  int sign = 0;
  for (std::size_t i = 0; i < n && !in_collar(i); ++i) {
    const double q = i == 0 ? 2.0 * c0 * p.h1[0] : (p.h1[i] * d2[i] - p.h2[i] * d1[i]) / p.r[i];
    if (!(std::abs(q) > threshold)) return ProfileVerdict::fail("wronskian_vanishes", at_radius(p.r[i]));
    const int s = q > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return ProfileVerdict::fail("wronskian_sign_change", at_radius(p.r[i]));
  }

  // Quadratic fit c r^2 on the inner tenth of the radius (at least 3 points).
  std::size_t inner = 0;
  while (inner < n && (p.r[inner] <= 0.1 * radius || inner < 3)) ++inner;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < inner; ++i) {
    const double r2 = p.r[i] * p.r[i];
    num += p.h2[i] * r2;
    den += r2 * r2;
  }
  const double c = num / den;
  const double fit_tol = tolerance * max_abs(p.h2);
  for (std::size_t i = 0; i < inner; ++i) {
    if (std::abs(p.h2[i] - c * p.r[i] * p.r[i]) > fit_tol)
      return ProfileVerdict::fail("not_quadratic_at_origin", at_radius(p.r[i]));
  }

  if (p.collar > 0.0) {
    double lo1 = INFINITY, hi1 = -INFINITY, lo2 = INFINITY, hi2 = -INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_collar(i)) continue;
      lo1 = std::min(lo1, p.h1[i]);
      hi1 = std::max(hi1, p.h1[i]);
      lo2 = std::min(lo2, p.h2[i]);
      hi2 = std::max(hi2, p.h2[i]);
    }
    if (hi1 - lo1 > tolerance * max_abs(p.h1) || hi2 - lo2 > tolerance * max_abs(p.h2))
      return ProfileVerdict::fail("collar_not_constant", "on r >= " + std::to_string(collar_start));
  }
  return ProfileVerdict::ok();
}

ProfileVerdict validate_deformation_profile(const DeformationProfile& d, double tolerance) {
  check_grid(d.r, {&d.f}, false);
  if (!(d.r1 > d.r0 + 1.0)) throw Error(ErrorKind::InvalidProfile, "need r1 > r0 + 1");
  if (!(d.r0 > 0.0)) throw Error(ErrorKind::InvalidProfile, "need r0 > 0");
  if (!(d.epsilon > 0.0 && d.epsilon < 1.0)) throw Error(ErrorKind::InvalidProfile, "epsilon must lie in (0, 1)");
  if (d.r.back() < d.r1) throw Error(ErrorKind::InvalidProfile, "grid must extend to r1");

  for (std::size_t i = 0; i < d.r.size(); ++i) {
    if (d.r[i] <= d.r0 && std::abs(d.f[i] - 1.0) > tolerance)
      return ProfileVerdict::fail("not_one_inside_r0", at_radius(d.r[i]));
    if (d.r[i] >= d.r1 && std::abs(d.f[i]) > tolerance)
      return ProfileVerdict::fail("not_zero_outside_r1", at_radius(d.r[i]));
  }
  const auto df = finite_difference(d.r, d.f);
  const double bound = 1.0 - d.epsilon;
  for (std::size_t i = 0; i < d.r.size(); ++i) {
    if (!(std::abs(df[i]) < bound)) {
      std::ostringstream os;
      os << "|f'| = " << std::abs(df[i]) << " >= " << bound << ' ' << at_radius(d.r[i]);
      return ProfileVerdict::fail("slope_bound", os.str());
    }
  }
  return ProfileVerdict::ok();
}

namespace {

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(ErrorKind::Parse, std::string("profile needs a numeric array \"") + key + '"');
  std::vector<double> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_number()) throw Error(ErrorKind::Parse, std::string("\"") + key + "\" must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

double number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw Error(ErrorKind::Parse, std::string("profile needs a number \"") + key + '"');
  return j.at(key).get<double>();
}

}  // namespace

ProfileSample binding_profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "profile must be a JSON object");
  ProfileSample p{number_array(j, "r"), number_array(j, "h1"), number_array(j, "h2")};
  if (j.contains("collar")) p.collar = number(j, "collar");
  return p;
}

DeformationProfile deformation_profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "profile must be a JSON object");
  return {number_array(j, "r"), number_array(j, "f"), number(j, "r0"), number(j, "r1"), number(j, "epsilon")};
}

nlohmann::json to_json(const ProfileSample& p) {
  nlohmann::json j{{"r", p.r}, {"h1", p.h1}, {"h2", p.h2}};
  if (p.collar > 0.0) j["collar"] = p.collar;
  return j;
}

nlohmann::json to_json(const DeformationProfile& d) {
  return {{"r", d.r}, {"f", d.f}, {"r0", d.r0}, {"r1", d.r1}, {"epsilon", d.epsilon}};
}

ProfileSample reference_binding_profile(std::size_t points) {
  ProfileSample p;
  p.collar = 0.1;
  for (std::size_t i = 0; i < points; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(points - 1);
    double s;
    if (r <= 0.5) {
      s = r;
    } else if (r < 0.9) {
      // s' = 1 - 3u^2 + 2u^3 on u in [0, 1]
      const double u = (r - 0.5) / 0.4;
      s = 0.5 + 0.4 * (u - u * u * u + 0.5 * u * u * u * u);
    } else {
      s = 0.7;
    }
    p.r.push_back(r);
    p.h1.push_back(2.0 - s * s);
    p.h2.push_back(s * s);
  }
  return p;
}

}  // namespace cob
