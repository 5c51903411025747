#pragma once

// Finite checks left over from the analytic part of the construction: the
// CRT choice of the isotopy time t0, and numeric validation of the radial
// profile functions.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cob/bigint.hpp"
#include "cob/pham.hpp"

namespace cob {

/// Least t0 > 0 with t0 = -power (mod a_j) and t0 = 0 (mod a_i), i != j.
/// Throws Error(NonCoprime) when a_j shares a factor with another exponent.
BigInt isotopy_parameter(const BrieskornExponents& a, std::size_t coordinate = 0,
                         long power = 1);

/// The first `count` solutions, ascending; consecutive ones differ by the CRT
/// modulus a_j * lcm(others).
std::vector<BigInt> isotopy_parameters(const BrieskornExponents& a, std::size_t count,
                                       std::size_t coordinate = 0, long power = 1);

BigInt crt_modulus(const BrieskornExponents& a);

inline constexpr double kDefaultProfileTolerance = 1e-6;
inline constexpr std::size_t kMinProfileGrid = 16;

struct ProfileSample {
  std::vector<double> r;
  std::vector<double> h1;
  std::vector<double> h2;
  /// Fraction of the radius, at the outer edge, where the form must already
  /// agree with the mapping-torus form. 0 disables the collar check.
  double collar = 0.0;
};

struct DeformationProfile {
  std::vector<double> r;
  std::vector<double> f;
  double r0 = 0.0;
  double r1 = 0.0;
  double epsilon = 0.0;
};

struct ProfileVerdict {
  bool pass = true;
  std::string violation;  // empty on pass
  std::string detail;

  static ProfileVerdict ok() { return {}; }
  static ProfileVerdict fail(std::string what, std::string detail) {
    return {false, std::move(what), std::move(detail)};
  }
};

/// Checks that h1 * gamma + h2 * dphi is a contact form on K x D^2:
///   h1_not_positive        h1 <= 0 somewhere
///   wronskian_vanishes     |h1 h2' - h2 h1'| / r below tolerance
///   wronskian_sign_change  the quotient changes sign
///   not_quadratic_at_origin  h2 is not c r^2 near r = 0
///   collar_not_constant    h1 or h2 varies on the declared outer collar
/// The tolerance is relative to max|h1| * max|h2| / R^2.
/// Throws Error(GridTooCoarse) below kMinProfileGrid points and
/// Error(InvalidProfile) on malformed grids.
ProfileVerdict validate_binding_profiles(const ProfileSample& p,
                                         double tolerance = kDefaultProfileTolerance);

/// f == 1 on [0, r0], f == 0 on [r1, inf), |f'| < 1 - epsilon everywhere.
/// Violations: not_one_inside_r0, not_zero_outside_r1, slope_bound.
ProfileVerdict validate_deformation_profile(const DeformationProfile& d,
                                            double tolerance = kDefaultProfileTolerance);

/// Central differences inside, one-sided at the ends.
std::vector<double> finite_difference(const std::vector<double>& x,
                                      const std::vector<double>& y);

ProfileSample binding_profile_from_json(const nlohmann::json& j);
DeformationProfile deformation_profile_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProfileSample& p);
nlohmann::json to_json(const DeformationProfile& d);

/// h1 = 2 - s^2, h2 = s^2 with s(r) = r up to r = 1/2, then flattening with
/// zero slope at r = 0.9 and constant on the outer collar [0.9, 1].
ProfileSample reference_binding_profile(std::size_t points = 1001);

}  // namespace cob
