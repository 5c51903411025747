#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <functional>

#include "cob/contactgeom.hpp"
#include "cob/error.hpp"
#include "oracles.hpp"

using cob::BrieskornExponents;
using cob::ProfileSample;

namespace {

ProfileSample sample(std::function<double(double)> h1, std::function<double(double)> h2, std::size_t n = 201) {
  ProfileSample p;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(n - 1);
    p.r.push_back(r);
    p.h1.push_back(h1(r));
    p.h2.push_back(h2(r));
  }
  return p;
}

cob::DeformationProfile deformation(std::function<double(double)> f, double r0, double r1, double eps) {
  cob::DeformationProfile d{{}, {}, r0, r1, eps};
  for (int i = 0; i <= 400; ++i) {
    const double r = 4.0 * i / 400.0;
    d.r.push_back(r);
    d.f.push_back(f(r));
  }
  return d;
}

double smoothstep_drop(double r, double r0, double r1) {
  const double t = std::clamp((r - r0) / (r1 - r0), 0.0, 1.0);
  return 1.0 - t * t * (3.0 - 2.0 * t);
}

nlohmann::json read(const std::string& name) {
  std::ifstream in(std::string(COB_DATA_DIR) + "/" + name);
  REQUIRE(in);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("isotopy parameter by CRT") {
  CHECK(cob::isotopy_parameter(BrieskornExponents({5, 3, 2})) == 24);
  CHECK(cob::isotopy_parameter(BrieskornExponents({2, 3, 3})) == 3);
  CHECK(cob::isotopy_parameter(BrieskornExponents({7, 3, 2})) == 6);
  CHECK(cob::crt_modulus(BrieskornExponents({5, 3, 2})) == 30);
  CHECK_THROWS_AS(cob::isotopy_parameter(BrieskornExponents({6, 3, 2})), cob::Error);
  CHECK_THROWS_AS(cob::isotopy_parameter(BrieskornExponents({5, 3, 2}), 3), cob::Error);
  const auto ts = cob::isotopy_parameters(BrieskornExponents({5, 3, 2}), 3);
  CHECK(ts == std::vector<cob::BigInt>{24, 54, 84});
}

TEST_CASE("isotopy parameter agrees with residue search") {
  for (long a0 = 2; a0 <= 8; ++a0)
    for (long a1 = 2; a1 <= 8; ++a1)
      for (long a2 = 2; a2 <= 8; ++a2)
        for (std::size_t j = 0; j < 3; ++j)
          for (long power : {1L, 2L, -1L}) {
            const std::vector<long> v{a0, a1, a2};
            const BrieskornExponents a(v);
            const auto expect = oracle::crt_brute_force(v, j, power);
            const bool coprime = std::gcd(v[j], std::lcm(v[(j + 1) % 3], v[(j + 2) % 3])) == 1;
            if (coprime) {
              REQUIRE(expect);
              CHECK(cob::isotopy_parameter(a, j, power) == *expect);
            } else {
              CHECK_THROWS_AS(cob::isotopy_parameter(a, j, power), cob::Error);
            }
          }
}

TEST_CASE("binding profile checks") {
  CHECK(cob::validate_binding_profiles(sample([](double r) { return 2 - r * r; }, [](double r) { return r * r; })).pass);
  CHECK(cob::validate_binding_profiles(sample([](double) { return 1.0; }, [](double r) { return r * r; })).pass);

  const auto prop = cob::validate_binding_profiles(
      sample([](double r) { return 1 + r * r; }, [](double r) { return 2 + 2 * r * r; }));
  CHECK_FALSE(prop.pass);
  CHECK(prop.violation == "wronskian_vanishes");

  const auto neg = cob::validate_binding_profiles(sample([](double r) { return 0.5 - r; }, [](double r) { return r * r; }));
  CHECK(neg.violation == "h1_not_positive");

  const auto linear = cob::validate_binding_profiles(sample([](double) { return 1.0; }, [](double r) { return r; }));
  CHECK(linear.violation == "not_quadratic_at_origin");

  // h2 = r^2 - r^4 turns around at r^2 = 1/2, so the Wronskian quotient flips sign.
  const auto flip = cob::validate_binding_profiles(
      sample([](double) { return 1.0; }, [](double r) { return r * r - 1.2 * r * r * r * r; }));
  CHECK(flip.violation == "wronskian_sign_change");

  auto collared = sample([](double r) { return 2 - r * r; }, [](double r) { return r * r; });
  collared.collar = 0.1;
  const auto moving = cob::validate_binding_profiles(collared);
  CHECK(moving.violation == "collar_not_constant");
}

TEST_CASE("profile verdicts do not depend on scale") {
  for (double s : {1e-4, 1.0, 1e4}) {
    CHECK(cob::validate_binding_profiles(
              sample([s](double r) { return s * (2 - r * r); }, [s](double r) { return s * r * r; }))
              .pass);
    CHECK(cob::validate_binding_profiles(
              sample([s](double r) { return s * (1 + r * r); }, [s](double r) { return 3 * s * (1 + r * r); }))
              .violation == "wronskian_vanishes");
  }
}

TEST_CASE("malformed profiles") {
  CHECK_THROWS_AS(cob::validate_binding_profiles(sample([](double) { return 1.0; }, [](double r) { return r * r; }, 10)),
                  cob::Error);
  try {
    cob::validate_binding_profiles(sample([](double) { return 1.0; }, [](double r) { return r * r; }, 10));
  } catch (const cob::Error& e) {
    CHECK(e.kind() == cob::ErrorKind::GridTooCoarse);
  }
  auto p = sample([](double) { return 1.0; }, [](double r) { return r * r; });
  p.h2.pop_back();
  CHECK_THROWS_AS(cob::validate_binding_profiles(p), cob::Error);
  auto q = sample([](double) { return 1.0; }, [](double r) { return r * r; });
  std::swap(q.r[3], q.r[4]);
  CHECK_THROWS_AS(cob::validate_binding_profiles(q), cob::Error);
  CHECK_THROWS_AS(cob::binding_profile_from_json(nlohmann::json::parse(R"({"r":[0,1]})")), cob::Error);
}

TEST_CASE("bundled reference profile") {
  const auto ref = cob::reference_binding_profile();
  CHECK(cob::validate_binding_profiles(ref).pass);
  const auto file = cob::binding_profile_from_json(read("reference_binding_profile.json"));
  REQUIRE(file.r.size() == ref.r.size());
  CHECK(file.collar == doctest::Approx(ref.collar));
  for (std::size_t i = 0; i < ref.r.size(); ++i) {
    CHECK(file.r[i] == doctest::Approx(ref.r[i]).epsilon(1e-12));
    CHECK(file.h1[i] == doctest::Approx(ref.h1[i]).epsilon(1e-12));
    CHECK(file.h2[i] == doctest::Approx(ref.h2[i]).epsilon(1e-12));
  }
  CHECK(cob::validate_binding_profiles(file).pass);
  const auto round = cob::binding_profile_from_json(cob::to_json(ref));
  CHECK(round.h2 == ref.h2);
}

TEST_CASE("deformation profile checks") {
  CHECK(cob::validate_deformation_profile(deformation([](double r) { return smoothstep_drop(r, 1, 3); }, 1, 3, 0.2)).pass);
  const auto steep = cob::validate_deformation_profile(
      deformation([](double r) { return std::clamp(2.5 - r, 0.0, 1.0); }, 1, 3, 0.2));
  CHECK(steep.violation == "slope_bound");
  // width 1.5: max slope 1, fails at eps 0.2
  CHECK(cob::validate_deformation_profile(deformation([](double r) { return smoothstep_drop(r, 1, 2.5); }, 1, 3, 0.2))
            .violation == "slope_bound");
  CHECK(cob::validate_deformation_profile(deformation([](double r) { return smoothstep_drop(r, 0.8, 3); }, 1, 3, 0.2))
            .violation == "not_one_inside_r0");
  CHECK(cob::validate_deformation_profile(deformation([](double r) { return smoothstep_drop(r, 1, 3.2); }, 1, 3, 0.2))
            .violation == "not_zero_outside_r1");
  CHECK_THROWS_AS(cob::validate_deformation_profile(deformation([](double r) { return smoothstep_drop(r, 1, 1.5); }, 1, 1.5, 0.2)),
                  cob::Error);
  CHECK_THROWS_AS(cob::validate_deformation_profile(deformation([](double r) { return smoothstep_drop(r, 1, 3); }, 1, 3, 1.5)),
                  cob::Error);
  CHECK(cob::validate_deformation_profile(cob::deformation_profile_from_json(read("examples/deformation_smoothstep.json"))).pass);
  CHECK(cob::validate_deformation_profile(cob::deformation_profile_from_json(read("examples/deformation_linear.json")))
            .violation == "slope_bound");
}

TEST_CASE("finite differences are exact on quadratics") {
  std::vector<double> x, y;
  for (int i = 0; i <= 10; ++i) {
    x.push_back(i * 0.1);
    y.push_back(3 * x.back() * x.back());
  }
  const auto d = cob::finite_difference(x, y);
  for (std::size_t i = 1; i + 1 < x.size(); ++i) CHECK(d[i] == doctest::Approx(6 * x[i]));
}
