#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ruin/charpoly.hpp"
#include "ruin/mgf.hpp"
#include "ruin/oracle.hpp"
#include "support/frozen.hpp"

using namespace ruin;

namespace {

double const sqrt3 = std::sqrt(3.0);

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}  // namespace

TEST_CASE("symmetric walk at z = 1")
{
    WalkParams const params{0.5, 0.5, 1};
    CHECK(mgf_A(params, 1.0, 0) == doctest::Approx(2 - sqrt3).epsilon(1e-14));
    CHECK(mgf_A(params, 1.0, 1) == doctest::Approx(4 * (2 - sqrt3)).epsilon(1e-14));
    CHECK(mgf_B(params, 1.0, 1) == doctest::Approx((4 * (2 - sqrt3) - 1) / 0.5).epsilon(1e-13));
    CHECK(mgf_B(params, 1.0, 0) == doctest::Approx(2 * (2 - sqrt3)).epsilon(1e-14));
    CHECK(mgf_C(params, 1.0, 0) == doctest::Approx(1 / sqrt3).epsilon(1e-14));
    CHECK(mgf_C(params, 1.0, 1) == doctest::Approx(2 / sqrt3).epsilon(1e-14));
}

TEST_CASE("self-arrival term as z goes to zero")
{
    WalkParams const params{0.4, 0.3, 3};
    double const z = 1e-7;
    CHECK(mgf_A(params, z, 1) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(mgf_C(params, z, 1) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(mgf_B(params, z, 1)) < 1e-6);
    CHECK(std::abs(mgf_A(params, z, 0)) < 1e-6);
}

TEST_CASE("barrier values match the dense reference solve")
{
    for (auto const& f : frozen_mgfs)
    {
        Instance const inst = validate({f.p, f.s, f.i0}, parse_strategy(std::string(1, f.strategy)));
        CAPTURE(f.p);
        CAPTURE(f.s);
        CAPTURE(f.i0);
        CAPTURE(f.strategy);
        CAPTURE(f.z);
        CHECK(std::abs(mgf_value(inst, f.z, 0) - f.x0) < 1e-10);
        CHECK(std::abs(mgf_value(inst, f.z, 1) - f.x1) < 1e-10);
        CHECK(std::abs(mgf_value(inst, f.z, f.i0) - f.x_i0) < 1e-10);
        CHECK(std::abs(mgf_value(inst, f.z, 2 * f.i0) - f.x_2i0) < 1e-10);
        CHECK(std::abs(mgf_value(inst, f.z, 3 * f.i0) - f.x_3i0) < 1e-10);
    }
}

TEST_CASE("interior values agree with the step oracle")
{
    for (Strategy st : {Strategy::A, Strategy::B, Strategy::C})
    {
        Instance const inst = validate({0.5, 0.5, 2}, st);
        double const dp = mgf_dp(inst, 0.5, 1);
        CHECK(std::abs(mgf_interior(inst, 0.5, LatticeState(1, 2)) - dp) < 1e-9);
    }
    Instance const inst = validate({0.45, 0.3, 4}, Strategy::C);
    std::vector<double> const dp = mgf_dp_all(inst, 0.8, 16);
    for (std::int64_t j = 0; j <= 16; ++j)
        CHECK(std::abs(mgf_value(inst, 0.8, j) - dp[j]) < 1e-9);
}

TEST_CASE("interior coefficients reproduce their endpoints")
{
    for (Strategy st : {Strategy::A, Strategy::B, Strategy::C})
        for (double z : {0.4, 1.0})
            for (std::int64_t seg : {0, 1, 2})
            {
                Instance const inst = validate({0.4, 0.3, 3}, st);
                InteriorCoefficients const c = interior_coefficients(inst, z, seg);
                CHECK(c.value(0) == doctest::Approx(c.lower_outflow));
                CHECK(c.value(3) == doctest::Approx(c.upper_outflow));
                for (int n = 0; n <= 3; ++n)
                    CHECK(c.value(n) == doctest::Approx(c.from_coefficients(n)).epsilon(1e-10));
            }
    Instance const sym = validate({0.5, 0.4, 3}, Strategy::A);
    CHECK(interior_coefficients(sym, 1.0, 1).linear);
}

TEST_CASE("boundary relations next to the ruin state and below i0")
{
    WalkParams const params{0.4, 0.3, 3};
    double const z = 0.7;
    double const q = 0.6;
    double const p = 0.4;
    Instance const a = validate(params, Strategy::A);
    Instance const c = validate(params, Strategy::C);
    CHECK(rel(mgf_value(a, z, 1), q * z * mgf_value(a, z, 2)) < 1e-12);
    CHECK(rel(mgf_value(a, z, 0), q * z * mgf_value(a, z, 1)) < 1e-12);
    CHECK(rel(mgf_value(c, z, 2), p * z * mgf_value(c, z, 1) + q * z * mgf_value(c, z, 3)) < 1e-12);
}

TEST_CASE("closed-form recurrences")
{
    for (double z : {0.35, 0.8, 1.0})
        for (WalkParams params : {WalkParams{0.3, 0.2, 2}, WalkParams{0.6, 0.7, 3}, WalkParams{0.5, 0.5, 4}})
        {
            CharData const d = theta(z, params);
            PhiPair const phi = phi_roots(d);
            double const s = params.s;
            for (int k = 0; k <= 6; ++k)
            {
                double const u = mgf_A(params, z, k);
                double const v = mgf_B(params, z, k);
                CHECK(rel((k == 1 ? 1.0 : 0.0) + (1 - s) * v, u) < 1e-12);
            }
            for (int k = 2; k <= 6; ++k)
            {
                double const a = mgf_A(params, z, k + 1);
                double const b = d.theta * mgf_A(params, z, k);
                double const c = d.omega_pow * mgf_A(params, z, k - 1);
                CHECK(std::abs(a - b + c) / (a + b + c) < 1e-10);
                CHECK(rel(mgf_C(params, z, k + 1) / mgf_C(params, z, k), phi.phi2) < 1e-12);
            }
            double const w1 = mgf_C(params, z, 1);
            double const w2 = mgf_C(params, z, 2);
            CHECK(std::abs(d.omega_pow * w1 - (1 - s) * phi.phi1 * w2) / (d.omega_pow * w1) < 1e-10);
        }
}

TEST_CASE("values are finite, non-negative and nondecreasing in z")
{
    for (Strategy st : {Strategy::A, Strategy::B, Strategy::C})
    {
        Instance const inst = validate({0.55, 0.35, 3}, st);
        for (std::int64_t j = 0; j <= 10; ++j)
        {
            double prev = 0.0;
            for (int i = 1; i <= 10; ++i)
            {
                double const v = mgf_value(inst, 0.1 * i, j);
                CHECK(std::isfinite(v));
                CHECK(v >= 0.0);
                CHECK(v >= prev);
                prev = v;
            }
        }
    }
}

TEST_CASE("closed forms need 0 < s < 1")
{
    CHECK_THROWS(mgf_A({0.4, 0.0, 2}, 0.5, 1));
    CHECK_THROWS(mgf_B({0.4, 1.0, 2}, 0.5, 1));
    CHECK_THROWS(mgf_C({0.4, 0.5, 2}, 0.0, 1));
    CHECK_THROWS(mgf_C({0.4, 0.5, 2}, 1.5, 1));
}

TEST_CASE("player B with absorbing barriers")
{
    WalkParams const params{0.4, 1.0, 2};
    // Lower segment entered at i0 - 1; ruin endpoint value at z = 1
    CHECK(mgf_B_s1(S1Segment::Lower, 0, 1.0, params) == doctest::Approx(0.6).epsilon(1e-14));
    double const z = 0.7;
    CHECK(rel(mgf_B_s1(S1Segment::Lower, 2, z, params),
              0.4 * z * mgf_B_s1(S1Segment::Lower, 1, z, params))
          < 1e-12);
    CHECK_THROWS_AS(mgf_B_s1(S1Segment::Lower, 0, 1.0, {0.4, 0.5, 2}), UnsupportedRegime);
    CHECK_THROWS_AS(mgf_B_s1(S1Segment::Upper, 3, 1.0, params), ParameterError);
}
