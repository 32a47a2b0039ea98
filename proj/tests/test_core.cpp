#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "ruin/core.hpp"

using namespace ruin;

TEST_CASE("validate accepts the documented domain")
{
    Instance const inst = validate({0.4, 0.5, 3}, Strategy::C);
    CHECK(inst.p() == 0.4);
    CHECK(inst.q() == doctest::Approx(0.6));
    CHECK(inst.omega() == doctest::Approx(2.0 / 3.0));
    CHECK(inst.i0() == 3);
    CHECK(inst.strategy == Strategy::C);
    CHECK_FALSE(inst.symmetric);
    CHECK(inst.regime == StopRegime::Sometimes);

    CHECK(validate({0.5, 0.0, 1}, Strategy::A).regime == StopRegime::Never);
    CHECK(validate({0.5, 1.0, 1}, Strategy::A).regime == StopRegime::Always);
}

TEST_CASE("validate rejects out-of-range parameters")
{
    double const nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate({0.0, 0.5, 1}, Strategy::A), ParameterError);
    CHECK_THROWS_AS(validate({1.0, 0.5, 1}, Strategy::A), ParameterError);
    CHECK_THROWS_AS(validate({1.2, 0.5, 1}, Strategy::A), ParameterError);
    CHECK_THROWS_AS(validate({nan, 0.5, 1}, Strategy::A), ParameterError);
    CHECK_THROWS_AS(validate({0.5, -0.1, 1}, Strategy::A), ParameterError);
    CHECK_THROWS_AS(validate({0.5, 1.1, 1}, Strategy::A), ParameterError);
    CHECK_THROWS_AS(validate({0.5, nan, 1}, Strategy::A), ParameterError);
    CHECK_THROWS_AS(validate({0.5, 0.5, 0}, Strategy::A), ParameterError);
    CHECK_THROWS_AS(validate({0.5, 0.5, -3}, Strategy::A), ParameterError);
}

TEST_CASE("symmetric flag only at exactly one half")
{
    CHECK(validate({0.5, 0.5, 1}, Strategy::B).symmetric);
    CHECK_FALSE(validate({0.5 + 1e-12, 0.5, 1}, Strategy::B).symmetric);
    CHECK_FALSE(validate({std::nextafter(0.5, 0.0), 0.5, 1}, Strategy::B).symmetric);
}

TEST_CASE("strategy names round-trip")
{
    for (Strategy s : {Strategy::A, Strategy::B, Strategy::C})
        CHECK(parse_strategy(std::string(1, to_char(s))) == s);
    CHECK(parse_strategy("b") == Strategy::B);
    CHECK_THROWS_AS(parse_strategy("D"), ParameterError);
    CHECK_THROWS_AS(parse_strategy(""), ParameterError);
    CHECK_THROWS_AS(parse_strategy("AB"), ParameterError);
}

TEST_CASE("lattice decomposition")
{
    LatticeState const st(11, 3);
    CHECK(st.segment() == 3);
    CHECK(st.offset() == 2);
    CHECK_FALSE(st.on_barrier());
    CHECK(LatticeState(9, 3).on_barrier());
    CHECK(LatticeState(0, 3).on_barrier());
    CHECK_THROWS_AS(LatticeState(-1, 3), ParameterError);
    CHECK_THROWS_AS(LatticeState(4, 0), ParameterError);
}

TEST_CASE("barrier sets by strategy")
{
    CHECK_FALSE(is_mfb(Strategy::A, 0));
    CHECK(is_mfb(Strategy::A, 1));
    CHECK(is_mfb(Strategy::B, 1));
    CHECK_FALSE(is_mfb(Strategy::C, 1));
    CHECK(is_mfb(Strategy::C, 2));
    CHECK(is_mfb(Strategy::C, 7));
}

TEST_CASE("stop probabilities follow the t = 0 rules")
{
    Instance const a = validate({0.4, 0.3, 2}, Strategy::A);
    Instance const b = validate({0.4, 0.3, 2}, Strategy::B);
    Instance const c = validate({0.4, 0.3, 2}, Strategy::C);

    // Ruin state always absorbs
    for (auto const* inst : {&a, &b, &c})
    {
        CHECK(stop_probability(*inst, 0, 5) == 1.0);
        CHECK(stop_probability(*inst, 1, 5) == 0.0);
        CHECK(stop_probability(*inst, 3, 0) == 0.0);
    }

    // A's start is already an mfb occasion, B's is not
    CHECK(stop_probability(a, 2, 0) == 0.3);
    CHECK(stop_probability(b, 2, 0) == 0.0);
    CHECK(stop_probability(b, 2, 4) == 0.3);
    CHECK(stop_probability(c, 2, 0) == 0.0);
    CHECK(stop_probability(c, 2, 4) == 0.0);
    CHECK(stop_probability(c, 4, 4) == 0.3);
    CHECK(stop_probability(a, LatticeState(6, 2), 9) == 0.3);
}

TEST_CASE("regime descriptions are distinct")
{
    CHECK(describe(StopRegime::Never) != describe(StopRegime::Always));
    CHECK(describe(StopRegime::Never) != describe(StopRegime::Sometimes));
}
