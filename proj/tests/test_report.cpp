#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ruin/report.hpp"
#include "ruin/sweep.hpp"
#include "ruin/verify.hpp"

using namespace ruin;

namespace {

Instance make(double p, double s, int i0, char st)
{
    return validate({p, s, i0}, parse_strategy(std::string(1, st)));
}

std::vector<std::string> lines(std::string const& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("rounding to 15 significant digits")
{
    CHECK(round_sig15(0.1 + 0.2) == 0.3);
    CHECK(round_sig15(0.0) == 0.0);
    CHECK(std::isinf(round_sig15(INFINITY)));
    CHECK(round_sig15(round_sig15(1.0 / 3.0)) == round_sig15(1.0 / 3.0));
    CHECK(format_full(0.1) == "0.1");
    CHECK(format_full(INFINITY) == "inf");
}

TEST_CASE("analytic report JSON round-trips")
{
    ReportOptions opts;
    opts.conditional = true;
    opts.z = 0.5;
    for (auto const& inst : {make(0.4, 0.5, 2, 'B'), make(0.5, 0.5, 1, 'C'),
                             make(0.7, 0.0, 2, 'A'), make(0.5, 1.0, 3, 'B'),
                             make(0.3, 0.0, 1, 'C')})
    {
        AnalyticReport const r = build_analytic_report(inst, opts);
        std::string const text = emit_json(r);
        AnalyticReport const back = parse_json<AnalyticReport>(text);
        CHECK(back == r);
        CHECK(emit_json(back) == text);
    }
}

TEST_CASE("analytic report carries the documented keys")
{
    AnalyticReport const r = build_analytic_report(make(0.5, 0.5, 1, 'B'), {});
    nlohmann::json const j = r;
    for (char const* key : {"params", "strategy", "absorption", "times", "diagnostics"})
        CHECK(j.contains(key));
    CHECK(j["absorption"].contains("p0"));
    CHECK(j["absorption"].contains("pk"));
    CHECK(j["absorption"].contains("tail_bound"));
    CHECK(j["times"].contains("m_total"));
    CHECK(j["times"].contains("et"));
    for (char const* key : {"tau1", "tau2", "theta", "phi1", "phi2"})
        CHECK(j["diagnostics"].contains(key));
    CHECK(j["absorption"]["p0"].get<double>() == doctest::Approx(4 - 2 * std::sqrt(3.0)).epsilon(1e-14));
    CHECK(j["times"]["et_source"] == "exact");
    CHECK(j["absorption"]["pk"].size() == 64);
    CHECK(j["times"]["et"].size() == 65);
}

TEST_CASE("non-finite and undefined values")
{
    AnalyticReport const r = build_analytic_report(make(0.7, 0.0, 2, 'A'), {});
    nlohmann::json const j = r;
    CHECK(j["times"]["m_total"] == "inf");
    AnalyticReport const s1 = build_analytic_report(make(0.4, 1.0, 2, 'B'), {});
    nlohmann::json const j1 = s1;
    CHECK(j1["diagnostics"]["theta"].is_null());
    CHECK(j1["bc_ratio"].is_null());
}

TEST_CASE("exact, mgf, simulation and verify reports round-trip")
{
    ReportOptions opts;
    opts.kmax = 6;
    opts.z = 0.8;
    Instance const inst = make(0.45, 0.3, 2, 'C');

    AnalyticReport const ex = build_exact_report(inst, opts);
    CHECK(ex.exact.has_value());
    CHECK(parse_json<AnalyticReport>(emit_json(ex)) == ex);

    for (double z : {0.4, 1.0})
    {
        MgfReport const m = build_mgf_report(inst, z, opts);
        CHECK(parse_json<MgfReport>(emit_json(m)) == m);
        for (auto const& e : m.barriers)
            CHECK(std::abs(e.value - e.oracle.value()) < 1e-9);
    }
    MgfReport const s0 = build_mgf_report(make(0.4, 0.0, 2, 'A'), 0.5, opts);
    CHECK(s0.source == "dp");
    CHECK_THROWS_AS(build_mgf_report(inst, 1.5, opts), ParameterError);

    SimConfig config;
    config.trials = 5000;
    SimReport const sim = build_sim_report(inst, simulate(inst, config), true);
    CHECK(parse_json<SimReport>(emit_json(sim)) == sim);

    VerifyReport v;
    v.pass = false;
    v.checks.push_back({"a", true, 1e-15, 1e-9, "x"});
    v.checks.push_back({"b", false, INFINITY, 1e-9, "y"});
    CHECK(parse_json<VerifyReport>(emit_json(v)) == v);
}

TEST_CASE("tables and CSV render")
{
    ReportOptions opts;
    opts.conditional = true;
    opts.kmax = 4;
    std::ostringstream os;
    write_table(os, build_analytic_report(make(0.4, 0.5, 2, 'B'), opts));
    CHECK(os.str().find("E[T | absorb]") != std::string::npos);

    std::ostringstream csv;
    write_csv(csv, build_mgf_report(make(0.4, 0.5, 2, 'B'), 0.5, opts));
    auto const rows = lines(csv.str());
    CHECK(rows.front() == "p,s,i0,strategy,z,position,barrier,value,oracle");
    CHECK(rows.size() == 1 + 5 + 2);
}

TEST_CASE("range parsing is decimal-exact")
{
    auto const r = parse_range("0.30:0.70:0.05");
    REQUIRE(r.size() == 9);
    CHECK(r[0] == 0.3);
    CHECK(r[4] == 0.5);
    CHECK(r[8] == 0.7);
    CHECK(parse_range("0.3:0.5:0.1") == std::vector<double>{0.3, 0.4, 0.5});
    CHECK(parse_range("0.5") == std::vector<double>{0.5});
    CHECK(parse_range("1e-1:3e-1:1e-1") == std::vector<double>{0.1, 0.2, 0.3});
    CHECK(parse_range("0.7:0.3:0.1").empty());
    CHECK(parse_int_range("1:5:2") == std::vector<int>{1, 3, 5});
    CHECK(parse_int_range("2:4") == std::vector<int>{2, 3, 4});
    CHECK(parse_int_range("3") == std::vector<int>{3});

    for (char const* bad : {"", "a", "0.1:0.2", "0.1:0.2:0", "0.1:0.2:-0.1", "0.1::0.1",
                            "0.1:0.2:0.1:0.1", "1x"})
        CHECK_THROWS_AS(parse_range(bad), ParameterError);
    for (char const* bad : {"", "1.5", "1:2:0", "0:2", "1:2:3:4"})
        CHECK_THROWS_AS(parse_int_range(bad), ParameterError);
    CHECK(parse_strategy_list("A,C") == std::vector<Strategy>{Strategy::A, Strategy::C});
    CHECK_THROWS_AS(parse_strategy_list("A,,C"), ParameterError);
}

TEST_CASE("sweep output")
{
    SweepGrid grid;
    grid.p = parse_range("0.3:0.5:0.1");
    grid.s = {0.5};
    grid.i0 = {2};
    grid.strategies = {Strategy::B};
    std::ostringstream os;
    run_sweep(os, grid, {});
    auto const rows = lines(os.str());
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == sweep_header());
    CHECK(rows[3].rfind("0.5,0.5,2,B,", 0) == 0);

    // bc_ratio is the last column and below one
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        double const ratio = std::stod(rows[i].substr(rows[i].rfind(',') + 1));
        CHECK(ratio < 1.0);
        CHECK(ratio > 0.0);
    }

    // Lexicographic order over (p, s, i0, strategy)
    grid.p = {0.4, 0.6};
    grid.s = {0.2, 0.8};
    grid.i0 = {1, 3};
    grid.strategies = {Strategy::A, Strategy::C};
    std::ostringstream big;
    run_sweep(big, grid, {});
    auto const all = lines(big.str());
    REQUIRE(all.size() == 17);
    CHECK(all[1].rfind("0.4,0.2,1,A,", 0) == 0);
    CHECK(all[2].rfind("0.4,0.2,1,C,", 0) == 0);
    CHECK(all[3].rfind("0.4,0.2,3,A,", 0) == 0);
    CHECK(all[5].rfind("0.4,0.8,1,A,", 0) == 0);
    CHECK(all[16].rfind("0.6,0.8,3,C,", 0) == 0);

    grid.p = {};
    std::ostringstream empty;
    run_sweep(empty, grid, {});
    CHECK(empty.str() == sweep_header() + "\n");

    grid.p = {1.0};
    std::ostringstream invalid;
    CHECK_THROWS_AS(run_sweep(invalid, grid, {}), ParameterError);
    CHECK(invalid.str().empty());
}

TEST_CASE("sweep header is stable")
{
    CHECK(sweep_header()
          == "p,s,i0,strategy,omega,tau1,tau2,theta,phi1,phi2,p0,p1,p2,p3,p_rest,tail_bound,"
             "escape_mass,m_total,et0,et1,et2,et3,et_rest,et_source,bc_ratio");
    CHECK(sweep_columns_help().find("bc_ratio") != std::string::npos);
}
