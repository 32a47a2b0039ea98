// Command-line front end: analytic profiles, oracles, verification, sweeps.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ruin/core.hpp"
#include "ruin/metrics.hpp"
#include "ruin/oracle.hpp"
#include "ruin/report.hpp"
#include "ruin/sweep.hpp"
#include "ruin/verify.hpp"

namespace {

using namespace ruin;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

struct RunConfig
{
    std::string p{"0.5"};
    std::string s{"0.5"};
    std::string i0{"1"};
    std::string strategy{"B"};
    int kmax{default_kmax};
    std::optional<double> z;
    std::uint64_t trials{1'000'000};
    std::uint64_t seed{42};
    std::int64_t max_steps{10'000'000};
    double tol{1e-10};
    std::string format;  // empty: subcommand default
    std::string out;
    bool conditional{false};
    bool quick{false};
    unsigned workers{0};
    std::string inject_fault;
};

int fail(std::string const& kind, std::string const& message)
{
    nlohmann::json err{{"error", message}, {"kind", kind}};
    std::cerr << err.dump() << "\n";
    return exit_usage;
}

double single_value(std::string const& flag, std::string const& text)
{
    auto const values = parse_range(text);
    if (values.size() != 1)
        throw ParameterError(flag + " takes a single value here");
    return values.front();
}

Instance instance_from(RunConfig const& cfg)
{
    auto const i0 = parse_int_range(cfg.i0);
    if (i0.size() != 1)
        throw ParameterError("--i0 takes a single value here");
    WalkParams params{single_value("--p", cfg.p), single_value("--s", cfg.s),
                      i0.front()};
    return validate(params, parse_strategy(cfg.strategy));
}

ReportOptions report_options(RunConfig const& cfg)
{
    if (!(cfg.tol > 0.0))
        throw ParameterError("--tol must be positive");
    if (cfg.kmax < 2)
        throw ParameterError("--kmax must be at least 2");
    ReportOptions opts;
    opts.kmax = cfg.kmax;
    opts.tol = cfg.tol;
    opts.conditional = cfg.conditional;
    opts.z = cfg.z;
    return opts;
}

std::string format_or(RunConfig const& cfg, std::string fallback)
{
    return cfg.format.empty() ? fallback : cfg.format;
}

//! Render an analytic or exact report.
std::string render(AnalyticReport const& report,
                   Instance const& inst,
                   ReportOptions opts,
                   std::string const& format,
                   bool exact)
{
    std::ostringstream os;
    if (format == "json")
        return emit_json(report);
    if (format == "table")
    {
        write_table(os, report);
        return os.str();
    }
    // CSV shares the sweep columns, at full precision
    opts.rounded = false;
    AnalyticReport const raw = exact ? build_exact_report(inst, opts)
                                     : build_analytic_report(inst, opts);
    os << sweep_header() << '\n' << sweep_row(raw) << '\n';
    return os.str();
}

template<class Report>
std::string render(Report const& report, std::string const& format)
{
    if (format == "json")
        return emit_json(report);
    std::ostringstream os;
    if (format == "table")
        write_table(os, report);
    else
        write_csv(os, report);
    return os.str();
}

int write_output(RunConfig const& cfg, std::string const& text)
{
    if (cfg.out.empty())
    {
        std::cout << text << std::flush;
        return exit_ok;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    file << text;
    file.close();
    if (!file)
        return fail("io", "cannot write " + cfg.out);
    return exit_ok;
}

int run(std::string const& command, RunConfig const& cfg)
{
    ReportOptions const opts = report_options(cfg);

    if (command == "analytic" || command == "exact")
    {
        Instance const inst = instance_from(cfg);
        bool const exact = command == "exact";
        AnalyticReport const report = exact ? build_exact_report(inst, opts)
                                            : build_analytic_report(inst, opts);
        return write_output(
            cfg, render(report, inst, opts, format_or(cfg, "json"), exact));
    }
    if (command == "mgf")
    {
        Instance const inst = instance_from(cfg);
        MgfReport const report = build_mgf_report(inst, cfg.z.value_or(1.0), opts);
        return write_output(cfg, render(report, format_or(cfg, "json")));
    }
    if (command == "simulate")
    {
        Instance const inst = instance_from(cfg);
        if (cfg.trials == 0)
            throw ParameterError("--trials must be positive");
        if (cfg.max_steps <= 0)
            throw ParameterError("--max-steps must be positive");
        SimConfig const sim{cfg.trials, cfg.seed, cfg.max_steps, cfg.workers};
        SimReport const report
            = build_sim_report(inst, simulate(inst, sim), cfg.conditional);
        return write_output(cfg, render(report, format_or(cfg, "json")));
    }
    if (command == "verify")
    {
        VerifyOptions vopts;
        vopts.quick = cfg.quick;
        vopts.trials = cfg.trials;
        vopts.seed = cfg.seed;
        vopts.max_steps = cfg.max_steps;
        vopts.workers = cfg.workers;
        vopts.exact_tol = std::min(cfg.tol, 1e-12);
        vopts.inject_fault = cfg.inject_fault;
        VerifyReport const report = run_verify(vopts);
        int const status = write_output(cfg, render(report, format_or(cfg, "table")));
        if (status != exit_ok)
            return status;
        if (!report.pass)
        {
            for (auto const& c : report.checks)
                if (!c.pass)
                    std::cerr << "failed: " << c.name << "\n";
            return exit_verify_failed;
        }
        return exit_ok;
    }
    if (command == "sweep")
    {
        if (!cfg.format.empty() && cfg.format != "csv")
            throw ParameterError("sweep writes CSV only");
        SweepGrid grid;
        grid.p = parse_range(cfg.p);
        grid.s = parse_range(cfg.s);
        grid.i0 = parse_int_range(cfg.i0);
        grid.strategies = parse_strategy_list(cfg.strategy);
        std::ostringstream os;
        run_sweep(os, grid, opts);
        return write_output(cfg, os.str());
    }
    return fail("usage", "unknown subcommand " + command);
}

void add_common(CLI::App* sub, RunConfig& cfg, bool ranges)
{
    std::string const range_note = ranges ? " (value or start:stop:step)" : "";
    sub->add_option("--p", cfg.p, "up-step probability" + range_note)
        ->capture_default_str();
    sub->add_option("--s", cfg.s, "stop probability at an mfb" + range_note)
        ->capture_default_str();
    sub->add_option("--i0", cfg.i0, "starting state and barrier spacing"
                                        + std::string(ranges ? " (n or a:b[:step])" : ""))
        ->capture_default_str();
    sub->add_option("--strategy",
                    cfg.strategy,
                    ranges ? "players, comma-separated (A,B,C)" : "player A, B or C")
        ->capture_default_str();
    sub->add_option("--kmax", cfg.kmax, "barriers reported individually")
        ->capture_default_str();
    sub->add_option("--tol", cfg.tol, "lattice solver tolerance")
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "write output to a file");
}

}  // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Gambler's-ruin walks with multiple function barriers"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 success, 1 verification failure, 2 usage or "
               "unsupported input (JSON error on stderr).");

    std::string const formats = "json, csv or table";
    auto* analytic = app.add_subcommand(
        "analytic", "closed-form absorption profile, mean times, diagnostics");
    auto* exact = app.add_subcommand(
        "exact", "the same profile from the truncated-lattice solver");
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimates");
    auto* verify = app.add_subcommand(
        "verify", "analytic vs exact vs Monte Carlo agreement suite");
    auto* sweep = app.add_subcommand("sweep", "analytic metrics over a grid, as CSV");
    auto* mgf = app.add_subcommand("mgf", "generating functions of arrival counts");

    for (auto* sub : {analytic, exact, simulate_cmd, mgf})
        add_common(sub, cfg, false);
    add_common(sweep, cfg, true);
    sweep->footer(sweep_columns_help());
    verify->add_option("--tol", cfg.tol, "lattice solver tolerance (capped at 1e-12)");
    verify->add_option("--out", cfg.out, "write output to a file");

    for (auto* sub : {analytic, exact, mgf})
        sub->add_option("--z", cfg.z, "generating-function argument in (0, 1]");
    for (auto* sub : {analytic, exact, simulate_cmd})
        sub->add_flag("--conditional",
                      cfg.conditional,
                      "add conditional mean times E[T | absorbed at k i0]");
    for (auto* sub : {simulate_cmd, verify})
    {
        sub->add_option("--trials", cfg.trials, "walks per point")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
        sub->add_option("--max-steps", cfg.max_steps, "step cap per walk")
            ->capture_default_str();
        sub->add_option("--workers", cfg.workers, "threads (0 = all cores)")
            ->capture_default_str();
    }
    for (auto* sub : {analytic, exact, simulate_cmd, verify, sweep, mgf})
        sub->add_option("--format", cfg.format, formats)
            ->check(CLI::IsMember({"json", "csv", "table"}));
    verify->add_flag("--quick", cfg.quick, "skip Monte Carlo");
    verify->add_option("--inject-fault", cfg.inject_fault)->group("");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::CallForAllHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        return fail("usage", e.what());
    }

    std::string const command = app.get_subcommands().front()->get_name();
    try
    {
        return run(command, cfg);
    }
    catch (ParameterError const& e)
    {
        return fail("usage", e.what());
    }
    catch (NotAlmostSure const& e)
    {
        return fail("not_almost_sure", e.what());
    }
    catch (UnsupportedRegime const& e)
    {
        return fail("unsupported", e.what());
    }
    catch (NumericalError const& e)
    {
        return fail("numerical", e.what());
    }
}
