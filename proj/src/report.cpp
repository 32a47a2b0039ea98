#include "ruin/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "ruin/charpoly.hpp"
#include "ruin/metrics.hpp"
#include "ruin/mgf.hpp"

namespace ruin {

using nlohmann::json;

namespace {

double const nan_value = std::numeric_limits<double>::quiet_NaN();

json num(double v)
{
    if (std::isnan(v))
        return nullptr;
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

json num(std::optional<double> const& v)
{
    return v ? num(*v) : json(nullptr);
}

double get_num(json const& j)
{
    if (j.is_null())
        return nan_value;
    if (j.is_string())
    {
        auto const& text = j.get_ref<std::string const&>();
        if (text == "inf")
            return std::numeric_limits<double>::infinity();
        if (text == "-inf")
            return -std::numeric_limits<double>::infinity();
        throw json::type_error::create(302, "unexpected number string " + text, &j);
    }
    return j.get<double>();
}

std::optional<double> get_opt(json const& j, char const* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return get_num(j.at(key));
}

json num_array(std::vector<double> const& values)
{
    json out = json::array();
    for (double v : values)
        out.push_back(num(v));
    return out;
}

std::vector<double> get_array(json const& j)
{
    std::vector<double> out;
    out.reserve(j.size());
    for (auto const& item : j)
        out.push_back(get_num(item));
    return out;
}

void round_in_place(double& v) { v = round_sig15(v); }

void round_in_place(std::optional<double>& v)
{
    if (v)
        *v = round_sig15(*v);
}

void round_in_place(std::vector<double>& values)
{
    for (double& v : values)
        v = round_sig15(v);
}

void round_report(AnalyticReport& r)
{
    round_in_place(r.params.q);
    round_in_place(r.params.omega);
    round_in_place(r.absorption.p0);
    round_in_place(r.absorption.pk);
    round_in_place(r.absorption.tail_bound);
    round_in_place(r.absorption.escape_mass);
    round_in_place(r.times.m_total);
    round_in_place(r.times.et);
    round_in_place(r.times.et_tail);
    if (r.times.conditional)
        for (auto& v : *r.times.conditional)
            round_in_place(v);
    round_in_place(r.diagnostics.tau1);
    round_in_place(r.diagnostics.tau2);
    round_in_place(r.diagnostics.theta);
    round_in_place(r.diagnostics.phi1);
    round_in_place(r.diagnostics.phi2);
    round_in_place(r.bc_ratio);
    if (r.mgf)
        round_in_place(r.mgf->values);
    if (r.exact)
        round_in_place(r.exact->error_estimate);
}

std::optional<double> ratio_or_none(double num, double den)
{
    if (den == 0.0)
        return std::nullopt;
    return num / den;
}

std::optional<std::vector<std::optional<double>>>
conditional_times(AbsorptionRecord const& a, TimesRecord const& t)
{
    std::vector<std::optional<double>> out(t.et.size());
    for (std::size_t k = 0; k < t.et.size(); ++k)
    {
        double const prob = k == 0 ? a.p0
                            : k <= a.pk.size() ? a.pk[k - 1]
                                               : 0.0;
        out[k] = ratio_or_none(t.et[k], prob);
    }
    return out;
}

bool analytic_mgf_available(Instance const& inst)
{
    return inst.regime == StopRegime::Sometimes;
}

//! Barrier values from the step-by-step or truncated-lattice oracle.
std::vector<double>
oracle_barrier_mgf(Instance const& inst, double z, int kmax, double tol)
{
    std::int64_t const last = static_cast<std::int64_t>(kmax) * inst.i0();
    std::vector<double> all;
    if (z < 1.0)
    {
        all = mgf_dp_all(inst, z, last, std::min(tol, 1e-13));
    }
    else
    {
        ExactSolution const sol = solve_exact(inst, tol);
        all = sol.visits;
    }
    std::vector<double> out(kmax + 1, 0.0);
    for (int k = 0; k <= kmax; ++k)
    {
        auto const pos = static_cast<std::size_t>(k) * inst.i0();
        out[k] = pos < all.size() ? all[pos] : 0.0;
    }
    return out;
}

MgfSummary barrier_mgf(Instance const& inst, double z, int kmax, double tol)
{
    MgfSummary out;
    out.z = z;
    if (analytic_mgf_available(inst))
    {
        out.source = "analytic";
        out.values.resize(kmax + 1);
        for (int k = 0; k <= kmax; ++k)
            out.values[k] = mgf_barrier(inst, z, k);
    }
    else
    {
        out.source = z < 1.0 ? "dp" : "exact";
        out.values = oracle_barrier_mgf(inst, z, kmax, tol);
    }
    return out;
}

void require_z(double z)
{
    if (!(z > 0.0 && z <= 1.0))
        throw ParameterError("z must lie in (0, 1]");
}

std::string fmt(double v, int digits)
{
    if (std::isnan(v))
        return "-";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string fmt6(double v) { return fmt(v, 6); }

std::string fmt6(std::optional<double> const& v)
{
    return v ? fmt6(*v) : std::string("-");
}

void pad(std::ostream& os, std::string const& text, std::size_t width)
{
    os << text;
    for (std::size_t i = text.size(); i < width; ++i)
        os << ' ';
}

std::string csv_opt(std::optional<double> const& v)
{
    return v ? format_full(*v) : std::string();
}

}  // namespace

double round_sig15(double value)
{
    if (!std::isfinite(value) || value == 0.0)
        return value;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    return std::strtod(buf, nullptr);
}

std::string format_full(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    // Shortest text that parses back to the same double
    char buf[64];
    auto const res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

//---------------------------------------------------------------------------//
// Builders
//---------------------------------------------------------------------------//

ParamsRecord make_params_record(Instance const& inst)
{
    return {inst.p(), inst.s(), inst.i0(), inst.q(), inst.omega()};
}

Diagnostics make_diagnostics(Instance const& inst)
{
    Diagnostics d;
    RootPair const roots = tau_roots(1.0, inst.params);
    d.tau1 = roots.tau1;
    d.tau2 = roots.tau2;
    if (inst.regime != StopRegime::Always)
    {
        CharData const data = theta(1.0, inst.params);
        PhiPair const phi = phi_roots(data);
        d.theta = data.theta;
        d.phi1 = phi.phi1;
        d.phi2 = phi.phi2;
    }
    return d;
}

AnalyticReport build_analytic_report(Instance const& inst,
                                     ReportOptions const& opts)
{
    if (opts.z)
        require_z(*opts.z);

    AnalyticReport r;
    r.params = make_params_record(inst);
    r.strategy = std::string(1, to_char(inst.strategy));
    r.source = "analytic";

    AbsorptionProfile const prof = absorption_profile(inst, opts.kmax);
    r.absorption = {prof.p0, prof.pk, prof.tail_bound, prof.escape_mass};

    try
    {
        TimeProfile const times = time_profile(inst, opts.kmax);
        r.times.m_total = times.m_total;
        r.times.et = times.et;
        r.times.et_tail = times.et_tail;
        r.times.source = "analytic";
    }
    catch (UnsupportedRegime const&)
    {
        // Per-barrier times at omega = 1 with stopping come from the lattice
        // solver; the total keeps its closed form.
        ExactSolution const sol = solve_exact(inst, opts.tol);
        r.times.m_total = mean_time_any(inst);
        r.times.et.assign(opts.kmax + 1, 0.0);
        double rest = 0.0;
        for (int k = 0; k <= sol.truncation_k; ++k)
        {
            if (k <= opts.kmax)
                r.times.et[k] = sol.killed_time(k);
            else
                rest += sol.killed_time(k);
        }
        r.times.et_tail = rest;
        r.times.source = "exact";
    }
    if (opts.conditional)
        r.times.conditional = conditional_times(r.absorption, r.times);

    r.diagnostics = make_diagnostics(inst);
    if (inst.regime == StopRegime::Sometimes)
        r.bc_ratio = bc_ratio(inst.params);
    if (opts.z)
        r.mgf = barrier_mgf(inst, *opts.z, opts.kmax, opts.tol);

    if (opts.rounded)
        round_report(r);
    return r;
}

AnalyticReport build_exact_report(Instance const& inst,
                                  ReportOptions const& opts)
{
    if (opts.z)
        require_z(*opts.z);

    ExactSolution const sol = solve_exact(inst, opts.tol);

    AnalyticReport r;
    r.params = make_params_record(inst);
    r.strategy = std::string(1, to_char(inst.strategy));
    r.source = "exact";

    r.absorption.p0 = sol.p0;
    r.absorption.pk.assign(opts.kmax, 0.0);
    r.times.et.assign(opts.kmax + 1, 0.0);
    r.times.et[0] = sol.killed_time(0);
    double tail = 0.0;
    double et_tail = 0.0;
    for (int k = 1; k <= sol.truncation_k; ++k)
    {
        if (k <= opts.kmax)
        {
            r.absorption.pk[k - 1] = sol.probability(k);
            r.times.et[k] = sol.killed_time(k);
        }
        else
        {
            tail += sol.probability(k);
            et_tail += sol.killed_time(k);
        }
    }
    r.absorption.tail_bound = tail;
    r.absorption.escape_mass = sol.escape_mass;
    r.times.m_total = sol.m_total;
    r.times.et_tail = et_tail;
    r.times.source = "exact";
    if (opts.conditional)
        r.times.conditional = conditional_times(r.absorption, r.times);

    r.diagnostics = make_diagnostics(inst);
    if (opts.z)
    {
        MgfSummary m;
        m.z = *opts.z;
        m.source = "exact";
        std::vector<double> const all
            = exact_mgf(inst, *opts.z, sol.truncation_k);
        m.values.assign(opts.kmax + 1, 0.0);
        for (int k = 0; k <= std::min(opts.kmax, sol.truncation_k); ++k)
            m.values[k] = all[static_cast<std::size_t>(k) * inst.i0()];
        r.mgf = std::move(m);
    }
    r.exact = ExactInfo{sol.truncation_k, sol.error_estimate};

    if (opts.rounded)
        round_report(r);
    return r;
}

MgfReport build_mgf_report(Instance const& inst,
                           double z,
                           ReportOptions const& opts)
{
    require_z(z);
    MgfReport r;
    r.params = make_params_record(inst);
    r.strategy = std::string(1, to_char(inst.strategy));
    r.z = z;

    int const i0 = inst.i0();
    int const kmax = opts.kmax;
    std::int64_t const last
        = std::max<std::int64_t>(static_cast<std::int64_t>(kmax) * i0, 2 * i0);

    std::vector<double> oracle;
    std::string oracle_source;
    if (z < 1.0)
    {
        oracle = mgf_dp_all(inst, z, last, std::min(opts.tol, 1e-13));
        oracle_source = "dp";
    }
    else
    {
        oracle = solve_exact(inst, opts.tol).visits;
        oracle_source = "exact";
    }
    auto oracle_at = [&](std::int64_t pos) -> std::optional<double> {
        if (pos < static_cast<std::int64_t>(oracle.size()))
            return oracle[pos];
        return std::nullopt;
    };

    bool const analytic = analytic_mgf_available(inst);
    r.source = analytic ? "analytic" : oracle_source;

    auto entry = [&](std::int64_t pos) {
        MgfEntry e;
        e.position = pos;
        if (analytic)
        {
            e.value = mgf_value(inst, z, pos);
            e.oracle = oracle_at(pos);
        }
        else
        {
            e.value = oracle_at(pos).value_or(0.0);
        }
        e.value = round_sig15(e.value);
        round_in_place(e.oracle);
        return e;
    };

    for (int k = 0; k <= kmax; ++k)
        r.barriers.push_back(entry(static_cast<std::int64_t>(k) * i0));
    for (std::int64_t pos = 1; pos < 2 * i0; ++pos)
        if (pos != i0)
            r.interior.push_back(entry(pos));

    r.params.q = round_sig15(r.params.q);
    r.params.omega = round_sig15(r.params.omega);
    return r;
}

SimReport build_sim_report(Instance const& inst,
                           SimResult const& result,
                           bool conditional)
{
    SimReport r;
    r.params = make_params_record(inst);
    r.params.q = round_sig15(r.params.q);
    r.params.omega = round_sig15(r.params.omega);
    r.strategy = std::string(1, to_char(inst.strategy));
    r.generator = result.generator;
    r.seed = result.seed;
    r.trials = result.trials;
    r.escaped = result.escaped;
    r.mean_time = round_sig15(result.mean_time);
    r.mean_time_se = round_sig15(result.mean_time_se);
    for (auto const& [pos, tally] : result.absorbed)
    {
        SimStateRecord s;
        s.position = pos;
        s.count = tally.count;
        s.probability = round_sig15(result.probability(pos));
        s.probability_se = round_sig15(result.probability_se(pos));
        s.killed_time = round_sig15(result.killed_time(pos));
        s.killed_time_se = round_sig15(result.killed_time_se(pos));
        if (conditional && tally.count > 0)
            s.conditional_time = round_sig15(
                static_cast<double>(tally.time_sum)
                / static_cast<double>(tally.count));
        r.states.push_back(s);
    }
    return r;
}

//---------------------------------------------------------------------------//
// JSON
//---------------------------------------------------------------------------//

void to_json(json& j, ParamsRecord const& r)
{
    j = json{{"p", num(r.p)},
             {"s", num(r.s)},
             {"i0", r.i0},
             {"q", num(r.q)},
             {"omega", num(r.omega)}};
}

void from_json(json const& j, ParamsRecord& r)
{
    r.p = get_num(j.at("p"));
    r.s = get_num(j.at("s"));
    r.i0 = j.at("i0").get<int>();
    r.q = get_num(j.at("q"));
    r.omega = get_num(j.at("omega"));
}

void to_json(json& j, Diagnostics const& r)
{
    j = json{{"tau1", num(r.tau1)},
             {"tau2", num(r.tau2)},
             {"theta", num(r.theta)},
             {"phi1", num(r.phi1)},
             {"phi2", num(r.phi2)}};
}

void from_json(json const& j, Diagnostics& r)
{
    r.tau1 = get_num(j.at("tau1"));
    r.tau2 = get_num(j.at("tau2"));
    r.theta = get_opt(j, "theta");
    r.phi1 = get_opt(j, "phi1");
    r.phi2 = get_opt(j, "phi2");
}

void to_json(json& j, AbsorptionRecord const& r)
{
    j = json{{"p0", num(r.p0)},
             {"pk", num_array(r.pk)},
             {"tail_bound", num(r.tail_bound)},
             {"escape_mass", num(r.escape_mass)}};
}

void from_json(json const& j, AbsorptionRecord& r)
{
    r.p0 = get_num(j.at("p0"));
    r.pk = get_array(j.at("pk"));
    r.tail_bound = get_num(j.at("tail_bound"));
    r.escape_mass = get_num(j.at("escape_mass"));
}

void to_json(json& j, TimesRecord const& r)
{
    j = json{{"m_total", num(r.m_total)},
             {"et", num_array(r.et)},
             {"et_tail", num(r.et_tail)},
             {"et_source", r.source}};
    if (r.conditional)
    {
        json c = json::array();
        for (auto const& v : *r.conditional)
            c.push_back(num(v));
        j["conditional_mean_times"] = std::move(c);
    }
}

void from_json(json const& j, TimesRecord& r)
{
    r.m_total = get_num(j.at("m_total"));
    r.et = get_array(j.at("et"));
    r.et_tail = get_num(j.at("et_tail"));
    r.source = j.at("et_source").get<std::string>();
    r.conditional.reset();
    if (j.contains("conditional_mean_times"))
    {
        std::vector<std::optional<double>> c;
        for (auto const& item : j.at("conditional_mean_times"))
            c.push_back(item.is_null() ? std::nullopt
                                       : std::optional<double>(get_num(item)));
        r.conditional = std::move(c);
    }
}

void to_json(json& j, ExactInfo const& r)
{
    j = json{{"truncation_k", r.truncation_k},
             {"error_estimate", num(r.error_estimate)}};
}

void from_json(json const& j, ExactInfo& r)
{
    r.truncation_k = j.at("truncation_k").get<int>();
    r.error_estimate = get_num(j.at("error_estimate"));
}

void to_json(json& j, MgfSummary const& r)
{
    j = json{{"z", num(r.z)},
             {"source", r.source},
             {"barrier_values", num_array(r.values)}};
}

void from_json(json const& j, MgfSummary& r)
{
    r.z = get_num(j.at("z"));
    r.source = j.at("source").get<std::string>();
    r.values = get_array(j.at("barrier_values"));
}

void to_json(json& j, AnalyticReport const& r)
{
    j = json{{"params", r.params},
             {"strategy", r.strategy},
             {"source", r.source},
             {"absorption", r.absorption},
             {"times", r.times},
             {"diagnostics", r.diagnostics},
             {"bc_ratio", num(r.bc_ratio)}};
    if (r.mgf)
        j["mgf"] = *r.mgf;
    if (r.exact)
        j["exact"] = *r.exact;
}

void from_json(json const& j, AnalyticReport& r)
{
    r.params = j.at("params").get<ParamsRecord>();
    r.strategy = j.at("strategy").get<std::string>();
    r.source = j.at("source").get<std::string>();
    r.absorption = j.at("absorption").get<AbsorptionRecord>();
    r.times = j.at("times").get<TimesRecord>();
    r.diagnostics = j.at("diagnostics").get<Diagnostics>();
    r.bc_ratio = get_opt(j, "bc_ratio");
    r.mgf.reset();
    r.exact.reset();
    if (j.contains("mgf"))
        r.mgf = j.at("mgf").get<MgfSummary>();
    if (j.contains("exact"))
        r.exact = j.at("exact").get<ExactInfo>();
}

void to_json(json& j, MgfEntry const& r)
{
    j = json{{"position", r.position},
             {"value", num(r.value)},
             {"oracle", num(r.oracle)}};
}

void from_json(json const& j, MgfEntry& r)
{
    r.position = j.at("position").get<std::int64_t>();
    r.value = get_num(j.at("value"));
    r.oracle = get_opt(j, "oracle");
}

void to_json(json& j, MgfReport const& r)
{
    j = json{{"params", r.params},
             {"strategy", r.strategy},
             {"z", num(r.z)},
             {"source", r.source},
             {"barriers", r.barriers},
             {"interior", r.interior}};
}

void from_json(json const& j, MgfReport& r)
{
    r.params = j.at("params").get<ParamsRecord>();
    r.strategy = j.at("strategy").get<std::string>();
    r.z = get_num(j.at("z"));
    r.source = j.at("source").get<std::string>();
    r.barriers = j.at("barriers").get<std::vector<MgfEntry>>();
    r.interior = j.at("interior").get<std::vector<MgfEntry>>();
}

void to_json(json& j, SimStateRecord const& r)
{
    j = json{{"position", r.position},
             {"count", r.count},
             {"probability", num(r.probability)},
             {"probability_se", num(r.probability_se)},
             {"killed_time", num(r.killed_time)},
             {"killed_time_se", num(r.killed_time_se)}};
    if (r.conditional_time)
        j["conditional_mean_time"] = num(*r.conditional_time);
}

void from_json(json const& j, SimStateRecord& r)
{
    r.position = j.at("position").get<std::int64_t>();
    r.count = j.at("count").get<std::uint64_t>();
    r.probability = get_num(j.at("probability"));
    r.probability_se = get_num(j.at("probability_se"));
    r.killed_time = get_num(j.at("killed_time"));
    r.killed_time_se = get_num(j.at("killed_time_se"));
    r.conditional_time = get_opt(j, "conditional_mean_time");
}

void to_json(json& j, SimReport const& r)
{
    j = json{{"params", r.params},
             {"strategy", r.strategy},
             {"generator", r.generator},
             {"seed", r.seed},
             {"trials", r.trials},
             {"escaped", r.escaped},
             {"mean_time", num(r.mean_time)},
             {"mean_time_se", num(r.mean_time_se)},
             {"states", r.states}};
}

void from_json(json const& j, SimReport& r)
{
    r.params = j.at("params").get<ParamsRecord>();
    r.strategy = j.at("strategy").get<std::string>();
    r.generator = j.at("generator").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trials = j.at("trials").get<std::uint64_t>();
    r.escaped = j.at("escaped").get<std::uint64_t>();
    r.mean_time = get_num(j.at("mean_time"));
    r.mean_time_se = get_num(j.at("mean_time_se"));
    r.states = j.at("states").get<std::vector<SimStateRecord>>();
}

void to_json(json& j, CheckRecord const& r)
{
    j = json{{"name", r.name},
             {"pass", r.pass},
             {"worst", num(r.worst)},
             {"tolerance", num(r.tolerance)},
             {"detail", r.detail}};
}

void from_json(json const& j, CheckRecord& r)
{
    r.name = j.at("name").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.worst = get_num(j.at("worst"));
    r.tolerance = get_num(j.at("tolerance"));
    r.detail = j.at("detail").get<std::string>();
}

void to_json(json& j, VerifyReport const& r)
{
    j = json{{"pass", r.pass}, {"checks", r.checks}};
}

void from_json(json const& j, VerifyReport& r)
{
    r.pass = j.at("pass").get<bool>();
    r.checks = j.at("checks").get<std::vector<CheckRecord>>();
}

//---------------------------------------------------------------------------//
// Tables
//---------------------------------------------------------------------------//

void write_table(std::ostream& os, AnalyticReport const& r)
{
    auto const& pr = r.params;
    os << "player " << r.strategy << "  p=" << fmt6(pr.p) << " s=" << fmt6(pr.s)
       << " i0=" << pr.i0 << "  (omega=" << fmt6(pr.omega)
       << ", source=" << r.source << ")\n";
    auto const& d = r.diagnostics;
    os << "tau1=" << fmt6(d.tau1) << " tau2=" << fmt6(d.tau2)
       << " theta=" << fmt6(d.theta) << " phi1=" << fmt6(d.phi1)
       << " phi2=" << fmt6(d.phi2) << "\n";
    os << "mean time to absorption: " << fmt6(r.times.m_total)
       << "  (per-barrier times: " << r.times.source << ")\n";
    if (r.bc_ratio)
        os << "B/C ratio: " << fmt6(r.bc_ratio) << "\n";

    bool const cond = r.times.conditional.has_value();
    pad(os, "k", 6);
    pad(os, "state", 8);
    pad(os, "P(absorb)", 14);
    pad(os, "E[T; absorb]", 14);
    if (cond)
        pad(os, "E[T | absorb]", 14);
    os << "\n";

    auto row = [&](std::size_t k, double prob) {
        pad(os, std::to_string(k), 6);
        pad(os, std::to_string(k * static_cast<std::size_t>(pr.i0)), 8);
        pad(os, fmt6(prob), 14);
        pad(os, k < r.times.et.size() ? fmt6(r.times.et[k]) : "-", 14);
        if (cond)
            pad(os,
                k < r.times.conditional->size()
                    ? fmt6((*r.times.conditional)[k])
                    : "-",
                14);
        os << "\n";
    };
    row(0, r.absorption.p0);
    for (std::size_t k = 1; k <= r.absorption.pk.size(); ++k)
    {
        double const prob = r.absorption.pk[k - 1];
        if (k > 4 && prob < 1e-6)
            continue;
        row(k, prob);
    }
    os << "beyond kmax: P=" << fmt6(r.absorption.tail_bound)
       << " E[T; absorb]=" << fmt6(r.times.et_tail) << "\n";
    if (r.absorption.escape_mass > 0)
        os << "never absorbed: " << fmt6(r.absorption.escape_mass) << "\n";
    if (r.mgf)
    {
        os << "barrier MGF at z=" << fmt6(r.mgf->z) << " (" << r.mgf->source
           << "):";
        for (std::size_t k = 0; k < std::min<std::size_t>(r.mgf->values.size(), 6);
             ++k)
            os << " " << fmt6(r.mgf->values[k]);
        os << "\n";
    }
    if (r.exact)
        os << "truncation K=" << r.exact->truncation_k
           << " error estimate=" << fmt6(r.exact->error_estimate) << "\n";
}

void write_table(std::ostream& os, MgfReport const& r)
{
    os << "player " << r.strategy << "  p=" << fmt6(r.params.p)
       << " s=" << fmt6(r.params.s) << " i0=" << r.params.i0
       << "  z=" << fmt6(r.z) << "  (source=" << r.source << ")\n";
    pad(os, "state", 8);
    pad(os, "X(z)", 14);
    pad(os, "oracle", 14);
    os << "\n";
    auto rows = [&](std::vector<MgfEntry> const& entries) {
        for (auto const& e : entries)
        {
            pad(os, std::to_string(e.position), 8);
            pad(os, fmt6(e.value), 14);
            pad(os, fmt6(e.oracle), 14);
            os << "\n";
        }
    };
    rows(r.barriers);
    if (!r.interior.empty())
    {
        os << "interior:\n";
        rows(r.interior);
    }
}

void write_table(std::ostream& os, SimReport const& r)
{
    os << "player " << r.strategy << "  p=" << fmt6(r.params.p)
       << " s=" << fmt6(r.params.s) << " i0=" << r.params.i0 << "\n";
    os << "trials=" << r.trials << " seed=" << r.seed
       << " generator: " << r.generator << "\n";
    os << "mean time " << fmt6(r.mean_time) << " +/- " << fmt6(r.mean_time_se)
       << "  escaped=" << r.escaped << "\n";
    pad(os, "state", 8);
    pad(os, "count", 10);
    pad(os, "P", 12);
    pad(os, "se", 12);
    pad(os, "E[T; absorb]", 14);
    pad(os, "se", 12);
    os << "\n";
    for (auto const& s : r.states)
    {
        pad(os, std::to_string(s.position), 8);
        pad(os, std::to_string(s.count), 10);
        pad(os, fmt6(s.probability), 12);
        pad(os, fmt6(s.probability_se), 12);
        pad(os, fmt6(s.killed_time), 14);
        pad(os, fmt6(s.killed_time_se), 12);
        os << "\n";
    }
}

void write_table(std::ostream& os, VerifyReport const& r)
{
    std::size_t width = 8;
    for (auto const& c : r.checks)
        width = std::max(width, c.name.size() + 2);
    for (auto const& c : r.checks)
    {
        os << (c.pass ? "PASS  " : "FAIL  ");
        pad(os, c.name, width);
        os << "worst=" << fmt6(c.worst) << " tol=" << fmt6(c.tolerance);
        if (!c.detail.empty())
            os << "  " << c.detail;
        os << "\n";
    }
    os << (r.pass ? "all checks passed" : "verification FAILED") << "\n";
}

//---------------------------------------------------------------------------//
// CSV
//---------------------------------------------------------------------------//

void write_csv(std::ostream& os, MgfReport const& r)
{
    os << "p,s,i0,strategy,z,position,barrier,value,oracle\n";
    auto rows = [&](std::vector<MgfEntry> const& entries, bool barrier) {
        for (auto const& e : entries)
            os << format_full(r.params.p) << ',' << format_full(r.params.s)
               << ',' << r.params.i0 << ',' << r.strategy << ','
               << format_full(r.z) << ',' << e.position << ','
               << (barrier ? 1 : 0) << ',' << format_full(e.value) << ','
               << csv_opt(e.oracle) << '\n';
    };
    rows(r.barriers, true);
    rows(r.interior, false);
}

void write_csv(std::ostream& os, SimReport const& r)
{
    os << "p,s,i0,strategy,seed,trials,position,count,probability,"
          "probability_se,killed_time,killed_time_se\n";
    for (auto const& s : r.states)
        os << format_full(r.params.p) << ',' << format_full(r.params.s) << ','
           << r.params.i0 << ',' << r.strategy << ',' << r.seed << ','
           << r.trials << ',' << s.position << ',' << s.count << ','
           << format_full(s.probability) << ','
           << format_full(s.probability_se) << ','
           << format_full(s.killed_time) << ','
           << format_full(s.killed_time_se) << '\n';
}

void write_csv(std::ostream& os, VerifyReport const& r)
{
    os << "name,pass,worst,tolerance,detail\n";
    for (auto const& c : r.checks)
    {
        std::string detail = c.detail;
        std::replace(detail.begin(), detail.end(), '"', '\'');
        os << '"' << c.name << "\"," << (c.pass ? 1 : 0) << ','
           << format_full(c.worst) << ',' << format_full(c.tolerance) << ",\""
           << detail << "\"\n";
    }
}

}  // namespace ruin
