#include "ruin/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace ruin {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true)
    {
        std::size_t const end = text.find(sep, start);
        parts.push_back(text.substr(start, end - start));
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    return parts;
}

[[noreturn]] void bad_range(std::string_view text, char const* why)
{
    throw ParameterError("malformed range '" + std::string(text) + "': " + why);
}

//! A decimal literal as an integer mantissa times 10^-decimals.
struct Decimal
{
    long long mantissa{0};
    int decimals{0};
};

Decimal parse_decimal(std::string_view whole, std::string_view text)
{
    double value = 0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    auto const res = std::from_chars(first, last, value);
    if (text.empty() || res.ec != std::errc{} || res.ptr != last
        || !std::isfinite(value))
        bad_range(whole, "not a number");

    int frac = 0;
    int exponent = 0;
    std::size_t const epos = text.find_first_of("eE");
    std::string_view const body
        = epos == std::string_view::npos ? text : text.substr(0, epos);
    if (std::size_t const dot = body.find('.'); dot != std::string_view::npos)
        frac = static_cast<int>(body.size() - dot - 1);
    if (epos != std::string_view::npos)
        exponent = std::atoi(std::string(text.substr(epos + 1)).c_str());
    int const decimals = std::max(frac - exponent, 0);
    if (decimals > 15)
        bad_range(whole, "more than 15 decimal places");
    return {std::llround(value * std::pow(10.0, decimals)), decimals};
}

long long rescale(Decimal d, int decimals)
{
    long long m = d.mantissa;
    for (int i = d.decimals; i < decimals; ++i)
        m *= 10;
    return m;
}

double decimal_to_double(long long mantissa, int decimals)
{
    std::string digits = std::to_string(std::llabs(mantissa));
    if (decimals > 0)
    {
        if (static_cast<int>(digits.size()) <= decimals)
            digits.insert(0, decimals + 1 - digits.size(), '0');
        digits.insert(digits.size() - decimals, ".");
    }
    if (mantissa < 0)
        digits.insert(0, "-");
    return std::strtod(digits.c_str(), nullptr);
}

std::string cell(double v) { return format_full(v); }

std::string cell(std::optional<double> const& v)
{
    return v ? format_full(*v) : std::string();
}

}  // namespace

std::vector<double> parse_range(std::string_view text)
{
    auto const parts = split(text, ':');
    if (parts.size() == 1)
    {
        Decimal const d = parse_decimal(text, parts[0]);
        return {decimal_to_double(d.mantissa, d.decimals)};
    }
    if (parts.size() != 3)
        bad_range(text, "expected start:stop:step");

    Decimal const a = parse_decimal(text, parts[0]);
    Decimal const b = parse_decimal(text, parts[1]);
    Decimal const step = parse_decimal(text, parts[2]);
    int const decimals = std::max({a.decimals, b.decimals, step.decimals});
    long long const lo = rescale(a, decimals);
    long long const hi = rescale(b, decimals);
    long long const inc = rescale(step, decimals);
    if (inc <= 0)
        bad_range(text, "step must be positive");

    std::vector<double> values;
    for (long long m = lo; m <= hi; m += inc)
        values.push_back(decimal_to_double(m, decimals));
    return values;
}

std::vector<int> parse_int_range(std::string_view text)
{
    auto const parts = split(text, ':');
    if (parts.size() > 3)
        bad_range(text, "expected start[:stop[:step]]");
    std::vector<long long> nums;
    for (auto part : parts)
    {
        long long v = 0;
        auto const res
            = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || res.ec != std::errc{}
            || res.ptr != part.data() + part.size())
            bad_range(text, "not an integer");
        nums.push_back(v);
    }
    long long const lo = nums[0];
    long long const hi = nums.size() > 1 ? nums[1] : lo;
    long long const inc = nums.size() > 2 ? nums[2] : 1;
    if (inc <= 0)
        bad_range(text, "step must be positive");
    std::vector<int> values;
    for (long long v = lo; v <= hi; v += inc)
    {
        if (v < 1 || v > 1'000'000)
            bad_range(text, "i0 must lie in [1, 1000000]");
        values.push_back(static_cast<int>(v));
    }
    return values;
}

std::vector<Strategy> parse_strategy_list(std::string_view text)
{
    std::vector<Strategy> out;
    for (auto part : split(text, ','))
        out.push_back(parse_strategy(part));
    return out;
}

std::string const& sweep_header()
{
    static std::string const header
        = "p,s,i0,strategy,omega,tau1,tau2,theta,phi1,phi2,"
          "p0,p1,p2,p3,p_rest,tail_bound,escape_mass,"
          "m_total,et0,et1,et2,et3,et_rest,et_source,bc_ratio";
    return header;
}

std::string sweep_columns_help()
{
    return "Sweep CSV columns (one row per p, s, i0, strategy in that order):\n"
           "  p,s,i0,strategy      grid point\n"
           "  omega                p/q\n"
           "  tau1,tau2            characteristic roots at z=1\n"
           "  theta,phi1,phi2      barrier recurrence coefficient and roots "
           "(empty at s=1)\n"
           "  p0..p3               absorption probability at 0, i0, 2 i0, 3 i0\n"
           "  p_rest               absorption probability beyond 3 i0\n"
           "  tail_bound           part of p_rest beyond kmax\n"
           "  escape_mass          probability of never being absorbed\n"
           "  m_total              mean time to absorption\n"
           "  et0..et3             E[T; absorbed at k i0], k = 0..3\n"
           "  et_rest              the same summed over k > 3\n"
           "  et_source            analytic or exact (lattice solver)\n"
           "  bc_ratio             P_B/P_C ratio (empty unless 0<s<1)\n";
}

std::string sweep_row(AnalyticReport const& r)
{
    auto const& a = r.absorption;
    auto const& t = r.times;
    auto prob = [&](std::size_t k) -> std::optional<double> {
        if (k - 1 < a.pk.size())
            return a.pk[k - 1];
        return std::nullopt;
    };
    auto time = [&](std::size_t k) -> std::optional<double> {
        if (k < t.et.size())
            return t.et[k];
        return std::nullopt;
    };
    double p_rest = a.tail_bound;
    for (std::size_t k = 4; k <= a.pk.size(); ++k)
        p_rest += a.pk[k - 1];
    double et_rest = t.et_tail;
    for (std::size_t k = 4; k < t.et.size(); ++k)
        et_rest += t.et[k];

    std::ostringstream os;
    os << cell(r.params.p) << ',' << cell(r.params.s) << ',' << r.params.i0
       << ',' << r.strategy << ',' << cell(r.params.omega) << ','
       << cell(r.diagnostics.tau1) << ',' << cell(r.diagnostics.tau2) << ','
       << cell(r.diagnostics.theta) << ',' << cell(r.diagnostics.phi1) << ','
       << cell(r.diagnostics.phi2) << ',' << cell(a.p0) << ',' << cell(prob(1))
       << ',' << cell(prob(2)) << ',' << cell(prob(3)) << ',' << cell(p_rest)
       << ',' << cell(a.tail_bound) << ',' << cell(a.escape_mass) << ','
       << cell(t.m_total) << ',' << cell(time(0)) << ',' << cell(time(1))
       << ',' << cell(time(2)) << ',' << cell(time(3)) << ',' << cell(et_rest)
       << ',' << t.source << ',' << cell(r.bc_ratio);
    return os.str();
}

void run_sweep(std::ostream& os, SweepGrid const& grid, ReportOptions opts)
{
    opts.rounded = false;
    opts.conditional = false;
    opts.z.reset();

    std::vector<Instance> points;
    for (double p : grid.p)
        for (double s : grid.s)
            for (int i0 : grid.i0)
                for (Strategy st : grid.strategies)
                    points.push_back(validate(WalkParams{p, s, i0}, st));

    os << sweep_header() << '\n';
    for (auto const& inst : points)
        os << sweep_row(build_analytic_report(inst, opts)) << '\n';
}

}  // namespace ruin
