#include "ruin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "ruin/rng.hpp"
#include "ruin/tridiagonal.hpp"

namespace ruin {
namespace {

//! Continuation probabilities for t > 0 on states 0..n.
std::vector<double> steady_continuation(Instance const& inst, std::int64_t n)
{
    std::vector<double> c(n + 1);
    for (std::int64_t j = 0; j <= n; ++j)
        c[j] = 1.0 - stop_probability(inst, j, 1);
    return c;
}

/*
 * Forward (arrival-count) system on the truncated lattice:
 *   x_j - z p c_{j-1} x_{j-1} - z q c_{j+1} x_{j+1} = rhs_j.
 */
TridiagonalSolver arrival_system(Instance const& inst,
                                 std::vector<double> const& c,
                                 double z)
{
    std::size_t const n = c.size();
    std::vector<double> sub(n, 0.0), diag(n, 1.0), sup(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
    {
        if (j > 0)
            sub[j] = -z * inst.p() * c[j - 1];
        if (j + 1 < n)
            sup[j] = -z * inst.q() * c[j + 1];
    }
    return TridiagonalSolver{std::move(sub), std::move(diag), std::move(sup)};
}

//! z times the arrivals at t = 1.
std::vector<double> first_arrivals(Instance const& inst, std::size_t n, double z)
{
    std::vector<double> g(n, 0.0);
    double const go = 1.0 - stop_probability(inst, inst.i0(), 0);
    std::size_t const i0 = static_cast<std::size_t>(inst.i0());
    if (i0 + 1 < n)
        g[i0 + 1] += z * inst.p() * go;
    g[i0 - 1] += z * inst.q() * go;
    return g;
}

bool counts_start(Instance const& inst)
{
    return inst.strategy != Strategy::B;
}

double relative_gap(double a, double b)
{
    if (a == b)
        return 0.0;
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double solution_gap(ExactSolution const& coarse, ExactSolution const& fine)
{
    double gap = std::abs(coarse.p0 - fine.p0);
    gap = std::max(gap, std::abs(coarse.escape_mass - fine.escape_mass));
    gap = std::max(gap, relative_gap(coarse.m_total, fine.m_total));
    for (int k = 1; k <= fine.truncation_k; ++k)
    {
        gap = std::max(gap, std::abs(coarse.probability(k) - fine.probability(k)));
        gap = std::max(gap,
                       relative_gap(coarse.killed_time(k), fine.killed_time(k)));
    }
    gap = std::max(gap, relative_gap(coarse.et[0], fine.et[0]));
    // states near the coarse cutoff feel the truncation; compare the lower half
    std::size_t const half = coarse.visits.size() / 2;
    for (std::size_t j = 0; j < half; ++j)
        gap = std::max(gap, relative_gap(coarse.visits[j], fine.visits[j]));
    return gap;
}

}  // namespace

double ExactSolution::probability(int k) const
{
    if (k == 0)
        return p0;
    if (k < 0 || k > static_cast<int>(pk.size()))
        return 0.0;
    return pk[k - 1];
}

double ExactSolution::killed_time(int k) const
{
    if (k < 0 || k >= static_cast<int>(et.size()))
        return 0.0;
    return et[k];
}

ExactSolution solve_truncated(Instance const& inst, int k_barriers)
{
    if (k_barriers < 2)
        throw ParameterError("truncation needs at least two barriers");

    std::int64_t const n = static_cast<std::int64_t>(k_barriers) * inst.i0();
    std::vector<double> const c = steady_continuation(inst, n);
    TridiagonalSolver const system = arrival_system(inst, c, 1.0);

    // arrivals at t >= 1, then the first moment of arrival times
    std::vector<double> const arrivals
        = system.solve(first_arrivals(inst, c.size(), 1.0));
    std::vector<double> const moments = system.solve(arrivals);

    ExactSolution sol;
    sol.truncation_k = k_barriers;
    sol.pk.assign(k_barriers, 0.0);
    sol.et.assign(k_barriers + 1, 0.0);
    sol.visits = arrivals;
    if (counts_start(inst))
        sol.visits[inst.i0()] += 1.0;

    double absorbed = 0.0;
    for (int k = 0; k <= k_barriers; ++k)
    {
        std::int64_t const j = static_cast<std::int64_t>(k) * inst.i0();
        double const stop = 1.0 - c[j];
        double prob = stop * arrivals[j];
        if (k == 1)
            prob += stop_probability(inst, j, 0);
        if (k == 0)
            sol.p0 = prob;
        else
            sol.pk[k - 1] = prob;
        sol.et[k] = stop * moments[j];
        absorbed += prob;
        sol.m_total += sol.et[k];
    }
    sol.escape_mass = std::max(0.0, 1.0 - absorbed);
    return sol;
}

ExactSolution solve_exact(Instance const& inst, double tol, int max_k)
{
    if (!(tol > 0.0))
        throw ParameterError("tolerance must be positive");

    int k = 8;
    ExactSolution coarse = solve_truncated(inst, k);
    while (2 * k <= max_k)
    {
        k *= 2;
        ExactSolution fine = solve_truncated(inst, k);
        double const gap = solution_gap(coarse, fine);
        if (gap < tol)
        {
            fine.error_estimate = gap;
            return fine;
        }
        coarse = std::move(fine);
    }
    throw NumericalError(
        "exact solver did not converge: the absorption tail is not geometric "
        "(s = 0 with p = 1/2 has infinite mean ruin time)");
}

std::vector<double> exact_mgf(Instance const& inst, double z, int k_barriers)
{
    if (!(z > 0.0 && z <= 1.0))
        throw ParameterError("z must lie in (0, 1]");
    if (k_barriers < 2)
        throw ParameterError("truncation needs at least two barriers");
    std::int64_t const n = static_cast<std::int64_t>(k_barriers) * inst.i0();
    std::vector<double> const c = steady_continuation(inst, n);
    std::vector<double> values
        = arrival_system(inst, c, z).solve(first_arrivals(inst, c.size(), z));
    if (counts_start(inst))
        values[inst.i0()] += 1.0;
    return values;
}

std::vector<double> mgf_dp_all(Instance const& inst,
                               double z,
                               std::int64_t max_position,
                               double tol)
{
    if (!(z > 0.0 && z < 1.0))
        throw ParameterError("step propagation needs 0 < z < 1");
    if (max_position < 0)
        throw ParameterError("max_position must be non-negative");

    std::int64_t const i0 = inst.i0();
    std::vector<double> acc(max_position + 1, 0.0);
    std::vector<double> mass(std::max<std::int64_t>(2 * (i0 + 1), 16), 0.0);
    std::vector<double> next(mass.size(), 0.0);
    mass[i0] = 1.0;
    std::int64_t hi = i0;  // highest occupied position

    double zpow = 1.0;
    constexpr std::int64_t max_iterations = 100'000'000;
    for (std::int64_t m = 0; m < max_iterations; ++m)
    {
        if (!(m == 0 && !counts_start(inst)))
        {
            std::int64_t const top = std::min(hi, max_position);
            for (std::int64_t j = 0; j <= top; ++j)
                acc[j] += zpow * mass[j];
        }

        if (static_cast<std::size_t>(hi + 2) >= mass.size())
        {
            mass.resize(mass.size() * 2, 0.0);
            next.assign(mass.size(), 0.0);
        }
        std::fill(next.begin(), next.begin() + hi + 2, 0.0);
        double survivors = 0.0;
        for (std::int64_t j = 1; j <= hi; ++j)
        {
            if (mass[j] == 0.0)
                continue;
            double const go = mass[j] * (1.0 - stop_probability(inst, j, m));
            next[j + 1] += inst.p() * go;
            next[j - 1] += inst.q() * go;
            survivors += go;
        }
        std::swap(mass, next);
        ++hi;
        zpow *= z;
        if (zpow * survivors / (1.0 - z) < tol)
            return acc;
    }
    throw NumericalError("generating-function propagation did not converge");
}

double mgf_dp(Instance const& inst, double z, std::int64_t position, double tol)
{
    return mgf_dp_all(inst, z, position, tol)[position];
}

//---------------------------------------------------------------------------//
// Monte Carlo
//---------------------------------------------------------------------------//

double SimResult::probability(std::int64_t position) const
{
    auto it = absorbed.find(position);
    if (it == absorbed.end() || trials == 0)
        return 0.0;
    return static_cast<double>(it->second.count) / trials;
}

double SimResult::probability_se(std::int64_t position) const
{
    double const pr = probability(position);
    return trials == 0 ? 0.0 : std::sqrt(pr * (1.0 - pr) / trials);
}

double SimResult::killed_time(std::int64_t position) const
{
    auto it = absorbed.find(position);
    if (it == absorbed.end() || trials == 0)
        return 0.0;
    return static_cast<double>(it->second.time_sum) / trials;
}

double SimResult::killed_time_se(std::int64_t position) const
{
    auto it = absorbed.find(position);
    if (it == absorbed.end() || trials < 2)
        return 0.0;
    double const n = static_cast<double>(trials);
    double const mean = static_cast<double>(it->second.time_sum) / n;
    double const var = (it->second.time_sq_sum - n * mean * mean) / (n - 1.0);
    return std::sqrt(std::max(0.0, var) / n);
}

namespace {

struct TrialOutcome
{
    std::int64_t position{0};
    std::int64_t time{0};
    bool escaped{false};
};

TrialOutcome run_trial(Instance const& inst,
                       std::uint64_t seed,
                       std::uint64_t trial,
                       std::int64_t max_steps)
{
    TrialRng rng{seed, trial};
    std::int64_t pos = inst.i0();
    for (std::int64_t t = 0;; ++t)
    {
        double const stop = stop_probability(inst, pos, t);
        if (stop >= 1.0 || (stop > 0.0 && rng.uniform() < stop))
            return {pos, t, false};
        if (t == max_steps)
            return {pos, t, true};
        pos += rng.uniform() < inst.p() ? 1 : -1;
    }
}

}  // namespace

SimResult simulate(Instance const& inst, SimConfig const& config)
{
    if (config.trials < 1)
        throw ParameterError("trials must be at least 1");
    if (config.max_steps < 1)
        throw ParameterError("max_steps must be at least 1");

    unsigned workers = config.workers;
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());

    SimResult result;
    result.trials = config.trials;
    result.seed = config.seed;
    result.generator = TrialRng::name();

    constexpr std::uint64_t block = 1 << 16;
    std::vector<TrialOutcome> outcomes;
    double time_sum = 0.0;
    double time_sq_sum = 0.0;

    for (std::uint64_t start = 0; start < config.trials; start += block)
    {
        std::uint64_t const count = std::min(block, config.trials - start);
        outcomes.assign(count, {});
        auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i)
                outcomes[i] = run_trial(inst, config.seed, start + i,
                                        config.max_steps);
        };

        unsigned const used = static_cast<unsigned>(
            std::min<std::uint64_t>(workers, count));
        if (used <= 1)
        {
            run_range(0, count);
        }
        else
        {
            std::vector<std::thread> pool;
            pool.reserve(used);
            for (unsigned w = 0; w < used; ++w)
                pool.emplace_back(run_range, count * w / used,
                                  count * (w + 1) / used);
            for (auto& th : pool)
                th.join();
        }

        // reduce in trial order so the result is worker-count independent
        for (TrialOutcome const& o : outcomes)
        {
            if (o.escaped)
            {
                ++result.escaped;
                continue;
            }
            StateTally& tally = result.absorbed[o.position];
            double const t = static_cast<double>(o.time);
            ++tally.count;
            tally.time_sum += static_cast<std::uint64_t>(o.time);
            tally.time_sq_sum += t * t;
            time_sum += t;
            time_sq_sum += t * t;
        }
    }

    double const n = static_cast<double>(config.trials);
    result.mean_time = time_sum / n;
    if (config.trials > 1)
    {
        double const var
            = (time_sq_sum - n * result.mean_time * result.mean_time) / (n - 1);
        result.mean_time_se = std::sqrt(std::max(0.0, var) / n);
    }
    return result;
}

}  // namespace ruin
