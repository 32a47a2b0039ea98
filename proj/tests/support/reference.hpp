#pragma once

// Brute-force reference: push the distribution of the walk forward one step
// at a time and record where and when mass is absorbed. Shares no code with
// the library's solvers; only the rule tables below are restated.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

struct ReferenceProfile
{
    std::map<std::int64_t, double> prob;    //!< absorbed mass by position
    std::map<std::int64_t, double> killed;  //!< sum of t * mass by position
    double remaining{0};
    double mean_time{0};
};

inline double reference_stop(char strategy, double s, int i0, std::int64_t j, std::int64_t t)
{
    if (j == 0)
        return 1.0;
    if (j % i0 != 0)
        return 0.0;
    std::int64_t const k = j / i0;
    if (strategy == 'C' && k == 1)
        return 0.0;
    if (strategy == 'B' && k == 1 && t == 0)
        return 0.0;
    return s;
}

inline ReferenceProfile reference_propagate(double p,
                                            double s,
                                            int i0,
                                            char strategy,
                                            double tol = 1e-15,
                                            std::int64_t max_steps = 2'000'000)
{
    ReferenceProfile out;
    std::vector<double> mass(4 * i0 + 2, 0.0);
    auto absorb = [&](std::int64_t j, std::int64_t t) {
        double const stop = reference_stop(strategy, s, i0, j, t);
        if (stop > 0.0 && mass[j] > 0.0)
        {
            double const taken = stop * mass[j];
            out.prob[j] += taken;
            out.killed[j] += static_cast<double>(t) * taken;
            mass[j] -= taken;
        }
    };

    mass[i0] = 1.0;
    absorb(i0, 0);
    double alive = mass[i0];
    std::vector<double> next;
    for (std::int64_t t = 1; t <= max_steps && alive > tol; ++t)
    {
        if (mass[mass.size() - 2] > 0.0 || mass.back() > 0.0)
            mass.resize(mass.size() * 2, 0.0);
        next.assign(mass.size(), 0.0);
        for (std::size_t j = 1; j + 1 < mass.size(); ++j)
        {
            if (mass[j] == 0.0)
                continue;
            next[j + 1] += p * mass[j];
            next[j - 1] += (1.0 - p) * mass[j];
        }
        mass.swap(next);
        alive = 0.0;
        for (std::size_t j = 0; j < mass.size(); ++j)
        {
            absorb(static_cast<std::int64_t>(j), t);
            alive += mass[j];
        }
    }
    out.remaining = alive;
    for (auto const& [pos, value] : out.killed)
        out.mean_time += value;
    return out;
}
