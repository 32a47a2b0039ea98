#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ruin/core.hpp"

namespace ruin {

//---------------------------------------------------------------------------//
// Exact first-step solver on a truncated lattice
//---------------------------------------------------------------------------//

/*!
 * Absorption and time profile of the walk on states 0..K*i0.
 *
 * Mass stepping above K*i0 is lost and reported as escape mass. Visits are
 * expected arrival counts per state (the generating function at z = 1);
 * player B's count at i0 excludes the t = 0 start.
 */
struct ExactSolution
{
    int truncation_k{0};
    double p0{0};
    std::vector<double> pk;  //!< pk[k-1] for k = 1..K
    double escape_mass{0};
    double m_total{0};
    std::vector<double> et;      //!< killed times, k = 0..K
    std::vector<double> visits;  //!< per state, 0..K*i0
    double error_estimate{0};

    double probability(int k) const;
    double killed_time(int k) const;
};

//! One solve at fixed truncation K (no convergence loop).
ExactSolution solve_truncated(Instance const& inst, int k_barriers);

/*!
 * Double K from 8 until successive solutions differ by less than tol
 * (absolute for probabilities, relative above 1 for times and visits).
 * Throws NumericalError if max_k is exceeded.
 */
ExactSolution solve_exact(Instance const& inst,
                          double tol = 1e-12,
                          int max_k = 1 << 16);

//! Generating function of arrivals at all states 0..K*i0 on the truncated
//! lattice, solved directly (any z in (0, 1]).
std::vector<double> exact_mgf(Instance const& inst, double z, int k_barriers);

//---------------------------------------------------------------------------//
// Step-by-step generating function
//---------------------------------------------------------------------------//

/*!
 * Propagate the unabsorbed mass vector one step at a time and accumulate
 * z^m mass(state) until the remaining tail is below tol. Requires 0 < z < 1.
 * The lattice grows by doubling, so no mass is ever truncated.
 */
std::vector<double> mgf_dp_all(Instance const& inst,
                               double z,
                               std::int64_t max_position,
                               double tol = 1e-13);

double mgf_dp(Instance const& inst,
              double z,
              std::int64_t position,
              double tol = 1e-13);

//---------------------------------------------------------------------------//
// Monte Carlo
//---------------------------------------------------------------------------//

struct SimConfig
{
    std::uint64_t trials{1'000'000};
    std::uint64_t seed{42};
    std::int64_t max_steps{10'000'000};
    unsigned workers{0};  //!< 0 = hardware concurrency
};

struct StateTally
{
    std::uint64_t count{0};
    std::uint64_t time_sum{0};
    double time_sq_sum{0};

    bool operator==(StateTally const&) const = default;
};

struct SimResult
{
    std::uint64_t trials{0};
    std::uint64_t seed{0};
    std::string generator;
    std::map<std::int64_t, StateTally> absorbed;  //!< keyed by position
    std::uint64_t escaped{0};
    double mean_time{0};     //!< sum of absorption times / trials
    double mean_time_se{0};

    double probability(std::int64_t position) const;
    double probability_se(std::int64_t position) const;
    //! E[T 1{absorbed at position}]
    double killed_time(std::int64_t position) const;
    double killed_time_se(std::int64_t position) const;

    bool operator==(SimResult const&) const = default;
};

SimResult simulate(Instance const& inst, SimConfig const& config);

}  // namespace ruin
