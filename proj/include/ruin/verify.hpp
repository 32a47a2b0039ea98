#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ruin/core.hpp"
#include "ruin/oracle.hpp"
#include "ruin/report.hpp"

namespace ruin {

struct VerifyOptions
{
    bool quick{false};  //!< skip Monte Carlo
    std::uint64_t trials{1'000'000};
    std::uint64_t seed{42};
    std::int64_t max_steps{10'000'000};
    unsigned workers{0};
    double exact_tol{1e-12};
    //! Test hook: "m_B" swaps in the printed player-B mean time.
    std::string inject_fault;
};

//! One grid point with its truncated-lattice reference solution.
struct GridEntry
{
    Instance inst;
    ExactSolution exact;
};

//! p x s x i0 x {A, B, C} agreement grid (180 points).
std::vector<Instance> default_grid();
//! Eight points covering drift, symmetry and all strategies.
std::vector<Instance> monte_carlo_grid();
std::vector<GridEntry> solve_grid(std::vector<Instance> const& points,
                                  double tol);

// Individual checks; names are stable and appear in verify output.
CheckRecord check_profile_agreement(std::span<GridEntry const> grid);
CheckRecord check_mean_time_agreement(std::span<GridEntry const> grid);
CheckRecord check_m_B_relation(std::span<GridEntry const> grid,
                               bool printed_display = false);
CheckRecord check_mass_conservation(std::span<GridEntry const> grid);
CheckRecord check_time_decomposition(std::span<GridEntry const> grid);
CheckRecord check_vieta(std::span<GridEntry const> grid);
CheckRecord check_arrival_relation(std::span<GridEntry const> grid);
CheckRecord check_barrier_recurrences(std::span<GridEntry const> grid);
CheckRecord check_phi_geometry(std::span<GridEntry const> grid);
CheckRecord check_bc_ratio(std::span<GridEntry const> grid);
CheckRecord check_mgf_oracle(std::span<GridEntry const> grid);
CheckRecord check_mgf_monotone(std::span<GridEntry const> grid);
CheckRecord check_derivatives(std::span<GridEntry const> grid);
CheckRecord check_spot_values(double tol);
CheckRecord check_errata_theta(double tol);
CheckRecord check_errata_m_B(double tol);
CheckRecord check_errata_ruin_time(double tol);
//! Every estimate within 4 standard errors of the lattice solution; a
//! failing point is rerun once with the next seed.
CheckRecord check_monte_carlo(VerifyOptions const& opts);

VerifyReport run_verify(VerifyOptions const& opts);

}  // namespace ruin
