#pragma once

#include "ruin/core.hpp"

// Printed variants of three closed forms that disagree with first-step
// analysis. They exist only so the regression suite and `verify` can show
// each one failing against the exact oracle. See FORMULA_ERRATA.md.
namespace ruin::errata {

//! Coupling coefficient without the 1/(1-s) weight on the tau^i0 term.
double printed_theta(double z, WalkParams const& params);

//! Player B mean time i0 (1 - phi2 omega^-i0), missing a 1/s factor.
double printed_mean_time_B(WalkParams const& params);

//! s = 0 ruin time taken as dphi2/dz without the omega^-i0 prefactor.
double printed_ruin_time_no_stop(WalkParams const& params);

}  // namespace ruin::errata
