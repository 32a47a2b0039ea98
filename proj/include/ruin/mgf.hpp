#pragma once

#include <cstdint>

#include "ruin/charpoly.hpp"
#include "ruin/core.hpp"

namespace ruin {

/*
 * Moment generating functions of the pre-absorption arrival counts,
 *
 *   X_j(z) = sum_m P(walker arrives at j at step m, not yet absorbed) z^m,
 *
 * for 0 < z <= 1. At z = 1, X_j is the expected number of arrivals at j.
 * Player B's function counts arrivals at m >= 1 only: its start at i0 is not
 * an mfb occasion. All functions here require 0 < s < 1.
 */

//! Player A on barrier k*i0 (k >= 0).
double mgf_A(WalkParams const& params, double z, int k);

//! Player B on barrier k*i0 (k >= 0).
double mgf_B(WalkParams const& params, double z, int k);

//! Player C on barrier k*i0 (k >= 0).
double mgf_C(WalkParams const& params, double z, int k);

//! Dispatch on the instance's strategy.
double mgf_barrier(Instance const& inst, double z, int k);

/*!
 * Solution constants on segment [k*i0, (k+1)*i0]:
 * X_{k i0 + n} = a tau1^n + b tau2^n, or a n + b when the tau roots coincide
 * (z = 1, p = 1/2).
 *
 * The endpoint values are the barrier "outflows": the generating function
 * of departures from the barrier, i.e. arrivals weighted by the probability of
 * continuing.
 */
struct InteriorCoefficients
{
    double a{0};
    double b{0};
    bool linear{false};
    RootPair roots;
    double lower_outflow{0};
    double upper_outflow{0};
    int i0{1};

    //! Value at offset n in [0, i0], evaluated in a cancellation-free form.
    double value(int n) const;
    //! Value at offset n from the raw coefficients.
    double from_coefficients(int n) const;
};

InteriorCoefficients
interior_coefficients(Instance const& inst, double z, std::int64_t segment);

//! Interior state k*i0 + n with 0 < n < i0.
double mgf_interior(Instance const& inst, double z, LatticeState const& state);

//! Any lattice position (barrier or interior).
double mgf_value(Instance const& inst, double z, std::int64_t position);

//---------------------------------------------------------------------------//
// s = 1, player B: i0 becomes absorbing after t = 0
//---------------------------------------------------------------------------//

enum class S1Segment
{
    Lower,  //!< (0, i0) entered at i0 - 1
    Upper,  //!< (i0, 2 i0) entered at i0 + 1
};

/*!
 * Generating function of arrivals at offset n (0 <= n <= i0) of the given
 * segment for the walk entered at its inner end (time counted from entry).
 * Lower: state n. Upper: state i0 + n. Endpoints are absorbing.
 */
double mgf_B_s1(S1Segment segment, int n, double z, WalkParams const& params);

}  // namespace ruin
