#pragma once

#include <vector>

#include "ruin/core.hpp"

namespace ruin {

inline constexpr int default_kmax = 64;

/*!
 * Distribution of the absorption location over {0} and {k*i0 : k >= 1}.
 *
 * pk[k-1] is the probability of absorption at k*i0 for k = 1..kmax. The
 * tail bound is the exact geometric mass beyond kmax; the escape mass is the
 * probability of never being absorbed (nonzero only for s = 0, omega > 1).
 */
struct AbsorptionProfile
{
    double p0{0};
    std::vector<double> pk;
    double tail_bound{0};
    double escape_mass{0};

    //! Probability at barrier k (k = 0 is ruin); zero beyond kmax.
    double at(int k) const;
    double total() const;
};

/*!
 * Mean absorption times.
 *
 * et[k] is the killed expectation E[T 1{absorbed at k*i0}] for k = 0..kmax;
 * et_tail is the exact sum over k > kmax. m_total is infinite when the walk
 * may escape or has infinite mean ruin time (s = 0, omega >= 1).
 */
struct TimeProfile
{
    double m_total{0};
    std::vector<double> et;
    double et_tail{0};
    bool almost_sure{true};

    double sum() const;
};

AbsorptionProfile absorption_profile(Instance const& inst,
                                     int kmax = default_kmax);

//! P_B(j)/P_C(j), constant over j in {0} and {k*i0 : k >= 2}.
double bc_ratio(WalkParams const& params);

//! Mean time until absorption anywhere.
//! Throws NotAlmostSure for s = 0, omega > 1.
double mean_time_any(Instance const& inst);

//! Killed expectation E[T 1{absorbed at k*i0}].
//! Throws UnsupportedRegime when p = 1/2 and 0 < s < 1 (use the exact oracle).
double mean_time_at(Instance const& inst, int k);

//! All killed expectations up to kmax plus m_total.
//! Throws UnsupportedRegime under the same conditions as mean_time_at.
TimeProfile time_profile(Instance const& inst, int kmax = default_kmax);

//! Conditional mean time at barrier k: et_k / P(k). NaN when P(k) = 0.
double conditional_mean_time(TimeProfile const& times,
                             AbsorptionProfile const& absorption,
                             int k);

}  // namespace ruin
