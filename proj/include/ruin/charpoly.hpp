#pragma once

#include "ruin/core.hpp"

namespace ruin {

/*!
 * Roots of q z tau^2 - tau + p z = 0, ordered tau1 >= tau2 > 0.
 *
 * The product tau1 * tau2 is omega and the sum is 1/(q z). At z = 1 the roots
 * are max(1, omega) and min(1, omega).
 */
struct RootPair
{
    double tau1{1};
    double tau2{1};
    double z{1};
};

//! Coupling coefficient of the barrier recurrence
//! X_{(k+1)i0} - theta X_{k i0} + omega^{i0} X_{(k-1)i0} = 0.
struct CharData
{
    double theta{2};
    double omega_pow{1};  //!< omega^{i0}
    double z{1};
    double s{0};
    int i0{1};
};

//! Roots of phi^2 - theta phi + omega^{i0} = 0, phi1 >= phi2.
struct PhiPair
{
    double phi1{1};
    double phi2{1};
};

//! z-derivatives at z = 1 (omega != 1 only).
struct DerivativeBundle
{
    double dtau1{0};
    double dtau2{0};
    double dtheta{0};
    double dphi1{0};
    double dphi2{0};
    double h1{0};  //!< (1 - 4pq)^{-1/2} = 1/|p - q|
};

RootPair tau_roots(double z, WalkParams const& params);

//! Divided power difference (tau1^n - tau2^n)/(tau1 - tau2).
//! Continuous through tau1 == tau2, where it equals n tau^{n-1}.
double power_difference(RootPair const& roots, int n);

//! h(z) = (1 - 4 p q z^2)^{-1/2}; infinite at the repeated root.
double h_factor(double z, WalkParams const& params);

//! d/dz of power_difference at roots.z; requires distinct roots.
double power_difference_dz(RootPair const& roots,
                           WalkParams const& params,
                           int n);

CharData theta(double z, WalkParams const& params);

//! Analytic dtheta/dz at any z in (0, 1] away from the repeated root.
double theta_dz(double z, WalkParams const& params);

PhiPair phi_roots(CharData const& data);

DerivativeBundle derivatives_at_1(WalkParams const& params);

//! Closed-form dtheta/dz at z = 1 as an explicit rational expression in
//! (p, q, s, i0, theta). Used to cross-check the symbolic route.
double dtheta_at_1_closed_form(WalkParams const& params);

//! Convenience: everything at a single z.
struct CharSnapshot
{
    RootPair roots;
    CharData data;
    PhiPair phi;
};

CharSnapshot characterize(double z, WalkParams const& params);

}  // namespace ruin
