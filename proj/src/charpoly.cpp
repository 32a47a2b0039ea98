#include "ruin/charpoly.hpp"

#include <cmath>
#include <string>

namespace ruin {
namespace {

void require_z(double z)
{
    if (!(z > 0.0 && z <= 1.0))
        throw ParameterError("z must lie in (0, 1], got " + std::to_string(z));
}

}  // namespace

RootPair tau_roots(double z, WalkParams const& params)
{
    require_z(z);
    double const p = params.p;
    double const q = params.q();
    // 1 - 4pq z^2 >= (p - q)^2 >= 0 on (0, 1]
    double const disc = std::max(0.0, 1.0 - 4.0 * p * q * z * z);
    RootPair r;
    r.z = z;
    r.tau1 = (1.0 + std::sqrt(disc)) / (2.0 * q * z);
    r.tau2 = params.omega() / r.tau1;
    if (r.tau2 > r.tau1)
        r.tau2 = r.tau1;
    return r;
}

double power_difference(RootPair const& roots, int n)
{
    if (n <= 0)
        return 0.0;
    // D_{k+1} = tau1 D_k + tau2^k; all terms positive
    double d = 0.0;
    double t2pow = 1.0;
    for (int k = 0; k < n; ++k)
    {
        d = roots.tau1 * d + t2pow;
        t2pow *= roots.tau2;
    }
    return d;
}

double h_factor(double z, WalkParams const& params)
{
    double const disc = 1.0 - 4.0 * params.p * params.q() * z * z;
    if (disc <= 0.0)
        return HUGE_VAL;
    return 1.0 / std::sqrt(disc);
}

double power_difference_dz(RootPair const& roots,
                           WalkParams const& params,
                           int n)
{
    if (n <= 1)
        return 0.0;
    double const h = h_factor(roots.z, params);
    if (!std::isfinite(h))
        throw UnsupportedRegime("derivative undefined at the repeated tau root");

    // dtau_i/dz = (-1)^i h tau_i / z, so
    // dD_n/dz = (h/z) sum_j (n - 1 - 2j) tau1^j tau2^{n-1-j}
    double sum = 0.0;
    double t1pow = 1.0;
    for (int j = 0; j < n; ++j)
    {
        sum += (n - 1 - 2 * j) * t1pow * std::pow(roots.tau2, n - 1 - j);
        t1pow *= roots.tau1;
    }
    return h * sum / roots.z;
}

CharData theta(double z, WalkParams const& params)
{
    require_z(z);
    if (!(params.s < 1.0))
        throw UnsupportedRegime("theta is undefined for s = 1");

    CharData c;
    c.z = z;
    c.s = params.s;
    c.i0 = params.i0;
    c.omega_pow = std::pow(params.omega(), params.i0);

    int const i0 = params.i0;
    double const s = params.s;
    if (z == 1.0 && params.p == 0.5)
    {
        c.theta = 2.0 * (i0 / (1.0 - s) + 1.0 - i0);
        return c;
    }

    // [ (tau2^i0 - tau1^i0)/(1-s) - 2pz (tau2^{i0-1} - tau1^{i0-1}) ]
    //   / (q z (tau2 - tau1)), rewritten with divided differences
    RootPair const r = tau_roots(z, params);
    double const q = params.q();
    c.theta = power_difference(r, i0) / ((1.0 - s) * q * z)
              - 2.0 * params.p / q * power_difference(r, i0 - 1);
    return c;
}

double theta_dz(double z, WalkParams const& params)
{
    require_z(z);
    if (!(params.s < 1.0))
        throw UnsupportedRegime("theta is undefined for s = 1");
    RootPair const r = tau_roots(z, params);
    int const i0 = params.i0;
    double const q = params.q();
    double const d = power_difference(r, i0);
    double const dd = power_difference_dz(r, params, i0);
    double const dd_prev = power_difference_dz(r, params, i0 - 1);
    return (dd * z - d) / ((1.0 - params.s) * q * z * z)
           - 2.0 * params.p / q * dd_prev;
}

PhiPair phi_roots(CharData const& data)
{
    double const th = data.theta;
    double disc = th * th - 4.0 * data.omega_pow;
    if (disc < 0.0)
    {
        // s = 0 with omega = 1 gives an exactly repeated root
        if (disc < -1e-12 * th * th)
            throw NumericalError("complex phi roots: theta^2 < 4 omega^i0");
        disc = 0.0;
    }
    if (!(th > 0.0))
        throw NumericalError("non-positive theta");
    PhiPair f;
    f.phi1 = 0.5 * (th + std::sqrt(disc));
    f.phi2 = data.omega_pow / f.phi1;
    return f;
}

DerivativeBundle derivatives_at_1(WalkParams const& params)
{
    if (params.p == 0.5)
        throw UnsupportedRegime(
            "z-derivatives at z = 1 need distinct tau roots (p != 1/2)");
    if (!(params.s >= 0.0 && params.s < 1.0))
        throw UnsupportedRegime("z-derivatives need 0 <= s < 1");

    RootPair const r = tau_roots(1.0, params);
    CharData const c = theta(1.0, params);
    PhiPair const f = phi_roots(c);

    DerivativeBundle b;
    b.h1 = 1.0 / std::abs(params.p - params.q());
    b.dtau1 = -b.h1 * r.tau1;
    b.dtau2 = b.h1 * r.tau2;
    b.dtheta = theta_dz(1.0, params);
    double const gap = f.phi2 - f.phi1;
    b.dphi1 = -f.phi1 / gap * b.dtheta;
    b.dphi2 = f.phi2 / gap * b.dtheta;
    return b;
}

double dtheta_at_1_closed_form(WalkParams const& params)
{
    double const p = params.p;
    double const q = params.q();
    double const s = params.s;
    int const i0 = params.i0;
    double const w = params.omega();
    double const th = theta(1.0, params).theta;
    double const w_i0 = std::pow(w, i0);
    double const w_prev = std::pow(w, i0 - 1);
    double const num = 4.0 * p * q * th - i0 * (1.0 + w_i0) / (1.0 - s)
                       + 2.0 * p
                             * ((p - q) * (1.0 - w_prev)
                                + (i0 - 1) * (1.0 + w_prev));
    return num / ((p - q) * (p - q));
}

CharSnapshot characterize(double z, WalkParams const& params)
{
    CharSnapshot snap;
    snap.roots = tau_roots(z, params);
    snap.data = theta(z, params);
    snap.phi = phi_roots(snap.data);
    return snap;
}

}  // namespace ruin
