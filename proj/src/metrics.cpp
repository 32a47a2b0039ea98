#include "ruin/metrics.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "ruin/charpoly.hpp"
#include "ruin/mgf.hpp"

namespace ruin {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void require_kmax(int kmax)
{
    if (kmax < 2)
        throw ParameterError("kmax must be at least 2");
}

//! Probabilities for s = 1, player B (mass on 0, i0 and 2 i0).
struct BarrierTriple
{
    double at0{0};
    double at1{0};
    double at2{0};
};

BarrierTriple always_stop_probabilities(Instance const& inst)
{
    int const i0 = inst.i0();
    double const p = inst.p();
    double const q = inst.q();
    BarrierTriple t;
    switch (inst.strategy)
    {
        case Strategy::A:
            t.at1 = 1.0;
            break;
        case Strategy::B:
            if (inst.symmetric)
            {
                t.at0 = t.at2 = 1.0 / (2.0 * i0);
                t.at1 = (i0 - 1.0) / i0;
            }
            else
            {
                double const w_i0 = std::pow(inst.omega(), i0);
                double const w_prev = std::pow(inst.omega(), i0 - 1);
                t.at0 = (q - p) / (1.0 - w_i0);
                t.at1 = 2.0 * p * (1.0 - w_prev) / (1.0 - w_i0);
                t.at2 = (q - p) * w_i0 / (1.0 - w_i0);
            }
            break;
        case Strategy::C: {
            double const w_i0 = std::pow(inst.omega(), i0);
            t.at0 = 1.0 / (1.0 + w_i0);
            t.at2 = w_i0 / (1.0 + w_i0);
            break;
        }
    }
    return t;
}

BarrierTriple always_stop_times(Instance const& inst)
{
    BarrierTriple t;
    if (inst.strategy == Strategy::A)
        return t;
    int const i0 = inst.i0();
    if (inst.symmetric)
    {
        // Symmetric ruin on (0, N) from x: E[T; hit N] = x (N^2 - x^2) / (3N)
        double const n = i0;
        if (inst.strategy == Strategy::B)
        {
            t.at0 = (n * n + 2.0) / (6.0 * n);
            t.at1 = 2.0 * (n * n - 1.0) / (3.0 * n);
        }
        else
        {
            t.at0 = n * n / 2.0;
        }
        t.at2 = t.at0;
        return t;
    }

    double const p = inst.p();
    double const q = inst.q();
    double const w_i0 = std::pow(inst.omega(), i0);
    double const w_prev = std::pow(inst.omega(), i0 - 1);

    if (inst.strategy == Strategy::B)
    {
        BarrierTriple const prob = always_stop_probabilities(inst);
        double const gap = w_i0 - 1.0;
        double const base
            = 1.0 / ((q - p) * gap) + i0 * (w_i0 + 1.0) / (gap * gap);
        t.at0 = base + prob.at0;
        t.at2 = w_i0 * base + prob.at2;
        t.at1 = -(2.0 * p * (w_prev + 1.0) / ((q - p) * gap)
                  + 4.0 * i0 * w_i0 / (gap * gap))
                + prob.at1;
        return t;
    }

    double const den = (q - p) * (1.0 + w_i0) * (1.0 + w_i0);
    t.at0 = i0 * (1.0 - w_i0) / den;
    t.at2 = w_i0 * t.at0;
    return t;
}

//! Killed ruin time for s = 0: omega^{-i0} dphi2/dz at z = 1.
double no_stop_ruin_time(Instance const& inst)
{
    if (inst.symmetric)
        return inf;
    DerivativeBundle const d = derivatives_at_1(inst.params);
    return d.dphi2 / std::pow(inst.omega(), inst.i0());
}

// Barrier sequence X_k = c phi^(k - k0) on the mfb's; derivatives at z = 1.
struct GeometricSequence
{
    double c{0};
    double dc{0};
    double phi{0};
    double dphi{0};
    int k0{0};

    double derivative(int k) const
    {
        int const j = k - k0;
        double const pj = std::pow(phi, j);
        double const pj1 = j > 0 ? std::pow(phi, j - 1) : 0.0;
        return dc * pj + c * j * pj1 * dphi;
    }

    //! Sum of derivative(k) over k > kmax.
    double derivative_tail(int kmax) const
    {
        int const jstart = kmax - k0 + 1;
        double const one_minus = 1.0 - phi;
        double const geo = std::pow(phi, jstart) / one_minus;
        double const arith = (jstart * std::pow(phi, jstart - 1) * one_minus
                              + std::pow(phi, jstart))
                             / (one_minus * one_minus);
        return dc * geo + c * dphi * arith;
    }
};

struct OpenRegimeDerivatives
{
    double x0_dz{0};         //!< d/dz of the k = 0 generating function
    GeometricSequence seq;   //!< barriers k >= first_mfb
    int first_mfb{1};
    double scale{1};         //!< 1/(1-s) for player B, 1 otherwise
};

OpenRegimeDerivatives open_regime_derivatives(Instance const& inst)
{
    WalkParams const& params = inst.params;
    int const i0 = params.i0;
    double const s = params.s;
    double const q = params.q();

    RootPair const r = tau_roots(1.0, params);
    PhiPair const f = phi_roots(theta(1.0, params));
    DerivativeBundle const d = derivatives_at_1(params);
    double const dd = power_difference(r, i0);
    double const ddz = power_difference_dz(r, params, i0);
    double const w_i0 = std::pow(params.omega(), i0);

    OpenRegimeDerivatives out;
    out.seq.phi = f.phi2;
    out.seq.dphi = d.dphi2;

    if (inst.strategy == Strategy::C)
    {
        double const sden = std::pow(r.tau1, i0) + std::pow(r.tau2, i0)
                            - f.phi2;
        double const dsden = i0
                                 * (std::pow(r.tau1, i0 - 1) * d.dtau1
                                    + std::pow(r.tau2, i0 - 1) * d.dtau2)
                             - d.dphi2;
        out.x0_dz = -dsden / (sden * sden);
        // W_k = D phi2^(k-1) / (q (1-s) z S)
        out.seq.k0 = 1;
        out.seq.c = dd / (q * (1.0 - s) * sden);
        out.seq.dc = (ddz * sden - dd * (sden + dsden))
                     / (q * (1.0 - s) * sden * sden);
        out.first_mfb = 2;
        return out;
    }

    // U_k = D phi2^k / (q (1-s) z omega^i0)
    out.x0_dz = d.dphi2 / w_i0;
    out.seq.k0 = 0;
    out.seq.c = dd / (q * (1.0 - s) * w_i0);
    out.seq.dc = (ddz - dd) / (q * (1.0 - s) * w_i0);
    out.first_mfb = 1;
    if (inst.strategy == Strategy::B)
        out.scale = 1.0 / (1.0 - s);
    return out;
}

void require_time_derivatives(Instance const& inst)
{
    if (inst.symmetric && inst.regime != StopRegime::Never)
        throw UnsupportedRegime(
            "per-barrier times at p = 1/2 have no closed form here; use the "
            "exact oracle");
}

}  // namespace

double AbsorptionProfile::at(int k) const
{
    if (k == 0)
        return p0;
    if (k < 0 || k > static_cast<int>(pk.size()))
        return 0.0;
    return pk[k - 1];
}

double AbsorptionProfile::total() const
{
    return p0 + std::accumulate(pk.begin(), pk.end(), 0.0) + tail_bound;
}

double TimeProfile::sum() const
{
    return std::accumulate(et.begin(), et.end(), 0.0) + et_tail;
}

AbsorptionProfile absorption_profile(Instance const& inst, int kmax)
{
    require_kmax(kmax);
    AbsorptionProfile prof;
    prof.pk.assign(kmax, 0.0);
    int const i0 = inst.i0();
    double const w = inst.omega();

    if (inst.regime == StopRegime::Never)
    {
        prof.p0 = w <= 1.0 ? 1.0 : std::pow(w, -i0);
        prof.escape_mass = 1.0 - prof.p0;
        return prof;
    }
    if (inst.regime == StopRegime::Always)
    {
        BarrierTriple const t = always_stop_probabilities(inst);
        prof.p0 = t.at0;
        prof.pk[0] = t.at1;
        prof.pk[1] = t.at2;
        return prof;
    }

    double const s = inst.s();
    prof.p0 = mgf_barrier(inst, 1.0, 0);
    for (int k = 1; k <= kmax; ++k)
    {
        if (!is_mfb(inst.strategy, k))
            continue;
        prof.pk[k - 1] = s * mgf_barrier(inst, 1.0, k);
    }
    double const phi2 = phi_roots(theta(1.0, inst.params)).phi2;
    prof.tail_bound = prof.pk.back() * phi2 / (1.0 - phi2);
    return prof;
}

double bc_ratio(WalkParams const& params)
{
    if (!(params.s > 0.0 && params.s < 1.0))
        throw UnsupportedRegime("the B/C ratio needs 0 < s < 1");
    double const s = params.s;
    double const phi2 = phi_roots(theta(1.0, params)).phi2;
    if (params.p == 0.5)
        return phi2 * (2.0 - phi2) / (1.0 - s);
    double const w_i0 = std::pow(params.omega(), params.i0);
    return phi2 * (1.0 + w_i0 - phi2) / ((1.0 - s) * w_i0);
}

double mean_time_any(Instance const& inst)
{
    int const i0 = inst.i0();
    double const p = inst.p();
    double const q = inst.q();
    double const s = inst.s();
    double const w = inst.omega();

    if (inst.regime == StopRegime::Never)
    {
        if (w > 1.0)
            throw NotAlmostSure(
                "s = 0 and omega > 1: the walk escapes with probability "
                "1 - omega^-i0");
        return inst.symmetric ? inf : i0 / (q - p);
    }
    if (inst.regime == StopRegime::Always)
    {
        switch (inst.strategy)
        {
            case Strategy::A:
                return 0.0;
            case Strategy::B:
                return i0;
            case Strategy::C: {
                if (inst.symmetric)
                    return static_cast<double>(i0) * i0;
                double const w_i0 = std::pow(w, i0);
                return i0 * (1.0 - w_i0) / ((q - p) * (1.0 + w_i0));
            }
        }
    }

    PhiPair const f = phi_roots(theta(1.0, inst.params));
    double const odds = (1.0 - s) / s;
    double const mean_a = inst.symmetric
                              ? i0 * odds * (1.0 - f.phi2)
                              : i0 * odds * (1.0 - 1.0 / f.phi1);
    switch (inst.strategy)
    {
        case Strategy::A:
            return mean_a;
        case Strategy::B:
            return mean_a / (1.0 - s);
        case Strategy::C: {
            if (inst.symmetric)
                return i0 * (2.0 * i0 + odds * (1.0 - f.phi2)) / (2.0 - f.phi2);
            double const w_neg = std::pow(w, -i0);
            return i0 * (odds * (1.0 - 1.0 / f.phi1) + (1.0 - w_neg) / (p - q))
                   / (1.0 + w_neg - 1.0 / f.phi1);
        }
    }
    return 0.0;
}

double mean_time_at(Instance const& inst, int k)
{
    if (k < 0)
        throw ParameterError("barrier index must be non-negative");

    if (inst.regime == StopRegime::Never)
        return k == 0 ? no_stop_ruin_time(inst) : 0.0;
    if (inst.regime == StopRegime::Always)
    {
        BarrierTriple const t = always_stop_times(inst);
        switch (k)
        {
            case 0:
                return t.at0;
            case 1:
                return t.at1;
            case 2:
                return t.at2;
            default:
                return 0.0;
        }
    }

    require_time_derivatives(inst);
    OpenRegimeDerivatives const d = open_regime_derivatives(inst);
    if (k == 0)
        return d.scale * d.x0_dz;
    if (k < d.first_mfb)
        return 0.0;
    return inst.s() * d.scale * d.seq.derivative(k);
}

TimeProfile time_profile(Instance const& inst, int kmax)
{
    require_kmax(kmax);
    TimeProfile t;
    try
    {
        t.m_total = mean_time_any(inst);
    }
    catch (NotAlmostSure const&)
    {
        t.m_total = inf;
        t.almost_sure = false;
    }
    t.et.assign(kmax + 1, 0.0);

    if (inst.regime != StopRegime::Sometimes)
    {
        for (int k = 0; k <= std::min(kmax, 2); ++k)
            t.et[k] = mean_time_at(inst, k);
        return t;
    }

    require_time_derivatives(inst);
    OpenRegimeDerivatives const d = open_regime_derivatives(inst);
    double const weight = inst.s() * d.scale;
    t.et[0] = d.scale * d.x0_dz;
    for (int k = d.first_mfb; k <= kmax; ++k)
        t.et[k] = weight * d.seq.derivative(k);
    t.et_tail = weight * d.seq.derivative_tail(kmax);
    return t;
}

double conditional_mean_time(TimeProfile const& times,
                             AbsorptionProfile const& absorption,
                             int k)
{
    double const prob = absorption.at(k);
    if (k < 0 || k >= static_cast<int>(times.et.size()) || prob == 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    return times.et[k] / prob;
}

}  // namespace ruin
