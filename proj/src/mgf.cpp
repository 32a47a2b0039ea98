#include "ruin/mgf.hpp"

#include <cmath>
#include <string>

namespace ruin {
namespace {

void require_open_s(WalkParams const& params)
{
    if (!(params.s > 0.0 && params.s < 1.0))
        throw UnsupportedRegime(
            "closed-form generating functions need 0 < s < 1; s = 0 and s = 1 "
            "are served by the special-case metrics");
}

void require_k(int k)
{
    if (k < 0)
        throw ParameterError("barrier index must be non-negative");
}

bool repeated_root(WalkParams const& params, double z)
{
    return z == 1.0 && params.p == 0.5;
}

}  // namespace

double mgf_A(WalkParams const& params, double z, int k)
{
    require_open_s(params);
    require_k(k);
    CharSnapshot const c = characterize(z, params);
    double const phi2 = c.phi.phi2;
    double const s = params.s;
    int const i0 = params.i0;

    if (repeated_root(params, z))
    {
        if (k == 0)
            return phi2;
        return 2.0 * i0 * std::pow(phi2, k) / (1.0 - s);
    }
    if (k == 0)
        return phi2 / c.data.omega_pow;
    // (tau2^i0 - tau1^i0) phi2^k / (q (1-s) z (tau2 - tau1) omega^i0)
    return power_difference(c.roots, i0) * std::pow(phi2, k)
           / (params.q() * (1.0 - s) * z * c.data.omega_pow);
}

double mgf_B(WalkParams const& params, double z, int k)
{
    double const u = mgf_A(params, z, k);
    double const s = params.s;
    return k == 1 ? (u - 1.0) / (1.0 - s) : u / (1.0 - s);
}

double mgf_C(WalkParams const& params, double z, int k)
{
    require_open_s(params);
    require_k(k);
    CharSnapshot const c = characterize(z, params);
    double const phi2 = c.phi.phi2;
    double const s = params.s;
    int const i0 = params.i0;

    if (repeated_root(params, z))
    {
        double const den = 2.0 - phi2;
        if (k == 0)
            return 1.0 / den;
        if (k == 1)
            return 2.0 * i0 / den;
        return 2.0 * i0 * std::pow(phi2, k - 1) / ((1.0 - s) * den);
    }

    RootPair const& r = c.roots;
    double const den = std::pow(r.tau1, i0) + std::pow(r.tau2, i0) - phi2;
    if (k == 0)
        return 1.0 / den;
    double const d = power_difference(r, i0);
    double const q = params.q();
    if (k == 1)
        return d / (q * z * den);
    return d * std::pow(phi2, k - 1) / (q * (1.0 - s) * z * den);
}

double mgf_barrier(Instance const& inst, double z, int k)
{
    switch (inst.strategy)
    {
        case Strategy::A:
            return mgf_A(inst.params, z, k);
        case Strategy::B:
            return mgf_B(inst.params, z, k);
        case Strategy::C:
            return mgf_C(inst.params, z, k);
    }
    return 0.0;
}

double InteriorCoefficients::value(int n) const
{
    if (linear)
        return ((i0 - n) * lower_outflow + n * upper_outflow) / i0;
    // [omega^n D_{i0-n} f(0) + D_n f(i0)] / D_{i0}
    double const w = roots.tau1 * roots.tau2;
    return (std::pow(w, n) * power_difference(roots, i0 - n) * lower_outflow
            + power_difference(roots, n) * upper_outflow)
           / power_difference(roots, i0);
}

double InteriorCoefficients::from_coefficients(int n) const
{
    if (linear)
        return a * n + b;
    return a * std::pow(roots.tau1, n) + b * std::pow(roots.tau2, n);
}

InteriorCoefficients
interior_coefficients(Instance const& inst, double z, std::int64_t segment)
{
    require_open_s(inst.params);
    if (segment < 0)
        throw ParameterError("segment index must be non-negative");

    double const s = inst.s();
    auto outflow = [&](std::int64_t k) -> double {
        if (k == 0)
            return 0.0;
        int const kk = static_cast<int>(k);
        switch (inst.strategy)
        {
            case Strategy::A:
                return (1.0 - s) * mgf_A(inst.params, z, kk);
            case Strategy::B:
                // the t = 0 departure from i0 always happens
                return k == 1 ? 1.0 + (1.0 - s) * mgf_B(inst.params, z, 1)
                              : (1.0 - s) * mgf_B(inst.params, z, kk);
            case Strategy::C:
                return k == 1 ? mgf_C(inst.params, z, 1)
                              : (1.0 - s) * mgf_C(inst.params, z, kk);
        }
        return 0.0;
    };

    InteriorCoefficients c;
    c.i0 = inst.i0();
    c.roots = tau_roots(z, inst.params);
    c.lower_outflow = outflow(segment);
    c.upper_outflow = outflow(segment + 1);
    c.linear = repeated_root(inst.params, z);

    double const f0 = c.lower_outflow;
    double const f1 = c.upper_outflow;
    if (c.linear)
    {
        c.a = (f1 - f0) / c.i0;
        c.b = f0;
    }
    else
    {
        double const t1 = std::pow(c.roots.tau1, c.i0);
        double const t2 = std::pow(c.roots.tau2, c.i0);
        c.a = (t2 * f0 - f1) / (t2 - t1);
        c.b = (f1 - t1 * f0) / (t2 - t1);
    }
    return c;
}

double mgf_interior(Instance const& inst, double z, LatticeState const& state)
{
    if (state.on_barrier())
        throw ParameterError("mgf_interior needs an interior state (n > 0)");
    InteriorCoefficients const c
        = interior_coefficients(inst, z, state.segment());
    return c.value(state.offset());
}

double mgf_value(Instance const& inst, double z, std::int64_t position)
{
    LatticeState const state{position, inst.i0()};
    if (state.on_barrier())
        return mgf_barrier(inst, z, static_cast<int>(state.segment()));
    return mgf_interior(inst, z, state);
}

double mgf_B_s1(S1Segment segment, int n, double z, WalkParams const& params)
{
    if (params.s != 1.0)
        throw UnsupportedRegime("segment generating functions apply to s = 1");
    int const i0 = params.i0;
    if (n < 0 || n > i0)
        throw ParameterError("segment offset must lie in [0, i0]");

    RootPair const r = tau_roots(z, params);
    double const d = power_difference(r, i0);
    double const w = params.omega();
    double const q = params.q();
    double const p = params.p;

    if (segment == S1Segment::Lower)
    {
        if (n == 0)
            return 1.0 / d;
        if (n == i0)
            return w * power_difference(r, i0 - 1) / d;
        return power_difference(r, n) / (q * z * d);
    }
    if (n == 0)
        return power_difference(r, i0 - 1) / d;
    if (n == i0)
        return std::pow(w, i0 - 1) / d;
    return std::pow(w, n) * power_difference(r, i0 - n) / (p * z * d);
}

}  // namespace ruin
