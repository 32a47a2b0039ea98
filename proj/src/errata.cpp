#include "ruin/errata.hpp"

#include <cmath>
#include <limits>

#include "ruin/charpoly.hpp"

namespace ruin::errata {

double printed_theta(double z, WalkParams const& params)
{
    RootPair const r = tau_roots(z, params);
    int const i0 = params.i0;
    double const q = params.q();
    return power_difference(r, i0) / (q * z)
           - 2.0 * params.p / q * power_difference(r, i0 - 1);
}

double printed_mean_time_B(WalkParams const& params)
{
    PhiPair const f = phi_roots(theta(1.0, params));
    return params.i0 * (1.0 - f.phi2 / std::pow(params.omega(), params.i0));
}

double printed_ruin_time_no_stop(WalkParams const& params)
{
    double const p = params.p;
    double const q = params.q();
    int const i0 = params.i0;
    double const w = params.omega();
    if (p == 0.5)
        return std::numeric_limits<double>::infinity();
    if (w < 1.0)
        return i0 * std::pow(w, i0) / (q - p);
    return i0 / (p - q);
}

}  // namespace ruin::errata
