#pragma once

#include <vector>

namespace ruin {

/*!
 * Richardson-extrapolated one-sided derivative f'(x) from below.
 *
 * Backward differences (f(x) - f(x - h))/h at h0, h0/2, ... are combined in
 * a Neville tableau, cancelling one power of h per level. Only f at points
 * <= x is evaluated, so x may sit on the edge of f's domain.
 */
template<class F>
double richardson_backward(F&& f, double x, double h0 = 1.0 / 64, int levels = 7)
{
    double const fx = f(x);
    std::vector<double> t(levels);
    double h = h0;
    for (int i = 0; i < levels; ++i, h *= 0.5)
        t[i] = (fx - f(x - h)) / h;
    for (int j = 1; j < levels; ++j)
    {
        double const factor = static_cast<double>(1u << j);
        for (int i = levels - 1; i >= j; --i)
            t[i] = (factor * t[i] - t[i - 1]) / (factor - 1.0);
    }
    return t[levels - 1];
}

//! Central difference with Richardson extrapolation (even powers of h).
template<class F>
double richardson_central(F&& f, double x, double h0 = 1.0 / 64, int levels = 5)
{
    std::vector<double> t(levels);
    double h = h0;
    for (int i = 0; i < levels; ++i, h *= 0.5)
        t[i] = (f(x + h) - f(x - h)) / (2 * h);
    for (int j = 1; j < levels; ++j)
    {
        double const factor = static_cast<double>(1u << (2 * j));
        for (int i = levels - 1; i >= j; --i)
            t[i] = (factor * t[i] - t[i - 1]) / (factor - 1.0);
    }
    return t[levels - 1];
}

}  // namespace ruin
