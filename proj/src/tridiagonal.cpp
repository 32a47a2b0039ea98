#include "ruin/tridiagonal.hpp"

#include <stdexcept>

#include "ruin/core.hpp"

namespace ruin {

TridiagonalSolver::TridiagonalSolver(std::vector<double> sub,
                                     std::vector<double> diag,
                                     std::vector<double> sup)
    : sub_{std::move(sub)}
{
    std::size_t const n = diag.size();
    if (n == 0 || sub_.size() != n || sup.size() != n)
        throw std::invalid_argument("tridiagonal bands must share a size");

    denom_.resize(n);
    c_prime_.resize(n);
    denom_[0] = diag[0];
    c_prime_[0] = sup[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i)
    {
        denom_[i] = diag[i] - sub_[i] * c_prime_[i - 1];
        if (denom_[i] == 0.0)
            throw NumericalError("singular tridiagonal system");
        c_prime_[i] = sup[i] / denom_[i];
    }
}

std::vector<double> TridiagonalSolver::solve(std::span<double const> rhs) const
{
    std::size_t const n = size();
    if (rhs.size() != n)
        throw std::invalid_argument("right-hand side has the wrong size");

    std::vector<double> x(n);
    x[0] = rhs[0] / denom_[0];
    // Forward sweep
    for (std::size_t i = 1; i < n; ++i)
        x[i] = (rhs[i] - sub_[i] * x[i - 1]) / denom_[i];
    // Back substitution
    for (std::size_t i = n - 1; i > 0; --i)
        x[i - 1] -= c_prime_[i - 1] * x[i];
    return x;
}

}  // namespace ruin
