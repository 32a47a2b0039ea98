#pragma once

#include <span>
#include <vector>

namespace ruin {

/*!
 * Thomas-algorithm solver for a fixed tridiagonal matrix.
 *
 * Row i reads sub[i] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = rhs[i]; sub[0]
 * and sup[n-1] are ignored. The factorization is computed once so several
 * right-hand sides can share it. No pivoting: the matrix must be diagonally
 * dominant by rows or columns.
 */
class TridiagonalSolver
{
  public:
    TridiagonalSolver(std::vector<double> sub,
                      std::vector<double> diag,
                      std::vector<double> sup);

    std::size_t size() const { return denom_.size(); }

    std::vector<double> solve(std::span<double const> rhs) const;

  private:
    std::vector<double> sub_;
    std::vector<double> denom_;
    std::vector<double> c_prime_;
};

}  // namespace ruin
