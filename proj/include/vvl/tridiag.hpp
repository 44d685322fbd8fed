#pragma once

#include <cmath>
#include <vector>

#include "vvl/error.hpp"

namespace vvl {

/// Thomas elimination for a tridiagonal system; `lower[i]` multiplies x[i-1]
/// and `upper[i]` multiplies x[i+1]. Overwrites rhs with the solution.
template <class Scalar>
void solve_tridiagonal(const std::vector<Scalar>& lower, const std::vector<Scalar>& diag,
                       const std::vector<Scalar>& upper, std::vector<Scalar>& rhs,
                       int time_index = -1) {
    const std::size_t n = diag.size();
    static thread_local std::vector<Scalar> c;
    c.assign(n, Scalar{});
    Scalar piv = diag[0];
    if (std::abs(piv) == 0.0) throw SolverError("tridiagonal pivot breakdown", time_index);
    rhs[0] /= piv;
    for (std::size_t i = 1; i < n; ++i) {
        c[i - 1] = upper[i - 1] / piv;
        piv = diag[i] - lower[i] * c[i - 1];
        if (std::abs(piv) == 0.0) throw SolverError("tridiagonal pivot breakdown", time_index);
        rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / piv;
    }
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
}

/// Second-derivative stencil coefficients on a nonuniform axis interior node:
/// u'' ~ cm u_{j-1} + cc u_j + cp u_{j+1}.
inline void d2_stencil(double hm, double hp, double& cm, double& cc, double& cp) {
    cm = 2.0 / (hm * (hm + hp));
    cp = 2.0 / (hp * (hm + hp));
    cc = -cm - cp;
}

}  // namespace vvl
