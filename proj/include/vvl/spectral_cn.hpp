#pragma once

#include <span>
#include <vector>

#include "vvl/dft.hpp"
#include "vvl/field.hpp"
#include "vvl/tridiag.hpp"

namespace vvl {

/// Tridiagonal wall-normal diffusion operator on a graded axis (interior
/// rows; the boundary rows are Dirichlet and never applied).
struct NormalOperator {
    AxisPtr axis;
    std::vector<double> cm, cc, cp;
};

/// Plain second derivative d^2/dz^2.
NormalOperator make_flat_laplacian(const AxisPtr& axis);

/// Conservative radial operator (1/r) d/dr (r d/dr).
NormalOperator make_radial_laplacian(const AxisPtr& axis);

/// One Crank-Nicolson step of du/dt = eps (L u - alpha u) + F with Dirichlet
/// values bc0/bc1 at the two ends. `forcing` may be empty (treated as zero);
/// alpha holds the per-node mode penalty (k^2, or m^2/r^2).
void cn_mode_step(const NormalOperator& op, std::span<const double> alpha, double eps, double dt,
                  std::vector<cplx>& u, std::span<const cplx> forcing, cplx bc0, cplx bc1,
                  int time_index);

/// Real-valued convenience overload (axisymmetric components).
void cn_step(const NormalOperator& op, std::span<const double> alpha, double eps, double dt,
             std::vector<double>& u, std::span<const double> forcing, double bc0, double bc1,
             int time_index);

}  // namespace vvl
