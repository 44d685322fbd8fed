#pragma once

#include <functional>
#include <vector>

#include "vvl/field.hpp"

namespace vvl {
namespace oracle {

enum class Geometry { flat, radial };

/// Forward-Euler reference instance for one wall-normal line:
///   du/dt = eps (Lap u - potential u) + forcing,  Dirichlet data at both ends.
struct Line1D {
    double lo = 0.0, hi = 1.0;
    std::size_t n = 64;
    double eps = 0.0;
    Geometry geometry = Geometry::flat;
    bool include_inverse_r2 = false;  // swirl potential eps u / r^2
    std::function<double(double)> initial;
    std::function<double(double, double)> forcing;   // (z, t); may be null
    std::function<double(double)> bc_lo, bc_hi;      // (t); null means 0
};

/// Forward-Euler reference instance on periodic x bounded rectangle:
///   du/dt + drift(z,t) du/dx = eps Lap u + forcing,  Dirichlet top/bottom.
/// In radial geometry Lap = (1/r) d/dr (r d/dr) + (1/r^2) d^2/dphi^2 and the
/// drift is expected to already include the 1/r factor.
struct Strip2D {
    double period = 1.0;
    std::size_t nx = 32;
    double lo = 0.0, hi = 1.0;
    std::size_t nz = 64;
    double eps = 0.0;
    Geometry geometry = Geometry::flat;
    std::function<double(double, double)> drift;                  // (z, t)
    std::function<double(double, double)> initial;                // (x, z)
    std::function<double(double, double, double)> forcing;        // (x, z, t); may be null
    std::function<double(double, double)> bc_lo, bc_hi;           // (x, t); null means 0
};

/// Integrates to each requested time with explicit Euler and centered
/// differences; refuses unstable instances. Returns one snapshot per sample
/// time (values on the uniform grid, z index j, value[j]).
std::vector<std::vector<double>> explicit_reference_solver(const Line1D& p,
                                                           const std::vector<double>& sample_times,
                                                           double max_drift_hint = 0.0);

/// 2D variant; snapshot layout matches ScalarField2D (row j = periodic trace).
std::vector<std::vector<double>> explicit_reference_solver(const Strip2D& p,
                                                           const std::vector<double>& sample_times);

/// Adaptive Simpson bisection quadrature with certified error estimate.
double reference_quadrature(const std::function<double(double)>& f, double a, double b, double tol,
                            std::size_t budget = 1u << 20);

}  // namespace oracle
}  // namespace vvl
