#pragma once

#include <functional>

#include "vvl/field.hpp"

namespace vvl {

/// Time signal prescribed at a wall, with its time derivative.
struct BoundarySignal {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    double final_time = 0.0;  // signal domain is [0, final_time]

    double initial() const { return value(0.0); }
};

struct LayerProfileParams {
    double eps = 0.0;
    double t = 0.0;
    AxisPtr eta_grid;  // wall-distance axis on [0, eta_max]
};

/// Scaled complementary error function (1/sqrt(2 pi)) int_z^inf e^{-y^2/2} dy.
/// Satisfies scaled_erfc(0) = 1/2 and decays to 0.
double scaled_erfc(double z);

/// Half-line heat profile with wall data g:
///   Phi(eta, t) = 2 g(0) erfc(eta / sqrt(2 eps t))
///               + 2 int_0^t g'(s) erfc(eta / sqrt(2 eps (t-s))) ds.
/// The convolution is evaluated after the substitution s = t - sigma^2,
/// which removes the endpoint kernel singularity.
ScalarField1D phi_halfline(const BoundarySignal& g, const LayerProfileParams& params);

/// Pointwise evaluation of the same profile at a single wall distance.
double phi_halfline_at(const BoundarySignal& g, double eps, double t, double eta);

/// Wall-normal derivative of the profile, via the Gaussian kernel
///   K(eta, t) = -(1 / (2 sqrt(pi))) (eps t)^{-1/2} e^{-eta^2 / (4 eps t)}.
ScalarField1D phi_eta_derivative(const BoundarySignal& g, const LayerProfileParams& params);

double phi_eta_derivative_at(const BoundarySignal& g, double eps, double t, double eta);

/// Pairing of the profile's wall-normal derivative with a test function on
/// [0, eta_max]; converges to -g(t) * testfn(0) as eps -> 0.
double delta_sheet_pairing(const BoundarySignal& g, double eps, double t,
                           const std::function<double(double)>& testfn, const AxisPtr& eta_grid);

/// Gaussian tail truncation radius 12 sqrt(2 eps T).
double layer_truncation(double eps, double T);

/// Constant boundary signal (derivative identically zero).
BoundarySignal constant_signal(double c, double T);

}  // namespace vvl
