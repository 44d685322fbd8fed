#include "vvl/heat_kernels.hpp"

#include <cmath>
#include <numbers>

#include "vvl/gauss.hpp"

namespace vvl {

namespace {
constexpr std::size_t kConvolutionOrder = 80;
}

double scaled_erfc(double z) {
    if (!std::isfinite(z)) throw InvalidArgumentError("scaled_erfc: non-finite argument");
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

double layer_truncation(double eps, double T) { return 12.0 * std::sqrt(2.0 * eps * T); }

BoundarySignal constant_signal(double c, double T) {
    return BoundarySignal{[c](double) { return c; }, [](double) { return 0.0; }, T};
}

double phi_halfline_at(const BoundarySignal& g, double eps, double t, double eta) {
    if (t < 0.0 || t > g.final_time + 1e-12)
        throw SingularTimeError("phi_halfline: t outside signal domain");
    if (t == 0.0) return 0.0;
    const double root = std::sqrt(2.0 * eps);
    double acc = 2.0 * g.initial() * scaled_erfc(eta / (root * std::sqrt(t)));
    if (!g.derivative) return acc;  // constant wall signal
    // s = t - sigma^2, ds = -2 sigma dsigma
    acc += 2.0 * gauss_integrate(
                     [&](double sigma) {
                         return g.derivative(t - sigma * sigma) *
                                scaled_erfc(eta / (root * sigma)) * 2.0 * sigma;
                     },
                     0.0, std::sqrt(t), kConvolutionOrder);
    return acc;
}

ScalarField1D phi_halfline(const BoundarySignal& g, const LayerProfileParams& params) {
    ScalarField1D out(params.eta_grid);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = phi_halfline_at(g, params.eps, params.t, params.eta_grid->nodes[i]);
    return out;
}

namespace {

// K(eta, t) with the 2 sigma Jacobian absorbed: 2 sigma K(eta, sigma^2)
//   = -(1 / sqrt(pi eps)) e^{-eta^2 / (4 eps sigma^2)}.
double kernel_substituted(double eps, double sigma, double eta) {
    const double a = eta / (2.0 * std::sqrt(eps) * sigma);
    return -std::exp(-a * a) / std::sqrt(std::numbers::pi * eps);
}

}  // namespace

double phi_eta_derivative_at(const BoundarySignal& g, double eps, double t, double eta) {
    if (t <= 0.0) throw SingularTimeError("phi_eta_derivative: t must be positive");
    const double k0 = -std::exp(-eta * eta / (4.0 * eps * t)) /
                      (2.0 * std::sqrt(std::numbers::pi * eps * t));
    double acc = 2.0 * g.initial() * k0;
    if (!g.derivative) return acc;  // constant wall signal
    acc += 2.0 * gauss_integrate(
                     [&](double sigma) {
                         return g.derivative(t - sigma * sigma) * kernel_substituted(eps, sigma, eta);
                     },
                     0.0, std::sqrt(t), kConvolutionOrder);
    return acc;
}

ScalarField1D phi_eta_derivative(const BoundarySignal& g, const LayerProfileParams& params) {
    ScalarField1D out(params.eta_grid);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = phi_eta_derivative_at(g, params.eps, params.t, params.eta_grid->nodes[i]);
    return out;
}

double delta_sheet_pairing(const BoundarySignal& g, double eps, double t,
                           const std::function<double(double)>& testfn, const AxisPtr& eta_grid) {
    BoundarySignal gg = g;
    LayerProfileParams params{eps, t, eta_grid};
    ScalarField1D dphi = phi_eta_derivative(gg, params);
    for (std::size_t i = 0; i < dphi.size(); ++i) dphi[i] *= testfn(eta_grid->nodes[i]);
    double acc = 0.0;
    for (std::size_t i = 0; i < dphi.size(); ++i)
        acc += eta_grid->quadrature_weights[i] * dphi[i];
    return acc;
}

}  // namespace vvl
