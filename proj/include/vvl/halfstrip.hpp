#pragma once

#include <functional>

#include "vvl/dft.hpp"
#include "vvl/field.hpp"

namespace vvl {

/// Drift-diffusion problem on a periodic half strip:
///   dPsi/dt - eps (d^2/dtau^2 + d^2/deta^2) Psi + U(eta,t) dPsi/dtau = G,
/// Psi periodic in tau, Psi = g(tau,t) at eta = 0, Psi -> 0 far from the
/// wall, Psi = 0 at t = 0. The drift must vanish at the wall.
struct HalfStripProblem {
    std::function<double(double eta, double t)> drift;
    std::function<double(double tau, double eta, double t)> forcing;  // may be null
    // Modal forcing (coefficient of DFT slot m at height eta); preferred over
    // `forcing` when set, avoids per-step transforms.
    std::function<cplx(std::size_t m, double eta, double t)> forcing_modes;
    std::function<double(double tau, double t)> boundary;
    double period = 0.0;
    double eps = 0.0;
    PeriodicAxis tau_axis;
    AxisPtr eta_axis;
    std::shared_ptr<const TimeGrid> time_grid;
    std::vector<std::size_t> sample_steps;  // indices into time_grid->times
};

/// Sample steps {round(j/(count-1) * N)} guaranteeing endpoints; with the
/// quadratic time grid and count-1 dividing N these sit at T (j/(count-1))^2.
std::vector<std::size_t> make_sample_steps(std::size_t n_steps, std::size_t count);

/// Strang splitting: exact tau-advection per eta row (the drift does not
/// depend on tau) around a Crank-Nicolson diffusion step per tau mode.
Trajectory<ScalarField2D> solve_psi_halfstrip(const HalfStripProblem& problem);

}  // namespace vvl
