#pragma once

#include <functional>

#include "vvl/cutoff.hpp"
#include "vvl/field.hpp"
#include "vvl/halfstrip.hpp"
#include "vvl/verdicts.hpp"

namespace vvl {

/// Plane-parallel channel data: u_0 = (g1(z), g2(x,z), 0) on
/// (0,L) x (0,h), forcing f = (f1, f2, 0), final time T. The y direction is
/// quotiented out and enters norms only through axial_factor.
struct ChannelProblem {
    std::function<double(double)> g1;                  // z
    std::function<double(double, double)> g2;          // (x, z)
    std::function<double(double, double)> f1;          // (z, t); may be null
    std::function<double(double, double, double)> f2;  // (x, z, t); may be null
    double h = 1.0;
    double L = 1.0;  // x-period
    double T = 0.25;
    double axial_factor = 1.0;  // y-width of the periodic box
};

struct ChannelState {
    ScalarField1D u1;
    ScalarField2D u2;
    double t = 0.0;
};

struct ChannelGrids {
    AxisPtr z_axis;
    PeriodicAxis x_axis;
    std::shared_ptr<const TimeGrid> time_grid;
    std::vector<std::size_t> sample_steps;
};

/// Layer-resolving grids for one viscosity: wall grading targets
/// layer_factor * sqrt(eps T); quadratic time grid; `samples` snapshot times.
ChannelGrids make_channel_grids(const ChannelProblem& p, double eps, std::size_t nz,
                                std::size_t nx, std::size_t n_steps, std::size_t samples,
                                double layer_factor = 0.25);

/// Weakly nonlinear viscous system: d_t u1 = eps d_zz u1 + f1;
/// d_t u2 + u1 d_x u2 = eps Lap u2 + f2; no-slip at z in {0, h}.
Trajectory<ChannelState> solve_channel_viscous(const ChannelProblem& p, double eps,
                                               const ChannelGrids& grids);

/// Symmetry-reduced Euler solution by exact characteristics.
Trajectory<ChannelState> solve_channel_euler(const ChannelProblem& p, const ChannelGrids& grids);

/// Closed forms behind the Euler solver (also used by the corrector).
double channel_euler_u1(const ChannelProblem& p, double z, double t);
/// A(z,t) = int_0^t u1^0(z,s) ds, the x-displacement of the characteristics.
double channel_euler_displacement(const ChannelProblem& p, double z, double t);
double channel_euler_u2(const ChannelProblem& p, double x, double z, double t);

CutoffProfile channel_cutoff(const ChannelProblem& p);  // 1 on [0, h/4], 0 past h/2

struct ChannelCorrector {
    Trajectory<ScalarField1D> theta1;
    Trajectory<ScalarField2D> theta2;
    double eps = 0.0;
};

/// Assembled Theta_1 (both wall layers, cutoffs applied); z in [0, h].
double channel_theta1_at(const ChannelProblem& p, double eps, double z, double t);

ChannelCorrector build_channel_corrector(const ChannelProblem& p,
                                         const Trajectory<ChannelState>& euler, double eps,
                                         const ChannelGrids& grids);

/// v_eps = u_eps - u0 - Theta, sampled on the shared grids/times.
Trajectory<ChannelState> channel_remainder(const Trajectory<ChannelState>& viscous,
                                           const Trajectory<ChannelState>& euler,
                                           const ChannelCorrector& corrector);

/// curl (v1, v2, 0) = (-d_z v2, d_z v1, d_x v2).
struct ChannelVorticity {
    ScalarField2D omega1;
    ScalarField1D omega2;
    ScalarField2D omega3;
};
ChannelVorticity channel_vorticity(const ChannelState& state);

/// Lighthill vorticity bounds for the viscous flow, one report per estimate
/// (omega1: L1, omega2: L1, omega3: Linf), with 5% discretization slack.
std::vector<BoundsReport> lighthill_bounds_check(const Trajectory<ChannelState>& viscous,
                                                 const ChannelProblem& p);

}  // namespace vvl
