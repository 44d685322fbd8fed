#pragma once

#include <functional>

#include "vvl/cutoff.hpp"
#include "vvl/field.hpp"
#include "vvl/halfstrip.hpp"
#include "vvl/verdicts.hpp"

namespace vvl {

/// Annular parallel pipe data: u_0 = u0phi(r) e_phi + u0x(phi,r) e_x on
/// r in (rL, rR), phi-period 2 pi; the axial direction enters norms only
/// through axial_factor. CSF is the u0x == 0 special case.
struct PipeProblem {
    std::function<double(double)> u0phi;                // r
    std::function<double(double, double)> u0x;          // (phi, r)
    std::function<double(double, double)> fphi;         // (r, t); may be null
    std::function<double(double, double, double)> fx;   // (phi, r, t); may be null
    double rL = 0.5;
    double rR = 1.5;
    double T = 0.25;
    double axial_factor = 1.0;  // axial period L
};

struct PipeState {
    ScalarField1D uphi;
    ScalarField2D ux;
    ScalarField1D pressure;  // normalized p(rL) = 0
    double t = 0.0;
};

struct PipeGrids {
    AxisPtr r_axis;
    PeriodicAxis phi_axis;  // period 2 pi
    std::shared_ptr<const TimeGrid> time_grid;
    std::vector<std::size_t> sample_steps;
};

PipeGrids make_pipe_grids(const PipeProblem& p, double eps, std::size_t nr, std::size_t nphi,
                          std::size_t n_steps, std::size_t samples, double layer_factor = 0.25);

/// Weakly coupled cylindrical system: d_t uphi = eps (Lap uphi - uphi/r^2)
/// + fphi; d_t ux + (uphi/r) d_phi ux = eps Lap ux + fx; no-slip walls.
Trajectory<PipeState> solve_pipe_viscous(const PipeProblem& p, double eps, const PipeGrids& grids);

/// Exact angular characteristics for the reduced Euler system.
Trajectory<PipeState> solve_pipe_euler(const PipeProblem& p, const PipeGrids& grids);

double pipe_euler_uphi(const PipeProblem& p, double r, double t);
/// Rotation angle A(r,t) = int_0^t uphi^0(r,s)/r ds.
double pipe_euler_angle(const PipeProblem& p, double r, double t);
double pipe_euler_ux(const PipeProblem& p, double phi, double r, double t);

/// p(r) = int_{rL}^{r} uphi(s)^2 / s ds by graded-trapezoid quadrature.
ScalarField1D recover_pressure(const ScalarField1D& uphi);

CutoffProfile pipe_cutoff(const PipeProblem& p);  // a0 = (rR - rL)/8, support 2 a0

struct PipeCorrector {
    Trajectory<ScalarField1D> thetaphi;
    Trajectory<ScalarField2D> thetax;
    double eps = 0.0;
};

/// Assembled Theta_phi (both wall layers, cutoffs applied); r in [rL, rR].
double pipe_thetaphi_at(const PipeProblem& p, double eps, double r, double t);

PipeCorrector build_pipe_corrector(const PipeProblem& p, const Trajectory<PipeState>& euler,
                                   double eps, const PipeGrids& grids);

Trajectory<PipeState> pipe_remainder(const Trajectory<PipeState>& viscous,
                                     const Trajectory<PipeState>& euler,
                                     const PipeCorrector& corrector);

/// curl(F_phi e_phi + F_x e_x) = (-d_r F_x) e_phi + ((1/r) d_r (r F_phi)) e_x
/// + ((1/r) d_phi F_x) e_r.
struct PipeVorticity {
    ScalarField2D omega_phi;
    ScalarField1D omega_x;
    ScalarField2D omega_r;
};
PipeVorticity pipe_vorticity(const PipeState& state);

}  // namespace vvl
