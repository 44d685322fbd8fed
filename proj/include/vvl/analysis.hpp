#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vvl/channel.hpp"
#include "vvl/mesh_ops.hpp"
#include "vvl/pipe.hpp"
#include "vvl/verdicts.hpp"

namespace vvl {

/// Discrete L^p norm (p in {1, 2, inf}); volume_factor multiplies the measure
/// before the 1/p root (quotiented directions, 2 pi angles). Ignored at p=inf.
double lp_norm(const ScalarField1D& field, double p, Measure measure = Measure::plain,
               double volume_factor = 1.0);
double lp_norm(const ScalarField2D& field, double p, Measure measure = Measure::plain,
               double volume_factor = 1.0);

/// Least-squares line through (log eps, log value); needs >= 3 points.
/// Nonpositive or non-finite values raise DegenerateSeriesError.
RateFit fit_rate(const NormSeries& series);

/// fit_rate with nonpositive series mapped to a degenerate-flagged fit.
RateFit fit_rate_or_degenerate(const NormSeries& series);

struct SweepPolicy {
    std::size_t normal_nodes = 257;
    std::size_t periodic_nodes = 64;
    std::size_t time_steps = 512;
    std::size_t samples = 33;
    double layer_factor = 0.25;
    std::size_t threads = 1;
};

/// Sweep output: the verdict table plus the per-epsilon trajectories that the
/// bound and sheet checks reuse (entries only for epsilons that completed).
struct ChannelSweep {
    ConvergenceTable table;
    std::vector<double> eps_list;
    std::vector<Trajectory<ChannelState>> viscous;
    std::vector<Trajectory<ChannelState>> euler;
};

struct PipeSweep {
    ConvergenceTable table;
    std::vector<double> eps_list;
    std::vector<Trajectory<PipeState>> viscous;
    std::vector<Trajectory<PipeState>> euler;
};

/// Per epsilon: viscous + Euler solve, corrector, remainder; records the
/// L-inf-in-time L2 series of the remainder velocity, its three vorticity
/// components, their combination, and the uncorrected velocity gap; fits all
/// rates. A per-epsilon solver failure drops that epsilon and is recorded in
/// table.diagnostics.
ChannelSweep channel_convergence_sweep(const ChannelProblem& p, std::vector<double> eps_list,
                                       const SweepPolicy& policy);

/// Pipe analogue; additionally records the pressure series
/// "pressure_LinfL1" of r d_r(p_eps - p_0) = uphi_eps^2 - uphi_0^2.
PipeSweep pipe_convergence_sweep(const PipeProblem& p, std::vector<double> eps_list,
                                 const SweepPolicy& policy);

/// Pairing of the vorticity defect with a test function at the final time,
/// against the boundary vortex-sheet term, per epsilon.
SheetCheck channel_sheet_omega2(const ChannelProblem& p, const ChannelSweep& sweep,
                                const std::function<double(double)>& testfn,
                                const std::string& test_id);
SheetCheck channel_sheet_omega1(const ChannelProblem& p, const ChannelSweep& sweep,
                                const std::function<double(double, double)>& testfn,
                                const std::string& test_id);
/// Cross-section (CSF) axial-vorticity pairing; the sheet term is the signed
/// circulation of the Euler swirl trace, cross-checked by direct boundary
/// quadrature.
SheetCheck csf_sheet_omega_x(const PipeProblem& p, const PipeSweep& sweep,
                             const std::function<double(double)>& testfn,
                             const std::string& test_id);

/// Uniform L1 vorticity bound across the sweep, with the contrasting L2
/// growth slope as a diagnostic.
struct UniformL1Result {
    BoundsReport report;       // lhs: per-eps LinfL1 values; rhs: 2 * min
    NormSeries l1_series;
    NormSeries l2_series;
    RateFit l2_fit;
};
UniformL1Result uniform_l1_check(const ChannelProblem& p, const ChannelSweep& sweep);
UniformL1Result uniform_l1_check(const PipeProblem& p, const PipeSweep& sweep);

}  // namespace vvl
