#include "vvl/halfstrip.hpp"

#include <cmath>
#include <numbers>

#include "vvl/spectral_cn.hpp"

namespace vvl {

std::vector<std::size_t> make_sample_steps(std::size_t n_steps, std::size_t count) {
    if (count < 2 || count > n_steps + 1)
        throw InvalidArgumentError("make_sample_steps: bad sample count");
    std::vector<std::size_t> steps(count);
    for (std::size_t j = 0; j < count; ++j)
        steps[j] = (j * n_steps + (count - 1) / 2) / (count - 1);
    steps.front() = 0;
    steps.back() = n_steps;
    return steps;
}

namespace {

void advect(std::vector<std::vector<cplx>>& modes, const HalfStripProblem& p, double t0,
            double t1) {
    const std::size_t ntau = p.tau_axis.n;
    const double tmid = 0.5 * (t0 + t1);
    const double base = 2.0 * std::numbers::pi / p.period;
    for (std::size_t j = 1; j < p.eta_axis->size(); ++j) {  // wall row never moves
        const double shift = (t1 - t0) * p.drift(p.eta_axis->nodes[j], tmid);
        rotate_row(modes, j, base * shift);
    }
}

}  // namespace

Trajectory<ScalarField2D> solve_psi_halfstrip(const HalfStripProblem& p) {
    const std::size_t ntau = p.tau_axis.n;
    const std::size_t neta = p.eta_axis->size();
    const std::size_t nsteps = p.time_grid->steps();

    Trajectory<ScalarField2D> traj;
    traj.time_grid = p.time_grid;

    // Wall drift must vanish (the advection phase is frozen per row, so a
    // nonzero wall drift would move the Dirichlet trace).
    for (double t : {0.25 * p.time_grid->T, p.time_grid->T}) {
        if (std::abs(p.drift(0.0, t)) > 1e-6)
            throw InvalidArgumentError("solve_psi_halfstrip: drift does not vanish at the wall");
    }

    std::vector<std::vector<cplx>> modes(ntau, std::vector<cplx>(neta, cplx{0.0}));
    NormalOperator op = make_flat_laplacian(p.eta_axis);
    const double kbase = 2.0 * std::numbers::pi / p.period;
    std::vector<std::vector<double>> alpha(ntau, std::vector<double>(neta));
    for (std::size_t m = 0; m < ntau; ++m) {
        const double k = kbase * static_cast<double>(signed_wavenumber(m, ntau));
        for (std::size_t j = 0; j < neta; ++j) alpha[m][j] = k * k;
    }

    std::vector<double> tau_vals(ntau), gphys(ntau);
    std::vector<cplx> fmode(neta);
    for (std::size_t i = 0; i < ntau; ++i) tau_vals[i] = p.tau_axis.node(i);

    auto record = [&](std::size_t step) {
        ScalarField2D f(p.tau_axis, p.eta_axis);
        std::vector<cplx> rowmodes(ntau);
        for (std::size_t j = 0; j < neta; ++j) {
            for (std::size_t m = 0; m < ntau; ++m) rowmodes[m] = modes[m][j];
            dft_inverse(rowmodes, std::span<double>(f.row(j), ntau));
        }
        traj.sample_times.push_back(p.time_grid->times[step]);
        traj.snapshots.push_back(std::move(f));
    };

    std::size_t next_sample = 0;
    auto maybe_record = [&](std::size_t step) {
        while (next_sample < p.sample_steps.size() && p.sample_steps[next_sample] == step) {
            record(step);
            ++next_sample;
        }
    };
    maybe_record(0);

    for (std::size_t nstep = 0; nstep < nsteps; ++nstep) {
        const double t0 = p.time_grid->times[nstep];
        const double t1 = p.time_grid->times[nstep + 1];
        const double dt = t1 - t0;
        const double tmid = 0.5 * (t0 + t1);

        advect(modes, p, t0, tmid);

        // Dirichlet modes at the new time level.
        std::vector<cplx> gmodes;
        for (std::size_t i = 0; i < ntau; ++i) gphys[i] = p.boundary(tau_vals[i], t1);
        gmodes = dft_forward(gphys);

        for (std::size_t m = 0; m < ntau; ++m) {
            std::span<const cplx> fspan;
            if (p.forcing_modes) {
                for (std::size_t j = 0; j < neta; ++j)
                    fmode[j] = p.forcing_modes(m, p.eta_axis->nodes[j], tmid);
                fspan = fmode;
            } else if (p.forcing) {
                // Physical forcing: transform row by row once per mode sweep.
                static thread_local std::vector<std::vector<cplx>> fall;
                if (m == 0) {
                    fall.assign(neta, std::vector<cplx>(ntau));
                    std::vector<double> frow(ntau);
                    for (std::size_t j = 0; j < neta; ++j) {
                        for (std::size_t i = 0; i < ntau; ++i)
                            frow[i] = p.forcing(tau_vals[i], p.eta_axis->nodes[j], tmid);
                        fall[j] = dft_forward(frow);
                    }
                }
                for (std::size_t j = 0; j < neta; ++j) fmode[j] = fall[j][m];
                fspan = fmode;
            }
            cn_mode_step(op, alpha[m], p.eps, dt, modes[m], fspan, gmodes[m], cplx{0.0},
                         static_cast<int>(nstep));
        }

        advect(modes, p, tmid, t1);
        maybe_record(nstep + 1);
    }

    // Far-field decay diagnostic.
    double top = 0.0;
    for (const auto& snap : traj.snapshots)
        for (std::size_t i = 0; i < ntau; ++i)
            top = std::max(top, std::abs(snap.at(i, neta - 2)));
    if (top > 1e-8)
        traj.diagnostics.push_back("halfstrip: far-field value " + std::to_string(top) +
                                   " exceeds decay tolerance; eta_max too small");
    return traj;
}

}  // namespace vvl
