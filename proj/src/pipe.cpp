#include "vvl/pipe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vvl/gauss.hpp"
#include "vvl/heat_kernels.hpp"
#include "vvl/mesh_ops.hpp"
#include "vvl/spectral_cn.hpp"

namespace vvl {

namespace {

constexpr std::size_t kDuhamelOrder = 32;

void check_problem(const PipeProblem& p) {
    if (!p.u0phi || !p.u0x) throw InvalidArgumentError("pipe: initial data required");
    if (!(p.rL > 0.0) || !(p.rR > p.rL) || !(p.T > 0.0))
        throw InvalidDomainError("pipe: need 0 < rL < rR and T > 0");
}

// Wall slip signal feeding the flat half-line layer at radius rwall.
BoundarySignal wall_signal(const PipeProblem& p, double rwall) {
    BoundarySignal g{[&p, rwall](double t) { return -pipe_euler_uphi(p, rwall, t); }, {}, p.T};
    if (p.fphi) g.derivative = [&p, rwall](double t) { return -p.fphi(rwall, t); };
    return g;
}

}  // namespace

PipeGrids make_pipe_grids(const PipeProblem& p, double eps, std::size_t nr, std::size_t nphi,
                          std::size_t n_steps, std::size_t samples, double layer_factor) {
    check_problem(p);
    const double gap = p.rR - p.rL;
    const double layer = std::min(layer_factor * std::sqrt(eps * p.T), 0.5 * gap);
    PipeGrids g;
    g.r_axis = std::make_shared<const GradedAxis>(build_graded_axis(p.rL, p.rR, nr, layer));
    g.phi_axis = build_periodic_axis(nphi, 2.0 * std::numbers::pi);
    g.time_grid = std::make_shared<const TimeGrid>(build_time_grid(p.T, n_steps));
    g.sample_steps = make_sample_steps(n_steps, samples);
    return g;
}

ScalarField1D recover_pressure(const ScalarField1D& uphi) {
    if (!uphi.finite()) throw InvalidArgumentError("recover_pressure: non-finite swirl");
    const auto& r = uphi.axis->nodes;
    if (r.front() <= 0.0) throw InvalidDomainError("recover_pressure: needs rL > 0");
    ScalarField1D pr(uphi.axis);
    double acc = 0.0;
    pr[0] = 0.0;
    for (std::size_t j = 1; j < uphi.size(); ++j) {
        const double fa = uphi[j - 1] * uphi[j - 1] / r[j - 1];
        const double fb = uphi[j] * uphi[j] / r[j];
        acc += 0.5 * (r[j] - r[j - 1]) * (fa + fb);
        pr[j] = acc;
    }
    return pr;
}

Trajectory<PipeState> solve_pipe_viscous(const PipeProblem& p, double eps, const PipeGrids& grids) {
    check_problem(p);
    const std::size_t nr = grids.r_axis->size();
    const std::size_t nphi = grids.phi_axis.n;
    const std::size_t nsteps = grids.time_grid->steps();

    Trajectory<PipeState> traj;
    traj.time_grid = grids.time_grid;
    {
        const double layer = std::sqrt(eps * p.T);
        std::size_t inside = 0;
        for (double r : grids.r_axis->nodes)
            if (r - p.rL < layer) ++inside;
        if (inside < 8)
            traj.diagnostics.push_back("pipe viscous: only " + std::to_string(inside) +
                                       " nodes inside the sqrt(eps T) layer");
    }

    // Well-balanced swirl solve: uphi = base + Phi_in + Phi_out + w. The flat
    // half-line layers absorb the sharp erfc profile exactly; they are not
    // solutions of the radial operator, so w picks up the analytic curvature
    // residual eps ((1/r) d_r - 1/r^2) Phi as a forcing term. Differencing
    // then only ever sees smooth fields.
    NormalOperator op = make_radial_laplacian(grids.r_axis);
    const double gap = p.rR - p.rL;
    const BoundarySignal sig_in = wall_signal(p, p.rL);
    const BoundarySignal sig_out = wall_signal(p, p.rR);
    std::vector<double> base(nr), wres(nr, 0.0), uphi(nr), fw(nr, 0.0);
    auto eval_base = [&](double t) {
        for (std::size_t j = 0; j < nr; ++j)
            base[j] = pipe_euler_uphi(p, grids.r_axis->nodes[j], t);
    };
    auto eval_forcing = [&](double t) {
        for (std::size_t j = 1; j + 1 < nr; ++j) {
            const double r = grids.r_axis->nodes[j];
            double f = op.cm[j] * base[j - 1] + op.cc[j] * base[j] + op.cp[j] * base[j + 1] -
                       base[j] / (r * r);
            if (t > 0.0) {
                const double phi_in = phi_halfline_at(sig_in, eps, t, r - p.rL);
                const double phi_out = phi_halfline_at(sig_out, eps, t, p.rR - r);
                const double dr_in = phi_eta_derivative_at(sig_in, eps, t, r - p.rL);
                const double dr_out = -phi_eta_derivative_at(sig_out, eps, t, p.rR - r);
                f += (dr_in + dr_out) / r - (phi_in + phi_out) / (r * r);
            }
            fw[j] = eps * f;
        }
    };
    auto reconstruct_uphi = [&](double t) {
        for (std::size_t j = 0; j < nr; ++j) {
            double v = base[j] + wres[j];
            if (t > 0.0) {
                const double r = grids.r_axis->nodes[j];
                v += phi_halfline_at(sig_in, eps, t, r - p.rL) +
                     phi_halfline_at(sig_out, eps, t, p.rR - r);
            }
            uphi[j] = v;
        }
        if (t > 0.0) uphi.front() = uphi.back() = 0.0;  // no-slip, exact by construction
    };
    eval_base(0.0);
    reconstruct_uphi(0.0);

    std::vector<std::vector<cplx>> modes(nphi, std::vector<cplx>(nr));
    {
        std::vector<double> row(nphi);
        for (std::size_t j = 0; j < nr; ++j) {
            for (std::size_t i = 0; i < nphi; ++i)
                row[i] = p.u0x(grids.phi_axis.node(i), grids.r_axis->nodes[j]);
            auto rowmodes = dft_forward(row);
            for (std::size_t m = 0; m < nphi; ++m) modes[m][j] = rowmodes[m];
        }
    }

    std::vector<double> alpha_phi(nr);  // swirl potential 1/r^2
    for (std::size_t j = 0; j < nr; ++j) {
        const double r = grids.r_axis->nodes[j];
        alpha_phi[j] = 1.0 / (r * r);
    }
    std::vector<std::vector<double>> alpha(nphi, std::vector<double>(nr));
    for (std::size_t m = 0; m < nphi; ++m) {
        const double k = static_cast<double>(signed_wavenumber(m, nphi));
        for (std::size_t j = 0; j < nr; ++j) {
            const double r = grids.r_axis->nodes[j];
            alpha[m][j] = k * k / (r * r);
        }
    }

    auto advect = [&](const std::vector<double>& angles) {
        for (std::size_t j = 1; j + 1 < nr; ++j) rotate_row(modes, j, angles[j]);
    };

    auto record = [&](std::size_t step) {
        PipeState s;
        s.t = grids.time_grid->times[step];
        s.uphi = ScalarField1D(grids.r_axis, uphi);
        s.ux = ScalarField2D(grids.phi_axis, grids.r_axis);
        std::vector<cplx> rowmodes(nphi);
        for (std::size_t j = 0; j < nr; ++j) {
            for (std::size_t m = 0; m < nphi; ++m) rowmodes[m] = modes[m][j];
            dft_inverse(rowmodes, std::span<double>(s.ux.row(j), nphi));
        }
        s.pressure = recover_pressure(s.uphi);
        traj.sample_times.push_back(s.t);
        traj.snapshots.push_back(std::move(s));
    };

    std::size_t next_sample = 0;
    auto maybe_record = [&](std::size_t step) {
        while (next_sample < grids.sample_steps.size() && grids.sample_steps[next_sample] == step) {
            record(step);
            ++next_sample;
        }
    };
    maybe_record(0);

    std::vector<double> angles(nr), frow(nphi);
    std::vector<cplx> fmode(nr);
    std::vector<std::vector<cplx>> fxmodes;
    for (std::size_t nstep = 0; nstep < nsteps; ++nstep) {
        const double t0 = grids.time_grid->times[nstep];
        const double t1 = grids.time_grid->times[nstep + 1];
        const double dt = t1 - t0;
        const double tmid = 0.5 * (t0 + t1);

        std::vector<double> uphi_old = uphi;
        if (p.fphi) eval_base(tmid);
        eval_forcing(tmid);
        // Layer spill-over from the opposite wall enters as (exponentially
        // small, exactly evaluated) boundary data for w.
        const double bc_in = -phi_halfline_at(sig_out, eps, t1, gap);
        const double bc_out = -phi_halfline_at(sig_in, eps, t1, gap);
        cn_step(op, alpha_phi, eps, dt, wres, fw, bc_in, bc_out, static_cast<int>(nstep));
        if (p.fphi) eval_base(t1);
        reconstruct_uphi(t1);

        // Exact rotation by the trapezoidal angle of uphi / r.
        for (std::size_t j = 0; j < nr; ++j)
            angles[j] = 0.25 * dt * (uphi_old[j] + uphi[j]) / grids.r_axis->nodes[j];
        advect(angles);

        if (p.fx) {
            fxmodes.assign(nr, {});
            for (std::size_t j = 0; j < nr; ++j) {
                for (std::size_t i = 0; i < nphi; ++i)
                    frow[i] = p.fx(grids.phi_axis.node(i), grids.r_axis->nodes[j], tmid);
                fxmodes[j] = dft_forward(frow);
            }
        }
        for (std::size_t m = 0; m < nphi; ++m) {
            std::span<const cplx> fspan;
            if (p.fx) {
                for (std::size_t j = 0; j < nr; ++j) fmode[j] = fxmodes[j][m];
                fspan = fmode;
            }
            cn_mode_step(op, alpha[m], eps, dt, modes[m], fspan, cplx{0.0}, cplx{0.0},
                         static_cast<int>(nstep));
        }

        advect(angles);
        maybe_record(nstep + 1);
    }
    return traj;
}

double pipe_euler_uphi(const PipeProblem& p, double r, double t) {
    double v = p.u0phi(r);
    if (p.fphi && t > 0.0)
        v += gauss_integrate([&](double s) { return p.fphi(r, s); }, 0.0, t, kDuhamelOrder);
    return v;
}

double pipe_euler_angle(const PipeProblem& p, double r, double t) {
    double a = p.u0phi(r) * t / r;
    if (p.fphi && t > 0.0)
        a += gauss_integrate([&](double s) { return (t - s) * p.fphi(r, s) / r; }, 0.0, t,
                             kDuhamelOrder);
    return a;
}

double pipe_euler_ux(const PipeProblem& p, double phi, double r, double t) {
    const double at = pipe_euler_angle(p, r, t);
    double v = p.u0x(phi - at, r);
    if (p.fx && t > 0.0)
        v += gauss_integrate(
            [&](double s) {
                const double as = pipe_euler_angle(p, r, s);
                return p.fx(phi - (at - as), r, s);
            },
            0.0, t, kDuhamelOrder);
    return v;
}

Trajectory<PipeState> solve_pipe_euler(const PipeProblem& p, const PipeGrids& grids) {
    check_problem(p);
    const std::size_t nr = grids.r_axis->size();
    const std::size_t nphi = grids.phi_axis.n;

    ScalarField2D u0xfield(grids.phi_axis, grids.r_axis);
    for (std::size_t j = 0; j < nr; ++j)
        for (std::size_t i = 0; i < nphi; ++i)
            u0xfield.at(i, j) = p.u0x(grids.phi_axis.node(i), grids.r_axis->nodes[j]);

    Trajectory<PipeState> traj;
    traj.time_grid = grids.time_grid;
    std::vector<double> angles(nr);
    for (std::size_t step : grids.sample_steps) {
        const double t = grids.time_grid->times[step];
        PipeState s;
        s.t = t;
        s.uphi = ScalarField1D(grids.r_axis);
        for (std::size_t j = 0; j < nr; ++j) {
            s.uphi[j] = pipe_euler_uphi(p, grids.r_axis->nodes[j], t);
            angles[j] = pipe_euler_angle(p, grids.r_axis->nodes[j], t);
        }
        s.ux = periodic_shift(u0xfield, angles);
        if (p.fx && t > 0.0) {
            const GaussRule& rule = gauss_legendre(kDuhamelOrder);
            ScalarField2D fs(grids.phi_axis, grids.r_axis);
            std::vector<double> rel(nr);
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
                const double sq = 0.5 * t * (1.0 + rule.nodes[q]);
                const double w = 0.5 * t * rule.weights[q];
                for (std::size_t j = 0; j < nr; ++j) {
                    rel[j] = angles[j] - pipe_euler_angle(p, grids.r_axis->nodes[j], sq);
                    for (std::size_t i = 0; i < nphi; ++i)
                        fs.at(i, j) = p.fx(grids.phi_axis.node(i), grids.r_axis->nodes[j], sq);
                }
                ScalarField2D moved = periodic_shift(fs, rel);
                for (std::size_t k = 0; k < s.ux.values.size(); ++k)
                    s.ux.values[k] += w * moved.values[k];
            }
        }
        s.pressure = recover_pressure(s.uphi);
        traj.sample_times.push_back(t);
        traj.snapshots.push_back(std::move(s));
    }
    return traj;
}

CutoffProfile pipe_cutoff(const PipeProblem& p) {
    const double a0 = 0.125 * (p.rR - p.rL);
    return make_cutoff(a0, 2.0 * a0);
}

double pipe_thetaphi_at(const PipeProblem& p, double eps, double r, double t) {
    if (t <= 0.0) return 0.0;
    const CutoffProfile sigma = pipe_cutoff(p);
    double v = 0.0;
    const double sl = sigma(r - p.rL), su = sigma(p.rR - r);
    if (sl > 0.0) v += sl * phi_halfline_at(wall_signal(p, p.rL), eps, t, r - p.rL);
    if (su > 0.0) v += su * phi_halfline_at(wall_signal(p, p.rR), eps, t, p.rR - r);
    return v;
}

PipeCorrector build_pipe_corrector(const PipeProblem& p, const Trajectory<PipeState>& euler,
                                   double eps, const PipeGrids& grids) {
    check_problem(p);
    if (p.fx)
        throw InvalidArgumentError(
            "build_pipe_corrector: axial forcing fx is not supported in the corrector path");

    const std::size_t nr = grids.r_axis->size();
    const std::size_t nphi = grids.phi_axis.n;
    const CutoffProfile sigma = pipe_cutoff(p);

    PipeCorrector cor;
    cor.eps = eps;
    cor.thetaphi.time_grid = grids.time_grid;
    cor.thetax.time_grid = grids.time_grid;

    for (double t : euler.sample_times) {
        ScalarField1D th(grids.r_axis);
        for (std::size_t j = 0; j < nr; ++j)
            th[j] = pipe_thetaphi_at(p, eps, grids.r_axis->nodes[j], t);
        cor.thetaphi.sample_times.push_back(t);
        cor.thetaphi.snapshots.push_back(std::move(th));
    }

    // Wall-distance axis; capped by the gap so the extended radial coordinate
    // stays inside (rL, rR) and away from r = 0.
    const double gap = p.rR - p.rL;
    const double eta_max = std::min(layer_truncation(eps, p.T), gap);
    const double keep_below = std::min(0.5 * gap, eta_max);
    auto eta_axis =
        std::make_shared<const GradedAxis>(extend_wall_axis(*grids.r_axis, keep_below, eta_max));
    const std::size_t neta = eta_axis->size();

    auto make_side = [&](bool outer) {
        auto rpos = [&p, outer](double eta) { return outer ? p.rR - eta : p.rL + eta; };

        auto u0xhat = std::make_shared<std::vector<std::vector<cplx>>>(neta);
        {
            std::vector<double> row(nphi);
            for (std::size_t j = 0; j < neta; ++j) {
                const double r = rpos(eta_axis->nodes[j]);
                for (std::size_t i = 0; i < nphi; ++i) row[i] = p.u0x(grids.phi_axis.node(i), r);
                (*u0xhat)[j] = dft_forward(row);
            }
        }

        HalfStripProblem hs;
        hs.period = 2.0 * std::numbers::pi;
        hs.eps = eps;
        hs.tau_axis = grids.phi_axis;
        hs.eta_axis = eta_axis;
        hs.time_grid = grids.time_grid;
        hs.sample_steps = grids.sample_steps;
        hs.drift = [&p, eps, rpos](double eta, double t) {
            const double r = rpos(eta);
            return (pipe_euler_uphi(p, r, t) + pipe_thetaphi_at(p, eps, r, t)) / r;
        };
        const double rwall = outer ? p.rR : p.rL;
        hs.boundary = [&p, rwall](double tau, double t) {
            return -pipe_euler_ux(p, tau, rwall, t);
        };
        struct ForcingCache {
            double t = -1.0;
            std::vector<double> coeff;  // -Theta_phi / r
            std::vector<cplx> phase;    // e^{-i m A(r_j, t)}, row-major
        };
        auto cache = std::make_shared<ForcingCache>();
        hs.forcing_modes = [&p, eps, rpos, u0xhat, eta_axis, cache,
                            nphi](std::size_t m, double eta, double t) -> cplx {
            if (m == nphi / 2) return cplx{0.0};
            if (cache->t != t) {
                const std::size_t n = eta_axis->size();
                cache->coeff.resize(n);
                cache->phase.resize(n * nphi);
                for (std::size_t j = 0; j < n; ++j) {
                    const double r = rpos(eta_axis->nodes[j]);
                    cache->coeff[j] = -pipe_thetaphi_at(p, eps, r, t) / r;
                    fill_rotation(std::span<cplx>(cache->phase.data() + j * nphi, nphi),
                                  pipe_euler_angle(p, r, t));
                }
                cache->t = t;
            }
            const std::ptrdiff_t j = find_node(*eta_axis, eta, 1e-12 * (1.0 + eta));
            if (j < 0) throw GridMismatchError("pipe corrector: unknown eta node");
            const double k = static_cast<double>(signed_wavenumber(m, nphi));
            const cplx uxhat =
                (*u0xhat)[j][m] * cache->phase[static_cast<std::size_t>(j) * nphi + m];
            return cache->coeff[static_cast<std::size_t>(j)] * cplx{0.0, k} * uxhat;
        };
        return solve_psi_halfstrip(hs);
    };

    Trajectory<ScalarField2D> inner = make_side(false);
    Trajectory<ScalarField2D> outer = make_side(true);
    for (const auto& d : inner.diagnostics) cor.thetax.diagnostics.push_back("inner " + d);
    for (const auto& d : outer.diagnostics) cor.thetax.diagnostics.push_back("outer " + d);

    const double tol = 1e-12 * p.rR;
    for (std::size_t k = 0; k < inner.snapshots.size(); ++k) {
        ScalarField2D th(grids.phi_axis, grids.r_axis);
        for (std::size_t j = 0; j < nr; ++j) {
            const double d_in = grids.r_axis->nodes[j] - p.rL;
            const double d_out = p.rR - grids.r_axis->nodes[j];
            const double si = sigma(d_in), so = sigma(d_out);
            if (si > 0.0) {
                const std::ptrdiff_t r = find_node(*eta_axis, d_in, tol);
                if (r >= 0)
                    for (std::size_t i = 0; i < nphi; ++i)
                        th.at(i, j) += si * inner.snapshots[k].at(i, static_cast<std::size_t>(r));
            }
            if (so > 0.0) {
                const std::ptrdiff_t r = find_node(*eta_axis, d_out, tol);
                if (r >= 0)
                    for (std::size_t i = 0; i < nphi; ++i)
                        th.at(i, j) += so * outer.snapshots[k].at(i, static_cast<std::size_t>(r));
            }
        }
        cor.thetax.sample_times.push_back(inner.sample_times[k]);
        cor.thetax.snapshots.push_back(std::move(th));
    }
    return cor;
}

Trajectory<PipeState> pipe_remainder(const Trajectory<PipeState>& viscous,
                                     const Trajectory<PipeState>& euler,
                                     const PipeCorrector& corrector) {
    if (viscous.size() != euler.size() || viscous.size() != corrector.thetax.size())
        throw GridMismatchError("pipe_remainder: sample counts differ");
    Trajectory<PipeState> rem;
    rem.time_grid = viscous.time_grid;
    for (std::size_t k = 0; k < viscous.size(); ++k) {
        const PipeState& uv = viscous.snapshots[k];
        const PipeState& ue = euler.snapshots[k];
        if (!uv.ux.same_grid(ue.ux)) throw GridMismatchError("pipe_remainder: grids differ");
        PipeState v;
        v.t = uv.t;
        v.uphi = ScalarField1D(uv.uphi.axis);
        for (std::size_t j = 0; j < v.uphi.size(); ++j)
            v.uphi[j] = uv.uphi[j] - ue.uphi[j] - corrector.thetaphi.snapshots[k][j];
        v.ux = ScalarField2D(uv.ux.periodic_axis, uv.ux.axis);
        for (std::size_t i = 0; i < v.ux.values.size(); ++i)
            v.ux.values[i] =
                uv.ux.values[i] - ue.ux.values[i] - corrector.thetax.snapshots[k].values[i];
        v.pressure = ScalarField1D(uv.pressure.axis);
        for (std::size_t j = 0; j < v.pressure.size(); ++j)
            v.pressure[j] = uv.pressure[j] - ue.pressure[j];
        rem.sample_times.push_back(v.t);
        rem.snapshots.push_back(std::move(v));
    }
    return rem;
}

PipeVorticity pipe_vorticity(const PipeState& state) {
    PipeVorticity w;
    w.omega_phi = normal_derivative(state.ux);
    for (double& v : w.omega_phi.values) v = -v;

    // (1/r) d_r (r uphi)
    ScalarField1D rup(state.uphi.axis);
    for (std::size_t j = 0; j < rup.size(); ++j)
        rup[j] = state.uphi.axis->nodes[j] * state.uphi[j];
    w.omega_x = normal_derivative(rup);
    for (std::size_t j = 0; j < w.omega_x.size(); ++j)
        w.omega_x[j] /= state.uphi.axis->nodes[j];

    w.omega_r = periodic_derivative(state.ux);
    for (std::size_t j = 0; j < w.omega_r.nz(); ++j) {
        const double r = state.ux.axis->nodes[j];
        double* row = w.omega_r.row(j);
        for (std::size_t i = 0; i < w.omega_r.nx(); ++i) row[i] /= r;
    }
    return w;
}

}  // namespace vvl
