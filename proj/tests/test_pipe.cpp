#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vvl/analysis.hpp"
#include "vvl/mesh_ops.hpp"
#include "vvl/oracle.hpp"
#include "vvl/pipe.hpp"
#include "vvl/spectral_cn.hpp"

using namespace vvl;

namespace {

AxisPtr share(GradedAxis ax) { return std::make_shared<const GradedAxis>(std::move(ax)); }

PipeProblem zero_problem() {
    PipeProblem p;
    p.u0phi = [](double) { return 0.0; };
    p.u0x = [](double, double) { return 0.0; };
    return p;
}

PipeProblem reference_like_problem() {
    PipeProblem p;
    p.u0phi = [](double r) { return 1.0 / r; };
    p.u0x = [](double phi, double r) { return std::cos(phi) / r; };
    return p;
}

double rel_l2(const std::vector<double>& a, const std::vector<double>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - b[i]) * (a[i] - b[i]);
        den += b[i] * b[i];
    }
    return std::sqrt(num / std::max(den, 1e-300));
}

}  // namespace

TEST_CASE("zero data gives zero flow, pressure, corrector, and remainder") {
    const PipeProblem p = zero_problem();
    const double eps = 1e-3;
    const PipeGrids grids = make_pipe_grids(p, eps, 65, 16, 64, 5);
    const auto visc = solve_pipe_viscous(p, eps, grids);
    const auto eul = solve_pipe_euler(p, grids);
    const auto cor = build_pipe_corrector(p, eul, eps, grids);
    const auto rem = pipe_remainder(visc, eul, cor);
    for (const auto* traj : {&visc, &eul, &rem})
        for (const auto& s : traj->snapshots) {
            for (double v : s.uphi.values) CHECK(v == 0.0);
            for (double v : s.ux.values) CHECK(v == 0.0);
            for (double v : s.pressure.values) CHECK(v == 0.0);
        }
    for (const auto& s : cor.thetaphi.snapshots)
        for (double v : s.values) CHECK(v == 0.0);
    for (const auto& s : cor.thetax.snapshots)
        for (double v : s.values) CHECK(v == 0.0);
}

TEST_CASE("phi-independent u0x follows the radial heat chain to 1e-10") {
    PipeProblem p;
    p.u0phi = [](double r) { return (r - 0.5) * (1.5 - r); };  // compatible swirl
    p.u0x = [](double, double r) { return 1.0 + std::cos(std::numbers::pi * (r - 0.5)); };
    const double eps = 1e-3;
    const PipeGrids grids = make_pipe_grids(p, eps, 129, 16, 128, 5);
    const auto visc = solve_pipe_viscous(p, eps, grids);

    NormalOperator op = make_radial_laplacian(grids.r_axis);
    std::vector<double> u(grids.r_axis->size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = p.u0x(0.0, grids.r_axis->nodes[j]);
    const std::vector<double> alpha0(u.size(), 0.0);
    std::size_t next = 0;
    for (std::size_t k = 0; k <= grids.time_grid->steps(); ++k) {
        if (next < grids.sample_steps.size() && grids.sample_steps[next] == k) {
            const auto& snap = visc.snapshots[next].ux;
            for (std::size_t j = 0; j < u.size(); ++j)
                for (std::size_t i = 0; i < snap.nx(); ++i)
                    CHECK(std::abs(snap.at(i, j) - u[j]) <= 1e-10);
            ++next;
        }
        if (k == grids.time_grid->steps()) break;
        cn_step(op, alpha0, eps, grids.time_grid->dt(k), u, {}, 0.0, 0.0, static_cast<int>(k));
    }
    REQUIRE(next == grids.sample_steps.size());
}

TEST_CASE("swirl solver matches the explicit radial reference on a coarse instance") {
    const double eps = 1e-2, T = 0.25;
    PipeProblem p;
    p.u0phi = [](double r) { return 1.0 / r; };  // ill-prepared at both walls
    p.u0x = [](double, double) { return 0.0; };
    p.T = T;

    PipeGrids grids;
    grids.r_axis = share(build_uniform_axis(p.rL, p.rR, 385));
    grids.phi_axis = build_periodic_axis(8, 2.0 * std::numbers::pi);
    grids.time_grid = std::make_shared<const TimeGrid>(build_time_grid(T, 512));
    grids.sample_steps = make_sample_steps(512, 3);
    const auto visc = solve_pipe_viscous(p, eps, grids);

    oracle::Line1D line;
    line.lo = p.rL;
    line.hi = p.rR;
    line.n = 385;
    line.eps = eps;
    line.geometry = oracle::Geometry::radial;
    line.include_inverse_r2 = true;
    line.initial = [&p](double r) { return p.u0phi(r); };
    line.bc_lo = [](double) { return 0.0; };
    line.bc_hi = [](double) { return 0.0; };
    const auto ref = oracle::explicit_reference_solver(line, {T});
    CHECK(rel_l2(visc.snapshots.back().uphi.values, ref[0]) <= 1e-4);
}

TEST_CASE("no-slip walls and nonincreasing weighted energy without forcing") {
    const PipeProblem p = reference_like_problem();
    const double eps = 1e-3;
    const PipeGrids grids = make_pipe_grids(p, eps, 129, 32, 128, 9);
    const auto visc = solve_pipe_viscous(p, eps, grids);
    double prev = 1e300;
    for (const auto& snap : visc.snapshots) {
        if (snap.t > 0.0) {
            CHECK(snap.uphi.values.front() == 0.0);
            CHECK(snap.uphi.values.back() == 0.0);
            for (std::size_t i = 0; i < snap.ux.nx(); ++i) {
                CHECK(std::abs(snap.ux.at(i, 0)) <= 1e-12);
                CHECK(std::abs(snap.ux.at(i, snap.ux.nz() - 1)) <= 1e-12);
            }
        }
        const double e1 = lp_norm(snap.uphi, 2.0, Measure::radial, 2.0 * std::numbers::pi);
        const double e2 = lp_norm(snap.ux, 2.0, Measure::radial);
        const double energy = e1 * e1 + e2 * e2;
        CHECK(energy <= prev + 1e-10);
        prev = energy;
    }
}

TEST_CASE("Euler solver: steady swirl, rotation characteristics, and conservation") {
    PipeProblem p;
    p.u0phi = [](double r) { return 0.4 + 0.3 * (r - 0.5); };
    p.u0x = [](double phi, double r) { return std::sin(phi) * (1.0 + 0.5 * r); };
    const PipeGrids grids = make_pipe_grids(p, 1e-3, 65, 32, 64, 5);
    const auto eul = solve_pipe_euler(p, grids);

    for (const auto& snap : eul.snapshots) {
        const double t = snap.t;
        for (std::size_t j = 0; j < snap.uphi.size(); ++j) {
            const double r = grids.r_axis->nodes[j];
            CHECK(snap.uphi[j] == doctest::Approx(p.u0phi(r)).epsilon(1e-13));
            for (std::size_t i = 0; i < snap.ux.nx(); ++i) {
                const double phi = grids.phi_axis.node(i);
                CHECK(std::abs(snap.ux.at(i, j) - p.u0x(phi - p.u0phi(r) / r * t, r)) <= 1e-10);
            }
        }
    }

    // Angular conservation: L2 nodally (Parseval); L1 and Linf sampled along
    // the rotated characteristics where the interpolant is an exact translate.
    const auto& first = eul.snapshots.front().ux;
    const auto& last = eul.snapshots.back().ux;
    const double tfin = eul.snapshots.back().t;
    const std::size_t nphi = first.nx();
    std::vector<double> row(nphi);
    for (std::size_t j = 0; j < grids.r_axis->size(); ++j) {
        double i2 = 0.0, f2 = 0.0;
        for (std::size_t i = 0; i < nphi; ++i) {
            i2 += first.at(i, j) * first.at(i, j);
            f2 += last.at(i, j) * last.at(i, j);
        }
        CHECK(std::abs(f2 - i2) <= 1e-10 * std::max(1.0, i2));

        for (std::size_t i = 0; i < nphi; ++i) row[i] = last.at(i, j);
        const auto modes = dft_forward(row);
        const double a = pipe_euler_angle(p, grids.r_axis->nodes[j], tfin);
        double i1 = 0.0, f1 = 0.0, iinf = 0.0, finf = 0.0;
        for (std::size_t i = 0; i < nphi; ++i) {
            const double lagr =
                dft_eval(modes, 2.0 * std::numbers::pi, grids.phi_axis.node(i) + a);
            i1 += std::abs(first.at(i, j));
            f1 += std::abs(lagr);
            iinf = std::max(iinf, std::abs(first.at(i, j)));
            finf = std::max(finf, std::abs(lagr));
        }
        CHECK(std::abs(f1 - i1) <= 1e-10 * std::max(1.0, i1));
        CHECK(std::abs(finf - iinf) <= 1e-10 * std::max(1.0, iinf));
    }

    // Forced swirl: uphi = u0phi + integral of fphi.
    PipeProblem pf = p;
    pf.fphi = [](double r, double t) { return r * std::cos(2.0 * t); };
    const auto eulf = solve_pipe_euler(pf, grids);
    for (const auto& snap : eulf.snapshots)
        for (std::size_t j = 0; j < snap.uphi.size(); ++j) {
            const double r = grids.r_axis->nodes[j];
            const double exact = p.u0phi(r) + 0.5 * r * std::sin(2.0 * snap.t);
            CHECK(snap.uphi[j] == doctest::Approx(exact).epsilon(1e-12));
        }
}

TEST_CASE("pressure recovery: closed forms and the quadrature oracle") {
    const double rL = 0.5, rR = 1.5;
    {
        const AxisPtr rax = share(build_uniform_axis(rL, rR, 65));
        ScalarField1D z(rax);
        const ScalarField1D pr = recover_pressure(z);
        for (double v : pr.values) CHECK(v == 0.0);
    }
    {
        const double c = 0.8;
        const AxisPtr rax = share(build_uniform_axis(rL, rR, 4097));
        ScalarField1D u(rax);
        for (std::size_t j = 0; j < u.size(); ++j) u[j] = c * rax->nodes[j];
        const ScalarField1D pr = recover_pressure(u);
        CHECK(pr[0] == 0.0);
        for (std::size_t j = 0; j < u.size(); ++j) {
            const double r = rax->nodes[j];
            CHECK(std::abs(pr[j] - 0.5 * c * c * (r * r - rL * rL)) <= 1e-8);
            if (j > 0) CHECK(pr[j] >= pr[j - 1]);
        }
    }
    {
        auto prof = [](double r) { return 1.0 / r + 0.3 * std::sin(2.0 * r); };
        const AxisPtr rax = share(build_uniform_axis(rL, rR, 32769));
        ScalarField1D u(rax);
        for (std::size_t j = 0; j < u.size(); ++j) u[j] = prof(rax->nodes[j]);
        const ScalarField1D pr = recover_pressure(u);
        for (double r : {0.75, 1.0, 1.25, rR}) {
            const double ref = oracle::reference_quadrature(
                [&](double s) { return prof(s) * prof(s) / s; }, rL, r, 1e-12);
            const std::ptrdiff_t j = find_node(*rax, r, 1e-12);
            REQUIRE(j >= 0);
            CHECK(std::abs(pr[static_cast<std::size_t>(j)] - ref) <= 1e-8);
        }
    }
}

TEST_CASE("corrector traces, initial value, and the uniform L1 bound on d_r Theta_x") {
    const PipeProblem p = reference_like_problem();
    const double eps = 1e-3;
    const PipeGrids grids = make_pipe_grids(p, eps, 129, 32, 128, 5);
    const auto eul = solve_pipe_euler(p, grids);
    const auto cor = build_pipe_corrector(p, eul, eps, grids);

    for (double v : cor.thetaphi.snapshots.front().values) CHECK(v == 0.0);
    for (double v : cor.thetax.snapshots.front().values) CHECK(v == 0.0);

    const std::size_t nr = grids.r_axis->size();
    for (std::size_t k = 1; k < cor.thetax.snapshots.size(); ++k) {
        const double t = cor.thetax.sample_times[k];
        CHECK(std::abs(pipe_thetaphi_at(p, eps, p.rL, t) + pipe_euler_uphi(p, p.rL, t)) <= 1e-10);
        CHECK(std::abs(pipe_thetaphi_at(p, eps, p.rR, t) + pipe_euler_uphi(p, p.rR, t)) <= 1e-10);
        CHECK(cor.thetaphi.snapshots[k][0] ==
              doctest::Approx(-pipe_euler_uphi(p, p.rL, t)).epsilon(1e-12));
        const auto& thx = cor.thetax.snapshots[k];
        for (std::size_t i = 0; i < thx.nx(); ++i) {
            const double phi = grids.phi_axis.node(i);
            CHECK(std::abs(thx.at(i, 0) + pipe_euler_ux(p, phi, p.rL, t)) <= 1e-10);
            CHECK(std::abs(thx.at(i, nr - 1) + pipe_euler_ux(p, phi, p.rR, t)) <= 1e-10);
        }
    }

    // Middle-third smallness of both corrector components.
    for (std::size_t k = 1; k < cor.thetax.snapshots.size(); ++k)
        for (std::size_t j = 0; j < nr; ++j) {
            const double r = grids.r_axis->nodes[j];
            if (r < p.rL + (p.rR - p.rL) / 3.0 || r > p.rR - (p.rR - p.rL) / 3.0) continue;
            CHECK(std::abs(cor.thetaphi.snapshots[k][j]) <= 1e-6);
            for (std::size_t i = 0; i < cor.thetax.snapshots[k].nx(); ++i)
                CHECK(std::abs(cor.thetax.snapshots[k].at(i, j)) <= 1e-6);
        }

    // d_r Theta_x stays uniformly bounded in L-inf(0,T;L1) across the decade.
    double lo = 1e300, hi = 0.0;
    for (double e : {1e-2, 1e-3, 1e-4}) {
        const PipeGrids g = make_pipe_grids(p, e, 257, 32, 128, 9);
        const auto ee = solve_pipe_euler(p, g);
        const auto cc = build_pipe_corrector(p, ee, e, g);
        double norm = 0.0;
        for (const auto& snap : cc.thetax.snapshots) {
            const ScalarField2D d = normal_derivative(snap);
            norm = std::max(norm, lp_norm(d, 1.0, Measure::radial));
        }
        lo = std::min(lo, norm);
        hi = std::max(hi, norm);
    }
    CHECK(hi / lo < 2.0);
}

TEST_CASE("remainder vanishes at t=0 and on the walls") {
    const PipeProblem p = reference_like_problem();
    const double eps = 1e-3;
    const PipeGrids grids = make_pipe_grids(p, eps, 129, 32, 128, 5);
    const auto visc = solve_pipe_viscous(p, eps, grids);
    const auto eul = solve_pipe_euler(p, grids);
    const auto cor = build_pipe_corrector(p, eul, eps, grids);
    const auto rem = pipe_remainder(visc, eul, cor);

    for (double v : rem.snapshots.front().uphi.values) CHECK(v == 0.0);
    for (double v : rem.snapshots.front().ux.values) CHECK(v == 0.0);
    for (std::size_t k = 1; k < rem.snapshots.size(); ++k) {
        const auto& s = rem.snapshots[k];
        CHECK(std::abs(s.uphi.values.front()) <= 1e-10);
        CHECK(std::abs(s.uphi.values.back()) <= 1e-10);
        for (std::size_t i = 0; i < s.ux.nx(); ++i) {
            CHECK(std::abs(s.ux.at(i, 0)) <= 1e-10);
            CHECK(std::abs(s.ux.at(i, s.ux.nz() - 1)) <= 1e-10);
        }
    }
}

TEST_CASE("vorticity of closed-form fields") {
    PipeGrids grids;
    grids.r_axis = share(build_graded_axis(0.5, 1.5, 513, 0.05));
    grids.phi_axis = build_periodic_axis(32, 2.0 * std::numbers::pi);
    const std::size_t nr = grids.r_axis->size();

    {
        // Rigid rotation: F_phi = c r, F_x = 0 -> omega_x = 2c, others 0.
        const double c = 0.7;
        PipeState s;
        s.uphi = ScalarField1D(grids.r_axis);
        s.ux = ScalarField2D(grids.phi_axis, grids.r_axis);
        for (std::size_t j = 0; j < nr; ++j) s.uphi[j] = c * grids.r_axis->nodes[j];
        const PipeVorticity w = pipe_vorticity(s);
        for (std::size_t j = 0; j < nr; ++j)
            CHECK(w.omega_x[j] == doctest::Approx(2.0 * c).epsilon(1e-7));
        for (double v : w.omega_phi.values) CHECK(v == 0.0);
        for (double v : w.omega_r.values) CHECK(v == 0.0);
    }
    {
        // F_x = sin(phi) zeta(r) -> omega_r = cos(phi) zeta / r,
        // omega_phi = -sin(phi) zeta'.
        auto zeta = [](double r) { return (r - 0.5) * (1.5 - r); };
        auto dzeta = [](double r) { return 2.0 - 2.0 * r; };
        PipeState s;
        s.uphi = ScalarField1D(grids.r_axis);
        s.ux = ScalarField2D(grids.phi_axis, grids.r_axis);
        for (std::size_t j = 0; j < nr; ++j)
            for (std::size_t i = 0; i < 32; ++i)
                s.ux.at(i, j) = std::sin(grids.phi_axis.node(i)) * zeta(grids.r_axis->nodes[j]);
        const PipeVorticity w = pipe_vorticity(s);
        for (std::size_t j = 0; j < nr; ++j) {
            const double r = grids.r_axis->nodes[j];
            for (std::size_t i = 0; i < 32; ++i) {
                const double phi = grids.phi_axis.node(i);
                CHECK(std::abs(w.omega_r.at(i, j) - std::cos(phi) * zeta(r) / r) <= 1e-9);
                CHECK(std::abs(w.omega_phi.at(i, j) + std::sin(phi) * dzeta(r)) <= 2e-4);
            }
        }
    }
}

TEST_CASE("omega_r vanishes on the walls of a no-slip viscous state") {
    const PipeProblem p = reference_like_problem();
    const double eps = 1e-3;
    const PipeGrids grids = make_pipe_grids(p, eps, 129, 32, 128, 5);
    const auto visc = solve_pipe_viscous(p, eps, grids);
    for (std::size_t k = 1; k < visc.snapshots.size(); ++k) {
        const PipeVorticity w = pipe_vorticity(visc.snapshots[k]);
        for (std::size_t i = 0; i < w.omega_r.nx(); ++i) {
            CHECK(std::abs(w.omega_r.at(i, 0)) <= 1e-10);
            CHECK(std::abs(w.omega_r.at(i, w.omega_r.nz() - 1)) <= 1e-10);
        }
    }
}
