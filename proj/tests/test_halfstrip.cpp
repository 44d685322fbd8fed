#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vvl/analysis.hpp"
#include "vvl/halfstrip.hpp"
#include "vvl/heat_kernels.hpp"
#include "vvl/mesh_ops.hpp"
#include "vvl/oracle.hpp"

using namespace vvl;

namespace {

HalfStripProblem base_problem(double eps, double T, std::size_t ntau, std::size_t neta,
                              std::size_t nsteps, std::size_t samples, bool uniform_eta = false) {
    HalfStripProblem p;
    p.eps = eps;
    p.period = 2.0 * std::numbers::pi;
    const double eta_max = layer_truncation(eps, T);
    p.tau_axis = build_periodic_axis(ntau, p.period);
    p.eta_axis = std::make_shared<const GradedAxis>(
        uniform_eta ? build_uniform_axis(0.0, eta_max, neta)
                    : build_graded_axis(0.0, eta_max, neta,
                                        0.25 * std::sqrt(2.0 * eps * T)));
    p.time_grid = std::make_shared<const TimeGrid>(build_time_grid(T, nsteps));
    p.sample_steps = make_sample_steps(nsteps, samples);
    p.drift = [](double eta, double) { return 0.5 * std::tanh(eta / 0.3); };
    p.forcing = nullptr;
    p.boundary = [](double, double) { return 0.0; };
    return p;
}

double rel_l2_last(const Trajectory<ScalarField2D>& traj, const std::vector<double>& ref) {
    const ScalarField2D& f = traj.snapshots.back();
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        num += (f.values[k] - ref[k]) * (f.values[k] - ref[k]);
        den += ref[k] * ref[k];
    }
    return std::sqrt(num / std::max(den, 1e-300));
}

}  // namespace

TEST_CASE("zero data produces the zero solution") {
    HalfStripProblem p = base_problem(1e-3, 0.25, 16, 65, 64, 5);
    const auto traj = solve_psi_halfstrip(p);
    for (const auto& snap : traj.snapshots)
        for (double v : snap.values) CHECK(v == 0.0);
}

TEST_CASE("the drift must vanish at the wall") {
    HalfStripProblem p = base_problem(1e-3, 0.25, 16, 65, 64, 5);
    p.drift = [](double, double) { return 1.0; };
    CHECK_THROWS_AS(solve_psi_halfstrip(p), InvalidArgumentError);
}

TEST_CASE("tau-independent boundary data reduces to the half-line profile") {
    // Compatible corner data (g(0) = 0) so the comparison probes the scheme,
    // not the initial-layer singularity.
    // Compatible corner data (g(0) = 0) and a hard-graded mesh so the
    // comparison probes the reduction, not residual discretization error.
    const double eps = 1e-3, T = 0.25;
    HalfStripProblem p = base_problem(eps, T, 8, 4097, 4096, 3);
    p.boundary = [](double, double t) { return 2.0 * t; };
    const auto traj = solve_psi_halfstrip(p);

    const BoundarySignal g{[](double t) { return 2.0 * t; }, [](double) { return 2.0; }, T};
    for (std::size_t s = traj.snapshots.size() - 1; s < traj.snapshots.size(); ++s) {
        const double t = traj.sample_times[s];
        const ScalarField2D& snap = traj.snapshots[s];
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < snap.nz(); ++j) {
            const double phi = phi_halfline_at(g, eps, t, p.eta_axis->nodes[j]);
            for (std::size_t i = 0; i < snap.nx(); ++i) {
                num += (snap.at(i, j) - phi) * (snap.at(i, j) - phi);
                den += phi * phi;
            }
        }
        CHECK(std::sqrt(num / std::max(den, 1e-300)) <= 1e-6);
    }
}

TEST_CASE("boundary and initial conditions hold exactly at the nodes; far field decays") {
    const double eps = 1e-3, T = 0.25;
    HalfStripProblem p = base_problem(eps, T, 32, 257, 256, 9);
    p.boundary = [](double tau, double t) { return std::cos(tau) * (1.0 + t); };
    const auto traj = solve_psi_halfstrip(p);

    const ScalarField2D& first = traj.snapshots.front();
    for (double v : first.values) CHECK(v == 0.0);

    for (std::size_t s = 1; s < traj.snapshots.size(); ++s) {
        const double t = traj.sample_times[s];
        const ScalarField2D& snap = traj.snapshots[s];
        for (std::size_t i = 0; i < snap.nx(); ++i) {
            CHECK(std::abs(snap.at(i, 0) - p.boundary(p.tau_axis.node(i), t)) <= 1e-12);
            CHECK(std::abs(snap.at(i, snap.nz() - 1)) <= 1e-12);
            CHECK(std::abs(snap.at(i, snap.nz() - 2)) <= 1e-8);
        }
    }
}

TEST_CASE("discrete maximum principle with no forcing") {
    const double T = 0.25;
    HalfStripProblem p = base_problem(3.16e-3, T, 32, 257, 256, 17);
    p.boundary = [](double tau, double t) { return std::cos(tau) * (1.0 + std::sin(3.0 * t)); };
    double sup_g = 0.0;
    for (std::size_t i = 0; i < 512; ++i)
        for (std::size_t k = 0; k <= 64; ++k)
            sup_g = std::max(sup_g, std::abs(p.boundary(2.0 * std::numbers::pi * i / 512.0,
                                                        T * k / 64.0)));
    const auto traj = solve_psi_halfstrip(p);
    for (const auto& snap : traj.snapshots)
        for (double v : snap.values) CHECK(std::abs(v) <= sup_g + 1e-10);
}

TEST_CASE("tau-translation equivariance") {
    const double eps = 1e-3, T = 0.25;
    const std::size_t ntau = 32;
    HalfStripProblem p = base_problem(eps, T, ntau, 129, 128, 5);
    p.boundary = [](double tau, double t) { return std::cos(tau) * (1.0 + t); };
    p.forcing_modes = [](std::size_t m, double eta, double t) {
        return m == 1 ? cplx{0.5 * std::exp(-eta) * (1.0 + t), 0.0} : cplx{0.0, 0.0};
    };
    const auto traj = solve_psi_halfstrip(p);

    // Shift by an integer number of cells so node sets coincide.
    const double s = 4.0 * p.tau_axis.spacing();
    HalfStripProblem q = p;
    q.boundary = [s, &p](double tau, double t) { return p.boundary(tau - s, t); };
    q.forcing_modes = [s, &p](std::size_t m, double eta, double t) {
        // shifting a mode multiplies its coefficient by e^{-i m s}
        const double k = static_cast<double>(m);
        return p.forcing_modes(m, eta, t) * std::exp(cplx{0.0, -k * s});
    };
    const auto traj_s = solve_psi_halfstrip(q);

    for (std::size_t snap = 0; snap < traj.snapshots.size(); ++snap) {
        const ScalarField2D& a = traj.snapshots[snap];
        const ScalarField2D& b = traj_s.snapshots[snap];
        for (std::size_t j = 0; j < a.nz(); ++j)
            for (std::size_t i = 0; i < a.nx(); ++i)
                CHECK(std::abs(b.at((i + 4) % ntau, j) - a.at(i, j)) <= 1e-9);
    }
}

TEST_CASE("coarse instance matches the explicit reference solver") {
    const double eps = 1e-2, T = 0.25;
    const std::size_t ntau = 128, neta = 385, nsteps = 512;
    HalfStripProblem p = base_problem(eps, T, ntau, neta, nsteps, 3, /*uniform_eta=*/true);
    p.boundary = [](double tau, double t) { return std::cos(tau) * t; };
    const auto traj = solve_psi_halfstrip(p);

    oracle::Strip2D s;
    s.period = p.period;
    s.nx = ntau;
    s.lo = 0.0;
    s.hi = p.eta_axis->hi;
    s.nz = neta;
    s.eps = eps;
    s.drift = p.drift;
    s.initial = [](double, double) { return 0.0; };
    s.bc_lo = [&p](double tau, double t) { return p.boundary(tau, t); };
    const auto ref = oracle::explicit_reference_solver(s, {T});
    CHECK(rel_l2_last(traj, ref[0]) <= 1e-4);
}

TEST_CASE("scaled Lp estimates vary by less than a factor 2 across the eps decade") {
    const double T = 0.25;
    const std::vector<double> eps_list = {1e-2, 3.16e-3, 1e-3, 3.16e-4, 1e-4};
    struct Extremes { double lo = 1e300, hi = 0.0; };
    Extremes psi_l1, psi_l2, psi_linf, dpsi_l1, dpsi_l2;

    for (double eps : eps_list) {
        HalfStripProblem p = base_problem(eps, T, 64, 257, 256, 17);
        p.boundary = [](double tau, double t) { return (1.0 + 0.5 * std::cos(tau)) * (1.0 + t); };
        const auto traj = solve_psi_halfstrip(p);

        double n1 = 0.0, n2 = 0.0, ninf = 0.0, d1 = 0.0, d2 = 0.0;
        for (std::size_t snap = 1; snap < traj.snapshots.size(); ++snap) {
            const ScalarField2D& f = traj.snapshots[snap];
            n1 = std::max(n1, lp_norm(f, 1.0));
            n2 = std::max(n2, lp_norm(f, 2.0));
            ninf = std::max(ninf, lp_norm(f, std::numeric_limits<double>::infinity()));
            const ScalarField2D df = normal_derivative(f);
            d1 = std::max(d1, lp_norm(df, 1.0));
            d2 = std::max(d2, lp_norm(df, 2.0));
        }
        auto fold = [](Extremes& e, double v) {
            e.lo = std::min(e.lo, v);
            e.hi = std::max(e.hi, v);
        };
        fold(psi_l1, n1 * std::pow(eps, -0.5));
        fold(psi_l2, n2 * std::pow(eps, -0.25));
        fold(psi_linf, ninf);
        fold(dpsi_l1, d1);
        fold(dpsi_l2, d2 * std::pow(eps, 0.25));
    }
    CHECK(psi_l1.hi / psi_l1.lo < 2.0);
    CHECK(psi_l2.hi / psi_l2.lo < 2.0);
    CHECK(psi_linf.hi / psi_linf.lo < 2.0);
    CHECK(dpsi_l1.hi / dpsi_l1.lo < 2.0);
    CHECK(dpsi_l2.hi / dpsi_l2.lo < 2.0);
}

TEST_CASE("sample steps land on the quadratic time grid") {
    const auto steps = make_sample_steps(64, 5);
    REQUIRE(steps.size() == 5);
    CHECK(steps.front() == 0);
    CHECK(steps.back() == 64);
    for (std::size_t j = 0; j + 1 < steps.size(); ++j) CHECK(steps[j] < steps[j + 1]);
    CHECK_THROWS_AS(make_sample_steps(4, 10), InvalidArgumentError);
}
