#include "vvl/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "vvl/error.hpp"

namespace vvl {
namespace oracle {

namespace {

double stable_dt(double dz, double dx, double eps, double max_drift) {
    double dt = 0.2 * std::min(dz, dx) * std::min(dz, dx) / std::max(eps, 1e-300);
    if (max_drift > 0.0) dt = std::min(dt, 0.5 * std::min(dz, dx) / max_drift);
    return dt;
}

void check_sorted(const std::vector<double>& times) {
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        if (times[i + 1] <= times[i])
            throw InvalidArgumentError("explicit_reference_solver: sample times not increasing");
}

}  // namespace

std::vector<std::vector<double>> explicit_reference_solver(const Line1D& p,
                                                           const std::vector<double>& sample_times,
                                                           double max_drift_hint) {
    check_sorted(sample_times);
    if (p.n > 16384) throw InvalidArgumentError("explicit_reference_solver: instance too large");
    const std::size_t n = p.n;
    const double dz = (p.hi - p.lo) / static_cast<double>(n - 1);
    const double dt_max = stable_dt(dz, dz, p.eps, max_drift_hint);
    if (!(dt_max > 0.0)) throw StabilityError("explicit_reference_solver: no stable step");

    std::vector<double> z(n), u(n);
    for (std::size_t j = 0; j < n; ++j) {
        z[j] = p.lo + dz * static_cast<double>(j);
        u[j] = p.initial(z[j]);
    }
    std::vector<std::vector<double>> out;
    double t = 0.0;
    for (double target : sample_times) {
        if (target < t - 1e-14) throw InvalidArgumentError("sample time before start");
        while (t < target - 1e-14) {
            const std::size_t nsub =
                static_cast<std::size_t>(std::ceil((target - t) / dt_max - 1e-12));
            const double dt = (target - t) / static_cast<double>(std::max<std::size_t>(nsub, 1));
            std::vector<double> un = u;
            for (std::size_t j = 1; j + 1 < n; ++j) {
                double lap;
                if (p.geometry == Geometry::radial) {
                    const double r = z[j];
                    lap = ((r + 0.5 * dz) * (u[j + 1] - u[j]) - (r - 0.5 * dz) * (u[j] - u[j - 1])) /
                          (dz * dz * r);
                } else {
                    lap = (u[j + 1] - 2.0 * u[j] + u[j - 1]) / (dz * dz);
                }
                double rhs = p.eps * lap;
                if (p.include_inverse_r2) rhs -= p.eps * u[j] / (z[j] * z[j]);
                if (p.forcing) rhs += p.forcing(z[j], t);
                un[j] = u[j] + dt * rhs;
            }
            un[0] = p.bc_lo ? p.bc_lo(t + dt) : 0.0;
            un[n - 1] = p.bc_hi ? p.bc_hi(t + dt) : 0.0;
            u = std::move(un);
            t += dt;
        }
        out.push_back(u);
    }
    return out;
}

std::vector<std::vector<double>> explicit_reference_solver(const Strip2D& p,
                                                           const std::vector<double>& sample_times) {
    check_sorted(sample_times);
    if (p.nx * p.nz > 128 * 1024)
        throw InvalidArgumentError("explicit_reference_solver: instance too large");
    const std::size_t nx = p.nx, nz = p.nz;
    const double dx = p.period / static_cast<double>(nx);
    const double dz = (p.hi - p.lo) / static_cast<double>(nz - 1);

    std::vector<double> z(nz), x(nx);
    for (std::size_t j = 0; j < nz; ++j) z[j] = p.lo + dz * static_cast<double>(j);
    for (std::size_t i = 0; i < nx; ++i) x[i] = dx * static_cast<double>(i);

    double max_drift = 0.0;
    for (std::size_t j = 0; j < nz; ++j)
        for (double tt : {0.0, 0.5, 1.0})
            max_drift = std::max(max_drift, std::abs(p.drift(z[j], tt * sample_times.back())));
    const double dt_max = stable_dt(dz, dx, p.eps, max_drift);
    if (!(dt_max > 0.0)) throw StabilityError("explicit_reference_solver: no stable step");

    std::vector<double> u(nx * nz);
    for (std::size_t j = 0; j < nz; ++j)
        for (std::size_t i = 0; i < nx; ++i) u[j * nx + i] = p.initial(x[i], z[j]);

    auto idx = [nx](std::size_t i, std::size_t j) { return j * nx + i; };
    std::vector<std::vector<double>> out;
    double t = 0.0;
    for (double target : sample_times) {
        while (t < target - 1e-14) {
            const std::size_t nsub =
                static_cast<std::size_t>(std::ceil((target - t) / dt_max - 1e-12));
            const double dt = (target - t) / static_cast<double>(std::max<std::size_t>(nsub, 1));
            std::vector<double> un = u;
            for (std::size_t j = 1; j + 1 < nz; ++j) {
                const double c = p.drift(z[j], t);
                const double r = z[j];
                for (std::size_t i = 0; i < nx; ++i) {
                    const std::size_t ip = (i + 1) % nx, im = (i + nx - 1) % nx;
                    double lap_x = (u[idx(ip, j)] - 2.0 * u[idx(i, j)] + u[idx(im, j)]) / (dx * dx);
                    double lap_z;
                    if (p.geometry == Geometry::radial) {
                        lap_x /= r * r;
                        lap_z = ((r + 0.5 * dz) * (u[idx(i, j + 1)] - u[idx(i, j)]) -
                                 (r - 0.5 * dz) * (u[idx(i, j)] - u[idx(i, j - 1)])) /
                                (dz * dz * r);
                    } else {
                        lap_z = (u[idx(i, j + 1)] - 2.0 * u[idx(i, j)] + u[idx(i, j - 1)]) /
                                (dz * dz);
                    }
                    const double adv = c * (u[idx(ip, j)] - u[idx(im, j)]) / (2.0 * dx);
                    double rhs = p.eps * (lap_x + lap_z) - adv;
                    if (p.forcing) rhs += p.forcing(x[i], z[j], t);
                    un[idx(i, j)] = u[idx(i, j)] + dt * rhs;
                }
            }
            for (std::size_t i = 0; i < nx; ++i) {
                un[idx(i, 0)] = p.bc_lo ? p.bc_lo(x[i], t + dt) : 0.0;
                un[idx(i, nz - 1)] = p.bc_hi ? p.bc_hi(x[i], t + dt) : 0.0;
            }
            u = std::move(un);
            t += dt;
        }
        out.push_back(u);
    }
    return out;
}

namespace {

struct SimpsonCell {
    double a, b, fa, fm, fb, whole;
};

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adaptive(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                double fb, double whole, double tol, std::size_t& budget, int depth) {
    if (budget == 0) throw QuadratureBudgetError("reference_quadrature: node budget exhausted");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    budget = budget >= 2 ? budget - 2 : 0;
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = (left + right - whole) / 15.0;
    if ((std::abs(err) <= tol && depth >= 4) || depth > 48) return left + right + err;
    return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, budget, depth + 1) +
           adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, budget, depth + 1);
}

}  // namespace

double reference_quadrature(const std::function<double(double)>& f, double a, double b, double tol,
                            std::size_t budget) {
    if (!(b > a)) {
        if (a == b) return 0.0;
        throw InvalidArgumentError("reference_quadrature: inverted interval");
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(fa, fm, fb, b - a);
    return adaptive(f, a, b, fa, fm, fb, whole, tol, budget, 0);
}

}  // namespace oracle
}  // namespace vvl
