#include "vvl/axis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vvl/error.hpp"

namespace vvl {

namespace {

// Two-sided tanh map [0,1] -> [0,1], clustering at both ends for beta > 0.
double tanh_map(double s, double beta) {
    if (beta <= 0.0) return s;
    return 0.5 * (1.0 + std::tanh(beta * (2.0 * s - 1.0)) / std::tanh(beta));
}

std::vector<double> trapezoid_weights(const std::vector<double>& nodes) {
    const std::size_t n = nodes.size();
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double half = 0.5 * (nodes[i + 1] - nodes[i]);
        w[i] += half;
        w[i + 1] += half;
    }
    return w;
}

}  // namespace

double GradedAxis::min_spacing() const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) m = std::min(m, nodes[i + 1] - nodes[i]);
    return m;
}

GradedAxis build_uniform_axis(double lo, double hi, std::size_t n) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi <= lo)
        throw InvalidDomainError("build_uniform_axis: invalid bounds");
    if (n < 2) throw InvalidDomainError("build_uniform_axis: need n >= 2");
    GradedAxis a;
    a.lo = lo;
    a.hi = hi;
    a.nodes.resize(n);
    const double dz = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) a.nodes[i] = lo + dz * static_cast<double>(i);
    a.nodes.back() = hi;
    a.quadrature_weights = trapezoid_weights(a.nodes);
    return a;
}

GradedAxis build_graded_axis(double lo, double hi, std::size_t n, double layer_width) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi <= lo)
        throw InvalidDomainError("build_graded_axis: invalid bounds");
    if (!std::isfinite(layer_width) || layer_width <= 0.0 || layer_width > 0.5 * (hi - lo))
        throw InvalidDomainError("build_graded_axis: layer_width outside (0, (hi-lo)/2]");
    if (n < 8) throw InvalidDomainError("build_graded_axis: need n >= 8");

    const double lw = layer_width / (hi - lo);
    // Target: node index `c` maps into the layer at each wall. Capped so small
    // axes degrade gracefully to uniform.
    const std::size_t c = std::min<std::size_t>(8, (n - 1) / 2);
    const double sc = static_cast<double>(c) / static_cast<double>(n - 1);

    double beta = 0.0;
    if (tanh_map(sc, 0.0) > lw) {
        // Smallest stretching that places the target node inside the layer.
        double blo = 1e-6, bhi = 30.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (blo + bhi);
            if (tanh_map(sc, mid) > lw)
                blo = mid;
            else
                bhi = mid;
        }
        beta = bhi;
    }

    GradedAxis a;
    a.lo = lo;
    a.hi = hi;
    a.grading = beta;
    a.nodes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(n - 1);
        a.nodes[i] = lo + (hi - lo) * tanh_map(s, beta);
    }
    a.nodes.front() = lo;
    a.nodes.back() = hi;
    a.quadrature_weights = trapezoid_weights(a.nodes);
    return a;
}

PeriodicAxis build_periodic_axis(std::size_t n, double period) {
    if (n < 4 || n % 2 != 0) throw InvalidDomainError("build_periodic_axis: n must be even, >= 4");
    if (!std::isfinite(period) || period <= 0.0)
        throw InvalidDomainError("build_periodic_axis: invalid period");
    return PeriodicAxis{n, period};
}

TimeGrid build_time_grid(double T, std::size_t n_steps) {
    if (!std::isfinite(T) || T <= 0.0) throw InvalidDomainError("build_time_grid: invalid T");
    if (n_steps < 2) throw InvalidDomainError("build_time_grid: need >= 2 steps");
    TimeGrid g;
    g.T = T;
    g.times.resize(n_steps + 1);
    for (std::size_t k = 0; k <= n_steps; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(n_steps);
        g.times[k] = T * s * s;
    }
    g.times.back() = T;
    return g;
}

GradedAxis extend_wall_axis(const GradedAxis& axis, double keep_below, double eta_max) {
    if (eta_max <= 0.0 || !std::isfinite(eta_max))
        throw InvalidDomainError("extend_wall_axis: invalid eta_max");
    GradedAxis a;
    a.lo = 0.0;
    a.grading = axis.grading;
    for (double x : axis.nodes) {
        const double eta = x - axis.lo;
        if (eta <= keep_below + 1e-14 && eta < eta_max) a.nodes.push_back(eta);
    }
    if (a.nodes.size() < 2) throw InvalidDomainError("extend_wall_axis: too few nodes kept");
    double spacing = a.nodes.back() - a.nodes[a.nodes.size() - 2];
    while (a.nodes.back() < eta_max) {
        spacing *= 1.12;
        a.nodes.push_back(std::min(a.nodes.back() + spacing, eta_max));
        if (eta_max - a.nodes.back() < 0.25 * spacing) a.nodes.back() = eta_max;
    }
    a.hi = a.nodes.back();
    a.quadrature_weights.assign(a.nodes.size(), 0.0);
    for (std::size_t i = 0; i + 1 < a.nodes.size(); ++i) {
        const double half = 0.5 * (a.nodes[i + 1] - a.nodes[i]);
        a.quadrature_weights[i] += half;
        a.quadrature_weights[i + 1] += half;
    }
    return a;
}

std::ptrdiff_t find_node(const GradedAxis& axis, double x, double tol) {
    auto it = std::lower_bound(axis.nodes.begin(), axis.nodes.end(), x - tol);
    if (it == axis.nodes.end() || std::abs(*it - x) > tol) return -1;
    return it - axis.nodes.begin();
}

}  // namespace vvl
