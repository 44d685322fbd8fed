#pragma once

#include <cstddef>
#include <vector>

namespace vvl {

/// Wall-normal axis with nodes clustered toward both endpoints and
/// trapezoidal quadrature weights. Immutable after construction.
struct GradedAxis {
    std::vector<double> nodes;
    std::vector<double> quadrature_weights;
    double lo = 0.0;
    double hi = 0.0;
    double grading = 0.0;  // tanh stretching parameter; 0 means uniform

    std::size_t size() const { return nodes.size(); }
    double length() const { return hi - lo; }
    double min_spacing() const;
};

/// Uniform periodic axis; nodes are {k * spacing}, the endpoint is excluded.
struct PeriodicAxis {
    std::size_t n = 0;
    double period = 0.0;

    double spacing() const { return period / static_cast<double>(n); }
    double node(std::size_t k) const { return spacing() * static_cast<double>(k); }
};

/// Front-loaded time mesh on [0, T]: t_k = T (k/N)^2.
struct TimeGrid {
    std::vector<double> times;
    double T = 0.0;

    std::size_t steps() const { return times.size() - 1; }
    double dt(std::size_t k) const { return times[k + 1] - times[k]; }
};

/// Builds an axis on (lo, hi) with n nodes; the tanh stretching parameter is
/// chosen so that the near-wall nodes resolve layer_width at each endpoint.
/// A layer_width of (hi-lo)/2 degenerates to the uniform axis.
GradedAxis build_graded_axis(double lo, double hi, std::size_t n, double layer_width);

/// Uniform axis including both endpoints, trapezoidal weights.
GradedAxis build_uniform_axis(double lo, double hi, std::size_t n);

PeriodicAxis build_periodic_axis(std::size_t n, double period);

/// Quadratically graded time grid with n_steps steps.
TimeGrid build_time_grid(double T, std::size_t n_steps);

/// Extends the lower half of a symmetric graded axis into a wall-distance
/// axis on [0, eta_max]: nodes are {x - lo : x <= lo + keep_below} followed by
/// a geometric continuation of the last spacing up to eta_max. Used to align
/// half-strip corrector grids with the bulk mesh near a wall.
GradedAxis extend_wall_axis(const GradedAxis& axis, double keep_below, double eta_max);

/// Index of the node equal to x within tol, or -1 if absent.
std::ptrdiff_t find_node(const GradedAxis& axis, double x, double tol);

}  // namespace vvl
