#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "vvl/axis.hpp"
#include "vvl/error.hpp"

namespace vvl {

using AxisPtr = std::shared_ptr<const GradedAxis>;

/// Scalar samples on a graded axis.
struct ScalarField1D {
    AxisPtr axis;
    std::vector<double> values;

    ScalarField1D() = default;
    explicit ScalarField1D(AxisPtr ax) : axis(std::move(ax)), values(axis->size(), 0.0) {}
    ScalarField1D(AxisPtr ax, std::vector<double> v) : axis(std::move(ax)), values(std::move(v)) {
        if (values.size() != axis->size())
            throw GridMismatchError("ScalarField1D: value count != node count");
    }

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }

    bool finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// Scalar samples on a periodic axis x graded axis tensor grid.
/// Storage is row-major: row j (graded node) holds the periodic trace.
struct ScalarField2D {
    PeriodicAxis periodic_axis;
    AxisPtr axis;
    std::vector<double> values;

    ScalarField2D() = default;
    ScalarField2D(PeriodicAxis pax, AxisPtr ax)
        : periodic_axis(pax), axis(std::move(ax)),
          values(periodic_axis.n * axis->size(), 0.0) {}

    double& at(std::size_t i, std::size_t j) { return values[j * periodic_axis.n + i]; }
    double at(std::size_t i, std::size_t j) const { return values[j * periodic_axis.n + i]; }

    double* row(std::size_t j) { return values.data() + j * periodic_axis.n; }
    const double* row(std::size_t j) const { return values.data() + j * periodic_axis.n; }

    std::size_t nx() const { return periodic_axis.n; }
    std::size_t nz() const { return axis->size(); }

    bool finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }

    bool same_grid(const ScalarField2D& o) const {
        return periodic_axis.n == o.periodic_axis.n &&
               periodic_axis.period == o.periodic_axis.period && axis == o.axis;
    }
};

/// Snapshots of a state sampled on a shared time grid.
template <class State>
struct Trajectory {
    std::shared_ptr<const TimeGrid> time_grid;
    std::vector<double> sample_times;
    std::vector<State> snapshots;
    std::vector<std::string> diagnostics;  // e.g. resolution warnings

    std::size_t size() const { return snapshots.size(); }
    const State& at(std::size_t k) const { return snapshots[k]; }
};

}  // namespace vvl
