#include "vvl/mesh_ops.hpp"

#include <cmath>
#include <numbers>

#include "vvl/dft.hpp"

namespace vvl {

double integrate(const ScalarField1D& field, Measure measure) {
    if (!field.finite()) throw InvalidArgumentError("integrate: non-finite field");
    const auto& ax = *field.axis;
    double acc = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
        const double m = measure == Measure::radial ? ax.nodes[i] : 1.0;
        acc += ax.quadrature_weights[i] * m * field[i];
    }
    return acc;
}

double integrate(const ScalarField2D& field, Measure measure) {
    if (!field.finite()) throw InvalidArgumentError("integrate: non-finite field");
    const auto& ax = *field.axis;
    const double dx = field.periodic_axis.spacing();
    double acc = 0.0;
    for (std::size_t j = 0; j < field.nz(); ++j) {
        const double m = measure == Measure::radial ? ax.nodes[j] : 1.0;
        double rowsum = 0.0;
        const double* r = field.row(j);
        for (std::size_t i = 0; i < field.nx(); ++i) rowsum += r[i];
        acc += ax.quadrature_weights[j] * m * rowsum * dx;
    }
    return acc;
}

ScalarField2D periodic_shift(const ScalarField2D& field, std::span<const double> row_shifts) {
    if (row_shifts.size() != field.nz())
        throw GridMismatchError("periodic_shift: one shift per graded node required");
    for (double s : row_shifts)
        if (!std::isfinite(s)) throw InvalidArgumentError("periodic_shift: non-finite shift");

    ScalarField2D out(field.periodic_axis, field.axis);
    for (std::size_t j = 0; j < field.nz(); ++j) {
        auto modes = dft_forward(std::span<const double>(field.row(j), field.nx()));
        apply_shift_phase(modes, field.periodic_axis.period, row_shifts[j]);
        dft_inverse(modes, std::span<double>(out.row(j), out.nx()));
    }
    return out;
}

ScalarField2D periodic_derivative(const ScalarField2D& field) {
    ScalarField2D out(field.periodic_axis, field.axis);
    const std::size_t n = field.nx();
    const double base = 2.0 * std::numbers::pi / field.periodic_axis.period;
    for (std::size_t j = 0; j < field.nz(); ++j) {
        auto modes = dft_forward(std::span<const double>(field.row(j), n));
        for (std::size_t m = 0; m < n; ++m) {
            const int k = signed_wavenumber(m, n);
            if (n % 2 == 0 && m == n / 2) {
                modes[m] = 0.0;  // derivative of the cos Nyquist mode at nodes
            } else {
                modes[m] *= cplx{0.0, base * static_cast<double>(k)};
            }
        }
        dft_inverse(modes, std::span<double>(out.row(j), n));
    }
    return out;
}

namespace {

// Three-point first-derivative weights at x1 for samples at x0 < x1 < x2.
void d1_weights(double hm, double hp, double& wm, double& wc, double& wp) {
    wm = -hp / (hm * (hm + hp));
    wp = hm / (hp * (hm + hp));
    wc = -wm - wp;
}

// One-sided second-order weights at x0 for samples at x0, x1 = x0+h1,
// x2 = x0+h1+h2.
void d1_onesided(double h1, double h2, double& w0, double& w1, double& w2) {
    w0 = -(2.0 * h1 + h2) / (h1 * (h1 + h2));
    w1 = (h1 + h2) / (h1 * h2);
    w2 = -h1 / (h2 * (h1 + h2));
}

}  // namespace

ScalarField1D normal_derivative(const ScalarField1D& field) {
    const auto& z = field.axis->nodes;
    const std::size_t n = field.size();
    if (n < 3) throw InvalidArgumentError("normal_derivative: need >= 3 nodes");
    ScalarField1D out(field.axis);
    double w0, w1, w2;
    d1_onesided(z[1] - z[0], z[2] - z[1], w0, w1, w2);
    out[0] = w0 * field[0] + w1 * field[1] + w2 * field[2];
    for (std::size_t j = 1; j + 1 < n; ++j) {
        d1_weights(z[j] - z[j - 1], z[j + 1] - z[j], w0, w1, w2);
        out[j] = w0 * field[j - 1] + w1 * field[j] + w2 * field[j + 1];
    }
    d1_onesided(z[n - 2] - z[n - 1], z[n - 3] - z[n - 2], w0, w1, w2);
    out[n - 1] = w0 * field[n - 1] + w1 * field[n - 2] + w2 * field[n - 3];
    return out;
}

ScalarField2D normal_derivative(const ScalarField2D& field) {
    const auto& z = field.axis->nodes;
    const std::size_t n = field.nz(), nx = field.nx();
    if (n < 3) throw InvalidArgumentError("normal_derivative: need >= 3 nodes");
    ScalarField2D out(field.periodic_axis, field.axis);
    auto apply_row = [&](std::size_t j, std::size_t ja, std::size_t jb, std::size_t jc, double wa,
                         double wb, double wc) {
        const double* a = field.row(ja);
        const double* b = field.row(jb);
        const double* c = field.row(jc);
        double* o = out.row(j);
        for (std::size_t i = 0; i < nx; ++i) o[i] = wa * a[i] + wb * b[i] + wc * c[i];
    };
    double w0, w1, w2;
    d1_onesided(z[1] - z[0], z[2] - z[1], w0, w1, w2);
    apply_row(0, 0, 1, 2, w0, w1, w2);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        d1_weights(z[j] - z[j - 1], z[j + 1] - z[j], w0, w1, w2);
        apply_row(j, j - 1, j, j + 1, w0, w1, w2);
    }
    d1_onesided(z[n - 2] - z[n - 1], z[n - 3] - z[n - 2], w0, w1, w2);
    apply_row(n - 1, n - 1, n - 2, n - 3, w0, w1, w2);
    return out;
}

}  // namespace vvl
