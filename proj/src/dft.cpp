#include "vvl/dft.hpp"

#include <cmath>
#include <numbers>

namespace vvl {

std::vector<cplx> dft_forward(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<cplx> modes(n);
    const double w = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t m = 0; m < n; ++m) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double ph = w * static_cast<double>(m) * static_cast<double>(k);
            acc += values[k] * cplx{std::cos(ph), std::sin(ph)};
        }
        modes[m] = acc / static_cast<double>(n);
    }
    return modes;
}

void dft_inverse(std::span<const cplx> modes, std::span<double> out) {
    const std::size_t n = modes.size();
    const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            const double ph = w * static_cast<double>(m) * static_cast<double>(k);
            acc += (modes[m] * cplx{std::cos(ph), std::sin(ph)}).real();
        }
        out[k] = acc;
    }
}

int signed_wavenumber(std::size_t m, std::size_t n) {
    return m <= n / 2 ? static_cast<int>(m) : static_cast<int>(m) - static_cast<int>(n);
}

void apply_shift_phase(std::span<cplx> modes, double period, double shift) {
    const std::size_t n = modes.size();
    const double base = 2.0 * std::numbers::pi / period * shift;
    for (std::size_t m = 0; m < n; ++m) {
        const int k = signed_wavenumber(m, n);
        const double ph = -base * static_cast<double>(k);
        if (n % 2 == 0 && m == n / 2) {
            modes[m] *= std::cos(ph);  // keep the shifted field real
        } else {
            modes[m] *= cplx{std::cos(ph), std::sin(ph)};
        }
    }
}

void fill_rotation(std::span<cplx> out, double angle) {
    const std::size_t n = out.size();
    const cplx r{std::cos(angle), -std::sin(angle)};
    cplx cur{1.0, 0.0};
    out[0] = cur;
    for (std::size_t k = 1; k < n / 2; ++k) {
        cur *= r;
        out[k] = cur;
        out[n - k] = std::conj(cur);
    }
    cur *= r;
    out[n / 2] = cplx{cur.real(), 0.0};  // cos((n/2) angle): shifted field stays real
}

void rotate_row(std::vector<std::vector<cplx>>& modes, std::size_t j, double angle) {
    const std::size_t n = modes.size();
    const cplx r{std::cos(angle), -std::sin(angle)};
    cplx cur{1.0, 0.0};
    for (std::size_t k = 1; k < n / 2; ++k) {
        cur *= r;
        modes[k][j] *= cur;
        modes[n - k][j] *= std::conj(cur);
    }
    cur *= r;
    modes[n / 2][j] *= cur.real();
}

double dft_eval(std::span<const cplx> modes, double period, double x) {
    const std::size_t n = modes.size();
    const double base = 2.0 * std::numbers::pi / period * x;
    double acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        const int k = signed_wavenumber(m, n);
        const double ph = base * static_cast<double>(k);
        if (n % 2 == 0 && m == n / 2)
            acc += modes[m].real() * std::cos(ph);
        else
            acc += (modes[m] * cplx{std::cos(ph), std::sin(ph)}).real();
    }
    return acc;
}

}  // namespace vvl
