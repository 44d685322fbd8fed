#pragma once

#include <cstddef>
#include <vector>

namespace vvl {

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

/// Gauss-Legendre rule of order n (Newton iteration on P_n roots).
const GaussRule& gauss_legendre(std::size_t n);

/// Integrates f over (a, b) with the order-n rule.
template <class F>
double gauss_integrate(F&& f, double a, double b, std::size_t n = 64) {
    const GaussRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

}  // namespace vvl
