#pragma once

namespace vvl {

/// Smooth wall cutoff in the wall-distance variable: 1 on [0, plateau],
/// 0 beyond support, quintic-smoothstep blend in between (C^2).
struct CutoffProfile {
    double plateau = 0.0;
    double support = 0.0;

    double value(double d) const;
    double derivative(double d) const;
    double second_derivative(double d) const;
    double operator()(double d) const { return value(d); }
};

CutoffProfile make_cutoff(double plateau, double support);

}  // namespace vvl
