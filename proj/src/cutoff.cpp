#include "vvl/cutoff.hpp"

#include <cmath>

#include "vvl/error.hpp"

namespace vvl {

CutoffProfile make_cutoff(double plateau, double support) {
    if (!(plateau > 0.0) || !(support > plateau) || !std::isfinite(support))
        throw InvalidDomainError("make_cutoff: need 0 < plateau < support");
    return CutoffProfile{plateau, support};
}

double CutoffProfile::value(double d) const {
    if (d <= plateau) return 1.0;
    if (d >= support) return 0.0;
    const double s = (d - plateau) / (support - plateau);
    return 1.0 - s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

double CutoffProfile::derivative(double d) const {
    if (d <= plateau || d >= support) return 0.0;
    const double w = support - plateau;
    const double s = (d - plateau) / w;
    return -30.0 * s * s * (s - 1.0) * (s - 1.0) / w;
}

double CutoffProfile::second_derivative(double d) const {
    if (d <= plateau || d >= support) return 0.0;
    const double w = support - plateau;
    const double s = (d - plateau) / w;
    return -(120.0 * s * s * s - 180.0 * s * s + 60.0 * s) / (w * w);
}

}  // namespace vvl
