#pragma once

#include <map>
#include <string>
#include <vector>

namespace vvl {

/// One scalar per epsilon for a fixed norm functional.
struct NormSeries {
    std::string norm_id;
    std::vector<double> eps_list;  // strictly decreasing
    std::vector<double> values;
};

/// Least-squares log-log fit of a NormSeries.
struct RateFit {
    std::string norm_id;
    double slope = 0.0;
    double intercept = 0.0;  // log-constant
    double residual = 0.0;   // max relative deviation from the fitted law
    bool degenerate = false;
};

/// Per-time bound verification (Lighthill estimates, uniform L1, ...).
struct BoundsReport {
    std::string bound_id;
    std::vector<double> times;
    std::vector<double> lhs;
    std::vector<double> rhs;
    double slack = 0.0;
    bool pass = false;
    std::vector<std::string> notes;
};

/// Vortex-sheet pairing gaps along the epsilon sweep for one test function.
struct SheetCheck {
    std::string test_id;
    std::vector<double> eps_list;
    std::vector<double> gaps;       // |<curl u_eps, phi> - <curl u0, phi> - sheet|
    double sheet_value = 0.0;       // sheet term at the smallest epsilon
    double cross_check_error = 0.0; // direct-quadrature vs pairing-path sheet term
    bool pass = false;
};

struct ConvergenceTable {
    std::string case_id;
    std::vector<NormSeries> series;
    std::vector<RateFit> fits;
    std::map<std::string, std::string> metadata;
    std::vector<std::string> diagnostics;
};

}  // namespace vvl
