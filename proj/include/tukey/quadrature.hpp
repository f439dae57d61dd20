#pragma once

#include <functional>

namespace tukey::quad {

struct Estimate {
    double value = 0.0;
    double error = 0.0;  // |K15 - G7| summed over accepted panels
    int evaluations = 0;
};

/// One 15-point Kronrod panel with the embedded 7-point Gauss estimate.
Estimate kronrod15(const std::function<double(double)>& f, double a, double b);

/// Adaptive bisection of Kronrod panels until each panel's |K15 - G7| is
/// below its share of `abs_tol`, or `max_depth` halvings are spent.
Estimate adaptive_kronrod(const std::function<double(double)>& f, double a, double b, double abs_tol,
                          int max_depth = 12);

}  // namespace tukey::quad
