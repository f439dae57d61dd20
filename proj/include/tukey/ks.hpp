#pragma once

#include <functional>
#include <vector>

namespace tukey {

/// sup_x |F_n(x) - F(x)| for a continuous reference F. Sorts its copy of the sample.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

/// sup_x |F_n(x) - G_m(x)| between two empirical distribution functions.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace tukey
