#pragma once

#include <functional>
#include <string>

namespace thinheat {

/// Builds initial data from a selector string. Built-ins:
///   constant          -> 1
///   cos_x1(k)         -> cos(k pi x1)
///   cos_x2(k)         -> cos(k pi x2)
///   product(k,l)      -> cos(k pi x1) cos(l pi x2)
///   sum:a,b,...       -> sum of non-sum selectors, split on top-level commas
/// Unknown names or malformed arguments raise std::invalid_argument naming
/// the offending piece.
std::function<double(double, double)> make_initial(const std::string& selector);

/// Same grammar restricted to x2-independent terms (constant, cos_x1, sums
/// of those); cos_x2 and product are rejected for the 1d problem.
std::function<double(double)> make_initial_1d(const std::string& selector);

}  // namespace thinheat
