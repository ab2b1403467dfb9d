#pragma once

#include <functional>

namespace rsl {

// Adaptive Gauss-Kronrod (G7/K15) quadrature on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12, int max_depth = 30);

}  // namespace rsl
