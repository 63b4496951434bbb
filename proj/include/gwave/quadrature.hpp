#pragma once

#include <functional>

namespace gwave {

struct QuadratureResult {
    double value;
    double abs_error;
};

/// Adaptive Gauss-Kronrod quadrature (GSL QAG, 21-point rule) over
/// [a, b] with an absolute error target plus a machine-precision
/// relative floor. The single quadrature engine for every analytic
/// check in this library.
QuadratureResult integrate_err(const std::function<double(double)>& f, double a, double b,
                               double abs_tol = 1e-12);

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

}  // namespace gwave
