#pragma once

namespace gwave {

/// Parameters of the Gompertz growth curve
///   x(t) = x_max * exp(-exp(-s*(t - t0))),
/// the solution of x' = s*x*log(x_max/x). t0 is the inflection time.
struct GompertzParams {
    double x_max;  ///< saturation level (series units), > 0
    double s;      ///< growth rate (1/time), > 0
    double t0;     ///< inflection time

    GompertzParams(double x_max, double s, double t0);
};

/// Standard parameters (1, 1, 0) used by the wavelet construction.
GompertzParams standard_gompertz();

/// Highest supported derivative order.
inline constexpr int kMaxDerivativeOrder = 12;

double gompertz_value(const GompertzParams& p, double t);

/// nth derivative of the Gompertz curve in closed form,
///   x^(n)(t) = s^n * x * sum_{k=1}^{n} (-1)^(n-k) {n k} u^k,
/// with u = log(x_max/x) evaluated directly as exp(-s*(t - t0)) so the
/// result stays accurate where x approaches x_max. The polynomial in u
/// is evaluated Horner-style. 1 <= n <= kMaxDerivativeOrder.
double gompertz_derivative(const GompertzParams& p, int n, double t);

/// Landmark points: the inflection t0 (zero of x'') and the smaller
/// zero t1 of x''', with the curve values attained there.
struct Landmarks {
    double t0;
    double t1;        ///< t0 - (1/s)*log((3+sqrt(5))/2)
    double x_at_t0;   ///< x_max/e
    double x_at_t1;   ///< x_max*exp(-(3+sqrt(5))/2)
};

Landmarks landmarks(const GompertzParams& p);

}  // namespace gwave
