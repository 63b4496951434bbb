#include "gwave/gompertz.hpp"

#include "gwave/special_fn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gwave {

GompertzParams::GompertzParams(double x_max_, double s_, double t0_)
    : x_max(x_max_), s(s_), t0(t0_) {
    if (!(x_max > 0.0) || !std::isfinite(x_max))
        throw std::invalid_argument("GompertzParams: x_max must be positive and finite");
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::invalid_argument("GompertzParams: s must be positive and finite");
    if (!std::isfinite(t0)) throw std::invalid_argument("GompertzParams: t0 must be finite");
}

GompertzParams standard_gompertz() {
    return GompertzParams(1.0, 1.0, 0.0);
}

double gompertz_value(const GompertzParams& p, double t) {
    return p.x_max * std::exp(-std::exp(-p.s * (t - p.t0)));
}

double gompertz_derivative(const GompertzParams& p, int n, double t) {
    if (n < 1 || n > kMaxDerivativeOrder)
        throw std::domain_error("gompertz_derivative: order " + std::to_string(n) +
                                " outside supported range [1, " +
                                std::to_string(kMaxDerivativeOrder) + "]");
    const double u = std::exp(-p.s * (t - p.t0));  // = log(x_max/x)
    // Far left tail: x = x_max*exp(-u) underflows double-exponentially
    // while the Stirling polynomial grows only like u^n.
    if (u > 700.0) return 0.0;
    const auto& table = stirling_table();
    // Horner in u over coefficients (-1)^(n-k) {n k}, k = n..1.
    double poly = table.at(n, n).convert_to<double>();
    for (int k = n - 1; k >= 1; --k) {
        const double coeff = table.at(n, k).convert_to<double>();
        poly = poly * u + ((n - k) % 2 == 0 ? coeff : -coeff);
    }
    poly *= u;
    const double x = p.x_max * std::exp(-u);
    return std::pow(p.s, n) * x * poly;
}

Landmarks landmarks(const GompertzParams& p) {
    const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
    Landmarks lm;
    lm.t0 = p.t0;
    lm.t1 = p.t0 - std::log(golden) / p.s;
    lm.x_at_t0 = p.x_max / std::exp(1.0);
    lm.x_at_t1 = p.x_max * std::exp(-golden);
    return lm;
}

}  // namespace gwave
