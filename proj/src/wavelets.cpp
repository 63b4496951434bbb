#include "gwave/wavelets.hpp"

#include "gwave/quadrature.hpp"
#include "gwave/special_fn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace gwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gompertz x^(n) decays like exp(-exp(-t)) on the left and e^-t on the
// right; the logistic f'' decays like e^-|t| on both sides.
constexpr double kGompertzSupportLo = -8.0;
constexpr double kGompertzSupportHi = 60.0;
constexpr double kLogisticSupportHalf = 46.0;

/// Second derivative of the standard logistic f(t) = 1/(1+e^-t):
/// f'' = f (1-f) (1-2f), odd in t.
double logistic_second_derivative(double t) {
    const double e = std::exp(-std::abs(t));
    const double d = 1.0 + e;
    const double value = e * (e - 1.0) / (d * d * d);
    return t < 0.0 ? -value : value;
}

/// Exact rational 2n / (|B_2n| (2^(2n)-1)), the squared normalization.
Rational gompertz_norm_sq(int n) {
    const Rational b2n = bernoulli(2 * n);
    const Rational abs_b2n = b2n < 0 ? Rational(-b2n) : b2n;
    const BigInt pow2 = (BigInt(1) << (2 * n)) - 1;
    return Rational(2 * n) / (abs_b2n * Rational(pow2));
}

}  // namespace

double MotherWavelet::operator()(double t) const {
    if (family_ == WaveletFamily::Logistic)
        return normalization_ * logistic_second_derivative(t);
    // x^(n) at standard parameters with cached coefficients; same
    // evaluation order as gompertz_derivative, so the results agree bit
    // for bit.
    const double u = std::exp(-t);
    if (u > 700.0) return 0.0;
    double poly = stirling_coeffs_.back();
    for (int k = order_ - 1; k >= 1; --k) poly = poly * u + stirling_coeffs_[k - 1];
    poly *= u;
    return normalization_ * (std::exp(-u) * poly);
}

MotherWavelet mother_gompertz(int n) {
    if (n < 2 || n > kMaxDerivativeOrder)
        throw std::domain_error("mother_gompertz: order " + std::to_string(n) +
                                " outside supported range [2, " +
                                std::to_string(kMaxDerivativeOrder) + "]");
    const double norm = std::sqrt(to_double(gompertz_norm_sq(n)));
    MotherWavelet w(WaveletFamily::Gompertz, n, norm, kGompertzSupportLo, kGompertzSupportHi);
    w.stirling_coeffs_.resize(n);
    for (int k = 1; k <= n; ++k) {
        const double coeff = stirling_table().at(n, k).convert_to<double>();
        w.stirling_coeffs_[k - 1] = (n - k) % 2 == 0 ? coeff : -coeff;
    }
    return w;
}

MotherWavelet mother_logistic2() {
    // Int (f'')^2 dt = Int_0^1 x(1-x)(1-2x)^2 dx = 1/30.
    return MotherWavelet(WaveletFamily::Logistic, 2, std::sqrt(30.0), -kLogisticSupportHalf,
                         kLogisticSupportHalf);
}

ChildWavelet::ChildWavelet(MotherWavelet mother, double a, double b)
    : mother_(std::move(mother)), a_(a), b_(b) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::domain_error("ChildWavelet: scale a must be positive and finite");
    if (!std::isfinite(b)) throw std::domain_error("ChildWavelet: shift b must be finite");
}

double ChildWavelet::operator()(double t) const {
    return mother_((t - b_) / a_) / std::sqrt(a_);
}

double fourier_modulus_sq(const MotherWavelet& w, double xi) {
    if (w.family() != WaveletFamily::Gompertz)
        throw std::domain_error("fourier_modulus_sq: closed form only for the Gompertz family");
    const int n = w.order();
    const double prefactor = to_double(gompertz_norm_sq(n)) / (2.0 * kPi);
    return prefactor * std::pow(xi, 2 * n - 2) * gamma_modulus_sq(xi);
}

AdmissibilityResult admissibility_constant(int n) {
    if (n < 2 || n > 8)
        throw std::domain_error("admissibility_constant: order " + std::to_string(n) +
                                " outside supported range [2, 8]");
    // n (2^(2n-1)-1) (2n-2)! / (|B_2n| (2^(2n)-1) 2^(2n-4)), exact.
    BigInt factorial = 1;
    for (int i = 2; i <= 2 * n - 2; ++i) factorial *= i;
    const Rational b2n = bernoulli(2 * n);
    const Rational abs_b2n = b2n < 0 ? Rational(-b2n) : b2n;
    const Rational rational_part =
        Rational(BigInt(n) * ((BigInt(1) << (2 * n - 1)) - 1) * factorial) /
        (abs_b2n * Rational((BigInt(1) << (2 * n)) - 1) * Rational(BigInt(1) << (2 * n - 4)));

    AdmissibilityResult r;
    r.order = n;
    r.closed_form = to_double(rational_part) * zeta(2 * n - 1) / std::pow(kPi, 2 * n - 2);

    // 2pi Int_-inf^inf |xi|^-1 |psi_n^(xi)|^2 dxi; the integrand is even
    // and decays like xi^(2n-3) e^(-pi xi), negligible past xi = 40.
    const MotherWavelet w = mother_gompertz(n);
    const auto integrand = [&w](double xi) {
        return xi == 0.0 ? 0.0 : fourier_modulus_sq(w, xi) / xi;
    };
    r.quadrature = 4.0 * kPi * integrate(integrand, 0.0, 40.0);
    r.relative_gap = std::abs(r.closed_form - r.quadrature) / r.closed_form;
    return r;
}

GompertzIntegralFacts gompertz_integral_facts() {
    const GompertzParams std_params = standard_gompertz();
    const auto second = [&std_params](double t) {
        return gompertz_derivative(std_params, 2, t);
    };
    GompertzIntegralFacts facts;
    facts.mean = integrate(second, kGompertzSupportLo, kGompertzSupportHi);
    facts.abs_integral =
        integrate([&second](double t) { return std::abs(second(t)); }, kGompertzSupportLo,
                  kGompertzSupportHi);
    facts.sq_integral =
        integrate([&second](double t) { return second(t) * second(t); }, kGompertzSupportLo,
                  kGompertzSupportHi);
    return facts;
}

}  // namespace gwave
