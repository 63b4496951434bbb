#pragma once

#include "gwave/gompertz.hpp"

#include <vector>

namespace gwave {

enum class WaveletFamily { Gompertz, Logistic };

/// A mother wavelet: zero mean, unit L2 norm. The Gompertz family member
/// of order n is the nth derivative of exp(-exp(-t)) scaled by
/// sqrt(2n / (|B_2n| (2^(2n)-1))), so its L2 norm is exactly 1; the
/// logistic member is the second derivative of 1/(1+exp(-t)) scaled by
/// sqrt(30).
class MotherWavelet {
public:
    WaveletFamily family() const { return family_; }
    int order() const { return order_; }
    double normalization() const { return normalization_; }

    double operator()(double t) const;

    /// Interval outside which the wavelet is negligible relative to
    /// every tolerance used here (|psi| < ~1e-20 beyond it).
    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }

private:
    friend MotherWavelet mother_gompertz(int n);
    friend MotherWavelet mother_logistic2();

    MotherWavelet(WaveletFamily f, int order, double normalization, double lo, double hi)
        : family_(f), order_(order), normalization_(normalization),
          support_lo_(lo), support_hi_(hi) {}

    WaveletFamily family_;
    int order_;
    double normalization_;
    double support_lo_;
    double support_hi_;
    // Gompertz family: coefficients (-1)^(n-k) {n k} for k = 1..n, cached
    // as doubles so the transform's inner loop skips the exact table.
    std::vector<double> stirling_coeffs_;
};

/// Gompertz mother wavelet of order n, 2 <= n <= kMaxDerivativeOrder.
MotherWavelet mother_gompertz(int n);

/// Logistic comparison wavelet (order 2).
MotherWavelet mother_logistic2();

/// Child wavelet psi^(a,b)(t) = psi((t-b)/a) / sqrt(a), a > 0.
class ChildWavelet {
public:
    ChildWavelet(MotherWavelet mother, double a, double b);

    const MotherWavelet& mother() const { return mother_; }
    double scale() const { return a_; }
    double shift() const { return b_; }

    double operator()(double t) const;

    /// Effective support mapped to the t axis.
    double support_lo() const { return b_ + a_ * mother_.support_lo(); }
    double support_hi() const { return b_ + a_ * mother_.support_hi(); }

private:
    MotherWavelet mother_;
    double a_;
    double b_;
};

/// Squared modulus of the Fourier transform of a Gompertz mother wavelet,
///   |psi_n^(xi)|^2 = n / (|B_2n| (2^(2n)-1) pi) * xi^(2n-2) * |Gamma(1+i xi)|^2,
/// under the unitary convention F(psi)(xi) = (2pi)^(-1/2) Int psi(t) e^(-i xi t) dt.
double fourier_modulus_sq(const MotherWavelet& w, double xi);

/// Admissibility constant C_psi = 2pi Int |xi|^-1 |psi^(xi)|^2 dxi for the
/// Gompertz wavelet of order n, via two independent routes.
struct AdmissibilityResult {
    int order;
    double closed_form;   ///< n (2^(2n-1)-1) (2n-2)! zeta(2n-1) / (|B_2n| (2^(2n)-1) 2^(2n-4) pi^(2n-2))
    double quadrature;    ///< adaptive quadrature of the defining integral
    double relative_gap;  ///< |closed_form - quadrature| / closed_form
};

/// 2 <= n <= 8.
AdmissibilityResult admissibility_constant(int n);

/// Quadrature values of the three integrals of x'' at standard
/// parameters: Int x'' = 0, Int |x''| = 2/e, Int (x'')^2 = 1/8.
struct GompertzIntegralFacts {
    double mean;
    double abs_integral;
    double sq_integral;
};

GompertzIntegralFacts gompertz_integral_facts();

}  // namespace gwave
