#include "gwave/special_fn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gwave {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

const BigInt StirlingTable::zero_ = 0;

StirlingTable::StirlingTable(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw std::domain_error("StirlingTable: max_n must be >= 0");
    rows_.resize(max_n + 1);
    rows_[0] = {BigInt(1)};
    for (int n = 1; n <= max_n; ++n) {
        rows_[n].assign(n + 1, BigInt(0));
        for (int k = 1; k <= n; ++k) {
            const BigInt& above = (k <= n - 1) ? rows_[n - 1][k] : zero_;
            rows_[n][k] = k * above + rows_[n - 1][k - 1];
        }
    }
}

const BigInt& StirlingTable::at(int n, int k) const {
    if (n < 0 || n > max_n_)
        throw std::domain_error("stirling2: n = " + std::to_string(n) +
                                " outside supported range [0, " + std::to_string(max_n_) + "]");
    if (k < 0 || k > n) return zero_;
    return rows_[n][k];
}

BigInt StirlingTable::row_sum(int n) const {
    if (n < 0 || n > max_n_) throw std::domain_error("StirlingTable::row_sum: n out of range");
    BigInt sum = 0;
    for (const BigInt& v : rows_[n]) sum += v;
    return sum;
}

BernoulliTable::BernoulliTable(int max_index) : max_index_(max_index) {
    if (max_index < 0) throw std::domain_error("BernoulliTable: max_index must be >= 0");
    values_.resize(max_index + 1);
    values_[0] = 1;
    // B_n = -1/(n+1) * sum_{j=0}^{n-1} C(n+1, j) B_j, exact in rationals.
    for (int n = 1; n <= max_index; ++n) {
        Rational acc = 0;
        BigInt binom = 1;  // C(n+1, 0)
        for (int j = 0; j < n; ++j) {
            acc += Rational(binom) * values_[j];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        values_[n] = -acc / (n + 1);
    }
}

const Rational& BernoulliTable::at(int n) const {
    if (n < 0 || n > max_index_)
        throw std::domain_error("bernoulli: n = " + std::to_string(n) +
                                " outside supported range [0, " + std::to_string(max_index_) + "]");
    return values_[n];
}

const StirlingTable& stirling_table() {
    static const StirlingTable table(kStirlingMaxN);
    return table;
}

const BernoulliTable& bernoulli_table() {
    static const BernoulliTable table(kBernoulliMaxIndex);
    return table;
}

BigInt stirling2(int n, int k) {
    return stirling_table().at(n, k);
}

Rational bernoulli(int n) {
    return bernoulli_table().at(n);
}

double gamma_modulus_sq(double xi) {
    const double t = std::abs(kPi * xi);
    if (t == 0.0) return 1.0;
    // sinh overflows near 710; beyond that t/sinh(t) = 2t*exp(-t) to
    // machine precision, underflowing to 0 for very large t.
    if (t > 700.0) return 2.0 * t * std::exp(-t);
    return t / std::sinh(t);
}

double zeta(int s) {
    if (s < 2) throw std::domain_error("zeta: integer argument must be >= 2");
    constexpr int kCutoff = 32;
    double sum = 0.0;
    for (int n = kCutoff - 1; n >= 1; --n) sum += std::pow(double(n), -s);
    const double N = kCutoff;
    sum += 0.5 * std::pow(N, -s) + std::pow(N, 1.0 - s) / (s - 1.0);
    // Euler-Maclaurin tail: B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(1-s-2k).
    double rising = double(s);     // s(s+1)...(s+2k-2), updated per term
    double factorial = 2.0;        // (2k)!
    for (int k = 1; 2 * k <= kBernoulliMaxIndex; ++k) {
        const double term =
            to_double(bernoulli(2 * k)) / factorial * rising * std::pow(N, 1.0 - s - 2 * k);
        sum += term;
        if (std::abs(term) < 1e-18 * sum) break;
        rising *= double(s + 2 * k - 1) * double(s + 2 * k);
        factorial *= double(2 * k + 1) * double(2 * k + 2);
    }
    return sum;
}

}  // namespace gwave
