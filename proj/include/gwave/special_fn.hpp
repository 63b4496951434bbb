#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace gwave {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always canonical: lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

/// Triangular table of Stirling numbers of the second kind {n k},
/// built once from the recurrence {n+1 k} = k*{n k} + {n k-1} in
/// exact integer arithmetic.
class StirlingTable {
public:
    explicit StirlingTable(int max_n);

    int max_n() const { return max_n_; }

    /// {n k}. Zero for k < 0 or k > n; throws std::domain_error for
    /// n < 0 or n > max_n().
    const BigInt& at(int n, int k) const;

    /// Sum of row n, i.e. the nth Bell number.
    BigInt row_sum(int n) const;

private:
    int max_n_;
    std::vector<std::vector<BigInt>> rows_;
    static const BigInt zero_;
};

/// Bernoulli numbers B_0 .. B_max_index as exact rationals, from the
/// recurrence sum_{j=0}^{n} C(n+1,j) B_j = 0 (n >= 1).
class BernoulliTable {
public:
    explicit BernoulliTable(int max_index);

    int max_index() const { return max_index_; }

    /// B_n; throws std::domain_error outside [0, max_index()].
    const Rational& at(int n) const;

private:
    int max_index_;
    std::vector<Rational> values_;
};

inline constexpr int kStirlingMaxN = 40;
inline constexpr int kBernoulliMaxIndex = 64;

/// Process-wide tables, built on first use. Construction is not
/// re-entrant; after that, reads are safe from any thread.
const StirlingTable& stirling_table();
const BernoulliTable& bernoulli_table();

/// {n k} from the shared table (n in [0, kStirlingMaxN]).
BigInt stirling2(int n, int k);

/// B_n from the shared table (n in [0, kBernoulliMaxIndex]).
Rational bernoulli(int n);

/// |Gamma(1 + i*xi)|^2 = pi*xi / sinh(pi*xi). Even in xi, equal to 1 at
/// xi = 0, and 0 once sinh overflows (the true value underflows there).
double gamma_modulus_sq(double xi);

/// Riemann zeta at integer s >= 2: truncated Dirichlet series plus an
/// Euler-Maclaurin tail, accurate to ~1e-15 relative.
double zeta(int s);

}  // namespace gwave
