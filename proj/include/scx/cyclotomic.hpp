#pragma once

#include "scx/qmodz.hpp"

#include <vector>

namespace scx {

long long euler_phi(long long n);
std::vector<long long> divisors_of(long long n);

/// Coefficients of the n-th cyclotomic polynomial Phi_n, lowest degree first,
/// length phi(n)+1, leading coefficient 1. Cached; thread safe.
const std::vector<long long>& cyclotomic_polynomial(long long n);

/// Element of the cyclotomic field Q(zeta_N), stored canonically as a
/// polynomial in zeta_N reduced modulo Phi_N.  Operands with different
/// declared orders are lifted to the lcm before combining; equality
/// compares after lifting both sides.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
    Cyclotomic(long long n) : Cyclotomic(Rational(n)) {}

    /// zeta_N^k where e = k/N in lowest terms; the result has order N.
    static Cyclotomic root_of_unity(const QmodZ& e);

    long long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const { return *this == Cyclotomic(Rational(1)); }

    /// Same value re-expressed in Q(zeta_m); requires order() | m.
    Cyclotomic lifted(long long m) const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;

    /// Multiplicative inverse; throws std::domain_error on zero.
    Cyclotomic inverse() const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Exact printable form, e.g. "1/2 + 3 z6 - z6^?" with z<N> = e^{2 pi i/N}.
    std::string str() const;

private:
    Cyclotomic(long long order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    long long order_;
    std::vector<Rational> coeffs_; // length phi(order_)

    friend Cyclotomic make_cyclotomic_from_poly(long long order, std::vector<Rational> poly);
};

} // namespace scx
