#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scx {

// Thrown when a value leaves the range of checked 64-bit arithmetic.
struct ArithmeticOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    /// Largest integer <= value.
    long long floor() const;

    /// Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    /// "p/q", or just "p" when q = 1.
    std::string str() const;

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view s);

private:
    long long num_;
    long long den_;
};

inline Rational operator*(long long k, const Rational& r) { return Rational(k) * r; }

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

} // namespace scx
