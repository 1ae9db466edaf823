#include "scx/rational.hpp"

#include <charconv>

namespace scx {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd_ll(a, b), b);
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = checked_sub(0, n);
        d = checked_sub(0, d);
    }
    long long g = gcd_ll(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = n;
    den_ = d;
}

Rational Rational::operator-() const { return Rational(checked_sub(0, num_), den_); }

Rational Rational::operator+(const Rational& o) const {
    long long g = gcd_ll(den_, o.den_);
    long long dl = den_ / g;
    long long n = checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, dl));
    return Rational(n, checked_mul(dl, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    long long g1 = gcd_ll(num_, o.den_);
    long long g2 = gcd_ll(o.num_, den_);
    return Rational(checked_mul(num_ / g1, o.num_ / g2),
                    checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
    // denominators positive, cross multiply with overflow checks
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
    auto parse_ll = [](std::string_view t) {
        long long v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size())
            throw std::invalid_argument("malformed rational: '" + std::string(t) + "'");
        return v;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_ll(s));
    return Rational(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
}

} // namespace scx
