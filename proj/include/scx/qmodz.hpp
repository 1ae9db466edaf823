#pragma once

#include "scx/rational.hpp"

namespace scx {

/// Residue in Q/Z, stored as the canonical representative in [0, 1).
/// Exponents of roots of unity live here: q represents e^{2*pi*i*q}.
class QmodZ {
public:
    QmodZ() = default;
    QmodZ(const Rational& r) : v_(r.frac()) {}
    QmodZ(long long num, long long den) : v_(Rational(num, den).frac()) {}

    const Rational& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    long long den() const { return v_.den(); }

    QmodZ operator+(const QmodZ& o) const { return QmodZ(v_ + o.v_); }
    QmodZ operator-(const QmodZ& o) const { return QmodZ(v_ - o.v_); }
    QmodZ operator-() const { return QmodZ(-v_); }
    QmodZ operator*(long long k) const { return QmodZ(Rational(k) * v_); }

    bool operator==(const QmodZ& o) const { return v_ == o.v_; }
    bool operator!=(const QmodZ& o) const { return v_ != o.v_; }
    bool operator<(const QmodZ& o) const { return v_ < o.v_; }

    std::string str() const { return v_.str(); }
    static QmodZ parse(std::string_view s) { return QmodZ(Rational::parse(s)); }

private:
    Rational v_; // invariant: 0 <= v_ < 1
};

} // namespace scx
