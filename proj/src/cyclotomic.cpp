#include "scx/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace scx {

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

namespace {

// quotient of exact polynomial division (integer coefficients, divisor monic)
std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (long long i = (long long)q.size() - 1; i >= 0; --i) {
        long long c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j)
            num[i + j] = checked_sub(num[i + j], checked_mul(c, den[j]));
    }
    return q;
}

} // namespace

const std::vector<long long>& cyclotomic_polynomial(long long n) {
    static std::map<long long, std::vector<long long>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    std::vector<long long> den{1}; // running product of proper Phi_d
    for (long long d : divisors_of(n)) {
        if (d == n) continue;
        const std::vector<long long>* phi_d;
        auto jt = cache.find(d);
        if (jt == cache.end()) {
            // divisors come in ascending order, so recursion depth is 1
            std::vector<long long> sub_num(d + 1, 0);
            sub_num[0] = -1;
            sub_num[d] = 1;
            std::vector<long long> sub_den{1};
            for (long long e : divisors_of(d)) {
                if (e == d) continue;
                const auto& phi_e = cache.at(e); // filled by earlier iterations
                std::vector<long long> prod(sub_den.size() + phi_e.size() - 1, 0);
                for (size_t i = 0; i < sub_den.size(); ++i)
                    for (size_t j = 0; j < phi_e.size(); ++j)
                        prod[i + j] = checked_add(prod[i + j], checked_mul(sub_den[i], phi_e[j]));
                sub_den = std::move(prod);
            }
            cache[d] = poly_divide_exact(std::move(sub_num), sub_den);
            phi_d = &cache.at(d);
        } else {
            phi_d = &jt->second;
        }
        std::vector<long long> prod(den.size() + phi_d->size() - 1, 0);
        for (size_t i = 0; i < den.size(); ++i)
            for (size_t j = 0; j < phi_d->size(); ++j)
                prod[i + j] = checked_add(prod[i + j], checked_mul(den[i], (*phi_d)[j]));
        den = std::move(prod);
    }
    return cache[n] = poly_divide_exact(std::move(num), den);
}

namespace {

// reduce a rational polynomial modulo Phi_n, returning phi(n) coefficients
std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, long long n) {
    const auto& phi = cyclotomic_polynomial(n);
    size_t deg = phi.size() - 1; // = euler_phi(n)
    for (long long i = (long long)poly.size() - 1; i >= (long long)deg; --i) {
        Rational c = poly[i];
        if (c.is_zero()) continue;
        poly[i] = Rational(0);
        for (size_t j = 0; j < deg; ++j)
            poly[i - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg, Rational(0));
    return poly;
}

} // namespace

Cyclotomic make_cyclotomic_from_poly(long long order, std::vector<Rational> poly) {
    return Cyclotomic(order, reduce_mod_phi(std::move(poly), order));
}

Cyclotomic Cyclotomic::root_of_unity(const QmodZ& e) {
    long long n = e.value().den();
    long long k = e.value().num(); // already in [0, n)
    std::vector<Rational> poly(k + 1, Rational(0));
    poly[k] = Rational(1);
    return make_cyclotomic_from_poly(n, std::move(poly));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Cyclotomic Cyclotomic::lifted(long long m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
    long long stride = m / order_;
    // zeta_N^i = zeta_m^{i * (m/N)}
    std::vector<Rational> poly((coeffs_.size() - 1) * stride + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * stride] = coeffs_[i];
    return make_cyclotomic_from_poly(m, std::move(poly));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long long m = lcm_ll(order_, o.order_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long long m = lcm_ll(order_, o.order_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    std::vector<Rational> poly(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            poly[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return make_cyclotomic_from_poly(m, std::move(poly));
}

namespace {

using Poly = std::vector<Rational>;

size_t poly_deg(const Poly& p) {
    size_t d = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) d = i;
    return d;
}

bool poly_is_zero(const Poly& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

// p mod q and p div q over Q
std::pair<Poly, Poly> poly_divmod(Poly p, const Poly& q) {
    size_t dq = poly_deg(q);
    Poly quot(p.size(), Rational(0));
    while (!poly_is_zero(p) && poly_deg(p) >= dq) {
        size_t dp = poly_deg(p);
        Rational c = p[dp] / q[dq];
        quot[dp - dq] += c;
        for (size_t j = 0; j <= dq; ++j) p[dp - dq + j] -= c * q[j];
    }
    return {quot, p};
}

} // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
    // extended Euclid for gcd(this, Phi_N) = 1 over Q[x]
    const auto& phi_int = cyclotomic_polynomial(order_);
    Poly r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
    Poly r1 = coeffs_;
    Poly s0{Rational(0)}, s1{Rational(1)}; // coefficients of this-operand
    while (!poly_is_zero(r1)) {
        auto [q, rem] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd is a nonzero constant (Phi_N is irreducible)
    Rational g = r0[poly_deg(r0)];
    for (auto& c : s0) c = c / g;
    return make_cyclotomic_from_poly(order_, std::move(s0));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    long long m = lcm_ll(order_, o.order_);
    return lifted(m).coeffs_ == o.lifted(m).coeffs_;
}

std::string Cyclotomic::str() const {
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[i].str();
        if (i > 0) {
            out += "*z" + std::to_string(order_);
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace scx
