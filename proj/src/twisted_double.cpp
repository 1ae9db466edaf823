#include "scx/twisted_double.hpp"

#include "scx/datum.hpp"

namespace scx {

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (coeffs.size() != o.coeffs.size()) return false;
    for (auto it1 = coeffs.begin(), it2 = o.coeffs.begin(); it1 != coeffs.end(); ++it1, ++it2)
        if (it1->first != it2->first || !(it1->second == it2->second)) return false;
    return true;
}

TwistedDouble::TwistedDouble(CocycleTable c) : c_(std::move(c)) {
    const auto& g = c_.group();
    size_t ng = (size_t)g.order();
    size_t ns = c_.points().size();
    size_t d = ng * ns;
    products_.resize(d * d);
    for (size_t a = 0; a < ng; ++a)
        for (size_t s = 0; s < ns; ++s)
            for (size_t b = 0; b < ng; ++b)
                for (size_t t = 0; t < ns; ++t) {
                    BasisProduct& p =
                        products_[basis_index(a, s) * d + basis_index(b, t)];
                    if (s != c_.act(b, t)) continue; // q(s)^b != q(t)
                    size_t ab = g.index_of(g.add(g.element_at(a), g.element_at(b)));
                    p.nonzero = true;
                    p.result = basis_index(ab, t);
                    p.exponent = -c_.at(t, a, b);
                }
}

TwistedDouble TwistedDouble::build(CocycleTable c) {
    if (auto v = validate_cocycle(c))
        throw ValidationError("invalid cocycle: " + v->message());
    return TwistedDouble(std::move(c));
}

TwistedDouble TwistedDouble::build_unchecked(CocycleTable c) {
    return TwistedDouble(std::move(c));
}

std::string TwistedDouble::basis_str(size_t basis_idx) const {
    return "e^" + FiniteAbelianGroup::elem_str(group().element_at(alpha_of(basis_idx))) +
           "⊗q(" + c_.points()[point_of(basis_idx)] + ")";
}

std::string TwistedDouble::str(const AlgebraElement& x) const {
    if (x.coeffs.empty()) return "0";
    std::string out;
    for (const auto& [idx, coeff] : x.coeffs) {
        if (!out.empty()) out += " + ";
        out += "(" + coeff.str() + ") " + basis_str(idx);
    }
    return out;
}

AlgebraElement TwistedDouble::basis_elem(size_t alpha_idx, size_t point_idx) const {
    AlgebraElement e;
    e.coeffs[basis_index(alpha_idx, point_idx)] = Cyclotomic(1);
    return e;
}

AlgebraElement TwistedDouble::unit() const {
    AlgebraElement e;
    size_t zero = group().index_of(group().zero());
    for (size_t s = 0; s < points(); ++s) e.coeffs[basis_index(zero, s)] = Cyclotomic(1);
    return e;
}

AlgebraElement TwistedDouble::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    size_t d = dim();
    AlgebraElement out;
    for (const auto& [i, ci] : x.coeffs) {
        if (i >= d) throw ValidationError("element does not live on this basis");
        for (const auto& [j, cj] : y.coeffs) {
            if (j >= d) throw ValidationError("element does not live on this basis");
            const BasisProduct& p = products_[i * d + j];
            if (!p.nonzero) continue;
            Cyclotomic term = ci * cj * Cyclotomic::root_of_unity(p.exponent);
            auto it = out.coeffs.find(p.result);
            if (it == out.coeffs.end()) {
                if (!term.is_zero()) out.coeffs.emplace(p.result, std::move(term));
            } else {
                it->second = it->second + term;
                if (it->second.is_zero()) out.coeffs.erase(it);
            }
        }
    }
    return out;
}

std::optional<std::tuple<size_t, size_t, size_t>> TwistedDouble::check_associativity() const {
    size_t d = dim();
    // pure structure-constant arithmetic: both sides are single basis symbols
    // with a Q/Z exponent, so compare those instead of Cyclotomic products
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            const BasisProduct& ij = products_[i * d + j];
            for (size_t k = 0; k < d; ++k) {
                const BasisProduct& jk = products_[j * d + k];
                bool lz = true, rz = true;
                size_t lres = 0, rres = 0;
                QmodZ lexp, rexp;
                if (ij.nonzero) {
                    const BasisProduct& q = products_[ij.result * d + k];
                    if (q.nonzero) {
                        lz = false;
                        lres = q.result;
                        lexp = ij.exponent + q.exponent;
                    }
                }
                if (jk.nonzero) {
                    const BasisProduct& q = products_[i * d + jk.result];
                    if (q.nonzero) {
                        rz = false;
                        rres = q.result;
                        rexp = jk.exponent + q.exponent;
                    }
                }
                if (lz != rz || (!lz && (lres != rres || lexp != rexp)))
                    return std::make_tuple(i, j, k);
            }
        }
    return std::nullopt;
}

long long TwistedDouble::center_dimension_of_stabilizer_algebra(const OrbitData& orbit) const {
    ScalarCocycle sc = restrict_to_stabilizer(c_, orbit);
    return radical(bicharacter_of(sc)).order();
}

} // namespace scx
