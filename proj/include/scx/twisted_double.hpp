#pragma once

#include "scx/cocycle.hpp"
#include "scx/cyclotomic.hpp"

#include <map>
#include <optional>

namespace scx {

/// Finitely supported sum of basis symbols e^alpha (x) q(s) with Cyclotomic
/// coefficients, keyed by flat basis index.  Zero coefficients are never
/// stored.
struct AlgebraElement {
    std::map<size_t, Cyclotomic> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const AlgebraElement& o) const;
};

/// The generalized twisted double A_lambda(D, S) = C[D] (x) C S, with
/// (e^a (x) q(s)) * (e^b (x) q(t)) = lambda_t(a,b)^{-1} e^{a+b} (x) q(t)
/// when s = t + b (that is, q(s)^b = q(t)) and 0 otherwise.
class TwistedDouble {
public:
    struct BasisProduct {
        bool nonzero = false;
        size_t result = 0;  // flat basis index of e^{a+b} (x) q(t)
        QmodZ exponent;     // scalar is root_of_unity(exponent) = lambda_t(a,b)^{-1}
    };

    /// Validates the cocycle first; throws ValidationError with the witness
    /// message on failure.
    static TwistedDouble build(CocycleTable c);
    /// Skips validation (for exercising check_associativity on bad tables).
    static TwistedDouble build_unchecked(CocycleTable c);

    const CocycleTable& cocycle() const { return c_; }
    const FiniteAbelianGroup& group() const { return c_.group(); }
    size_t points() const { return c_.points().size(); }
    size_t dim() const { return (size_t)group().order() * points(); }

    size_t basis_index(size_t alpha_idx, size_t point_idx) const {
        return alpha_idx * points() + point_idx;
    }
    size_t alpha_of(size_t basis_idx) const { return basis_idx / points(); }
    size_t point_of(size_t basis_idx) const { return basis_idx % points(); }
    std::string basis_str(size_t basis_idx) const;
    std::string str(const AlgebraElement& x) const;

    const BasisProduct& basis_product(size_t i, size_t j) const {
        return products_[i * dim() + j];
    }

    AlgebraElement basis_elem(size_t alpha_idx, size_t point_idx) const;
    AlgebraElement unit() const;
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

    /// Exhaustive (x*y)*z = x*(y*z) over basis triples; returns the first
    /// counterexample (i,j,k) if any.
    std::optional<std::tuple<size_t, size_t, size_t>> check_associativity() const;

    /// dim Z(C^{lambda_s}[D_W]) at the orbit representative, via the radical
    /// of the cocycle's bicharacter.
    long long center_dimension_of_stabilizer_algebra(const OrbitData& orbit) const;

private:
    explicit TwistedDouble(CocycleTable c);

    CocycleTable c_;
    std::vector<BasisProduct> products_;
};

} // namespace scx
