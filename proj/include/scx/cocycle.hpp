#pragma once

#include "scx/abelian.hpp"

#include <map>
#include <optional>
#include <string>

namespace scx {

struct OrbitData;

/// Family of 2-cocycle exponents lambda_s(alpha,beta) = e^{2 pi i exp(s,a,b)}
/// indexed by a point set S carrying a D-action.  Entries not stored are 0.
class CocycleTable {
public:
    CocycleTable() = default;
    CocycleTable(FiniteAbelianGroup group, std::vector<std::string> points,
                 std::vector<std::vector<size_t>> point_action);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<std::string>& points() const { return points_; }
    size_t point_index(const std::string& p) const;

    /// Index of the point s + alpha (the D-action on S).
    size_t act(size_t elem_idx, size_t point_idx) const {
        return point_action_[elem_idx][point_idx];
    }

    void set(const std::string& point, const Elem& a, const Elem& b, const QmodZ& v);
    QmodZ at(size_t point_idx, size_t a_idx, size_t b_idx) const;
    QmodZ at(const std::string& point, const Elem& a, const Elem& b) const;

    bool is_trivial() const { return entries_.empty(); }
    const std::map<std::tuple<size_t, size_t, size_t>, QmodZ>& entries() const {
        return entries_;
    }

private:
    FiniteAbelianGroup group_;
    std::vector<std::string> points_;
    std::vector<std::vector<size_t>> point_action_; // [elem idx][point idx]
    std::map<std::tuple<size_t, size_t, size_t>, QmodZ> entries_;
};

struct CocycleViolation {
    enum class Kind { Normalization, Identity } kind;
    std::string point;
    Elem alpha, beta, gamma;
    QmodZ lhs, rhs;
    std::string message() const;
};

/// Checks normalization and the 2-cocycle identity exhaustively over S x D^3;
/// returns the first violation found, scanning in deterministic order.
std::optional<CocycleViolation> validate_cocycle(const CocycleTable& c);

/// Scalar 2-cocycle on a subgroup, as a dense Q/Z exponent table.
struct ScalarCocycle {
    Subgroup domain;
    std::vector<std::vector<QmodZ>> table; // indexed by domain element indices

    QmodZ at(const Elem& a, const Elem& b) const {
        return table[domain.index_of(a)][domain.index_of(b)];
    }
    bool is_trivial() const;
    /// Same cocycle restricted to a subgroup of the domain.
    ScalarCocycle restricted(const Subgroup& h) const;
    /// First violation of the scalar cocycle identity, if any.
    std::optional<std::tuple<Elem, Elem, Elem>> check() const;
};

/// The scalar cocycle (a,b) -> exp(s,a,b) on the stabilizer D_W, at the
/// orbit representative s (fixed by D_W, so the identity closes on D_W).
ScalarCocycle restrict_to_stabilizer(const CocycleTable& c, const OrbitData& orbit);

/// Alternating bilinear commutator pairing val(a,b) = exp(a,b) - exp(b,a).
struct Bicharacter {
    Subgroup domain;
    std::vector<std::vector<QmodZ>> val;

    QmodZ at(const Elem& a, const Elem& b) const {
        return val[domain.index_of(a)][domain.index_of(b)];
    }
    bool is_bilinear_alternating() const;
};

Bicharacter bicharacter_of(const ScalarCocycle& c);

/// {a : val(a, x) = 0 for all x}, as a subgroup of the bicharacter's domain's
/// parent restricted to the domain elements.
Subgroup radical(const Bicharacter& b);

/// Coboundary witness mu with c(a,b) = mu(a) + mu(b) - mu(a+b), indexed by
/// domain element index.  Empty optional when the bicharacter of c does not
/// vanish (the witness cannot exist).
std::optional<std::vector<QmodZ>> trivialize_on_isotropic(const ScalarCocycle& c);

struct CohomologousResult {
    bool equivalent = false;
    // nu[elem idx][point idx]; satisfies (c1-c2)(s,a,b) = nu(a,s+b) + nu(b,s) - nu(a+b,s)
    std::vector<std::vector<QmodZ>> witness;
};

/// Decides whether c1 and c2 differ by a coboundary for the twisted action.
CohomologousResult cohomologous(const CocycleTable& c1, const CocycleTable& c2);

} // namespace scx
