#pragma once

#include "scx/qmodz.hpp"

#include <vector>

namespace scx {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Elem = std::vector<long long>;
using IntMat = std::vector<std::vector<long long>>;

/// Configurable cap on group orders (spec default 512).
long long group_order_cap();
void set_group_order_cap(long long cap);

/// Z_{n1} x ... x Z_{nk} in invariant-factor coordinates; the empty list is
/// the trivial group.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<long long> invariants);

    const std::vector<long long>& invariants() const { return invariants_; }
    size_t rank() const { return invariants_.size(); }
    long long order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    Elem zero() const { return Elem(invariants_.size(), 0); }
    Elem reduce(Elem e) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    bool is_zero(const Elem& a) const;
    bool valid(const Elem& a) const;

    /// All elements in lexicographic order on coordinates.
    const std::vector<Elem>& elements() const { return elements_; }
    size_t index_of(const Elem& e) const;
    const Elem& element_at(size_t i) const { return elements_[i]; }

    bool operator==(const FiniteAbelianGroup& o) const { return invariants_ == o.invariants_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

    std::string str() const; // e.g. "Z2xZ4", "0" for trivial
    static std::string elem_str(const Elem& e);

private:
    std::vector<long long> invariants_;
    long long order_ = 1;
    std::vector<Elem> elements_;
};

/// Subgroup as an explicit, lexicographically sorted element set.
struct Subgroup {
    FiniteAbelianGroup parent;
    std::vector<Elem> elements;   // sorted, closed, contains 0
    std::vector<Elem> generators; // small generating set

    long long order() const { return (long long)elements.size(); }
    bool contains(const Elem& e) const;
    size_t index_of(const Elem& e) const;
    bool is_trivial() const { return elements.size() == 1; }
};

Subgroup subgroup_from(const std::vector<Elem>& generators, const FiniteAbelianGroup& parent);

/// Invariant factors of a subgroup as an abstract group (computed through
/// the duality H = dual(dual(parent)/ann(H))).
std::vector<long long> subgroup_invariants(const Subgroup& h);

/// Every subgroup of G, ordered by order descending then lexicographically on
/// the sorted element list.
std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g);

/// Coset decomposition of parent by a subgroup, with the quotient identified
/// as a group in invariant-factor coordinates via Smith normal form.
struct QuotientData {
    FiniteAbelianGroup parent;
    Subgroup sub;
    std::vector<std::vector<Elem>> cosets; // partition; coset 0 contains 0
    std::vector<Elem> transversal;         // lexicographically least element per coset
    FiniteAbelianGroup quotient_group;

    size_t coset_index(const Elem& e) const;
    /// Image of a parent element in quotient_group coordinates.
    Elem project(const Elem& e) const;
    /// Transversal representative of a quotient element.
    const Elem& lift(const Elem& q) const;

private:
    friend QuotientData quotient(const FiniteAbelianGroup&, const Subgroup&);
    IntMat proj_cols_;                   // change of basis from SNF
    std::vector<size_t> kept_;           // diagonal positions with d > 1
    std::vector<long long> kept_divs_;
    std::vector<size_t> coset_to_q_;     // coset index -> quotient element index
    std::vector<size_t> q_to_coset_;
};

QuotientData quotient(const FiniteAbelianGroup& parent, const Subgroup& sub);

/// Character of a finite abelian group, as a Q/Z exponent per invariant factor.
struct DualCharacter {
    FiniteAbelianGroup group;
    std::vector<QmodZ> exponents;

    QmodZ eval(const Elem& e) const;
    bool is_identity() const;
    long long order() const;
    bool operator==(const DualCharacter& o) const {
        return group == o.group && exponents == o.exponents;
    }
};

/// All |G| characters, ordered lexicographically on exponent vectors.
std::vector<DualCharacter> dual_group(const FiniteAbelianGroup& g);

/// Smith normal form: S = U * A * V with U, V unimodular and S diagonal with
/// a divisibility chain d1 | d2 | ...
struct SmithResult {
    IntMat S, U, V;
};
SmithResult smith_normal_form(IntMat a);

/// Solution set of A x = b (mod 1) for a rational vector x: a particular
/// solution plus kernel generators.  Torsion generators come with a finite
/// order m (multiples k/m of the direction solve the homogeneous system);
/// free directions admit an arbitrary Q/Z coefficient.
struct Mod1Solution {
    bool solvable = false;
    std::vector<QmodZ> particular;
    std::vector<std::pair<std::vector<QmodZ>, long long>> torsion; // (direction, order)
    std::vector<std::vector<long long>> free_dirs;
};

Mod1Solution solve_linear_mod1(const IntMat& a, const std::vector<QmodZ>& b);

} // namespace scx
