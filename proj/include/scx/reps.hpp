#pragma once

#include "scx/datum.hpp"
#include "scx/twisted_double.hpp"

namespace scx {

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

CycMatrix cyc_identity(size_t n);
CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b);
CycMatrix cyc_scale(const Cyclotomic& s, const CycMatrix& a);
bool cyc_eq(const CycMatrix& a, const CycMatrix& b);

/// The twisted group algebra C^{lambda_s}[D_W], with basis u_a for a in the
/// stabilizer and u_a u_b = e^{-2 pi i c(a,b)} u_{a+b}.
struct StabilizerAlgebra {
    ScalarCocycle c; // domain = D_W

    size_t dim() const { return c.domain.elements.size(); }
    const Subgroup& domain() const { return c.domain; }
    /// Exponent of the structure scalar of u_a * u_b.
    QmodZ product_exponent(size_t a_idx, size_t b_idx) const {
        return -c.table[a_idx][b_idx];
    }
};

/// Matrix representation: one image per basis symbol of the algebra it
/// represents (stabilizer-algebra basis order, or the flat basis of a
/// TwistedDouble).
struct MatrixRep {
    size_t dimension = 0;
    std::vector<CycMatrix> images;

    std::vector<Cyclotomic> trace_vector() const;
};

/// true iff rho(u_a) rho(u_b) = scalar(a,b) rho(u_{a+b}) on all pairs and
/// rho(u_0) = 1.
bool rep_respects(const StabilizerAlgebra& alg, const MatrixRep& r);

/// Complete irredundant list of irreducibles, via a maximal isotropic
/// subgroup above the bicharacter radical, coboundary trivialization, and
/// monomial induction.  Deterministic; length |radical|, all dimensions
/// sqrt([D_W : radical]).
std::vector<MatrixRep> irreps_of_stabilizer_algebra(const StabilizerAlgebra& alg);

/// Trace-vector equality (valid for semisimple algebras).
bool equivalent(const MatrixRep& r1, const MatrixRep& r2);

/// A TwistedDouble representation with its grading: coordinates are grouped
/// into blocks, one per orbit point, block i = image of e^0 (x) q(member i).
struct GradedRep {
    MatrixRep rep;                        // images indexed by the double's flat basis
    std::vector<long long> block_of_point; // per double point index, -1 if absent
    size_t block_dim = 0;

    std::vector<size_t> block_coords(size_t block) const;
};

/// Induced module (e^tau (x) q(s)) (x) U over the transversal of D_W in D,
/// based at orbit member `member` (default: the representative).
GradedRep ind_rep(const TwistedDouble& A, const OrbitData& orbit, const MatrixRep& U,
                  size_t member = 0);

/// Restriction of a graded rep to the block of orbit member `member`, as a
/// representation of C^{lambda_t}[D_W].
MatrixRep red_rep(const TwistedDouble& A, const OrbitData& orbit, const GradedRep& N,
                  size_t member);

/// true iff rho(x) rho(y) = rho(x*y) on all basis pairs of A and
/// rho(unit) = 1.
bool graded_rep_respects(const TwistedDouble& A, const GradedRep& N);

} // namespace scx
