#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scx/reps.hpp"

#include <random>

using namespace scx;

namespace {

std::string data_path(const char* name) {
    return std::string(SCX_DATA_DIR) + "/" + name;
}

CocycleTable single_point_table(const FiniteAbelianGroup& g) {
    std::vector<std::vector<size_t>> pa((size_t)g.order(), std::vector<size_t>{0});
    return CocycleTable(g, {"s"}, std::move(pa));
}

CocycleTable pauli_cocycle() {
    FiniteAbelianGroup g({2, 2});
    CocycleTable c = single_point_table(g);
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            if (a[1] * b[0] % 2) c.set("s", a, b, QmodZ(1, 2));
    return c;
}

StabilizerAlgebra trivial_algebra(const FiniteAbelianGroup& g, std::vector<Elem> gens) {
    StabilizerAlgebra alg;
    alg.c.domain = subgroup_from(gens, g);
    size_t n = alg.c.domain.elements.size();
    alg.c.table.assign(n, std::vector<QmodZ>(n));
    return alg;
}

// dimension of {M : rho(b) M = M rho(b) for all b}, by Gaussian elimination
// over the cyclotomic field
size_t commutant_dim(const std::vector<CycMatrix>& images, size_t d) {
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& rho : images)
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                // entry (i,j) of rho*M - M*rho, M_{k,l} flattened as k*d+l
                std::vector<Cyclotomic> row(d * d, Cyclotomic(Rational(0)));
                for (size_t k = 0; k < d; ++k) {
                    row[k * d + j] = row[k * d + j] + rho[i][k];
                    row[i * d + k] = row[i * d + k] - rho[k][j];
                }
                rows.push_back(std::move(row));
            }
    size_t rank = 0, cols = d * d;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t pivot = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Cyclotomic inv = rows[rank][col].inverse();
        for (auto& v : rows[rank]) v = v * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Cyclotomic f = rows[r][col];
            for (size_t cc = col; cc < cols; ++cc)
                rows[r][cc] = rows[r][cc] - f * rows[rank][cc];
        }
        ++rank;
    }
    return d * d - rank;
}

} // namespace

TEST_CASE("trivial cocycle on Z3 gives the three characters") {
    FiniteAbelianGroup z3({3});
    StabilizerAlgebra alg = trivial_algebra(z3, {{1}});
    auto reps = irreps_of_stabilizer_algebra(alg);
    REQUIRE(reps.size() == 3);
    for (const auto& r : reps) {
        CHECK(r.dimension == 1);
        CHECK(rep_respects(alg, r));
    }
    // distinct characters are inequivalent
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(equivalent(reps[i], reps[j]) == (i == j));
}

TEST_CASE("trivial group has one trivial rep") {
    FiniteAbelianGroup g({2});
    StabilizerAlgebra alg = trivial_algebra(g, {});
    auto reps = irreps_of_stabilizer_algebra(alg);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].dimension == 1);
    CHECK(reps[0].images[0][0][0] == Cyclotomic(1));
}

TEST_CASE("pauli cocycle has a single 2-dimensional irrep") {
    FusionDatum pauli = FusionDatum::parse_file(data_path("pauli.json"));
    StabilizerAlgebra alg{restrict_to_stabilizer(pauli.cocycle(), pauli.orbit_of("W"))};
    auto reps = irreps_of_stabilizer_algebra(alg);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].dimension == 2);
    CHECK(rep_respects(alg, reps[0]));
    CHECK(commutant_dim(reps[0].images, 2) == 1);
    // trace vector: 2 at the identity, 0 elsewhere
    auto tr = reps[0].trace_vector();
    size_t zero = alg.domain().index_of(alg.domain().parent.zero());
    for (size_t i = 0; i < tr.size(); ++i) {
        if (i == zero)
            CHECK(tr[i] == Cyclotomic(2));
        else
            CHECK(tr[i].is_zero());
    }
}

TEST_CASE("count and dimension laws across all bundled orbits") {
    for (auto name : {"3A.json", "pauli.json", "ising-like.json"}) {
        FusionDatum d = FusionDatum::parse_file(data_path(name));
        TwistedDouble A = TwistedDouble::build(d.cocycle());
        for (const auto& o : d.orbits()) {
            StabilizerAlgebra alg{restrict_to_stabilizer(d.cocycle(), o)};
            auto reps = irreps_of_stabilizer_algebra(alg);
            long long zdim = A.center_dimension_of_stabilizer_algebra(o);
            CHECK((long long)reps.size() == zdim);
            long long sum = 0;
            for (const auto& r : reps) {
                CHECK(rep_respects(alg, r));
                CHECK(commutant_dim(r.images, r.dimension) == 1);
                sum += (long long)(r.dimension * r.dimension);
            }
            CHECK(sum == o.stabilizer.order());
        }
    }
}

TEST_CASE("ind_rep basic shapes") {
    // free Z2 orbit, trivial 1-dim U: 2-dim graded rep, one dim per point
    FusionDatum ising = FusionDatum::parse_file(data_path("ising-like.json"));
    TwistedDouble A = TwistedDouble::build(ising.cocycle());
    OrbitData vac = ising.orbit_of("M-vac");
    StabilizerAlgebra alg{restrict_to_stabilizer(ising.cocycle(), vac)};
    auto us = irreps_of_stabilizer_algebra(alg);
    REQUIRE(us.size() == 1);
    GradedRep N = ind_rep(A, vac, us[0]);
    CHECK(N.rep.dimension == 2);
    CHECK(N.block_dim == 1);
    CHECK(graded_rep_respects(A, N));

    // pauli: single point, 2-dim irrep induces to dimension 2
    FusionDatum pauli = FusionDatum::parse_file(data_path("pauli.json"));
    TwistedDouble Ap = TwistedDouble::build(pauli.cocycle());
    OrbitData w = pauli.orbit_of("W");
    StabilizerAlgebra algw{restrict_to_stabilizer(pauli.cocycle(), w)};
    auto uw = irreps_of_stabilizer_algebra(algw);
    GradedRep Nw = ind_rep(Ap, w, uw[0]);
    CHECK(Nw.rep.dimension == 2);
    CHECK(Nw.block_dim == 2);
    CHECK(graded_rep_respects(Ap, Nw));

    // Z3 free orbit: 3-dim with one dimension per coset
    FusionDatum a3 = FusionDatum::parse_file(data_path("3A.json"));
    TwistedDouble A3 = TwistedDouble::build(a3.cocycle());
    OrbitData ov = a3.orbit_of("W(0)N(0)");
    StabilizerAlgebra alg3{restrict_to_stabilizer(a3.cocycle(), ov)};
    auto u3 = irreps_of_stabilizer_algebra(alg3);
    REQUIRE(u3.size() == 1);
    GradedRep N3 = ind_rep(A3, ov, u3[0]);
    CHECK(N3.rep.dimension == 3);
    CHECK(N3.block_dim == 1);
    CHECK(graded_rep_respects(A3, N3));
    CHECK(commutant_dim(N3.rep.images, 3) == 1);
}

TEST_CASE("red after ind is the original rep, across all bundled orbits") {
    for (auto name : {"3A.json", "pauli.json", "ising-like.json"}) {
        FusionDatum d = FusionDatum::parse_file(data_path(name));
        TwistedDouble A = TwistedDouble::build(d.cocycle());
        for (const auto& o : d.orbits()) {
            StabilizerAlgebra alg{restrict_to_stabilizer(d.cocycle(), o)};
            for (const auto& u : irreps_of_stabilizer_algebra(alg)) {
                GradedRep N = ind_rep(A, o, u);
                CHECK(graded_rep_respects(A, N));
                MatrixRep back = red_rep(A, o, N, 0);
                CHECK(equivalent(back, u));
                for (size_t i = 0; i < u.images.size(); ++i)
                    CHECK(cyc_eq(back.images[i], u.images[i]));
            }
        }
    }
}

TEST_CASE("red at the other point of a free orbit is a valid shifted rep") {
    FusionDatum ising = FusionDatum::parse_file(data_path("ising-like.json"));
    TwistedDouble A = TwistedDouble::build(ising.cocycle());
    OrbitData o = ising.orbit_of("M-sigma");
    StabilizerAlgebra alg{restrict_to_stabilizer(ising.cocycle(), o)};
    auto us = irreps_of_stabilizer_algebra(alg);
    GradedRep N = ind_rep(A, o, us[0]);
    MatrixRep other = red_rep(A, o, N, 1);
    CHECK(other.dimension == 1);
    // the stabilizer is trivial, so the shifted algebra is trivial too
    CHECK(other.images.size() == 1);
    CHECK(other.images[0][0][0] == Cyclotomic(1));
    CHECK_THROWS_AS(red_rep(A, o, N, 5), ValidationError);
}

TEST_CASE("equivalence is invariant under conjugation") {
    FusionDatum pauli = FusionDatum::parse_file(data_path("pauli.json"));
    StabilizerAlgebra alg{restrict_to_stabilizer(pauli.cocycle(), pauli.orbit_of("W"))};
    MatrixRep r = irreps_of_stabilizer_algebra(alg)[0];
    CHECK(equivalent(r, r));

    std::mt19937 rng(5150);
    for (int it = 0; it < 10; ++it) {
        // conjugate by a random monomial matrix P*D
        size_t d = r.dimension;
        std::vector<size_t> perm{0, 1};
        if (rng() % 2) std::swap(perm[0], perm[1]);
        std::vector<QmodZ> phase(d);
        for (auto& p : phase) p = QmodZ((long long)(rng() % 8), 8);
        CycMatrix M(d, std::vector<Cyclotomic>(d, Cyclotomic(Rational(0))));
        CycMatrix Minv(d, std::vector<Cyclotomic>(d, Cyclotomic(Rational(0))));
        for (size_t i = 0; i < d; ++i) {
            M[perm[i]][i] = Cyclotomic::root_of_unity(phase[i]);
            Minv[i][perm[i]] = Cyclotomic::root_of_unity(-phase[i]);
        }
        MatrixRep conj;
        conj.dimension = d;
        for (const auto& img : r.images) conj.images.push_back(cyc_mul(M, cyc_mul(img, Minv)));
        CHECK(rep_respects(alg, conj));
        CHECK(equivalent(r, conj));
    }
}
