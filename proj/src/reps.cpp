#include "scx/reps.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace scx {

CycMatrix cyc_identity(size_t n) {
    CycMatrix m(n, std::vector<Cyclotomic>(n, Cyclotomic(Rational(0))));
    for (size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic(1);
    return m;
}

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    CycMatrix out(n, std::vector<Cyclotomic>(m, Cyclotomic(Rational(0))));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j)
                if (!b[t][j].is_zero()) out[i][j] = out[i][j] + a[i][t] * b[t][j];
        }
    return out;
}

CycMatrix cyc_scale(const Cyclotomic& s, const CycMatrix& a) {
    CycMatrix out = a;
    for (auto& row : out)
        for (auto& v : row) v = v * s;
    return out;
}

bool cyc_eq(const CycMatrix& a, const CycMatrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    }
    return true;
}

std::vector<Cyclotomic> MatrixRep::trace_vector() const {
    std::vector<Cyclotomic> out;
    out.reserve(images.size());
    for (const auto& m : images) {
        Cyclotomic tr(Rational(0));
        for (size_t i = 0; i < m.size(); ++i) tr = tr + m[i][i];
        out.push_back(tr);
    }
    return out;
}

bool rep_respects(const StabilizerAlgebra& alg, const MatrixRep& r) {
    size_t n = alg.dim();
    if (r.images.size() != n) return false;
    const auto& dw = alg.domain();
    size_t zero = dw.index_of(dw.parent.zero());
    if (!cyc_eq(r.images[zero], cyc_identity(r.dimension))) return false;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            size_t ab = dw.index_of(dw.parent.add(dw.elements[a], dw.elements[b]));
            CycMatrix lhs = cyc_mul(r.images[a], r.images[b]);
            CycMatrix rhs = cyc_scale(Cyclotomic::root_of_unity(alg.product_exponent(a, b)),
                                      r.images[ab]);
            if (!cyc_eq(lhs, rhs)) return false;
        }
    return true;
}

namespace {

// all subgroups of the parent contained in dw, canonical order
std::vector<Subgroup> subgroups_within(const Subgroup& dw) {
    std::map<std::vector<Elem>, Subgroup> found;
    Subgroup triv = subgroup_from({}, dw.parent);
    found[triv.elements] = triv;
    std::vector<Subgroup> frontier{triv};
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& s : frontier)
            for (const auto& e : dw.elements) {
                if (s.contains(e)) continue;
                auto gens = s.generators;
                gens.push_back(e);
                Subgroup t = subgroup_from(gens, dw.parent);
                if (!found.count(t.elements)) {
                    found[t.elements] = t;
                    next.push_back(t);
                }
            }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (auto& [_, s] : found) out.push_back(s);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() > b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

// lexicographically least transversal of h inside dw
std::vector<Elem> transversal_within(const Subgroup& dw, const Subgroup& h) {
    std::vector<Elem> tau;
    std::set<Elem> assigned;
    for (const auto& e : dw.elements) {
        if (assigned.count(e)) continue;
        tau.push_back(e);
        for (const auto& x : h.elements) assigned.insert(dw.parent.add(e, x));
    }
    return tau;
}

// all |H| characters of h, as value vectors over h.elements, sorted
std::vector<std::vector<QmodZ>> characters_of(const Subgroup& h) {
    std::set<std::vector<QmodZ>> vals;
    for (const auto& chi : dual_group(h.parent)) {
        std::vector<QmodZ> v;
        v.reserve(h.elements.size());
        for (const auto& e : h.elements) v.push_back(chi.eval(e));
        vals.insert(std::move(v));
    }
    if (vals.size() != h.elements.size())
        throw ValidationError("internal: character restriction miscount");
    return {vals.begin(), vals.end()};
}

} // namespace

std::vector<MatrixRep> irreps_of_stabilizer_algebra(const StabilizerAlgebra& alg) {
    const Subgroup& dw = alg.domain();
    const auto& g = dw.parent;
    if (alg.c.check().has_value())
        throw ValidationError("invalid scalar cocycle on the stabilizer");

    Bicharacter bic = bicharacter_of(alg.c);
    Subgroup rad = radical(bic);

    // first isotropic subgroup above the radical in canonical order is a
    // maximal one, since the enumeration is sorted by order descending
    std::optional<Subgroup> iso;
    for (const auto& h : subgroups_within(dw)) {
        bool ok = std::all_of(rad.elements.begin(), rad.elements.end(),
                              [&](const Elem& r) { return h.contains(r); });
        for (size_t i = 0; ok && i < h.elements.size(); ++i)
            for (size_t j = 0; ok && j < h.elements.size(); ++j)
                if (!bic.at(h.elements[i], h.elements[j]).is_zero()) ok = false;
        if (ok) {
            iso = h;
            break;
        }
    }
    if (!iso) throw ValidationError("internal: no isotropic subgroup found");
    const Subgroup& h = *iso;
    if (h.elements.size() * h.elements.size() != rad.elements.size() * dw.elements.size())
        throw ValidationError("internal: isotropic subgroup is not maximal");

    auto mu = trivialize_on_isotropic(alg.c.restricted(h));
    if (!mu) throw ValidationError("internal: trivialization on the isotropic part failed");

    std::vector<Elem> tau = transversal_within(dw, h);
    size_t m = tau.size(); // [D_W : H] = induced dimension
    auto coset_of = [&](const Elem& e) -> size_t {
        for (size_t j = 0; j < m; ++j)
            if (h.contains(g.sub(e, tau[j]))) return j;
        throw ValidationError("internal: coset decomposition failed");
    };

    std::vector<MatrixRep> out;
    for (const auto& chi : characters_of(h)) {
        // one-dimensional rep of C^c[H]: sigma(u_x) = e(chi(x) - mu(x))
        MatrixRep r;
        r.dimension = m;
        for (size_t a = 0; a < dw.elements.size(); ++a) {
            const Elem& ga = dw.elements[a];
            CycMatrix img(m, std::vector<Cyclotomic>(m, Cyclotomic(Rational(0))));
            for (size_t i = 0; i < m; ++i) {
                Elem sum = g.add(ga, tau[i]);
                size_t j = coset_of(sum);
                Elem hx = g.sub(sum, tau[j]);
                size_t hi = h.index_of(hx);
                QmodZ expo = -alg.c.at(ga, tau[i]) + alg.c.at(tau[j], hx) + chi[hi] -
                             (*mu)[hi];
                img[j][i] = Cyclotomic::root_of_unity(expo);
            }
            r.images.push_back(std::move(img));
        }
        if (!rep_respects(alg, r))
            throw ValidationError("internal: induced rep fails the structure constants");
        bool dup = false;
        for (const auto& prev : out)
            if (equivalent(prev, r)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(r));
    }

    if (out.size() != rad.elements.size())
        throw ValidationError("internal: irrep count differs from the radical order");
    for (const auto& r : out)
        if (r.dimension * r.dimension * rad.elements.size() != dw.elements.size())
            throw ValidationError("internal: irrep dimension mismatch");
    return out;
}

bool equivalent(const MatrixRep& r1, const MatrixRep& r2) {
    if (r1.images.size() != r2.images.size()) return false;
    auto t1 = r1.trace_vector(), t2 = r2.trace_vector();
    for (size_t i = 0; i < t1.size(); ++i)
        if (!(t1[i] == t2[i])) return false;
    return true;
}

std::vector<size_t> GradedRep::block_coords(size_t block) const {
    std::vector<size_t> out(block_dim);
    for (size_t i = 0; i < block_dim; ++i) out[i] = block * block_dim + i;
    return out;
}

GradedRep ind_rep(const TwistedDouble& A, const OrbitData& orbit, const MatrixRep& U,
                  size_t member) {
    const auto& g = A.group();
    const auto& table = A.cocycle();
    if (member >= orbit.members.size()) throw ValidationError("orbit member out of range");
    size_t s_pt = table.point_index(orbit.members[member]);
    const auto& tau = orbit.orbit_space.transversal;
    size_t m = tau.size();
    size_t du = U.dimension;
    if (U.images.size() != orbit.stabilizer.elements.size())
        throw ValidationError("rep does not match the orbit stabilizer");

    GradedRep N;
    N.block_dim = du;
    N.block_of_point.assign(A.points(), -1);
    std::vector<size_t> point_of_block(m);
    for (size_t i = 0; i < m; ++i) {
        size_t t = table.act(g.index_of(tau[i]), s_pt);
        point_of_block[i] = t;
        N.block_of_point[t] = (long long)i;
    }

    size_t dim = m * du;
    N.rep.dimension = dim;
    N.rep.images.assign(A.dim(), CycMatrix(dim, std::vector<Cyclotomic>(dim, Cyclotomic(Rational(0)))));
    for (size_t ai = 0; ai < (size_t)g.order(); ++ai) {
        const Elem& alpha = g.element_at(ai);
        for (size_t i = 0; i < m; ++i) {
            size_t t = point_of_block[i];
            // e^alpha (x) q(t) maps block i to block j with scalar from the
            // transversal decomposition alpha + tau_i = tau_j + h
            Elem sum = g.add(alpha, tau[i]);
            size_t j = orbit.orbit_space.coset_index(sum);
            Elem hx = g.sub(sum, tau[j]);
            size_t hi = orbit.stabilizer.index_of(hx);
            QmodZ expo = -table.at(s_pt, ai, g.index_of(tau[i])) +
                         table.at(s_pt, g.index_of(tau[j]), g.index_of(hx));
            Cyclotomic sc = Cyclotomic::root_of_unity(expo);
            CycMatrix& img = N.rep.images[A.basis_index(ai, t)];
            for (size_t r = 0; r < du; ++r)
                for (size_t c = 0; c < du; ++c) {
                    const Cyclotomic& v = U.images[hi][r][c];
                    if (!v.is_zero()) img[j * du + r][i * du + c] = sc * v;
                }
        }
    }
    return N;
}

MatrixRep red_rep(const TwistedDouble& A, const OrbitData& orbit, const GradedRep& N,
                  size_t member) {
    const auto& g = A.group();
    if (member >= orbit.members.size()) throw ValidationError("orbit member out of range");
    size_t t = A.cocycle().point_index(orbit.members[member]);
    long long block = N.block_of_point[t];
    if (block < 0) throw ValidationError("graded rep has no component at that point");
    auto coords = N.block_coords((size_t)block);
    MatrixRep out;
    out.dimension = N.block_dim;
    for (const auto& a : orbit.stabilizer.elements) {
        const CycMatrix& full = N.rep.images[A.basis_index(g.index_of(a), t)];
        CycMatrix sub(N.block_dim, std::vector<Cyclotomic>(N.block_dim, Cyclotomic(Rational(0))));
        for (size_t r = 0; r < coords.size(); ++r)
            for (size_t c = 0; c < coords.size(); ++c) sub[r][c] = full[coords[r]][coords[c]];
        out.images.push_back(std::move(sub));
    }
    return out;
}

bool graded_rep_respects(const TwistedDouble& A, const GradedRep& N) {
    size_t d = A.dim();
    if (N.rep.images.size() != d) return false;
    // unit acts as identity
    CycMatrix u(N.rep.dimension, std::vector<Cyclotomic>(N.rep.dimension, Cyclotomic(Rational(0))));
    size_t zero = A.group().index_of(A.group().zero());
    for (size_t s = 0; s < A.points(); ++s) {
        const CycMatrix& img = N.rep.images[A.basis_index(zero, s)];
        for (size_t i = 0; i < u.size(); ++i)
            for (size_t j = 0; j < u.size(); ++j) u[i][j] = u[i][j] + img[i][j];
    }
    if (!cyc_eq(u, cyc_identity(N.rep.dimension))) return false;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            const auto& p = A.basis_product(i, j);
            CycMatrix lhs = cyc_mul(N.rep.images[i], N.rep.images[j]);
            if (!p.nonzero) {
                for (const auto& row : lhs)
                    for (const auto& v : row)
                        if (!v.is_zero()) return false;
                continue;
            }
            CycMatrix rhs =
                cyc_scale(Cyclotomic::root_of_unity(p.exponent), N.rep.images[p.result]);
            if (!cyc_eq(lhs, rhs)) return false;
        }
    return true;
}

} // namespace scx
