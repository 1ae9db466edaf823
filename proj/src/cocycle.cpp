#include "scx/cocycle.hpp"

#include "scx/datum.hpp"

#include <algorithm>

namespace scx {

CocycleTable::CocycleTable(FiniteAbelianGroup group, std::vector<std::string> points,
                           std::vector<std::vector<size_t>> point_action)
    : group_(std::move(group)), points_(std::move(points)),
      point_action_(std::move(point_action)) {
    if (point_action_.size() != (size_t)group_.order())
        throw ValidationError("point action needs one permutation per group element");
    for (const auto& row : point_action_) {
        if (row.size() != points_.size())
            throw ValidationError("point action row has wrong length");
        for (size_t p : row)
            if (p >= points_.size()) throw ValidationError("point action index out of range");
    }
}

size_t CocycleTable::point_index(const std::string& p) const {
    auto it = std::find(points_.begin(), points_.end(), p);
    if (it == points_.end()) throw ValidationError("unknown point \"" + p + "\"");
    return (size_t)(it - points_.begin());
}

void CocycleTable::set(const std::string& point, const Elem& a, const Elem& b, const QmodZ& v) {
    auto key = std::make_tuple(point_index(point), group_.index_of(group_.reduce(a)),
                               group_.index_of(group_.reduce(b)));
    if (v.is_zero())
        entries_.erase(key);
    else
        entries_[key] = v;
}

QmodZ CocycleTable::at(size_t point_idx, size_t a_idx, size_t b_idx) const {
    auto it = entries_.find(std::make_tuple(point_idx, a_idx, b_idx));
    return it == entries_.end() ? QmodZ() : it->second;
}

QmodZ CocycleTable::at(const std::string& point, const Elem& a, const Elem& b) const {
    return at(point_index(point), group_.index_of(group_.reduce(a)),
              group_.index_of(group_.reduce(b)));
}

std::string CocycleViolation::message() const {
    std::string head = kind == Kind::Normalization ? "normalization fails" : "cocycle identity fails";
    return head + " at s=\"" + point + "\", alpha=" + FiniteAbelianGroup::elem_str(alpha) +
           ", beta=" + FiniteAbelianGroup::elem_str(beta) +
           ", gamma=" + FiniteAbelianGroup::elem_str(gamma) + ": lhs=" + lhs.str() +
           ", rhs=" + rhs.str();
}

std::optional<CocycleViolation> validate_cocycle(const CocycleTable& c) {
    const auto& g = c.group();
    size_t ns = c.points().size();
    size_t ng = (size_t)g.order();
    size_t zero = g.index_of(g.zero());
    for (size_t s = 0; s < ns; ++s)
        for (size_t a = 0; a < ng; ++a) {
            for (auto [x, y] : {std::pair{zero, a}, std::pair{a, zero}}) {
                QmodZ v = c.at(s, x, y);
                if (!v.is_zero())
                    return CocycleViolation{CocycleViolation::Kind::Normalization, c.points()[s],
                                            g.element_at(x), g.element_at(y), g.zero(), v,
                                            QmodZ()};
            }
        }
    for (size_t s = 0; s < ns; ++s)
        for (size_t a = 0; a < ng; ++a)
            for (size_t b = 0; b < ng; ++b) {
                size_t ab = g.index_of(g.add(g.element_at(a), g.element_at(b)));
                for (size_t gm = 0; gm < ng; ++gm) {
                    size_t bg = g.index_of(g.add(g.element_at(b), g.element_at(gm)));
                    QmodZ lhs = c.at(c.act(gm, s), a, b) + c.at(s, ab, gm);
                    QmodZ rhs = c.at(s, a, bg) + c.at(s, b, gm);
                    if (lhs != rhs)
                        return CocycleViolation{CocycleViolation::Kind::Identity, c.points()[s],
                                                g.element_at(a), g.element_at(b),
                                                g.element_at(gm), lhs, rhs};
                }
            }
    return std::nullopt;
}

bool ScalarCocycle::is_trivial() const {
    for (const auto& row : table)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

ScalarCocycle ScalarCocycle::restricted(const Subgroup& h) const {
    ScalarCocycle out;
    out.domain = h;
    out.table.resize(h.elements.size(), std::vector<QmodZ>(h.elements.size()));
    for (size_t i = 0; i < h.elements.size(); ++i)
        for (size_t j = 0; j < h.elements.size(); ++j)
            out.table[i][j] = at(h.elements[i], h.elements[j]);
    return out;
}

std::optional<std::tuple<Elem, Elem, Elem>> ScalarCocycle::check() const {
    const auto& g = domain.parent;
    for (const auto& a : domain.elements)
        for (const auto& b : domain.elements)
            for (const auto& c : domain.elements) {
                QmodZ lhs = at(a, b) + at(g.add(a, b), c);
                QmodZ rhs = at(a, g.add(b, c)) + at(b, c);
                if (lhs != rhs) return std::make_tuple(a, b, c);
            }
    return std::nullopt;
}

ScalarCocycle restrict_to_stabilizer(const CocycleTable& c, const OrbitData& orbit) {
    size_t s = c.point_index(orbit.representative);
    ScalarCocycle out;
    out.domain = orbit.stabilizer;
    size_t n = orbit.stabilizer.elements.size();
    out.table.resize(n, std::vector<QmodZ>(n));
    const auto& g = c.group();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out.table[i][j] = c.at(s, g.index_of(orbit.stabilizer.elements[i]),
                                   g.index_of(orbit.stabilizer.elements[j]));
    return out;
}

Bicharacter bicharacter_of(const ScalarCocycle& c) {
    Bicharacter b;
    b.domain = c.domain;
    size_t n = c.domain.elements.size();
    b.val.resize(n, std::vector<QmodZ>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) b.val[i][j] = c.table[i][j] - c.table[j][i];
    return b;
}

bool Bicharacter::is_bilinear_alternating() const {
    const auto& g = domain.parent;
    for (const auto& a : domain.elements) {
        if (!at(a, a).is_zero()) return false;
        for (const auto& b : domain.elements)
            for (const auto& x : domain.elements)
                if (at(g.add(a, b), x) != at(a, x) + at(b, x)) return false;
    }
    return true;
}

Subgroup radical(const Bicharacter& b) {
    std::vector<Elem> rad;
    for (size_t i = 0; i < b.domain.elements.size(); ++i) {
        bool in = true;
        for (size_t j = 0; in && j < b.domain.elements.size(); ++j)
            if (!b.val[i][j].is_zero()) in = false;
        if (in) rad.push_back(b.domain.elements[i]);
    }
    return subgroup_from(rad, b.domain.parent);
}

std::optional<std::vector<QmodZ>> trivialize_on_isotropic(const ScalarCocycle& c) {
    size_t n = c.domain.elements.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (c.table[i][j] != c.table[j][i]) return std::nullopt;
    const auto& g = c.domain.parent;
    IntMat a;
    std::vector<QmodZ> rhs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<long long> row(n, 0);
            row[i] += 1;
            row[j] += 1;
            row[c.domain.index_of(g.add(c.domain.elements[i], c.domain.elements[j]))] -= 1;
            a.push_back(std::move(row));
            rhs.push_back(c.table[i][j]);
        }
    Mod1Solution sol = solve_linear_mod1(a, rhs);
    if (!sol.solvable) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t ij = c.domain.index_of(g.add(c.domain.elements[i], c.domain.elements[j]));
            if (sol.particular[i] + sol.particular[j] - sol.particular[ij] != c.table[i][j])
                throw ValidationError("internal: coboundary witness fails verification");
        }
    return sol.particular;
}

CohomologousResult cohomologous(const CocycleTable& c1, const CocycleTable& c2) {
    if (c1.group() != c2.group() || c1.points() != c2.points())
        throw ValidationError("cocycle tables live on different (D, S)");
    const auto& g = c1.group();
    size_t ns = c1.points().size();
    size_t ng = (size_t)g.order();
    // unknowns nu(alpha, s), flattened
    auto u = [&](size_t a, size_t s) { return a * ns + s; };
    IntMat mat;
    std::vector<QmodZ> rhs;
    for (size_t s = 0; s < ns; ++s)
        for (size_t a = 0; a < ng; ++a)
            for (size_t b = 0; b < ng; ++b) {
                size_t ab = g.index_of(g.add(g.element_at(a), g.element_at(b)));
                std::vector<long long> row(ng * ns, 0);
                row[u(a, c1.act(b, s))] += 1;
                row[u(b, s)] += 1;
                row[u(ab, s)] -= 1;
                mat.push_back(std::move(row));
                rhs.push_back(c1.at(s, a, b) - c2.at(s, a, b));
            }
    Mod1Solution sol = solve_linear_mod1(mat, rhs);
    CohomologousResult res;
    res.equivalent = sol.solvable;
    if (sol.solvable) {
        res.witness.resize(ng, std::vector<QmodZ>(ns));
        for (size_t a = 0; a < ng; ++a)
            for (size_t s = 0; s < ns; ++s) res.witness[a][s] = sol.particular[u(a, s)];
        for (size_t s = 0; s < ns; ++s)
            for (size_t a = 0; a < ng; ++a)
                for (size_t b = 0; b < ng; ++b) {
                    size_t ab = g.index_of(g.add(g.element_at(a), g.element_at(b)));
                    QmodZ lhs = res.witness[a][c1.act(b, s)] + res.witness[b][s] -
                                res.witness[ab][s];
                    if (lhs != c1.at(s, a, b) - c2.at(s, a, b))
                        throw ValidationError("internal: cohomology witness fails verification");
                }
    }
    return res;
}

} // namespace scx
