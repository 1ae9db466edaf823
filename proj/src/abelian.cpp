#include "scx/abelian.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

namespace scx {

namespace {
std::atomic<long long> g_order_cap{512};
}

long long group_order_cap() { return g_order_cap.load(); }
void set_group_order_cap(long long cap) { g_order_cap.store(cap); }

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> invariants)
    : invariants_(std::move(invariants)) {
    for (long long n : invariants_) {
        if (n < 2) throw ValidationError("group invariant factors must be >= 2");
        order_ = checked_mul(order_, n);
    }
    if (order_ > group_order_cap())
        throw ValidationError("group order " + std::to_string(order_) +
                              " exceeds the configured cap of " +
                              std::to_string(group_order_cap()));
    // lexicographic enumeration
    Elem cur = zero();
    elements_.reserve(order_);
    for (long long i = 0; i < order_; ++i) {
        elements_.push_back(cur);
        for (long long j = (long long)invariants_.size() - 1; j >= 0; --j) {
            if (++cur[j] < invariants_[j]) break;
            cur[j] = 0;
        }
    }
}

Elem FiniteAbelianGroup::reduce(Elem e) const {
    if (e.size() != invariants_.size())
        throw ValidationError("group element has wrong number of coordinates");
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] %= invariants_[i];
        if (e[i] < 0) e[i] += invariants_[i];
    }
    return e;
}

Elem FiniteAbelianGroup::add(const Elem& a, const Elem& b) const {
    Elem r(invariants_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % invariants_[i];
    return r;
}

Elem FiniteAbelianGroup::neg(const Elem& a) const {
    Elem r(invariants_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (invariants_[i] - a[i]) % invariants_[i];
    return r;
}

bool FiniteAbelianGroup::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
}

bool FiniteAbelianGroup::valid(const Elem& a) const {
    if (a.size() != invariants_.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= invariants_[i]) return false;
    return true;
}

size_t FiniteAbelianGroup::index_of(const Elem& e) const {
    size_t idx = 0;
    for (size_t i = 0; i < invariants_.size(); ++i) {
        if (e[i] < 0 || e[i] >= invariants_[i])
            throw ValidationError("coordinate out of range in " + elem_str(e));
        idx = idx * invariants_[i] + e[i];
    }
    return idx;
}

std::string FiniteAbelianGroup::str() const {
    if (invariants_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < invariants_.size(); ++i) {
        if (i) out += "x";
        out += "Z" + std::to_string(invariants_[i]);
    }
    return out;
}

std::string FiniteAbelianGroup::elem_str(const Elem& e) {
    std::string out = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + ")";
}

bool Subgroup::contains(const Elem& e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

size_t Subgroup::index_of(const Elem& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || *it != e)
        throw ValidationError("element " + FiniteAbelianGroup::elem_str(e) + " not in subgroup");
    return (size_t)(it - elements.begin());
}

namespace {

std::set<Elem> closure(const std::vector<Elem>& gens, const FiniteAbelianGroup& g) {
    std::set<Elem> elems{g.zero()};
    std::vector<Elem> frontier{g.zero()};
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const auto& e : frontier) {
            for (const auto& gen : gens) {
                Elem s = g.add(e, gen);
                if (elems.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    return elems;
}

} // namespace

Subgroup subgroup_from(const std::vector<Elem>& generators, const FiniteAbelianGroup& parent) {
    for (const auto& e : generators)
        if (!parent.valid(e))
            throw ValidationError("generator " + FiniteAbelianGroup::elem_str(e) +
                                  " has a coordinate out of range");
    auto elems = closure(generators, parent);
    Subgroup s;
    s.parent = parent;
    s.elements.assign(elems.begin(), elems.end());

    // greedy deterministic small generating set
    std::set<Elem> covered{parent.zero()};
    while (covered.size() < s.elements.size()) {
        Elem best;
        size_t best_size = 0;
        for (const auto& cand : s.elements) {
            if (covered.count(cand)) continue;
            auto gens2 = s.generators;
            gens2.push_back(cand);
            size_t sz = closure(gens2, parent).size();
            if (sz > best_size) {
                best_size = sz;
                best = cand;
            }
        }
        s.generators.push_back(best);
        covered = closure(s.generators, parent);
    }
    return s;
}

std::vector<long long> subgroup_invariants(const Subgroup& h) {
    const auto& g = h.parent;
    // annihilator of h under the self-duality pairing <a,w> = sum a_i w_i / n_i
    std::vector<Elem> ann;
    for (const auto& a : g.elements()) {
        bool ok = true;
        for (const auto& w : h.elements) {
            QmodZ pair;
            for (size_t i = 0; i < g.rank(); ++i)
                pair = pair + QmodZ(a[i] * w[i], g.invariants()[i]);
            if (!pair.is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) ann.push_back(a);
    }
    QuotientData q = quotient(g, subgroup_from(ann, g));
    return q.quotient_group.invariants();
}

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g) {
    std::map<std::vector<Elem>, Subgroup> found;
    Subgroup triv = subgroup_from({}, g);
    found[triv.elements] = triv;
    std::vector<Subgroup> frontier{triv};
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& s : frontier) {
            for (const auto& e : g.elements()) {
                if (s.contains(e)) continue;
                auto gens = s.generators;
                gens.push_back(e);
                Subgroup t = subgroup_from(gens, g);
                if (!found.count(t.elements)) {
                    found[t.elements] = t;
                    next.push_back(t);
                }
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

size_t QuotientData::coset_index(const Elem& e) const {
    Elem r = parent.reduce(e);
    for (size_t i = 0; i < cosets.size(); ++i)
        if (std::binary_search(cosets[i].begin(), cosets[i].end(), r)) return i;
    throw ValidationError("element not in any coset");
}

Elem QuotientData::project(const Elem& e) const {
    size_t k = parent.rank();
    Elem w(kept_.size(), 0);
    for (size_t j = 0; j < kept_.size(); ++j) {
        long long acc = 0;
        for (size_t i = 0; i < k; ++i)
            acc = checked_add(acc, checked_mul(e[i], proj_cols_[i][kept_[j]]));
        long long d = kept_divs_[j];
        acc %= d;
        if (acc < 0) acc += d;
        w[j] = acc;
    }
    return w;
}

const Elem& QuotientData::lift(const Elem& q) const {
    return transversal[q_to_coset_[quotient_group.index_of(q)]];
}

QuotientData quotient(const FiniteAbelianGroup& parent, const Subgroup& sub) {
    if (sub.parent != parent) throw ValidationError("subgroup belongs to a different group");
    for (const auto& e : sub.elements)
        if (!parent.valid(e)) throw ValidationError("subgroup element out of range");

    QuotientData q;
    q.parent = parent;
    q.sub = sub;

    // cosets, scanning elements in lexicographic order
    std::set<Elem> assigned;
    for (const auto& e : parent.elements()) {
        if (assigned.count(e)) continue;
        std::vector<Elem> coset;
        for (const auto& h : sub.elements) coset.push_back(parent.add(e, h));
        std::sort(coset.begin(), coset.end());
        for (const auto& m : coset) assigned.insert(m);
        q.transversal.push_back(coset.front());
        q.cosets.push_back(std::move(coset));
    }

    // quotient invariants: Z^k modulo the lattice spanned by diag(n) and
    // lifts of the subgroup generators
    size_t k = parent.rank();
    IntMat rows;
    for (size_t i = 0; i < k; ++i) {
        std::vector<long long> r(k, 0);
        r[i] = parent.invariants()[i];
        rows.push_back(r);
    }
    for (const auto& g : sub.generators) rows.push_back(g);
    if (k == 0) {
        q.quotient_group = FiniteAbelianGroup(std::vector<long long>{});
        q.coset_to_q_ = {0};
        q.q_to_coset_ = {0};
        return q;
    }
    SmithResult snf = smith_normal_form(rows);
    std::vector<long long> invs;
    for (size_t j = 0; j < k; ++j) {
        long long d = snf.S[j][j];
        if (d < 0) d = -d;
        if (d > 1) {
            q.kept_.push_back(j);
            q.kept_divs_.push_back(d);
            invs.push_back(d);
        }
    }
    q.proj_cols_ = snf.V;
    q.quotient_group = FiniteAbelianGroup(invs);

    q.coset_to_q_.resize(q.cosets.size());
    q.q_to_coset_.resize(q.cosets.size());
    if (q.cosets.size() != (size_t)q.quotient_group.order())
        throw ValidationError("internal: quotient order mismatch");
    for (size_t i = 0; i < q.transversal.size(); ++i) {
        size_t qi = q.quotient_group.index_of(q.project(q.transversal[i]));
        q.coset_to_q_[i] = qi;
        q.q_to_coset_[qi] = i;
    }
    return q;
}

QmodZ DualCharacter::eval(const Elem& e) const {
    QmodZ acc;
    for (size_t i = 0; i < exponents.size(); ++i) acc = acc + exponents[i] * e[i];
    return acc;
}

bool DualCharacter::is_identity() const {
    return std::all_of(exponents.begin(), exponents.end(),
                       [](const QmodZ& q) { return q.is_zero(); });
}

long long DualCharacter::order() const {
    long long m = 1;
    for (const auto& e : exponents) m = lcm_ll(m, e.den());
    return m;
}

std::vector<DualCharacter> dual_group(const FiniteAbelianGroup& g) {
    std::vector<DualCharacter> out;
    out.reserve(g.order());
    for (const auto& e : g.elements()) {
        DualCharacter c;
        c.group = g;
        for (size_t i = 0; i < g.rank(); ++i)
            c.exponents.push_back(QmodZ(e[i], g.invariants()[i]));
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace scx
