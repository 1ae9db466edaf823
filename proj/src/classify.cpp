#include "scx/classify.hpp"

#include <algorithm>
#include <map>

namespace scx {

ChiInconsistent::ChiInconsistent(std::string orbit_, Elem alpha_, std::string s_,
                                 std::string s_prime_, QmodZ at_s, QmodZ at_s_prime)
    : ValidationError("chi is inconsistent on the orbit of \"" + orbit_ + "\": alpha=" +
                      FiniteAbelianGroup::elem_str(alpha_) + " gives " + at_s.str() +
                      " at s=\"" + s_ + "\" but " + at_s_prime.str() + " at s'=\"" + s_prime_ +
                      "\""),
      orbit(std::move(orbit_)), alpha(std::move(alpha_)), s(std::move(s_)),
      s_prime(std::move(s_prime_)), value_at_s(at_s), value_at_s_prime(at_s_prime) {}

ChiNotAdditive::ChiNotAdditive(std::string orbit_, Elem alpha_, Elem beta_)
    : ValidationError("chi is not additive on the orbit of \"" + orbit_ + "\" at alpha=" +
                      FiniteAbelianGroup::elem_str(alpha_) + ", beta=" +
                      FiniteAbelianGroup::elem_str(beta_)),
      orbit(std::move(orbit_)), alpha(std::move(alpha_)), beta(std::move(beta_)) {}

ChiCharacter compute_chi(const FusionDatum& datum, const OrbitData& orbit) {
    const auto& g = datum.group();
    ChiCharacter chi;
    chi.orbit_rep = orbit.representative;
    chi.group = g;
    Rational h0 = datum.weight(orbit.representative);
    for (const auto& a : g.elements())
        chi.values.push_back(QmodZ(datum.weight(datum.act(a, orbit.representative)) - h0));
    // base-point independence along the whole orbit (Lemma "key" (i))
    for (const auto& s : orbit.members) {
        Rational hs = datum.weight(s);
        for (const auto& a : g.elements()) {
            QmodZ v(datum.weight(datum.act(a, s)) - hs);
            const QmodZ& ref = chi.at(a);
            if (v != ref)
                throw ChiInconsistent(orbit.representative, a, orbit.representative, s, ref, v);
        }
    }
    // additivity (Lemma "key" (ii))
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            if (chi.at(g.add(a, b)) != chi.at(a) + chi.at(b))
                throw ChiNotAdditive(orbit.representative, a, b);
    return chi;
}

TwistSector twist_of(const FusionDatum& datum, const ChiCharacter& chi) {
    const auto& g = datum.group();
    TwistSector t;
    t.sigma_hat.group = g;
    for (size_t i = 0; i < g.rank(); ++i) {
        Elem gen = g.zero();
        gen[i] = 1;
        t.sigma_hat.exponents.push_back(-chi.at(gen));
    }
    t.order = t.sigma_hat.order();
    std::map<QmodZ, std::vector<Elem>> sectors;
    for (const auto& a : g.elements()) {
        QmodZ v = t.sigma_hat.eval(a);
        if (v != -chi.at(a))
            throw ValidationError("internal: sigma_hat disagrees with chi at " +
                                  FiniteAbelianGroup::elem_str(a));
        sectors[v].push_back(a);
    }
    t.sectors.assign(sectors.begin(), sectors.end());
    return t;
}

std::vector<ModuleDescriptor> classify_orbit(const FusionDatum& datum, const OrbitData& orbit) {
    ChiCharacter chi = compute_chi(datum, orbit);
    TwistSector twist = twist_of(datum, chi);

    TwistedDouble A = TwistedDouble::build(datum.cocycle());
    StabilizerAlgebra alg{restrict_to_stabilizer(datum.cocycle(), orbit)};
    std::vector<MatrixRep> irreps = irreps_of_stabilizer_algebra(alg);
    if ((long long)irreps.size() != A.center_dimension_of_stabilizer_algebra(orbit))
        throw ValidationError("internal: module count differs from the center dimension");

    std::vector<ModuleDescriptor> out;
    for (size_t idx = 0; idx < irreps.size(); ++idx) {
        const MatrixRep& u = irreps[idx];
        GradedRep n = ind_rep(A, orbit, u);
        ModuleDescriptor m;
        m.id = orbit.representative + "/" + std::to_string(idx);
        m.orbit_rep = orbit.representative;
        m.irrep_index = idx;
        m.twist = twist;
        m.dim_u = (long long)u.dimension;
        for (size_t t = 0; t < orbit.members.size(); ++t) {
            MatrixRep comp = red_rep(A, orbit, n, t);
            m.decomposition[orbit.members[t]] = (long long)comp.dimension;
            if (comp.dimension != u.dimension)
                throw ValidationError("internal: unequal multiplicities in one module");
        }
        m.d_stable = orbit.stabilizer.is_trivial();
        out.push_back(std::move(m));
    }
    return out;
}

ClassificationReport classify_all(const FusionDatum& datum) {
    ClassificationReport rep;
    rep.datum_digest = datum.digest();
    rep.group = datum.group().str();
    rep.trivial_cocycle = datum.cocycle().is_trivial();
    std::map<std::vector<QmodZ>, long long> totals;
    std::map<std::string, bool> covered;
    for (const auto& l : datum.labels()) covered[l] = false;
    for (const auto& orbit : datum.orbits()) {
        OrbitReport o;
        o.orbit = orbit;
        o.stabilizer_invariants = subgroup_invariants(orbit.stabilizer);
        o.chi = compute_chi(datum, orbit);
        o.twist = twist_of(datum, o.chi);
        ScalarCocycle sc = restrict_to_stabilizer(datum.cocycle(), orbit);
        o.radical_order = radical(bicharacter_of(sc)).order();
        o.center_dim = o.radical_order;
        o.modules = classify_orbit(datum, orbit);
        if ((long long)o.modules.size() != o.center_dim)
            throw ValidationError("internal: module count differs from the center dimension");
        for (const auto& m : o.modules) {
            totals[m.twist.sigma_hat.exponents] += 1;
            for (const auto& [label, mult] : m.decomposition)
                if (mult > 0) covered[label] = true;
        }
        rep.orbits.push_back(std::move(o));
    }
    for (const auto& [l, c] : covered)
        if (!c) throw ValidationError("internal: label \"" + l + "\" not covered by any module");
    rep.sector_totals.assign(totals.begin(), totals.end());
    return rep;
}

FusionDatum quotient_datum(const FusionDatum& datum, const OrbitData& orbit) {
    if (orbit.stabilizer.is_trivial())
        throw ValidationError("orbit of \"" + orbit.representative + "\" is already D-stable");
    FusionDatum::Input in;
    in.invariants = orbit.orbit_space.quotient_group.invariants();
    for (const auto& m : orbit.members)
        in.irreducibles.emplace_back(m, datum.weight(m));
    const auto& q = orbit.orbit_space.quotient_group;
    for (size_t i = 0; i < q.rank(); ++i) {
        Elem gen = q.zero();
        gen[i] = 1;
        const Elem& lift = orbit.orbit_space.lift(gen);
        std::map<std::string, std::string> table;
        for (const auto& m : orbit.members) table[m] = datum.act(lift, m);
        in.action[gen] = std::move(table);
    }
    return FusionDatum(std::move(in));
}

FusionResult fusion_dim(const FusionDatum& datum, const ModuleDescriptor& n1,
                        const ModuleDescriptor& n2, const ModuleDescriptor& n3) {
    for (const auto* n : {&n1, &n2, &n3})
        if (!n->d_stable)
            throw ValidationError("module " + n->id +
                                  " is not D-stable; reduce it with the orbit quotient first");
    if (!datum.has_fusion_table()) throw ValidationError("datum has no fusion table");
    FusionResult r;
    for (const auto& a : datum.group().elements()) {
        long long n = datum.fusion_multiplicity(n1.orbit_rep, n2.orbit_rep,
                                                datum.act(a, n3.orbit_rep));
        r.summands.emplace_back(a, n);
        r.total += n;
    }
    return r;
}

QExpansion graded_character(const FusionDatum& datum, const ModuleDescriptor& module,
                            const std::map<std::string, QExpansion>& component_characters,
                            const Rational& truncation) {
    std::map<Rational, long long> acc;
    bool any = false;
    Rational min_exp;
    for (const auto& [label, mult] : module.decomposition) {
        auto it = component_characters.find(label);
        if (it == component_characters.end())
            throw ValidationError("missing component character for \"" + label + "\"");
        const QExpansion& ch = it->second;
        Rational w_frac = datum.weight(label).frac();
        const Rational* prev = nullptr;
        for (const auto& [e, c] : ch) {
            if (prev && !(*prev < e))
                throw ValidationError("character of \"" + label + "\" is not sorted by exponent");
            prev = &e;
            if (c < 0)
                throw ValidationError("negative coefficient in the character of \"" + label + "\"");
            if (e.frac() != w_frac)
                throw ValidationError("character exponent " + e.str() + " of \"" + label +
                                      "\" is not congruent to its weight mod 1");
            if (!any || e < min_exp) min_exp = e;
            any = true;
            if (!(truncation < e)) acc[e] += mult * c;
        }
    }
    if (any && truncation < min_exp)
        throw ValidationError("truncation " + truncation.str() +
                              " lies below the smallest exponent " + min_exp.str());
    return {acc.begin(), acc.end()};
}

} // namespace scx
