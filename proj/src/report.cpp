#include "scx/classify.hpp"

#include <sstream>

namespace scx {

namespace {

std::string exps_str(const std::vector<QmodZ>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out + ")";
}

std::string invariants_str(const std::vector<long long>& inv) {
    if (inv.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < inv.size(); ++i) {
        if (i) out += "x";
        out += "Z" + std::to_string(inv[i]);
    }
    return out;
}

} // namespace

const ModuleDescriptor* ClassificationReport::find_module(const std::string& id) const {
    for (const auto& o : orbits)
        for (const auto& m : o.modules)
            if (m.id == id) return &m;
    // an orbit representative alone is accepted when it is unambiguous
    for (const auto& o : orbits)
        if (o.orbit.representative == id && o.modules.size() == 1) return &o.modules[0];
    return nullptr;
}

nlohmann::json ClassificationReport::to_json() const {
    nlohmann::json doc;
    doc["version"] = 1;
    doc["datum"] = datum_digest;
    doc["group"] = group;
    doc["cocycle_class"] = trivial_cocycle ? "trivial" : "nontrivial";
    auto orbits_j = nlohmann::json::array();
    for (const auto& o : orbits) {
        nlohmann::json oj;
        oj["representative"] = o.orbit.representative;
        oj["members"] = o.orbit.members;
        oj["stabilizer"] = invariants_str(o.stabilizer_invariants);
        oj["stabilizer_order"] = o.orbit.stabilizer.order();
        auto chi_j = nlohmann::json::array();
        for (size_t i = 0; i < o.chi.values.size(); ++i)
            chi_j.push_back({{"alpha", o.chi.group.element_at(i)},
                             {"value", o.chi.values[i].str()}});
        oj["chi"] = std::move(chi_j);
        nlohmann::json tw;
        std::vector<std::string> exps;
        for (const auto& e : o.twist.sigma_hat.exponents) exps.push_back(e.str());
        tw["sigma_hat_exponents"] = exps;
        tw["order"] = o.twist.order;
        auto sec = nlohmann::json::array();
        for (const auto& [label, elems] : o.twist.sectors)
            sec.push_back({{"label", label.str()}, {"elements", elems}});
        tw["sectors"] = std::move(sec);
        oj["twist"] = std::move(tw);
        oj["center_dimension"] = o.center_dim;
        oj["radical_order"] = o.radical_order;
        auto mods = nlohmann::json::array();
        for (const auto& m : o.modules) {
            nlohmann::json mj;
            mj["id"] = m.id;
            mj["multiplicity"] = m.dim_u;
            mj["stable"] = m.d_stable;
            nlohmann::json dec;
            for (const auto& [label, mult] : m.decomposition) dec[label] = mult;
            mj["decomposition"] = std::move(dec);
            mods.push_back(std::move(mj));
        }
        oj["modules"] = std::move(mods);
        orbits_j.push_back(std::move(oj));
    }
    doc["orbits"] = std::move(orbits_j);
    auto totals = nlohmann::json::array();
    for (const auto& [exps2, count] : sector_totals) {
        std::vector<std::string> es;
        for (const auto& e : exps2) es.push_back(e.str());
        totals.push_back({{"sigma_hat_exponents", es}, {"modules", count}});
    }
    doc["sector_totals"] = std::move(totals);
    return doc;
}

std::string ClassificationReport::to_text() const {
    std::ostringstream out;
    out << "group " << group << "  datum " << datum_digest << "  cocycle "
        << (trivial_cocycle ? "trivial (results are for the trivial class)" : "nontrivial")
        << "\n";
    long long total_modules = 0;
    for (const auto& o : orbits) {
        out << "\norbit " << o.orbit.representative << "  D_W "
            << invariants_str(o.stabilizer_invariants) << "  size " << o.orbit.members.size()
            << "  center " << o.center_dim << "  radical " << o.radical_order << "\n";
        out << "  chi:";
        for (size_t i = 0; i < o.chi.values.size(); ++i)
            out << " " << FiniteAbelianGroup::elem_str(o.chi.group.element_at(i)) << "->"
                << o.chi.values[i].str();
        out << "\n";
        out << "  twist: sigma_hat " << exps_str(o.twist.sigma_hat.exponents) << "  order "
            << o.twist.order << (o.twist.untwisted() ? "  (untwisted)" : "") << "\n";
        for (const auto& m : o.modules) {
            ++total_modules;
            out << "  module " << m.id << "  multiplicity " << m.dim_u
                << (m.d_stable ? "  stable" : "  non-stable") << "  components";
            for (const auto& [label, mult] : m.decomposition)
                out << " " << label << ":" << mult;
            out << "\n";
        }
    }
    out << "\nsector totals (" << total_modules << " modules)\n";
    for (const auto& [exps2, count] : sector_totals)
        out << "  sigma_hat " << exps_str(exps2) << ": " << count << "\n";
    return out.str();
}

} // namespace scx
