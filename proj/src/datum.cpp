#include "scx/datum.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace scx {

namespace {

std::vector<size_t> compose(const std::vector<size_t>& f, const std::vector<size_t>& g) {
    std::vector<size_t> out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
    return out;
}

std::vector<size_t> identity_perm(size_t n) {
    std::vector<size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

} // namespace

FusionDatum::FusionDatum(Input in) : group_(in.invariants) {
    // labels and weights
    if (in.irreducibles.empty()) throw ValidationError("no irreducible labels given");
    for (auto& [name, h] : in.irreducibles) {
        if (name.empty()) throw ValidationError("empty irreducible label");
        if (!label_index_.emplace(name, labels_.size()).second)
            throw ValidationError("duplicate label \"" + name + "\"");
        labels_.push_back(name);
        weights_.push_back(h);
    }

    // action on generators, verified to assemble into a D-action
    size_t nl = labels_.size();
    std::vector<std::vector<size_t>> gen_perms(group_.rank());
    std::vector<std::pair<Elem, std::vector<size_t>>> redundant;
    for (auto& [key, table] : in.action) {
        Elem e = group_.reduce(key);
        std::vector<size_t> perm(nl, nl);
        std::set<size_t> hit;
        for (auto& [from, to] : table) {
            auto fi = label_index_.find(from);
            auto ti = label_index_.find(to);
            if (fi == label_index_.end())
                throw ValidationError("action references unknown label \"" + from + "\"");
            if (ti == label_index_.end())
                throw ValidationError("action sends \"" + from + "\" to unknown label \"" + to + "\"");
            perm[fi->second] = ti->second;
            if (!hit.insert(ti->second).second)
                throw ValidationError("action of " + FiniteAbelianGroup::elem_str(e) +
                                      " is not a permutation: \"" + to + "\" hit twice");
        }
        if (hit.size() != nl)
            throw ValidationError("action of " + FiniteAbelianGroup::elem_str(e) +
                                  " does not cover every label");
        long long weight_sum = 0;
        size_t which = 0;
        for (size_t i = 0; i < group_.rank(); ++i)
            if (e[i] != 0) {
                weight_sum += e[i];
                which = i;
            }
        if (weight_sum == 1) {
            gen_perms[which] = std::move(perm);
        } else {
            redundant.emplace_back(e, std::move(perm));
        }
    }
    for (size_t i = 0; i < group_.rank(); ++i) {
        if (gen_perms[i].empty())
            throw ValidationError("action missing for generator " + std::to_string(i));
        // order of the permutation must divide the invariant factor
        auto p = identity_perm(nl);
        for (long long k = 0; k < group_.invariants()[i]; ++k) p = compose(gen_perms[i], p);
        if (p != identity_perm(nl))
            throw ValidationError("action of generator " + std::to_string(i) +
                                  " has order not dividing " +
                                  std::to_string(group_.invariants()[i]));
        for (size_t j = 0; j < i; ++j)
            if (compose(gen_perms[i], gen_perms[j]) != compose(gen_perms[j], gen_perms[i]))
                throw ValidationError("generator actions " + std::to_string(j) + " and " +
                                      std::to_string(i) + " do not commute");
    }

    // permutation for every group element, by composition
    elem_perms_.reserve(group_.order());
    for (const auto& e : group_.elements()) {
        auto p = identity_perm(nl);
        for (size_t i = 0; i < group_.rank(); ++i)
            for (long long k = 0; k < e[i]; ++k) p = compose(gen_perms[i], p);
        elem_perms_.push_back(std::move(p));
    }
    for (auto& [e, perm] : redundant)
        if (perm != elem_perms_[group_.index_of(e)])
            throw ValidationError("action table for " + FiniteAbelianGroup::elem_str(e) +
                                  " disagrees with the composed generator action");

    // vacuum: weight 0, free orbit (the simple currents V^alpha are pairwise
    // inequivalent)
    vacuum_ = std::move(in.vacuum);
    if (vacuum_) {
        auto it = label_index_.find(*vacuum_);
        if (it == label_index_.end())
            throw ValidationError("vacuum label \"" + *vacuum_ + "\" not among the irreducibles");
        if (!weights_[it->second].is_zero())
            throw ValidationError("vacuum has weight " + weights_[it->second].str() +
                                  ", expected 0");
        std::set<size_t> orbit;
        for (size_t ei = 0; ei < (size_t)group_.order(); ++ei)
            if (!orbit.insert(elem_perms_[ei][it->second]).second)
                throw ValidationError("vacuum orbit collision: the labels V^alpha must be "
                                      "pairwise distinct");
    }

    // cocycle table over the full label set
    std::vector<std::vector<size_t>> pa = elem_perms_;
    cocycle_ = CocycleTable(group_, labels_, std::move(pa));
    for (auto& ce : in.cocycle) {
        if (!label_index_.count(ce.at))
            throw ValidationError("cocycle entry at unknown label \"" + ce.at + "\"");
        Elem a = group_.reduce(ce.alpha), b = group_.reduce(ce.beta);
        QmodZ prev = cocycle_.at(ce.at, a, b);
        if (!prev.is_zero() && prev != ce.exp)
            throw ValidationError("conflicting cocycle entries at (\"" + ce.at + "\", " +
                                  FiniteAbelianGroup::elem_str(a) + ", " +
                                  FiniteAbelianGroup::elem_str(b) + ")");
        cocycle_.set(ce.at, a, b, ce.exp);
        if (!ce.exp.is_zero() && prev.is_zero())
            cocycle_entries_.push_back({ce.at, a, b, ce.exp});
    }

    // fusion table, checked against the unit and the simple-current rows
    if (in.fusion) {
        fusion_.emplace();
        for (auto& fe : *in.fusion) {
            for (const auto* w : {&fe.w1, &fe.w2, &fe.w3})
                if (!label_index_.count(*w))
                    throw ValidationError("fusion entry references unknown label \"" + *w + "\"");
            if (fe.n < 0) throw ValidationError("negative fusion multiplicity");
            // commutative in the first two slots; store one canonical order
            auto key = fe.w1 <= fe.w2 ? std::make_tuple(fe.w1, fe.w2, fe.w3)
                                      : std::make_tuple(fe.w2, fe.w1, fe.w3);
            auto [it, fresh] = fusion_->emplace(key, fe.n);
            if (!fresh && it->second != fe.n)
                throw ValidationError("conflicting fusion entries for (" + fe.w1 + ", " +
                                      fe.w2 + ", " + fe.w3 + ")");
        }
        if (vacuum_) {
            auto lookup = [&](const std::string& a, const std::string& b,
                              const std::string& c) -> long long {
                auto it = fusion_->find(a <= b ? std::make_tuple(a, b, c)
                                               : std::make_tuple(b, a, c));
                return it == fusion_->end() ? 0 : it->second;
            };
            for (const auto& e : group_.elements()) {
                std::string cur = act(e, *vacuum_);
                for (const auto& w : labels_) {
                    std::string img = act(e, w);
                    for (const auto& x : labels_) {
                        long long n = lookup(cur, w, x);
                        long long expect = (x == img) ? 1 : 0;
                        if (n != expect)
                            throw ValidationError(
                                "fusion table row for simple current \"" + cur +
                                "\" disagrees with the action map at (" + w + ", " + x +
                                "): got " + std::to_string(n) + ", expected " +
                                std::to_string(expect));
                    }
                }
            }
        }
    }

    // orbit decomposition, representatives in declaration order
    std::set<std::string> seen;
    for (const auto& w : labels_) {
        if (seen.count(w)) continue;
        OrbitData o = orbit_of(w);
        for (const auto& m : o.members) {
            seen.insert(m);
            // stabilizers are constant along an orbit since D is abelian
            for (const auto& a : o.stabilizer.elements)
                if (act(a, m) != m)
                    throw ValidationError("internal: stabilizer not constant on the orbit of \"" +
                                          w + "\"");
        }
        orbits_.push_back(std::move(o));
    }
}

bool FusionDatum::has_label(const std::string& w) const { return label_index_.count(w) > 0; }

size_t FusionDatum::label_index(const std::string& w) const {
    auto it = label_index_.find(w);
    if (it == label_index_.end()) throw ValidationError("unknown label \"" + w + "\"");
    return it->second;
}

const Rational& FusionDatum::weight(const std::string& w) const {
    return weights_[label_index(w)];
}

const std::string& FusionDatum::vacuum() const {
    if (!vacuum_) throw ValidationError("datum has no vacuum label");
    return *vacuum_;
}

std::string FusionDatum::act(const Elem& a, const std::string& w) const {
    return labels_[act_index(a, label_index(w))];
}

size_t FusionDatum::act_index(const Elem& a, size_t label_idx) const {
    return elem_perms_[group_.index_of(group_.reduce(a))][label_idx];
}

OrbitData FusionDatum::orbit_of(const std::string& w) const {
    size_t wi = label_index(w);
    std::vector<Elem> stab;
    for (size_t ei = 0; ei < (size_t)group_.order(); ++ei)
        if (elem_perms_[ei][wi] == wi) stab.push_back(group_.element_at(ei));
    OrbitData o;
    o.representative = w;
    o.stabilizer = subgroup_from(stab, group_);
    o.orbit_space = quotient(group_, o.stabilizer);
    std::set<std::string> distinct;
    for (const auto& t : o.orbit_space.transversal) {
        o.members.push_back(labels_[elem_perms_[group_.index_of(t)][wi]]);
        distinct.insert(o.members.back());
    }
    if (distinct.size() != o.members.size())
        throw ValidationError("internal: orbit members of \"" + w + "\" not distinct");
    return o;
}

long long FusionDatum::fusion_multiplicity(const std::string& w1, const std::string& w2,
                                           const std::string& w3) const {
    if (!fusion_) throw ValidationError("datum has no fusion table");
    for (const auto* w : {&w1, &w2, &w3}) label_index(*w);
    auto it = fusion_->find(w1 <= w2 ? std::make_tuple(w1, w2, w3)
                                     : std::make_tuple(w2, w1, w3));
    return it == fusion_->end() ? 0 : it->second;
}

namespace {

Elem parse_coords(const std::string& key, size_t rank) {
    std::string s = key;
    std::erase_if(s, [](char c) { return c == '[' || c == ']' || c == '(' || c == ')' || c == ' '; });
    Elem e;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t pos = 0;
            e.push_back(std::stoll(part, &pos));
            if (pos != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw ParseError("bad coordinate \"" + part + "\" in action key \"" + key + "\"");
        }
    }
    if (e.size() != rank)
        throw ParseError("action key \"" + key + "\" has " + std::to_string(e.size()) +
                         " coordinates, group has rank " + std::to_string(rank));
    return e;
}

Elem parse_elem(const nlohmann::json& j, size_t rank, const char* what) {
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array of integers");
    Elem e;
    for (const auto& c : j) {
        if (!c.is_number_integer())
            throw ParseError(std::string(what) + " must contain only integers");
        e.push_back(c.get<long long>());
    }
    if (e.size() != rank)
        throw ParseError(std::string(what) + " has " + std::to_string(e.size()) +
                         " coordinates, group has rank " + std::to_string(rank));
    return e;
}

Rational parse_weight(const nlohmann::json& j, const char* what) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long long>());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::exception& ex) {
        throw ParseError(std::string(what) + ": " + ex.what());
    }
    throw ParseError(std::string(what) + " must be an integer or a \"p/q\" string");
}

} // namespace

FusionDatum FusionDatum::parse(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("document is not a JSON object");
    Input in;
    if (!doc.contains("group") || !doc["group"].is_object() ||
        !doc["group"].contains("invariants") || !doc["group"]["invariants"].is_array())
        throw ParseError("missing \"group\": {\"invariants\": [...]}");
    for (const auto& n : doc["group"]["invariants"]) {
        if (!n.is_number_integer()) throw ParseError("group invariants must be integers");
        in.invariants.push_back(n.get<long long>());
    }
    size_t rank = in.invariants.size();

    if (!doc.contains("irreducibles") || !doc["irreducibles"].is_array())
        throw ParseError("missing \"irreducibles\" array");
    for (const auto& item : doc["irreducibles"]) {
        if (!item.is_object() || !item.contains("label") || !item["label"].is_string() ||
            !item.contains("weight"))
            throw ParseError("each irreducible needs {\"label\": string, \"weight\": \"p/q\"}");
        in.irreducibles.emplace_back(item["label"].get<std::string>(),
                                     parse_weight(item["weight"], "weight"));
    }

    if (!doc.contains("vacuum") || !doc["vacuum"].is_string())
        throw ParseError("missing \"vacuum\" label");
    in.vacuum = doc["vacuum"].get<std::string>();

    if (doc.contains("action")) {
        if (!doc["action"].is_object()) throw ParseError("\"action\" must be an object");
        for (const auto& [key, table] : doc["action"].items()) {
            if (!table.is_object())
                throw ParseError("action entry \"" + key + "\" must map labels to labels");
            std::map<std::string, std::string> m;
            for (const auto& [from, to] : table.items()) {
                if (!to.is_string())
                    throw ParseError("action image of \"" + from + "\" must be a string");
                m[from] = to.get<std::string>();
            }
            in.action[parse_coords(key, rank)] = std::move(m);
        }
    }

    if (doc.contains("cocycle")) {
        if (!doc["cocycle"].is_array()) throw ParseError("\"cocycle\" must be an array");
        for (const auto& item : doc["cocycle"]) {
            if (!item.is_object() || !item.contains("at") || !item["at"].is_string() ||
                !item.contains("alpha") || !item.contains("beta") || !item.contains("exp"))
                throw ParseError("each cocycle entry needs {\"at\", \"alpha\", \"beta\", \"exp\"}");
            CocycleEntry ce;
            ce.at = item["at"].get<std::string>();
            ce.alpha = parse_elem(item["alpha"], rank, "cocycle alpha");
            ce.beta = parse_elem(item["beta"], rank, "cocycle beta");
            ce.exp = QmodZ(parse_weight(item["exp"], "cocycle exp"));
            in.cocycle.push_back(std::move(ce));
        }
    }

    if (doc.contains("fusion")) {
        if (!doc["fusion"].is_array()) throw ParseError("\"fusion\" must be an array");
        in.fusion.emplace();
        for (const auto& item : doc["fusion"]) {
            if (!item.is_object() || !item.contains("w1") || !item.contains("w2") ||
                !item.contains("w3") || !item.contains("n") || !item["n"].is_number_integer())
                throw ParseError("each fusion entry needs {\"w1\", \"w2\", \"w3\", \"n\": int}");
            FusionEntry fe;
            fe.w1 = item["w1"].get<std::string>();
            fe.w2 = item["w2"].get<std::string>();
            fe.w3 = item["w3"].get<std::string>();
            fe.n = item["n"].get<long long>();
            in.fusion->push_back(std::move(fe));
        }
    }

    return FusionDatum(std::move(in));
}

FusionDatum FusionDatum::parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(f);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    return parse(doc);
}

nlohmann::json FusionDatum::to_json() const {
    nlohmann::json doc;
    doc["group"] = {{"invariants", group_.invariants()}};
    if (vacuum_) doc["vacuum"] = *vacuum_;
    auto irr = nlohmann::json::array();
    for (size_t i = 0; i < labels_.size(); ++i)
        irr.push_back({{"label", labels_[i]}, {"weight", weights_[i].str()}});
    doc["irreducibles"] = std::move(irr);
    auto action = nlohmann::json::object();
    for (size_t i = 0; i < group_.rank(); ++i) {
        Elem gen = group_.zero();
        gen[i] = 1;
        std::string key;
        for (size_t j = 0; j < gen.size(); ++j) {
            if (j) key += ",";
            key += std::to_string(gen[j]);
        }
        auto table = nlohmann::json::object();
        const auto& perm = elem_perms_[group_.index_of(gen)];
        for (size_t li = 0; li < labels_.size(); ++li) table[labels_[li]] = labels_[perm[li]];
        action[key] = std::move(table);
    }
    doc["action"] = std::move(action);
    if (!cocycle_entries_.empty()) {
        auto cc = nlohmann::json::array();
        for (const auto& ce : cocycle_entries_)
            cc.push_back({{"at", ce.at},
                          {"alpha", ce.alpha},
                          {"beta", ce.beta},
                          {"exp", ce.exp.str()}});
        doc["cocycle"] = std::move(cc);
    }
    if (fusion_) {
        auto fu = nlohmann::json::array();
        for (const auto& [key, n] : *fusion_)
            fu.push_back({{"w1", std::get<0>(key)},
                          {"w2", std::get<1>(key)},
                          {"w3", std::get<2>(key)},
                          {"n", n}});
        doc["fusion"] = std::move(fu);
    }
    return doc;
}

std::string FusionDatum::digest() const {
    std::string s = to_json().dump();
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

} // namespace scx
