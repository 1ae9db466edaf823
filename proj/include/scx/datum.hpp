#pragma once

#include "scx/cocycle.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>

namespace scx {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One D-orbit of irreducible labels.  members[t] is the label of W^{s+t}
/// where t runs over the transversal of D_W in D, so members[0] is the
/// representative.
struct OrbitData {
    std::string representative;
    std::vector<std::string> members;
    Subgroup stabilizer;
    QuotientData orbit_space;

    size_t size() const { return members.size(); }
    const std::string& point_label(size_t t) const { return members[t]; }
};

/// Finite shadow of a rational VOA with a simple-current system: labels of
/// the irreducible modules, their top weights, the D-action by fusion with
/// the simple currents V^alpha, the cocycle exponents, and optionally the
/// fusion multiplicities of the underlying category.
class FusionDatum {
public:
    struct CocycleEntry {
        std::string at;
        Elem alpha, beta;
        QmodZ exp;
    };
    struct FusionEntry {
        std::string w1, w2, w3;
        long long n = 0;
    };
    /// Raw pieces before validation; the constructor checks everything.
    /// vacuum is optional here so derived data (orbit quotients) can omit it,
    /// but parse() requires it.
    struct Input {
        std::vector<long long> invariants;
        std::vector<std::pair<std::string, Rational>> irreducibles;
        std::optional<std::string> vacuum;
        std::map<Elem, std::map<std::string, std::string>> action;
        std::vector<CocycleEntry> cocycle;
        std::optional<std::vector<FusionEntry>> fusion;
    };

    explicit FusionDatum(Input in);
    static FusionDatum parse(const nlohmann::json& doc);
    static FusionDatum parse_file(const std::string& path);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_label(const std::string& w) const;
    size_t label_index(const std::string& w) const;
    const Rational& weight(const std::string& w) const;
    const Rational& weight_at(size_t i) const { return weights_[i]; }

    bool has_vacuum() const { return vacuum_.has_value(); }
    const std::string& vacuum() const;

    /// The label of V^a boxtimes W for W the given label.
    std::string act(const Elem& a, const std::string& w) const;
    size_t act_index(const Elem& a, size_t label_idx) const;

    OrbitData orbit_of(const std::string& w) const;
    /// Orbits with representatives in label declaration order.
    const std::vector<OrbitData>& orbits() const { return orbits_; }

    const CocycleTable& cocycle() const { return cocycle_; }

    bool has_fusion_table() const { return fusion_.has_value(); }
    long long fusion_multiplicity(const std::string& w1, const std::string& w2,
                                  const std::string& w3) const;

    nlohmann::json to_json() const;
    /// FNV-1a hash of the canonical serialization, for report provenance.
    std::string digest() const;

private:
    FiniteAbelianGroup group_;
    std::vector<std::string> labels_;
    std::map<std::string, size_t> label_index_;
    std::vector<Rational> weights_;
    std::optional<std::string> vacuum_;
    std::vector<std::vector<size_t>> elem_perms_; // [elem idx][label idx]
    CocycleTable cocycle_;
    std::vector<CocycleEntry> cocycle_entries_;
    std::optional<std::map<std::tuple<std::string, std::string, std::string>, long long>> fusion_;
    std::vector<OrbitData> orbits_;
};

} // namespace scx
