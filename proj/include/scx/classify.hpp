#pragma once

#include "scx/reps.hpp"

namespace scx {

/// chi(alpha, s) - chi(alpha, s') not an integer: the weights are not
/// consistent along the orbit.
struct ChiInconsistent : ValidationError {
    ChiInconsistent(std::string orbit, Elem alpha, std::string s, std::string s_prime,
                    QmodZ at_s, QmodZ at_s_prime);
    std::string orbit;
    Elem alpha;
    std::string s, s_prime;
    QmodZ value_at_s, value_at_s_prime;
};

/// chi(alpha + beta) != chi(alpha) + chi(beta).
struct ChiNotAdditive : ValidationError {
    ChiNotAdditive(std::string orbit, Elem alpha, Elem beta);
    std::string orbit;
    Elem alpha, beta;
};

/// The weight-difference character chi(alpha) = h(alpha + s) - h(s) mod 1.
struct ChiCharacter {
    std::string orbit_rep;
    FiniteAbelianGroup group;
    std::vector<QmodZ> values; // per group element index

    const QmodZ& at(const Elem& a) const { return values[group.index_of(a)]; }
};

ChiCharacter compute_chi(const FusionDatum& datum, const OrbitData& orbit);

/// The twist sigma_hat(alpha) = e^{-2 pi i chi(alpha)} with the sector
/// partition D = sqcup D^(i), sectors labelled by the sigma_hat exponent in
/// Q/Z (i / |sigma|).
struct TwistSector {
    DualCharacter sigma_hat; // exponents -chi(g_i) on the generators
    long long order = 1;
    std::vector<std::pair<QmodZ, std::vector<Elem>>> sectors;

    bool untwisted() const { return order == 1; }
};

TwistSector twist_of(const FusionDatum& datum, const ChiCharacter& chi);

/// One irreducible V_D-module above an orbit: the stabilizer irrep U, the
/// twist, and the V^0-decomposition with its (equal) multiplicities.
struct ModuleDescriptor {
    std::string id; // "orbit-rep/irrep-index"
    std::string orbit_rep;
    size_t irrep_index = 0;
    TwistSector twist;
    long long dim_u = 1;                            // common multiplicity
    std::map<std::string, long long> decomposition; // V^0-label -> multiplicity
    bool d_stable = false;
};

std::vector<ModuleDescriptor> classify_orbit(const FusionDatum& datum, const OrbitData& orbit);

struct OrbitReport {
    OrbitData orbit;
    std::vector<long long> stabilizer_invariants;
    ChiCharacter chi;
    TwistSector twist;
    long long center_dim = 1;
    long long radical_order = 1;
    std::vector<ModuleDescriptor> modules;
};

struct ClassificationReport {
    std::string datum_digest;
    std::string group;
    bool trivial_cocycle = true;
    std::vector<OrbitReport> orbits;
    // per twist exponent vector: number of modules, sorted lexicographically
    std::vector<std::pair<std::vector<QmodZ>, long long>> sector_totals;

    const ModuleDescriptor* find_module(const std::string& id) const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

ClassificationReport classify_all(const FusionDatum& datum);

/// Reduction of a non-stable orbit: same labels, group D/D_W acting freely.
FusionDatum quotient_datum(const FusionDatum& datum, const OrbitData& orbit);

struct FusionResult {
    long long total = 0;
    std::vector<std::pair<Elem, long long>> summands; // per alpha in D
};

/// Lemma-"fusion" aggregation Sigma_alpha N(W1, W2; alpha.W3) for D-stable
/// modules; non-stable input is rejected.
FusionResult fusion_dim(const FusionDatum& datum, const ModuleDescriptor& n1,
                        const ModuleDescriptor& n2, const ModuleDescriptor& n3);

/// Truncated q-expansion: (exponent, coefficient) pairs sorted by exponent.
using QExpansion = std::vector<std::pair<Rational, long long>>;

QExpansion graded_character(const FusionDatum& datum, const ModuleDescriptor& module,
                            const std::map<std::string, QExpansion>& component_characters,
                            const Rational& truncation);

} // namespace scx
