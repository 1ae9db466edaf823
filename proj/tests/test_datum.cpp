#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scx/datum.hpp"

using namespace scx;
using nlohmann::json;

namespace {

json minimal_doc() {
    return json{{"group", {{"invariants", json::array()}}},
                {"vacuum", "V0"},
                {"irreducibles", {{{"label", "V0"}, {"weight", "0"}}}}};
}

json z2_doc() {
    json doc;
    doc["group"] = {{"invariants", {2}}};
    doc["vacuum"] = "A";
    doc["irreducibles"] = {{{"label", "A"}, {"weight", "0"}},
                           {{"label", "B"}, {"weight", "1"}},
                           {{"label", "C"}, {"weight", "1/2"}}};
    doc["action"] = {{"1", {{"A", "B"}, {"B", "A"}, {"C", "C"}}}};
    return doc;
}

std::string data_path(const char* name) {
    return std::string(SCX_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("minimal document: trivial group, one label, one orbit") {
    FusionDatum d = FusionDatum::parse(minimal_doc());
    CHECK(d.group().is_trivial());
    CHECK(d.labels() == std::vector<std::string>{"V0"});
    CHECK(d.orbits().size() == 1);
    CHECK(d.orbits()[0].members == std::vector<std::string>{"V0"});
    CHECK(d.orbits()[0].stabilizer.order() == 1);
}

TEST_CASE("3A dataset: 54 labels, 18 free orbits of size 3") {
    FusionDatum d = FusionDatum::parse_file(data_path("3A.json"));
    CHECK(d.group().invariants() == std::vector<long long>{3});
    CHECK(d.labels().size() == 54);
    CHECK(d.orbits().size() == 18);
    size_t total = 0;
    for (const auto& o : d.orbits()) {
        CHECK(o.size() == 3);
        CHECK(o.stabilizer.is_trivial());
        total += o.size();
    }
    CHECK(total == d.labels().size());
    OrbitData o = d.orbit_of("W(0)N(0)");
    CHECK(o.representative == "W(0)N(0)");
    CHECK(o.members.size() == 3);
    CHECK(o.members[0] == "W(0)N(0)");
    // the vacuum orbit is the paper's U^0, U^1, U^2
    CHECK(o.members[1] == "W(2/3)+N(4/3)+");
    CHECK(o.members[2] == "W(2/3)-N(4/3)-");
    CHECK(d.cocycle().is_trivial());
    CHECK_THROWS_AS(d.orbit_of("nope"), ValidationError);
}

TEST_CASE("pauli dataset: W is fixed by the whole group") {
    FusionDatum d = FusionDatum::parse_file(data_path("pauli.json"));
    OrbitData o = d.orbit_of("W");
    CHECK(o.members == std::vector<std::string>{"W"});
    CHECK(o.stabilizer.order() == 4);
    OrbitData v = d.orbit_of(d.vacuum());
    CHECK(v.stabilizer.is_trivial());
    CHECK(v.members.size() == 4);
    CHECK_FALSE(d.cocycle().is_trivial());
    CHECK(d.cocycle().at("W", {0, 1}, {1, 0}) == QmodZ(1, 2));
    CHECK(d.cocycle().at("W", {1, 0}, {0, 1}).is_zero());
}

TEST_CASE("action is completed by composition and extra tables are checked") {
    json doc;
    doc["group"] = {{"invariants", {3}}};
    doc["vacuum"] = "A0";
    doc["irreducibles"] = {{{"label", "A0"}, {"weight", "0"}},
                           {{"label", "A1"}, {"weight", "1"}},
                           {{"label", "A2"}, {"weight", "2"}}};
    doc["action"] = {{"1", {{"A0", "A1"}, {"A1", "A2"}, {"A2", "A0"}}}};
    FusionDatum d = FusionDatum::parse(doc);
    CHECK(d.act({2}, "A0") == "A2");
    CHECK(d.act({0}, "A1") == "A1");
    CHECK(d.act({-1}, "A0") == "A2");

    // a redundant full table for element 2 is accepted when consistent
    doc["action"]["2"] = {{"A0", "A2"}, {"A1", "A0"}, {"A2", "A1"}};
    CHECK_NOTHROW(FusionDatum::parse(doc));
    doc["action"]["2"] = {{"A0", "A0"}, {"A1", "A1"}, {"A2", "A2"}};
    CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
}

TEST_CASE("structural validation errors") {
    json doc = z2_doc();
    SUBCASE("generator map not a permutation") {
        doc["action"]["1"] = {{"A", "B"}, {"B", "B"}, {"C", "C"}};
        CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
    }
    SUBCASE("generator map misses a label") {
        doc["action"]["1"] = {{"A", "B"}, {"B", "A"}};
        CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
    }
    SUBCASE("missing generator") {
        doc["action"].erase("1");
        CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
    }
    SUBCASE("generator order does not divide the invariant") {
        // a 3-cycle under Z2
        doc["action"]["1"] = {{"A", "B"}, {"B", "C"}, {"C", "A"}};
        CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
    }
    SUBCASE("duplicate label") {
        doc["irreducibles"].push_back({{"label", "A"}, {"weight", "0"}});
        CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
    }
    SUBCASE("vacuum weight nonzero") {
        doc["vacuum"] = "C";
        CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
    }
    SUBCASE("vacuum orbit collision") {
        doc["vacuum"] = "C"; // C is fixed by the action
        doc["irreducibles"][2]["weight"] = "0";
        CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
    }
    SUBCASE("unknown vacuum") {
        doc["vacuum"] = "Z";
        CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
    }
}

TEST_CASE("non-commuting generator actions are rejected") {
    json doc;
    doc["group"] = {{"invariants", {2, 2}}};
    doc["vacuum"] = "A";
    doc["irreducibles"] = json::array();
    for (auto l : {"A", "B", "C", "D"})
        doc["irreducibles"].push_back({{"label", l}, {"weight", 0}});
    // two transpositions generating S3 on {A,B,C} do not commute
    doc["action"] = {{"1,0", {{"A", "B"}, {"B", "A"}, {"C", "C"}, {"D", "D"}}},
                     {"0,1", {{"A", "A"}, {"B", "C"}, {"C", "B"}, {"D", "D"}}}};
    CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
}

TEST_CASE("schema violations raise ParseError") {
    CHECK_THROWS_AS(FusionDatum::parse(json::array()), ParseError);
    json doc = minimal_doc();
    SUBCASE("no group") {
        doc.erase("group");
        CHECK_THROWS_AS(FusionDatum::parse(doc), ParseError);
    }
    SUBCASE("no vacuum") {
        doc.erase("vacuum");
        CHECK_THROWS_AS(FusionDatum::parse(doc), ParseError);
    }
    SUBCASE("bad weight") {
        doc["irreducibles"][0]["weight"] = "x/y";
        CHECK_THROWS_AS(FusionDatum::parse(doc), ParseError);
    }
    SUBCASE("bad action key") {
        doc["group"]["invariants"] = {2};
        doc["action"] = {{"one", {{"V0", "V0"}}}};
        CHECK_THROWS_AS(FusionDatum::parse(doc), ParseError);
    }
}

TEST_CASE("fusion table lookups and validation") {
    FusionDatum d = FusionDatum::parse_file(data_path("ising-like.json"));
    CHECK(d.has_fusion_table());
    const std::string vac = d.vacuum();
    // unit rows
    for (const auto& w : d.labels()) {
        CHECK(d.fusion_multiplicity(vac, w, w) == 1);
        for (const auto& x : d.labels())
            if (x != w) CHECK(d.fusion_multiplicity(vac, w, x) == 0);
    }
    CHECK(d.fusion_multiplicity("M-sigma-tilde", "M-sigma-tilde", "M-vac") == 1);
    CHECK(d.fusion_multiplicity("M-sigma", "M-sigma", "M-eps") == 1);
    CHECK(d.fusion_multiplicity("M-sigma", "M-eps", "M-vac") == 0);
    CHECK_THROWS_AS(d.fusion_multiplicity("M-sigma", "M-sigma", "nope"), ValidationError);

    FusionDatum noTable = FusionDatum::parse_file(data_path("3A.json"));
    CHECK_FALSE(noTable.has_fusion_table());
    CHECK_THROWS_AS(noTable.fusion_multiplicity("W(0)N(0)", "W(0)N(0)", "W(0)N(0)"),
                    ValidationError);
}

TEST_CASE("fusion table inconsistent with the action is rejected") {
    json doc = z2_doc();
    doc["fusion"] = {{{"w1", "A"}, {"w2", "A"}, {"w3", "A"}, {"n", 1}},
                     {{"w1", "A"}, {"w2", "B"}, {"w3", "B"}, {"n", 1}},
                     {{"w1", "A"}, {"w2", "C"}, {"w3", "C"}, {"n", 1}},
                     {{"w1", "B"}, {"w2", "A"}, {"w3", "B"}, {"n", 1}},
                     {{"w1", "B"}, {"w2", "B"}, {"w3", "A"}, {"n", 1}},
                     {{"w1", "B"}, {"w2", "C"}, {"w3", "C"}, {"n", 1}}};
    CHECK_NOTHROW(FusionDatum::parse(doc));
    // B is the simple current V^1; B x C must be C, not A
    doc["fusion"][5] = {{"w1", "B"}, {"w2", "C"}, {"w3", "A"}, {"n", 1}};
    CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
    // missing simple-current row is also an inconsistency
    doc["fusion"].erase(5);
    CHECK_THROWS_AS(FusionDatum::parse(doc), ValidationError);
}

TEST_CASE("serialization round trip and digest stability") {
    for (auto name : {"3A.json", "pauli.json", "ising-like.json"}) {
        FusionDatum d = FusionDatum::parse_file(data_path(name));
        FusionDatum d2 = FusionDatum::parse(d.to_json());
        CHECK(d.digest() == d2.digest());
        CHECK(d.labels() == d2.labels());
        CHECK(d.to_json() == d2.to_json());
    }
    FusionDatum a = FusionDatum::parse_file(data_path("pauli.json"));
    FusionDatum b = FusionDatum::parse_file(data_path("ising-like.json"));
    CHECK(a.digest() != b.digest());
}
