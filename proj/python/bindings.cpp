#include "scx/classify.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace scx;

namespace {

FusionDatum datum_from(const std::string& datum_json) {
    return FusionDatum::parse(nlohmann::json::parse(datum_json));
}

const ModuleDescriptor& module_by_id(const ClassificationReport& rep, const std::string& id) {
    const ModuleDescriptor* m = rep.find_module(id);
    if (!m) throw ValidationError("no module \"" + id + "\"");
    return *m;
}

std::string validate_json(const std::string& datum_json) {
    FusionDatum d = datum_from(datum_json);
    ClassificationReport rep = classify_all(d);
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& o : rep.orbits)
        orbits.push_back({{"representative", o.orbit.representative},
                          {"stabilizer_order", o.orbit.stabilizer.order()},
                          {"radical_order", o.radical_order},
                          {"modules", o.modules.size()}});
    nlohmann::json doc = {{"ok", true},
                          {"group", d.group().str()},
                          {"labels", d.labels().size()},
                          {"cocycle_class", rep.trivial_cocycle ? "trivial" : "nontrivial"},
                          {"orbits", orbits}};
    return doc.dump();
}

std::string classify_json(const std::string& datum_json) {
    return classify_all(datum_from(datum_json)).to_json().dump();
}

std::string classify_text(const std::string& datum_json) {
    return classify_all(datum_from(datum_json)).to_text();
}

std::string fusion_json(const std::string& datum_json, const std::string& n1,
                        const std::string& n2, const std::string& n3) {
    FusionDatum d = datum_from(datum_json);
    ClassificationReport rep = classify_all(d);
    FusionResult r =
        fusion_dim(d, module_by_id(rep, n1), module_by_id(rep, n2), module_by_id(rep, n3));
    auto summands = nlohmann::json::array();
    for (const auto& [a, n] : r.summands) summands.push_back({{"alpha", a}, {"n", n}});
    return nlohmann::json{{"total", r.total}, {"summands", summands}}.dump();
}

std::string character_json(const std::string& datum_json, const std::string& module_id,
                           const std::string& characters_json, const std::string& truncate) {
    FusionDatum d = datum_from(datum_json);
    ClassificationReport rep = classify_all(d);
    std::map<std::string, QExpansion> chars;
    nlohmann::json chars_doc = nlohmann::json::parse(characters_json);
    for (const auto& [label, arr] : chars_doc.items()) {
        QExpansion ch;
        for (const auto& term : arr) {
            Rational e = term[0].is_number_integer() ? Rational(term[0].get<long long>())
                                                     : Rational::parse(term[0].get<std::string>());
            ch.emplace_back(e, term[1].get<long long>());
        }
        chars[label] = std::move(ch);
    }
    QExpansion ch = graded_character(d, module_by_id(rep, module_id), chars,
                                     Rational::parse(truncate));
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : ch) arr.push_back({e.str(), c});
    return nlohmann::json{{"module", module_id}, {"expansion", arr}}.dump();
}

std::string quotient_json(const std::string& datum_json, const std::string& orbit_rep) {
    FusionDatum d = datum_from(datum_json);
    return quotient_datum(d, d.orbit_of(orbit_rep)).to_json().dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "module category classifier for graded simple current extensions";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("validate", &validate_json, py::arg("datum_json"),
          "validate a datum; returns a JSON summary string");
    m.def("classify", &classify_json, py::arg("datum_json"),
          "full classification; returns the report as a JSON string");
    m.def("classify_text", &classify_text, py::arg("datum_json"),
          "full classification as deterministic plain text");
    m.def("fusion", &fusion_json, py::arg("datum_json"), py::arg("n1"), py::arg("n2"),
          py::arg("n3"), "fusion dimension of a stable module triple, as a JSON string");
    m.def("character", &character_json, py::arg("datum_json"), py::arg("module_id"),
          py::arg("characters_json"), py::arg("truncate"),
          "truncated graded character, as a JSON string");
    m.def("quotient", &quotient_json, py::arg("datum_json"), py::arg("orbit_rep"),
          "orbit quotient datum for a non-stable orbit, as a JSON string");
    m.def("set_group_order_cap", &set_group_order_cap, py::arg("cap"));
    m.def("group_order_cap", &group_order_cap);
}
