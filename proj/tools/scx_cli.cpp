#include "scx/classify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace scx;

namespace {

// exit codes: 0 ok, 2 file, 3 parse, 4 validation, 5 usage
enum { kOk = 0, kFileError = 2, kParseError = 3, kValidationError = 4, kUsageError = 5 };

struct CliError : std::runtime_error {
    CliError(int code_, std::string kind_, const std::string& msg)
        : std::runtime_error(msg), code(code_), kind(std::move(kind_)) {}
    int code;
    std::string kind;
};

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw CliError(kFileError, "file", "cannot open \"" + path + "\"");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw CliError(kParseError, "parse", path + ": " + e.what());
    }
}

FusionDatum load_datum(const std::string& path) {
    nlohmann::json doc = read_json_file(path);
    try {
        return FusionDatum::parse(doc);
    } catch (const ParseError& e) {
        throw CliError(kParseError, "parse", path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw CliError(kValidationError, "validation", path + ": " + e.what());
    }
}

ClassificationReport classify_checked(const FusionDatum& d) {
    try {
        return classify_all(d);
    } catch (const ValidationError& e) {
        throw CliError(kValidationError, "validation", e.what());
    }
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

void filter_orbit(ClassificationReport& rep, const std::string& orbit) {
    std::vector<OrbitReport> kept;
    for (auto& o : rep.orbits)
        if (o.orbit.representative == orbit) kept.push_back(std::move(o));
    if (kept.empty())
        throw CliError(kValidationError, "validation", "no orbit with representative \"" + orbit + "\"");
    rep.orbits = std::move(kept);
    std::map<std::vector<QmodZ>, long long> totals;
    for (const auto& o : rep.orbits)
        for (const auto& m : o.modules) totals[m.twist.sigma_hat.exponents] += 1;
    rep.sector_totals.assign(totals.begin(), totals.end());
}

const ModuleDescriptor& module_by_id(const ClassificationReport& rep, const std::string& id) {
    const ModuleDescriptor* m = rep.find_module(id);
    if (!m)
        throw CliError(kValidationError, "validation",
                       "no module \"" + id + "\" (use orbit-rep/irrep-index, or the orbit "
                       "representative when it carries a single module)");
    return *m;
}

std::map<std::string, QExpansion> load_characters(const std::string& path) {
    nlohmann::json doc = read_json_file(path);
    if (!doc.is_object())
        throw CliError(kParseError, "parse", path + ": expected an object mapping labels to expansions");
    std::map<std::string, QExpansion> out;
    for (const auto& [label, arr] : doc.items()) {
        if (!arr.is_array())
            throw CliError(kParseError, "parse", path + ": character of \"" + label + "\" must be an array");
        QExpansion ch;
        for (const auto& term : arr) {
            if (!term.is_array() || term.size() != 2 || !term[1].is_number_integer())
                throw CliError(kParseError, "parse",
                               path + ": each term must be [exponent, integer coefficient]");
            Rational e;
            try {
                e = term[0].is_number_integer() ? Rational(term[0].get<long long>())
                                                : Rational::parse(term[0].get<std::string>());
            } catch (const std::exception& ex) {
                throw CliError(kParseError, "parse", path + ": bad exponent: " + ex.what());
            }
            ch.emplace_back(e, term[1].get<long long>());
        }
        out[label] = std::move(ch);
    }
    return out;
}

nlohmann::json expansion_json(const QExpansion& ch) {
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : ch) arr.push_back({e.str(), c});
    return arr;
}

void emit(const nlohmann::json& doc, const std::string& text, bool json) {
    if (json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int run_validate(const std::string& path, bool json) {
    FusionDatum d = load_datum(path);
    ClassificationReport rep = classify_checked(d); // runs every structural check
    std::ostringstream text;
    text << "ok: group " << d.group().str() << ", " << d.labels().size() << " labels, "
         << rep.orbits.size() << " orbits, cocycle "
         << (rep.trivial_cocycle ? "trivial" : "nontrivial") << "\n";
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& o : rep.orbits) {
        text << "orbit " << o.orbit.representative << "  D_W "
             << invariants_str(o.stabilizer_invariants) << "  radical " << o.radical_order
             << "  modules " << o.modules.size() << "\n";
        orbits.push_back({{"representative", o.orbit.representative},
                          {"stabilizer", invariants_str(o.stabilizer_invariants)},
                          {"radical_order", o.radical_order},
                          {"modules", o.modules.size()}});
    }
    nlohmann::json doc = {{"ok", true},
                          {"group", d.group().str()},
                          {"labels", d.labels().size()},
                          {"cocycle_class", rep.trivial_cocycle ? "trivial" : "nontrivial"},
                          {"orbits", orbits}};
    emit(doc, text.str(), json);
    return kOk;
}

int run_classify(const std::string& path, const std::string& orbit, bool json) {
    ClassificationReport rep = classify_checked(load_datum(path));
    if (!orbit.empty()) filter_orbit(rep, orbit);
    emit(rep.to_json(), rep.to_text(), json);
    return kOk;
}

int run_fusion(const std::string& path, const std::string& n1, const std::string& n2,
               const std::string& n3, bool json) {
    FusionDatum d = load_datum(path);
    ClassificationReport rep = classify_checked(d);
    FusionResult r;
    try {
        r = fusion_dim(d, module_by_id(rep, n1), module_by_id(rep, n2), module_by_id(rep, n3));
    } catch (const ValidationError& e) {
        throw CliError(kValidationError, "validation", e.what());
    }
    std::ostringstream text;
    text << "fusion " << r.total << "\n";
    auto summands = nlohmann::json::array();
    for (const auto& [a, n] : r.summands) {
        text << "  alpha " << FiniteAbelianGroup::elem_str(a) << ": " << n << "\n";
        summands.push_back({{"alpha", a}, {"n", n}});
    }
    emit({{"total", r.total}, {"summands", summands}}, text.str(), json);
    return kOk;
}

int run_character(const std::string& path, const std::string& id, const std::string& chars_path,
                  const std::string& truncate, bool json) {
    FusionDatum d = load_datum(path);
    ClassificationReport rep = classify_checked(d);
    const ModuleDescriptor& m = module_by_id(rep, id);
    Rational bound;
    try {
        bound = Rational::parse(truncate);
    } catch (const std::exception& e) {
        throw CliError(kUsageError, "usage", std::string("bad --truncate: ") + e.what());
    }
    QExpansion ch;
    try {
        ch = graded_character(d, m, load_characters(chars_path), bound);
    } catch (const ValidationError& e) {
        throw CliError(kValidationError, "validation", e.what());
    }
    std::ostringstream text;
    text << "character " << m.id << " up to q^" << bound.str() << "\n";
    for (const auto& [e, c] : ch) text << "  q^" << e.str() << " " << c << "\n";
    emit({{"module", m.id}, {"truncation", bound.str()}, {"expansion", expansion_json(ch)}},
         text.str(), json);
    return kOk;
}

int run_report(const std::string& path, const std::string& orbit, const std::string& chars_path,
               const std::string& truncate, bool json) {
    FusionDatum d = load_datum(path);
    ClassificationReport rep = classify_checked(d);
    if (!orbit.empty()) filter_orbit(rep, orbit);
    nlohmann::json doc = rep.to_json();
    std::string text = rep.to_text();
    if (!chars_path.empty()) {
        Rational bound;
        try {
            bound = Rational::parse(truncate);
        } catch (const std::exception& e) {
            throw CliError(kUsageError, "usage",
                           std::string("--characters needs a valid --truncate: ") + e.what());
        }
        auto chars = load_characters(chars_path);
        nlohmann::json per_module = nlohmann::json::object();
        std::ostringstream extra;
        extra << "\ncharacters up to q^" << bound.str() << "\n";
        for (const auto& o : rep.orbits)
            for (const auto& m : o.modules) {
                bool covered = true;
                for (const auto& [label, _] : m.decomposition)
                    if (!chars.count(label)) covered = false;
                if (!covered) continue;
                QExpansion ch;
                try {
                    ch = graded_character(d, m, chars, bound);
                } catch (const ValidationError& e) {
                    throw CliError(kValidationError, "validation", e.what());
                }
                per_module[m.id] = expansion_json(ch);
                extra << "  " << m.id << ":";
                for (const auto& [e, c] : ch) extra << " q^" << e.str() << " " << c << ";";
                extra << "\n";
            }
        doc["characters"] = std::move(per_module);
        text += extra.str();
    }
    emit(doc, text, json);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of module categories of D-graded simple current extensions"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    long long cap = 0;
    app.add_option("--max-group-order", cap, "override the group order cap (default 512)");

    std::string path, orbit, n1, n2, n3, module_id, chars_path, truncate;

    auto* validate = app.add_subcommand("validate", "check a datum and report its orbits");
    validate->add_option("input", path, "datum JSON file")->required();

    auto* classify = app.add_subcommand("classify", "classify all modules of the extension");
    classify->add_option("input", path, "datum JSON file")->required();
    classify->add_option("--orbit", orbit, "restrict to one orbit representative");

    auto* fusion = app.add_subcommand("fusion", "fusion dimension of a stable module triple");
    fusion->add_option("input", path, "datum JSON file")->required();
    fusion->add_option("--n1", n1, "first module id")->required();
    fusion->add_option("--n2", n2, "second module id")->required();
    fusion->add_option("--n3", n3, "target module id")->required();

    auto* character = app.add_subcommand("character", "truncated graded character of a module");
    character->add_option("input", path, "datum JSON file")->required();
    character->add_option("--module", module_id, "module id")->required();
    character->add_option("--characters", chars_path, "component character JSON file")->required();
    character->add_option("--truncate", truncate, "exponent bound (rational)")->required();

    auto* report = app.add_subcommand("report", "classification with optional characters");
    report->add_option("input", path, "datum JSON file")->required();
    report->add_option("--orbit", orbit, "restrict to one orbit representative");
    report->add_option("--characters", chars_path, "component character JSON file");
    report->add_option("--truncate", truncate, "exponent bound (rational)");

    // global flags remain usable after the subcommand name
    for (auto* sub : {validate, classify, fusion, character, report}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kUsageError;
    }

    bool json = format == "json";
    try {
        if (cap > 0) set_group_order_cap(cap);
        if (app.got_subcommand(validate)) return run_validate(path, json);
        if (app.got_subcommand(classify)) return run_classify(path, orbit, json);
        if (app.got_subcommand(fusion)) return run_fusion(path, n1, n2, n3, json);
        if (app.got_subcommand(character))
            return run_character(path, module_id, chars_path, truncate, json);
        return run_report(path, orbit, chars_path, truncate, json);
    } catch (const CliError& e) {
        nlohmann::json err = {
            {"error", {{"code", e.code}, {"kind", e.kind}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return e.code;
    } catch (const ValidationError& e) {
        nlohmann::json err = {
            {"error", {{"code", kValidationError}, {"kind", "validation"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return kValidationError;
    }
}
