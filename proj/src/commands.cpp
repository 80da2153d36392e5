#include "mpqc/commands.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mpqc/errors.hpp"
#include "mpqc/matrix_product.hpp"
#include "mpqc/parallel.hpp"
#include "mpqc/theorems.hpp"
#include "mpqc/verify.hpp"

namespace mpqc {

std::string to_string(Format f) {
    switch (f) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::md: return "md";
    }
    return "unknown";
}

Format format_from_string(const std::string& s) {
    for (auto f : {Format::json, Format::csv, Format::md})
        if (to_string(f) == s) return f;
    throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or md)");
}

void RunConfig::validate() const {
    if (budget.distance.enumeration == 0 || budget.distance.subsets == 0 || budget.combinations == 0 ||
        budget.arc_nodes == 0)
        throw std::invalid_argument("budgets must be positive");
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string render(const RunConfig& cfg, const json& doc, const std::string& title, const Table& table,
                   const std::vector<Table>& extra = {}) {
    switch (cfg.format) {
        case Format::json: return doc.dump(2) + "\n";
        case Format::csv: {
            std::string out = render_csv(table);
            for (const auto& t : extra) out += "\n" + render_csv(t);
            return out;
        }
        case Format::md: {
            std::string out = "## " + title + "\n\n" + render_md(table);
            for (const auto& t : extra) out += "\n" + render_md(t);
            return out;
        }
    }
    return {};
}

std::string discrepancy_text(const Discrepancy& d, std::uint32_t base) {
    return d.source + ": claimed " + format_quantum(d.claimed, base) + ", computed " +
           format_quantum(d.computed, base) + (d.note.empty() ? "" : " (" + d.note + ")");
}

json family_json(const FamilyCode& c) {
    json out = {{"n", c.code.length()},
                {"k", c.code.dimension()},
                {"designed_distance", c.designed_distance},
                {"distance", distance_to_json(c.distance)},
                {"realization", c.realization}};
    if (c.defining) out["defining_set"] = defining_set_to_json(*c.defining);
    return out;
}

json product_json(const ProductCode& p) {
    return {{"n", p.code.length()},
            {"k", p.code.dimension()},
            {"distance", distance_to_json(p.distance)},
            {"matrix", matrix_to_json(p.spec.matrix())},
            {"frr", p.spec.frr()},
            {"nsc", p.spec.nsc()},
            {"upper_triangular", p.spec.upper_triangular()},
            {"diagonal_condition", p.spec.diagonal_condition()},
            {"hermitian_dual_containing", true}};
}

}  // namespace

std::string render_csv(const Table& t) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << "\n";
    };
    line(t.headers);
    for (const auto& r : t.rows) line(r);
    return out.str();
}

std::string render_md(const Table& t) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        out << "|";
        for (const auto& c : cells) out << " " << md_cell(c) << " |";
        out << "\n";
    };
    line(t.headers);
    out << "|";
    for (std::size_t i = 0; i < t.headers.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& r : t.rows) line(r);
    return out.str();
}

std::string format_quantum(const ParamTriple& p, std::uint32_t base) {
    std::string s = "[[" + std::to_string(p.n) + "," + std::to_string(p.k);
    if (p.d) s += ",>=" + std::to_string(*p.d);
    return s + "]]_" + std::to_string(base);
}

// ---------------------------------------------------------------- table1

CommandResult cmd_table1(const RunConfig& cfg) {
    cfg.validate();
    const auto& rows = table1_rows();
    struct RowOut {
        QuantumParams formula;
        ParamTriple recipe;
        std::optional<QuantumParams> built;
        std::string status;
        std::string note;
    };
    std::vector<RowOut> out(rows.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        const auto& r = rows[i];
        auto& o = out[i];
        o.formula = theorem35_params(r.l, r.d, r.c);
        o.recipe = theorem35_recipe_params(r.l, r.d, r.c);
        o.status = "formula-only";
        if (r.l != 5 && !cfg.deep) return;
        try {
            auto b = theorem35_build(r.l, r.d, r.c, cfg.budget);
            o.built = b.built;
            o.status = "verified";
        } catch (const budget_exceeded& e) {
            o.note = std::string("budget exceeded: ") + e.what();
        } catch (const construction_gap& e) {
            o.note = std::string("construction gap: ") + e.what();
        } catch (const std::invalid_argument& e) {
            o.note = std::string("not constructible: ") + e.what();
        }
    });

    bool discrepancies = false;
    json doc = {{"command", "table1"}, {"deep", cfg.deep}, {"rows", json::array()}};
    Table table{{"l", "d", "case", "formula", "transcribed", "formula_matches", "recipe", "built", "status",
                 "reference", "note"},
                {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        auto& o = out[i];
        const bool matches = o.formula.n == r.new_code.n && o.formula.k == r.new_code.k;
        std::vector<Discrepancy> found;
        const std::map<std::string, std::int64_t> inputs{{"l", r.l}, {"d", r.d}};
        if (!matches)
            found.push_back({r.new_code, o.formula.triple(), "table1", inputs, "formula differs from the transcribed row"});
        if (!(o.recipe == r.new_code))
            found.push_back({r.new_code, o.recipe, "theorem-3.5(" + to_string(r.c) + ") recipe", inputs,
                             "component dimensions give a different k"});
        if (o.built && o.built->discrepancy) found.push_back(*o.built->discrepancy);
        if (!found.empty()) {
            discrepancies = true;
            if (o.status == "verified") o.status = "verified-with-discrepancy";
        }
        json row = {{"l", r.l},
                    {"d", r.d},
                    {"case", to_string(r.c)},
                    {"formula", quantum_to_json(o.formula)},
                    {"transcribed", triple_to_json(r.new_code)},
                    {"formula_matches", matches},
                    {"recipe", triple_to_json(o.recipe)},
                    {"built", o.built ? quantum_to_json(*o.built) : json(nullptr)},
                    {"status", o.status},
                    {"reference", triple_to_json(r.reference)},
                    {"reference_source", "transcribed"},
                    {"discrepancies", json::array()},
                    {"note", o.note}};
        std::string notes = o.note;
        for (const auto& d : found) {
            row["discrepancies"].push_back(discrepancy_to_json(d));
            notes += (notes.empty() ? "" : "; ") + discrepancy_text(d, r.l);
        }
        doc["rows"].push_back(std::move(row));
        table.rows.push_back({std::to_string(r.l), std::to_string(r.d), to_string(r.c),
                              format_quantum(o.formula.triple(), r.l), format_quantum(r.new_code, r.l),
                              bool_str(matches), format_quantum(o.recipe, r.l),
                              o.built ? format_quantum(o.built->triple(), r.l) : "-", o.status,
                              format_quantum(r.reference, r.l), notes});
    }
    doc["exit_code"] = discrepancies ? 2 : 0;
    return {discrepancies ? 2 : 0, render(cfg, doc, "Table 1", table)};
}

// --------------------------------------------------------------- example

namespace {

json main_result_json(const MainResult& r) {
    json defining = json::array();
    for (const auto& z : r.defining) defining.push_back(defining_set_to_json(z));
    json out = {{"theorem", to_string(r.theorem)},
                {"l", r.l},
                {"delta", r.delta},
                {"defining_sets", std::move(defining)},
                {"dims", r.dims},
                {"distances", r.distances},
                {"built", r.built},
                {"computed", quantum_to_json(r.computed)},
                {"formula", triple_to_json(r.formula)}};
    if (r.classical) {
        out["classical"] = {{"n", r.classical->length()},
                            {"k", r.classical->dimension()},
                            {"distance", distance_to_json(*r.classical_distance)},
                            {"hermitian_dual_containing", true}};
    }
    if (r.discrepancy) out["discrepancy"] = discrepancy_to_json(*r.discrepancy);
    return out;
}

std::string delta_text(const std::array<std::uint32_t, 3>& d) {
    return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
}

}  // namespace

CommandResult cmd_example(const RunConfig& cfg) {
    cfg.validate();
    const auto& claims = example_claims(cfg.which);
    std::size_t n = 0;
    for (const auto& [l, rows] : claims)
        if (l == cfg.l && !rows.empty()) n = static_cast<std::size_t>(rows.front().n);
    const bool build = cfg.deep || n <= default_build_length;
    const auto mode = cfg.strict ? DeltaMode::strict : DeltaMode::relaxed;
    const auto report = run_example(cfg.which, cfg.l, mode, build, cfg.budget.distance);

    bool discrepancies = false;
    json doc = {{"command", "example"},
                {"which", report.which},
                {"l", report.l},
                {"mode", cfg.strict ? "strict" : "relaxed"},
                {"built", report.built},
                {"admissible_triples", report.admissible},
                {"claims", json::array()}};
    Table table{{"claimed", "delta", "computed", "verified", "formula", "status", "note"}, {}};
    for (const auto& c : report.claims) {
        json row = {{"claimed", triple_to_json(c.claimed)}, {"best", nullptr}, {"discrepancy", nullptr}};
        if (c.best) row["best"] = main_result_json(*c.best);
        if (c.discrepancy) {
            row["discrepancy"] = discrepancy_to_json(*c.discrepancy);
            discrepancies = true;
        }
        doc["claims"].push_back(std::move(row));
        const std::string status = !c.best ? "unreachable" : c.discrepancy ? "discrepancy" : "matches";
        table.rows.push_back({format_quantum(c.claimed, report.l), c.best ? delta_text(c.best->delta) : "-",
                              c.best ? format_quantum(c.best->computed.triple(), report.l) : "-",
                              c.best ? bool_str(c.best->computed.verified) : "-",
                              c.best ? format_quantum(c.best->formula, report.l) : "-", status,
                              c.discrepancy ? c.discrepancy->note : ""});
    }
    if (report.admissible == 0) doc["note"] = "no admissible delta triple";
    doc["exit_code"] = discrepancies ? 2 : 0;
    const std::string title = "Example " + report.which + ", l = " + std::to_string(report.l) +
                              (cfg.strict ? " (strict)" : " (relaxed)") +
                              (report.admissible == 0 ? ": no admissible delta triple" : "");
    return {discrepancies ? 2 : 0, render(cfg, doc, title, table)};
}

// ----------------------------------------------------------------- build

namespace {

Table key_values(const std::vector<std::pair<std::string, std::string>>& kv) {
    Table t{{"key", "value"}, {}};
    for (const auto& [k, v] : kv) t.rows.push_back({k, v});
    return t;
}

CommandResult build_35(const RunConfig& cfg) {
    const auto c = case35_from_string(cfg.case35);
    const auto b = theorem35_build(cfg.l, cfg.d, c, cfg.budget);
    json comps = json::array();
    Table ct{{"component", "n", "k", "designed", "lower", "provenance", "realization"}, {}};
    for (std::size_t i = 0; i < b.components.size(); ++i) {
        const auto& fc = b.components[i];
        comps.push_back(family_json(fc));
        ct.rows.push_back({std::to_string(i + 1), std::to_string(fc.code.length()), std::to_string(fc.code.dimension()),
                           std::to_string(fc.designed_distance), std::to_string(*fc.distance.lower),
                           std::string(to_string(fc.distance.lower_source)), fc.realization});
    }
    json doc = {{"command", "build"},
                {"theorem", "3.5"},
                {"l", cfg.l},
                {"d", cfg.d},
                {"case", cfg.case35},
                {"components", std::move(comps)},
                {"product", product_json(b.product)},
                {"formula", quantum_to_json(b.formula)},
                {"quantum", quantum_to_json(b.built)}};
    const int code = b.built.discrepancy ? 2 : 0;
    doc["exit_code"] = code;
    auto kv = key_values({{"product", "[" + std::to_string(b.product.code.length()) + "," +
                                          std::to_string(b.product.code.dimension()) + ",>=" +
                                          std::to_string(*b.product.distance.lower) + "]"},
                          {"formula", format_quantum(b.formula.triple(), cfg.l)},
                          {"quantum", format_quantum(b.built.triple(), cfg.l)},
                          {"verified", bool_str(b.built.verified)},
                          {"discrepancy", b.built.discrepancy ? discrepancy_text(*b.built.discrepancy, cfg.l) : "none"}});
    return {code, render(cfg, doc, "Theorem 3.5(" + cfg.case35 + ") at l = " + std::to_string(cfg.l) + ", d = " +
                                       std::to_string(cfg.d),
                         kv, {ct})};
}

CommandResult build_main(const RunConfig& cfg, MainTheorem t) {
    const auto mode = cfg.strict ? DeltaMode::strict : DeltaMode::relaxed;
    const std::size_t n = t == MainTheorem::main2 ? 3 * (std::size_t{cfg.l} * cfg.l + 1)
                                                  : 3 * ((std::size_t{cfg.l} * cfg.l + 1) / 2);
    const bool build = cfg.deep || n <= default_build_length;
    const auto r = theorem_main_construct(t, cfg.l, cfg.delta, mode, build, cfg.budget.distance);
    json doc = main_result_json(r);
    doc["command"] = "build";
    const int code = r.discrepancy ? 2 : 0;
    doc["exit_code"] = code;
    auto kv = key_values({{"delta", delta_text(r.delta)},
                          {"built", bool_str(r.built)},
                          {"computed", format_quantum(r.computed.triple(), cfg.l)},
                          {"verified", bool_str(r.computed.verified)},
                          {"formula", format_quantum(r.formula, cfg.l)},
                          {"discrepancy", r.discrepancy ? discrepancy_text(*r.discrepancy, cfg.l) : "none"}});
    return {code, render(cfg, doc, to_string(t) + " at l = " + std::to_string(cfg.l), kv)};
}

// Corollary 3.2 product of Lemma 3.3(i) codes with the given designed distances.
CommandResult build_31(const RunConfig& cfg) {
    if (cfg.components.size() != 4) throw std::invalid_argument("theorem 3.1 build takes four component distances");
    std::vector<LinearCode> codes;
    std::vector<std::size_t> dist;
    json comps = json::array();
    for (auto d : cfg.components) {
        auto fc = lemma33_code(cfg.l, d, Lemma33Variant::i, cfg.budget);
        comps.push_back(family_json(fc));
        codes.push_back(fc.code);
        dist.push_back(*fc.distance.lower);
    }
    auto p = corollary32_construct(codes, dist);
    std::vector<std::size_t> ua;
    for (std::size_t k = 1; k <= p.spec.s(); ++k)
        ua.push_back(*min_distance_exhaustive(ua_code(p.spec.matrix(), k)).lower);
    const auto q = hermitian_construction(p.code, p.distance, "theorem-3.1 build");
    json doc = {{"command", "build"},
                {"theorem", "3.1"},
                {"l", cfg.l},
                {"components", std::move(comps)},
                {"ua_distances", ua},
                {"product", product_json(p)},
                {"quantum", quantum_to_json(q)},
                {"exit_code", 0}};
    auto kv = key_values({{"product", "[" + std::to_string(p.code.length()) + "," + std::to_string(p.code.dimension()) +
                                          ",>=" + std::to_string(*p.distance.lower) + "]"},
                          {"quantum", format_quantum(q.triple(), cfg.l)},
                          {"verified", bool_str(q.verified)}});
    return {0, render(cfg, doc, "Theorem 3.1 with the character matrix at l = " + std::to_string(cfg.l), kv)};
}

// Theorem main1 on a chain of the negacyclic family for l (kai1 if l = 1 mod 4, else kai2).
CommandResult build_main1(const RunConfig& cfg) {
    const std::size_t s = cfg.delta.size();
    const auto f = square_field(cfg.l);
    const bool kai1 = cfg.l % 4 == 1;
    std::vector<LinearCode> codes;
    std::vector<std::size_t> dist;
    json defs = json::array();
    for (auto delta : cfg.delta) {
        const auto z = kai1 ? kai1_defining_set(cfg.l, delta) : kai2_defining_set(cfg.l, delta);
        auto nc = negacyclic_code(f, z);
        dist.push_back(*certify_distance(nc.code, cfg.budget.distance, bch_like_bound(z), LowerSource::bch).lower);
        codes.push_back(std::move(nc.code));
        defs.push_back(defining_set_to_json(z));
    }
    auto p = theorem_main1_construct(codes, main_triangular_matrix(f, s), dist);
    const auto q = hermitian_construction(p.code, p.distance, "theorem-main1 build");
    json doc = {{"command", "build"},
                {"theorem", "main1"},
                {"l", cfg.l},
                {"family", kai1 ? "kai1" : "kai2"},
                {"defining_sets", std::move(defs)},
                {"component_distances", dist},
                {"product", product_json(p)},
                {"quantum", quantum_to_json(q)},
                {"exit_code", 0}};
    auto kv = key_values({{"product", "[" + std::to_string(p.code.length()) + "," + std::to_string(p.code.dimension()) +
                                          ",>=" + std::to_string(*p.distance.lower) + "]"},
                          {"quantum", format_quantum(q.triple(), cfg.l)},
                          {"verified", bool_str(q.verified)}});
    return {0, render(cfg, doc, "Theorem main1 at l = " + std::to_string(cfg.l), kv)};
}

}  // namespace

CommandResult cmd_build(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.theorem == "3.5") return build_35(cfg);
    if (cfg.theorem == "3.1") return build_31(cfg);
    if (cfg.theorem == "main1") return build_main1(cfg);
    if (cfg.theorem == "main2") return build_main(cfg, MainTheorem::main2);
    if (cfg.theorem == "main3") return build_main(cfg, MainTheorem::main3);
    throw std::invalid_argument("unknown theorem '" + cfg.theorem + "' (expected 3.1, 3.5, main1, main2 or main3)");
}

// ---------------------------------------------------------------- verify

CommandResult cmd_verify(const RunConfig& cfg) {
    cfg.validate();
    VerifyReport report;
    if (cfg.fixture) {
        std::ifstream in(*cfg.fixture);
        if (!in) throw std::invalid_argument("cannot open fixture " + *cfg.fixture);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument("fixture is not valid JSON: " + std::string(e.what()));
        }
        report = verify_fixture(doc, cfg.budget.distance);
    } else {
        report = run_verify(suite_from_string(cfg.suite), cfg.seed);
    }
    Table table{{"suite", "check", "instances", "failures", "notes", "first_failure"}, {}};
    for (const auto& c : report.checks)
        table.rows.push_back({c.suite, c.name, std::to_string(c.instances), std::to_string(c.failures),
                              std::to_string(c.notes.size()), c.messages.empty() ? "" : c.messages.front()});
    const int code = report.passed() ? 0 : 1;
    json doc = verify_report_to_json(report);
    doc["exit_code"] = code;
    return {code, render(cfg, doc, "verify " + report.suite + " (seed " + std::to_string(report.seed) + ")", table)};
}

}  // namespace mpqc
