#include "mpqc/serialize.hpp"

#include <stdexcept>
#include <string>

namespace mpqc {

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
    return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
    try {
        return require(j, key).get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad value for '") + key + "': " + e.what());
    }
}

std::optional<std::size_t> optional_size(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return get_as<std::size_t>(j, key);
}

}  // namespace

json field_to_json(const Field& f) {
    return {{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const json& j) {
    const auto p = get_as<std::uint32_t>(j, "p");
    const auto m = get_as<std::uint32_t>(j, "m");
    const auto modulus = get_as<std::vector<std::uint32_t>>(j, "modulus");
    if (!is_prime(p) || m == 0) throw std::invalid_argument("field needs a prime p and m >= 1");
    auto f = Field::create(p, m);
    if (f->modulus() != modulus) throw std::invalid_argument("modulus is not the canonical one for " + f->name());
    return f;
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (auto v : m.row(i)) row.push_back(m.field()->coeffs(v));
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j, const FieldPtr& field) {
    const auto rows = get_as<std::size_t>(j, "rows");
    const auto cols = get_as<std::size_t>(j, "cols");
    const auto& entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("matrix entries do not have " + std::to_string(rows) + " rows");
    Matrix out(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix row " + std::to_string(i + 1) + " does not have " +
                                        std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<std::uint32_t> coeffs;
            try {
                coeffs = row[c].get<std::vector<std::uint32_t>>();
            } catch (const json::exception&) {
                throw std::invalid_argument("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(c + 1) +
                                            ") is not a coefficient array");
            }
            out(i, c) = field->from_coeffs(coeffs);
        }
    }
    return out;
}

json distance_to_json(const DistanceReport& d) {
    json out = {{"lower", nullptr}, {"upper", nullptr}, {"provenance", {{"lower", nullptr}, {"upper", nullptr}}}};
    if (d.lower) {
        out["lower"] = *d.lower;
        out["provenance"]["lower"] = std::string(to_string(d.lower_source));
    }
    if (d.upper) {
        out["upper"] = *d.upper;
        out["provenance"]["upper"] = std::string(to_string(d.upper_source));
    }
    return out;
}

json code_to_json(const LinearCode& c, const DistanceReport& d) {
    return {{"field", field_to_json(*c.field())},
            {"n", c.length()},
            {"k", c.dimension()},
            {"gen", matrix_to_json(c.generator())},
            {"d", distance_to_json(d)}};
}

CodeRecord code_record_from_json(const json& j) {
    auto field = field_from_json(require(j, "field"));
    const auto& gen_json = require(j, "gen");
    auto gen = matrix_from_json(gen_json, field);
    CodeRecord r{LinearCode::from_generator(gen), get_as<std::size_t>(j, "n"), get_as<std::size_t>(j, "k"), gen.rows(),
                 std::nullopt, std::nullopt};
    if (gen.cols() != r.claimed_n)
        throw std::invalid_argument("generator has " + std::to_string(gen.cols()) + " columns for n = " +
                                    std::to_string(r.claimed_n));
    if (j.contains("d")) {
        r.claimed_lower = optional_size(j.at("d"), "lower");
        r.claimed_upper = optional_size(j.at("d"), "upper");
    }
    return r;
}

json defining_set_to_json(const DefiningSet& z) {
    return {{"n", z.n}, {"q", z.q}, {"residues", z.residues}};
}

json triple_to_json(const ParamTriple& p) {
    json out = {{"n", p.n}, {"k", p.k}, {"d", nullptr}};
    if (p.d) out["d"] = *p.d;
    return out;
}

json discrepancy_to_json(const Discrepancy& d) {
    json inputs = json::object();
    for (const auto& [k, v] : d.inputs) inputs[k] = v;
    return {{"claimed", triple_to_json(d.claimed)},
            {"computed", triple_to_json(d.computed)},
            {"source", d.source},
            {"inputs", std::move(inputs)},
            {"note", d.note}};
}

json quantum_to_json(const QuantumParams& q) {
    json out = {{"n", q.n}, {"k", q.k}, {"d_lower", q.d_lower}};
    if (q.d_exact) out["d_exact"] = *q.d_exact;
    out["base"] = q.base;
    out["provenance"] = q.provenance;
    out["verified"] = q.verified;
    if (q.discrepancy) out["discrepancy"] = discrepancy_to_json(*q.discrepancy);
    return out;
}

}  // namespace mpqc
