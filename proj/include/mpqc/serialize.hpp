#pragma once

#include <string>

#include "json.hpp"
#include "mpqc/linear_code.hpp"
#include "mpqc/negacyclic.hpp"
#include "mpqc/quantum.hpp"

namespace mpqc {

using json = nlohmann::ordered_json;

/// {p, m, modulus: [c0..cm]}
json field_to_json(const Field& f);
/// Rebuilds the cached field; throws std::invalid_argument if the modulus is
/// not the canonical one for (p, m).
FieldPtr field_from_json(const json& j);

/// {rows, cols, entries: [[coeff-arrays]]}
json matrix_to_json(const Matrix& m);
/// Throws std::invalid_argument on shape or coefficient errors.
Matrix matrix_from_json(const json& j, const FieldPtr& field);

json distance_to_json(const DistanceReport& d);

/// {field, n, k, gen, d: {lower, upper, provenance}}
json code_to_json(const LinearCode& c, const DistanceReport& d);

/// A code record read back without trusting its claims.
struct CodeRecord {
    LinearCode code;
    std::size_t claimed_n = 0;
    std::size_t claimed_k = 0;
    std::size_t gen_rows = 0;
    std::optional<std::size_t> claimed_lower;
    std::optional<std::size_t> claimed_upper;
};

/// Throws std::invalid_argument on malformed input (missing keys, bad
/// coefficients, shape errors). Claimed values are returned for checking.
CodeRecord code_record_from_json(const json& j);

json defining_set_to_json(const DefiningSet& z);
json triple_to_json(const ParamTriple& p);
json discrepancy_to_json(const Discrepancy& d);
/// {n, k, d_lower, d_exact?, base, provenance, verified, discrepancy?}
json quantum_to_json(const QuantumParams& q);

}  // namespace mpqc
