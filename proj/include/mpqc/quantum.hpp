#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpqc/linear_code.hpp"

namespace mpqc {

/// [[n, k, d]] as stated somewhere (a formula, a table, a construction).
struct ParamTriple {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::optional<std::int64_t> d;

    friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

/// A claim that disagrees with what was computed.
struct Discrepancy {
    ParamTriple claimed;
    ParamTriple computed;
    std::string source;
    std::map<std::string, std::int64_t> inputs;
    std::string note;
};

struct QuantumParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::size_t d_lower = 0;
    std::optional<std::size_t> d_exact;  ///< never populated by the constructions here
    std::uint32_t base = 0;
    std::string provenance;
    bool verified = false;
    std::optional<Discrepancy> discrepancy;

    ParamTriple triple() const { return {n, k, static_cast<std::int64_t>(d_lower)}; }
};

/// Dual-containing [n, k, d] over GF(l^2) -> [[n, 2k - n, >= d]]_l. Refuses
/// (std::invalid_argument) codes that fail the explicit containment check or
/// carry no distance bound; the record is checked against the Singleton bound.
QuantumParams hermitian_construction(const LinearCode& c, const DistanceReport& d, std::string provenance);

struct SingletonResult {
    std::int64_t defect = 0;   ///< n - k + 2 - 2d
    bool is_mds = false;       ///< defect 0 with an exact distance
    bool approximate = false;  ///< defect computed from d_lower
};

/// Throws consistency_error when 2d > n - k + 2.
SingletonResult singleton_check(const QuantumParams& qp);
SingletonResult singleton_check(const ParamTriple& p, bool exact);

/// Every QuantumParams produced by this library during the process lifetime.
std::vector<QuantumParams> emitted_quantum_records();
void record_emission(const QuantumParams& qp);

enum class Case35 { i, ii, iii, iv, v, vi };

std::string to_string(Case35 c);
/// Accepts "i".."vi"; throws std::invalid_argument otherwise.
Case35 case35_from_string(const std::string& s);

/// Formula parameters; verified is false. Throws std::invalid_argument when l
/// is not an odd prime power, d is outside [4, l] ([4, l+1] for v and vi) or
/// has the wrong residue mod 4.
QuantumParams theorem35_params(std::uint32_t l, std::uint32_t d, Case35 c);

/// Component designed distances for the recipe: d/4, d/2, d/2, d or the (d+1) variants.
std::vector<std::uint32_t> theorem35_component_distances(std::uint32_t d, Case35 c);
/// Component length: l^2-1 (i, ii), l^2 (iii, iv), l^2+1 (v, vi).
std::size_t theorem35_component_length(std::uint32_t l, Case35 c);

/// A Table 1 row: the formula inputs and both transcribed columns.
struct Table1Row {
    std::uint32_t l;
    std::uint32_t d;
    Case35 c;
    ParamTriple new_code;   ///< left column, d is the ">=" bound
    ParamTriple reference;  ///< right column, transcribed
};

const std::vector<Table1Row>& table1_rows();

}  // namespace mpqc
