#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpqc/serialize.hpp"

namespace mpqc {

enum class Suite { fields, duals, mpc, negacyclic, quantum, all };

std::string to_string(Suite s);
/// Throws std::invalid_argument for an unknown name.
Suite suite_from_string(const std::string& s);

struct CheckResult {
    std::string suite;
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;     ///< skipped or gap instances, not failures
    std::vector<std::string> messages;  ///< first failures, in instance order
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<QuantumParams> quantum;  ///< records produced by the run

    std::size_t failures() const noexcept;
    bool passed() const noexcept { return failures() == 0; }
    const CheckResult* find(const std::string& name) const noexcept;
};

/// Runs the property batteries with per-instance streams derived from seed.
/// Every code with q^k <= 10^5 produced by a suite is also cross-checked
/// against the exhaustive oracle. The report is a pure function of (suite, seed).
VerifyReport run_verify(Suite suite, std::uint64_t seed);

/// Checks a fixture of code records ({"codes": [...]}, an array, or a single record):
/// well-formedness, k = rank(gen) = number of rows, and the claimed distance
/// bounds against the oracle where affordable.
VerifyReport verify_fixture(const json& doc, const Budgets& budgets = {});

json verify_report_to_json(const VerifyReport& r);

}  // namespace mpqc
