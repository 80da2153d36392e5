#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpqc/code_constructions.hpp"
#include "mpqc/matrix_product.hpp"
#include "mpqc/negacyclic.hpp"
#include "mpqc/quantum.hpp"

namespace mpqc {

struct Theorem35Build {
    QuantumParams formula;
    QuantumParams built;  ///< carries a discrepancy when it disagrees with the formula
    std::vector<FamilyCode> components;
    ProductCode product;
};

/// Parameters the component recipe yields if every component is MDS of its
/// designed distance: k = 2 sum k_j - 4N with k_j = N + 1 - d_j.
ParamTriple theorem35_recipe_params(std::uint32_t l, std::uint32_t d, Case35 c);

/// Builds the four components of the recipe, combines them with the character
/// matrix and applies the Hermitian construction. Throws construction_gap or
/// budget_exceeded when a component cannot be realized.
Theorem35Build theorem35_build(std::uint32_t l, std::uint32_t d, Case35 c, const SearchBudget& budget = {});

enum class DeltaMode { strict, relaxed };

enum class MainTheorem { main2, main3 };

std::string to_string(MainTheorem t);

/// Admissible depths: main2 strict 1 <= d1 < d2 < d3 <= (l-1)/2, relaxed
/// 0 <= d1 <= d2 <= d3; main3 strict as main2, relaxed 1 <= d1 <= d2 <= d3.
bool admissible_deltas(MainTheorem t, std::uint32_t l, const std::array<std::uint32_t, 3>& delta, DeltaMode mode);
std::vector<std::array<std::uint32_t, 3>> admissible_triples(MainTheorem t, std::uint32_t l, DeltaMode mode);

struct MainResult {
    MainTheorem theorem;
    std::uint32_t l = 0;
    std::array<std::uint32_t, 3> delta{};
    std::vector<DefiningSet> defining;
    std::vector<std::size_t> dims;       ///< n - |Z_j|
    std::vector<std::size_t> distances;  ///< component lower bounds
    bool built = false;                  ///< codes constructed and checked, not only predicted
    std::optional<LinearCode> classical;
    std::optional<DistanceReport> classical_distance;
    QuantumParams computed;
    ParamTriple formula;  ///< the theorem's closed form
    std::optional<Discrepancy> discrepancy;
};

/// Main2: kai1 components of length l^2+1 (l = 1 mod 4). Main3: kai2 components
/// of length (l^2+1)/2 (odd prime power l >= 7). With build = false the result
/// is predicted from coset sizes and BCH bounds and is not marked verified.
MainResult theorem_main_construct(MainTheorem t, std::uint32_t l, const std::array<std::uint32_t, 3>& delta,
                                  DeltaMode mode, bool build = true, const Budgets& budgets = {});

struct ExampleClaim {
    ParamTriple claimed;
    std::optional<MainResult> best;  ///< absent when no admissible triple reaches the claimed distance
    std::optional<Discrepancy> discrepancy;
};

struct ExampleReport {
    std::string which;  ///< "3.8" or "3.10"
    std::uint32_t l = 0;
    DeltaMode mode = DeltaMode::relaxed;
    bool built = false;
    std::size_t admissible = 0;  ///< number of admissible depth triples
    std::vector<ExampleClaim> claims;
};

/// Transcribed example rows: which in {"3.8", "3.10"}.
const std::vector<std::pair<std::uint32_t, std::vector<ParamTriple>>>& example_claims(const std::string& which);

/// For each claim, the admissible triple with distance at least the claimed one
/// and the largest dimension (ties to the smallest triple). Builds the winner
/// when build is set. Throws std::invalid_argument for an unknown example or l.
ExampleReport run_example(const std::string& which, std::uint32_t l, DeltaMode mode, bool build,
                          const Budgets& budgets = {});

}  // namespace mpqc
