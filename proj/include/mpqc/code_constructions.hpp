#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpqc/linear_code.hpp"
#include "mpqc/negacyclic.hpp"

namespace mpqc {

/// Generalized Reed-Solomon code: row i is (v_j a_j^i)_j for i = 0..k-1.
struct GrsSpec {
    FieldPtr field;
    std::vector<Field::value_type> points;
    std::vector<Field::value_type> multipliers;
    std::size_t k = 0;
};

/// Throws std::invalid_argument on repeated points, a zero multiplier or k > n.
LinearCode grs_code(const GrsSpec& s);

enum class Lemma33Variant { i, ii };

struct SearchBudget {
    std::uint64_t combinations = 1'000'000;  ///< multiplier combinations per norm system
    std::uint64_t arc_nodes = 2'000'000;     ///< backtracking nodes in the arc search
    Budgets distance;
};

/// A verified Hermitian dual-containing MDS code from one of the families.
struct FamilyCode {
    LinearCode code;
    std::size_t designed_distance;
    DistanceReport distance;
    /// How the code was realized, e.g. "cyclic b=1", "grs-norm-solve", "arc-search".
    std::string realization;
    std::optional<GrsSpec> grs;
    std::optional<DefiningSet> defining;
};

/// Variant i: [l^2-1, l^2-d, d] for 1 <= d <= l+1. Variant ii: [l^2, l^2+1-d, d]
/// for 2 <= d <= l (d = 1 gives the full space). The result is checked for
/// dual containment and distance before it is returned; if no strategy
/// succeeds, construction_gap is thrown. Results are memoized.
FamilyCode lemma33_code(std::uint32_t l, std::uint32_t d, Lemma33Variant variant, const SearchBudget& budget = {});

/// [l^2+1, l^2+2-d, d] negacyclic code for l = 1 mod 4 and 1 <= d <= l+1.
/// Even d uses the kai1 defining set of depth (d-2)/2; odd d searches coset
/// unions of size d-1. Results are memoized.
FamilyCode lemma34_code(std::uint32_t l, std::uint32_t d, const SearchBudget& budget = {});

/// Nonzero u in GF(l)^n with sum_j u_j g_aj g_bj^l = 0 for all rows a, b of g, if
/// one is found within the budget. Scaling column j of g by any w_j with
/// norm(w_j) = u_j then makes the row space Hermitian self-orthogonal.
std::optional<std::vector<Field::value_type>> solve_norm_multipliers(const Matrix& g, std::uint64_t budget);

/// Smallest element of GF(l^2) whose norm is u (u in GF(l)^*).
Field::value_type norm_preimage(const Field& f, Field::value_type u);

}  // namespace mpqc
