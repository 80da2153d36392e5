#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpqc/linear_code.hpp"

namespace mpqc {

/// [C_1, ..., C_s] A with certificates computed once at construction.
class MatrixProductSpec {
   public:
    /// Throws std::invalid_argument for no components, mismatched lengths or
    /// fields, a matrix over another field, or rows(A) != s, or s > m.
    MatrixProductSpec(std::vector<LinearCode> components, Matrix a);

    const std::vector<LinearCode>& components() const noexcept { return components_; }
    const Matrix& matrix() const noexcept { return a_; }
    const FieldPtr& field() const noexcept { return a_.field(); }
    std::size_t s() const noexcept { return a_.rows(); }
    std::size_t m() const noexcept { return a_.cols(); }
    std::size_t component_length() const noexcept { return components_.front().length(); }

    bool frr() const noexcept { return frr_; }
    bool nsc() const noexcept { return nsc_; }
    bool upper_triangular() const noexcept { return upper_triangular_; }
    /// A^(l) A^T diagonal with nonzero diagonal (false over fields without conjugation).
    bool diagonal_condition() const noexcept { return diagonal_condition_; }

   private:
    std::vector<LinearCode> components_;
    Matrix a_;
    bool frr_ = false;
    bool nsc_ = false;
    bool upper_triangular_ = false;
    bool diagonal_condition_ = false;
};

/// Block j of a codeword is sum_i a_ij c_i; blocks are laid out consecutively.
LinearCode mpc_construct(const MatrixProductSpec& spec);

bool is_frr(const Matrix& a);
/// For every t <= s and columns j_1 < ... < j_t, the t x t minor of the first t rows is nonsingular.
bool is_nsc(const Matrix& a);

/// Code spanned by the first k rows of A (1 <= k <= s).
LinearCode ua_code(const Matrix& a, std::size_t k);

/// min_k d_k * d(U_A(k)) for FRR A; d(U_A(k)) by enumeration. Distances may be
/// lower bounds, in which case so is the result.
std::size_t distance_bound_frr(const MatrixProductSpec& spec, std::span<const std::size_t> distances);

struct NscBound {
    std::size_t lower;
    bool exact;  ///< A is upper-triangular
};

/// d* = min_i (m - i + 1) d_i; throws std::invalid_argument unless A is NSC.
NscBound distance_bound_nsc(const MatrixProductSpec& spec, std::span<const std::size_t> distances);

/// [C_1^perp, ..., C_s^perp] (A^-1)^T. Throws std::invalid_argument if A is singular or not square.
LinearCode mpc_dual_formula(const MatrixProductSpec& spec);
/// The dual formula, checked against the Euclidean dual of the product; a
/// mismatch throws consistency_error.
LinearCode mpc_dual(const MatrixProductSpec& spec);

struct Theorem31Check {
    bool diagonal_condition = false;
    bool scalar_condition = false;
    std::optional<Field::value_type> scalar;  ///< a with [(A^(l))^-1]^T = a A
};

/// Throws std::domain_error for a singular A or a field without conjugation.
Theorem31Check theorem31_check(const Matrix& a);

struct ProductCode {
    LinearCode code;
    MatrixProductSpec spec;
    DistanceReport distance;
};

/// Requires dual-containing components and the diagonal condition; the
/// product is checked for dual containment (consistency_error otherwise).
/// The distance is the FRR bound from the given component distances.
ProductCode theorem31_construct(std::vector<LinearCode> codes, const Matrix& a, std::span<const std::size_t> distances);

/// 2^r x 2^r character table of (Z/2)^r with entry (-1)^popcount(i & rev(j)),
/// rev reversing r bits. Throws std::domain_error in characteristic 2.
Matrix character_matrix(const FieldPtr& field, std::uint32_t r);

/// theorem31_construct with character_matrix(2).
ProductCode corollary32_construct(std::vector<LinearCode> codes, std::span<const std::size_t> distances);

/// Monotone chain (either direction) of dual-containing codes and an NSC
/// upper-triangular A; the product is checked for dual containment. The
/// distance is d* from the given component distances.
ProductCode theorem_main1_construct(std::vector<LinearCode> codes, const Matrix& a, std::span<const std::size_t> distances);

/// True if consecutive codes are nested in one consistent direction.
bool is_monotone_chain(const std::vector<LinearCode>& codes);

/// [[1,1,1],[0,2,1],[0,0,1]], or its leading s x s block for s < 3.
Matrix main_triangular_matrix(const FieldPtr& field, std::size_t s = 3);

}  // namespace mpqc
