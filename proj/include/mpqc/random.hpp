#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "mpqc/linear_code.hpp"

namespace mpqc {

/// Seeded generator with range reduction fixed here (not by the standard
/// library's distributions) so streams are identical across toolchains.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Stream for instance `index` of the named check.
    Rng(std::uint64_t seed, std::string_view check, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n);
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    Field::value_type element(const Field& f) { return static_cast<Field::value_type>(below(f.order())); }
    Field::value_type nonzero(const Field& f) { return static_cast<Field::value_type>(1 + below(f.order() - 1)); }
    std::vector<Field::value_type> vector(const Field& f, std::size_t n);

   private:
    std::mt19937_64 engine_;
};

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng);
/// Uniform code of dimension exactly k (rejection on rank).
LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng);
/// Subcode of c of dimension k <= dim c.
LinearCode random_subcode(const LinearCode& c, std::size_t k, Rng& rng);
Matrix random_nonsingular(const FieldPtr& f, std::size_t s, Rng& rng);
/// s x m of rank s.
Matrix random_frr(const FieldPtr& f, std::size_t s, std::size_t m, Rng& rng);
/// Upper-triangular NSC matrix, by rejection.
Matrix random_nsc_upper(const FieldPtr& f, std::size_t s, Rng& rng);
/// Square A with A^(l) A^T diagonal and nonzero diagonal, built row by row.
Matrix random_diagonal_condition(const FieldPtr& f, std::size_t s, Rng& rng);

/// Basis rows r_1..r_t of a Hermitian self-orthogonal code, t as large as the
/// sampler reaches up to `t` (possibly fewer).
Matrix random_self_orthogonal_rows(const FieldPtr& f, std::size_t n, std::size_t t, Rng& rng);

/// C = D^perp_h for a random self-orthogonal D of dimension up to t.
LinearCode random_dual_containing(const FieldPtr& f, std::size_t n, std::size_t t, Rng& rng);

/// Ascending chain C_1 <= ... <= C_s of dual-containing codes: C_j is the
/// Hermitian dual of the first t_j rows of one self-orthogonal basis, with
/// t_1 >= ... >= t_s.
std::vector<LinearCode> random_dual_containing_chain(const FieldPtr& f, std::size_t n, std::size_t s, Rng& rng);

}  // namespace mpqc
