#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mpqc/matrix.hpp"

namespace mpqc {

/// Linear code stored by its rref generator matrix; equality of codes is
/// equality of generators.
class LinearCode {
   public:
    /// Rows may be dependent; the zero matrix (or no rows) gives the zero code.
    static LinearCode from_generator(const Matrix& rows);
    static LinearCode zero(FieldPtr field, std::size_t n);
    static LinearCode full(FieldPtr field, std::size_t n);

    const FieldPtr& field() const noexcept { return gen_.field(); }
    std::size_t length() const noexcept { return gen_.cols(); }
    std::size_t dimension() const noexcept { return gen_.rows(); }
    const Matrix& generator() const noexcept { return gen_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const Field::value_type> word) const;
    std::vector<Field::value_type> encode(std::span<const Field::value_type> message) const;
    /// Entrywise conjugate code C^l.
    LinearCode conjugate() const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

   private:
    LinearCode(Matrix gen, std::vector<std::size_t> pivots) : gen_(std::move(gen)), pivots_(std::move(pivots)) {}

    Matrix gen_;
    std::vector<std::size_t> pivots_;
};

inline LinearCode code_from_generator(const Matrix& rows) { return LinearCode::from_generator(rows); }

LinearCode euclidean_dual(const LinearCode& c);
/// (C^l)^perp; requires a field of square order.
LinearCode hermitian_dual(const LinearCode& c);
bool is_subcode(const LinearCode& a, const LinearCode& b);
bool is_hermitian_dual_containing(const LinearCode& c);

std::size_t hamming_weight(std::span<const Field::value_type> v) noexcept;
Field::value_type euclidean_inner(const Field& f, std::span<const Field::value_type> a,
                                  std::span<const Field::value_type> b);
/// sum a_i b_i^l
Field::value_type hermitian_inner(const Field& f, std::span<const Field::value_type> a,
                                  std::span<const Field::value_type> b);

/// grs_structure: the code is a GRS code or the dual of a (doubly extended)
/// GRS code with distinct points and nonzero multipliers, hence MDS; arc: the
/// parity-check columns were checked to form an arc.
enum class LowerSource { exhaustive, mds_certificate, bch, grs_structure, arc, product_bound, trivial };
enum class UpperSource { exhaustive, witness_codeword };

std::string_view to_string(LowerSource s) noexcept;
std::string_view to_string(UpperSource s) noexcept;

/// Bounds on the minimum distance with their provenance. Both bounds are
/// absent for the zero code.
struct DistanceReport {
    std::optional<std::size_t> lower;
    LowerSource lower_source = LowerSource::exhaustive;
    std::optional<std::size_t> upper;
    UpperSource upper_source = UpperSource::witness_codeword;

    bool exact() const noexcept { return lower && upper && *lower == *upper; }
};

struct Budgets {
    std::uint64_t enumeration = 10'000'000;  ///< codewords for exhaustive distance
    std::uint64_t subsets = 1'000'000;       ///< column subsets for the MDS certificate
};

/// q^k as a saturating count.
std::uint64_t code_size(const LinearCode& c) noexcept;

/// Exact minimum weight by enumerating messages whose last nonzero entry is 1
/// (one representative per projective point). Requires k >= 1 and q^k <= budget.
DistanceReport min_distance_exhaustive(const LinearCode& c, std::uint64_t budget = Budgets{}.enumeration);

/// Every min(k, n-k)-subset of columns of the generator (or of the parity
/// check, whichever side is smaller) is independent. Equivalent to d = n-k+1.
bool mds_certificate(const LinearCode& c, std::uint64_t budget = Budgets{}.subsets);

/// Minimum weight among generator rows.
std::size_t witness_weight(const LinearCode& c);

/// Distance ladder: exhaustive enumeration if affordable, then the MDS
/// certificate, then the supplied structural lower bound.
DistanceReport certify_distance(const LinearCode& c, const Budgets& budgets = {},
                                std::optional<std::size_t> structural_lower = std::nullopt,
                                LowerSource structural_source = LowerSource::bch);

/// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace mpqc
