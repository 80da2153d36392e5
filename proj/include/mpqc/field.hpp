#pragma once

/**
 * @file field.hpp
 * @brief Exact arithmetic in GF(p^m).
 *
 * Elements are stored as their integer index sum_i c_i p^i, where c_0..c_{m-1}
 * are the coefficients in the polynomial basis 1, x, ..., x^{m-1} (constant
 * term first). Index order is also the enumeration order used for every
 * canonical choice in the library (modulus, primitive element, roots).
 *
 * Multiplication goes through exp/log tables. Fields of order <= 1024 also keep
 * a full addition table; larger ones add through Zech logarithms.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mpqc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Default cap on p^m for fields that are built with full tables.
inline constexpr std::uint64_t default_field_cap = std::uint64_t{1} << 20;

class Field {
   public:
    using value_type = std::uint32_t;

    /// Returns the (cached) field GF(p^m) with the canonical modulus: the monic
    /// irreducible of degree m whose lower coefficients have the smallest
    /// index sum_i c_i p^i. For m = 1 the modulus is x.
    static FieldPtr create(std::uint32_t p, std::uint32_t m, std::uint64_t cap = default_field_cap);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    /// Monic modulus, constant term first, length m + 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// Canonical primitive element: the smallest-index generator of GF(q)^*.
    value_type primitive() const noexcept { return primitive_; }

    /// l with q = l^2, if the degree is even.
    std::optional<std::uint32_t> subfield_order() const noexcept;
    bool has_conjugation() const noexcept { return m_ % 2 == 0; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }

    value_type add(value_type a, value_type b) const noexcept {
        if (add_table_) return add_table_[std::size_t{a} * q_ + b];
        return zech_add(a, b);
    }
    value_type neg(value_type a) const noexcept { return neg_[a]; }
    value_type sub(value_type a, value_type b) const noexcept { return add(a, neg_[b]); }
    value_type mul(value_type a, value_type b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[std::size_t{log_[a]} + log_[b]];
    }
    /// Throws std::domain_error for a == 0.
    value_type inv(value_type a) const;
    value_type div(value_type a, value_type b) const;
    value_type pow(value_type a, std::uint64_t e) const noexcept;

    /// x -> x^l on GF(l^2); throws std::domain_error if q is not a square.
    value_type conj(value_type a) const;
    /// x -> x^(p^k).
    value_type frobenius(value_type a, std::uint32_t k = 1) const noexcept;
    /// a^(l+1), lands in GF(l).
    value_type norm(value_type a) const { return mul(a, conj(a)); }

    /// Discrete log base primitive(); a must be nonzero.
    std::uint32_t log(value_type a) const;
    value_type exp(std::uint64_t e) const noexcept { return exp_[e % (q_ - 1)]; }

    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(value_type a) const;

    /// y <- y + f * x, elementwise.
    void axpy(std::span<value_type> y, value_type f, std::span<const value_type> x) const noexcept;
    /// y <- f * y, elementwise.
    void scale(std::span<value_type> y, value_type f) const noexcept;

    /// Image of an integer in the prime subfield.
    value_type from_int(std::int64_t v) const noexcept;
    std::vector<std::uint32_t> coeffs(value_type a) const;
    /// Throws std::invalid_argument on wrong length or out-of-range entries.
    value_type from_coeffs(std::span<const std::uint32_t> c) const;

    /// True iff a^order == a, i.e. a lies in the subfield of that order.
    bool in_subfield(value_type a, std::uint64_t sub_order) const noexcept { return pow(a, sub_order) == a; }
    /// All elements of the subfield of the given order, in index order.
    std::vector<value_type> subfield_elements(std::uint64_t sub_order) const;

    std::string name() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

   private:
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    value_type zech_add(value_type a, value_type b) const noexcept;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    value_type primitive_ = 1;
    std::vector<value_type> exp_;          // length 2(q-1)
    std::vector<std::uint32_t> log_;       // log_[0] unused
    std::vector<value_type> neg_;
    std::vector<std::int64_t> zech_;       // log(1 + g^i), -1 when 1 + g^i = 0
    std::vector<value_type> add_storage_;  // q*q when q <= table limit
    const value_type* add_table_ = nullptr;
};

/// Value-semantic field element tied to its field.
class FieldElement {
   public:
    FieldElement(FieldPtr field, Field::value_type value);

    const FieldPtr& field() const noexcept { return field_; }
    Field::value_type value() const noexcept { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement conj() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

   private:
    void require_same(const FieldElement& o) const;

    FieldPtr field_;
    Field::value_type value_;
};

/// GF(q) inside GF(q^e): the base modulus' canonical root in ext is the image
/// of the base generator x.
class ExtensionEmbedding {
   public:
    ExtensionEmbedding(FieldPtr base, FieldPtr ext);

    const FieldPtr& base() const noexcept { return base_; }
    const FieldPtr& ext() const noexcept { return ext_; }
    Field::value_type generator_image() const noexcept { return generator_image_; }
    /// Extension degree e with |ext| = |base|^e.
    std::uint32_t relative_degree() const noexcept { return ext_->degree() / base_->degree(); }

    Field::value_type embed(Field::value_type a) const noexcept { return image_[a]; }
    /// Inverse of embed; throws consistency_error when a is not in the image.
    Field::value_type restrict(Field::value_type a) const;
    bool in_base(Field::value_type a) const noexcept { return ext_->in_subfield(a, base_->order()); }

   private:
    FieldPtr base_;
    FieldPtr ext_;
    Field::value_type generator_image_ = 0;
    std::vector<Field::value_type> image_;
    std::vector<std::int64_t> preimage_;
};

struct NthRoot {
    ExtensionEmbedding embedding;
    Field::value_type root;  ///< element of the extension of order exactly n
};

/// Smallest e with q^e = 1 mod n; requires gcd(n, q) = 1.
std::uint32_t multiplicative_order_mod(std::uint64_t q, std::uint64_t n);

/// Embeds GF(q) into GF(q^e), e = ord_n(q), and returns g^((q^e-1)/n) for the
/// extension's canonical primitive element g.
NthRoot primitive_nth_root(const FieldPtr& base, std::uint64_t n, std::uint64_t cap = default_field_cap);

bool is_prime(std::uint64_t v) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

/// Shorthand for Field::create(p, m) of order l^2 where l = p^k.
FieldPtr square_field(std::uint32_t l);

}  // namespace mpqc
