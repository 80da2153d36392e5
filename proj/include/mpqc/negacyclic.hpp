#pragma once

#include <cstdint>
#include <vector>

#include "mpqc/linear_code.hpp"
#include "mpqc/polynomial.hpp"

namespace mpqc {

struct CyclotomicCoset {
    std::uint64_t representative;
    std::vector<std::uint64_t> members;  ///< sorted
    std::uint64_t modulus;
    std::uint64_t multiplier;
};

/// Orbit of j under j -> q*j mod two_n. Requires gcd(q, two_n) = 1.
CyclotomicCoset cyclotomic_coset(std::uint64_t j, std::uint64_t two_n, std::uint64_t q);

/// Union of q-cyclotomic cosets of odd residues modulo 2n.
struct DefiningSet {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> residues;  ///< sorted
    std::vector<CyclotomicCoset> cosets;  ///< ordered by representative

    /// Validates oddness and coset closure; throws std::invalid_argument otherwise.
    static DefiningSet from_residues(std::uint64_t n, std::uint64_t q, std::vector<std::uint64_t> residues);
    /// Closure of the given residues under multiplication by q.
    static DefiningSet closure(std::uint64_t n, std::uint64_t q, const std::vector<std::uint64_t>& generators);

    std::size_t size() const noexcept { return residues.size(); }
};

/// Z = union of C_{t-2i}, i = 0..delta, with n = l^2+1, t = n/2, q = l^2.
/// Requires l = 1 mod 4 and 0 <= delta <= (l-1)/2.
DefiningSet kai1_defining_set(std::uint32_t l, std::uint32_t delta);

/// Z = union of C_{2i-1}, i = 0..delta, with n = (l^2+1)/2, q = l^2.
/// Requires odd prime power l and 1 <= delta <= (l-1)/2.
DefiningSet kai2_defining_set(std::uint32_t l, std::uint32_t delta);

struct NegacyclicCode {
    LinearCode code;
    DefiningSet defining;
    Poly genpoly;  ///< monic, over the code's field
};

/// g(x) = prod_{j in Z} (x - gamma^j) with gamma the canonical primitive 2n-th
/// root of unity. Coefficients are checked to lie in GF(q) and g is checked to
/// divide x^n + 1; violations throw consistency_error.
NegacyclicCode negacyclic_code(const FieldPtr& field, const DefiningSet& z);

/// 1 + longest run of residues of Z in step-2 progression, wrapping mod 2n.
std::size_t bch_like_bound(const DefiningSet& z);

/// Explicit Hermitian dual-containment check on the generator matrix.
bool is_kai_dual_containing(const NegacyclicCode& c);

/// Z and -l*Z mod 2n are disjoint (the coset criterion for dual containment).
bool hermitian_residue_condition(const DefiningSet& z, std::uint32_t l);

/// Cyclic shift by one position with the wrapped entry negated.
std::vector<Field::value_type> negacyclic_shift(const Field& f, std::span<const Field::value_type> word);

}  // namespace mpqc
