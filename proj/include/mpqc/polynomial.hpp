#pragma once

#include <vector>

#include "mpqc/field.hpp"

namespace mpqc {

/// Dense polynomial over a field, coefficients lowest degree first. The zero
/// polynomial is the empty vector; other values carry no leading zeros.
using Poly = std::vector<Field::value_type>;

void poly_trim(Poly& a);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

/// Throws std::domain_error when dividing by the zero polynomial.
PolyDivMod poly_divmod(const Field& f, const Poly& a, const Poly& b);
Field::value_type poly_eval(const Field& f, const Poly& a, Field::value_type x);

}  // namespace mpqc
