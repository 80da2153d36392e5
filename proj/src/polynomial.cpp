#include "mpqc/polynomial.hpp"

#include <stdexcept>

namespace mpqc {

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    poly_trim(out);
    return out;
}

PolyDivMod poly_divmod(const Field& f, const Poly& a, const Poly& b) {
    Poly divisor = b;
    poly_trim(divisor);
    if (divisor.empty()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    poly_trim(rem);
    if (rem.size() < divisor.size()) return {{}, rem};
    Poly quot(rem.size() - divisor.size() + 1, 0);
    const auto lead_inv = f.inv(divisor.back());
    for (std::size_t i = quot.size(); i-- > 0;) {
        const auto c = f.mul(rem[i + divisor.size() - 1], lead_inv);
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < divisor.size(); ++j) rem[i + j] = f.sub(rem[i + j], f.mul(c, divisor[j]));
    }
    poly_trim(quot);
    poly_trim(rem);
    return {quot, rem};
}

Field::value_type poly_eval(const Field& f, const Poly& a, Field::value_type x) {
    Field::value_type acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

}  // namespace mpqc
