#include "mpqc/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "mpqc/errors.hpp"

namespace mpqc {

namespace {

constexpr std::uint32_t add_table_limit = 1024;

using Poly = std::vector<std::uint32_t>;  // coefficients over GF(p), constant first

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p prime, a != 0
    std::uint64_t r = 1, b = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of f modulo monic-or-not g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint32_t lead_inv = inv_mod(g.back(), p);
    while (f.size() > dg) {
        const std::size_t shift = f.size() - 1 - dg;
        const std::uint64_t c = std::uint64_t{f.back()} * lead_inv % p;
        for (std::size_t i = 0; i <= dg; ++i) {
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - c) * g[i]) % p);
        }
        trim(f);
    }
    return f;
}

Poly poly_from_index(std::uint64_t idx, std::uint32_t p, std::uint32_t len) {
    Poly f(len);
    for (std::uint32_t i = 0; i < len; ++i) {
        f[i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    if (m <= 1) return true;
    // every monic divisor of degree 1..m/2
    for (std::uint32_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g = poly_from_index(idx, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Product of two residues modulo the monic modulus, all as coefficient vectors of length m.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
    const std::size_t m = modulus.size() - 1;
    std::vector<std::uint64_t> acc(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < m; ++j) acc[i + j] += std::uint64_t{a[i]} * b[j];
    }
    for (auto& v : acc) v %= p;
    for (std::size_t top = 2 * m - 1; top >= m; --top) {
        const std::uint64_t c = acc[top];
        if (!c) continue;
        acc[top] = 0;
        for (std::size_t i = 0; i < m; ++i) acc[top - m + i] = (acc[top - m + i] + (p - c) * modulus[i]) % p;
    }
    Poly r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
    return r;
}

std::uint32_t index_of(const Poly& c, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return static_cast<std::uint32_t>(v);
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t v) noexcept {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d) continue;
        out.push_back(d);
        while (v % d == 0) v /= d;
    }
    if (v > 1) out.push_back(v);
    return out;
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t m, std::uint64_t cap) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("field degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > cap) {
            throw budget_exceeded("GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds the field cap " +
                                  std::to_string(cap));
        }
    }

    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, m}); it != cache.end()) return it->second;

    Poly modulus;
    if (m == 1) {
        modulus = {0, 1};
    } else {
        for (std::uint64_t idx = 0; idx < q; ++idx) {
            Poly f = poly_from_index(idx, p, m);
            f.push_back(1);
            if (f[0] == 0) continue;  // divisible by x
            if (is_irreducible(f, p)) {
                modulus = std::move(f);
                break;
            }
        }
        if (modulus.empty()) throw consistency_error("no irreducible polynomial found");
    }
    FieldPtr field(new Field(p, m, std::move(modulus)));
    cache.emplace(std::pair{p, m}, field);
    return field;
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))), modulus_(std::move(modulus)) {
    const std::uint32_t group = q_ - 1;

    auto residue = [&](std::uint32_t idx) {
        if (m_ == 1) return Poly{idx};
        return poly_from_index(idx, p_, m_);
    };
    auto slow_mul = [&](const Poly& a, const Poly& b) {
        if (m_ == 1) return Poly{static_cast<std::uint32_t>(std::uint64_t{a[0]} * b[0] % p_)};
        return mulmod(a, b, modulus_, p_);
    };
    auto slow_pow = [&](Poly base, std::uint64_t e) {
        Poly r(m_, 0);
        r[0] = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, base);
            base = slow_mul(base, base);
            e >>= 1;
        }
        return r;
    };

    // canonical primitive element
    const auto factors = prime_factors(group);
    primitive_ = 0;
    for (std::uint32_t cand = 1; cand < q_ && primitive_ == 0; ++cand) {
        const Poly c = residue(cand);
        bool generator = true;
        for (auto r : factors) {
            Poly t = slow_pow(c, group / r);
            if (index_of(t, p_) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) primitive_ = cand;
    }
    if (q_ == 2) primitive_ = 1;
    if (primitive_ == 0) throw consistency_error("no primitive element in " + name());

    exp_.assign(2 * std::size_t{group}, 0);
    log_.assign(q_, 0);
    const Poly g = residue(primitive_);
    Poly cur(m_, 0);
    cur[0] = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        const std::uint32_t idx = index_of(cur, p_);
        exp_[i] = idx;
        exp_[i + group] = idx;
        log_[idx] = i;
        cur = slow_mul(cur, g);
    }

    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        Poly c = residue(a);
        for (auto& v : c) v = (p_ - v) % p_;
        neg_[a] = index_of(c, p_);
    }

    auto plus_one = [&](std::uint32_t a) { return a - a % p_ + (a % p_ + 1) % p_; };
    zech_.assign(group, -1);
    for (std::uint32_t i = 0; i < group; ++i) {
        const std::uint32_t s = plus_one(exp_[i]);
        zech_[i] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
    }

    if (q_ <= add_table_limit) {
        add_storage_.resize(std::size_t{q_} * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                std::uint32_t x = a, y = b, r = 0, scale = 1;
                for (std::uint32_t i = 0; i < m_; ++i) {
                    r += ((x % p_ + y % p_) % p_) * scale;
                    x /= p_;
                    y /= p_;
                    scale *= p_;
                }
                add_storage_[std::size_t{a} * q_ + b] = r;
            }
        }
        add_table_ = add_storage_.data();
    }
}

Field::value_type Field::zech_add(value_type a, value_type b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t group = q_ - 1;
    const std::uint32_t la = log_[a];
    const std::uint32_t lb = log_[b];
    const std::uint32_t d = lb >= la ? lb - la : lb + group - la;
    const std::int64_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
}

std::optional<std::uint32_t> Field::subfield_order() const noexcept {
    if (m_ % 2) return std::nullopt;
    return static_cast<std::uint32_t>(ipow(p_, m_ / 2));
}

Field::value_type Field::inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero in " + name());
    const std::uint32_t group = q_ - 1;
    return exp_[(group - log_[a]) % group];
}

Field::value_type Field::div(value_type a, value_type b) const {
    if (b == 0) throw std::domain_error("division by zero in " + name());
    return mul(a, inv(b));
}

Field::value_type Field::pow(value_type a, std::uint64_t e) const noexcept {
    value_type r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Field::value_type Field::conj(value_type a) const {
    const auto l = subfield_order();
    if (!l) throw std::domain_error(name() + " has no conjugation: order is not a perfect square");
    return pow(a, *l);
}

Field::value_type Field::frobenius(value_type a, std::uint32_t k) const noexcept {
    return pow(a, ipow(p_, k % m_));
}

std::uint32_t Field::log(value_type a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
}

std::uint64_t Field::element_order(value_type a) const {
    const std::uint64_t group = q_ - 1;
    return group / std::gcd<std::uint64_t, std::uint64_t>(log(a), group);
}

void Field::axpy(std::span<value_type> y, value_type f, std::span<const value_type> x) const noexcept {
    if (f == 0) return;
    const std::uint32_t lf = log_[f];
    const std::size_t n = std::min(y.size(), x.size());
    if (add_table_) {
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            y[i] = add_table_[std::size_t{y[i]} * q_ + exp_[lf + log_[x[i]]]];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            y[i] = zech_add(y[i], exp_[lf + log_[x[i]]]);
        }
    }
}

void Field::scale(std::span<value_type> y, value_type f) const noexcept {
    for (auto& v : y) v = mul(v, f);
}

Field::value_type Field::from_int(std::int64_t v) const noexcept {
    const std::int64_t r = ((v % p_) + p_) % p_;
    return static_cast<value_type>(r);
}

std::vector<std::uint32_t> Field::coeffs(value_type a) const {
    if (a >= q_) throw std::invalid_argument("element index out of range");
    return poly_from_index(a, p_, m_);
}

Field::value_type Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != m_) throw std::invalid_argument("coefficient vector must have length " + std::to_string(m_));
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range for characteristic " + std::to_string(p_));
        v = v * p_ + c[i];
    }
    return static_cast<value_type>(v);
}

std::vector<Field::value_type> Field::subfield_elements(std::uint64_t sub_order) const {
    std::vector<value_type> out;
    for (value_type a = 0; a < q_; ++a)
        if (in_subfield(a, sub_order)) out.push_back(a);
    return out;
}

std::string Field::name() const {
    return "GF(" + std::to_string(q_) + ")";
}

FieldElement::FieldElement(FieldPtr field, Field::value_type value) : field_(std::move(field)), value_(value) {
    if (!field_) throw std::invalid_argument("field element without a field");
    if (value_ >= field_->order()) throw std::invalid_argument("element index out of range for " + field_->name());
}

void FieldElement::require_same(const FieldElement& o) const {
    if (field_ != o.field_) throw std::invalid_argument("field elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::conj() const { return {field_, field_->conj(value_)}; }

ExtensionEmbedding::ExtensionEmbedding(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
    if (base_->characteristic() != ext_->characteristic() || ext_->degree() % base_->degree() != 0)
        throw std::invalid_argument(base_->name() + " is not a subfield of " + ext_->name());
    const auto& mod = base_->modulus();
    auto eval = [&](Field::value_type x) {
        Field::value_type acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;) acc = ext_->add(ext_->mul(acc, x), mod[i]);
        return acc;
    };
    bool found = false;
    for (Field::value_type x = 0; x < ext_->order(); ++x) {
        if (eval(x) == 0) {
            generator_image_ = x;
            found = true;
            break;
        }
    }
    if (!found) throw consistency_error("base modulus has no root in " + ext_->name());

    image_.resize(base_->order());
    preimage_.assign(ext_->order(), -1);
    for (Field::value_type a = 0; a < base_->order(); ++a) {
        const auto c = base_->coeffs(a);
        Field::value_type acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = ext_->add(ext_->mul(acc, generator_image_), c[i]);
        image_[a] = acc;
        preimage_[acc] = a;
    }
}

Field::value_type ExtensionEmbedding::restrict(Field::value_type a) const {
    if (a >= preimage_.size() || preimage_[a] < 0)
        throw consistency_error("element is not in the image of " + base_->name());
    return static_cast<Field::value_type>(preimage_[a]);
}

std::uint32_t multiplicative_order_mod(std::uint64_t q, std::uint64_t n) {
    if (n == 0 || std::gcd(q, n) != 1) throw std::invalid_argument("gcd(n, q) must be 1");
    if (n == 1) return 1;
    std::uint64_t v = q % n;
    std::uint32_t e = 1;
    while (v != 1) {
        v = v * (q % n) % n;
        ++e;
    }
    return e;
}

NthRoot primitive_nth_root(const FieldPtr& base, std::uint64_t n, std::uint64_t cap) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    const std::uint64_t q = base->order();
    if (std::gcd(q, n) != 1)
        throw std::invalid_argument("gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
    const std::uint32_t e = multiplicative_order_mod(q, n);
    std::uint64_t ext_order = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        ext_order *= q;
        if (ext_order > cap) throw budget_exceeded("extension of degree " + std::to_string(e) + " exceeds the field cap");
    }
    auto ext = Field::create(base->characteristic(), base->degree() * e, cap);
    const auto root = ext->exp((ext_order - 1) / n);
    return NthRoot{ExtensionEmbedding(base, ext), root};
}

FieldPtr square_field(std::uint32_t l) {
    const auto f = prime_factors(l);
    if (f.size() != 1) throw std::invalid_argument(std::to_string(l) + " is not a prime power");
    std::uint32_t k = 0;
    for (std::uint64_t v = l; v > 1; v /= f[0]) ++k;
    return Field::create(static_cast<std::uint32_t>(f[0]), 2 * k);
}

}  // namespace mpqc
