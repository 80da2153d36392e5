#include "mpqc/linear_code.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

#include "mpqc/errors.hpp"
#include "mpqc/parallel.hpp"

namespace mpqc {

LinearCode LinearCode::from_generator(const Matrix& rows) {
    auto r = rref(rows);
    return LinearCode(std::move(r.reduced), std::move(r.pivots));
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) { return LinearCode(Matrix(std::move(field), 0, n), {}); }

LinearCode LinearCode::full(FieldPtr field, std::size_t n) {
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    return LinearCode(Matrix::identity(std::move(field), n), std::move(piv));
}

bool LinearCode::contains(std::span<const Field::value_type> word) const {
    if (word.size() != length()) throw std::invalid_argument("word length does not match code length");
    const auto r = reduce_against(gen_, pivots_, word);
    return std::all_of(r.begin(), r.end(), [](auto v) { return v == 0; });
}

std::vector<Field::value_type> LinearCode::encode(std::span<const Field::value_type> message) const {
    if (message.size() != dimension()) throw std::invalid_argument("message length does not match code dimension");
    std::vector<Field::value_type> out(length(), 0);
    for (std::size_t i = 0; i < message.size(); ++i) field()->axpy(out, message[i], gen_.row(i));
    return out;
}

LinearCode LinearCode::conjugate() const { return from_generator(gen_.conjugate()); }

LinearCode euclidean_dual(const LinearCode& c) {
    return LinearCode::from_generator(nullspace(c.generator()));
}

LinearCode hermitian_dual(const LinearCode& c) {
    if (!c.field()->has_conjugation())
        throw std::domain_error("Hermitian dual needs a field of square order, got " + c.field()->name());
    return LinearCode::from_generator(nullspace(c.generator().conjugate()));
}

bool is_subcode(const LinearCode& a, const LinearCode& b) {
    if (a.field() != b.field()) throw std::invalid_argument("codes over different fields");
    if (a.length() != b.length()) throw std::invalid_argument("codes of different lengths");
    if (a.dimension() > b.dimension()) return false;
    for (std::size_t i = 0; i < a.dimension(); ++i)
        if (!b.contains(a.generator().row(i))) return false;
    return true;
}

bool is_hermitian_dual_containing(const LinearCode& c) {
    if (!c.field()->has_conjugation())
        throw std::domain_error("Hermitian duality needs a field of square order, got " + c.field()->name());
    if (2 * c.dimension() < c.length()) return false;
    return is_subcode(hermitian_dual(c), c);
}

std::size_t hamming_weight(std::span<const Field::value_type> v) noexcept {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }));
}

Field::value_type euclidean_inner(const Field& f, std::span<const Field::value_type> a,
                                  std::span<const Field::value_type> b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner product of vectors of different lengths");
    Field::value_type acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

Field::value_type hermitian_inner(const Field& f, std::span<const Field::value_type> a,
                                  std::span<const Field::value_type> b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner product of vectors of different lengths");
    Field::value_type acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], f.conj(b[i])));
    return acc;
}

std::string_view to_string(LowerSource s) noexcept {
    switch (s) {
        case LowerSource::exhaustive: return "exhaustive";
        case LowerSource::mds_certificate: return "mds-certificate";
        case LowerSource::bch: return "bch";
        case LowerSource::grs_structure: return "grs-structure";
        case LowerSource::arc: return "arc";
        case LowerSource::product_bound: return "product-bound";
        case LowerSource::trivial: return "trivial";
    }
    return "unknown";
}

std::string_view to_string(UpperSource s) noexcept {
    switch (s) {
        case UpperSource::exhaustive: return "exhaustive";
        case UpperSource::witness_codeword: return "witness-codeword";
    }
    return "unknown";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > max) return max;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t code_size(const LinearCode& c) noexcept {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t s = 1;
    const std::uint64_t q = c.field()->order();
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        if (s > max / q) return max;
        s *= q;
    }
    return s;
}

DistanceReport min_distance_exhaustive(const LinearCode& c, std::uint64_t budget) {
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    if (k == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
    if (code_size(c) > budget) {
        throw budget_exceeded("exhaustive distance needs " + std::to_string(c.field()->order()) + "^" +
                              std::to_string(k) + " codewords, budget " + std::to_string(budget));
    }
    const Field& f = *c.field();
    const Matrix& g = c.generator();
    const std::uint32_t q = f.order();
    std::vector<Field::value_type> step(q);  // step[a] = (a+1) - a, wrapping q-1 -> 0
    for (std::uint32_t a = 0; a + 1 < q; ++a) step[a] = f.sub(a + 1, a);
    step[q - 1] = f.neg(q - 1);

    // Task t covers messages with last nonzero entry 1 at position `lead`, and the
    // entry just below it fixed to `below`; the rest run through an odometer.
    struct Task {
        std::size_t lead;
        Field::value_type below;
    };
    std::vector<Task> tasks;
    tasks.push_back({0, 0});
    for (std::size_t lead = 1; lead < k; ++lead)
        for (std::uint32_t v = 0; v < q; ++v) tasks.push_back({lead, v});

    std::vector<std::size_t> best(tasks.size(), n + 1);
    parallel_for(tasks.size(), [&](std::size_t t) {
        const auto [lead, below] = tasks[t];
        std::vector<Field::value_type> word(g.row(lead).begin(), g.row(lead).end());
        if (lead > 0) f.axpy(word, below, g.row(lead - 1));
        std::size_t local = hamming_weight(word);
        const std::size_t free = lead >= 1 ? lead - 1 : 0;
        std::vector<std::uint32_t> digits(free, 0);
        while (true) {
            std::size_t j = 0;
            for (; j < free; ++j) {
                const auto d = digits[j];
                f.axpy(word, step[d], g.row(j));
                digits[j] = d + 1 == q ? 0 : d + 1;
                if (digits[j] != 0) break;
            }
            if (j == free) break;
            local = std::min(local, hamming_weight(word));
        }
        best[t] = local;
    });
    const std::size_t d = *std::min_element(best.begin(), best.end());
    return {d, LowerSource::exhaustive, d, UpperSource::exhaustive};
}

bool mds_certificate(const LinearCode& c, std::uint64_t budget) {
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    const std::size_t r = std::min(k, n - k);
    if (r == 0) return true;
    const auto subsets = binomial(n, r);
    if (subsets > budget) {
        throw budget_exceeded("MDS certificate needs C(" + std::to_string(n) + "," + std::to_string(r) +
                              ") subsets, budget " + std::to_string(budget));
    }
    const Matrix m = k <= n - k ? c.generator() : euclidean_dual(c).generator();
    std::atomic<bool> failed{false};
    parallel_for(n - r + 1, [&](std::size_t first) {
        std::vector<std::size_t> cols(r);
        cols[0] = first;
        for (std::size_t i = 1; i < r; ++i) cols[i] = first + i;
        if (cols[r - 1] >= n) return;
        Matrix sub(m.field(), r, r);
        while (!failed.load(std::memory_order_relaxed)) {
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(i, cols[j]);
            if (determinant(sub) == 0) {
                failed = true;
                return;
            }
            // next combination with cols[0] fixed
            std::size_t i = r;
            while (i-- > 1) {
                if (cols[i] < n - r + i) break;
            }
            if (i == 0) return;
            ++cols[i];
            for (std::size_t j = i + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
        }
    });
    return !failed;
}

std::size_t witness_weight(const LinearCode& c) {
    std::size_t best = c.length() + 1;
    for (std::size_t i = 0; i < c.dimension(); ++i) best = std::min(best, hamming_weight(c.generator().row(i)));
    return best;
}

DistanceReport certify_distance(const LinearCode& c, const Budgets& budgets, std::optional<std::size_t> structural_lower,
                                LowerSource structural_source) {
    if (c.dimension() == 0) return {};
    if (code_size(c) <= budgets.enumeration) return min_distance_exhaustive(c, budgets.enumeration);
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    const std::size_t witness = witness_weight(c);
    if (binomial(n, std::min(k, n - k)) <= budgets.subsets && mds_certificate(c, budgets.subsets)) {
        return {n - k + 1, LowerSource::mds_certificate, witness, UpperSource::witness_codeword};
    }
    if (structural_lower) {
        if (*structural_lower > witness)
            throw consistency_error("structural distance bound exceeds the weight of a codeword");
        return {*structural_lower, structural_source, witness, UpperSource::witness_codeword};
    }
    return {1, LowerSource::trivial, witness, UpperSource::witness_codeword};
}

}  // namespace mpqc
