#include "mpqc/negacyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "mpqc/errors.hpp"

namespace mpqc {

namespace {

std::uint64_t mod(std::int64_t v, std::uint64_t m) {
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((v % mm) + mm) % mm);
}

std::string residue_list(const std::vector<std::uint64_t>& r) {
    std::string s = "{";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + "}";
}

}  // namespace

CyclotomicCoset cyclotomic_coset(std::uint64_t j, std::uint64_t two_n, std::uint64_t q) {
    if (two_n == 0) throw std::invalid_argument("coset modulus must be positive");
    if (std::gcd(q, two_n) != 1)
        throw std::invalid_argument("gcd(" + std::to_string(q) + ", " + std::to_string(two_n) + ") != 1");
    std::set<std::uint64_t> orbit;
    const std::uint64_t start = j % two_n;
    std::uint64_t x = start;
    do {
        orbit.insert(x);
        x = x * (q % two_n) % two_n;
    } while (x != start);
    std::vector<std::uint64_t> members(orbit.begin(), orbit.end());
    return {members.front(), std::move(members), two_n, q};
}

DefiningSet DefiningSet::from_residues(std::uint64_t n, std::uint64_t q, std::vector<std::uint64_t> residues) {
    if (n == 0) throw std::invalid_argument("negacyclic length must be positive");
    const std::uint64_t two_n = 2 * n;
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    DefiningSet z;
    z.n = n;
    z.q = q;
    std::set<std::uint64_t> seen;
    for (auto r : residues) {
        if (r >= two_n) throw std::invalid_argument("residue " + std::to_string(r) + " out of range mod " + std::to_string(two_n));
        if (r % 2 == 0) throw std::invalid_argument("residue " + std::to_string(r) + " is even");
        if (seen.count(r)) continue;
        auto c = cyclotomic_coset(r, two_n, q);
        for (auto m : c.members) {
            if (!std::binary_search(residues.begin(), residues.end(), m))
                throw std::invalid_argument("defining set " + residue_list(residues) + " is not closed: missing " +
                                            std::to_string(m));
            seen.insert(m);
        }
        z.cosets.push_back(std::move(c));
    }
    std::sort(z.cosets.begin(), z.cosets.end(),
              [](const auto& a, const auto& b) { return a.representative < b.representative; });
    z.residues = std::move(residues);
    return z;
}

DefiningSet DefiningSet::closure(std::uint64_t n, std::uint64_t q, const std::vector<std::uint64_t>& generators) {
    std::set<std::uint64_t> all;
    for (auto g : generators) {
        const auto c = cyclotomic_coset(g, 2 * n, q);
        all.insert(c.members.begin(), c.members.end());
    }
    return from_residues(n, q, {all.begin(), all.end()});
}

DefiningSet kai1_defining_set(std::uint32_t l, std::uint32_t delta) {
    if (l % 4 != 1) throw std::invalid_argument("kai1 needs l = 1 mod 4, got l = " + std::to_string(l));
    square_field(l);  // prime-power check
    if (delta > (l - 1) / 2)
        throw std::invalid_argument("kai1 depth " + std::to_string(delta) + " exceeds (l-1)/2 = " + std::to_string((l - 1) / 2));
    const std::uint64_t q = std::uint64_t{l} * l;
    const std::uint64_t n = q + 1;
    const std::int64_t t = static_cast<std::int64_t>(n / 2);
    std::vector<std::uint64_t> gens;
    for (std::uint32_t i = 0; i <= delta; ++i) gens.push_back(mod(t - 2 * static_cast<std::int64_t>(i), 2 * n));
    return DefiningSet::closure(n, q, gens);
}

DefiningSet kai2_defining_set(std::uint32_t l, std::uint32_t delta) {
    if (l % 2 == 0) throw std::invalid_argument("kai2 needs odd l, got l = " + std::to_string(l));
    square_field(l);
    if (delta < 1 || delta > (l - 1) / 2)
        throw std::invalid_argument("kai2 depth " + std::to_string(delta) + " outside [1, " + std::to_string((l - 1) / 2) + "]");
    const std::uint64_t q = std::uint64_t{l} * l;
    const std::uint64_t n = (q + 1) / 2;
    std::vector<std::uint64_t> gens;
    for (std::uint32_t i = 0; i <= delta; ++i) gens.push_back(mod(2 * static_cast<std::int64_t>(i) - 1, 2 * n));
    return DefiningSet::closure(n, q, gens);
}

NegacyclicCode negacyclic_code(const FieldPtr& field, const DefiningSet& z) {
    if (field->order() != z.q)
        throw std::invalid_argument("defining set is for q = " + std::to_string(z.q) + ", field is " + field->name());
    const std::size_t n = z.n;
    const auto root = primitive_nth_root(field, 2 * n);
    const auto& emb = root.embedding;
    const Field& ext = *emb.ext();

    Poly g_ext{1};
    for (auto j : z.residues) g_ext = poly_mul(ext, g_ext, Poly{ext.neg(ext.pow(root.root, j)), 1});
    Poly g(g_ext.size());
    for (std::size_t i = 0; i < g_ext.size(); ++i) {
        if (!emb.in_base(g_ext[i]))
            throw consistency_error("generator polynomial coefficient " + std::to_string(i) + " is not in " + field->name());
        g[i] = emb.restrict(g_ext[i]);
    }

    Poly xn1(n + 1, 0);
    xn1[0] = 1;
    xn1[n] = 1;
    if (!poly_divmod(*field, xn1, g).remainder.empty())
        throw consistency_error("generator polynomial does not divide x^n + 1");

    const std::size_t k = n - (g.size() - 1);
    Matrix gen(field, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < g.size(); ++j) gen(i, i + j) = g[j];
    auto code = LinearCode::from_generator(gen);
    if (code.dimension() != n - z.size()) throw consistency_error("negacyclic code has unexpected dimension");
    return {std::move(code), z, std::move(g)};
}

std::size_t bch_like_bound(const DefiningSet& z) {
    if (z.residues.empty()) return 1;
    const std::uint64_t two_n = 2 * z.n;
    if (z.residues.size() == z.n) return z.n + 1;  // every odd residue
    std::size_t best = 0;
    for (auto r : z.residues) {
        // only start runs at residues without a predecessor
        if (std::binary_search(z.residues.begin(), z.residues.end(), (r + two_n - 2) % two_n)) continue;
        std::size_t len = 0;
        std::uint64_t x = r;
        while (std::binary_search(z.residues.begin(), z.residues.end(), x)) {
            ++len;
            x = (x + 2) % two_n;
        }
        best = std::max(best, len);
    }
    return best + 1;
}

bool is_kai_dual_containing(const NegacyclicCode& c) { return is_hermitian_dual_containing(c.code); }

bool hermitian_residue_condition(const DefiningSet& z, std::uint32_t l) {
    const std::uint64_t two_n = 2 * z.n;
    for (auto r : z.residues) {
        const std::uint64_t img = (two_n - (r * l) % two_n) % two_n;
        if (std::binary_search(z.residues.begin(), z.residues.end(), img)) return false;
    }
    return true;
}

std::vector<Field::value_type> negacyclic_shift(const Field& f, std::span<const Field::value_type> word) {
    std::vector<Field::value_type> out(word.size());
    if (word.empty()) return out;
    out[0] = f.neg(word.back());
    std::copy(word.begin(), word.end() - 1, out.begin() + 1);
    return out;
}

}  // namespace mpqc
