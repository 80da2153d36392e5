#include "mpqc/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "mpqc/code_constructions.hpp"
#include "mpqc/errors.hpp"
#include "mpqc/matrix_product.hpp"
#include "mpqc/negacyclic.hpp"
#include "mpqc/parallel.hpp"
#include "mpqc/polynomial.hpp"
#include "mpqc/quantum.hpp"
#include "mpqc/random.hpp"
#include "mpqc/theorems.hpp"

namespace mpqc {

std::string to_string(Suite s) {
    switch (s) {
        case Suite::fields: return "fields";
        case Suite::duals: return "duals";
        case Suite::mpc: return "mpc";
        case Suite::negacyclic: return "negacyclic";
        case Suite::quantum: return "quantum";
        case Suite::all: return "all";
    }
    return "unknown";
}

Suite suite_from_string(const std::string& s) {
    for (auto v : {Suite::fields, Suite::duals, Suite::mpc, Suite::negacyclic, Suite::quantum, Suite::all})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown suite '" + s + "' (expected fields, duals, mpc, negacyclic, quantum or all)");
}

std::size_t VerifyReport::failures() const noexcept {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures;
    return n;
}

const CheckResult* VerifyReport::find(const std::string& name) const noexcept {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

constexpr std::uint64_t oracle_limit = 100'000;
constexpr std::size_t max_messages = 10;

struct OracleItem {
    LinearCode code;
    std::optional<std::size_t> bch;
};

/// Per-instance state: its random stream, codes for the oracle, and outputs.
struct Instance {
    Rng rng{0};
    std::vector<OracleItem> oracle;
    std::vector<QuantumParams> quantum;
    std::string message;
    std::string note;

    void offer(const LinearCode& c, std::optional<std::size_t> bch = std::nullopt) {
        if (c.dimension() > 0 && code_size(c) <= oracle_limit) oracle.push_back({c, bch});
    }
    bool fail(std::string m) {
        message = std::move(m);
        return false;
    }
};

using Body = std::function<bool(std::size_t, Instance&)>;

class Runner {
   public:
    Runner(std::uint64_t seed, VerifyReport& report) : seed_(seed), report_(report) {}

    void check(const std::string& suite, const std::string& name, std::size_t count, const Body& body) {
        std::vector<Instance> inst(count);
        std::vector<char> ok(count, 0);
        parallel_for(count, [&](std::size_t i) {
            inst[i].rng = Rng(seed_, name, i);
            try {
                ok[i] = body(i, inst[i]);
            } catch (const std::exception& e) {
                inst[i].message = std::string("exception: ") + e.what();
                ok[i] = 0;
            }
        });
        CheckResult r{suite, name, count, 0, {}, {}};
        for (std::size_t i = 0; i < count; ++i) {
            if (!ok[i]) {
                ++r.failures;
                if (r.messages.size() < max_messages) r.messages.push_back("#" + std::to_string(i) + ": " + inst[i].message);
            }
            if (!inst[i].note.empty()) r.notes.push_back("#" + std::to_string(i) + ": " + inst[i].note);
            for (auto& o : inst[i].oracle) oracle_.push_back(std::move(o));
            for (auto& q : inst[i].quantum) report_.quantum.push_back(std::move(q));
        }
        report_.checks.push_back(std::move(r));
    }

    /// Cross-checks every code offered since the last call.
    void oracle(const std::string& suite) {
        auto items = std::move(oracle_);
        oracle_.clear();
        check(suite, suite + ":oracle-cross-check", items.size(), [&](std::size_t i, Instance& in) {
            const auto& [c, bch] = items[i];
            const auto ex = *min_distance_exhaustive(c, oracle_limit).lower;
            const bool mds = mds_certificate(c, UINT64_MAX);
            const bool is_mds = ex == c.length() - c.dimension() + 1;
            if (mds != is_mds)
                return in.fail("mds_certificate " + std::string(mds ? "true" : "false") + " but exhaustive d = " +
                               std::to_string(ex) + " for [" + std::to_string(c.length()) + "," +
                               std::to_string(c.dimension()) + "]");
            if (bch && *bch > ex)
                return in.fail("BCH bound " + std::to_string(*bch) + " exceeds exhaustive d = " + std::to_string(ex));
            return true;
        });
    }

   private:
    std::uint64_t seed_;
    VerifyReport& report_;
    std::vector<OracleItem> oracle_;
};

FieldPtr pick_field(Rng& rng) { return rng.below(2) ? square_field(5) : square_field(3); }

std::string shape(const LinearCode& c) {
    return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]";
}

// ---------------------------------------------------------------- fields

void suite_fields(Runner& run) {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{
        {3, 2}, {5, 2}, {7, 2}, {3, 3}, {3, 4}, {11, 2}, {13, 2}, {5, 3},
        {17, 2}, {7, 3}, {5, 4}, {2, 8}, {2, 10}, {3, 7}, {2, 12}};
    run.check("fields", "field-axioms", fields.size(), [&](std::size_t i, Instance& in) {
        const auto f = Field::create(fields[i].first, fields[i].second);
        for (int t = 0; t < 2000; ++t) {
            const auto a = in.rng.element(*f), b = in.rng.element(*f), c = in.rng.element(*f);
            if (f->add(a, f->add(b, c)) != f->add(f->add(a, b), c)) return in.fail(f->name() + ": addition not associative");
            if (f->mul(a, f->mul(b, c)) != f->mul(f->mul(a, b), c)) return in.fail(f->name() + ": multiplication not associative");
            if (f->add(a, b) != f->add(b, a) || f->mul(a, b) != f->mul(b, a)) return in.fail(f->name() + ": not commutative");
            if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c))) return in.fail(f->name() + ": not distributive");
            if (f->frobenius(f->add(a, b)) != f->add(f->frobenius(a), f->frobenius(b)) ||
                f->frobenius(f->mul(a, b)) != f->mul(f->frobenius(a), f->frobenius(b)))
                return in.fail(f->name() + ": Frobenius is not a homomorphism");
        }
        for (Field::value_type a = 1; a < f->order(); ++a)
            if (f->mul(a, f->inv(a)) != 1) return in.fail(f->name() + ": a * inv(a) != 1");
        return true;
    });

    const std::vector<std::uint32_t> ls{3, 5, 7, 9, 11, 13, 17, 19, 25, 27};
    run.check("fields", "conjugation-involution", ls.size(), [&](std::size_t i, Instance& in) {
        const auto f = square_field(ls[i]);
        std::uint32_t fixed = 0;
        for (Field::value_type a = 0; a < f->order(); ++a) {
            if (f->conj(f->conj(a)) != a) return in.fail(f->name() + ": conjugation is not an involution");
            fixed += f->conj(a) == a;
        }
        if (fixed != ls[i]) return in.fail(f->name() + ": conjugation fixes " + std::to_string(fixed) + " elements");
        return true;
    });

    const std::vector<std::pair<std::uint32_t, std::uint64_t>> roots{
        {3, 10}, {3, 20}, {5, 26}, {5, 52}, {7, 50}, {7, 25}, {9, 82}, {9, 164}, {11, 122}, {11, 61}, {13, 170}, {13, 340}, {17, 290}};
    run.check("fields", "primitive-nth-root", roots.size(), [&](std::size_t i, Instance& in) {
        const auto base = square_field(roots[i].first);
        const auto n = roots[i].second;
        const auto r = primitive_nth_root(base, n);
        const auto& ext = *r.embedding.ext();
        if (ext.pow(r.root, n) != 1) return in.fail("gamma^n != 1 for n = " + std::to_string(n));
        for (auto p : prime_factors(n))
            if (ext.pow(r.root, n / p) == 1) return in.fail("gamma has order dividing n/" + std::to_string(p));
        return true;
    });

    const std::vector<std::array<std::uint32_t, 3>> embeds{{3, 1, 3}, {5, 1, 2}, {3, 2, 4}, {3, 2, 6}, {5, 2, 4}, {7, 2, 4}, {3, 4, 8}};
    run.check("fields", "embedding-homomorphism", embeds.size(), [&](std::size_t i, Instance& in) {
        const auto base = Field::create(embeds[i][0], embeds[i][1]);
        const auto ext = Field::create(embeds[i][0], embeds[i][2]);
        ExtensionEmbedding e(base, ext);
        for (Field::value_type a = 0; a < base->order(); ++a)
            for (Field::value_type b = 0; b < base->order(); ++b) {
                if (e.embed(base->add(a, b)) != ext->add(e.embed(a), e.embed(b)))
                    return in.fail(base->name() + " -> " + ext->name() + ": embedding not additive");
                if (e.embed(base->mul(a, b)) != ext->mul(e.embed(a), e.embed(b)))
                    return in.fail(base->name() + " -> " + ext->name() + ": embedding not multiplicative");
            }
        return true;
    });
}

// ----------------------------------------------------------------- duals

void suite_duals(Runner& run) {
    run.check("duals", "rref-uniqueness", 100, [](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto r = in.rng.between(1, 5), n = in.rng.between(1, 7);
        const auto m = random_matrix(f, r, n, in.rng);
        const auto ops = random_nonsingular(f, r, in.rng);
        if (!(rref(ops * m).reduced == rref(m).reduced)) return in.fail("row operations changed the rref");
        return true;
    });
    run.check("duals", "nullspace-orthogonality", 100, [](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto r = in.rng.between(1, 5), n = in.rng.between(1, 7);
        const auto m = random_matrix(f, r, n, in.rng);
        const auto ns = nullspace(m);
        if (ns.rows() + rank(m) != n) return in.fail("rank + nullity != n");
        for (std::size_t i = 0; i < ns.rows(); ++i)
            for (std::size_t j = 0; j < m.rows(); ++j)
                if (euclidean_inner(*f, ns.row(i), m.row(j)) != 0) return in.fail("nullspace row not orthogonal");
        return true;
    });
    run.check("duals", "minor-composition", 100, [](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto m = random_matrix(f, 5, 6, in.rng);
        auto subset = [&](std::size_t n) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i)
                if (in.rng.below(2)) s.push_back(i);
            if (s.empty()) s.push_back(in.rng.below(n));
            return s;
        };
        const auto rows = subset(5), cols = subset(6);
        const auto inner_r = subset(rows.size()), inner_c = subset(cols.size());
        std::vector<std::size_t> direct_r, direct_c;
        for (auto i : inner_r) direct_r.push_back(rows[i]);
        for (auto i : inner_c) direct_c.push_back(cols[i]);
        if (!(minor(minor(m, rows, cols), inner_r, inner_c) == minor(m, direct_r, direct_c)))
            return in.fail("minor of a minor differs from the direct minor");
        return true;
    });
    run.check("duals", "dual-dimensions", 100, [](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto n = in.rng.between(1, 7);
        const auto c = random_code(f, n, in.rng.below(n + 1), in.rng);
        in.offer(c);
        const auto e = euclidean_dual(c);
        const auto h = hermitian_dual(c);
        if (c.dimension() + e.dimension() != n || c.dimension() + h.dimension() != n)
            return in.fail("dim C + dim dual != n for " + shape(c));
        if (!(euclidean_dual(e) == c) || !(hermitian_dual(h) == c)) return in.fail("double dual differs from C");
        return true;
    });
    run.check("duals", "hermitian-dual-is-conjugate-dual", 100, [](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto n = in.rng.between(1, 7);
        const auto c = random_code(f, n, in.rng.below(n + 1), in.rng);
        if (!(hermitian_dual(c) == euclidean_dual(c.conjugate()))) return in.fail("C^perp_h != (C^l)^perp");
        return true;
    });
    run.check("duals", "dual-containing-rank", 100, [](std::size_t i, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto n = in.rng.between(2, 7);
        const auto c = i % 2 ? random_code(f, n, in.rng.below(n + 1), in.rng)
                             : random_dual_containing(f, n, n / 2, in.rng);
        in.offer(c);
        const bool hdc = is_hermitian_dual_containing(c);
        if (i % 2 == 0 && !hdc) return in.fail("generated code " + shape(c) + " is not dual-containing");
        if (hdc && 2 * c.dimension() < n) return in.fail("dual-containing code with 2k < n");
        return true;
    });
    run.check("duals", "duality-reverses-containment", 100, [](std::size_t i, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto n = in.rng.between(1, 6);
        const auto b = random_code(f, n, in.rng.below(n + 1), in.rng);
        const auto a = i % 2 ? random_subcode(b, in.rng.below(b.dimension() + 1), in.rng)
                             : random_code(f, n, in.rng.below(n + 1), in.rng);
        if (is_subcode(a, b) != is_subcode(hermitian_dual(b), hermitian_dual(a)))
            return in.fail("containment not reversed by the Hermitian dual");
        if (i % 2 && !is_subcode(a, b)) return in.fail("random subcode is not a subcode");
        return true;
    });

    struct Family {
        int kind;  // 0: lemma 3.3(i), 1: lemma 3.3(ii), 2: lemma 3.4
        std::uint32_t l, d;
    };
    std::vector<Family> fams;
    for (std::uint32_t l : {3u, 5u}) {
        for (std::uint32_t d = 1; d <= l + 1; ++d) fams.push_back({0, l, d});
        for (std::uint32_t d = 1; d <= l; ++d) fams.push_back({1, l, d});
    }
    for (std::uint32_t d = 1; d <= 6; ++d) fams.push_back({2, 5, d});
    run.check("duals", "family-codes", fams.size(), [&](std::size_t i, Instance& in) {
        const auto [kind, l, d] = fams[i];
        const std::string tag = std::string(kind == 0 ? "lemma33(i)" : kind == 1 ? "lemma33(ii)" : "lemma34") +
                                " l=" + std::to_string(l) + " d=" + std::to_string(d);
        std::optional<FamilyCode> fc;
        try {
            fc = kind == 0   ? lemma33_code(l, d, Lemma33Variant::i)
                 : kind == 1 ? lemma33_code(l, d, Lemma33Variant::ii)
                             : lemma34_code(l, d);
        } catch (const construction_gap& e) {
            in.note = tag + ": construction gap";
            return true;
        }
        const std::size_t n = kind == 0 ? l * l - 1 : kind == 1 ? l * l : l * l + 1;
        const auto& c = fc->code;
        in.offer(c);
        if (c.length() != n || c.dimension() != n + 1 - d) return in.fail(tag + ": wrong parameters " + shape(c));
        if (!is_hermitian_dual_containing(c)) return in.fail(tag + ": not dual-containing");
        if (!mds_certificate(c, UINT64_MAX)) return in.fail(tag + ": MDS certificate fails");
        return true;
    });
}

// ------------------------------------------------------------------- mpc

void suite_mpc(Runner& run) {
    run.check("mpc", "lemma2.3-dual-formula", 100, [](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto s = in.rng.between(2, 3), n = in.rng.between(1, 6);
        std::vector<LinearCode> codes;
        for (std::size_t i = 0; i < s; ++i) codes.push_back(random_code(f, n, in.rng.below(n + 1), in.rng));
        MatrixProductSpec spec(codes, random_nonsingular(f, s, in.rng));
        if (!(mpc_dual_formula(spec) == euclidean_dual(mpc_construct(spec))))
            return in.fail("dual formula differs from the dual of the product");
        return true;
    });
    // components with sum of dimensions small enough for exhaustive product distances
    auto small_components = [](Instance& in, const FieldPtr& f, std::size_t s, std::size_t n) {
        const std::size_t cap = f->order() == 9 ? 6 : 4;
        std::vector<LinearCode> codes;
        std::size_t used = 0;
        for (std::size_t i = 0; i < s; ++i) {
            const std::size_t room = cap - used - (s - i - 1);
            const auto k = in.rng.between(1, std::min(n, room));
            used += k;
            codes.push_back(random_code(f, n, k, in.rng));
        }
        return codes;
    };
    auto exact_distances = [](Instance& in, const std::vector<LinearCode>& codes) {
        std::vector<std::size_t> d;
        for (const auto& c : codes) {
            in.offer(c);
            d.push_back(*min_distance_exhaustive(c).lower);
        }
        return d;
    };
    run.check("mpc", "lemma2.1-frr-bound", 60, [&](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto s = in.rng.between(1, 3);
        const auto m = in.rng.between(s, std::min<std::uint64_t>(s + 1, 4));
        const auto n = in.rng.between(2, 4);
        const auto codes = small_components(in, f, s, n);
        const auto d = exact_distances(in, codes);
        MatrixProductSpec spec(codes, random_frr(f, s, m, in.rng));
        const auto product = mpc_construct(spec);
        in.offer(product);
        std::size_t sum = 0;
        for (const auto& c : codes) sum += c.dimension();
        if (product.dimension() != sum) return in.fail("FRR product dimension differs from the sum");
        const auto bound = distance_bound_frr(spec, d);
        const auto ex = *min_distance_exhaustive(product).lower;
        if (ex < bound) return in.fail("exhaustive d = " + std::to_string(ex) + " below the bound " + std::to_string(bound));
        return true;
    });
    run.check("mpc", "lemma2.2-nsc-exact", 40, [&](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto s = in.rng.between(1, 3);
        const auto n = in.rng.between(2, 4);
        const auto codes = small_components(in, f, s, n);
        const auto d = exact_distances(in, codes);
        MatrixProductSpec spec(codes, random_nsc_upper(f, s, in.rng));
        const auto product = mpc_construct(spec);
        in.offer(product);
        const auto b = distance_bound_nsc(spec, d);
        const auto ex = *min_distance_exhaustive(product).lower;
        if (!b.exact || ex != b.lower)
            return in.fail("exhaustive d = " + std::to_string(ex) + " but d* = " + std::to_string(b.lower));
        return true;
    });
    auto certified = [](Instance& in, const std::vector<LinearCode>& codes) {
        std::vector<std::size_t> d;
        for (const auto& c : codes) {
            in.offer(c);
            d.push_back(*certify_distance(c).lower);
        }
        return d;
    };
    run.check("mpc", "theorem3.1-closure", 50, [&](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto s = in.rng.between(1, 4);
        const auto n = in.rng.between(2, 5);
        std::vector<LinearCode> codes;
        for (std::size_t i = 0; i < s; ++i) codes.push_back(random_dual_containing(f, n, n / 2, in.rng));
        const auto d = certified(in, codes);
        const auto p = theorem31_construct(codes, random_diagonal_condition(f, s, in.rng), d);
        if (!is_hermitian_dual_containing(p.code)) return in.fail("product is not dual-containing");
        return true;
    });
    run.check("mpc", "main1-closure", 50, [&](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto s = in.rng.between(1, 3);
        const auto n = in.rng.between(2, 6);
        auto chain = random_dual_containing_chain(f, n, s, in.rng);
        if (in.rng.below(2)) std::reverse(chain.begin(), chain.end());
        const auto d = certified(in, chain);
        const auto p = theorem_main1_construct(chain, random_nsc_upper(f, s, in.rng), d);
        if (!is_hermitian_dual_containing(p.code)) return in.fail("product is not dual-containing");
        return true;
    });
    run.check("mpc", "character-matrix", 12, [](std::size_t i, Instance& in) {
        const std::uint32_t ls[] = {3, 5, 7};
        const auto f = square_field(ls[i / 4]);
        const auto r = static_cast<std::uint32_t>(i % 4 + 1);
        const auto a = character_matrix(f, r);
        if (!(a.conjugate() == a)) return in.fail("A^(l) != A");
        if (!(a * a.transpose() == Matrix::identity(f, a.rows()).scaled(f->from_int(1L << r))))
            return in.fail("A A^T != 2^r I");
        const auto t = theorem31_check(a);
        if (!t.diagonal_condition || !t.scalar_condition) return in.fail("Theorem 3.1 conditions fail");
        return true;
    });
}

// ------------------------------------------------------------ negacyclic

void suite_negacyclic(Runner& run) {
    struct Fam {
        bool kai1;
        std::uint32_t l, delta;
    };
    std::vector<Fam> fams;
    for (std::uint32_t l : {5u, 13u})
        for (std::uint32_t d = 0; d <= (l - 1) / 2; ++d) fams.push_back({true, l, d});
    for (std::uint32_t l : {7u, 9u, 11u})
        for (std::uint32_t d = 1; d <= (l - 1) / 2; ++d) fams.push_back({false, l, d});
    run.check("negacyclic", "kai-families", fams.size(), [&](std::size_t i, Instance& in) {
        const auto [kai1, l, delta] = fams[i];
        const auto z = kai1 ? kai1_defining_set(l, delta) : kai2_defining_set(l, delta);
        const auto nc = negacyclic_code(square_field(l), z);
        const std::string tag = std::string(kai1 ? "kai1" : "kai2") + " l=" + std::to_string(l) + " delta=" + std::to_string(delta);
        if (nc.code.dimension() != z.n - z.size()) return in.fail(tag + ": dim != n - |Z|");
        if (!is_kai_dual_containing(nc)) return in.fail(tag + ": not dual-containing");
        return true;
    });

    // small (n, l) with gcd(2n, l^2) = 1 for random defining sets
    const std::vector<std::pair<std::uint64_t, std::uint32_t>> shapes{{4, 3}, {5, 3}, {7, 3}, {10, 3}, {6, 5}, {13, 5}, {26, 5}};
    auto random_z = [&](Instance& in) {
        const auto [n, l] = shapes[in.rng.below(shapes.size())];
        const std::uint64_t q = std::uint64_t{l} * l;
        std::vector<std::uint64_t> gens;
        const auto count = in.rng.below(4);
        for (std::uint64_t t = 0; t < count; ++t) gens.push_back(2 * in.rng.below(n) + 1);
        return std::make_pair(l, DefiningSet::closure(n, q, gens));
    };
    run.check("negacyclic", "genpoly-and-shifts", 60, [&](std::size_t, Instance& in) {
        const auto [l, z] = random_z(in);
        const auto f = square_field(l);
        const auto nc = negacyclic_code(f, z);
        Poly xn(z.n + 1, 0);
        xn[0] = 1;
        xn[z.n] = 1;
        if (!poly_divmod(*f, xn, nc.genpoly).remainder.empty()) return in.fail("g does not divide x^n + 1");
        if (nc.code.dimension() != z.n - z.size()) return in.fail("dim != n - |Z|");
        in.offer(nc.code, bch_like_bound(z));
        if (nc.code.dimension() == 0) return true;
        for (int t = 0; t < 20; ++t) {
            const auto w = nc.code.encode(in.rng.vector(*f, nc.code.dimension()));
            if (!nc.code.contains(negacyclic_shift(*f, w))) return in.fail("negacyclic shift leaves the code");
        }
        return true;
    });
    run.check("negacyclic", "bch-bound", 40, [&](std::size_t i, Instance& in) {
        std::uint32_t l;
        DefiningSet z;
        if (i < 3) {
            l = 5;
            z = kai1_defining_set(5, static_cast<std::uint32_t>(i));
        } else {
            std::tie(l, z) = random_z(in);
        }
        const auto nc = negacyclic_code(square_field(l), z);
        if (nc.code.dimension() == 0) return true;
        const auto bch = bch_like_bound(z);
        in.offer(nc.code, bch);
        std::optional<std::size_t> exact;
        if (code_size(nc.code) <= oracle_limit)
            exact = *min_distance_exhaustive(nc.code, oracle_limit).lower;
        else if (mds_certificate(nc.code, UINT64_MAX))
            exact = nc.code.length() - nc.code.dimension() + 1;
        if (!exact) {
            in.note = "no oracle for [" + std::to_string(z.n) + "," + std::to_string(nc.code.dimension()) + "]";
            return true;
        }
        if (bch > *exact) return in.fail("BCH bound " + std::to_string(bch) + " exceeds d = " + std::to_string(*exact));
        return true;
    });
    run.check("negacyclic", "monotonicity", 60, [&](std::size_t, Instance& in) {
        const auto [l, z] = random_z(in);
        auto gens = z.residues;
        gens.push_back(2 * in.rng.below(z.n) + 1);
        const auto bigger = DefiningSet::closure(z.n, z.q, gens);
        const auto f = square_field(l);
        if (!is_subcode(negacyclic_code(f, bigger).code, negacyclic_code(f, z).code))
            return in.fail("code(Z') is not contained in code(Z)");
        return true;
    });
}

// --------------------------------------------------------------- quantum

void suite_quantum(Runner& run) {
    run.check("quantum", "hermitian-refusal", 50, [](std::size_t i, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto n = in.rng.between(2, 6);
        LinearCode c = i % 2 ? random_code(f, n, in.rng.below(n + 1), in.rng)
                             : random_dual_containing(f, n, n / 2, in.rng);
        if (i % 2 == 0 && c.dimension() > 0) c = random_subcode(c, c.dimension() - 1, in.rng);
        if (is_hermitian_dual_containing(c)) {
            in.note = "sample " + shape(c) + " is dual-containing";
            return true;
        }
        try {
            hermitian_construction(c, certify_distance(c), "adversarial");
        } catch (const std::invalid_argument&) {
            return true;
        }
        return in.fail("non-dual-containing " + shape(c) + " was accepted");
    });
    run.check("quantum", "random-hermitian-records", 50, [](std::size_t, Instance& in) {
        const auto f = pick_field(in.rng);
        const auto n = in.rng.between(2, 7);
        const auto c = random_dual_containing(f, n, n / 2, in.rng);
        in.offer(c);
        auto q = hermitian_construction(c, certify_distance(c), "random dual-containing");
        in.quantum.push_back(q);
        if (q.k != 2 * static_cast<std::int64_t>(c.dimension()) - static_cast<std::int64_t>(n)) return in.fail("k != 2k_c - n");
        if ((q.k - q.n) % 2 != 0) return in.fail("k and n differ in parity");
        return true;
    });
    const auto& rows = table1_rows();
    run.check("quantum", "table1-formulas", rows.size(), [&](std::size_t i, Instance& in) {
        const auto& r = rows[i];
        const auto p = theorem35_params(r.l, r.d, r.c);
        in.quantum.push_back(p);
        if (p.n != r.new_code.n || p.k != r.new_code.k)
            return in.fail("row l=" + std::to_string(r.l) + " d=" + std::to_string(r.d) + " gives [[" +
                           std::to_string(p.n) + "," + std::to_string(p.k) + "]]");
        return true;
    });
    const Case35 l5_cases[] = {Case35::i, Case35::v};
    run.check("quantum", "theorem3.5-build-l5", 2, [&](std::size_t i, Instance& in) {
        const auto b = theorem35_build(5, 4, l5_cases[i]);
        in.quantum.push_back(b.built);
        if (!b.built.verified) return in.fail("not verified");
        if (!(b.built.triple() == b.formula.triple())) return in.fail("built parameters differ from the formula");
        return true;
    });
    const auto triples = admissible_triples(MainTheorem::main2, 5, DeltaMode::relaxed);
    run.check("quantum", "main2-l5-predicted-vs-built", triples.size(), [&](std::size_t i, Instance& in) {
        const auto built = theorem_main_construct(MainTheorem::main2, 5, triples[i], DeltaMode::relaxed, true);
        const auto pred = theorem_main_construct(MainTheorem::main2, 5, triples[i], DeltaMode::relaxed, false);
        in.quantum.push_back(built.computed);
        if (!built.computed.verified) return in.fail("not verified");
        if (!(built.computed.triple() == pred.computed.triple())) return in.fail("prediction differs from the build");
        return true;
    });
}

void singleton_audit(Runner& run, const VerifyReport& report, const std::string& suite, std::size_t from) {
    const std::vector<QuantumParams> records(report.quantum.begin() + static_cast<std::ptrdiff_t>(from), report.quantum.end());
    run.check(suite, suite + ":quantum-singleton", records.size(), [&](std::size_t i, Instance& in) {
        const auto& q = records[i];
        if (2 * static_cast<std::int64_t>(q.d_lower) > q.n - q.k + 2)
            return in.fail("[[" + std::to_string(q.n) + "," + std::to_string(q.k) + "," + std::to_string(q.d_lower) +
                           "]] violates the Singleton bound");
        return true;
    });
}

}  // namespace

VerifyReport run_verify(Suite suite, std::uint64_t seed) {
    VerifyReport report;
    report.seed = seed;
    report.suite = to_string(suite);
    Runner run(seed, report);
    auto want = [suite](Suite s) { return suite == Suite::all || suite == s; };
    if (want(Suite::fields)) suite_fields(run);
    if (want(Suite::duals)) {
        suite_duals(run);
        run.oracle("duals");
    }
    if (want(Suite::mpc)) {
        suite_mpc(run);
        run.oracle("mpc");
    }
    if (want(Suite::negacyclic)) {
        suite_negacyclic(run);
        run.oracle("negacyclic");
    }
    if (want(Suite::quantum)) {
        const auto from = report.quantum.size();
        suite_quantum(run);
        run.oracle("quantum");
        singleton_audit(run, report, "quantum", from);
    }
    return report;
}

VerifyReport verify_fixture(const json& doc, const Budgets& budgets) {
    VerifyReport report;
    report.suite = "fixture";
    std::vector<json> records;
    if (doc.is_object() && doc.contains("codes") && doc.at("codes").is_array())
        records.assign(doc.at("codes").begin(), doc.at("codes").end());
    else if (doc.is_array())
        records.assign(doc.begin(), doc.end());
    else
        records.push_back(doc);
    Runner run(0, report);
    run.check("fixture", "code-records", records.size(), [&](std::size_t i, Instance& in) {
        CodeRecord r = [&] {
            try {
                return code_record_from_json(records[i]);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument(std::string("malformed record: ") + e.what());
            }
        }();
        const auto& c = r.code;
        if (r.gen_rows != c.dimension())
            return in.fail("generator has " + std::to_string(r.gen_rows) + " rows but rank " + std::to_string(c.dimension()));
        if (r.claimed_k != c.dimension())
            return in.fail("claimed k = " + std::to_string(r.claimed_k) + " but rank " + std::to_string(c.dimension()));
        if (c.dimension() == 0) {
            if (r.claimed_lower || r.claimed_upper) return in.fail("zero code with a distance claim");
            return true;
        }
        const auto rep = certify_distance(c, budgets);
        if (r.claimed_lower && rep.upper && *r.claimed_lower > *rep.upper)
            return in.fail("claimed lower bound " + std::to_string(*r.claimed_lower) + " exceeds a codeword of weight " +
                           std::to_string(*rep.upper));
        if (r.claimed_upper && rep.lower && *r.claimed_upper < *rep.lower)
            return in.fail("claimed upper bound " + std::to_string(*r.claimed_upper) + " is below the certified " +
                           std::to_string(*rep.lower));
        if (r.claimed_lower && rep.exact() && *r.claimed_lower > *rep.lower)
            return in.fail("claimed lower bound exceeds the exact distance " + std::to_string(*rep.lower));
        if (r.claimed_lower && !rep.exact()) in.note = "distance claim checked against bounds only";
        return true;
    });
    return report;
}

json verify_report_to_json(const VerifyReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"suite", c.suite},
                          {"name", c.name},
                          {"instances", c.instances},
                          {"failures", c.failures},
                          {"notes", c.notes},
                          {"messages", c.messages}});
    }
    return {{"suite", r.suite},
            {"seed", r.seed},
            {"passed", r.passed()},
            {"failures", r.failures()},
            {"quantum_records", r.quantum.size()},
            {"checks", std::move(checks)}};
}

}  // namespace mpqc
