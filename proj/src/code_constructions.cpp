#include "mpqc/code_constructions.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "mpqc/errors.hpp"

namespace mpqc {

LinearCode grs_code(const GrsSpec& s) {
    if (!s.field) throw std::invalid_argument("GRS spec without a field");
    const std::size_t n = s.points.size();
    if (s.multipliers.size() != n) throw std::invalid_argument("GRS needs one multiplier per point");
    if (s.k > n) throw std::invalid_argument("GRS dimension exceeds length");
    const Field& f = *s.field;
    std::set<Field::value_type> seen;
    for (std::size_t j = 0; j < n; ++j) {
        if (s.points[j] >= f.order() || s.multipliers[j] >= f.order())
            throw std::invalid_argument("GRS entry out of range for " + f.name());
        if (!seen.insert(s.points[j]).second) throw std::invalid_argument("GRS points must be distinct");
        if (s.multipliers[j] == 0) throw std::invalid_argument("GRS multipliers must be nonzero");
    }
    Matrix g(s.field, s.k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Field::value_type v = s.multipliers[j];
        for (std::size_t i = 0; i < s.k; ++i) {
            g(i, j) = v;
            v = f.mul(v, s.points[j]);
        }
    }
    auto code = LinearCode::from_generator(g);
    if (code.dimension() != s.k) throw consistency_error("GRS generator lost rank");
    return code;
}

Field::value_type norm_preimage(const Field& f, Field::value_type u) {
    for (Field::value_type x = 1; x < f.order(); ++x)
        if (f.norm(x) == u) return x;
    throw std::domain_error("no element of " + f.name() + " has norm " + std::to_string(u));
}

std::optional<std::vector<Field::value_type>> solve_norm_multipliers(const Matrix& g, std::uint64_t budget) {
    const Field& f = *g.field();
    const auto l = f.subfield_order();
    if (!l) throw std::domain_error("norm multipliers need a field of square order");
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    Matrix system(g.field(), k * k, n);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t j = 0; j < n; ++j) system(a * k + b, j) = f.mul(g(a, j), f.conj(g(b, j)));
    const Matrix basis = nullspace(system);
    const std::size_t r = basis.rows();
    if (r == 0) return std::nullopt;
    for (auto v : basis.data())
        if (!f.in_subfield(v, *l)) throw consistency_error("norm system basis is not defined over the subfield");
    for (std::size_t j = 0; j < n; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < r && !any; ++i) any = basis(i, j) != 0;
        if (!any) return std::nullopt;
    }

    // Pivot entries of a combination are its coefficients, so only nonzero
    // coefficients from GF(l) can give an all-nonzero vector.
    std::vector<Field::value_type> units;
    for (auto x : f.subfield_elements(*l))
        if (x) units.push_back(x);
    const std::size_t base = units.size();
    std::vector<std::size_t> digits(r, 0);
    std::vector<Field::value_type> u(n, 0);
    for (std::size_t i = 0; i < r; ++i) f.axpy(u, units[0], basis.row(i));
    for (std::uint64_t step = 0; step < budget; ++step) {
        if (std::all_of(u.begin(), u.end(), [](auto x) { return x != 0; })) return u;
        std::size_t i = 0;
        for (; i < r; ++i) {
            const auto from = units[digits[i]];
            digits[i] = (digits[i] + 1) % base;
            f.axpy(u, f.sub(units[digits[i]], from), basis.row(i));
            if (digits[i] != 0) break;
        }
        if (i == r) break;
    }
    return std::nullopt;
}

namespace {

// Checks a candidate and attaches its distance report; nullopt means the
// candidate is not dual-containing or not MDS.
struct Structural {
    std::size_t lower;
    LowerSource source;
};

std::optional<FamilyCode> accept(LinearCode code, std::size_t d, std::string realization, const SearchBudget& budget,
                                 std::optional<Structural> structural = std::nullopt) {
    const std::size_t n = code.length();
    if (code.dimension() + d != n + 1) throw consistency_error("candidate has the wrong dimension");
    if (!is_hermitian_dual_containing(code)) return std::nullopt;
    const std::size_t k = code.dimension();
    DistanceReport report;
    if (code_size(code) <= budget.distance.enumeration) {
        report = min_distance_exhaustive(code, budget.distance.enumeration);
        if (*report.lower != d) return std::nullopt;
    } else if (binomial(n, std::min(k, n - k)) <= budget.distance.subsets) {
        if (!mds_certificate(code, budget.distance.subsets)) return std::nullopt;
        report = {d, LowerSource::mds_certificate, witness_weight(code), UpperSource::witness_codeword};
    } else if (structural) {
        if (structural->lower != d) throw consistency_error("structural bound disagrees with the designed distance");
        const auto witness = witness_weight(code);
        if (witness < d) throw consistency_error("structural bound exceeds the weight of a generator row");
        report = {d, structural->source, witness, UpperSource::witness_codeword};
    } else {
        throw budget_exceeded("cannot certify the distance of the " + realization + " candidate within budget");
    }
    return FamilyCode{std::move(code), d, report, std::move(realization), std::nullopt, std::nullopt};
}

Matrix vandermonde(const FieldPtr& f, const std::vector<Field::value_type>& points, std::size_t rows) {
    Matrix g(f, rows, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        Field::value_type v = 1;
        for (std::size_t i = 0; i < rows; ++i) {
            g(i, j) = v;
            v = f->mul(v, points[j]);
        }
    }
    return g;
}

// Hermitian dual of the row space of g with column j scaled by a norm-u_j element.
LinearCode dual_of_scaled(const Matrix& g, const std::vector<Field::value_type>& u) {
    const Field& f = *g.field();
    Matrix d = g;
    for (std::size_t j = 0; j < g.cols(); ++j) {
        const auto w = norm_preimage(f, u[j]);
        for (std::size_t i = 0; i < g.rows(); ++i) d(i, j) = f.mul(d(i, j), w);
    }
    return hermitian_dual(LinearCode::from_generator(d));
}

std::optional<FamilyCode> norm_solve(const FieldPtr& f, const std::vector<Field::value_type>& points, std::size_t d,
                                     const SearchBudget& budget) {
    if (d < 2) return std::nullopt;
    const Matrix g = vandermonde(f, points, d - 1);
    const auto u = solve_norm_multipliers(g, budget.combinations);
    if (!u) return std::nullopt;
    return accept(dual_of_scaled(g, *u), d, "grs-norm-solve", budget, Structural{d, LowerSource::grs_structure});
}

// Projective points of PG(k-1, q) normalized to a leading 1, in lexicographic order.
std::vector<std::vector<Field::value_type>> projective_points(std::uint32_t q, std::size_t k) {
    std::vector<std::vector<Field::value_type>> out;
    for (std::size_t lead = 0; lead < k; ++lead) {
        const std::size_t free = k - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < free; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<Field::value_type> p(k, 0);
            p[lead] = 1;
            std::uint64_t v = idx;
            for (std::size_t i = k; i-- > lead + 1;) {
                p[i] = static_cast<Field::value_type>(v % q);
                v /= q;
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

// Backtracking search for an n-arc in PG(k-1, q) containing the standard frame
// whose coordinate matrix admits norm multipliers.
class ArcSearch {
   public:
    ArcSearch(FieldPtr f, std::size_t n, std::size_t k, const SearchBudget& budget)
        : f_(std::move(f)), n_(n), k_(k), budget_(budget), points_(projective_points(f_->order(), k)) {}

    std::optional<FamilyCode> run(std::size_t d) {
        if (k_ < 3 || n_ < k_ + 1) return std::nullopt;
        std::vector<std::vector<Field::value_type>> frame;
        for (std::size_t i = 0; i < k_; ++i) {
            std::vector<Field::value_type> e(k_, 0);
            e[i] = 1;
            frame.push_back(e);
        }
        frame.emplace_back(k_, 1);
        for (const auto& p : frame) chosen_.push_back(p);
        d_ = d;
        return extend(0);
    }

   private:
    bool independent_with(const std::vector<Field::value_type>& p) const {
        const std::size_t m = chosen_.size();
        const std::size_t t = k_ - 1;
        std::vector<std::size_t> idx(t);
        for (std::size_t i = 0; i < t; ++i) idx[i] = i;
        Matrix sq(f_, k_, k_);
        while (true) {
            for (std::size_t c = 0; c < t; ++c)
                for (std::size_t r = 0; r < k_; ++r) sq(r, c) = chosen_[idx[c]][r];
            for (std::size_t r = 0; r < k_; ++r) sq(r, t) = p[r];
            if (determinant(sq) == 0) return false;
            std::size_t i = t;
            while (i-- > 0)
                if (idx[i] < m - t + i) break;
            if (i == static_cast<std::size_t>(-1)) return true;
            ++idx[i];
            for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    bool in_chosen(const std::vector<Field::value_type>& p) const {
        for (const auto& c : chosen_)
            if (c == p) return true;
        return false;
    }

    std::optional<FamilyCode> extend(std::size_t start) {
        if (chosen_.size() == n_) {
            Matrix g(f_, k_, n_);
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t r = 0; r < k_; ++r) g(r, j) = chosen_[j][r];
            const auto u = solve_norm_multipliers(g, budget_.combinations);
            if (!u) return std::nullopt;
            return accept(dual_of_scaled(g, *u), d_, "arc-search", budget_, Structural{d_, LowerSource::arc});
        }
        for (std::size_t c = start; c < points_.size(); ++c) {
            if (++nodes_ > budget_.arc_nodes) return std::nullopt;
            const auto& p = points_[c];
            if (in_chosen(p) || !independent_with(p)) continue;
            chosen_.push_back(p);
            auto found = extend(c + 1);
            chosen_.pop_back();
            if (found || nodes_ > budget_.arc_nodes) return found;
        }
        return std::nullopt;
    }

    FieldPtr f_;
    std::size_t n_;
    std::size_t k_;
    SearchBudget budget_;
    std::vector<std::vector<Field::value_type>> points_;
    std::vector<std::vector<Field::value_type>> chosen_;
    std::size_t d_ = 0;
    std::uint64_t nodes_ = 0;
};

std::mutex cache_mutex;
std::map<std::tuple<std::uint32_t, std::uint32_t, int>, FamilyCode> cache;

std::optional<FamilyCode> cached(std::uint32_t l, std::uint32_t d, int kind) {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find({l, d, kind});
    if (it == cache.end()) return std::nullopt;
    return it->second;
}

FamilyCode remember(std::uint32_t l, std::uint32_t d, int kind, FamilyCode c) {
    std::lock_guard lock(cache_mutex);
    return cache.emplace(std::tuple{l, d, kind}, std::move(c)).first->second;
}

std::string family_name(std::uint32_t l, std::uint32_t d, const char* which) {
    return std::string(which) + " (l=" + std::to_string(l) + ", d=" + std::to_string(d) + ")";
}

FamilyCode full_space(const FieldPtr& f, std::size_t n) {
    auto code = LinearCode::full(f, n);
    DistanceReport r{1, LowerSource::exhaustive, 1, UpperSource::exhaustive};
    if (n > 0) r = {1, LowerSource::mds_certificate, witness_weight(code), UpperSource::witness_codeword};
    return FamilyCode{std::move(code), 1, r, "full-space", std::nullopt, std::nullopt};
}

FamilyCode lemma33_i(std::uint32_t l, std::uint32_t d, const SearchBudget& budget) {
    const auto f = square_field(l);
    const std::uint64_t big_n = std::uint64_t{l} * l - 1;
    if (d == 1) return full_space(f, big_n);
    std::vector<Field::value_type> points(big_n);
    for (std::uint64_t j = 0; j < big_n; ++j) points[j] = f->exp(j);

    // Cyclic route: zeros alpha^b, ..., alpha^(b+d-2). Starts b = 1, 2, ..., N-1, 0.
    for (std::uint64_t step = 0; step < big_n; ++step) {
        const std::uint64_t b = (step + 1) % big_n;
        std::set<std::uint64_t> zeros;
        for (std::uint64_t i = 0; i + 1 < d; ++i) zeros.insert((b + i) % big_n);
        bool disjoint = true;
        for (auto z : zeros)
            if (zeros.count((big_n - (z * l) % big_n) % big_n)) disjoint = false;
        if (!disjoint) continue;
        GrsSpec spec{f, points, std::vector<Field::value_type>(big_n), big_n - d + 1};
        for (std::uint64_t j = 0; j < big_n; ++j) {
            const std::uint64_t e = (j * ((1 + big_n - b % big_n) % big_n)) % big_n;
            spec.multipliers[j] = f->exp(e);
        }
        auto found = accept(grs_code(spec), d, "cyclic b=" + std::to_string(b), budget,
                            Structural{d, LowerSource::grs_structure});
        if (found) {
            found->grs = std::move(spec);
            return *found;
        }
    }
    if (auto found = norm_solve(f, points, d, budget)) return *found;
    if (auto found = ArcSearch(f, big_n, d - 1, budget).run(d)) return *found;
    throw construction_gap("no Hermitian dual-containing realization found for " + family_name(l, d, "Lemma 3.3(i)"));
}

FamilyCode lemma33_ii(std::uint32_t l, std::uint32_t d, const SearchBudget& budget) {
    const auto f = square_field(l);
    const std::uint32_t q = f->order();
    if (d == 1) return full_space(f, q);
    std::vector<Field::value_type> points(q);
    for (std::uint32_t j = 0; j < q; ++j) points[j] = j;
    GrsSpec spec{f, points, std::vector<Field::value_type>(q, 1), q + 1 - d};
    if (auto found = accept(grs_code(spec), d, "grs all-ones", budget, Structural{d, LowerSource::grs_structure})) {
        found->grs = std::move(spec);
        return *found;
    }
    if (auto found = norm_solve(f, points, d, budget)) return *found;
    if (auto found = ArcSearch(f, q, d - 1, budget).run(d)) return *found;
    throw construction_gap("no Hermitian dual-containing realization found for " + family_name(l, d, "Lemma 3.3(ii)"));
}

// Odd d: unions of cosets of total size d-1 in representative order.
std::optional<FamilyCode> lemma34_search(const FieldPtr& f, std::uint32_t l, std::uint32_t d, const SearchBudget& budget) {
    const std::uint64_t q = f->order();
    const std::uint64_t n = q + 1;
    std::vector<CyclotomicCoset> cosets;
    std::set<std::uint64_t> seen;
    for (std::uint64_t r = 1; r < 2 * n; r += 2) {
        if (seen.count(r)) continue;
        auto c = cyclotomic_coset(r, 2 * n, q);
        seen.insert(c.members.begin(), c.members.end());
        cosets.push_back(std::move(c));
    }
    std::uint64_t tried = 0;
    std::vector<std::uint64_t> residues;
    std::optional<FamilyCode> result;
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        if (result || tried > budget.combinations) return;
        if (residues.size() == d - 1) {
            ++tried;
            auto z = DefiningSet::from_residues(n, q, residues);
            if (!hermitian_residue_condition(z, l)) return;
            auto nc = negacyclic_code(f, z);
            result = accept(nc.code, d, "negacyclic coset search", budget);
            if (result) result->defining = std::move(z);
            return;
        }
        for (std::size_t i = from; i < cosets.size(); ++i) {
            if (residues.size() + cosets[i].members.size() > d - 1) continue;
            const auto before = residues.size();
            residues.insert(residues.end(), cosets[i].members.begin(), cosets[i].members.end());
            self(self, i + 1);
            residues.resize(before);
            if (result) return;
        }
    };
    dfs(dfs, 0);
    return result;
}

}  // namespace

FamilyCode lemma33_code(std::uint32_t l, std::uint32_t d, Lemma33Variant variant, const SearchBudget& budget) {
    const int kind = variant == Lemma33Variant::i ? 0 : 1;
    if (variant == Lemma33Variant::i && (d < 1 || d > l + 1))
        throw std::invalid_argument("Lemma 3.3(i) needs 1 <= d <= l+1, got d = " + std::to_string(d));
    if (variant == Lemma33Variant::ii && (d < 1 || d > l))
        throw std::invalid_argument("Lemma 3.3(ii) needs d <= l, got d = " + std::to_string(d));
    if (l % 2 == 0) throw std::invalid_argument("Lemma 3.3 needs odd l");
    if (auto c = cached(l, d, kind)) return *c;
    return remember(l, d, kind, kind == 0 ? lemma33_i(l, d, budget) : lemma33_ii(l, d, budget));
}

FamilyCode lemma34_code(std::uint32_t l, std::uint32_t d, const SearchBudget& budget) {
    if (l % 4 != 1) throw std::invalid_argument("Lemma 3.4 needs l = 1 mod 4, got l = " + std::to_string(l));
    if (d < 1 || d > l + 1) throw std::invalid_argument("Lemma 3.4 needs 1 <= d <= l+1, got d = " + std::to_string(d));
    if (auto c = cached(l, d, 2)) return *c;
    const auto f = square_field(l);
    if (d == 1) return remember(l, d, 2, full_space(f, std::uint64_t{l} * l + 1));
    if (d % 2 == 0) {
        auto z = kai1_defining_set(l, (d - 2) / 2);
        auto nc = negacyclic_code(f, z);
        auto found = accept(nc.code, d, "kai1 depth " + std::to_string((d - 2) / 2), budget,
                            Structural{bch_like_bound(z), LowerSource::bch});
        if (!found) throw consistency_error("kai1 code failed verification for " + family_name(l, d, "Lemma 3.4"));
        found->defining = std::move(z);
        return remember(l, d, 2, std::move(*found));
    }
    if (auto found = lemma34_search(f, l, d, budget)) return remember(l, d, 2, std::move(*found));
    // Doubly extended GRS: every point of the projective line, infinity last.
    const std::uint32_t q = f->order();
    std::vector<Field::value_type> points(q);
    for (std::uint32_t j = 0; j < q; ++j) points[j] = j;
    Matrix g = vandermonde(f, points, d - 1);
    std::vector<Field::value_type> infinity(d - 1, 0);
    infinity.back() = 1;
    Matrix ext(f, d - 1, q + 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        for (std::uint32_t j = 0; j < q; ++j) ext(i, j) = g(i, j);
        ext(i, q) = infinity[i];
    }
    if (auto u = solve_norm_multipliers(ext, budget.combinations)) {
        if (auto found = accept(dual_of_scaled(ext, *u), d, "extended-grs-norm-solve", budget,
                                 Structural{d, LowerSource::grs_structure}))
            return remember(l, d, 2, std::move(*found));
    }
    throw construction_gap("no defining set found for " + family_name(l, d, "Lemma 3.4"));
}

}  // namespace mpqc
