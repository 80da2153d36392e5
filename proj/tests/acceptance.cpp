// One line per acceptance criterion; exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "mpqc/commands.hpp"
#include "mpqc/errors.hpp"
#include "mpqc/matrix_product.hpp"
#include "mpqc/theorems.hpp"
#include "mpqc/verify.hpp"

using namespace mpqc;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

constexpr std::uint64_t seed = 42;
int failed = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s > limit_s) {
        o.pass = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s -- %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), s);
    std::fflush(stdout);
}

std::string q(const ParamTriple& p) {
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + ",>=" + std::to_string(p.d.value_or(0)) + "]]";
}

const VerifyReport& verify_all() {
    static const VerifyReport r = run_verify(Suite::all, seed);
    return r;
}

const VerifyReport& verify_mpc() {
    static const VerifyReport r = run_verify(Suite::mpc, seed);
    return r;
}

Outcome check_zero(const VerifyReport& r, const std::string& name, std::size_t min_instances) {
    const auto* c = r.find(name);
    if (!c) return {false, "check " + name + " missing"};
    std::string d = name + ": " + std::to_string(c->instances) + " instances, " + std::to_string(c->failures) + " failures";
    if (!c->messages.empty()) d += "; first: " + c->messages.front();
    return {c->failures == 0 && c->instances >= min_instances, d};
}

}  // namespace

int main() {
    criterion(1, "Table 1 arithmetic", 1, [] {
        std::size_t ok = 0;
        std::string bad;
        for (const auto& r : table1_rows()) {
            const auto p = theorem35_params(r.l, r.d, r.c);
            if (p.n == r.new_code.n && p.k == r.new_code.k)
                ++ok;
            else
                bad += " " + q(p.triple());
        }
        return Outcome{ok == 10, std::to_string(ok) + "/10 rows reproduce (n, k)" + bad};
    });

    criterion(2, "full pipeline at l = 5, case i, d = 4", 60, [] {
        const auto b = theorem35_build(5, 4, Case35::i);
        const auto& c = b.product.code;
        const bool hdc = is_hermitian_dual_containing(c);
        const bool ok = c.length() == 96 && c.dimension() == 91 && hdc && b.product.distance.lower == 4 &&
                        b.product.distance.lower_source == LowerSource::product_bound && b.built.verified &&
                        b.built.triple() == ParamTriple{96, 86, 4};
        return Outcome{ok, "classical [" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) +
                               "], dual-containing " + (hdc ? "yes" : "no") + ", FRR bound " +
                               std::to_string(*b.product.distance.lower) + ", quantum " + q(b.built.triple()) +
                               (b.built.verified ? " verified" : " unverified")};
    });

    criterion(3, "small-field pipeline at l = 3", 60, [] {
        std::vector<LinearCode> codes;
        std::vector<std::size_t> dist;
        std::string detail = "components";
        bool ok = true;
        for (std::uint32_t d : {1u, 2u, 2u, 4u}) {
            const auto fc = lemma33_code(3, d, Lemma33Variant::i);
            const auto& c = fc.code;
            const bool mds = mds_certificate(c, UINT64_MAX);
            const auto ex = *min_distance_exhaustive(c, 100'000'000).lower;
            ok = ok && mds && ex == d && *fc.distance.lower == d && c.dimension() == 9 - d;
            detail += " [8," + std::to_string(c.dimension()) + "," + std::to_string(ex) + "]";
            codes.push_back(c);
            dist.push_back(*fc.distance.lower);
        }
        const auto p = corollary32_construct(codes, dist);
        std::string ua = "; d(U_A(k)) =";
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto u = ua_code(p.spec.matrix(), k);
            const auto du = *min_distance_exhaustive(u).lower;
            ok = ok && (mds_certificate(u, UINT64_MAX) == (du == u.length() - u.dimension() + 1));
            ua += " " + std::to_string(du);
        }
        const bool hdc = is_hermitian_dual_containing(p.code);
        ok = ok && hdc && p.code.length() == 32 && p.code.dimension() == 27 && p.distance.lower == 4;
        return Outcome{ok, detail + ua + "; product [" + std::to_string(p.code.length()) + "," +
                               std::to_string(p.code.dimension()) + ",>=" + std::to_string(*p.distance.lower) +
                               "]_9 dual-containing " + (hdc ? "yes" : "no")};
    });

    criterion(4, "dual formula equality, 100 random instances", 120,
              [] { return check_zero(verify_mpc(), "lemma2.3-dual-formula", 100); });
    criterion(5, "NSC upper-triangular exactness", 0, [] { return check_zero(verify_mpc(), "lemma2.2-nsc-exact", 20); });
    criterion(6, "dual-containment closure of Theorem 3.1 and Theorem main1", 0, [] {
        const auto& mpc = verify_mpc();
        const auto a = check_zero(mpc, "theorem3.1-closure", 50);
        const auto b = check_zero(mpc, "main1-closure", 50);
        return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
    });

    criterion(7, "negacyclic family at l = 5 and the main2 audit", 60, [] {
        const auto f = square_field(5);
        bool ok = true;
        std::string detail = "codes";
        const std::size_t dims[] = {25, 23, 21}, dists[] = {2, 4, 6};
        for (std::uint32_t delta = 0; delta <= 2; ++delta) {
            const auto nc = negacyclic_code(f, kai1_defining_set(5, delta));
            const auto& c = nc.code;
            const bool hdc = is_hermitian_dual_containing(c);
            const bool mds = mds_certificate(c, UINT64_MAX);
            const auto d = c.length() - c.dimension() + 1;
            ok = ok && c.dimension() == dims[delta] && hdc && mds && d == dists[delta];
            detail += " [26," + std::to_string(c.dimension()) + "," + std::to_string(d) + "]" + (hdc ? "" : " not-hdc") +
                      (mds ? "" : " not-mds");
        }
        const auto r = theorem_main_construct(MainTheorem::main2, 5, {0, 1, 2}, DeltaMode::relaxed);
        ok = ok && r.computed.verified && r.computed.triple() == ParamTriple{78, 60, 6} && r.discrepancy &&
             r.discrepancy->claimed.k == 72;
        detail += "; main2(5,0,1,2) " + q(r.computed.triple()) + " vs formula " + q(r.formula);
        RunConfig cfg;
        cfg.which = "3.8";
        cfg.l = 5;
        const auto ex = cmd_example(cfg);
        const auto doc = json::parse(ex.output);
        bool has68 = false;
        for (const auto& c : doc["claims"])
            if (c["claimed"]["k"] == 68 && c.contains("discrepancy") && !c["discrepancy"].is_null())
                has68 = true;
        ok = ok && ex.exit_code == 2 && has68;
        detail += "; example 3.8 exit " + std::to_string(ex.exit_code) + (has68 ? ", [[78,68,>=6]] discrepancy recorded" : "");
        return Outcome{ok, detail};
    });

    criterion(9, "oracle cross-checks", 0, [] {
        const auto& r = verify_all();
        std::size_t codes = 0, failures = 0;
        std::string first;
        for (const auto& c : r.checks) {
            if (c.name.find("oracle-cross-check") == std::string::npos) continue;
            codes += c.instances;
            failures += c.failures;
            if (first.empty() && !c.messages.empty()) first = c.messages.front();
        }
        return Outcome{failures == 0 && codes > 0 && r.passed(),
                       std::to_string(codes) + " codes with q^k <= 10^5 cross-checked, " + std::to_string(failures) +
                           " disagreements, " + std::to_string(r.failures()) + " battery failures" +
                           (first.empty() ? "" : "; first: " + first)};
    });

    criterion(10, "deterministic verify report", 0, [] {
        RunConfig cfg;
        cfg.suite = "all";
        cfg.seed = seed;
        const auto a = cmd_verify(cfg);
        const auto b = cmd_verify(cfg);
        return Outcome{a.output == b.output && a.exit_code == 0,
                       std::to_string(a.output.size()) + " bytes, " + (a.output == b.output ? "identical" : "different")};
    });

    criterion(8, "quantum Singleton bound on every emitted record", 0, [] {
        auto records = emitted_quantum_records();
        for (const auto& r : verify_all().quantum) records.push_back(r);
        std::size_t bad = 0;
        std::string first;
        for (const auto& r : records) {
            if (2 * static_cast<std::int64_t>(r.d_lower) > r.n - r.k + 2) {
                if (bad++ == 0) first = "; first: " + q(r.triple()) + " from " + r.provenance;
            }
        }
        return Outcome{bad == 0 && !records.empty(),
                       std::to_string(records.size()) + " records, " + std::to_string(bad) + " violations" + first};
    });

    std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
