#include "mpqc/quantum.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "mpqc/errors.hpp"

namespace mpqc {

namespace {

std::mutex emitted_mutex;
std::vector<QuantumParams> emitted;

std::string params_string(const ParamTriple& p) {
    std::string s = "[[" + std::to_string(p.n) + "," + std::to_string(p.k);
    if (p.d) s += "," + std::to_string(*p.d);
    return s + "]]";
}

}  // namespace

void record_emission(const QuantumParams& qp) {
    std::lock_guard lock(emitted_mutex);
    emitted.push_back(qp);
}

std::vector<QuantumParams> emitted_quantum_records() {
    std::lock_guard lock(emitted_mutex);
    return emitted;
}

SingletonResult singleton_check(const ParamTriple& p, bool exact) {
    if (!p.d) throw std::invalid_argument("Singleton check needs a distance");
    SingletonResult r;
    r.defect = p.n - p.k + 2 - 2 * *p.d;
    r.approximate = !exact;
    if (r.defect < 0)
        throw consistency_error("quantum Singleton bound violated by " + params_string(p) + ": 2d > n - k + 2");
    r.is_mds = exact && r.defect == 0;
    return r;
}

SingletonResult singleton_check(const QuantumParams& qp) {
    if (qp.d_exact) {
        singleton_check(qp.triple(), false);
        return singleton_check(ParamTriple{qp.n, qp.k, static_cast<std::int64_t>(*qp.d_exact)}, true);
    }
    return singleton_check(qp.triple(), false);
}

QuantumParams hermitian_construction(const LinearCode& c, const DistanceReport& d, std::string provenance) {
    const auto l = c.field()->subfield_order();
    if (!l) throw std::invalid_argument("the Hermitian construction needs a field of square order");
    if (!d.lower) throw std::invalid_argument("the Hermitian construction needs a distance bound");
    if (!is_hermitian_dual_containing(c))
        throw std::invalid_argument("refusing the Hermitian construction: code is not Hermitian dual-containing");
    QuantumParams qp;
    qp.n = static_cast<std::int64_t>(c.length());
    qp.k = 2 * static_cast<std::int64_t>(c.dimension()) - qp.n;
    qp.d_lower = *d.lower;
    qp.base = *l;
    qp.provenance = std::move(provenance);
    qp.verified = true;
    singleton_check(qp);
    record_emission(qp);
    return qp;
}

std::string to_string(Case35 c) {
    switch (c) {
        case Case35::i: return "i";
        case Case35::ii: return "ii";
        case Case35::iii: return "iii";
        case Case35::iv: return "iv";
        case Case35::v: return "v";
        case Case35::vi: return "vi";
    }
    return "?";
}

Case35 case35_from_string(const std::string& s) {
    for (auto c : {Case35::i, Case35::ii, Case35::iii, Case35::iv, Case35::v, Case35::vi})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown Theorem 3.5 case '" + s + "'");
}

namespace {

bool multiple_of_four_case(Case35 c) { return c == Case35::i || c == Case35::iii || c == Case35::v; }

void check_theorem35(std::uint32_t l, std::uint32_t d, Case35 c) {
    if (l % 2 == 0 || l < 3) throw std::invalid_argument("Theorem 3.5 needs an odd prime power l");
    if (prime_factors(l).size() != 1) throw std::invalid_argument(std::to_string(l) + " is not a prime power");
    const std::uint32_t top = (c == Case35::v || c == Case35::vi) ? l + 1 : l;
    if (d < 4 || d > top)
        throw std::invalid_argument("case " + to_string(c) + " needs 4 <= d <= " + std::to_string(top) +
                                    ", got d = " + std::to_string(d));
    if (multiple_of_four_case(c) ? d % 4 != 0 : d % 4 != 3)
        throw std::invalid_argument("case " + to_string(c) + " needs d = " + (multiple_of_four_case(c) ? "0" : "-1") +
                                    " mod 4, got d = " + std::to_string(d));
}

}  // namespace

QuantumParams theorem35_params(std::uint32_t l, std::uint32_t d, Case35 c) {
    check_theorem35(l, d, c);
    const std::int64_t L = std::int64_t{l} * l;
    const std::int64_t D = d;
    QuantumParams qp;
    switch (c) {
        case Case35::i: qp.n = 4 * L - 4; qp.k = 4 * L + 4 - 4 * D - D / 2; break;
        case Case35::ii: qp.n = 4 * L - 4; qp.k = 4 * L + 6 - 4 * D - (D + 1) / 2; break;
        case Case35::iii: qp.n = 4 * L; qp.k = 4 * L + 8 - 4 * D - D / 2; break;
        case Case35::iv: qp.n = 4 * L; qp.k = 4 * L + 6 - 4 * D - (D + 1) / 2; break;
        case Case35::v: qp.n = 4 * L + 4; qp.k = 4 * L + 12 - 4 * D - D / 2; break;
        case Case35::vi: qp.n = 4 * L + 4; qp.k = 4 * L + 10 - 4 * D - (D + 1) / 2; break;
    }
    qp.d_lower = d;
    qp.base = l;
    qp.provenance = "theorem-3.5(" + to_string(c) + ") formula";
    qp.verified = false;
    singleton_check(qp);
    record_emission(qp);
    return qp;
}

std::vector<std::uint32_t> theorem35_component_distances(std::uint32_t d, Case35 c) {
    if (multiple_of_four_case(c)) return {d / 4, d / 2, d / 2, d};
    return {(d + 1) / 4, (d + 1) / 2, (d + 1) / 2, d};
}

std::size_t theorem35_component_length(std::uint32_t l, Case35 c) {
    const std::size_t L = std::size_t{l} * l;
    switch (c) {
        case Case35::i:
        case Case35::ii: return L - 1;
        case Case35::iii:
        case Case35::iv: return L;
        default: return L + 1;
    }
}

const std::vector<Table1Row>& table1_rows() {
    // Transcribed: left column the new codes, right column the previously known codes.
    static const std::vector<Table1Row> rows{
        {5, 4, Case35::i, {96, 86, 4}, {96, 82, 4}},
        {5, 4, Case35::v, {104, 94, 4}, {104, 94, 4}},
        {7, 4, Case35::i, {192, 182, 4}, {192, 182, 3}},
        {7, 7, Case35::ii, {192, 170, 7}, {192, 170, 5}},
        {7, 4, Case35::v, {200, 190, 4}, {200, 188, 4}},
        {7, 8, Case35::v, {200, 172, 8}, {200, 172, 8}},
        {9, 4, Case35::i, {320, 310, 4}, {320, 310, 3}},
        {9, 8, Case35::i, {320, 292, 8}, {320, 284, 8}},
        {9, 7, Case35::ii, {320, 298, 7}, {320, 298, 5}},
        {9, 4, Case35::v, {328, 318, 4}, {328, 318, 4}},
    };
    return rows;
}

}  // namespace mpqc
