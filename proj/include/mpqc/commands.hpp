#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpqc/code_constructions.hpp"
#include "mpqc/serialize.hpp"

namespace mpqc {

enum class Format { json, csv, md };

std::string to_string(Format f);
/// Throws std::invalid_argument for anything but json, csv or md.
Format format_from_string(const std::string& s);

struct RunConfig {
    std::uint32_t l = 5;
    std::uint32_t d = 4;
    std::string case35 = "i";
    std::array<std::uint32_t, 3> delta{0, 1, 2};
    std::vector<std::uint32_t> components{1, 2, 2, 4};  ///< designed distances for build 3.1
    bool strict = false;
    std::string which = "3.8";
    std::string theorem = "3.5";
    std::string suite = "all";
    std::uint64_t seed = 42;
    std::optional<std::string> fixture;
    SearchBudget budget;
    bool deep = false;
    Format format = Format::json;

    /// Throws std::invalid_argument for non-positive budgets.
    void validate() const;
};

/// Exit codes: 0 all verified, 2 verified with discrepancies against the
/// transcribed claims, 1 a verification failure.
struct CommandResult {
    int exit_code = 0;
    std::string output;
};

/// Lengths up to this are built by default; longer ones need deep.
inline constexpr std::size_t default_build_length = 300;

CommandResult cmd_table1(const RunConfig& cfg);
CommandResult cmd_example(const RunConfig& cfg);
CommandResult cmd_build(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);

/// Plain table rendering shared by the csv and md outputs.
struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& t);
std::string render_md(const Table& t);

/// "[[n,k,>=d]]_b" or "[[n,k]]_b" when d is absent.
std::string format_quantum(const ParamTriple& p, std::uint32_t base);

}  // namespace mpqc
