#include <algorithm>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mpqc/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Quantum codes from matrix product codes: tables, examples, constructions and verification"};
    app.require_subcommand(1);

    mpqc::RunConfig cfg;
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
    app.add_option("--budget", cfg.budget.distance.enumeration, "Codewords for exhaustive distance")
        ->check(CLI::PositiveNumber);
    app.add_option("--mds-budget", cfg.budget.distance.subsets, "Column subsets for the MDS certificate")
        ->check(CLI::PositiveNumber);
    app.add_flag("--deep", cfg.deep, "Build large-l rows instead of reporting formulas");

    auto* table1 = app.add_subcommand("table1", "Table 1: formula, recipe and built parameters");

    auto* example = app.add_subcommand("example", "Examples 3.8 and 3.10: claims against achievable parameters");
    example->add_option("--which", cfg.which, "Example")->required()->check(CLI::IsMember({"3.8", "3.10"}));
    example->add_option("--l", cfg.l, "Subfield order")->required();
    example->add_flag("--strict", cfg.strict, "Strict depth constraints");

    auto* build = app.add_subcommand("build", "Construct and verify one code");
    build->add_option("--theorem", cfg.theorem, "Construction")
        ->required()
        ->check(CLI::IsMember({"3.1", "3.5", "main1", "main2", "main3"}));
    build->add_option("--l", cfg.l, "Subfield order");
    build->add_option("--d", cfg.d, "Target distance (3.5)");
    build->add_option("--case", cfg.case35, "Case i..vi (3.5)");
    std::vector<std::uint32_t> delta{0, 1, 2};
    build->add_option("--delta", delta, "Depths d1,d2,d3 (main1, main2, main3)")->expected(3)->delimiter(',');
    build->add_option("--components", cfg.components,
                      "Designed distances d1,d2,d3,d4 (3.1)")
        ->delimiter(',');
    build->add_flag("--strict", cfg.strict, "Strict depth constraints (main2, main3)");

    auto* verify = app.add_subcommand("verify", "Run the property batteries");
    verify->add_option("--suite", cfg.suite, "Suite")
        ->check(CLI::IsMember({"fields", "duals", "mpc", "negacyclic", "quantum", "all"}));
    verify->add_option("--seed", cfg.seed, "Seed");
    verify->add_option("--fixture", cfg.fixture, "Check a JSON fixture of code records instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        cfg.format = mpqc::format_from_string(format);
        std::copy(delta.begin(), delta.end(), cfg.delta.begin());
        mpqc::CommandResult r;
        if (*table1)
            r = mpqc::cmd_table1(cfg);
        else if (*example)
            r = mpqc::cmd_example(cfg);
        else if (*build)
            r = mpqc::cmd_build(cfg);
        else
            r = mpqc::cmd_verify(cfg);
        std::cout << r.output;
        return r.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
