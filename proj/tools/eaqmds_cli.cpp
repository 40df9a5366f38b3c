#include <iostream>

#include <CLI11.hpp>

#include "eaqmds/cli.hpp"

int main(int argc, char** argv) {
    using namespace eaqmds::cli;
    CLI::App app{"Construct and verify EAQMDS codes of length (q^2+1)/5"};
    app.require_subcommand(1);

    CosetsOptions cosets;
    auto* c_cosets = app.add_subcommand("cosets", "list the q^2-cyclotomic cosets modulo n");
    c_cosets->add_option("--q", cosets.q, "field size q")->required();
    c_cosets->add_option("--n", cosets.n, "length (default (q^2+1)/5)");
    c_cosets->add_option("--format", cosets.format)->check(CLI::IsMember({"text", "json"}));

    CodeOptions code;
    auto* c_code = app.add_subcommand("code", "build and verify one family code");
    c_code->add_option("--q", code.q)->required();
    c_code->add_option("--m", code.m)->required();
    c_code->add_flag("--oracle", code.oracle, "also check rank(HH^dagger) = c");
    c_code->add_flag("--allow-degenerate", code.allow_degenerate, "accept m = 1");
    c_code->add_flag("--allow-large", code.allow_large, "run the oracle for q > 32");
    c_code->add_option("--format", code.format)->check(CLI::IsMember({"json", "csv", "table"}));

    EnumerateOptions en;
    auto* c_en = app.add_subcommand("enumerate", "list every code in a family up to qmax");
    c_en->add_option("--family", en.family, "q10k3, q10k7, e1mod4 or e3mod4")->required();
    c_en->add_option("--qmax", en.q_max);
    c_en->add_option("--format", en.format)->check(CLI::IsMember({"json", "csv", "table"}));

    ErrataOptions er;
    auto* c_er = app.add_subcommand("errata", "report discrepancies against published values");
    c_er->add_option("--qmax", er.q_max);
    c_er->add_option("--format", er.format)->check(CLI::IsMember({"text", "json"}));

    VerifyOptions ve;
    auto* c_ve = app.add_subcommand("verify", "run an invariant suite");
    c_ve->add_option("--level", ve.level)->required()->check(CLI::IsMember({"coset", "lemma", "theorem", "rank-oracle"}));
    c_ve->add_option("--qmax", ve.q_max);
    c_ve->add_option("--samples", ve.samples, "random defining sets per q (rank-oracle)");
    c_ve->add_option("--seed", ve.seed);
    c_ve->add_flag("--allow-large", ve.allow_large);
    c_ve->add_flag("--verbose", ve.verbose);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (*c_cosets) return cmd_cosets(cosets, std::cout, std::cerr);
    if (*c_code) return cmd_code(code, std::cout, std::cerr);
    if (*c_en) return cmd_enumerate(en, std::cout, std::cerr);
    if (*c_er) return cmd_errata(er, std::cout, std::cerr);
    return cmd_verify(ve, std::cout, std::cerr);
}
