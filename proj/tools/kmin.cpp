// kmin: minimize, compare and evaluate weighted automata over Bezout domains.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <kmin/commands.hpp>

int main(int argc, char** argv) {
    using namespace kmin::cli;

    CLI::App app{"Exact minimization of weighted automata over Bezout domains"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--max-steps", opts.max_steps, "Word budget for the prefix exploration")
        ->check(CLI::PositiveNumber);
    app.add_flag("--ring-check", opts.ring_check, "Re-verify document invariants on input and output");

    std::string file, file_b, word, mode = "full";
    std::optional<std::string> out_file;

    auto* eval = app.add_subcommand("eval", "Print the coefficient of a word");
    eval->add_option("file", file, "Automaton document")->required();
    eval->add_option("word", word, "Word; \"\" is the empty word")->required();

    auto* minimize = app.add_subcommand("minimize", "Reduce an automaton");
    minimize->add_option("file", file, "Automaton document")->required();
    minimize->add_option("--out", out_file, "Write the result here instead of standard output");
    minimize->add_option("--mode", mode, "left, right or full")
        ->check(CLI::IsMember({"left", "right", "full"}));

    auto* equiv = app.add_subcommand("equiv", "Decide whether two automata have the same behavior");
    equiv->add_option("a", file, "First document")->required();
    equiv->add_option("b", file_b, "Second document")->required();

    auto* iso = app.add_subcommand("iso", "Decide isomorphism over the coefficient ring");
    iso->add_option("a", file, "First document")->required();
    iso->add_option("b", file_b, "Second document")->required();

    auto* hadamard = app.add_subcommand("hadamard", "Pointwise product of two automata");
    hadamard->add_option("a", file, "First document")->required();
    hadamard->add_option("b", file_b, "Second document")->required();
    hadamard->add_option("--out", out_file, "Write the result here instead of standard output");

    auto* info = app.add_subcommand("info", "Describe an automaton and its prefix set");
    info->add_option("file", file, "Automaton document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParseError;
    }

    auto& out = std::cout;
    auto& err = std::cerr;
    if (*eval)
        return cmd_eval(file, word, opts, out, err);
    if (*minimize)
        return cmd_minimize(file, out_file, mode, opts, out, err);
    if (*equiv)
        return cmd_equiv(file, file_b, opts, out, err);
    if (*iso)
        return cmd_iso(file, file_b, opts, out, err);
    if (*hadamard)
        return cmd_hadamard(file, file_b, out_file, opts, out, err);
    return cmd_info(file, opts, out, err);
}
