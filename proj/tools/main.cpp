// Command-line front end: resolves a JSON job config and dispatches to the
// command layer.  Exit codes: 0 success, 2 validation error, 3 precondition
// unmet, 4 bound exceeded, 5 internal self-check failure.
#include "CLI11.hpp"

#include "skewcode/config.hpp"
#include "skewcode/error.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct cli_state {
    std::string config_path;
    std::string format = "text";
    std::optional<uint64_t> bound;
    std::optional<uint64_t> seed;
    std::string message;
    std::string word;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Principal code constructions from skew-polynomial data over "
                 "finite commutative rings"};
    app.require_subcommand(1);

    cli_state st;
    auto add_common = [&st](CLI::App* sub, bool needs_config) {
        if (needs_config)
            sub->add_option("--config", st.config_path, "path to a JSON job config")
                ->required()
                ->check(CLI::ExistingFile);
        sub->add_option("--format", st.format, "output format")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--bound", st.bound, "enumeration bound override");
        sub->add_option("--seed", st.seed, "seed for sampled verifications");
    };

    add_common(app.add_subcommand("gen-matrix", "print the generating matrix"), true);
    add_common(app.add_subcommand("control-matrix", "print the control matrix"), true);
    add_common(app.add_subcommand("parity-check", "print the parity-check matrix"), true);
    add_common(app.add_subcommand("dual", "print the dual code generator, constant and matrix"),
               true);
    add_common(app.add_subcommand("self-dual", "evaluate the self-duality criterion"), true);
    add_common(app.add_subcommand("verify", "run the oracle cross-validation suite"), true);
    CLI::App* enc = app.add_subcommand("encode", "encode a message vector");
    add_common(enc, true);
    enc->add_option("--message", st.message, "comma-separated message entries")->required();
    CLI::App* syn = app.add_subcommand("syndrome", "syndrome of a word");
    add_common(syn, true);
    syn->add_option("--word", st.word, "comma-separated word entries")->required();
    add_common(app.add_subcommand("weights", "weight distribution and minimum distance"), true);
    add_common(app.add_subcommand("paper-examples", "replay the bundled worked examples"),
               false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // help/version exit 0; usage problems are validation errors
    }

    const std::string command = app.get_subcommands().front()->get_name();

    skewcode::run_options opts;
    opts.format = st.format == "structured" ? skewcode::output_format::structured
                                            : skewcode::output_format::text;
    opts.bound = st.bound;
    opts.seed = st.seed;
    opts.vector_arg = command == "syndrome" ? st.word : st.message;

    try {
        skewcode::run_result res;
        if (command == "paper-examples") {
            res = skewcode::run_examples(opts);
        } else {
            skewcode::job_config cfg = skewcode::load_config(st.config_path);
            res = skewcode::run_command(command, cfg, opts);
        }
        std::cout << res.output;
        return res.exit_code;
    } catch (const skewcode::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
