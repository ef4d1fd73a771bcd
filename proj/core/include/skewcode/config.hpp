// Config documents and the command layer behind the CLI.  A config is a JSON
// document describing the ring, sigma, delta and the pair (f, g); commands are
// executed against the resolved instance and produce deterministic reports.
#pragma once

#include "skewcode/code.hpp"
#include "skewcode/skew_poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skewcode {

struct job_bounds {
    uint64_t enumeration = uint64_t(1) << 24; // candidate vectors per enumeration
    uint64_t pairs = uint64_t(1) << 20;       // exhaustive pair budget for sigma/delta checks
    uint64_t samples = uint64_t(1) << 16;     // sampled pairs above that budget
};

// A parsed and fully validated job: the context is built (sigma and delta
// verified) and f, g live in it.  Construction happens in parse_config.
struct job_config {
    context_ptr ctx;
    skew_poly f;
    skew_poly g;
    job_bounds bounds;
    uint64_t seed = 0;
};

// Document shape:
//   {
//     "ring":  {"kind": "zmod", "m": 6}
//            | {"kind": "gf", "p": 3, "k": 2, "poly": [1, 0, 1]}   // poly optional
//            | {"kind": "product", "inner": {...}}                 // inner x inner
//            | {"kind": "dual", "inner": {...}},                   // D(inner)
//     "sigma": {"kind": "identity" | "frobenius" | "swap" | "project" | "conjugate"
//               | "table", "power": 1, "table": [["from", "to"], ...]},
//     "delta": {"kind": "zero" | "nilpart" | "table", "table": [...]},  // optional
//     "f": ["(0,0)", "(2,0)", "(0,0)", "(1,0)"],  // coefficients, low degree first
//     "g": ["(2,2)", "(1,0)"],
//     "bounds": {"enumeration": N, "pairs": N, "samples": N},          // optional
//     "seed": 0                                                        // optional
//   }
// Coefficients use the canonical element text form; plain integers are
// accepted and mean n * 1.  Throws validation_error on malformed documents.
job_config parse_config(const std::string& json_text);
job_config load_config(const std::string& path);

enum class output_format { text, structured };

struct run_options {
    output_format format = output_format::text;
    std::optional<uint64_t> bound; // overrides bounds.enumeration
    std::optional<uint64_t> seed;  // overrides the config seed
    std::string vector_arg;        // --message / --word payload
};

struct run_result {
    int exit_code = 0;
    std::string output; // full report, newline terminated
};

// Commands: gen-matrix, control-matrix, parity-check, dual, self-dual,
// verify, encode, syndrome, weights.  Library errors propagate as
// skewcode::error; the verify command reports per-check results and returns
// a nonzero exit code instead of throwing when a cross-check fails.
run_result run_command(const std::string& command, const job_config& cfg,
                       const run_options& opts = {});

// The bundled-example replay (the paper-examples command); needs no config.
run_result run_examples(const run_options& opts = {});

// Splits on top-level commas (parentheses nest) and parses each entry.
std::vector<elem> parse_vector(const ring& r, std::string_view text);

} // namespace skewcode
