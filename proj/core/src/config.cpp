#include "skewcode/config.hpp"

#include "skewcode/error.hpp"
#include "skewcode/examples.hpp"
#include "skewcode/oracle.hpp"
#include "skewcode/plt.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace skewcode {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad_config(const std::string& msg) {
    throw validation_error("config: " + msg);
}

const json& need(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end()) bad_config(std::string(where) + " is missing '" + key + "'");
    return *it;
}

std::string need_string(const json& j, const char* key, const char* where) {
    const json& v = need(j, key, where);
    if (!v.is_string()) bad_config(std::string(where) + "." + key + " must be a string");
    return v.get<std::string>();
}

uint64_t need_u64(const json& j, const char* key, const char* where) {
    const json& v = need(j, key, where);
    if (!v.is_number_unsigned() && !v.is_number_integer())
        bad_config(std::string(where) + "." + key + " must be an integer");
    int64_t n = v.get<int64_t>();
    if (n < 0) bad_config(std::string(where) + "." + key + " must be nonnegative");
    return uint64_t(n);
}

uint64_t opt_u64(const json& j, const char* key, uint64_t fallback, const char* where) {
    return j.contains(key) ? need_u64(j, key, where) : fallback;
}

ring_ptr build_ring(const json& j) {
    if (!j.is_object()) bad_config("ring spec must be an object");
    std::string kind = need_string(j, "kind", "ring");
    if (kind == "zmod") return ring::zmod(need_u64(j, "m", "ring"));
    if (kind == "gf") {
        auto p = uint32_t(need_u64(j, "p", "ring"));
        auto k = uint32_t(need_u64(j, "k", "ring"));
        std::vector<uint32_t> poly;
        if (j.contains("poly")) {
            const json& jp = j.at("poly");
            if (!jp.is_array()) bad_config("ring.poly must be an array");
            for (const auto& c : jp) {
                if (!c.is_number_unsigned() && !c.is_number_integer())
                    bad_config("ring.poly entries must be integers");
                poly.push_back(uint32_t(c.get<uint64_t>()));
            }
        }
        return ring::gf(p, k, std::move(poly));
    }
    if (kind == "product") return ring::product(build_ring(need(j, "inner", "ring")));
    if (kind == "dual") return ring::dual_numbers(build_ring(need(j, "inner", "ring")));
    bad_config("unknown ring kind '" + kind + "'");
}

std::vector<std::pair<elem, elem>> build_pairs(const json& j, const ring_ptr& r,
                                               const char* where) {
    const json& t = need(j, "table", where);
    if (!t.is_array()) bad_config(std::string(where) + ".table must be an array of pairs");
    std::vector<std::pair<elem, elem>> pairs;
    for (const auto& pr : t) {
        if (!pr.is_array() || pr.size() != 2 || !pr.at(0).is_string() || !pr.at(1).is_string())
            bad_config(std::string(where) + ".table entries must be [\"from\", \"to\"]");
        pairs.emplace_back(r->parse(pr.at(0).get<std::string>()),
                           r->parse(pr.at(1).get<std::string>()));
    }
    return pairs;
}

endo build_sigma(const json& j, const ring_ptr& r) {
    if (!j.is_object()) bad_config("sigma spec must be an object");
    std::string kind = need_string(j, "kind", "sigma");
    if (kind == "identity") return endo::identity(r);
    if (kind == "frobenius")
        return endo::frobenius(r, uint32_t(opt_u64(j, "power", 1, "sigma")));
    if (kind == "swap") return endo::swap(r);
    if (kind == "project") return endo::project(r);
    if (kind == "conjugate") return endo::conjugate(r);
    if (kind == "table") return endo::from_pairs(r, build_pairs(j, r, "sigma"));
    bad_config("unknown sigma kind '" + kind + "'");
}

derivation build_delta(const json& j, const endo& sigma) {
    if (!j.is_object()) bad_config("delta spec must be an object");
    std::string kind = need_string(j, "kind", "delta");
    if (kind == "zero") return derivation::zero(sigma);
    if (kind == "nilpart") return derivation::nilpart(sigma);
    if (kind == "table")
        return derivation::from_pairs(sigma, build_pairs(j, sigma.get_ring(), "delta"));
    bad_config("unknown delta kind '" + kind + "'");
}

skew_poly build_poly(const context_ptr& ctx, const json& j, const char* name) {
    if (!j.is_array()) bad_config(std::string(name) + " must be a coefficient array");
    std::vector<elem> coeffs;
    for (const auto& c : j) {
        if (c.is_string())
            coeffs.push_back(ctx->r->parse(c.get<std::string>()));
        else if (c.is_number_integer() || c.is_number_unsigned())
            coeffs.push_back(ctx->r->from_int(c.get<int64_t>()));
        else
            bad_config(std::string(name) + " entries must be element texts or integers");
    }
    return skew_poly::from_coeffs(ctx, std::move(coeffs));
}

// |A|^e, saturating at UINT64_MAX
uint64_t pow_clamped(uint64_t base, size_t e) {
    uint64_t v = 1;
    for (size_t i = 0; i < e; ++i) {
        if (base != 0 && v > UINT64_MAX / base) return UINT64_MAX;
        v *= base;
    }
    return v;
}

std::string trimmed(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

/* ---------------- report building ---------------- */

json matrix_json(const ring_matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.get_ring()->text(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_json(const ring& r, std::span<const elem> v) {
    json out = json::array();
    for (elem e : v) out.push_back(r.text(e));
    return out;
}

json poly_json(const skew_poly& p) {
    json out = json::array();
    for (elem c : p.coeffs()) out.push_back(p.ctx()->r->text(c));
    return out;
}

run_result text_or_json(const run_options& opts, const std::string& text, json structured,
                        int exit_code = 0) {
    if (opts.format == output_format::text) return {exit_code, text};
    return {exit_code, structured.dump(2) + "\n"};
}

run_result matrix_command(const char* name, const ring_matrix& m, const run_options& opts) {
    json doc{{"command", name}, {"matrix", matrix_json(m)}};
    return text_or_json(opts, m.to_text() + "\n", std::move(doc));
}

/* ---------------- verify command ---------------- */

struct check_line {
    std::string name;
    std::string status; // pass | fail | skipped
    std::string detail;
};

run_result run_verify(const job_config& cfg, const run_options& opts) {
    const auto& ctx = cfg.ctx;
    const ring_ptr& r = ctx->r;
    uint64_t enum_bound = opts.bound.value_or(cfg.bounds.enumeration);
    uint64_t seed = opts.seed.value_or(cfg.seed);

    std::vector<check_line> checks;
    auto add = [&](std::string name, std::string status, std::string detail = "") {
        checks.push_back({std::move(name), std::move(status), std::move(detail)});
    };
    auto guarded = [&](const char* name, auto&& body) {
        try {
            body();
        } catch (const error& e) {
            add(name, "fail", e.what());
        }
    };

    auto ax = check_ring_axioms(r);
    add("ring-axioms", ax.ok ? "pass" : "fail", ax.detail);

    verify_options vo;
    vo.exhaustive_pair_bound = cfg.bounds.pairs;
    vo.sample_pairs = cfg.bounds.samples;
    vo.seed = seed;
    auto vs = verify_endomorphism(ctx->sigma, vo);
    add("sigma-endomorphism", vs.valid ? "pass" : "fail",
        vs.valid ? (vs.sampled ? "sampled" : "") : vs.detail);
    auto vd = verify_derivation(ctx->delta, vo);
    add("delta-derivation", vd.valid ? "pass" : "fail",
        vd.valid ? (vd.sampled ? "sampled" : "") : vd.detail);

    principal_code c(cfg.f, cfg.g);
    size_t n = c.length(), rr = c.generator_degree(), k = c.rank();
    uint64_t space_n = pow_clamped(r->size(), n);
    uint64_t space_k = pow_clamped(r->size(), k);

    guarded("generating-recursion", [&] {
        c.generating_matrix();
        add("generating-recursion", "pass");
    });

    bool have_h = c.cofactor().has_value() && rr >= 1;
    if (!have_h) {
        add("control-recursion", "skipped", "no cofactor with f = g h");
        add("parity-echelon", "skipped", "no cofactor with f = g h");
        add("annihilator-duality", "skipped", "no control matrix");
    } else {
        guarded("control-recursion", [&] {
            c.control_matrix();
            add("control-recursion", "pass");
        });
        if (!ctx->sigma_auto)
            add("parity-echelon", "skipped", "sigma is not an automorphism");
        else
            guarded("parity-echelon", [&] {
                c.parity_check_matrix();
                add("parity-echelon", "pass");
            });
        if (space_n > enum_bound)
            add("annihilator-duality", "skipped", "enumeration bound");
        else
            guarded("annihilator-duality", [&] {
                auto mod = row_module(c.generating_matrix(), enum_bound);
                auto ann = left_annihilator(c.control_matrix(), enum_bound);
                canonical_sort(*r, ann);
                if (mod != ann)
                    add("annihilator-duality", "fail",
                        "row module and left annihilator differ");
                else if (mod.size() != space_k)
                    add("annihilator-duality", "fail",
                        "cardinality " + std::to_string(mod.size()) + ", expected |A|^" +
                            std::to_string(k));
                else
                    add("annihilator-duality", "pass");
            });
    }

    std::optional<code_set> words;
    auto enumerate_words = [&]() -> const code_set& {
        if (!words) words = enumerate_code(c, enum_bound);
        return *words;
    };

    if (space_k > enum_bound) {
        add("code-closure", "skipped", "enumeration bound");
    } else {
        guarded("code-closure", [&] {
            auto cr = closure_check(enumerate_words(), pseudo_linear_transform(cfg.f));
            if (cr.closed)
                add("code-closure", "pass");
            else
                add("code-closure", "fail",
                    "image of " + vector_to_text(*r, cr.witness) + " escapes the code");
        });
    }

    bool dual_ready = c.constacyclic_constant().has_value() && ctx->delta_zero &&
                      ctx->sigma_auto;
    if (!dual_ready) {
        add("dual-oracle", "skipped", "needs constacyclic form, delta = 0, sigma bijective");
    } else if (space_n > enum_bound) {
        add("dual-oracle", "skipped", "enumeration bound");
    } else {
        guarded("dual-oracle", [&] {
            auto dual = c.dual_code();
            auto brute = brute_dual(enumerate_words(), c.generating_matrix(), enum_bound);
            auto direct = enumerate_code(dual.code, enum_bound);
            if (brute != direct)
                add("dual-oracle", "fail", "brute-force dual differs from the dual code");
            else if (brute.size() != pow_clamped(r->size(), rr))
                add("dual-oracle", "fail", "dual cardinality is not |A|^deg(g)");
            else
                add("dual-oracle", "pass");
        });
    }

    bool sd_ready = dual_ready && n == 2 * rr && r->is_unit(cfg.g.coeff(0));
    if (!sd_ready) {
        add("self-dual-consistency", "skipped",
            "needs even split n = 2 deg(g), constacyclic form, unit g_0");
    } else if (space_n > enum_bound) {
        add("self-dual-consistency", "skipped", "enumeration bound");
    } else {
        guarded("self-dual-consistency", [&] {
            auto rep = c.self_dual_criterion();
            bool brute_self =
                brute_dual(enumerate_words(), c.generating_matrix(), enum_bound) ==
                enumerate_words();
            if (rep.is_self_dual() != brute_self)
                add("self-dual-consistency", "fail",
                    std::string("criterion says ") + (rep.is_self_dual() ? "yes" : "no") +
                        ", brute force says " + (brute_self ? "yes" : "no"));
            else
                add("self-dual-consistency", "pass");
        });
    }

    size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& cl : checks) {
        if (cl.status == "pass") ++passed;
        else if (cl.status == "fail") ++failed;
        else ++skipped;
    }

    std::string text;
    for (const auto& cl : checks) {
        text += cl.name + ": " + cl.status;
        if (!cl.detail.empty()) text += " (" + cl.detail + ")";
        text += "\n";
    }
    std::ostringstream tail;
    tail << "verify: " << (failed == 0 ? "ok" : "FAILED") << " (" << checks.size()
         << " checks, " << passed << " pass, " << failed << " fail, " << skipped
         << " skipped)\n";
    text += tail.str();

    json doc{{"command", "verify"}, {"checks", json::array()}};
    for (const auto& cl : checks) {
        json entry{{"name", cl.name}, {"status", cl.status}};
        if (!cl.detail.empty()) entry["detail"] = cl.detail;
        doc["checks"].push_back(std::move(entry));
    }
    doc["passed"] = passed;
    doc["failed"] = failed;
    doc["skipped"] = skipped;
    doc["ok"] = (failed == 0);

    return text_or_json(opts, text, std::move(doc), failed == 0 ? 0 : 5);
}

/* ---------------- remaining commands ---------------- */

run_result run_self_dual(const job_config& cfg, const run_options& opts) {
    principal_code c(cfg.f, cfg.g);
    const ring_ptr& r = cfg.ctx->r;
    auto rep = c.self_dual_criterion();

    uint64_t enum_bound = opts.bound.value_or(cfg.bounds.enumeration);
    bool brute_done = pow_clamped(r->size(), c.length()) <= enum_bound;
    if (brute_done) {
        auto words = enumerate_code(c, enum_bound);
        bool brute_self = brute_dual(words, c.generating_matrix(), enum_bound) == words;
        if (brute_self != rep.is_self_dual())
            throw internal_check_error(
                std::string("self-dual criterion says ") +
                (rep.is_self_dual() ? "yes" : "no") + " but the brute-force dual says " +
                (brute_self ? "yes" : "no"));
    }

    std::string text = std::string("self-dual: ") + (rep.is_self_dual() ? "true" : "false") +
                       " (" +
                       (rep.is_self_dual() ? "criterion sums all zero"
                                           : "nonzero criterion sum") +
                       "; brute-force " + (brute_done ? "confirmed" : "skipped") + ")\n";
    for (size_t l = 0; l < rep.sums.size(); ++l)
        text += "sum l=" + std::to_string(l + 1) + ": " + r->text(rep.sums[l]) + "\n";
    if (rep.generator_match)
        text += std::string("generator-match: ") + (*rep.generator_match ? "true" : "false") +
                "\n";

    json doc{{"command", "self-dual"},
             {"self_dual", rep.is_self_dual()},
             {"sums", json::array()},
             {"brute_force", brute_done ? "confirmed" : "skipped"}};
    for (elem s : rep.sums) doc["sums"].push_back(r->text(s));
    if (rep.generator_match) doc["generator_match"] = *rep.generator_match;
    return text_or_json(opts, text, std::move(doc));
}

run_result run_dual(const job_config& cfg, const run_options& opts) {
    principal_code c(cfg.f, cfg.g);
    const ring_ptr& r = cfg.ctx->r;
    auto dual = c.dual_code();
    ring_matrix m = c.dual_generating_matrix();

    std::string text = "generator: " + dual.generator.to_text() + "\n" +
                       "constant: " + r->text(dual.constant) + "\n" + "matrix:\n" +
                       m.to_text() + "\n";
    json doc{{"command", "dual"},
             {"generator", poly_json(dual.generator)},
             {"constant", r->text(dual.constant)},
             {"matrix", matrix_json(m)}};
    return text_or_json(opts, text, std::move(doc));
}

run_result run_weights(const job_config& cfg, const run_options& opts) {
    principal_code c(cfg.f, cfg.g);
    uint64_t enum_bound = opts.bound.value_or(cfg.bounds.enumeration);
    auto words = enumerate_code(c, enum_bound);
    auto dist = weight_distribution(words);
    auto md = min_distance(words);

    std::string text = "words: " + std::to_string(words.size()) + "\n";
    for (const auto& [w, count] : dist)
        text += "weight " + std::to_string(w) + ": " + std::to_string(count) + "\n";
    text += "min-distance: " + (md ? std::to_string(*md) : std::string("undefined")) + "\n";

    json doc{{"command", "weights"},
             {"words", words.size()},
             {"distribution", json::object()}};
    for (const auto& [w, count] : dist) doc["distribution"][std::to_string(w)] = count;
    if (md)
        doc["min_distance"] = *md;
    else
        doc["min_distance"] = nullptr;
    return text_or_json(opts, text, std::move(doc));
}

run_result run_vector_op(const std::string& command, const job_config& cfg,
                         const run_options& opts) {
    const ring_ptr& r = cfg.ctx->r;
    const bool encode = command == "encode";
    if (trimmed(opts.vector_arg).empty())
        throw validation_error(command + (encode ? " requires --message" : " requires --word"));
    principal_code c(cfg.f, cfg.g);
    std::vector<elem> input = parse_vector(*r, opts.vector_arg);
    std::vector<elem> output = encode ? c.encode(input) : c.syndrome(input);

    json doc{{"command", command},
             {encode ? "message" : "word", vector_json(*r, input)},
             {encode ? "codeword" : "syndrome", vector_json(*r, output)}};
    return text_or_json(opts, vector_to_text(*r, output) + "\n", std::move(doc));
}

} // namespace

/* ---------------- public entry points ---------------- */

job_config parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        bad_config(e.what());
    }
    if (!doc.is_object()) bad_config("top level must be an object");

    ring_ptr r = build_ring(need(doc, "ring", "config"));
    endo sigma = build_sigma(need(doc, "sigma", "config"), r);
    derivation delta = doc.contains("delta") ? build_delta(doc.at("delta"), sigma)
                                             : derivation::zero(sigma);

    job_bounds bounds;
    if (doc.contains("bounds")) {
        const json& jb = doc.at("bounds");
        if (!jb.is_object()) bad_config("bounds must be an object");
        bounds.enumeration = opt_u64(jb, "enumeration", bounds.enumeration, "bounds");
        bounds.pairs = opt_u64(jb, "pairs", bounds.pairs, "bounds");
        bounds.samples = opt_u64(jb, "samples", bounds.samples, "bounds");
    }
    uint64_t seed = opt_u64(doc, "seed", 0, "config");

    verify_options vo;
    vo.exhaustive_pair_bound = bounds.pairs;
    vo.sample_pairs = bounds.samples;
    vo.seed = seed;
    context_ptr ctx = make_context(r, std::move(sigma), std::move(delta), vo);

    skew_poly f = build_poly(ctx, need(doc, "f", "config"), "f");
    skew_poly g = build_poly(ctx, need(doc, "g", "config"), "g");
    return {ctx, std::move(f), std::move(g), bounds, seed};
}

job_config load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad_config("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::vector<elem> parse_vector(const ring& r, std::string_view text) {
    std::vector<elem> out;
    if (trimmed(text).empty()) return out;
    size_t depth = 0, start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            std::string part = trimmed(text.substr(start, i - start));
            if (part.empty()) throw validation_error("empty entry in vector text");
            out.push_back(r.parse(part));
            start = i + 1;
        } else if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            if (depth == 0) throw validation_error("unbalanced ')' in vector text");
            --depth;
        }
    }
    return out;
}

run_result run_command(const std::string& command, const job_config& cfg,
                       const run_options& opts) {
    if (command == "gen-matrix")
        return matrix_command("gen-matrix", principal_code(cfg.f, cfg.g).generating_matrix(),
                              opts);
    if (command == "control-matrix")
        return matrix_command("control-matrix",
                              principal_code(cfg.f, cfg.g).control_matrix(), opts);
    if (command == "parity-check")
        return matrix_command("parity-check",
                              principal_code(cfg.f, cfg.g).parity_check_matrix(), opts);
    if (command == "dual") return run_dual(cfg, opts);
    if (command == "self-dual") return run_self_dual(cfg, opts);
    if (command == "verify") return run_verify(cfg, opts);
    if (command == "encode" || command == "syndrome") return run_vector_op(command, cfg, opts);
    if (command == "weights") return run_weights(cfg, opts);
    throw validation_error("unknown command '" + command + "'");
}

run_result run_examples(const run_options& opts) {
    auto results = gallery::run_all();
    size_t passed = 0;
    std::string text;
    for (const auto& res : results) {
        if (res.passed) {
            ++passed;
            text += res.name + ": pass\n";
        } else {
            text += res.name + ": FAIL — " + res.detail + "\n";
        }
    }
    text += std::to_string(passed) + "/" + std::to_string(results.size()) + " pass\n";

    json doc{{"command", "paper-examples"}, {"results", json::array()}};
    for (const auto& res : results)
        doc["results"].push_back(
            {{"name", res.name}, {"passed", res.passed}, {"detail", res.detail}});
    doc["passed"] = passed;
    doc["total"] = results.size();
    return text_or_json(opts, text, std::move(doc),
                        passed == results.size() ? 0 : 5);
}

} // namespace skewcode
