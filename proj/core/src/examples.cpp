#include "skewcode/examples.hpp"

#include "skewcode/error.hpp"
#include "skewcode/plt.hpp"

#include <functional>
#include <utility>

namespace skewcode::gallery {

namespace {

using checks = std::vector<std::string>;

void expect(checks& bad, bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
}

ring_matrix make_matrix(const ring_ptr& r, const std::vector<std::vector<elem>>& rows) {
    ring_matrix m(r, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

void expect_matrix(checks& bad, const ring_matrix& got, const ring_matrix& want,
                   const std::string& what) {
    if (got != want)
        bad.push_back(what + ": got\n" + got.to_text() + "\nwant\n" + want.to_text());
}

void expect_poly(checks& bad, const skew_poly& got, const skew_poly& want,
                 const std::string& what) {
    if (got != want)
        bad.push_back(what + ": got " + got.to_text() + ", want " + want.to_text());
}

void expect_elem(checks& bad, const ring& r, elem got, elem want, const std::string& what) {
    if (got != want)
        bad.push_back(what + ": got " + r.text(got) + ", want " + r.text(want));
}

example_result run_one(const std::string& name, const std::string& summary,
                       const std::function<void(checks&)>& body) {
    example_result res;
    res.name = name;
    checks bad;
    try {
        body(bad);
    } catch (const std::exception& e) {
        bad.push_back(std::string("exception: ") + e.what());
    }
    res.passed = bad.empty();
    if (res.passed) {
        res.detail = summary;
    } else {
        std::string joined;
        for (const auto& b : bad) {
            if (!joined.empty()) joined += "; ";
            joined += b;
        }
        res.detail = joined;
    }
    return res;
}

} // namespace

context_ptr dual_project_nilpart(ring_ptr inner) {
    auto d = ring::dual_numbers(std::move(inner));
    auto s = endo::project(d);
    return make_context(d, s, derivation::nilpart(s));
}

context_ptr dual_project_zero(ring_ptr inner) {
    auto d = ring::dual_numbers(std::move(inner));
    return make_context(d, endo::project(d));
}

context_ptr pair_gf3_swap() {
    auto a = ring::product(ring::zmod(3));
    return make_context(a, endo::swap(a));
}

context_ptr dual_z6_conjugate() {
    auto d = ring::dual_numbers(ring::zmod(6));
    return make_context(d, endo::conjugate(d));
}

context_ptr dual_z3_nilpart() {
    auto d = ring::dual_numbers(ring::zmod(3));
    auto s = endo::identity(d);
    return make_context(d, s, derivation::nilpart(s));
}

principal_code example1_code(const context_ptr& ctx) {
    const ring_ptr& r = ctx->r;
    elem alpha = r->from_parts(r->inner()->one(), r->inner()->one());
    skew_poly g = skew_poly::from_coeffs(ctx, {-alpha, r->one()});
    skew_poly f = skew_poly::monomial(ctx, r->one(), 3) * g;
    return principal_code(f, g);
}

principal_code example4_code() {
    auto ctx = pair_gf3_swap();
    const ring_ptr& r = ctx->r;
    elem alpha = r->from_int(2);
    elem a4 = alpha * alpha * alpha * alpha;
    skew_poly g = skew_poly::from_coeffs(ctx, {-alpha, r->one()});
    return principal_code(skew_poly::xn_minus(ctx, 4, a4), g);
}

principal_code example5b_code() {
    auto ctx = dual_z6_conjugate();
    const ring_ptr& r = ctx->r;
    elem alpha = r->from_parts(r->inner()->one(), r->inner()->one());
    skew_poly g = skew_poly::from_coeffs(ctx, {alpha, r->zero(), r->one()});
    return principal_code(skew_poly::xn_minus(ctx, 4, alpha * alpha), g);
}

principal_code example6_code() {
    auto ctx = pair_gf3_swap();
    const ring_ptr& r = ctx->r;
    elem alpha = r->from_int(2);
    elem a2 = alpha * alpha;
    elem a3 = a2 * alpha;
    skew_poly g = skew_poly::from_coeffs(ctx, {r->inverse(a3), r->inverse(a2), r->one()});
    return principal_code(skew_poly::xn_minus(ctx, 4, r->from_int(2)), g);
}

principal_code example7_code() {
    auto ctx = dual_z3_nilpart();
    const ring_ptr& r = ctx->r;
    elem beta = r->from_parts(r->inner()->one(), r->inner()->one());
    skew_poly g = skew_poly::from_coeffs(ctx, {beta + beta, r->one()});
    skew_poly f =
        skew_poly::from_coeffs(ctx, {r->zero(), r->from_int(2), r->zero(), r->one()});
    return principal_code(f, g);
}

namespace {

// Generating matrix of (X - a) inside a cubic left multiple over D(R), for
// both the nilpart derivation and delta = 0.  Entries are R-generic.
void check_example1(checks& bad) {
    for (uint64_t m : {uint64_t(3), uint64_t(5)}) {
        auto base = ring::zmod(m);
        auto ctx = dual_project_nilpart(base);
        const ring_ptr& r = ctx->r;
        elem one = r->one(), z = r->zero();
        elem alpha = r->from_parts(base->one(), base->one());

        principal_code c = example1_code(ctx);
        ring_matrix want = make_matrix(r, {{-alpha, one, z, z},
                                           {one - alpha, -one, one, z},
                                           {one - alpha, z, -one, one}});
        expect_matrix(bad, c.generating_matrix(), want, "Z_" + std::to_string(m) + " G");

        // the generating matrix must not depend on which cubic completes g
        skew_poly q2 = skew_poly::monomial(ctx, one, 3) + skew_poly::monomial(ctx, one, 1);
        principal_code c2(q2 * c.generator(), c.generator());
        expect_matrix(bad, c2.generating_matrix(), want,
                      "Z_" + std::to_string(m) + " G for a second cubic multiple");

        auto ctx0 = dual_project_zero(base);
        const ring_ptr& r0 = ctx0->r;
        elem one0 = r0->one(), z0 = r0->zero();
        elem alpha0 = r0->from_parts(base->one(), base->one());
        principal_code c0 = example1_code(ctx0);
        ring_matrix want0 = make_matrix(r0, {{-alpha0, one0, z0, z0},
                                             {z0, -one0, one0, z0},
                                             {z0, z0, -one0, one0}});
        expect_matrix(bad, c0.generating_matrix(), want0,
                      "Z_" + std::to_string(m) + " G with delta = 0");
    }
}

// Factorization of X^4 - a^4 over Z_3 x Z_3 with the swap automorphism, and
// the divisor transfer between left and right cofactors.
void check_example2(checks& bad) {
    auto ctx = pair_gf3_swap();
    const ring_ptr& r = ctx->r;
    elem one = r->one();
    elem alpha = r->from_int(2);
    elem a2 = alpha * alpha, a3 = a2 * alpha, a4 = a2 * a2;

    skew_poly g = skew_poly::from_coeffs(ctx, {-alpha, one});
    skew_poly h = skew_poly::from_coeffs(ctx, {a3, a2, alpha, one});
    skew_poly f = skew_poly::xn_minus(ctx, 4, a4);
    expect_poly(bad, g * h, f, "g h");
    expect_poly(bad, h * g, f, "h g");
    expect_elem(bad, *r, transfer_constant(g, a4, 4, transfer_direction::left_to_right), a4,
                "left-to-right transfer");
    expect_elem(bad, *r, transfer_constant(g, a4, 4, transfer_direction::right_to_left), a4,
                "right-to-left transfer");
}

// The reciprocal h* of the cubic cofactor, its divisor targets, the explicit
// linear cofactor of X^4 - a^-4, and the Laurent identities behind them.
void check_example3(checks& bad) {
    auto ctx = pair_gf3_swap();
    const ring_ptr& r = ctx->r;
    elem one = r->one();
    elem alpha = r->from_int(2);
    elem a2 = alpha * alpha, a3 = a2 * alpha, a4 = a2 * a2;
    elem ia4 = r->inverse(a4);

    skew_poly h = skew_poly::from_coeffs(ctx, {a3, a2, alpha, one});
    skew_poly hs = h.star();
    expect_poly(bad, hs, skew_poly::from_coeffs(ctx, {one, alpha, a2, a3}), "h*");

    auto targets = hstar_divisor_constants(h, a4, 4);
    expect_elem(bad, *r, targets.left_target, ia4, "left divisor target");
    expect_elem(bad, *r, targets.right_target, ia4, "right divisor target");

    skew_poly q = skew_poly::from_coeffs(ctx, {-ia4, r->inverse(a3)});
    skew_poly target = skew_poly::xn_minus(ctx, 4, ia4);
    expect_poly(bad, hs * q, target, "h* q");
    expect_poly(bad, q * hs, target, "q h*");
    auto ld = left_divmod(target, hs);
    expect_poly(bad, ld.quot, q, "left quotient");
    expect(bad, ld.rem.is_zero(), "left remainder nonzero: " + ld.rem.to_text());

    // h* = X^s psi(h) and X^n h = sigma^n(h) X^n in the Laurent ring
    auto lx3 = laurent_poly::monomial(ctx, one, 3);
    auto lx4 = laurent_poly::monomial(ctx, one, 4);
    auto lh = laurent_poly::from(h);
    expect(bad, laurent_poly::from(hs) == lx3 * lh.psi(), "h* != X^3 psi(h)");
    expect(bad, lx4 * lh == laurent_poly::from(h.sigma_map(4)) * lx4,
           "X^4 h != sigma^4(h) X^4");
}

// Dual of (X - a) as a code of length 4: generated by h* with the inverse
// constant, confirmed against the brute-force dual.
void check_example4(checks& bad) {
    auto ctx = pair_gf3_swap();
    const ring_ptr& r = ctx->r;
    elem one = r->one();
    elem alpha = r->from_int(2);
    elem a2 = alpha * alpha, a3 = a2 * alpha, a4 = a2 * a2;
    elem ia4 = r->inverse(a4);

    principal_code c = example4_code();
    expect(bad, c.constacyclic_constant().has_value(), "constacyclic constant missing");
    if (c.constacyclic_constant())
        expect_elem(bad, *r, *c.constacyclic_constant(), a4, "constacyclic constant");

    auto dual = c.dual_code();
    expect_poly(bad, dual.generator, skew_poly::from_coeffs(ctx, {one, alpha, a2, a3}),
                "dual generator");
    expect_elem(bad, *r, dual.constant, ia4, "dual constant");
    expect_poly(bad, dual.code.modulus(), skew_poly::xn_minus(ctx, 4, ia4), "dual modulus");

    auto words = enumerate_code(c);
    expect(bad, words.size() == 729, "|C| != 9^3");
    auto brute = brute_dual(words, c.generating_matrix());
    expect(bad, brute == enumerate_code(dual.code), "brute dual != enumerated dual");
    expect(bad, brute.size() == 9, "|dual| != 9^1");
}

// Dual generating matrices: the length-4 swap example and the D(Z_6)
// conjugation example, including control and parity-check matrices.
void check_example5(checks& bad) {
    {
        auto c = example4_code();
        const ring_ptr& r = c.ctx()->r;
        elem one = r->one();
        elem alpha = r->from_int(2);
        elem a2 = alpha * alpha, a3 = a2 * alpha;
        expect_matrix(bad, c.dual_generating_matrix(),
                      make_matrix(r, {{one, alpha, a2, a3}}), "dual generating matrix (a)");
    }
    {
        principal_code c = example5b_code();
        auto ctx = c.ctx();
        const ring_ptr& r = ctx->r;
        elem one = r->one(), z = r->zero();
        elem alpha = r->from_parts(r->inner()->one(), r->inner()->one());
        elem a2 = alpha * alpha;
        elem sna = ctx->sig(-alpha); // (5,1), not -alpha = (5,5)
        elem sa2 = ctx->sig(a2);

        expect(bad, sna != -alpha, "conjugation fixes -alpha");
        expect(bad, r->text(sna) == "(5,1)", "sigma(-alpha) text: got " + r->text(sna));
        if (c.cofactor())
            expect_poly(bad, *c.cofactor(), skew_poly::from_coeffs(ctx, {-alpha, z, one}),
                        "cofactor (b)");
        else
            bad.push_back("cofactor missing (b)");

        ring_matrix want_h = make_matrix(r, {{-alpha, z, one, z},
                                             {z, sna, z, one},
                                             {a2, z, -alpha, z},
                                             {z, sa2, z, sna}});
        expect_matrix(bad, c.control_matrix(), want_h, "control matrix (b)");

        ring_matrix want_p =
            make_matrix(r, {{one, z, -alpha, z}, {z, one, z, sna}});
        expect_matrix(bad, c.parity_check_matrix(), want_p, "parity-check matrix (b)");
        expect_matrix(bad, c.dual_generating_matrix(), want_p, "dual generating matrix (b)");

        auto dual = c.dual_code();
        expect_poly(bad, dual.generator, skew_poly::from_coeffs(ctx, {one, z, -alpha}),
                    "dual generator (b)");
        expect_elem(bad, *r, dual.constant, r->inverse(a2), "dual constant (b)");

        auto words = enumerate_code(c);
        expect(bad, words.size() == 36 * 36, "|C| != 36^2");
        auto brute = brute_dual(words, c.generating_matrix());
        expect(bad, brute == enumerate_code(dual.code), "brute dual != enumerated dual (b)");
    }
}

// A self-dual code of length 4 over Z_3 x Z_3: criterion sums vanish, the
// normalized h* reproduces g, and the brute-force dual is the code itself.
void check_example6(checks& bad) {
    principal_code c = example6_code();
    auto ctx = c.ctx();
    const ring_ptr& r = ctx->r;
    elem alpha = r->from_int(2);
    elem a3 = alpha * alpha * alpha;
    elem one = r->one();

    expect_poly(bad, c.modulus(), skew_poly::xn_minus(ctx, 4, r->from_int(2)), "modulus");
    if (c.cofactor())
        expect_poly(bad, *c.cofactor(), skew_poly::from_coeffs(ctx, {a3, alpha, one}),
                    "cofactor");
    else
        bad.push_back("cofactor missing");

    auto rep = c.self_dual_criterion();
    expect(bad, rep.sums.size() == 2, "expected 2 criterion sums");
    for (size_t l = 0; l < rep.sums.size(); ++l)
        expect_elem(bad, *r, rep.sums[l], r->zero(),
                    "criterion sum l=" + std::to_string(l + 1));
    expect(bad, rep.sums_all_zero && rep.is_self_dual(), "criterion verdict");
    expect(bad, rep.generator_match.has_value() && *rep.generator_match,
           "normalized h* does not reproduce g");

    auto words = enumerate_code(c);
    expect(bad, words.size() == 81, "|C| != 9^2");
    expect(bad, brute_dual(words, c.generating_matrix()) == words, "C != brute dual of C");
}

// The worked D(Z_3) instance with identity sigma and the nilpart derivation:
// matrices, encoding and syndromes.
void check_example7(checks& bad) {
    principal_code c = example7_code();
    auto ctx = c.ctx();
    const ring_ptr& r = ctx->r;
    elem one = r->one(), z = r->zero();
    elem alpha = r->from_parts(r->inner()->zero(), r->inner()->one());
    elem beta = r->from_parts(r->inner()->one(), r->inner()->one());
    elem tb = beta + beta, ta = alpha + alpha;

    if (c.cofactor()) {
        expect_poly(bad, *c.cofactor(), skew_poly::from_coeffs(ctx, {alpha, beta, one}),
                    "cofactor");
        expect_poly(bad, *c.cofactor() * c.generator(), c.modulus(), "h g != f");
    } else {
        bad.push_back("cofactor missing");
    }

    ring_matrix want_g = make_matrix(r, {{tb, one, z}, {ta, tb, one}});
    expect_matrix(bad, c.generating_matrix(), want_g, "G");

    ring_matrix want_h = make_matrix(r, {{alpha, beta, one},
                                         {alpha, one + ta, beta},
                                         {alpha, beta, one}});
    expect_matrix(bad, c.control_matrix(), want_h, "H");
    expect(bad, (c.generating_matrix() * c.control_matrix()).is_zero(), "G H != 0");

    std::vector<elem> msg = {one, one};
    std::vector<elem> cw = c.encode(msg);
    std::vector<elem> want_cw = {tb + ta, tb + one, one};
    expect(bad, cw == want_cw,
           "encode: got " + vector_to_text(*r, cw) + ", want " + vector_to_text(*r, want_cw));

    std::vector<elem> probe = {one, z, z};
    std::vector<elem> syn = c.syndrome(probe);
    std::vector<elem> want_syn = {alpha, beta, one};
    expect(bad, syn == want_syn,
           "syndrome: got " + vector_to_text(*r, syn) + ", want " +
               vector_to_text(*r, want_syn));
}

// Parity-check matrix of the same D(Z_3) code; codewords have zero syndrome.
void check_example8(checks& bad) {
    principal_code c = example7_code();
    auto ctx = c.ctx();
    const ring_ptr& r = ctx->r;
    elem one = r->one(), z = r->zero();
    elem beta = r->from_parts(r->inner()->one(), r->inner()->one());

    ring_matrix want = make_matrix(r, {{one, beta, one}});
    expect_matrix(bad, c.parity_check_matrix(), want, "parity-check matrix");
    expect(bad,
           (c.generating_matrix() * c.parity_check_matrix().transpose()).is_zero(),
           "G H_*^T != 0");

    std::vector<elem> msg = {one, one};
    std::vector<elem> cw = c.encode(msg);
    expect(bad, c.syndrome(cw) == std::vector<elem>(3, z), "codeword has nonzero syndrome");
}

} // namespace

std::vector<example_result> run_all() {
    std::vector<example_result> out;
    out.push_back(run_one("example-1",
                          "generating matrices over D(Z_3) and D(Z_5), both derivations",
                          check_example1));
    out.push_back(run_one("example-2", "factorization and divisor transfer over Z_3 x Z_3",
                          check_example2));
    out.push_back(run_one("example-3", "reciprocal transform, divisor targets, Laurent identities",
                          check_example3));
    out.push_back(run_one("example-4", "dual code of (X - a), checked against the brute force",
                          check_example4));
    out.push_back(run_one("example-5", "dual generating, control and parity-check matrices",
                          check_example5));
    out.push_back(run_one("example-6", "self-dual length-4 code over Z_3 x Z_3",
                          check_example6));
    out.push_back(run_one("example-7", "D(Z_3) matrices, encoding and syndromes",
                          check_example7));
    out.push_back(run_one("example-8", "parity-check matrix over D(Z_3)", check_example8));
    return out;
}

} // namespace skewcode::gallery
