#include "doctest.h"

#include "skewcode/code.hpp"
#include "skewcode/error.hpp"
#include "skewcode/examples.hpp"
#include "skewcode/oracle.hpp"

#include <optional>
#include <vector>

using namespace skewcode;

namespace {

context_ptr zmod_identity(uint64_t m) {
    auto r = ring::zmod(m);
    return make_context(r, endo::identity(r));
}

// The corrected relation between a constacyclic code and its dual generator:
// with hd the (constant-term-one) dual generator of degree k = rank,
//   g * hperp = X^n + g_0 sigma^k(hd_k)   where hperp_i = sigma^(k-i)(hd_(k-i)),
// and the original constant is  a = -sigma^k(g_0) sigma^(2k)(hd_k).
void check_dual_identity(const principal_code& c) {
    const context_ptr& ctx = c.ctx();
    const ring_ptr& r = ctx->r;
    auto dr = c.dual_code();
    const skew_poly& hd = dr.generator;

    size_t k = c.rank();
    REQUIRE(hd.degree() == k);
    CHECK(hd.coeff(0) == r->one());

    std::vector<elem> hp(k + 1, r->zero());
    for (size_t i = 0; i <= k; ++i) hp[i] = ctx->sig_pow(hd.coeff(k - i), int64_t(k - i));
    skew_poly hperp = skew_poly::from_coeffs(ctx, hp);

    elem g0 = c.generator().coeff(0);
    elem tail = g0 * ctx->sig_pow(hd.coeff(k), int64_t(k));
    CHECK(c.generator() * hperp == skew_poly::xn_minus(ctx, c.length(), -tail));

    elem a_back = -(ctx->sig_pow(g0, int64_t(k)) * ctx->sig_pow(hd.coeff(k), int64_t(2 * k)));
    CHECK(a_back == *c.constacyclic_constant());
    CHECK(right_divmod(skew_poly::xn_minus(ctx, c.length(), a_back), c.generator()).rem.is_zero());

    // duality swaps the roles of rank and generator degree
    CHECK(dr.code.length() == c.length());
    CHECK(dr.code.rank() == c.generator_degree());
    CHECK(dr.code.modulus() == skew_poly::xn_minus(ctx, c.length(), dr.constant));
}

} // namespace

TEST_CASE("construction validates its inputs") {
    auto ctx = zmod_identity(6);
    const ring_ptr& r = ctx->r;
    skew_poly f = skew_poly::xn_minus(ctx, 2, -r->one()); // X^2 + 1
    skew_poly x1 = skew_poly::from_coeffs(ctx, {r->one(), r->one()});

    CHECK_THROWS_AS(principal_code(skew_poly::monomial(ctx, r->from_int(2), 2), x1),
                    validation_error); // f not monic
    CHECK_THROWS_AS(principal_code(f, skew_poly::zero(ctx)), validation_error);
    CHECK_THROWS_AS(principal_code(f, skew_poly::from_coeffs(ctx, {r->one(), r->from_int(2)})),
                    validation_error); // leading 2 is not a unit
    CHECK_THROWS_AS(principal_code(skew_poly::constant(ctx, r->one()), x1), validation_error);

    // X + 5 does not right-divide X^2 + 1 (remainder 2)
    skew_poly g = skew_poly::from_coeffs(ctx, {r->from_int(5), r->one()});
    CHECK_THROWS_AS(principal_code(f, g), precondition_error);

    // mixed contexts are rejected
    auto other = gallery::dual_z3_nilpart();
    CHECK_THROWS_AS(principal_code(f, skew_poly::one(other)), validation_error);
}

TEST_CASE("basic accessors") {
    principal_code c = gallery::example7_code();
    CHECK(c.length() == 3);
    CHECK(c.generator_degree() == 1);
    CHECK(c.rank() == 2);
    CHECK(c.generator().is_monic());
    CHECK(c.modulus().degree() == size_t(3));
    REQUIRE(c.cofactor().has_value());
    CHECK((c.generator() * *c.cofactor()).degree() == size_t(3));
    CHECK_FALSE(c.constacyclic_constant().has_value()); // X^3 + 2X is no binomial
}

TEST_CASE("generator is normalized to monic form") {
    auto f9 = ring::gf(3, 2);
    auto ctx = make_context(f9, endo::frobenius(f9, 1));
    elem i = f9->parse("(0,1)");
    skew_poly g = skew_poly::from_coeffs(ctx, {-i, f9->one()});
    skew_poly f = skew_poly::from_coeffs(ctx, {f9->one(), i + i, f9->one()}); // (X+i)(X-i)

    principal_code plain(f, g);
    principal_code scaled(f, i * g); // iX + 1, same right divisor up to a unit
    CHECK(scaled.generator() == plain.generator());
    CHECK(scaled.generating_matrix() == plain.generating_matrix());
}

TEST_CASE("generating matrix does not depend on the modulus") {
    auto f9 = ring::gf(3, 2);
    auto ctx = make_context(f9, endo::frobenius(f9, 1));
    elem i = f9->parse("(0,1)");
    skew_poly g = skew_poly::from_coeffs(ctx, {-i, f9->one()});

    skew_poly f1 = skew_poly::from_coeffs(ctx, {-i, i + f9->one(), f9->one()}); // (X+1)(X-i)
    skew_poly f2 = skew_poly::from_coeffs(ctx, {f9->one(), i + i, f9->one()});  // (X+i)(X-i)
    CHECK(principal_code(f1, g).generating_matrix() == principal_code(f2, g).generating_matrix());
}

TEST_CASE("constacyclic constant requires a unit") {
    auto ctx = zmod_identity(6);
    const ring_ptr& r = ctx->r;
    // X^2 - 4 = (X+2)(X-2), but 4 is not a unit mod 6
    skew_poly f = skew_poly::xn_minus(ctx, 2, r->from_int(4));
    skew_poly g = skew_poly::from_coeffs(ctx, {r->from_int(-2), r->one()});
    principal_code c(f, g);
    CHECK_FALSE(c.constacyclic_constant().has_value());
    CHECK_THROWS_AS(c.dual_code(), precondition_error);
}

TEST_CASE("dual construction preconditions") {
    CHECK_THROWS_AS(gallery::example7_code().dual_code(), precondition_error); // delta != 0
    CHECK_THROWS_AS(gallery::example7_code().dual_generating_matrix(), precondition_error);

    // sigma = project is not invertible
    auto proj = gallery::dual_project_zero(ring::zmod(3));
    const ring_ptr& dr = proj->r;
    skew_poly f = skew_poly::monomial(proj, dr->one(), 3);
    skew_poly g = skew_poly::monomial(proj, dr->one(), 1);
    principal_code cp(f, g);
    CHECK_THROWS_AS(cp.dual_code(), precondition_error);
    CHECK_THROWS_AS(cp.parity_check_matrix(), precondition_error);

    // not constacyclic: X^2 + 3X + 2 over Z_5
    auto z5 = zmod_identity(5);
    const ring_ptr& r5 = z5->r;
    skew_poly f5 = skew_poly::from_coeffs(z5, {r5->from_int(2), r5->from_int(3), r5->one()});
    skew_poly g5 = skew_poly::from_coeffs(z5, {r5->from_int(2), r5->one()});
    principal_code c5(f5, g5);
    try {
        c5.dual_code();
        FAIL("non-constacyclic dual accepted");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.what()).find("constacyclic") != std::string::npos);
    }
}

TEST_CASE("self-duality criterion preconditions") {
    CHECK_THROWS_AS(gallery::example7_code().self_dual_criterion(), precondition_error); // delta

    // odd-length code: n = 2 deg g fails
    auto z5 = zmod_identity(5);
    const ring_ptr& r5 = z5->r;
    skew_poly f = skew_poly::xn_minus(z5, 3, r5->one());
    skew_poly g = skew_poly::from_coeffs(z5, {r5->from_int(-1), r5->one()});
    CHECK_THROWS_AS(principal_code(f, g).self_dual_criterion(), precondition_error);

    // non-unit constant term on g: X^2 + 4X + 3 = (X+1)(X+3) over Z_6
    auto z6 = zmod_identity(6);
    const ring_ptr& r6 = z6->r;
    skew_poly f6 = skew_poly::from_coeffs(z6, {r6->from_int(3), r6->from_int(4), r6->one()});
    skew_poly g6 = skew_poly::from_coeffs(z6, {r6->from_int(3), r6->one()});
    CHECK_THROWS_AS(principal_code(f6, g6).self_dual_criterion(), precondition_error);
}

TEST_CASE("self-duality verdicts") {
    // X - 1 in Z_5[X]/(X^2 - 1): criterion sum is 2, not self-dual
    auto z5 = zmod_identity(5);
    const ring_ptr& r5 = z5->r;
    principal_code c5(skew_poly::xn_minus(z5, 2, r5->one()),
                      skew_poly::from_coeffs(z5, {r5->from_int(-1), r5->one()}));
    auto rep5 = c5.self_dual_criterion();
    CHECK(rep5.half_length == 1);
    REQUIRE(rep5.sums.size() == 1);
    CHECK(rep5.sums[0] == r5->from_int(2));
    CHECK_FALSE(rep5.is_self_dual());
    REQUIRE(rep5.generator_match.has_value());
    CHECK_FALSE(*rep5.generator_match);

    // the binary repetition code is self-dual
    auto z2 = zmod_identity(2);
    const ring_ptr& r2 = z2->r;
    principal_code c2(skew_poly::xn_minus(z2, 2, r2->one()),
                      skew_poly::from_coeffs(z2, {r2->one(), r2->one()}));
    auto rep2 = c2.self_dual_criterion();
    CHECK(rep2.sums_all_zero);
    CHECK(rep2.generator_match == std::optional<bool>(true));

    // the worked self-dual length-4 example
    auto rep6 = gallery::example6_code().self_dual_criterion();
    CHECK(rep6.half_length == 2);
    CHECK(rep6.is_self_dual());
}

TEST_CASE("dual generator closes the companion identity") {
    check_dual_identity(gallery::example4_code());
    check_dual_identity(gallery::example5b_code());
    check_dual_identity(gallery::example6_code());

    auto z5 = zmod_identity(5);
    const ring_ptr& r5 = z5->r;
    check_dual_identity(principal_code(skew_poly::xn_minus(z5, 2, r5->one()),
                                       skew_poly::from_coeffs(z5, {r5->from_int(-1), r5->one()})));

    auto z2 = zmod_identity(2);
    const ring_ptr& r2 = z2->r;
    check_dual_identity(principal_code(skew_poly::xn_minus(z2, 2, r2->one()),
                                       skew_poly::from_coeffs(z2, {r2->one(), r2->one()})));
}

TEST_CASE("dual constant of the invariant worked example") {
    // here a sigma^-k(a) = sigma^-k(h_0) sigma^(n-k)(h_0^-1), so the dual keeps
    // the constant of the original code
    auto c = gallery::example6_code();
    auto dr = c.dual_code();
    CHECK(dr.constant == c.ctx()->r->from_int(2));
    CHECK(dr.constant == *c.constacyclic_constant());
}

TEST_CASE("control and parity-check matrices multiply to zero") {
    for (const principal_code& c :
         {gallery::example5b_code(), gallery::example6_code(), gallery::example7_code()}) {
        ring_matrix g = c.generating_matrix();
        ring_matrix h = c.control_matrix();
        CHECK((g * h).is_zero());
        if (c.ctx()->sigma_auto) {
            ring_matrix p = c.parity_check_matrix();
            CHECK(p.rows() == c.generator_degree());
            CHECK(p.cols() == c.length());
            CHECK((g * p.transpose()).is_zero());
        }
    }
}

TEST_CASE("encode and syndrome") {
    principal_code c = gallery::example7_code();
    const ring_ptr& r = c.ctx()->r;

    std::vector<elem> msg = {r->parse("(1,0)"), r->parse("(1,0)")};
    std::vector<elem> word = c.encode(msg);
    CHECK(vector_to_text(*r, word) == "(2,1) (0,2) (1,0)");
    CHECK(c.syndrome(word) == std::vector<elem>(3, r->zero()));

    std::vector<elem> probe = {r->parse("(1,0)"), r->parse("(0,0)"), r->parse("(0,0)")};
    CHECK(vector_to_text(*r, c.syndrome(probe)) == "(0,1) (1,1) (1,0)");

    std::vector<elem> bad = {r->one()};
    CHECK_THROWS_AS(c.encode(bad), validation_error);
    CHECK_THROWS_AS(c.syndrome(bad), validation_error);
}
