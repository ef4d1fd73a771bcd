// Skew polynomials A[X; sigma, delta] over a finite commutative ring A:
// ordinary addition, multiplication twisted by  X a = sigma(a) X + delta(a).
// Also the Laurent extension A[X, X^-1; sigma] (delta = 0, sigma an
// automorphism, X^-1 a = sigma^-1(a) X^-1) used for the reciprocal-transform
// identities, and the division / transfer operations built on top.
#pragma once

#include "skewcode/error.hpp"
#include "skewcode/ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skewcode {

// Immutable bundle (A, sigma, delta); polynomials hold one by shared_ptr.
struct skew_context {
    ring_ptr r;
    endo sigma;
    derivation delta;
    bool delta_zero;
    bool sigma_auto;

    elem sig(elem e) const { return sigma(e); }
    elem sig_pow(elem e, int64_t n) const { return sigma.pow(e, n); }
    elem del(elem e) const { return delta(e); }
};

using context_ptr = std::shared_ptr<const skew_context>;

// Verifies sigma and delta (exhaustively below the pair bound, sampled above)
// and rejects invalid maps with the counterexample in the message.
context_ptr make_context(ring_ptr r, endo sigma, derivation delta, const verify_options& opts = {});
context_ptr make_context(ring_ptr r, endo sigma, const verify_options& opts = {}); // delta = 0

bool same_context(const skew_context& a, const skew_context& b);

class skew_poly {
public:
    static skew_poly zero(context_ptr ctx);
    static skew_poly one(context_ptr ctx);
    static skew_poly constant(context_ptr ctx, elem c);
    static skew_poly monomial(context_ptr ctx, elem c, size_t deg);
    static skew_poly from_coeffs(context_ptr ctx, std::vector<elem> coeffs); // low degree first
    static skew_poly xn_minus(context_ptr ctx, size_t n, elem a);            // X^n - a

    const context_ptr& ctx() const { return ctx_; }
    const std::vector<elem>& coeffs() const { return c_; }
    // Degree of the zero polynomial is "minus infinity", encoded as nullopt.
    std::optional<size_t> degree() const;
    bool is_zero() const { return c_.empty(); }
    elem coeff(size_t i) const; // zero beyond the degree
    elem leading() const;       // throws validation_error on the zero polynomial
    bool is_monic() const;

    skew_poly operator+(const skew_poly& o) const;
    skew_poly operator-(const skew_poly& o) const;
    skew_poly operator*(const skew_poly& o) const;
    skew_poly operator-() const;
    bool operator==(const skew_poly& o) const;
    bool operator!=(const skew_poly& o) const { return !(*this == o); }

    // sigma^n applied to every coefficient; n < 0 needs sigma bijective
    skew_poly sigma_map(int64_t n) const;
    // reciprocal transform h* = sum_i sigma^i(h_{s-i}) X^i, s = deg h.
    // Defined in the delta = 0, sigma automorphism setting only.
    skew_poly star() const;

    // "[c0, c1, ...]" low degree first, "[]" for zero
    std::string to_text() const;
    static skew_poly parse(context_ptr ctx, std::string_view s);

private:
    skew_poly(context_ptr ctx, std::vector<elem> c) : ctx_(std::move(ctx)), c_(std::move(c)) {}
    void strip();

    context_ptr ctx_;
    std::vector<elem> c_; // low degree first, no trailing zeros
};

skew_poly operator*(elem a, const skew_poly& p); // left scalar multiple

struct divmod_result {
    skew_poly quot;
    skew_poly rem;
};

// f = quot * g + rem, deg rem < deg g.  Works for any (sigma, delta); needs a
// unit leading coefficient on g.
divmod_result right_divmod(const skew_poly& f, const skew_poly& g);
// f = g * quot + rem, deg rem < deg g.  Additionally needs sigma bijective.
divmod_result left_divmod(const skew_poly& f, const skew_poly& g);

/* Laurent polynomials A[X, X^-1; sigma] */

class laurent_poly {
public:
    static laurent_poly zero(context_ptr ctx); // ctx must have delta = 0, sigma automorphism
    static laurent_poly monomial(context_ptr ctx, elem c, int64_t deg);
    static laurent_poly from(const skew_poly& p);

    const context_ptr& ctx() const { return ctx_; }
    const std::map<int64_t, elem>& coeffs() const { return c_; } // nonzero entries only
    elem coeff(int64_t i) const;
    bool is_zero() const { return c_.empty(); }

    laurent_poly operator+(const laurent_poly& o) const;
    laurent_poly operator*(const laurent_poly& o) const; // (a X^i)(b X^j) = a sigma^i(b) X^(i+j)
    bool operator==(const laurent_poly& o) const;
    bool operator!=(const laurent_poly& o) const { return !(*this == o); }

    // psi(sum a_i X^i) = sum X^-i a_i = sum sigma^-i(a_i) X^-i; an involutive
    // anti-automorphism of the Laurent ring.
    laurent_poly psi() const;

    std::string to_text() const; // "c*X^i" terms joined by " + ", ascending i

private:
    laurent_poly(context_ptr ctx, std::map<int64_t, elem> c)
        : ctx_(std::move(ctx)), c_(std::move(c)) {}

    context_ptr ctx_;
    std::map<int64_t, elem> c_;
};

/* divisor-transfer helpers (delta = 0, sigma an automorphism) */

enum class transfer_direction {
    left_to_right, // given X^n - b = g h, produce a with X^n - a = sigma^n(h) g
    right_to_left, // given X^n - a = q g, produce b with X^n - b = g sigma^-n(q)
};

// Moves a factor with unit leading coefficient from one side of a binomial
// X^n - constant to the other; self-checks the produced factorization.
elem transfer_constant(const skew_poly& g, elem constant, size_t n, transfer_direction dir);

struct star_divisor_constants {
    elem left_target;  // h* left-divides  X^n - left_target
    elem right_target; // h* right-divides X^n - right_target
};

// For h with unit constant term right-dividing X^n - b (b a unit): the
// binomials divided by the reciprocal h*.  Both claims are self-checked.
star_divisor_constants hstar_divisor_constants(const skew_poly& h, elem b, size_t n);

} // namespace skewcode
