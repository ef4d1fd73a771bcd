// Principal module codes cut out of A[X; sigma, delta] / (f): the code is the
// span of the T_f-iterates of a monic right divisor g of f.  Construction of
// the generating / control / parity-check matrices, the dual of a
// constacyclic code, and the self-duality criterion.  Every matrix built from
// a closed-form recursion is cross-checked against the independent T_f
// matrix-formula iteration before it is returned.
#pragma once

#include "skewcode/plt.hpp"
#include "skewcode/ring_matrix.hpp"
#include "skewcode/skew_poly.hpp"

#include <optional>
#include <span>
#include <vector>

namespace skewcode {

struct dual_result;

struct self_dual_report {
    size_t half_length = 0;  // k = deg g = n/2
    // sums[l-1] = sum_{i=0..l} sigma^(k-l)(g_i) g_(i+k-l)  for l = 1..k;
    // the code is self-dual iff all of them vanish
    std::vector<elem> sums;
    bool sums_all_zero = false;
    // sigma^k(h_0^-1) h* == g, evaluated when the dual cofactor is available
    std::optional<bool> generator_match;

    bool is_self_dual() const { return sums_all_zero; }
};

class principal_code {
public:
    // f monic of degree n >= 1; g a right divisor of f with unit leading
    // coefficient (normalized monic internally).
    principal_code(skew_poly f, skew_poly g);

    const context_ptr& ctx() const { return f_.ctx(); }
    const skew_poly& modulus() const { return f_; }
    const skew_poly& generator() const { return g_; } // monic
    size_t length() const { return n_; }
    size_t generator_degree() const { return r_; }
    size_t rank() const { return n_ - r_; } // the code is free of this rank

    // h with f = g h, computed by left division when sigma is bijective
    const std::optional<skew_poly>& cofactor() const { return h_; }
    // a with f = X^n - a and a a unit
    const std::optional<elem>& constacyclic_constant() const { return consta_; }

    // (n-r) x n; row i is T_f^i(g_0,...,g_r,0,...), built by the coefficient
    // recursion (which never touches f's coefficients) and cross-checked
    // against the T_f iteration.
    ring_matrix generating_matrix() const;

    // n x n; row i is T_f^i(h_0,...,h_k,0,...).  Needs the cofactor h and
    // deg g >= 1.  Verifies G H = 0.
    ring_matrix control_matrix() const;

    // (deg g) x n: transpose of the last deg g columns of the control matrix.
    // Needs sigma bijective.  Verifies the echelon shape and G H_*^T = 0.
    ring_matrix parity_check_matrix() const;

    // Dual of a constacyclic code (delta = 0, sigma bijective, f = X^n - a):
    // generated by h* for the left cofactor h with X^n - b = g h, where b is
    // the constant transferred from the right-hand factorization.  h* right-
    // divides X^n - c; orthogonality of the result against the generating
    // matrix is re-verified on every call.
    dual_result dual_code() const;

    // (deg g) x n matrix with row j carrying sigma^j(h*_m) in column j + m;
    // its rows generate the dual.  Same preconditions as dual_code.
    ring_matrix dual_generating_matrix() const;

    // n = 2 deg g, delta = 0, sigma bijective, g_0 a unit.
    self_dual_report self_dual_criterion() const;

    std::vector<elem> encode(std::span<const elem> message) const; // message G
    std::vector<elem> syndrome(std::span<const elem> word) const;  // word H

private:
    // left cofactor h with X^n - b = g h, and the constant c of the dual
    // modulus X^n - c right-divided by h*
    std::pair<skew_poly, elem> dual_cofactor() const;

    skew_poly f_, g_;
    size_t n_ = 0, r_ = 0;
    std::optional<skew_poly> h_;
    std::optional<elem> consta_;
};

struct dual_result {
    skew_poly generator; // h* as computed, not normalized
    elem constant;       // the dual is constacyclic for X^n - constant
    principal_code code; // built from the normalized generator
};

} // namespace skewcode
