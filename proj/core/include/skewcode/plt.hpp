// The pseudo-linear transform T_f attached to a monic modulus f of degree n:
//
//   T_f(x) = sigma(x) C_f + delta(x)     (componentwise sigma/delta, C_f the
//                                         companion matrix of f)
//
// apply() goes through the matrix formula; recursive_step() goes through the
// componentwise recursion, with optional shortcuts when the caller knows the
// last entry is zero.  The two routes are independent implementations and are
// cross-checked wherever matrices are built from iterates.
#pragma once

#include "skewcode/ring_matrix.hpp"
#include "skewcode/skew_poly.hpp"

#include <span>
#include <vector>

namespace skewcode {

class pseudo_linear_transform {
public:
    explicit pseudo_linear_transform(skew_poly f); // monic, degree >= 1

    const skew_poly& modulus() const { return f_; }
    const context_ptr& ctx() const { return f_.ctx(); }
    size_t length() const { return n_; }
    // superdiagonal ones, last row (-a_0, ..., -a_{n-1})
    const ring_matrix& companion() const { return companion_; }

    // sigma(x) C_f + delta(x), evaluated with generic matrix arithmetic
    std::vector<elem> apply(std::span<const elem> x) const;
    // k-fold apply
    std::vector<elem> iterate(std::vector<elem> x, uint64_t k) const;

    struct step_hints {
        // The caller asserts x[n-1] = 0, so the wraparound terms -a_j sigma(x[n-1])
        // all vanish; with delta = 0 the step degenerates to a twisted shift.
        // The assertion is checked.
        bool last_entry_zero = false;
    };

    // Componentwise recursion:
    //   y[0] = delta(x[0]) - a_0 sigma(x[n-1])
    //   y[j] = delta(x[j]) + sigma(x[j-1]) - a_j sigma(x[n-1])   (j >= 1)
    // Terms with a_j = 0 are skipped, which is what makes the sparse
    // (constacyclic) modulus cheap.
    std::vector<elem> recursive_step(std::span<const elem> x, step_hints hints) const;
    std::vector<elem> recursive_step(std::span<const elem> x) const;

private:
    skew_poly f_;
    size_t n_;
    ring_matrix companion_;
};

using plt = pseudo_linear_transform;

} // namespace skewcode
