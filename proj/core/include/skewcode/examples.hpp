// Built-in worked examples: small instances over D(Z_3), D(Z_6), GF(3)xGF(3)
// and friends with known-correct matrices, factorizations and duals.  The CLI
// replays them as a smoke suite; the tests reuse the builders.
#pragma once

#include "skewcode/code.hpp"
#include "skewcode/oracle.hpp"
#include "skewcode/skew_poly.hpp"

#include <string>
#include <vector>

namespace skewcode::gallery {

/* shared contexts */

// D(R) with sigma = project (a,b)->(a,0) and delta = nilpart (a,b)->(0,b)
context_ptr dual_project_nilpart(ring_ptr inner);
// D(R) with sigma = project and delta = 0
context_ptr dual_project_zero(ring_ptr inner);
// GF(3) x GF(3) with sigma = swap and delta = 0
context_ptr pair_gf3_swap();
// D(Z_6) with sigma = conjugate (a,b)->(a,-b) and delta = 0
context_ptr dual_z6_conjugate();
// D(Z_3) with sigma = identity and delta = nilpart
context_ptr dual_z3_nilpart();

/* codes of the worked examples */

// (X - a)-generated code with f = X^3 (X - a) over dual_project_nilpart(R)
principal_code example1_code(const context_ptr& ctx);
// (X - a)-generated code of X^4 - a^4 over GF(3) x GF(3), a = (2,2)
principal_code example4_code();
// (X^2 + a)-generated code of X^4 - a^2 over D(Z_6), a = (1,1)
principal_code example5b_code();
// self-dual (X^2 + a^-2 X + a^-3)-generated code of X^4 + 1 over GF(3) x GF(3)
principal_code example6_code();
// (X + 2b)-generated code of X^3 + 2X over D(Z_3), b = (1,1)
principal_code example7_code();

/* gallery runner */

struct example_result {
    std::string name;
    bool passed = false;
    std::string detail; // failure description, or a short summary of what ran
};

// Runs the golden checks for all eight bundled examples.
std::vector<example_result> run_all();

} // namespace skewcode::gallery
