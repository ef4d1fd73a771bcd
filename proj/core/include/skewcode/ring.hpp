// Finite commutative rings with enumerable elements, plus ring endomorphisms
// and sigma-derivations.  Four ring kinds are supported and freely nestable
// where indicated:
//
//   Z_m                integers mod m
//   GF(p^k)            Z_p[t] / (monic irreducible of degree k)
//   R x R              direct product of two copies of an inner ring
//   D(R)               "dual numbers" over R: pairs (a,b) with
//                      (a,b)(c,d) = (ac, ad+bc), i.e. R[t]/(t^2).
//                      Isomorphic to the upper triangular matrices (a b; 0 a).
//
// Elements are flyweights: an index into the ring's enumeration plus a ring
// pointer.  Arithmetic is table-driven for small rings and structural beyond
// that, so everything stays exact.  Maps (endomorphisms/derivations) are kept
// as full value tables regardless of how they were defined, which makes
// exhaustive verification and inversion straightforward.
#pragma once

#include "skewcode/error.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace skewcode {

class ring;
using ring_ptr = std::shared_ptr<const ring>;

// Value handle: cheap to copy, compares by ring signature + index.
struct elem {
    const ring* r = nullptr;
    uint32_t idx = 0;

    bool operator==(const elem& o) const;
    bool operator!=(const elem& o) const { return !(*this == o); }
};

elem operator+(elem a, elem b);
elem operator-(elem a, elem b);
elem operator*(elem a, elem b);
elem operator-(elem a);

class ring : public std::enable_shared_from_this<ring> {
public:
    enum class kind { zmod, gf, product, dual_numbers };

    /* factories */

    static ring_ptr zmod(uint64_t m);
    // defining_poly: coefficients of a monic irreducible over Z_p, low degree
    // first, length k+1.  Empty selects the smallest irreducible in the
    // enumeration order (X^2+X+1 for GF(4), X^2+1 for GF(9), ...).
    static ring_ptr gf(uint32_t p, uint32_t k, std::vector<uint32_t> defining_poly = {});
    static ring_ptr product(ring_ptr inner);      // inner x inner
    static ring_ptr dual_numbers(ring_ptr inner); // D(inner)

    /* identification */

    kind get_kind() const { return kind_; }
    size_t size() const { return size_; }
    // Structural identity string, e.g. "zmod:6", "dual[zmod:3]".  Two rings
    // are interchangeable iff their signatures match.
    const std::string& signature() const { return signature_; }
    bool same_as(const ring& o) const { return this == &o || signature_ == o.signature_; }

    /* element access */

    elem zero() const { return {this, 0}; }
    elem one() const { return {this, one_}; }
    elem element(size_t i) const;
    elem from_int(int64_t v) const; // v * 1, so e.g. from_int(2) is (2,2) in R x R
    elem from_parts(elem x, elem y) const;        // product / dual_numbers only
    std::pair<elem, elem> parts(elem e) const;    // inverse of from_parts
    const ring_ptr& inner() const;                // product / dual_numbers only

    // GF accessors
    uint32_t gf_prime() const;
    uint32_t gf_degree() const;
    const std::vector<uint32_t>& gf_defining_poly() const;
    uint64_t zmod_modulus() const;

    /* arithmetic (checked) */

    elem add(elem a, elem b) const;
    elem sub(elem a, elem b) const;
    elem mul(elem a, elem b) const;
    elem neg(elem a) const;
    bool is_unit(elem a) const;
    // Inverse found by exhaustive search (precomputed); throws validation_error
    // with the element's text when no inverse exists.
    elem inverse(elem a) const;
    std::optional<elem> try_inverse(elem a) const;

    /* raw index arithmetic: no ring checks, for enumeration-heavy loops */

    uint32_t add_idx(uint32_t a, uint32_t b) const;
    uint32_t mul_idx(uint32_t a, uint32_t b) const;
    uint32_t neg_idx(uint32_t a) const;

    /* canonical text */

    // Z_m and GF(p): decimal.  GF(p^k), k >= 2: "(c0,...,ck-1)" low degree
    // first.  Pairs: "(x,y)" with inner canonical texts.  No spaces.
    const std::string& text(elem e) const;
    // Strict on shape, lenient on integer range (values are reduced).
    elem parse(std::string_view s) const;

private:
    ring() = default;
    void finish(); // derive size-dependent tables, texts, signature

    uint32_t compute_add(uint32_t a, uint32_t b) const;
    uint32_t compute_mul(uint32_t a, uint32_t b) const;
    uint32_t compute_neg(uint32_t a) const;

    kind kind_ = kind::zmod;
    size_t size_ = 0;
    uint32_t one_ = 1;
    std::string signature_;

    uint64_t modulus_ = 0;                // zmod
    uint32_t prime_ = 0, degree_ = 0;     // gf
    std::vector<uint32_t> defining_poly_; // gf, monic, low first
    ring_ptr inner_;                      // product / dual_numbers

    // filled when size_ <= table_limit
    std::vector<uint32_t> add_tab_, mul_tab_;
    std::vector<uint32_t> neg_tab_, inv_tab_; // inv: sentinel no_inverse for non-units
    std::vector<std::string> text_tab_;
    std::unordered_map<std::string, uint32_t> parse_tab_;

    static constexpr uint32_t no_inverse = UINT32_MAX;
    static constexpr size_t table_limit = 512;
};

/* ring maps */

class endo; // forward

// Additive + multiplicative self-map fixing 1 (once verified).  Always carries
// a materialized value table so composition, powers and inversion are exact
// table operations whatever the defining kind was.
class endo {
public:
    enum class kind { identity, frobenius, swap, project, conjugate, table };

    static endo identity(ring_ptr r);
    static endo frobenius(ring_ptr gf_ring, uint32_t power); // x -> x^(p^power)
    static endo swap(ring_ptr product_ring);                 // (x,y) -> (y,x)
    static endo project(ring_ptr dual_ring);                 // (a,b) -> (a,0); endo, not auto
    static endo conjugate(ring_ptr dual_ring);               // (a,b) -> (a,-b)
    static endo from_table(ring_ptr r, std::vector<uint32_t> table);
    static endo from_pairs(ring_ptr r, const std::vector<std::pair<elem, elem>>& pairs);

    const ring_ptr& get_ring() const { return ring_; }
    kind get_kind() const { return kind_; }
    const std::vector<uint32_t>& table() const { return table_; }
    std::string describe() const;

    elem operator()(elem e) const;
    uint32_t map_idx(uint32_t i) const { return table_[i]; }

    // sigma^n; n < 0 requires an automorphism.  Exponents are reduced mod the
    // order when one exists.
    elem pow(elem e, int64_t n) const;

    bool is_automorphism() const;
    std::optional<uint64_t> order() const; // automorphisms only
    endo inverse() const;                  // throws precondition_error if not injective
    endo compose(const endo& inner_first) const;
    endo power(uint64_t n) const; // table exponentiation by squaring

    bool operator==(const endo& o) const;

private:
    endo(ring_ptr r, kind k, std::vector<uint32_t> tab);
    void prepare(); // bijectivity, inverse table, order

    ring_ptr ring_;
    kind kind_ = kind::identity;
    std::vector<uint32_t> table_;
    std::optional<std::vector<uint32_t>> inv_table_;
    std::optional<uint64_t> order_;
};

// sigma-derivation: additive, delta(ab) = sigma(a) delta(b) + delta(a) b.
// Bound to the endo it twists against.
class derivation {
public:
    enum class kind { zero, nilpart, table };

    static derivation zero(endo sigma);
    static derivation nilpart(endo sigma); // (a,b) -> (0,b) on D(R)
    static derivation from_table(endo sigma, std::vector<uint32_t> table);
    static derivation from_pairs(endo sigma, const std::vector<std::pair<elem, elem>>& pairs);

    const ring_ptr& get_ring() const { return sigma_.get_ring(); }
    const endo& sigma() const { return sigma_; }
    kind get_kind() const { return kind_; }
    const std::vector<uint32_t>& table() const { return table_; }
    std::string describe() const;

    elem operator()(elem e) const;
    uint32_t map_idx(uint32_t i) const { return table_[i]; }
    bool is_zero() const;

    bool operator==(const derivation& o) const;

private:
    derivation(endo sigma, kind k, std::vector<uint32_t> tab);

    endo sigma_;
    kind kind_ = kind::zero;
    std::vector<uint32_t> table_;
};

/* verification */

struct verify_options {
    uint64_t exhaustive_pair_bound = uint64_t(1) << 20; // exhaustive when |A|^2 <= this
    uint64_t sample_pairs = uint64_t(1) << 16;          // otherwise this many sampled pairs
    uint64_t seed = 0;
    bool allow_sampling = true; // false: throw bound_error instead of sampling
};

struct verify_report {
    bool valid = false;
    bool sampled = false;     // true when the pair space exceeded the bound
    uint64_t checked = 0;     // pairs actually tested
    std::string detail;       // first counterexample, or empty
};

// sigma(a+b) = sigma(a)+sigma(b), sigma(ab) = sigma(a)sigma(b), sigma(1) = 1.
verify_report verify_endomorphism(const endo& sigma, const verify_options& opts = {});
// delta(a+b) = delta(a)+delta(b), delta(ab) = sigma(a)delta(b)+delta(a)b.
verify_report verify_derivation(const derivation& delta, const verify_options& opts = {});

// Commutativity/associativity spot-proof used by the test suite: exhaustive on
// pairs, and on triples while |A|^3 <= triple_bound.
struct axiom_report {
    bool ok = false;
    bool triples_exhaustive = false;
    uint64_t pairs_checked = 0, triples_checked = 0;
    std::string detail;
};
axiom_report check_ring_axioms(const ring_ptr& r, uint64_t triple_bound = uint64_t(1) << 24);

} // namespace skewcode
