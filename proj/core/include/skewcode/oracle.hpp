// Brute-force ground truth: full enumeration of codes, duals by exhaustive
// orthogonality, closure under the pseudo-linear transform, weight counts,
// and exhaustive generator search.  Everything here is deliberately dumb and
// independent of the closed-form constructions it is used to check.
#pragma once

#include "skewcode/code.hpp"
#include "skewcode/plt.hpp"
#include "skewcode/ring_matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace skewcode {

struct code_set_options {
    // additive closure checked pair-exhaustively up to here, sampled beyond
    uint64_t exhaustive_pair_bound = uint64_t(1) << 22;
    uint64_t sample_pairs = uint64_t(1) << 16;
    uint64_t seed = 0;
};

// A set of words from A^n, canonically sorted, verified on construction to
// contain 0 and to be closed under addition and scalar multiplication.
class code_set {
public:
    static code_set create(ring_ptr r, size_t length, std::vector<std::vector<elem>> words,
                           const code_set_options& opts = {});

    const ring_ptr& get_ring() const { return ring_; }
    size_t length() const { return length_; }
    const std::vector<std::vector<elem>>& words() const { return words_; }
    size_t size() const { return words_.size(); }
    // true when the closure checks were sampled rather than exhaustive
    bool closure_sampled() const { return closure_sampled_; }

    bool contains(std::span<const elem> w) const;

    bool operator==(const code_set& o) const;
    bool operator!=(const code_set& o) const { return !(*this == o); }

private:
    code_set() = default;
    void verify_closure(const code_set_options& opts);

    ring_ptr ring_;
    size_t length_ = 0;
    std::vector<std::vector<elem>> words_;
    std::unordered_set<std::string> keys_; // packed index strings
    bool closure_sampled_ = false;
};

// All message G words, |A|^rank of them; bound limits the message space.
code_set enumerate_code(const principal_code& c, uint64_t bound = uint64_t(1) << 24);

// All y in A^n orthogonal to every word of s (or, sufficient by bilinearity,
// to every row of a matrix whose rows generate s).
code_set brute_dual(const code_set& s, uint64_t bound = uint64_t(1) << 24);
code_set brute_dual(const code_set& s, const ring_matrix& generators,
                    uint64_t bound = uint64_t(1) << 24);

struct closure_report {
    bool closed = false;
    std::vector<elem> witness; // a word whose image escapes the set, if any
};
closure_report closure_check(const code_set& s, const pseudo_linear_transform& t);

// weight -> number of words of that Hamming weight
std::map<size_t, size_t> weight_distribution(const code_set& s);
// least nonzero weight; nullopt for {0}
std::optional<size_t> min_distance(const code_set& s);

// Exhaustive search for a monic right divisor g of f with
// enumerate_code(principal_code(f, g)) == s.  Degrees whose rank would give
// the wrong cardinality are skipped; candidate spaces are bound-limited.
std::optional<skew_poly> principal_generator_search(const code_set& s, const skew_poly& f,
                                                    uint64_t bound = uint64_t(1) << 24);

} // namespace skewcode
