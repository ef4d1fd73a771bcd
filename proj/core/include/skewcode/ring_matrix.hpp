// Dense matrices over a finite commutative ring, plus the enumeration
// helpers (row module, left annihilator) the code constructions are checked
// against.  Vector sets are kept sorted lexicographically by canonical
// element text so set comparisons and printed output are deterministic.
#pragma once

#include "skewcode/error.hpp"
#include "skewcode/ring.hpp"

#include <span>
#include <string>
#include <vector>

namespace skewcode {

class ring_matrix {
public:
    ring_matrix(ring_ptr r, size_t rows, size_t cols); // zero-filled
    static ring_matrix identity(ring_ptr r, size_t n);

    const ring_ptr& get_ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    elem at(size_t i, size_t j) const;
    void set(size_t i, size_t j, elem v);
    std::vector<elem> row(size_t i) const;
    void set_row(size_t i, std::span<const elem> v);

    ring_matrix mul(const ring_matrix& o) const;
    ring_matrix operator*(const ring_matrix& o) const { return mul(o); }
    ring_matrix transpose() const;
    bool is_zero() const;

    bool operator==(const ring_matrix& o) const;
    bool operator!=(const ring_matrix& o) const { return !(*this == o); }

    // one line per row, entries separated by single spaces
    std::string to_text() const;

private:
    void check_index(size_t i, size_t j) const;

    ring_ptr ring_;
    size_t rows_, cols_;
    std::vector<elem> data_; // row major
};

// sum_i x_i y_i; lengths must match
elem inner_product(std::span<const elem> x, std::span<const elem> y);

// row vector times matrix
std::vector<elem> vec_mat_mul(std::span<const elem> x, const ring_matrix& m);

// Canonical ordering of equal-length vectors: entrywise lexicographic
// comparison of canonical element texts.
bool vector_text_less(const ring& r, std::span<const elem> a, std::span<const elem> b);
void canonical_sort(const ring& r, std::vector<std::vector<elem>>& vecs); // sorts + dedups
std::string vector_to_text(const ring& r, std::span<const elem> v);       // space separated

// All x in A^rows with x M = 0, canonically sorted.  Throws bound_error when
// |A|^rows exceeds the bound.
std::vector<std::vector<elem>> left_annihilator(const ring_matrix& m, uint64_t bound);

// { x M : x in A^rows }, canonically sorted and deduplicated.  Same bound rule.
std::vector<std::vector<elem>> row_module(const ring_matrix& m, uint64_t bound);

} // namespace skewcode
