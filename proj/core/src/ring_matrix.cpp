#include "skewcode/ring_matrix.hpp"

#include <algorithm>

namespace skewcode {

ring_matrix::ring_matrix(ring_ptr r, size_t rows, size_t cols)
    : ring_(std::move(r)), rows_(rows), cols_(cols), data_(rows * cols, ring_->zero()) {}

ring_matrix ring_matrix::identity(ring_ptr r, size_t n) {
    ring_matrix m(std::move(r), n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, m.ring_->one());
    return m;
}

void ring_matrix::check_index(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw validation_error("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                               ") out of range for " + std::to_string(rows_) + "x" +
                               std::to_string(cols_));
}

elem ring_matrix::at(size_t i, size_t j) const {
    check_index(i, j);
    return data_[i * cols_ + j];
}

void ring_matrix::set(size_t i, size_t j, elem v) {
    check_index(i, j);
    if (!ring_->same_as(*v.r)) throw validation_error("matrix entry from a different ring");
    data_[i * cols_ + j] = elem{ring_.get(), v.idx};
}

std::vector<elem> ring_matrix::row(size_t i) const {
    if (i >= rows_) throw validation_error("row index out of range");
    return std::vector<elem>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void ring_matrix::set_row(size_t i, std::span<const elem> v) {
    if (i >= rows_) throw validation_error("row index out of range");
    if (v.size() != cols_) throw validation_error("row length does not match column count");
    for (size_t j = 0; j < cols_; ++j) set(i, j, v[j]);
}

ring_matrix ring_matrix::mul(const ring_matrix& o) const {
    if (!ring_->same_as(*o.ring_))
        throw validation_error("matrix product over different rings");
    if (cols_ != o.rows_)
        throw validation_error("matrix shape mismatch: " + std::to_string(rows_) + "x" +
                               std::to_string(cols_) + " times " + std::to_string(o.rows_) + "x" +
                               std::to_string(o.cols_));
    ring_matrix out(ring_, rows_, o.cols_);
    const ring& r = *ring_;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < o.cols_; ++j) {
            uint32_t acc = 0;
            for (size_t t = 0; t < cols_; ++t)
                acc = r.add_idx(acc, r.mul_idx(data_[i * cols_ + t].idx,
                                               o.data_[t * o.cols_ + j].idx));
            out.data_[i * o.cols_ + j] = elem{ring_.get(), acc};
        }
    return out;
}

ring_matrix ring_matrix::transpose() const {
    ring_matrix out(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            out.data_[j * rows_ + i] = data_[i * cols_ + j];
    return out;
}

bool ring_matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const elem& e) { return e.idx == 0; });
}

bool ring_matrix::operator==(const ring_matrix& o) const {
    if (!ring_->same_as(*o.ring_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i].idx != o.data_[i].idx) return false;
    return true;
}

std::string ring_matrix::to_text() const {
    std::string s;
    for (size_t i = 0; i < rows_; ++i) {
        if (i) s += '\n';
        for (size_t j = 0; j < cols_; ++j) {
            if (j) s += ' ';
            s += ring_->text(data_[i * cols_ + j]);
        }
    }
    return s;
}

/* ---------------- vector helpers ---------------- */

elem inner_product(std::span<const elem> x, std::span<const elem> y) {
    if (x.size() != y.size())
        throw validation_error("inner product of vectors with different lengths");
    if (x.empty()) throw validation_error("inner product of empty vectors");
    const ring* r = x[0].r;
    elem acc = r->zero();
    for (size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
    return acc;
}

std::vector<elem> vec_mat_mul(std::span<const elem> x, const ring_matrix& m) {
    if (x.size() != m.rows())
        throw validation_error("vector length does not match matrix row count");
    const ring& r = *m.get_ring();
    std::vector<elem> out(m.cols(), r.zero());
    for (size_t j = 0; j < m.cols(); ++j) {
        uint32_t acc = 0;
        for (size_t i = 0; i < x.size(); ++i)
            acc = r.add_idx(acc, r.mul_idx(x[i].idx, m.at(i, j).idx));
        out[j] = elem{m.get_ring().get(), acc};
    }
    return out;
}

bool vector_text_less(const ring& r, std::span<const elem> a, std::span<const elem> b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i].idx == b[i].idx) continue;
        return r.text(a[i]) < r.text(b[i]);
    }
    return a.size() < b.size();
}

void canonical_sort(const ring& r, std::vector<std::vector<elem>>& vecs) {
    std::sort(vecs.begin(), vecs.end(), [&](const auto& a, const auto& b) {
        return vector_text_less(r, a, b);
    });
    vecs.erase(std::unique(vecs.begin(), vecs.end(),
                           [](const auto& a, const auto& b) {
                               if (a.size() != b.size()) return false;
                               for (size_t i = 0; i < a.size(); ++i)
                                   if (a[i].idx != b[i].idx) return false;
                               return true;
                           }),
               vecs.end());
}

std::string vector_to_text(const ring& r, std::span<const elem> v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += r.text(v[i]);
    }
    return s;
}

/* ---------------- enumerations ---------------- */

namespace {

// space size |A|^k with overflow clamp
uint64_t power_size(uint64_t base, size_t k, uint64_t clamp) {
    uint64_t n = 1;
    for (size_t i = 0; i < k; ++i) {
        if (n > clamp / base) return clamp + 1;
        n *= base;
    }
    return n;
}

} // namespace

std::vector<std::vector<elem>> left_annihilator(const ring_matrix& m, uint64_t bound) {
    const ring& r = *m.get_ring();
    const size_t k = m.rows(), c = m.cols();
    uint64_t space = power_size(r.size(), k, bound);
    if (space > bound)
        throw bound_error("left annihilator enumeration needs |A|^" + std::to_string(k) +
                          " > " + std::to_string(bound) + " vectors");
    // columns flattened for the inner loop
    std::vector<uint32_t> colmaj(k * c);
    for (size_t j = 0; j < c; ++j)
        for (size_t i = 0; i < k; ++i) colmaj[j * k + i] = m.at(i, j).idx;

    std::vector<std::vector<elem>> out;
    std::vector<uint32_t> x(k, 0);
    const uint32_t n = uint32_t(r.size());
    for (uint64_t count = 0; count < space; ++count) {
        bool zero = true;
        for (size_t j = 0; j < c && zero; ++j) {
            uint32_t acc = 0;
            const uint32_t* col = &colmaj[j * k];
            for (size_t i = 0; i < k; ++i) acc = r.add_idx(acc, r.mul_idx(x[i], col[i]));
            zero = acc == 0;
        }
        if (zero) {
            std::vector<elem> v(k);
            for (size_t i = 0; i < k; ++i) v[i] = elem{m.get_ring().get(), x[i]};
            out.push_back(std::move(v));
        }
        for (size_t pos = k; pos-- > 0;) {
            if (++x[pos] < n) break;
            x[pos] = 0;
        }
    }
    canonical_sort(r, out);
    return out;
}

std::vector<std::vector<elem>> row_module(const ring_matrix& m, uint64_t bound) {
    const ring& r = *m.get_ring();
    const size_t k = m.rows(), c = m.cols();
    uint64_t space = power_size(r.size(), k, bound);
    if (space > bound)
        throw bound_error("row module enumeration needs |A|^" + std::to_string(k) + " > " +
                          std::to_string(bound) + " vectors");
    std::vector<std::vector<elem>> out;
    out.reserve(space);
    std::vector<uint32_t> x(k, 0);
    const uint32_t n = uint32_t(r.size());
    for (uint64_t count = 0; count < space; ++count) {
        std::vector<elem> v(c);
        for (size_t j = 0; j < c; ++j) {
            uint32_t acc = 0;
            for (size_t i = 0; i < k; ++i) acc = r.add_idx(acc, r.mul_idx(x[i], m.at(i, j).idx));
            v[j] = elem{m.get_ring().get(), acc};
        }
        out.push_back(std::move(v));
        for (size_t pos = k; pos-- > 0;) {
            if (++x[pos] < n) break;
            x[pos] = 0;
        }
    }
    canonical_sort(r, out);
    return out;
}

} // namespace skewcode
