#include "skewcode/oracle.hpp"

#include <algorithm>
#include <random>

namespace skewcode {

namespace {

std::string pack_word(std::span<const elem> w) {
    std::string key;
    key.reserve(w.size() * 4);
    for (const elem& e : w) {
        uint32_t v = e.idx;
        key.push_back(char(v & 0xff));
        key.push_back(char((v >> 8) & 0xff));
        key.push_back(char((v >> 16) & 0xff));
        key.push_back(char((v >> 24) & 0xff));
    }
    return key;
}

uint64_t power_size(uint64_t base, size_t k, uint64_t clamp) {
    uint64_t n = 1;
    for (size_t i = 0; i < k; ++i) {
        if (base != 0 && n > clamp / base) return clamp + 1;
        n *= base;
    }
    return n;
}

} // namespace

/* ---------------- code_set ---------------- */

code_set code_set::create(ring_ptr r, size_t length, std::vector<std::vector<elem>> words,
                          const code_set_options& opts) {
    code_set s;
    s.ring_ = std::move(r);
    s.length_ = length;
    for (const auto& w : words) {
        if (w.size() != length)
            throw validation_error("word of length " + std::to_string(w.size()) +
                                   " in a set of length " + std::to_string(length));
        for (const elem& e : w)
            if (!s.ring_->same_as(*e.r))
                throw validation_error("word entry from a different ring");
    }
    canonical_sort(*s.ring_, words);
    s.words_ = std::move(words);
    s.keys_.reserve(s.words_.size() * 2);
    for (const auto& w : s.words_) s.keys_.insert(pack_word(w));
    s.verify_closure(opts);
    return s;
}

void code_set::verify_closure(const code_set_options& opts) {
    const size_t m = words_.size();
    if (m == 0) throw validation_error("a code set must contain the zero word");
    {
        std::vector<elem> zero(length_, ring_->zero());
        if (!contains(zero)) throw validation_error("code set does not contain the zero word");
    }
    const ring& r = *ring_;
    auto add_pair_ok = [&](size_t i, size_t j) {
        std::vector<elem> sum(length_);
        for (size_t t = 0; t < length_; ++t)
            sum[t] = elem{ring_.get(), r.add_idx(words_[i][t].idx, words_[j][t].idx)};
        return contains(sum);
    };
    auto scalar_ok = [&](size_t i, uint32_t c) {
        std::vector<elem> prod(length_);
        for (size_t t = 0; t < length_; ++t)
            prod[t] = elem{ring_.get(), r.mul_idx(c, words_[i][t].idx)};
        return contains(prod);
    };

    if (uint64_t(m) * m <= opts.exhaustive_pair_bound) {
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i; j < m; ++j)
                if (!add_pair_ok(i, j))
                    throw validation_error("code set is not closed under addition (words " +
                                           vector_to_text(r, words_[i]) + " and " +
                                           vector_to_text(r, words_[j]) + ")");
    } else {
        closure_sampled_ = true;
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<size_t> dist(0, m - 1);
        for (uint64_t s = 0; s < opts.sample_pairs; ++s) {
            size_t i = dist(rng), j = dist(rng);
            if (!add_pair_ok(i, j))
                throw validation_error("code set is not closed under addition (words " +
                                       vector_to_text(r, words_[i]) + " and " +
                                       vector_to_text(r, words_[j]) + ")");
        }
    }

    if (uint64_t(m) * r.size() <= opts.exhaustive_pair_bound) {
        for (size_t i = 0; i < m; ++i)
            for (uint32_t c = 0; c < r.size(); ++c)
                if (!scalar_ok(i, c))
                    throw validation_error("code set is not closed under scalar multiplication (" +
                                           r.text(r.element(c)) + " * " +
                                           vector_to_text(r, words_[i]) + ")");
    } else {
        closure_sampled_ = true;
        std::mt19937_64 rng(opts.seed + 1);
        std::uniform_int_distribution<size_t> wdist(0, m - 1);
        std::uniform_int_distribution<uint32_t> cdist(0, uint32_t(r.size() - 1));
        for (uint64_t s = 0; s < opts.sample_pairs; ++s) {
            size_t i = wdist(rng);
            uint32_t c = cdist(rng);
            if (!scalar_ok(i, c))
                throw validation_error("code set is not closed under scalar multiplication (" +
                                       r.text(r.element(c)) + " * " +
                                       vector_to_text(r, words_[i]) + ")");
        }
    }
}

bool code_set::contains(std::span<const elem> w) const {
    if (w.size() != length_) return false;
    return keys_.count(pack_word(w)) != 0;
}

bool code_set::operator==(const code_set& o) const {
    if (!ring_->same_as(*o.ring_) || length_ != o.length_ || words_.size() != o.words_.size())
        return false;
    for (size_t i = 0; i < words_.size(); ++i)
        for (size_t t = 0; t < length_; ++t)
            if (words_[i][t].idx != o.words_[i][t].idx) return false;
    return true;
}

/* ---------------- enumeration oracles ---------------- */

code_set enumerate_code(const principal_code& c, uint64_t bound) {
    const ring_ptr& r = c.ctx()->r;
    const size_t k = c.rank();
    uint64_t space = power_size(r->size(), k, bound);
    if (space > bound)
        throw bound_error("code enumeration needs |A|^" + std::to_string(k) + " > " +
                          std::to_string(bound) + " messages");
    ring_matrix g = c.generating_matrix(); // built (and self-checked) once
    std::vector<std::vector<elem>> words;
    words.reserve(space);
    std::vector<elem> msg(k, r->zero());
    std::vector<uint32_t> x(k, 0);
    const uint32_t n = uint32_t(r->size());
    for (uint64_t count = 0; count < space; ++count) {
        for (size_t i = 0; i < k; ++i) msg[i] = elem{r.get(), x[i]};
        words.push_back(vec_mat_mul(msg, g));
        for (size_t pos = k; pos-- > 0;) {
            if (++x[pos] < n) break;
            x[pos] = 0;
        }
    }
    return code_set::create(r, c.length(), std::move(words));
}

namespace {

code_set brute_dual_rows(const code_set& s, const std::vector<std::vector<elem>>& rows,
                         uint64_t bound, uint64_t work_limit) {
    const ring_ptr& rp = s.get_ring();
    const ring& r = *rp;
    const size_t n = s.length();
    uint64_t space = power_size(r.size(), n, bound);
    if (space > bound)
        throw bound_error("dual enumeration needs |A|^" + std::to_string(n) + " > " +
                          std::to_string(bound) + " vectors");
    if (space * std::max<uint64_t>(rows.size(), 1) > work_limit)
        throw bound_error("dual enumeration work exceeds the limit; pass a generating matrix");
    std::vector<std::vector<elem>> out;
    std::vector<uint32_t> y(n, 0);
    const uint32_t m = uint32_t(r.size());
    for (uint64_t count = 0; count < space; ++count) {
        bool ortho = true;
        for (const auto& row : rows) {
            uint32_t acc = 0;
            for (size_t t = 0; t < n; ++t) acc = r.add_idx(acc, r.mul_idx(row[t].idx, y[t]));
            if (acc != 0) { ortho = false; break; }
        }
        if (ortho) {
            std::vector<elem> v(n);
            for (size_t t = 0; t < n; ++t) v[t] = elem{rp.get(), y[t]};
            out.push_back(std::move(v));
        }
        for (size_t pos = n; pos-- > 0;) {
            if (++y[pos] < m) break;
            y[pos] = 0;
        }
    }
    return code_set::create(rp, n, std::move(out));
}

} // namespace

code_set brute_dual(const code_set& s, uint64_t bound) {
    return brute_dual_rows(s, s.words(), bound, uint64_t(1) << 28);
}

code_set brute_dual(const code_set& s, const ring_matrix& generators, uint64_t bound) {
    if (!s.get_ring()->same_as(*generators.get_ring()))
        throw validation_error("generator matrix over a different ring than the code set");
    if (generators.cols() != s.length())
        throw validation_error("generator matrix width does not match the code length");
    std::vector<std::vector<elem>> rows;
    rows.reserve(generators.rows());
    for (size_t i = 0; i < generators.rows(); ++i) {
        auto row = generators.row(i);
        if (!s.contains(row))
            throw validation_error("generator matrix row " + std::to_string(i) +
                                   " is not a word of the set");
        rows.push_back(std::move(row));
    }
    return brute_dual_rows(s, rows, bound, uint64_t(1) << 36);
}

closure_report closure_check(const code_set& s, const pseudo_linear_transform& t) {
    if (t.length() != s.length())
        throw validation_error("transform length does not match the code set length");
    if (!t.ctx()->r->same_as(*s.get_ring()))
        throw validation_error("transform over a different ring than the code set");
    for (const auto& w : s.words()) {
        std::vector<elem> image = t.apply(w);
        if (!s.contains(image)) return {false, w};
    }
    return {true, {}};
}

std::map<size_t, size_t> weight_distribution(const code_set& s) {
    std::map<size_t, size_t> hist;
    for (const auto& w : s.words()) {
        size_t weight = 0;
        for (const elem& e : w)
            if (e.idx != 0) ++weight;
        ++hist[weight];
    }
    return hist;
}

std::optional<size_t> min_distance(const code_set& s) {
    for (const auto& [w, count] : weight_distribution(s))
        if (w > 0 && count > 0) return w;
    return std::nullopt;
}

std::optional<skew_poly> principal_generator_search(const code_set& s, const skew_poly& f,
                                                   uint64_t bound) {
    const context_ptr& ctx = f.ctx();
    const ring_ptr& rp = ctx->r;
    if (!rp->same_as(*s.get_ring()))
        throw validation_error("modulus over a different ring than the code set");
    if (!f.is_monic() || f.degree() != s.length())
        throw validation_error("modulus must be monic of degree equal to the set length");
    const size_t n = s.length();
    const uint32_t m = uint32_t(rp->size());

    for (size_t d = 0; d <= n; ++d) {
        // a monic degree-d divisor generates a free module of rank n-d
        if (power_size(m, n - d, uint64_t(1) << 62) != s.size()) continue;
        uint64_t cands = power_size(m, d, bound);
        if (cands > bound)
            throw bound_error("generator search at degree " + std::to_string(d) + " needs |A|^" +
                              std::to_string(d) + " > " + std::to_string(bound) + " candidates");
        std::vector<uint32_t> low(d, 0);
        for (uint64_t count = 0; count < cands; ++count) {
            std::vector<elem> coeffs(d + 1, rp->zero());
            for (size_t i = 0; i < d; ++i) coeffs[i] = elem{rp.get(), low[i]};
            coeffs[d] = rp->one();
            skew_poly cand = skew_poly::from_coeffs(ctx, std::move(coeffs));
            if (right_divmod(f, cand).rem.is_zero()) {
                principal_code code(f, cand);
                if (enumerate_code(code, bound) == s) return cand;
            }
            for (size_t pos = d; pos-- > 0;) {
                if (++low[pos] < m) break;
                low[pos] = 0;
            }
        }
    }
    return std::nullopt;
}

} // namespace skewcode
