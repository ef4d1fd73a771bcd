#include "skewcode/plt.hpp"

namespace skewcode {

static ring_matrix build_companion(const skew_poly& f) {
    const size_t n = *f.degree();
    ring_matrix c(f.ctx()->r, n, n);
    for (size_t i = 0; i + 1 < n; ++i) c.set(i, i + 1, f.ctx()->r->one());
    for (size_t j = 0; j < n; ++j) c.set(n - 1, j, -f.coeff(j));
    return c;
}

pseudo_linear_transform::pseudo_linear_transform(skew_poly f)
    : f_(std::move(f)),
      n_(f_.is_monic() ? *f_.degree() : 0),
      companion_(f_.ctx()->r, 0, 0) {
    if (!f_.is_monic())
        throw validation_error("pseudo-linear transform needs a monic modulus, got " + f_.to_text());
    if (n_ < 1)
        throw validation_error("pseudo-linear transform needs degree >= 1");
    companion_ = build_companion(f_);
}

std::vector<elem> pseudo_linear_transform::apply(std::span<const elem> x) const {
    if (x.size() != n_)
        throw validation_error("vector length " + std::to_string(x.size()) +
                               " does not match transform length " + std::to_string(n_));
    const skew_context& ctx = *f_.ctx();
    std::vector<elem> sx(n_);
    for (size_t i = 0; i < n_; ++i) sx[i] = ctx.sig(x[i]);
    std::vector<elem> y = vec_mat_mul(sx, companion_);
    for (size_t i = 0; i < n_; ++i) y[i] = y[i] + ctx.del(x[i]);
    return y;
}

std::vector<elem> pseudo_linear_transform::iterate(std::vector<elem> x, uint64_t k) const {
    for (uint64_t i = 0; i < k; ++i) x = apply(x);
    return x;
}

std::vector<elem> pseudo_linear_transform::recursive_step(std::span<const elem> x,
                                                          step_hints hints) const {
    if (x.size() != n_)
        throw validation_error("vector length " + std::to_string(x.size()) +
                               " does not match transform length " + std::to_string(n_));
    const skew_context& ctx = *f_.ctx();
    const elem zero = ctx.r->zero();
    std::vector<elem> y(n_, zero);

    if (hints.last_entry_zero) {
        if (!(x[n_ - 1] == zero))
            throw internal_check_error("step hint claims a zero last entry, but it is " +
                                       ctx.r->text(x[n_ - 1]));
        if (ctx.delta_zero) {
            // twisted shift: y = (0, sigma(x_0), ..., sigma(x_{n-2}))
            for (size_t j = 1; j < n_; ++j) y[j] = ctx.sig(x[j - 1]);
        } else {
            y[0] = ctx.del(x[0]);
            for (size_t j = 1; j < n_; ++j) y[j] = ctx.del(x[j]) + ctx.sig(x[j - 1]);
        }
        return y;
    }

    const elem w = ctx.sig(x[n_ - 1]);
    y[0] = ctx.del(x[0]);
    if (!(f_.coeff(0) == zero)) y[0] = y[0] - f_.coeff(0) * w;
    for (size_t j = 1; j < n_; ++j) {
        y[j] = ctx.del(x[j]) + ctx.sig(x[j - 1]);
        if (!(f_.coeff(j) == zero)) y[j] = y[j] - f_.coeff(j) * w;
    }
    return y;
}

std::vector<elem> pseudo_linear_transform::recursive_step(std::span<const elem> x) const {
    return recursive_step(x, step_hints{});
}

} // namespace skewcode
