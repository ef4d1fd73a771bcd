#include "skewcode/skew_poly.hpp"

#include <algorithm>
#include <sstream>

namespace skewcode {

/* ---------------- context ---------------- */

context_ptr make_context(ring_ptr r, endo sigma, derivation delta, const verify_options& opts) {
    if (!r) throw validation_error("context needs a ring");
    if (!r->same_as(*sigma.get_ring()))
        throw validation_error("sigma is defined on " + sigma.get_ring()->signature() +
                               ", not on " + r->signature());
    if (!(delta.sigma() == sigma))
        throw validation_error("delta is bound to a different sigma than the context's");
    auto sr = verify_endomorphism(sigma, opts);
    if (!sr.valid)
        throw validation_error("sigma fails endomorphism verification: " + sr.detail);
    auto dr = verify_derivation(delta, opts);
    if (!dr.valid)
        throw validation_error("delta fails derivation verification: " + dr.detail);
    auto ctx = std::make_shared<skew_context>(skew_context{
        std::move(r), std::move(sigma), std::move(delta), false, false});
    auto* w = const_cast<skew_context*>(ctx.get());
    w->delta_zero = w->delta.is_zero();
    w->sigma_auto = w->sigma.is_automorphism();
    return ctx;
}

context_ptr make_context(ring_ptr r, endo sigma, const verify_options& opts) {
    derivation d = derivation::zero(sigma);
    return make_context(std::move(r), std::move(sigma), std::move(d), opts);
}

bool same_context(const skew_context& a, const skew_context& b) {
    if (&a == &b) return true;
    return a.r->same_as(*b.r) && a.sigma == b.sigma && a.delta == b.delta;
}

static void check_ctx(const skew_poly& a, const skew_poly& b, const char* op) {
    if (!same_context(*a.ctx(), *b.ctx()))
        throw validation_error(std::string(op) + ": operands from different skew contexts");
}

/* ---------------- skew_poly basics ---------------- */

void skew_poly::strip() {
    while (!c_.empty() && c_.back() == ctx_->r->zero()) c_.pop_back();
}

skew_poly skew_poly::zero(context_ptr ctx) { return skew_poly(std::move(ctx), {}); }

skew_poly skew_poly::one(context_ptr ctx) {
    elem e = ctx->r->one();
    return skew_poly(std::move(ctx), {e});
}

skew_poly skew_poly::constant(context_ptr ctx, elem c) {
    skew_poly p(std::move(ctx), {c});
    if (!p.ctx_->r->same_as(*c.r)) throw validation_error("constant: element not in the context ring");
    p.strip();
    return p;
}

skew_poly skew_poly::monomial(context_ptr ctx, elem c, size_t deg) {
    if (!ctx->r->same_as(*c.r)) throw validation_error("monomial: element not in the context ring");
    std::vector<elem> v(deg + 1, ctx->r->zero());
    v[deg] = c;
    skew_poly p(std::move(ctx), std::move(v));
    p.strip();
    return p;
}

skew_poly skew_poly::from_coeffs(context_ptr ctx, std::vector<elem> coeffs) {
    for (const elem& c : coeffs)
        if (!ctx->r->same_as(*c.r))
            throw validation_error("from_coeffs: coefficient not in the context ring");
    skew_poly p(std::move(ctx), std::move(coeffs));
    p.strip();
    return p;
}

skew_poly skew_poly::xn_minus(context_ptr ctx, size_t n, elem a) {
    if (!ctx->r->same_as(*a.r)) throw validation_error("xn_minus: element not in the context ring");
    std::vector<elem> v(n + 1, ctx->r->zero());
    v[0] = -a;
    v[n] = ctx->r->one();
    skew_poly p(std::move(ctx), std::move(v));
    p.strip(); // n = 0, a = 1 collapses to zero
    return p;
}

std::optional<size_t> skew_poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

elem skew_poly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : ctx_->r->zero();
}

elem skew_poly::leading() const {
    if (c_.empty()) throw validation_error("leading coefficient of the zero polynomial");
    return c_.back();
}

bool skew_poly::is_monic() const {
    return !c_.empty() && c_.back() == ctx_->r->one();
}

/* ---------------- arithmetic ---------------- */

skew_poly skew_poly::operator+(const skew_poly& o) const {
    check_ctx(*this, o, "add");
    std::vector<elem> v(std::max(c_.size(), o.c_.size()), ctx_->r->zero());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    skew_poly p(ctx_, std::move(v));
    p.strip();
    return p;
}

skew_poly skew_poly::operator-() const {
    std::vector<elem> v(c_);
    for (elem& e : v) e = -e;
    return skew_poly(ctx_, std::move(v));
}

skew_poly skew_poly::operator-(const skew_poly& o) const { return *this + (-o); }

// X * p, one application of the twist rule
static std::vector<elem> x_shift(const skew_context& ctx, const std::vector<elem>& c) {
    std::vector<elem> v(c.size() + 1, ctx.r->zero());
    for (size_t j = 0; j < c.size(); ++j) {
        v[j + 1] = v[j + 1] + ctx.sig(c[j]);
        v[j] = v[j] + ctx.del(c[j]);
    }
    return v;
}

skew_poly skew_poly::operator*(const skew_poly& o) const {
    check_ctx(*this, o, "mul");
    if (is_zero() || o.is_zero()) return zero(ctx_);
    std::vector<elem> acc(c_.size() + o.c_.size() - 1, ctx_->r->zero());
    std::vector<elem> shifted = o.c_; // X^i * o, built incrementally
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!(c_[i] == ctx_->r->zero()))
            for (size_t j = 0; j < shifted.size(); ++j)
                acc[j] = acc[j] + c_[i] * shifted[j];
        if (i + 1 < c_.size()) shifted = x_shift(*ctx_, shifted);
    }
    skew_poly p(ctx_, std::move(acc));
    p.strip();
    return p;
}

bool skew_poly::operator==(const skew_poly& o) const {
    return same_context(*ctx_, *o.ctx_) && c_ == o.c_;
}

skew_poly operator*(elem a, const skew_poly& p) {
    std::vector<elem> v = p.coeffs();
    for (elem& e : v) e = a * e;
    return skew_poly::from_coeffs(p.ctx(), std::move(v));
}

skew_poly skew_poly::sigma_map(int64_t n) const {
    std::vector<elem> v(c_);
    for (elem& e : v) e = ctx_->sig_pow(e, n);
    skew_poly p(ctx_, std::move(v));
    p.strip(); // non-injective sigma can kill the top coefficient
    return p;
}

skew_poly skew_poly::star() const {
    if (!ctx_->delta_zero)
        throw precondition_error("reciprocal transform needs delta = 0");
    if (!ctx_->sigma_auto)
        throw precondition_error("reciprocal transform needs sigma to be an automorphism");
    if (is_zero()) return zero(ctx_);
    size_t s = c_.size() - 1;
    std::vector<elem> v(s + 1, ctx_->r->zero());
    for (size_t i = 0; i <= s; ++i) v[i] = ctx_->sig_pow(c_[s - i], int64_t(i));
    skew_poly p(ctx_, std::move(v));
    p.strip();
    return p;
}

/* ---------------- text ---------------- */

std::string skew_poly::to_text() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += ctx_->r->text(c_[i]);
    }
    s += "]";
    return s;
}

skew_poly skew_poly::parse(context_ptr ctx, std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    s = s.substr(b, e - b);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw validation_error("malformed polynomial, expected '[c0, c1, ...]': '" + std::string(s) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    std::vector<elem> coeffs;
    int depth = 0;
    size_t start = 0;
    bool any = false;
    for (size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
            std::string_view part = body.substr(start, i - start);
            size_t pb = 0, pe = part.size();
            while (pb < pe && std::isspace(static_cast<unsigned char>(part[pb]))) ++pb;
            while (pe > pb && std::isspace(static_cast<unsigned char>(part[pe - 1]))) --pe;
            part = part.substr(pb, pe - pb);
            if (!part.empty()) {
                coeffs.push_back(ctx->r->parse(part));
                any = true;
            } else if (i != body.size() || any) {
                throw validation_error("malformed polynomial: empty coefficient");
            }
            start = i + 1;
        } else if (i < body.size()) {
            if (body[i] == '(') ++depth;
            else if (body[i] == ')') --depth;
        }
    }
    return from_coeffs(std::move(ctx), std::move(coeffs));
}

/* ---------------- division ---------------- */

divmod_result right_divmod(const skew_poly& f, const skew_poly& g) {
    check_ctx(f, g, "right_divmod");
    const auto& ctx = *f.ctx();
    if (g.is_zero()) throw validation_error("division by the zero polynomial");
    elem u = g.leading();
    auto uinv = ctx.r->try_inverse(u);
    if (!uinv)
        throw validation_error("right division needs a unit leading coefficient, got " +
                               ctx.r->text(u));
    size_t d = *g.degree();
    skew_poly q = skew_poly::zero(f.ctx());
    skew_poly r = f;
    while (!r.is_zero() && *r.degree() >= d) {
        size_t t = *r.degree() - d;
        // m X^t g has leading coefficient m sigma^t(u)
        elem m = r.leading() * ctx.r->inverse(ctx.sig_pow(u, int64_t(t)));
        skew_poly mono = skew_poly::monomial(f.ctx(), m, t);
        q = q + mono;
        skew_poly next = r - mono * g;
        if (!next.is_zero() && *next.degree() >= *r.degree())
            throw internal_check_error("right division failed to reduce the degree");
        r = next;
    }
    return {q, r};
}

divmod_result left_divmod(const skew_poly& f, const skew_poly& g) {
    check_ctx(f, g, "left_divmod");
    const auto& ctx = *f.ctx();
    if (g.is_zero()) throw validation_error("division by the zero polynomial");
    if (!ctx.sigma_auto)
        throw precondition_error("left division needs sigma to be an automorphism");
    elem u = g.leading();
    auto uinv = ctx.r->try_inverse(u);
    if (!uinv)
        throw validation_error("left division needs a unit leading coefficient, got " +
                               ctx.r->text(u));
    size_t d = *g.degree();
    skew_poly q = skew_poly::zero(f.ctx());
    skew_poly r = f;
    while (!r.is_zero() && *r.degree() >= d) {
        size_t t = *r.degree() - d;
        // g (c X^t) has leading coefficient u sigma^d(c)
        elem c = ctx.sig_pow(*uinv * r.leading(), -int64_t(d));
        skew_poly mono = skew_poly::monomial(f.ctx(), c, t);
        q = q + mono;
        skew_poly next = r - g * mono;
        if (!next.is_zero() && *next.degree() >= *r.degree())
            throw internal_check_error("left division failed to reduce the degree");
        r = next;
    }
    return {q, r};
}

/* ---------------- laurent ---------------- */

static void check_laurent_ctx(const context_ptr& ctx) {
    if (!ctx->delta_zero)
        throw precondition_error("Laurent polynomials need delta = 0");
    if (!ctx->sigma_auto)
        throw precondition_error("Laurent polynomials need sigma to be an automorphism");
}

laurent_poly laurent_poly::zero(context_ptr ctx) {
    check_laurent_ctx(ctx);
    return laurent_poly(std::move(ctx), {});
}

laurent_poly laurent_poly::monomial(context_ptr ctx, elem c, int64_t deg) {
    check_laurent_ctx(ctx);
    if (!ctx->r->same_as(*c.r)) throw validation_error("monomial: element not in the context ring");
    std::map<int64_t, elem> m;
    if (!(c == ctx->r->zero())) m.emplace(deg, c);
    return laurent_poly(std::move(ctx), std::move(m));
}

laurent_poly laurent_poly::from(const skew_poly& p) {
    check_laurent_ctx(p.ctx());
    std::map<int64_t, elem> m;
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        if (!(p.coeffs()[i] == p.ctx()->r->zero())) m.emplace(int64_t(i), p.coeffs()[i]);
    return laurent_poly(p.ctx(), std::move(m));
}

elem laurent_poly::coeff(int64_t i) const {
    auto it = c_.find(i);
    return it == c_.end() ? ctx_->r->zero() : it->second;
}

laurent_poly laurent_poly::operator+(const laurent_poly& o) const {
    if (!same_context(*ctx_, *o.ctx_))
        throw validation_error("add: operands from different skew contexts");
    std::map<int64_t, elem> m = c_;
    for (const auto& [i, c] : o.c_) {
        auto it = m.find(i);
        if (it == m.end()) m.emplace(i, c);
        else {
            it->second = it->second + c;
            if (it->second == ctx_->r->zero()) m.erase(it);
        }
    }
    return laurent_poly(ctx_, std::move(m));
}

laurent_poly laurent_poly::operator*(const laurent_poly& o) const {
    if (!same_context(*ctx_, *o.ctx_))
        throw validation_error("mul: operands from different skew contexts");
    std::map<int64_t, elem> m;
    for (const auto& [i, a] : c_)
        for (const auto& [j, b] : o.c_) {
            elem term = a * ctx_->sig_pow(b, i);
            if (term == ctx_->r->zero()) continue;
            auto it = m.find(i + j);
            if (it == m.end()) m.emplace(i + j, term);
            else {
                it->second = it->second + term;
                if (it->second == ctx_->r->zero()) m.erase(it);
            }
        }
    return laurent_poly(ctx_, std::move(m));
}

bool laurent_poly::operator==(const laurent_poly& o) const {
    if (!same_context(*ctx_, *o.ctx_)) return false;
    if (c_.size() != o.c_.size()) return false;
    for (auto it = c_.begin(), jt = o.c_.begin(); it != c_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

laurent_poly laurent_poly::psi() const {
    std::map<int64_t, elem> m;
    for (const auto& [i, a] : c_) {
        elem moved = ctx_->sig_pow(a, -i); // X^-i a = sigma^-i(a) X^-i
        if (!(moved == ctx_->r->zero())) m.emplace(-i, moved);
    }
    return laurent_poly(ctx_, std::move(m));
}

std::string laurent_poly::to_text() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, a] : c_) {
        if (!first) os << " + ";
        first = false;
        os << ctx_->r->text(a) << "*X^" << i;
    }
    return os.str();
}

/* ---------------- divisor transfer ---------------- */

static void check_transfer_ctx(const context_ptr& ctx, const char* what) {
    if (!ctx->delta_zero)
        throw precondition_error(std::string(what) + " needs delta = 0");
    if (!ctx->sigma_auto)
        throw precondition_error(std::string(what) + " needs sigma to be an automorphism");
}

elem transfer_constant(const skew_poly& g, elem constant, size_t n, transfer_direction dir) {
    const context_ptr& ctx = g.ctx();
    check_transfer_ctx(ctx, "divisor transfer");
    if (!ctx->r->is_unit(constant))
        throw precondition_error("divisor transfer needs a unit constant, got " +
                                 ctx->r->text(constant));
    if (g.is_zero() || !ctx->r->is_unit(g.leading()))
        throw precondition_error("divisor transfer needs a factor with unit leading coefficient");
    if (*g.degree() > n)
        throw validation_error("factor degree exceeds n");
    const int64_t k = int64_t(n) - int64_t(*g.degree());
    elem u = g.leading();
    elem uinv = ctx->r->inverse(u);

    if (dir == transfer_direction::left_to_right) {
        // X^n - b = g h  ==>  X^n - a = sigma^n(h) g
        elem b = constant;
        skew_poly binom = skew_poly::xn_minus(ctx, n, b);
        auto [h, rem] = left_divmod(binom, g);
        if (!rem.is_zero())
            throw precondition_error("g does not left-divide X^n - " + ctx->r->text(b));
        elem a = ctx->sig_pow(b, k) * ctx->sig_pow(u, k - int64_t(n)) * ctx->sig_pow(uinv, k);
        if (h.sigma_map(int64_t(n)) * g != skew_poly::xn_minus(ctx, n, a))
            throw internal_check_error("transferred factorization does not multiply back");
        return a;
    }
    // X^n - a = q g  ==>  X^n - b = g sigma^-n(q)
    elem a = constant;
    skew_poly binom = skew_poly::xn_minus(ctx, n, a);
    auto [q, rem] = right_divmod(binom, g);
    if (!rem.is_zero())
        throw precondition_error("g does not right-divide X^n - " + ctx->r->text(a));
    elem b = ctx->sig_pow(a, -k) * ctx->sig_pow(uinv, -int64_t(n)) * u;
    if (g * q.sigma_map(-int64_t(n)) != skew_poly::xn_minus(ctx, n, b))
        throw internal_check_error("transferred factorization does not multiply back");
    return b;
}

star_divisor_constants hstar_divisor_constants(const skew_poly& h, elem b, size_t n) {
    const context_ptr& ctx = h.ctx();
    check_transfer_ctx(ctx, "reciprocal divisor analysis");
    if (!ctx->r->is_unit(b))
        throw precondition_error("needs a unit constant, got " + ctx->r->text(b));
    if (h.is_zero() || !ctx->r->is_unit(h.coeff(0)))
        throw precondition_error("needs a unit constant coefficient on h, got " +
                                 ctx->r->text(h.coeff(0)));
    {
        auto [q, rem] = right_divmod(skew_poly::xn_minus(ctx, n, b), h);
        if (!rem.is_zero())
            throw precondition_error("h does not right-divide X^n - " + ctx->r->text(b));
    }
    const int64_t k = int64_t(*h.degree());
    elem binv = ctx->r->inverse(b);
    elem h0 = h.coeff(0);
    elem h0inv = ctx->r->inverse(h0);
    star_divisor_constants out{
        ctx->sig_pow(binv, k - int64_t(n)),
        binv * ctx->sig_pow(h0, -k) * ctx->sig_pow(h0inv, int64_t(n) - k),
    };
    skew_poly hs = h.star();
    if (!left_divmod(skew_poly::xn_minus(ctx, n, out.left_target), hs).rem.is_zero())
        throw internal_check_error("h* does not left-divide its left target binomial");
    if (!right_divmod(skew_poly::xn_minus(ctx, n, out.right_target), hs).rem.is_zero())
        throw internal_check_error("h* does not right-divide its right target binomial");
    return out;
}

} // namespace skewcode
