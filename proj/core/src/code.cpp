#include "skewcode/code.hpp"

namespace skewcode {

principal_code::principal_code(skew_poly f, skew_poly g) : f_(std::move(f)), g_(std::move(g)) {
    if (!same_context(*f_.ctx(), *g_.ctx()))
        throw validation_error("modulus and generator come from different skew contexts");
    if (!f_.is_monic())
        throw validation_error("modulus must be monic, got " + f_.to_text());
    n_ = *f_.degree();
    if (n_ < 1) throw validation_error("modulus must have degree >= 1");
    if (g_.is_zero()) throw validation_error("generator must be nonzero");
    elem u = g_.leading();
    auto uinv = f_.ctx()->r->try_inverse(u);
    if (!uinv)
        throw validation_error("generator leading coefficient " + f_.ctx()->r->text(u) +
                               " is not a unit");
    if (!(u == f_.ctx()->r->one())) g_ = *uinv * g_;
    r_ = *g_.degree();

    auto dv = right_divmod(f_, g_);
    if (!dv.rem.is_zero())
        throw precondition_error("generator does not right-divide the modulus (remainder " +
                                 dv.rem.to_text() + ")");

    if (f_.ctx()->sigma_auto) {
        auto ldv = left_divmod(f_, g_);
        if (ldv.rem.is_zero()) h_ = ldv.quot;
    }

    bool binomial = true;
    for (size_t i = 1; i < n_ && binomial; ++i)
        if (!(f_.coeff(i) == f_.ctx()->r->zero())) binomial = false;
    if (binomial) {
        elem a = -f_.coeff(0);
        if (f_.ctx()->r->is_unit(a)) consta_ = a;
    }
}

/* ---------------- generating matrix ---------------- */

ring_matrix principal_code::generating_matrix() const {
    const size_t rows = n_ - r_;
    ring_matrix gm(ctx()->r, rows, n_);
    if (rows == 0) return gm;

    plt t(f_);
    std::vector<elem> rec(n_, ctx()->r->zero());
    for (size_t j = 0; j <= r_; ++j) rec[j] = g_.coeff(j);
    std::vector<elem> ind = rec; // independent chain through the matrix formula
    gm.set_row(0, rec);
    for (size_t i = 1; i < rows; ++i) {
        // the previous row has support within columns 0..r+i-1 <= n-2
        rec = t.recursive_step(rec, {.last_entry_zero = true});
        ind = t.apply(ind);
        if (rec != ind)
            throw internal_check_error("generating matrix recursion disagrees with T_f at row " +
                                       std::to_string(i));
        gm.set_row(i, rec);
    }
    return gm;
}

/* ---------------- control matrix ---------------- */

ring_matrix principal_code::control_matrix() const {
    if (!h_)
        throw precondition_error("control matrix needs the cofactor h with f = g h; none is "
                                 "available (sigma not bijective, or g does not left-divide f)");
    if (r_ < 1)
        throw precondition_error("control matrix needs deg g >= 1");
    const size_t k = n_ - r_; // deg h

    plt t(f_);
    ring_matrix hm(ctx()->r, n_, n_);
    std::vector<elem> rec(n_, ctx()->r->zero());
    for (size_t j = 0; j <= k; ++j) rec[j] = h_->coeff(j);
    std::vector<elem> ind = rec;
    hm.set_row(0, rec);
    for (size_t i = 1; i < n_; ++i) {
        // support of row i-1 reaches column k+i-1, so the tail is known zero
        // exactly while i <= r-1; later rows use the full wraparound recursion
        rec = t.recursive_step(rec, {.last_entry_zero = i < r_});
        ind = t.apply(ind);
        if (rec != ind)
            throw internal_check_error("control matrix recursion disagrees with T_f at row " +
                                       std::to_string(i));
        hm.set_row(i, rec);
    }

    if (!generating_matrix().mul(hm).is_zero())
        throw internal_check_error("G H != 0 for the computed control matrix");
    return hm;
}

/* ---------------- parity check ---------------- */

ring_matrix principal_code::parity_check_matrix() const {
    if (!ctx()->sigma_auto)
        throw precondition_error("parity-check matrix needs sigma to be an automorphism");
    ring_matrix pc(ctx()->r, r_, n_);
    if (r_ == 0) return pc; // the full space checks against nothing

    const size_t k = n_ - r_;
    ring_matrix hm = control_matrix();
    for (size_t tcol = 0; tcol < r_; ++tcol)
        for (size_t i = 0; i < n_; ++i) pc.set(tcol, i, hm.at(i, k + tcol));

    // echelon shape: zeros left of the diagonal, sigma^t(h_k) = 1 on it
    for (size_t tcol = 0; tcol < r_; ++tcol) {
        for (size_t i = 0; i < tcol; ++i)
            if (!(pc.at(tcol, i) == ctx()->r->zero()))
                throw internal_check_error("parity-check matrix is not in echelon form");
        if (!(pc.at(tcol, tcol) == ctx()->sig_pow(h_->leading(), int64_t(tcol))))
            throw internal_check_error("parity-check diagonal entry differs from sigma^t(h_k)");
    }
    if (!generating_matrix().mul(pc.transpose()).is_zero())
        throw internal_check_error("G H_*^T != 0 for the computed parity-check matrix");
    return pc;
}

/* ---------------- dual ---------------- */

// The dual of the constacyclic code (X^n - a, g) is generated by h* for the
// cofactor h of the *left-hand* factorization X^n - b = g h, where b is the
// divisor-transferred constant.  Orthogonality is exact: g psi(h*) collapses
// to X^r - b X^-k, so every constant term <u g, z h*> = CT(u (g psi(h*)) psi(z))
// vanishes -- the two summands only reach exponents 1..n-1 and -(n-1)..-1.
// Together with |(h*)| = |A|^r = |A|^n / |C| this identifies the code of h*
// as the full annihilator.  h* itself right-divides X^n - c for the constant
// c obtained by transferring sigma^-r(b^-1) back to the right-hand side.
std::pair<skew_poly, elem> principal_code::dual_cofactor() const {
    if (!ctx()->delta_zero)
        throw precondition_error("dual construction needs delta = 0");
    if (!ctx()->sigma_auto)
        throw precondition_error("dual construction needs sigma to be an automorphism");
    if (!consta_)
        throw precondition_error("dual construction needs a constacyclic code: f = X^n - a "
                                 "with a a unit");
    elem b = transfer_constant(g_, *consta_, n_, transfer_direction::right_to_left);
    auto ldv = left_divmod(skew_poly::xn_minus(ctx(), n_, b), g_);
    if (!ldv.rem.is_zero())
        throw internal_check_error("g does not left-divide X^n - b for the transferred "
                                   "constant, contradicting the divisor-transfer lemma");
    const skew_poly& h = ldv.quot; // monic of degree k
    elem h0 = h.coeff(0);
    if (!ctx()->r->try_inverse(h0))
        throw precondition_error("dual cofactor has non-unit constant term " +
                                 ctx()->r->text(h0));
    elem d0 = ctx()->sig_pow(ctx()->r->inverse(b), -int64_t(r_));
    elem c = transfer_constant(h.star(), d0, n_, transfer_direction::left_to_right);
    return {h, c};
}

dual_result principal_code::dual_code() const {
    auto [h, c] = dual_cofactor();
    skew_poly gen = h.star();
    try {
        principal_code dual(skew_poly::xn_minus(ctx(), n_, c), gen);
        if (!generating_matrix().mul(dual.generating_matrix().transpose()).is_zero())
            throw internal_check_error("dual code rows are not orthogonal to the code");
        return {gen, c, std::move(dual)};
    } catch (const precondition_error& e) {
        throw internal_check_error(std::string("dual generator fails to divide its binomial: ") +
                                   e.what());
    }
}

ring_matrix principal_code::dual_generating_matrix() const {
    auto [h, c] = dual_cofactor();
    const size_t k = n_ - r_; // deg h
    skew_poly gen = h.star();
    ring_matrix dm(ctx()->r, r_, n_);
    for (size_t j = 0; j < r_; ++j)
        for (size_t m = 0; m <= k; ++m)
            dm.set(j, j + m, ctx()->sig_pow(gen.coeff(m), int64_t(j)));

    // row 0 must be the reciprocal padded, later rows its twisted shifts:
    // re-derive them through the pseudo-linear transform of X^n - c and compare
    plt t(skew_poly::xn_minus(ctx(), n_, c));
    std::vector<elem> rec(n_, ctx()->r->zero());
    for (size_t m = 0; m <= k; ++m) rec[m] = gen.coeff(m);
    for (size_t j = 0; j < r_; ++j) {
        if (dm.row(j) != rec)
            throw internal_check_error("dual generating matrix row " + std::to_string(j) +
                                       " disagrees with the T_f iteration of h*");
        if (j + 1 < r_) rec = t.recursive_step(rec, {.last_entry_zero = true});
    }
    if (!generating_matrix().mul(dm.transpose()).is_zero())
        throw internal_check_error("dual generating matrix rows are not orthogonal to the code");
    return dm;
}

/* ---------------- self-duality ---------------- */

self_dual_report principal_code::self_dual_criterion() const {
    if (!ctx()->delta_zero)
        throw precondition_error("self-duality criterion needs delta = 0");
    if (!ctx()->sigma_auto)
        throw precondition_error("self-duality criterion needs sigma to be an automorphism");
    if (n_ != 2 * r_)
        throw precondition_error("self-duality criterion needs n = 2 deg g, got n = " +
                                 std::to_string(n_) + ", deg g = " + std::to_string(r_));
    if (!ctx()->r->is_unit(g_.coeff(0)))
        throw precondition_error("self-duality criterion needs a unit constant term on g, got " +
                                 ctx()->r->text(g_.coeff(0)));
    const size_t k = r_;
    self_dual_report rep;
    rep.half_length = k;
    rep.sums_all_zero = true;
    for (size_t l = 1; l <= k; ++l) {
        elem s = ctx()->r->zero();
        for (size_t i = 0; i <= l; ++i)
            s = s + ctx()->sig_pow(g_.coeff(i), int64_t(k) - int64_t(l)) * g_.coeff(i + k - l);
        rep.sums.push_back(s);
        if (!(s == ctx()->r->zero())) rep.sums_all_zero = false;
    }
    if (consta_) {
        skew_poly gen = dual_cofactor().first.star();
        skew_poly normalized = ctx()->r->inverse(gen.leading()) * gen;
        rep.generator_match = normalized == g_;
    }
    return rep;
}

/* ---------------- encode / syndrome ---------------- */

std::vector<elem> principal_code::encode(std::span<const elem> message) const {
    if (message.size() != rank())
        throw validation_error("message length " + std::to_string(message.size()) +
                               " does not match code rank " + std::to_string(rank()));
    return vec_mat_mul(message, generating_matrix());
}

std::vector<elem> principal_code::syndrome(std::span<const elem> word) const {
    if (word.size() != n_)
        throw validation_error("word length " + std::to_string(word.size()) +
                               " does not match code length " + std::to_string(n_));
    return vec_mat_mul(word, control_matrix());
}

} // namespace skewcode
