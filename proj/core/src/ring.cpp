#include "skewcode/ring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

namespace skewcode {

/* ---------------- small helpers ---------------- */

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

int64_t parse_int(std::string_view s, const char* what) {
    s = trim(s);
    int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw validation_error(std::string("malformed ") + what + ": '" + std::string(s) + "'");
    return v;
}

// split "(a,b,...)" at depth-0 commas; the outer parentheses must be present
std::vector<std::string_view> split_tuple(std::string_view s, const char* what) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw validation_error(std::string("malformed ") + what + ": expected '(...)', got '" +
                               std::string(s) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    std::vector<std::string_view> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == ',' && depth == 0) {
            parts.push_back(body.substr(start, i - start));
            start = i + 1;
        }
        if (depth < 0)
            throw validation_error(std::string("malformed ") + what + ": unbalanced parentheses");
    }
    if (depth != 0)
        throw validation_error(std::string("malformed ") + what + ": unbalanced parentheses");
    parts.push_back(body.substr(start));
    return parts;
}

/* dense polynomial arithmetic over Z_p, used only for GF construction */

using ppoly = std::vector<uint32_t>; // low degree first, not normalized

ppoly ppoly_mul(const ppoly& a, const ppoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    ppoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + uint64_t(a[i]) * b[j]) % p;
    return c;
}

// remainder of a by monic m
ppoly ppoly_rem(ppoly a, const ppoly& m, uint32_t p) {
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (size_t i = 0; i <= dm; ++i) {
                uint64_t sub = uint64_t(lead) * m[i] % p;
                uint32_t& c = a[shift + i];
                c = uint32_t((c + p - sub) % p);
            }
        a.pop_back();
    }
    return a;
}

bool ppoly_is_zero(const ppoly& a) {
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

// f monic of degree k; irreducible iff no monic divisor of degree 1..k/2
bool ppoly_irreducible(const ppoly& f, uint32_t p) {
    size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    for (size_t d = 1; 2 * d <= k; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t packed = 0; packed < count; ++packed) {
            ppoly g(d + 1, 0);
            uint64_t v = packed;
            for (size_t i = 0; i < d; ++i) { g[i] = uint32_t(v % p); v /= p; }
            g[d] = 1;
            if (ppoly_is_zero(ppoly_rem(f, g, p))) return false;
        }
    }
    return true;
}

} // namespace

/* ---------------- elem ---------------- */

bool elem::operator==(const elem& o) const {
    if (r == o.r) return idx == o.idx;
    if (r == nullptr || o.r == nullptr) return false;
    return r->same_as(*o.r) && idx == o.idx;
}

elem operator+(elem a, elem b) { return a.r->add(a, b); }
elem operator-(elem a, elem b) { return a.r->sub(a, b); }
elem operator*(elem a, elem b) { return a.r->mul(a, b); }
elem operator-(elem a) { return a.r->neg(a); }

/* ---------------- ring factories ---------------- */

static constexpr size_t max_ring_size = size_t(1) << 16;

ring_ptr ring::zmod(uint64_t m) {
    if (m < 2) throw validation_error("invalid modulus " + std::to_string(m) + ": need m >= 2");
    if (m > max_ring_size)
        throw validation_error("modulus " + std::to_string(m) + " too large to enumerate");
    auto r = ring_ptr(new ring());
    auto* w = const_cast<ring*>(r.get());
    w->kind_ = kind::zmod;
    w->modulus_ = m;
    w->size_ = m;
    w->signature_ = "zmod:" + std::to_string(m);
    w->finish();
    return r;
}

ring_ptr ring::gf(uint32_t p, uint32_t k, std::vector<uint32_t> defining_poly) {
    if (!is_prime(p)) throw validation_error("GF characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw validation_error("GF extension degree must be >= 1");
    uint64_t n = 1;
    for (uint32_t i = 0; i < k; ++i) {
        n *= p;
        if (n > max_ring_size)
            throw validation_error("GF(" + std::to_string(p) + "^" + std::to_string(k) +
                                   ") too large to enumerate");
    }
    if (defining_poly.empty()) {
        // smallest monic irreducible X^k + ... in packed order of the low part
        for (uint64_t packed = 0;; ++packed) {
            if (packed >= n) throw internal_check_error("no irreducible polynomial found");
            ppoly f(k + 1, 0);
            uint64_t v = packed;
            for (uint32_t i = 0; i < k; ++i) { f[i] = uint32_t(v % p); v /= p; }
            f[k] = 1;
            if (ppoly_irreducible(f, p)) { defining_poly = f; break; }
        }
    } else {
        if (defining_poly.size() != size_t(k) + 1)
            throw validation_error("defining polynomial must have degree exactly " + std::to_string(k));
        for (auto& c : defining_poly) c %= p;
        if (defining_poly.back() != 1)
            throw validation_error("defining polynomial must be monic");
        if (!ppoly_irreducible(defining_poly, p)) {
            std::ostringstream os;
            os << "defining polynomial is reducible over Z_" << p << ": [";
            for (size_t i = 0; i < defining_poly.size(); ++i)
                os << (i ? ", " : "") << defining_poly[i];
            os << "]";
            throw validation_error(os.str());
        }
    }
    auto r = ring_ptr(new ring());
    auto* w = const_cast<ring*>(r.get());
    w->kind_ = kind::gf;
    w->prime_ = p;
    w->degree_ = k;
    w->defining_poly_ = std::move(defining_poly);
    w->size_ = n;
    {
        std::ostringstream os;
        os << "gf:" << p << ":" << k << ":[";
        for (size_t i = 0; i < w->defining_poly_.size(); ++i)
            os << (i ? "," : "") << w->defining_poly_[i];
        os << "]";
        w->signature_ = os.str();
    }
    w->finish();
    return r;
}

ring_ptr ring::product(ring_ptr inner) {
    if (!inner) throw validation_error("product ring needs an inner ring");
    if (inner->size() * inner->size() > max_ring_size)
        throw validation_error("product ring over " + inner->signature() + " too large to enumerate");
    auto r = ring_ptr(new ring());
    auto* w = const_cast<ring*>(r.get());
    w->kind_ = kind::product;
    w->inner_ = std::move(inner);
    w->size_ = w->inner_->size() * w->inner_->size();
    w->signature_ = "prod[" + w->inner_->signature() + "]";
    w->finish();
    return r;
}

ring_ptr ring::dual_numbers(ring_ptr inner) {
    if (!inner) throw validation_error("dual-number ring needs an inner ring");
    if (inner->size() * inner->size() > max_ring_size)
        throw validation_error("dual-number ring over " + inner->signature() + " too large to enumerate");
    auto r = ring_ptr(new ring());
    auto* w = const_cast<ring*>(r.get());
    w->kind_ = kind::dual_numbers;
    w->inner_ = std::move(inner);
    w->size_ = w->inner_->size() * w->inner_->size();
    w->signature_ = "dual[" + w->inner_->signature() + "]";
    w->finish();
    return r;
}

/* ---------------- structural arithmetic ---------------- */

uint32_t ring::compute_add(uint32_t a, uint32_t b) const {
    switch (kind_) {
    case kind::zmod:
        return uint32_t((uint64_t(a) + b) % modulus_);
    case kind::gf: {
        uint32_t res = 0, mult = 1;
        for (uint32_t i = 0; i < degree_; ++i) {
            uint32_t da = a % prime_, db = b % prime_;
            a /= prime_; b /= prime_;
            res += ((da + db) % prime_) * mult;
            mult *= prime_;
        }
        return res;
    }
    case kind::product:
    case kind::dual_numbers: {
        uint32_t m = uint32_t(inner_->size());
        return inner_->add_idx(a / m, b / m) * m + inner_->add_idx(a % m, b % m);
    }
    }
    return 0;
}

uint32_t ring::compute_mul(uint32_t a, uint32_t b) const {
    switch (kind_) {
    case kind::zmod:
        return uint32_t(uint64_t(a) * b % modulus_);
    case kind::gf: {
        ppoly pa(degree_), pb(degree_);
        uint32_t va = a, vb = b;
        for (uint32_t i = 0; i < degree_; ++i) {
            pa[i] = va % prime_; va /= prime_;
            pb[i] = vb % prime_; vb /= prime_;
        }
        ppoly pc = ppoly_rem(ppoly_mul(pa, pb, prime_), defining_poly_, prime_);
        uint32_t res = 0, mult = 1;
        for (uint32_t i = 0; i < degree_; ++i) {
            res += (i < pc.size() ? pc[i] : 0) * mult;
            mult *= prime_;
        }
        return res;
    }
    case kind::product: {
        uint32_t m = uint32_t(inner_->size());
        return inner_->mul_idx(a / m, b / m) * m + inner_->mul_idx(a % m, b % m);
    }
    case kind::dual_numbers: {
        // (a0,a1)(b0,b1) = (a0 b0, a0 b1 + a1 b0)
        uint32_t m = uint32_t(inner_->size());
        uint32_t a0 = a / m, a1 = a % m, b0 = b / m, b1 = b % m;
        uint32_t lo = inner_->add_idx(inner_->mul_idx(a0, b1), inner_->mul_idx(a1, b0));
        return inner_->mul_idx(a0, b0) * m + lo;
    }
    }
    return 0;
}

uint32_t ring::compute_neg(uint32_t a) const {
    switch (kind_) {
    case kind::zmod:
        return uint32_t((modulus_ - a) % modulus_);
    case kind::gf: {
        uint32_t res = 0, mult = 1;
        for (uint32_t i = 0; i < degree_; ++i) {
            uint32_t d = a % prime_; a /= prime_;
            res += ((prime_ - d) % prime_) * mult;
            mult *= prime_;
        }
        return res;
    }
    case kind::product:
    case kind::dual_numbers: {
        uint32_t m = uint32_t(inner_->size());
        return inner_->neg_idx(a / m) * m + inner_->neg_idx(a % m);
    }
    }
    return 0;
}

void ring::finish() {
    const uint32_t n = uint32_t(size_);

    switch (kind_) {
    case kind::zmod: one_ = uint32_t(1 % modulus_); break;
    case kind::gf: one_ = 1; break;
    case kind::product: one_ = uint32_t(inner_->one().idx * inner_->size() + inner_->one().idx); break;
    case kind::dual_numbers: one_ = uint32_t(inner_->one().idx * inner_->size()); break;
    }

    text_tab_.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
        switch (kind_) {
        case kind::zmod:
            text_tab_[i] = std::to_string(i);
            break;
        case kind::gf:
            if (degree_ == 1) {
                text_tab_[i] = std::to_string(i);
            } else {
                std::string s = "(";
                uint32_t v = i;
                for (uint32_t d = 0; d < degree_; ++d) {
                    if (d) s += ',';
                    s += std::to_string(v % prime_);
                    v /= prime_;
                }
                s += ')';
                text_tab_[i] = std::move(s);
            }
            break;
        case kind::product:
        case kind::dual_numbers: {
            uint32_t m = uint32_t(inner_->size());
            text_tab_[i] = "(" + inner_->text_tab_[i / m] + "," + inner_->text_tab_[i % m] + ")";
            break;
        }
        }
    }
    parse_tab_.reserve(n);
    for (uint32_t i = 0; i < n; ++i) parse_tab_.emplace(text_tab_[i], i);

    if (size_ <= table_limit) {
        add_tab_.resize(size_t(n) * n);
        mul_tab_.resize(size_t(n) * n);
        neg_tab_.resize(n);
        inv_tab_.assign(n, no_inverse);
        for (uint32_t a = 0; a < n; ++a) {
            neg_tab_[a] = compute_neg(a);
            for (uint32_t b = 0; b < n; ++b) {
                uint32_t s = compute_add(a, b), p = compute_mul(a, b);
                add_tab_[size_t(a) * n + b] = s;
                mul_tab_[size_t(a) * n + b] = p;
                if (p == one_ && inv_tab_[a] == no_inverse) inv_tab_[a] = b;
            }
        }
    }
}

/* ---------------- element access ---------------- */

elem ring::element(size_t i) const {
    if (i >= size_)
        throw validation_error("element index " + std::to_string(i) + " out of range for " + signature_);
    return {this, uint32_t(i)};
}

elem ring::from_int(int64_t v) const {
    bool negate = v < 0;
    uint64_t a = negate ? uint64_t(-(v + 1)) + 1 : uint64_t(v);
    // double-and-add on the additive group
    elem acc = zero(), base = one();
    while (a) {
        if (a & 1) acc = add(acc, base);
        base = add(base, base);
        a >>= 1;
    }
    return negate ? neg(acc) : acc;
}

elem ring::from_parts(elem x, elem y) const {
    if (kind_ != kind::product && kind_ != kind::dual_numbers)
        throw validation_error("from_parts on non-pair ring " + signature_);
    if (!inner_->same_as(*x.r) || !inner_->same_as(*y.r))
        throw validation_error("from_parts components must live in " + inner_->signature());
    return {this, uint32_t(x.idx * inner_->size() + y.idx)};
}

std::pair<elem, elem> ring::parts(elem e) const {
    if (kind_ != kind::product && kind_ != kind::dual_numbers)
        throw validation_error("parts on non-pair ring " + signature_);
    if (!same_as(*e.r)) throw validation_error("parts: element not in " + signature_);
    uint32_t m = uint32_t(inner_->size());
    return {elem{inner_.get(), e.idx / m}, elem{inner_.get(), e.idx % m}};
}

const ring_ptr& ring::inner() const {
    if (kind_ != kind::product && kind_ != kind::dual_numbers)
        throw validation_error("inner() on non-pair ring " + signature_);
    return inner_;
}

uint32_t ring::gf_prime() const {
    if (kind_ != kind::gf) throw validation_error("gf_prime on " + signature_);
    return prime_;
}
uint32_t ring::gf_degree() const {
    if (kind_ != kind::gf) throw validation_error("gf_degree on " + signature_);
    return degree_;
}
const std::vector<uint32_t>& ring::gf_defining_poly() const {
    if (kind_ != kind::gf) throw validation_error("gf_defining_poly on " + signature_);
    return defining_poly_;
}
uint64_t ring::zmod_modulus() const {
    if (kind_ != kind::zmod) throw validation_error("zmod_modulus on " + signature_);
    return modulus_;
}

/* ---------------- checked arithmetic ---------------- */

static void check_same(const ring* r, elem e, const char* op) {
    if (e.r == r) return;
    if (e.r == nullptr)
        throw validation_error(std::string(op) + ": uninitialized element");
    if (!r->same_as(*e.r))
        throw validation_error(std::string(op) + ": ring mismatch (" + r->signature() + " vs " +
                               e.r->signature() + ")");
}

elem ring::add(elem a, elem b) const {
    check_same(this, a, "add"); check_same(this, b, "add");
    return {this, add_idx(a.idx, b.idx)};
}
elem ring::sub(elem a, elem b) const {
    check_same(this, a, "sub"); check_same(this, b, "sub");
    return {this, add_idx(a.idx, neg_idx(b.idx))};
}
elem ring::mul(elem a, elem b) const {
    check_same(this, a, "mul"); check_same(this, b, "mul");
    return {this, mul_idx(a.idx, b.idx)};
}
elem ring::neg(elem a) const {
    check_same(this, a, "neg");
    return {this, neg_idx(a.idx)};
}

uint32_t ring::add_idx(uint32_t a, uint32_t b) const {
    return add_tab_.empty() ? compute_add(a, b) : add_tab_[size_t(a) * size_ + b];
}
uint32_t ring::mul_idx(uint32_t a, uint32_t b) const {
    return mul_tab_.empty() ? compute_mul(a, b) : mul_tab_[size_t(a) * size_ + b];
}
uint32_t ring::neg_idx(uint32_t a) const {
    return neg_tab_.empty() ? compute_neg(a) : neg_tab_[a];
}

std::optional<elem> ring::try_inverse(elem a) const {
    check_same(this, a, "inverse");
    if (!inv_tab_.empty()) {
        uint32_t i = inv_tab_[a.idx];
        if (i == no_inverse) return std::nullopt;
        return elem{this, i};
    }
    for (uint32_t b = 0; b < size_; ++b) // exhaustive search
        if (mul_idx(a.idx, b) == one_) return elem{this, b};
    return std::nullopt;
}

bool ring::is_unit(elem a) const { return try_inverse(a).has_value(); }

elem ring::inverse(elem a) const {
    auto i = try_inverse(a);
    if (!i) throw validation_error("element " + text(a) + " is not a unit in " + signature_);
    return *i;
}

/* ---------------- text ---------------- */

const std::string& ring::text(elem e) const {
    check_same(this, e, "text");
    return text_tab_[e.idx];
}

elem ring::parse(std::string_view s) const {
    s = trim(s);
    // fast path: exact canonical form
    if (auto it = parse_tab_.find(std::string(s)); it != parse_tab_.end())
        return {this, it->second};
    switch (kind_) {
    case kind::zmod: {
        int64_t v = parse_int(s, ("element of " + signature_).c_str());
        return from_int(v);
    }
    case kind::gf: {
        if (degree_ == 1) {
            int64_t v = parse_int(s, ("element of " + signature_).c_str());
            return from_int(v);
        }
        auto parts = split_tuple(s, ("element of " + signature_).c_str());
        if (parts.size() != degree_)
            throw validation_error("element of " + signature_ + " needs " + std::to_string(degree_) +
                                   " coordinates, got " + std::to_string(parts.size()));
        uint32_t idx = 0, mult = 1;
        for (uint32_t i = 0; i < degree_; ++i) {
            int64_t v = parse_int(parts[i], "coefficient");
            int64_t c = ((v % prime_) + prime_) % prime_;
            idx += uint32_t(c) * mult;
            mult *= prime_;
        }
        return {this, idx};
    }
    case kind::product:
    case kind::dual_numbers: {
        auto parts = split_tuple(s, ("element of " + signature_).c_str());
        if (parts.size() != 2)
            throw validation_error("element of " + signature_ + " needs 2 components, got " +
                                   std::to_string(parts.size()));
        return from_parts(inner_->parse(parts[0]), inner_->parse(parts[1]));
    }
    }
    throw validation_error("unreachable ring kind");
}

/* ---------------- endo ---------------- */

endo::endo(ring_ptr r, kind k, std::vector<uint32_t> tab)
    : ring_(std::move(r)), kind_(k), table_(std::move(tab)) {
    if (table_.size() != ring_->size())
        throw validation_error("endomorphism table must cover all " + std::to_string(ring_->size()) +
                               " elements of " + ring_->signature());
    for (uint32_t v : table_)
        if (v >= ring_->size())
            throw validation_error("endomorphism table value out of range");
    prepare();
}

void endo::prepare() {
    const size_t n = ring_->size();
    std::vector<uint8_t> seen(n, 0);
    bool bijective = true;
    for (uint32_t v : table_) {
        if (seen[v]) { bijective = false; break; }
        seen[v] = 1;
    }
    if (bijective) {
        inv_table_.emplace(n);
        for (uint32_t i = 0; i < n; ++i) (*inv_table_)[table_[i]] = i;
        // order = lcm of cycle lengths
        std::fill(seen.begin(), seen.end(), 0);
        uint64_t ord = 1;
        bool overflow = false;
        for (uint32_t i = 0; i < n && !overflow; ++i) {
            if (seen[i]) continue;
            uint64_t len = 0;
            for (uint32_t j = i; !seen[j]; j = table_[j]) { seen[j] = 1; ++len; }
            uint64_t g = std::gcd(ord, len);
            if (ord / g > (uint64_t(1) << 40) / len) { overflow = true; break; }
            ord = ord / g * len;
        }
        if (!overflow) order_ = ord;
    }
}

endo endo::identity(ring_ptr r) {
    std::vector<uint32_t> tab(r->size());
    std::iota(tab.begin(), tab.end(), 0);
    return endo(std::move(r), kind::identity, std::move(tab));
}

endo endo::frobenius(ring_ptr gf_ring, uint32_t power) {
    if (gf_ring->get_kind() != ring::kind::gf)
        throw validation_error("frobenius needs a GF ring, got " + gf_ring->signature());
    uint32_t p = gf_ring->gf_prime();
    std::vector<uint32_t> tab(gf_ring->size());
    for (uint32_t i = 0; i < tab.size(); ++i) {
        uint32_t t = i;
        for (uint32_t step = 0; step < power; ++step) {
            // t <- t^p by square and multiply
            uint32_t acc = gf_ring->one().idx, base = t, e = p;
            while (e) {
                if (e & 1) acc = gf_ring->mul_idx(acc, base);
                base = gf_ring->mul_idx(base, base);
                e >>= 1;
            }
            t = acc;
        }
        tab[i] = t;
    }
    return endo(std::move(gf_ring), power == 0 ? kind::identity : kind::frobenius, std::move(tab));
}

endo endo::swap(ring_ptr product_ring) {
    if (product_ring->get_kind() != ring::kind::product)
        throw validation_error("swap needs a product ring, got " + product_ring->signature());
    uint32_t m = uint32_t(product_ring->inner()->size());
    std::vector<uint32_t> tab(product_ring->size());
    for (uint32_t i = 0; i < tab.size(); ++i) tab[i] = (i % m) * m + (i / m);
    return endo(std::move(product_ring), kind::swap, std::move(tab));
}

endo endo::project(ring_ptr dual_ring) {
    if (dual_ring->get_kind() != ring::kind::dual_numbers)
        throw validation_error("project needs a dual-number ring, got " + dual_ring->signature());
    uint32_t m = uint32_t(dual_ring->inner()->size());
    std::vector<uint32_t> tab(dual_ring->size());
    for (uint32_t i = 0; i < tab.size(); ++i) tab[i] = (i / m) * m;
    return endo(std::move(dual_ring), kind::project, std::move(tab));
}

endo endo::conjugate(ring_ptr dual_ring) {
    if (dual_ring->get_kind() != ring::kind::dual_numbers)
        throw validation_error("conjugate needs a dual-number ring, got " + dual_ring->signature());
    const auto& inner = dual_ring->inner();
    uint32_t m = uint32_t(inner->size());
    std::vector<uint32_t> tab(dual_ring->size());
    for (uint32_t i = 0; i < tab.size(); ++i) tab[i] = (i / m) * m + inner->neg_idx(i % m);
    return endo(std::move(dual_ring), kind::conjugate, std::move(tab));
}

endo endo::from_table(ring_ptr r, std::vector<uint32_t> table) {
    return endo(std::move(r), kind::table, std::move(table));
}

endo endo::from_pairs(ring_ptr r, const std::vector<std::pair<elem, elem>>& pairs) {
    std::vector<uint32_t> tab(r->size(), UINT32_MAX);
    for (const auto& [in, out] : pairs) {
        if (!r->same_as(*in.r) || !r->same_as(*out.r))
            throw validation_error("table entry not in " + r->signature());
        if (tab[in.idx] != UINT32_MAX)
            throw validation_error("duplicate table entry for " + r->text(in));
        tab[in.idx] = out.idx;
    }
    for (uint32_t i = 0; i < tab.size(); ++i)
        if (tab[i] == UINT32_MAX)
            throw validation_error("table is missing an entry for " + r->text(r->element(i)));
    return endo(std::move(r), kind::table, std::move(tab));
}

std::string endo::describe() const {
    switch (kind_) {
    case kind::identity: return "identity";
    case kind::frobenius: return "frobenius";
    case kind::swap: return "swap";
    case kind::project: return "project";
    case kind::conjugate: return "conjugate";
    case kind::table: return "table";
    }
    return "?";
}

elem endo::operator()(elem e) const {
    check_same(ring_.get(), e, "sigma");
    return {ring_.get(), table_[e.idx]};
}

elem endo::pow(elem e, int64_t n) const {
    check_same(ring_.get(), e, "sigma^n");
    if (n < 0) {
        if (!inv_table_)
            throw precondition_error("sigma^" + std::to_string(n) +
                                     " needs an automorphism, but sigma is not injective");
        uint64_t m = uint64_t(-(n + 1)) + 1;
        if (order_) m %= *order_;
        uint32_t i = e.idx;
        for (uint64_t s = 0; s < m; ++s) i = (*inv_table_)[i];
        return {ring_.get(), i};
    }
    uint64_t m = uint64_t(n);
    if (order_) m %= *order_;
    uint32_t i = e.idx;
    for (uint64_t s = 0; s < m; ++s) i = table_[i];
    return {ring_.get(), i};
}

bool endo::is_automorphism() const { return inv_table_.has_value(); }

std::optional<uint64_t> endo::order() const { return order_; }

endo endo::inverse() const {
    if (!inv_table_)
        throw precondition_error("endomorphism is not injective, no inverse (" + describe() + " on " +
                                 ring_->signature() + ")");
    return endo(ring_, kind_ == kind::identity ? kind::identity : kind::table, *inv_table_);
}

endo endo::compose(const endo& inner_first) const {
    if (!ring_->same_as(*inner_first.ring_))
        throw validation_error("composing endomorphisms of different rings");
    std::vector<uint32_t> tab(table_.size());
    for (uint32_t i = 0; i < tab.size(); ++i) tab[i] = table_[inner_first.table_[i]];
    return endo(ring_, kind::table, std::move(tab));
}

endo endo::power(uint64_t n) const {
    endo acc = identity(ring_);
    endo base = *this;
    while (n) {
        if (n & 1) acc = acc.compose(base);
        if (n >>= 1) base = base.compose(base);
    }
    return acc;
}

bool endo::operator==(const endo& o) const {
    return ring_->same_as(*o.ring_) && table_ == o.table_;
}

/* ---------------- derivation ---------------- */

derivation::derivation(endo sigma, kind k, std::vector<uint32_t> tab)
    : sigma_(std::move(sigma)), kind_(k), table_(std::move(tab)) {
    if (table_.size() != get_ring()->size())
        throw validation_error("derivation table must cover all elements of " + get_ring()->signature());
    for (uint32_t v : table_)
        if (v >= get_ring()->size())
            throw validation_error("derivation table value out of range");
}

derivation derivation::zero(endo sigma) {
    std::vector<uint32_t> tab(sigma.get_ring()->size(), 0);
    return derivation(std::move(sigma), kind::zero, std::move(tab));
}

derivation derivation::nilpart(endo sigma) {
    const auto& r = sigma.get_ring();
    if (r->get_kind() != ring::kind::dual_numbers)
        throw validation_error("nilpart derivation needs a dual-number ring, got " + r->signature());
    uint32_t m = uint32_t(r->inner()->size());
    std::vector<uint32_t> tab(r->size());
    for (uint32_t i = 0; i < tab.size(); ++i) tab[i] = i % m; // (a,b) -> (0,b)
    return derivation(std::move(sigma), kind::nilpart, std::move(tab));
}

derivation derivation::from_table(endo sigma, std::vector<uint32_t> table) {
    return derivation(std::move(sigma), kind::table, std::move(table));
}

derivation derivation::from_pairs(endo sigma, const std::vector<std::pair<elem, elem>>& pairs) {
    const auto& r = sigma.get_ring();
    std::vector<uint32_t> tab(r->size(), UINT32_MAX);
    for (const auto& [in, out] : pairs) {
        if (!r->same_as(*in.r) || !r->same_as(*out.r))
            throw validation_error("table entry not in " + r->signature());
        if (tab[in.idx] != UINT32_MAX)
            throw validation_error("duplicate table entry for " + r->text(in));
        tab[in.idx] = out.idx;
    }
    for (uint32_t i = 0; i < tab.size(); ++i)
        if (tab[i] == UINT32_MAX)
            throw validation_error("table is missing an entry for " + r->text(r->element(i)));
    return derivation(std::move(sigma), kind::table, std::move(tab));
}

std::string derivation::describe() const {
    switch (kind_) {
    case kind::zero: return "zero";
    case kind::nilpart: return "nilpart";
    case kind::table: return "table";
    }
    return "?";
}

elem derivation::operator()(elem e) const {
    check_same(get_ring().get(), e, "delta");
    return {get_ring().get(), table_[e.idx]};
}

bool derivation::is_zero() const {
    return std::all_of(table_.begin(), table_.end(), [](uint32_t v) { return v == 0; });
}

bool derivation::operator==(const derivation& o) const {
    return sigma_ == o.sigma_ && table_ == o.table_;
}

/* ---------------- verification ---------------- */

namespace {

template <typename PairCheck>
verify_report run_pair_verification(uint64_t n, const verify_options& opts, PairCheck&& check) {
    verify_report rep;
    if (n * n <= opts.exhaustive_pair_bound) {
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b) {
                ++rep.checked;
                if (!check(a, b, rep.detail)) return rep;
            }
        rep.valid = true;
        return rep;
    }
    if (!opts.allow_sampling)
        throw bound_error("verification space " + std::to_string(n * n) + " pairs exceeds bound " +
                          std::to_string(opts.exhaustive_pair_bound) + " and sampling is disabled");
    rep.sampled = true;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<uint32_t> dist(0, uint32_t(n - 1));
    for (uint64_t s = 0; s < opts.sample_pairs; ++s) {
        uint32_t a = dist(rng), b = dist(rng);
        ++rep.checked;
        if (!check(a, b, rep.detail)) return rep;
    }
    rep.valid = true;
    return rep;
}

} // namespace

verify_report verify_endomorphism(const endo& sigma, const verify_options& opts) {
    const ring& r = *sigma.get_ring();
    const uint64_t n = r.size();
    if (sigma.map_idx(r.one().idx) != r.one().idx) {
        verify_report rep;
        rep.checked = 1;
        rep.detail = "sigma(1) = " + r.text(sigma(r.one())) + " != 1";
        return rep;
    }
    return run_pair_verification(n, opts, [&](uint32_t a, uint32_t b, std::string& detail) {
        uint32_t lhs_add = sigma.map_idx(r.add_idx(a, b));
        uint32_t rhs_add = r.add_idx(sigma.map_idx(a), sigma.map_idx(b));
        if (lhs_add != rhs_add) {
            detail = "sigma(a+b) != sigma(a)+sigma(b) at a=" + r.text(r.element(a)) +
                     ", b=" + r.text(r.element(b));
            return false;
        }
        uint32_t lhs_mul = sigma.map_idx(r.mul_idx(a, b));
        uint32_t rhs_mul = r.mul_idx(sigma.map_idx(a), sigma.map_idx(b));
        if (lhs_mul != rhs_mul) {
            detail = "sigma(ab) != sigma(a)sigma(b) at a=" + r.text(r.element(a)) +
                     ", b=" + r.text(r.element(b));
            return false;
        }
        return true;
    });
}

verify_report verify_derivation(const derivation& delta, const verify_options& opts) {
    const ring& r = *delta.get_ring();
    const endo& sigma = delta.sigma();
    const uint64_t n = r.size();
    // delta(0) = 0 and delta(1) = 0 are consequences; cheap to check up front
    if (delta.map_idx(0) != 0) {
        verify_report rep;
        rep.checked = 1;
        rep.detail = "delta(0) != 0";
        return rep;
    }
    if (delta.map_idx(r.one().idx) != 0) {
        verify_report rep;
        rep.checked = 1;
        rep.detail = "delta(1) = " + r.text(delta(r.one())) + " != 0";
        return rep;
    }
    return run_pair_verification(n, opts, [&](uint32_t a, uint32_t b, std::string& detail) {
        uint32_t lhs_add = delta.map_idx(r.add_idx(a, b));
        uint32_t rhs_add = r.add_idx(delta.map_idx(a), delta.map_idx(b));
        if (lhs_add != rhs_add) {
            detail = "delta(a+b) != delta(a)+delta(b) at a=" + r.text(r.element(a)) +
                     ", b=" + r.text(r.element(b));
            return false;
        }
        uint32_t lhs = delta.map_idx(r.mul_idx(a, b));
        uint32_t rhs = r.add_idx(r.mul_idx(sigma.map_idx(a), delta.map_idx(b)),
                                 r.mul_idx(delta.map_idx(a), b));
        if (lhs != rhs) {
            detail = "delta(ab) != sigma(a)delta(b)+delta(a)b at a=" + r.text(r.element(a)) +
                     ", b=" + r.text(r.element(b));
            return false;
        }
        return true;
    });
}

axiom_report check_ring_axioms(const ring_ptr& rp, uint64_t triple_bound) {
    const ring& r = *rp;
    axiom_report rep;
    const uint64_t n = r.size();
    for (uint32_t a = 0; a < n; ++a) {
        if (r.add_idx(a, 0) != a) { rep.detail = "a+0 != a at " + r.text(r.element(a)); return rep; }
        if (r.mul_idx(a, r.one().idx) != a) { rep.detail = "a*1 != a at " + r.text(r.element(a)); return rep; }
        if (r.add_idx(a, r.neg_idx(a)) != 0) { rep.detail = "a+(-a) != 0 at " + r.text(r.element(a)); return rep; }
    }
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            ++rep.pairs_checked;
            if (r.add_idx(a, b) != r.add_idx(b, a)) {
                rep.detail = "addition not commutative at (" + r.text(r.element(a)) + ", " +
                             r.text(r.element(b)) + ")";
                return rep;
            }
            if (r.mul_idx(a, b) != r.mul_idx(b, a)) {
                rep.detail = "multiplication not commutative at (" + r.text(r.element(a)) + ", " +
                             r.text(r.element(b)) + ")";
                return rep;
            }
        }
    auto triple = [&](uint32_t a, uint32_t b, uint32_t c, std::string& detail) {
        if (r.mul_idx(r.mul_idx(a, b), c) != r.mul_idx(a, r.mul_idx(b, c))) {
            detail = "multiplication not associative";
            return false;
        }
        if (r.add_idx(r.add_idx(a, b), c) != r.add_idx(a, r.add_idx(b, c))) {
            detail = "addition not associative";
            return false;
        }
        if (r.mul_idx(a, r.add_idx(b, c)) != r.add_idx(r.mul_idx(a, b), r.mul_idx(a, c))) {
            detail = "multiplication does not distribute";
            return false;
        }
        return true;
    };
    if (n * n * n <= triple_bound) {
        rep.triples_exhaustive = true;
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b)
                for (uint32_t c = 0; c < n; ++c) {
                    ++rep.triples_checked;
                    if (!triple(a, b, c, rep.detail)) return rep;
                }
    } else {
        std::mt19937_64 rng(0);
        std::uniform_int_distribution<uint32_t> dist(0, uint32_t(n - 1));
        for (uint64_t s = 0; s < (uint64_t(1) << 16); ++s) {
            ++rep.triples_checked;
            if (!triple(dist(rng), dist(rng), dist(rng), rep.detail)) return rep;
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace skewcode
