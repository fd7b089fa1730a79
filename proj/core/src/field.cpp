#include "orbitcodes/field.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace orbitcodes {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t v) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d) continue;
        unsigned e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

std::vector<std::uint64_t> divisors_ascending(std::uint64_t v) {
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factorize(v)) {
        std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

struct FieldData {
    FieldSpec spec;
    FieldOptions opts;
    std::uint64_t size = 0;  // q^n
    std::uint64_t order = 0; // q^n - 1
    bool primitive = false;
    std::vector<std::uint64_t> qpow; // q^0 .. q^n
    std::vector<std::pair<std::uint64_t, unsigned>> order_factors;

    // q = 2 fast path: modulus as bitmask including the x^n bit
    std::uint64_t fmask = 0;

    // packed x^{n+i} mod f for i in [0, n-2], used to fold convolution tails
    std::vector<std::uint64_t> xpow_red;

    // log/antilog tables (present iff primitive and size <= threshold)
    std::vector<std::uint32_t> log_tbl;     // indexed by packed value
    std::vector<std::uint32_t> antilog_tbl; // indexed by exponent

    // lazy baby-step table for BSGS logs
    mutable std::once_flag bsgs_once;
    mutable std::unordered_map<std::uint64_t, std::uint32_t> bsgs_baby;
    mutable std::uint64_t bsgs_m = 0;
    mutable std::uint64_t bsgs_giant = 0; // packed alpha^{-m}

    unsigned q() const { return spec.q; }
    unsigned n() const { return spec.n; }

    void unpack(std::uint64_t v, std::uint8_t* out) const {
        const unsigned q_ = q();
        for (unsigned i = 0; i < n(); ++i) {
            out[i] = static_cast<std::uint8_t>(v % q_);
            v /= q_;
        }
    }
    std::uint64_t pack(const std::uint8_t* digits) const {
        std::uint64_t v = 0;
        for (unsigned i = n(); i-- > 0;) v = v * q() + digits[i];
        return v;
    }

    std::uint64_t mul_packed(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul_by_alpha(std::uint64_t a) const;
    std::uint64_t pow_packed(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t add_packed(std::uint64_t a, std::uint64_t b) const;
};

std::uint64_t FieldData::add_packed(std::uint64_t a, std::uint64_t b) const {
    if (q() == 2) return a ^ b;
    const unsigned q_ = q();
    std::uint64_t out = 0, mul = 1;
    for (unsigned i = 0; i < n(); ++i) {
        unsigned d = static_cast<unsigned>(a % q_ + b % q_);
        if (d >= q_) d -= q_;
        out += mul * d;
        a /= q_;
        b /= q_;
        mul *= q_;
    }
    return out;
}

std::uint64_t FieldData::mul_packed(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_tbl.empty()) {
        std::uint64_t e = log_tbl[a] + std::uint64_t(log_tbl[b]);
        if (e >= order) e -= order;
        return antilog_tbl[e];
    }
    const unsigned q_ = q(), n_ = n();
    if (q_ == 2) {
        std::uint64_t r = 0, x = a, top = std::uint64_t(1) << n_;
        while (b) {
            if (b & 1) r ^= x;
            b >>= 1;
            x <<= 1;
            if (x & top) x ^= fmask;
        }
        return r;
    }
    std::uint8_t da[64], db[64];
    std::uint32_t conv[127] = {0};
    unpack(a, da);
    unpack(b, db);
    for (unsigned i = 0; i < n_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < n_; ++j) conv[i + j] += unsigned(da[i]) * db[j];
    }
    // fold x^{n+i} tails down using the precomputed reductions
    std::uint8_t red[64];
    for (unsigned d = 2 * n_ - 2; d >= n_; --d) {
        unsigned c = conv[d] % q_;
        if (c) {
            unpack(xpow_red[d - n_], red);
            for (unsigned i = 0; i < n_; ++i) conv[i] += c * red[i];
        }
        if (d == n_) break;
    }
    std::uint8_t out[64];
    for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<std::uint8_t>(conv[i] % q_);
    return pack(out);
}

std::uint64_t FieldData::mul_by_alpha(std::uint64_t a) const {
    const unsigned q_ = q(), n_ = n();
    if (q_ == 2) {
        std::uint64_t x = a << 1;
        if (x & (std::uint64_t(1) << n_)) x ^= fmask;
        return x;
    }
    std::uint64_t top = a / qpow[n_ - 1];
    std::uint64_t shifted = (a - top * qpow[n_ - 1]) * q_;
    if (!top) return shifted;
    // shifted + top * (x^n mod f)
    std::uint8_t s[64], red[64];
    unpack(shifted, s);
    unpack(xpow_red[0], red);
    for (unsigned i = 0; i < n_; ++i)
        s[i] = static_cast<std::uint8_t>((s[i] + top * red[i]) % q_);
    return pack(s);
}

std::uint64_t FieldData::pow_packed(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_packed(r, a);
        a = mul_packed(a, a);
        e >>= 1;
    }
    return r;
}

} // namespace detail

namespace {

using Poly = std::vector<unsigned>; // coefficients mod q, low degree first

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned q) {
    const std::size_t n = f.size() - 1;
    std::vector<std::uint64_t> conv(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) conv[i + j] += std::uint64_t(a[i]) * b[j];
    }
    for (std::size_t d = conv.size(); d-- > n;) {
        std::uint64_t c = conv[d] % q;
        if (!c) continue;
        conv[d] = 0;
        for (std::size_t i = 0; i < n; ++i) conv[d - n + i] += c * (q - f[i]);
    }
    Poly out(n, 0);
    for (std::size_t i = 0; i < n && i < conv.size(); ++i)
        out[i] = static_cast<unsigned>(conv[i] % q);
    return poly_trim(std::move(out));
}

// x^(q^levels) mod f via iterated Frobenius powers
Poly frobenius_power(const Poly& start, unsigned q, const Poly& f, unsigned times) {
    Poly h = start;
    for (unsigned t = 0; t < times; ++t) {
        Poly r{1};
        Poly base = h;
        unsigned e = q;
        while (e) {
            if (e & 1) r = poly_mulmod(r, base, f, q);
            base = poly_mulmod(base, base, f, q);
            e >>= 1;
        }
        h = r;
    }
    return h;
}

unsigned mod_inv_u(unsigned c, unsigned q) {
    unsigned r = 1, b = c % q, e = q - 2;
    while (e) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& b, unsigned q) {
    a = poly_trim(std::move(a));
    Poly bb = poly_trim(b);
    if (bb.empty()) throw Error(errc::division_by_zero, "poly_mod by zero");
    unsigned lead_inv = mod_inv_u(bb.back(), q);
    while (a.size() >= bb.size()) {
        unsigned c = static_cast<unsigned>(std::uint64_t(a.back()) * lead_inv % q);
        std::size_t shift = a.size() - bb.size();
        for (std::size_t i = 0; i < bb.size(); ++i) {
            a[shift + i] = (a[shift + i] + c * (q - bb[i])) % q;
        }
        a = poly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, unsigned q) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool modulus_irreducible(const std::vector<unsigned>& f_in, unsigned q) {
    const unsigned n = static_cast<unsigned>(f_in.size()) - 1;
    if (n == 1) return true;
    Poly f(f_in.begin(), f_in.end());
    Poly x{0, 1};
    // x^{q^n} == x mod f
    Poly xq = frobenius_power(x, q, f, n);
    Poly diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + q - 1) % q;
    if (!poly_trim(diff).empty()) return false;
    // gcd(x^{q^{n/p}} - x, f) == 1 for every prime p | n
    for (auto [p, e] : factorize(n)) {
        (void)e;
        Poly h = frobenius_power(x, q, f, n / static_cast<unsigned>(p));
        Poly d = h;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + q - 1) % q;
        Poly g = poly_gcd(f, poly_trim(std::move(d)), q);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

bool poly_irreducible(const std::vector<unsigned>& monic_coeffs, unsigned q) {
    if (monic_coeffs.size() < 2 || monic_coeffs.back() != 1)
        throw Error(errc::invalid_argument, "need a monic polynomial of degree >= 1");
    if (monic_coeffs.size() > 2 && monic_coeffs.front() == 0) return false; // x divides
    return modulus_irreducible(monic_coeffs, q);
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > cap / base) return 0;
        v *= base;
    }
    return v;
}

} // namespace

Field Field::make(unsigned q, unsigned n, std::optional<std::vector<unsigned>> modulus,
                  FieldOptions opts) {
    if (!is_prime(q)) throw Error(errc::non_prime, "base field size " + std::to_string(q));
    if (n < 1) throw Error(errc::invalid_argument, "extension degree must be >= 1");
    constexpr std::uint64_t size_cap = std::uint64_t(1) << 32;
    std::uint64_t size = checked_pow(q, n, size_cap);
    if (size == 0)
        throw Error(errc::invalid_argument, "field larger than 2^32 elements not supported");

    auto d = std::make_shared<detail::FieldData>();
    d->spec.q = q;
    d->spec.n = n;
    d->opts = opts;
    d->size = size;
    d->order = size - 1;
    d->qpow.resize(n + 1);
    d->qpow[0] = 1;
    for (unsigned i = 1; i <= n; ++i) d->qpow[i] = d->qpow[i - 1] * q;
    d->order_factors = factorize(d->order);

    auto install_modulus = [&](const std::vector<unsigned>& f) {
        d->spec.modulus = f;
        if (q == 2) {
            d->fmask = 0;
            for (unsigned i = 0; i <= n; ++i)
                if (f[i]) d->fmask |= std::uint64_t(1) << i;
        }
        // x^{n+i} mod f for i = 0..n-2, packed (convolution tail folding)
        d->xpow_red.assign(n, 0);
        std::vector<std::uint8_t> cur(n, 0);
        for (unsigned i = 0; i < n; ++i) cur[i] = static_cast<std::uint8_t>((q - f[i]) % q);
        d->xpow_red[0] = d->pack(cur.data()); // x^n mod f
        std::vector<std::uint8_t> red0(cur);
        for (unsigned i = 1; i < n; ++i) {
            // multiply by x: shift digits, fold the top one
            std::uint8_t top = cur[n - 1];
            for (unsigned j = n; j-- > 1;) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (top) {
                for (unsigned j = 0; j < n; ++j)
                    cur[j] = static_cast<std::uint8_t>((cur[j] + top * red0[j]) % q);
            }
            d->xpow_red[i] = d->pack(cur.data());
        }
    };

    auto alpha_packed = [&]() -> std::uint64_t {
        if (n == 1) return (q - d->spec.modulus[0] % q) % q; // x = -c0
        return q; // digits (0,1,0,...)
    };

    auto alpha_primitive = [&]() -> bool {
        std::uint64_t a = alpha_packed();
        if (a == 0) return false;
        if (d->pow_packed(a, d->order) != 1) return false;
        for (auto [p, e] : d->order_factors) {
            (void)e;
            if (d->pow_packed(a, d->order / p) == 1) return false;
        }
        return true;
    };

    auto validate_given = [&](const std::vector<unsigned>& f) {
        if (f.size() != n + 1) throw Error(errc::wrong_length, "modulus needs n+1 coefficients");
        for (unsigned c : f)
            if (c >= q) throw Error(errc::invalid_argument, "modulus coefficient out of range");
        if (f[n] != 1) throw Error(errc::invalid_argument, "modulus must be monic");
        if (f[0] == 0)
            throw Error(errc::reducible, "constant term zero (x divides the modulus)");
        if (!modulus_irreducible(f, q))
            throw Error(errc::reducible, "modulus is not irreducible over F_q");
    };

    if (modulus) {
        validate_given(*modulus);
        install_modulus(*modulus);
        d->primitive = alpha_primitive();
        if (!d->primitive && !opts.non_primitive_allowed)
            throw Error(errc::not_primitive, "modulus is irreducible but not primitive");
    } else {
        // lexicographically smallest primitive modulus, coefficients compared
        // low degree first
        std::vector<unsigned> f(n + 1, 0);
        f[n] = 1;
        bool found = false;
        while (!found) {
            if (f[0] != 0 && modulus_irreducible(f, q)) {
                install_modulus(f);
                if (alpha_primitive()) {
                    d->primitive = true;
                    found = true;
                    break;
                }
            }
            // next candidate in lexicographic order: c_{n-1} varies fastest
            int pos = static_cast<int>(n) - 1;
            while (pos >= 0) {
                if (++f[pos] < q) break;
                f[pos] = 0;
                --pos;
            }
            if (pos < 0)
                throw Error(errc::internal_inconsistency, "no primitive modulus found");
        }
    }

    if (d->primitive && d->size <= opts.table_threshold) {
        d->log_tbl.assign(d->size, 0xffffffffu);
        d->antilog_tbl.assign(d->order, 0);
        std::uint64_t v = 1;
        for (std::uint64_t i = 0; i < d->order; ++i) {
            d->antilog_tbl[i] = static_cast<std::uint32_t>(v);
            d->log_tbl[v] = static_cast<std::uint32_t>(i);
            v = d->mul_by_alpha(v);
        }
        if (v != 1) throw Error(errc::internal_inconsistency, "table walk did not close");
    }

    return Field(std::move(d));
}

const FieldSpec& Field::spec() const { return d_->spec; }
unsigned Field::q() const { return d_->spec.q; }
unsigned Field::n() const { return d_->spec.n; }
std::uint64_t Field::size() const { return d_->size; }
std::uint64_t Field::group_order() const { return d_->order; }
bool Field::primitive() const { return d_->primitive; }
bool Field::has_tables() const { return !d_->log_tbl.empty(); }

FieldElement Field::alpha() const {
    if (n() == 1) return {(q() - d_->spec.modulus[0] % q()) % q()};
    return {q()};
}

FieldElement Field::element(std::uint64_t packed) const {
    if (packed >= d_->size) throw Error(errc::invalid_argument, "packed value out of range");
    return {packed};
}

unsigned Field::digit(FieldElement a, unsigned i) const {
    return static_cast<unsigned>(a.v / d_->qpow[i] % q());
}

std::vector<std::uint8_t> Field::phi(FieldElement a) const {
    std::vector<std::uint8_t> out(n());
    d_->unpack(a.v, out.data());
    return out;
}

FieldElement Field::phi_inv(std::span<const std::uint8_t> coords) const {
    if (coords.size() != n()) throw Error(errc::wrong_length, "coordinate vector length");
    std::uint64_t v = 0;
    for (unsigned i = n(); i-- > 0;) {
        if (coords[i] >= q()) throw Error(errc::invalid_argument, "digit out of range");
        v = v * q() + coords[i];
    }
    return {v};
}

Matrix Field::phi_row(FieldElement a) const {
    Matrix m(1, n(), q());
    d_->unpack(a.v, m.row(0).data());
    return m;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    return {d_->add_packed(a.v, b.v)};
}

FieldElement Field::neg(FieldElement a) const {
    if (q() == 2) return a;
    std::uint8_t dg[64];
    d_->unpack(a.v, dg);
    for (unsigned i = 0; i < n(); ++i) dg[i] = static_cast<std::uint8_t>((q() - dg[i]) % q());
    return {d_->pack(dg)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    return {d_->mul_packed(a.v, b.v)};
}

FieldElement Field::scalar_mul(unsigned c, FieldElement a) const {
    c %= q();
    if (c == 0) return {0};
    if (c == 1) return a;
    std::uint8_t dg[64];
    d_->unpack(a.v, dg);
    for (unsigned i = 0; i < n(); ++i) dg[i] = static_cast<std::uint8_t>(dg[i] * c % q());
    return {d_->pack(dg)};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.v == 0) throw Error(errc::division_by_zero, "inv(0)");
    if (has_tables()) {
        std::uint64_t e = d_->log_tbl[a.v];
        return {d_->antilog_tbl[(d_->order - e) % d_->order]};
    }
    return {d_->pow_packed(a.v, d_->order - 1)};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    return {d_->pow_packed(a.v, e)};
}

FieldElement Field::alpha_pow(std::uint64_t e) const {
    e %= d_->order ? d_->order : 1;
    if (has_tables()) return {d_->antilog_tbl[e]};
    return pow(alpha(), e);
}

std::uint64_t Field::discrete_log(FieldElement a) const {
    if (a.v == 0) throw Error(errc::log_of_zero, "discrete_log(0)");
    if (!primitive()) throw Error(errc::not_primitive, "discrete_log needs a primitive field");
    if (has_tables()) return d_->log_tbl[a.v];
    const auto& d = *d_;
    std::call_once(d.bsgs_once, [&] {
        std::uint64_t m = 1;
        while (m * m < d.order) ++m;
        d.bsgs_m = m;
        d.bsgs_baby.reserve(static_cast<std::size_t>(m));
        std::uint64_t cur = 1, al = alpha().v;
        for (std::uint64_t j = 0; j < m; ++j) {
            d.bsgs_baby.emplace(cur, static_cast<std::uint32_t>(j));
            cur = d.mul_packed(cur, al);
        }
        d.bsgs_giant = d.pow_packed(al, d.order - m % d.order);
    });
    std::uint64_t g = a.v;
    for (std::uint64_t i = 0; i <= d.bsgs_m; ++i) {
        auto it = d.bsgs_baby.find(g);
        if (it != d.bsgs_baby.end()) return (i * d.bsgs_m + it->second) % d.order;
        g = d.mul_packed(g, d.bsgs_giant);
    }
    throw Error(errc::internal_inconsistency, "baby-step/giant-step failed");
}

std::uint64_t Field::element_order(FieldElement a) const {
    if (a.v == 0) throw Error(errc::order_of_zero, "element_order(0)");
    std::uint64_t o = d_->order;
    for (auto [p, e] : d_->order_factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (o % p == 0 && d_->pow_packed(a.v, o / p) == 1)
                o /= p;
            else
                break;
        }
    }
    return o;
}

FieldElement Field::subfield_generator(unsigned r) const {
    if (r == 0 || n() % r != 0)
        throw Error(errc::invalid_subfield_degree, std::to_string(r) + " does not divide n");
    if (!primitive())
        throw Error(errc::not_primitive, "subfield_generator needs a primitive field");
    std::uint64_t sub_order = d_->qpow[r] - 1;
    return alpha_pow(d_->order / sub_order);
}

MinimalPolynomial Field::minimal_polynomial(FieldElement a, unsigned base_degree) const {
    if (base_degree == 0 || n() % base_degree != 0)
        throw Error(errc::invalid_subfield_degree,
                    std::to_string(base_degree) + " does not divide n");
    const std::uint64_t qr = d_->qpow[base_degree];
    std::vector<FieldElement> conj{a};
    FieldElement c = pow(a, qr);
    while (c != a) {
        conj.push_back(c);
        c = pow(c, qr);
    }
    // product of (x - c) over conjugates, coefficients in the big field
    std::vector<FieldElement> poly{one()};
    for (FieldElement cc : conj) {
        std::vector<FieldElement> next(poly.size() + 1, zero());
        FieldElement negc = neg(cc);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = add(next[i + 1], poly[i]);
            next[i] = add(next[i], mul(poly[i], negc));
        }
        poly = std::move(next);
    }
    for (FieldElement coeff : poly) {
        if (pow(coeff, qr) != coeff)
            throw Error(errc::internal_inconsistency, "mipo coefficient not in the subfield");
    }
    return MinimalPolynomial{base_degree, std::move(poly)};
}

std::vector<unsigned> Field::minimal_polynomial_base_coeffs(const MinimalPolynomial& p) const {
    if (p.base_degree != 1)
        throw Error(errc::invalid_argument, "base coefficients need base_degree == 1");
    std::vector<unsigned> out;
    out.reserve(p.coeffs.size());
    for (FieldElement c : p.coeffs) {
        // elements of F_q are the constants: packed value == digit 0
        out.push_back(static_cast<unsigned>(c.v));
    }
    return out;
}

Matrix Field::companion_matrix() const {
    const unsigned nn = n(), qq = q();
    Matrix m(nn, nn, qq);
    for (unsigned i = 0; i + 1 < nn; ++i) m(i, i + 1) = 1;
    for (unsigned j = 0; j < nn; ++j)
        m(nn - 1, j) = static_cast<std::uint8_t>((qq - d_->spec.modulus[j] % qq) % qq);
    return m;
}

const std::vector<std::pair<std::uint64_t, unsigned>>& Field::group_order_factors() const {
    return d_->order_factors;
}

std::vector<unsigned> Field::subfield_degrees() const {
    std::vector<unsigned> out;
    for (unsigned r = 1; r <= n(); ++r)
        if (n() % r == 0) out.push_back(r);
    return out;
}

bool same_field(const Field& a, const Field& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->spec == b.d_->spec;
}

} // namespace orbitcodes
