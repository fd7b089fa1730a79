#include "orbitcodes/subspace.hpp"

#include <algorithm>

namespace orbitcodes {

namespace {

void require_same_field(const Subspace& a, const Subspace& b) {
    if (!same_field(a.field(), b.field()))
        throw Error(errc::field_mismatch, "operands live in different fields");
}

} // namespace

Subspace Subspace::zero(const Field& f) { return Subspace(f, Matrix(0, f.n(), f.q())); }

Subspace Subspace::whole(const Field& f) { return Subspace(f, Matrix::identity(f.n(), f.q())); }

Subspace Subspace::subfield(const Field& f, unsigned r) {
    FieldElement g = f.subfield_generator(r); // validates r | n and primitivity
    std::vector<FieldElement> gens;
    FieldElement cur = f.one();
    for (unsigned i = 0; i < r; ++i) {
        gens.push_back(cur);
        cur = f.mul(cur, g);
    }
    return from_generators(f, gens);
}

Subspace Subspace::from_generators(const Field& f, std::span<const FieldElement> gens) {
    if (gens.empty()) throw Error(errc::empty_generators, "no generators given");
    Matrix m(gens.size(), f.n(), f.q());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto digits = f.phi(gens[i]);
        std::copy(digits.begin(), digits.end(), m.row(i).begin());
    }
    rref_in_place(m);
    return Subspace(f, std::move(m));
}

Subspace Subspace::from_matrix(const Field& f, Matrix rows) {
    if (rows.cols() != f.n()) throw Error(errc::wrong_length, "row width != n");
    if (rows.q() != f.q()) throw Error(errc::field_mismatch, "matrix over a different prime");
    rref_in_place(rows);
    return Subspace(f, std::move(rows));
}

bool Subspace::contains(FieldElement e) const {
    // reduce phi(e) against the RREF basis
    auto v = field_.phi(e);
    const unsigned q = field_.q();
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // pivot of row i
        std::size_t p = 0;
        while (p < basis_.cols() && basis_(i, p) == 0) ++p;
        if (p == basis_.cols()) continue;
        unsigned c = v[p];
        if (!c) continue;
        for (std::size_t j = p; j < basis_.cols(); ++j)
            v[j] = static_cast<std::uint8_t>((v[j] + c * (q - basis_(i, j))) % q);
    }
    return std::all_of(v.begin(), v.end(), [](std::uint8_t d) { return d == 0; });
}

bool Subspace::contains_subspace(const Subspace& other) const {
    require_same_field(*this, other);
    return rank_of_stack(basis_, other.basis()) == dim();
}

std::vector<FieldElement> Subspace::basis_elements() const {
    std::vector<FieldElement> out;
    out.reserve(basis_.rows());
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(field_.phi_inv(basis_.row(i)));
    return out;
}

std::vector<FieldElement> Subspace::nonzero_elements() const {
    const unsigned q = field_.q();
    const std::size_t k = dim();
    std::vector<FieldElement> basis = basis_elements();
    std::vector<FieldElement> out;
    if (k == 0) return out;
    std::vector<unsigned> coeff(k, 0);
    std::vector<FieldElement> partial(k + 1, field_.zero()); // partial[i] = sum of first i terms
    // odometer over coefficient vectors, skipping the all-zero one
    while (true) {
        std::size_t pos = k;
        while (pos > 0 && coeff[pos - 1] == q - 1) {
            coeff[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
        ++coeff[pos - 1];
        for (std::size_t i = pos - 1; i < k; ++i)
            partial[i + 1] =
                field_.add(partial[i], field_.scalar_mul(coeff[i], basis[i]));
        out.push_back(partial[k]);
    }
    return out;
}

std::size_t Subspace::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(field_.q());
    mix(field_.n());
    mix(basis_.rows());
    for (std::uint8_t b : basis_.data()) mix(b);
    return h;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return same_field(a.field_, b.field_) && a.basis_ == b.basis_;
}

Subspace intersection(const Subspace& v, const Subspace& w) {
    require_same_field(v, w);
    // Zassenhaus: rows [b | b] for b in V, [b | 0] for b in W; after
    // eliminating the left half, rows with zero left half carry an
    // intersection basis on the right.
    const Field& f = v.field();
    const std::size_t n = f.n();
    Matrix big(0, 2 * n, f.q());
    std::vector<std::uint8_t> row(2 * n, 0);
    for (std::size_t i = 0; i < v.dim(); ++i) {
        auto r = v.basis().row(i);
        std::copy(r.begin(), r.end(), row.begin());
        std::copy(r.begin(), r.end(), row.begin() + n);
        big.append_row(row);
    }
    std::fill(row.begin() + n, row.end(), 0);
    for (std::size_t i = 0; i < w.dim(); ++i) {
        auto r = w.basis().row(i);
        std::copy(r.begin(), r.end(), row.begin());
        big.append_row(row);
    }
    rref_in_place(big);
    Matrix inter(0, n, f.q());
    for (std::size_t i = 0; i < big.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = big(i, j) == 0;
        if (!left_zero) continue;
        inter.append_row(big.row(i).subspan(n));
    }
    return Subspace::from_matrix(f, std::move(inter));
}

Subspace sum(const Subspace& v, const Subspace& w) {
    require_same_field(v, w);
    return Subspace::from_matrix(v.field(), vconcat(v.basis(), w.basis()));
}

unsigned subspace_distance(const Subspace& v, const Subspace& w) {
    require_same_field(v, w);
    std::size_t r = rank_of_stack(v.basis(), w.basis()); // dim(V + W)
    return static_cast<unsigned>(2 * r - v.dim() - w.dim());
}

Subspace dual(const Subspace& v) {
    if (v.is_zero()) return Subspace::whole(v.field());
    return Subspace::from_matrix(v.field(), nullspace(v.basis()));
}

Subspace scalar_multiply(const Subspace& v, FieldElement gamma) {
    if (gamma.v == 0) throw Error(errc::zero_scalar, "scalar_multiply by zero");
    const Field& f = v.field();
    if (v.is_zero()) return v;
    Matrix m(v.dim(), f.n(), f.q());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        FieldElement e = f.mul(f.phi_inv(v.basis().row(i)), gamma);
        auto digits = f.phi(e);
        std::copy(digits.begin(), digits.end(), m.row(i).begin());
    }
    return Subspace::from_matrix(f, std::move(m));
}

std::pair<Subspace, FieldElement> normalize_contains_one(const Subspace& v) {
    if (v.is_zero()) throw Error(errc::zero_space, "cannot normalize the zero space");
    const Field& f = v.field();
    if (v.contains_one()) return {v, f.one()};
    // u = nonzero element with lexicographically smallest phi vector
    FieldElement best{};
    std::vector<std::uint8_t> best_digits;
    for (FieldElement e : v.nonzero_elements()) {
        auto digits = f.phi(e);
        if (best_digits.empty() || digits < best_digits) {
            best_digits = std::move(digits);
            best = e;
        }
    }
    FieldElement u_inv = f.inv(best);
    return {scalar_multiply(v, u_inv), u_inv};
}

bool is_space_over(const Subspace& v, unsigned r) {
    FieldElement g = v.field().subfield_generator(r); // validates r
    if (v.is_zero()) return true;
    return scalar_multiply(v, g) == v;
}

} // namespace orbitcodes
