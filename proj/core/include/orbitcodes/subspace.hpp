#ifndef ORBITCODES_SUBSPACE_HPP
#define ORBITCODES_SUBSPACE_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "orbitcodes/field.hpp"
#include "orbitcodes/matrix.hpp"

namespace orbitcodes {

/// F_q-subspace of F_{q^n}, stored as its unique reduced row echelon basis
/// (rows are phi coordinates). Two subspaces are equal iff their canonical
/// bases coincide. The zero space (k = 0, no rows) is a valid value.
class Subspace {
  public:
    Subspace() = default;

    static Subspace zero(const Field& f);
    static Subspace whole(const Field& f);
    /// The subfield F_{q^r} viewed as an F_q-subspace. Requires primitive f.
    static Subspace subfield(const Field& f, unsigned r);
    static Subspace from_generators(const Field& f, std::span<const FieldElement> gens);
    /// Canonicalizes arbitrary spanning rows (phi coordinates).
    static Subspace from_matrix(const Field& f, Matrix rows);

    const Field& field() const { return field_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return field_.n(); }
    const Matrix& basis() const { return basis_; }

    bool is_zero() const { return basis_.rows() == 0; }
    bool contains(FieldElement e) const;
    bool contains_one() const { return contains(field_.one()); }
    bool contains_subspace(const Subspace& other) const;

    /// Basis rows as field elements (phi_inv of each row).
    std::vector<FieldElement> basis_elements() const;
    /// All q^k - 1 nonzero elements.
    std::vector<FieldElement> nonzero_elements() const;

    std::size_t hash() const;

    friend bool operator==(const Subspace& a, const Subspace& b);

  private:
    Subspace(Field f, Matrix rref_basis) : field_(std::move(f)), basis_(std::move(rref_basis)) {}
    Field field_;
    Matrix basis_; // k x n, RREF
};

Subspace intersection(const Subspace& v, const Subspace& w);
Subspace sum(const Subspace& v, const Subspace& w);

/// dim V + dim W - 2 dim(V cap W); always even and non-negative.
unsigned subspace_distance(const Subspace& v, const Subspace& w);

/// Orthogonal complement under the standard dot product.
Subspace dual(const Subspace& v);

/// Canonical form of {v gamma : v in V}; gamma must be nonzero.
Subspace scalar_multiply(const Subspace& v, FieldElement gamma);

/// Returns (V u^{-1}, u^{-1}) where u is the element of V whose phi vector is
/// lexicographically smallest among nonzero elements; the result contains 1.
/// If 1 is already in V, returns (V, 1).
std::pair<Subspace, FieldElement> normalize_contains_one(const Subspace& v);

/// True iff V g = V for g = subfield_generator(r), i.e. V is an
/// F_{q^r}-vector space. r must divide n.
bool is_space_over(const Subspace& v, unsigned r);

} // namespace orbitcodes

template <> struct std::hash<orbitcodes::Subspace> {
    std::size_t operator()(const orbitcodes::Subspace& s) const noexcept { return s.hash(); }
};

#endif
