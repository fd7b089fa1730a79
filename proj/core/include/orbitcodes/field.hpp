#ifndef ORBITCODES_FIELD_HPP
#define ORBITCODES_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "orbitcodes/errors.hpp"
#include "orbitcodes/matrix.hpp"

namespace orbitcodes {

/// Element of an extension field F_{q^n}. The value packs the coordinate
/// digits a_0..a_{n-1} (element = sum a_i alpha^i) in mixed radix q, so it
/// doubles as a perfect table index: v = sum a_i q^i < q^n.
struct FieldElement {
    std::uint64_t v = 0;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Construction parameters of F_{q^n}: prime base size q, extension degree n,
/// and the monic degree-n modulus with coefficients listed low degree first.
struct FieldSpec {
    unsigned q = 2;
    unsigned n = 1;
    std::vector<unsigned> modulus; // length n+1, modulus[n] == 1

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct FieldOptions {
    /// Accept irreducible but non-primitive moduli. Operations that need a
    /// primitive alpha (discrete logs, subfield generators) then throw.
    bool non_primitive_allowed = false;
    /// Log/antilog tables are built when q^n <= table_threshold; above it
    /// multiplication is polynomial arithmetic and discrete logs use
    /// baby-step/giant-step.
    std::uint64_t table_threshold = std::uint64_t(1) << 22;
};

struct MinimalPolynomial {
    unsigned base_degree = 1;          // r: coefficients lie in F_{q^r}
    std::vector<FieldElement> coeffs;  // low degree first, monic
    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

namespace detail {
struct FieldData;
}

/// Exact arithmetic in F_{q^n} for prime q. Immutable after construction and
/// cheap to copy (shared internal state), safe to use from multiple threads.
///
/// Conventions follow the row-vector model: phi maps sum a_i alpha^i to the
/// row (a_0,...,a_{n-1}) and multiplication by alpha corresponds to right
/// multiplication by the companion matrix of the modulus.
class Field {
  public:
    Field() = default;

    /// Builds F_{q^n}. When no modulus is given, the lexicographically
    /// smallest primitive monic polynomial of degree n is selected
    /// (coefficients compared low degree first). A supplied modulus is
    /// validated: it must be irreducible, and primitive unless
    /// opts.non_primitive_allowed is set.
    static Field make(unsigned q, unsigned n,
                      std::optional<std::vector<unsigned>> modulus = std::nullopt,
                      FieldOptions opts = {});

    bool valid() const { return d_ != nullptr; }
    const FieldSpec& spec() const;
    unsigned q() const;
    unsigned n() const;
    std::uint64_t size() const;        // q^n
    std::uint64_t group_order() const; // q^n - 1
    bool primitive() const;
    bool has_tables() const;

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement alpha() const;
    FieldElement element(std::uint64_t packed) const; // validates packed < q^n

    // digit access (a_i of sum a_i alpha^i)
    unsigned digit(FieldElement a, unsigned i) const;
    std::vector<std::uint8_t> phi(FieldElement a) const;
    FieldElement phi_inv(std::span<const std::uint8_t> coords) const;
    Matrix phi_row(FieldElement a) const; // 1 x n

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement scalar_mul(unsigned c, FieldElement a) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    FieldElement alpha_pow(std::uint64_t e) const; // alpha^(e mod (q^n-1))

    /// Exponent b in [0, q^n-1) with alpha^b = a. Table lookup when tables
    /// exist, baby-step/giant-step otherwise. Requires a primitive field.
    std::uint64_t discrete_log(FieldElement a) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(FieldElement a) const;

    /// alpha^((q^n-1)/(q^r-1)), a generator of the subfield F_{q^r}.
    FieldElement subfield_generator(unsigned r) const;

    /// Monic minimal polynomial of a over the subfield F_{q^r}
    /// (product of x - a^(q^(r i)) over the distinct conjugates).
    MinimalPolynomial minimal_polynomial(FieldElement a, unsigned base_degree = 1) const;

    /// Coefficients as base field digits; only valid when base_degree == 1.
    std::vector<unsigned> minimal_polynomial_base_coeffs(const MinimalPolynomial& p) const;

    Matrix companion_matrix() const;

    /// Prime factorization of q^n - 1 as (prime, exponent) pairs.
    const std::vector<std::pair<std::uint64_t, unsigned>>& group_order_factors() const;

    /// Divisors of n in increasing order (candidate subfield degrees).
    std::vector<unsigned> subfield_degrees() const;

    friend bool same_field(const Field& a, const Field& b);

  private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

/// True when both fields were built from the same (q, n, modulus).
bool same_field(const Field& a, const Field& b);

bool is_prime(std::uint64_t v);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t v);
std::vector<std::uint64_t> divisors_ascending(std::uint64_t v);

/// Irreducibility of a monic polynomial over F_q (coefficients low degree
/// first, trailing coefficient 1).
bool poly_irreducible(const std::vector<unsigned>& monic_coeffs, unsigned q);

} // namespace orbitcodes

#endif
