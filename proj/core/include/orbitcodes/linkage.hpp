#ifndef ORBITCODES_LINKAGE_HPP
#define ORBITCODES_LINKAGE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orbitcodes/bigint.hpp"
#include "orbitcodes/orbit.hpp"

namespace orbitcodes {

/// Constant dimension code used as a building block of a linkage. Members
/// are k x n_i matrices of rank k and are NOT canonicalized: the linked code
/// depends on the chosen representatives, so the exact matrices matter.
///
/// Orbit-backed constituents keep the generator rows and scale them on
/// demand (member l = rows of U times beta^l), which keeps large orbits
/// addressable without materializing them.
class ConstituentCode {
  public:
    /// Explicit member list. All matrices must be k x n_cols of rank k.
    static ConstituentCode from_matrices(std::vector<Matrix> members, unsigned distance);

    /// Every member of an orbit code, lazily. The stated distance is taken
    /// as is (compute it with the distance module if unknown).
    static ConstituentCode from_orbit(const OrbitCode& code, unsigned distance);

    /// Subset {im(base M^l) : l in exponents} of the cyclic orbit of the
    /// given base matrix. When no distance is stated it is measured by the
    /// exhaustive pairwise check.
    static ConstituentCode from_orbit_subset(const Field& f, Matrix base,
                                             std::vector<std::uint64_t> exponents,
                                             std::optional<unsigned> distance = std::nullopt);

    std::uint64_t size() const;  // N_i
    std::size_t dim() const { return k_; }
    std::size_t length() const { return n_cols_; }
    unsigned q() const { return q_; }
    unsigned distance() const { return distance_; }

    Matrix member(std::uint64_t l) const;

    bool orbit_backed() const { return field_.valid(); }
    const Field& orbit_field() const { return field_; }
    std::uint64_t beta_log() const { return beta_log_; }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }
    const Matrix& base_matrix() const { return base_; }

    /// Exhaustive pairwise minimum distance of the members.
    unsigned measure_distance() const;

  private:
    ConstituentCode() = default;
    unsigned q_ = 2;
    std::size_t k_ = 0;
    std::size_t n_cols_ = 0;
    unsigned distance_ = 0;
    std::vector<Matrix> members_;          // explicit storage
    Field field_;                          // orbit-backed storage
    Matrix base_;                          //  rows of the generator
    std::uint64_t beta_log_ = 1;
    std::vector<std::uint64_t> exponents_; // empty = full orbit range
    std::uint64_t size_hint_ = 0;          // orbit size when exponents_ empty
};

/// Code produced by a linkage construction: block-concatenated members
/// indexed by tuples over the constituents (index 0 = zero block). Members
/// are materialized lazily; the cardinality is exact (BigUint).
class LinkedCode {
  public:
    enum class Kind { two, many, cyclic };

    Kind kind() const { return kind_; }
    const std::vector<ConstituentCode>& constituents() const { return constituents_; }
    std::size_t dim() const { return k_; }
    std::size_t length() const { return length_; }
    unsigned q() const { return q_; }
    const BigUint& cardinality() const { return cardinality_; }
    /// min over constituent distances, as guaranteed by the construction.
    unsigned distance() const { return distance_; }

    bool materializable(std::uint64_t cap = default_materialize_cap) const;
    std::vector<Matrix> materialize(std::uint64_t cap = default_materialize_cap) const;

    /// Member for an index tuple (l_1,...,l_t), l_i in [0, N_i], not all
    /// zero; l_i = 0 contributes a zero block, else member l_i - 1.
    Matrix member_from_tuple(std::span<const std::uint64_t> tuple) const;

    /// For the cyclic construction, the mixed part uses every power of the
    /// second field's primitive element, not just the chosen exponents.
    std::uint64_t cyclic_power_range() const { return cyclic_power_range_; }

    static constexpr std::uint64_t default_materialize_cap = 1'000'000;

    friend LinkedCode link_two(const ConstituentCode& c1, const ConstituentCode& c2);
    friend LinkedCode link_many(std::vector<ConstituentCode> cs);
    friend LinkedCode link_cyclic(const ConstituentCode& c1, const Field& f2, const Matrix& u2,
                                  std::vector<std::uint64_t> exponents);

  private:
    LinkedCode() = default;
    Kind kind_ = Kind::two;
    unsigned q_ = 2;
    std::size_t k_ = 0;
    std::size_t length_ = 0;
    BigUint cardinality_;
    unsigned distance_ = 0;
    std::vector<ConstituentCode> constituents_;
    std::uint64_t cyclic_power_range_ = 0; // q^{n_2} - 1 for Kind::cyclic
};

/// Two-constituent linkage: N = N1 + N2 + N1 N2, d = min{d1, d2}.
LinkedCode link_two(const ConstituentCode& c1, const ConstituentCode& c2);

/// t-fold linkage: N = prod(N_i + 1) - 1, d = min d_i.
LinkedCode link_many(std::vector<ConstituentCode> cs);

/// Cyclic-enhanced linkage: the second constituent is the orbit subset
/// {im(u2 M^l) : l in exponents} in F_{q^{n2}}, and the mixed members range
/// over ALL powers m in [0, q^{n2}-1) regardless of stabilizers, giving
/// N = N1 + N2 + (q^{n2}-1) N1 and d = min{d1, d2}.
LinkedCode link_cyclic(const ConstituentCode& c1, const Field& f2, const Matrix& u2,
                       std::vector<std::uint64_t> exponents);

/// Exhaustive pairwise minimum distance over the materialized members.
unsigned verified_min_distance(const LinkedCode& code, unsigned jobs = 1,
                               std::uint64_t cap = LinkedCode::default_materialize_cap);

struct UnionOrbitReport {
    bool applicable = false; // hypotheses held (q = 2, full primitive orbits, gcd 1)
    std::string reason;      // why not, when !applicable
    bool closed = false;     // member set closed under diag(M_1,...,M_t)
    std::uint64_t orbit_count = 0; // expected 2^t - 1
    std::uint64_t group_order = 0; // prod (2^{n_i} - 1)
};

/// Checks that a linked code built from full primitive orbit codes over F_2
/// with coprime lengths is a union of orbits of the cyclic group generated
/// by diag(M_1,...,M_t). Reports, never concludes impossibility.
UnionOrbitReport verify_union_of_orbits(const LinkedCode& code);

struct CardinalityBound {
    BigUint bound;        // (q^n - 1)/(q - 1)
    bool holds = false;   // |C| <= bound
    bool equality = false;
    bool equality_expected = false; // q == 2 and every best friend degree 1
};

/// |C| <= (q^n-1)/(q-1) for linkages of full cyclic orbit codes, with
/// equality iff q = 2 and every constituent has best friend F_2. The friend
/// degrees are recomputed from the orbit-backed constituents.
CardinalityBound check_cardinality_bound(const LinkedCode& code);

/// Selects orbit members pairwise intersecting trivially. With an accept
/// list, exactly those exponents are taken and validated (not_partial_spread
/// on a collision); otherwise exponents are scanned in increasing order and
/// greedily accepted. The result carries distance 2k.
ConstituentCode greedy_partial_spread(const OrbitCode& orbit,
                                      std::optional<std::vector<std::uint64_t>> accept_list =
                                          std::nullopt);

} // namespace orbitcodes

#endif
