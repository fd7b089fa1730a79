#ifndef ORBITCODES_BIGINT_HPP
#define ORBITCODES_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace orbitcodes {

/// Unsigned big integer, just large enough for code cardinalities such as
/// 2^195 - 1. Little-endian 32-bit limbs, no negative values.
class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    static BigUint pow(std::uint64_t base, unsigned exp);

    BigUint& operator+=(std::uint64_t v);
    BigUint& operator-=(std::uint64_t v); // underflow throws
    BigUint& operator*=(std::uint64_t v);
    BigUint& operator*=(const BigUint& v);

    /// Divides in place, returns the remainder. Divisor must be nonzero.
    std::uint32_t divmod_small(std::uint32_t divisor);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t as_u64() const; // throws if too large

    std::string to_string() const; // decimal

    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);
    friend bool operator==(const BigUint& a, const BigUint& b) = default;

  private:
    void trim();
    std::vector<std::uint32_t> limbs_; // little endian, no trailing zero limbs
};

inline BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }
inline BigUint operator+(BigUint a, std::uint64_t b) { return a += b; }
inline BigUint operator-(BigUint a, std::uint64_t b) { return a -= b; }

} // namespace orbitcodes

#endif
