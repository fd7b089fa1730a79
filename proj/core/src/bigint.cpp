#include "orbitcodes/bigint.hpp"

#include <algorithm>

#include "orbitcodes/errors.hpp"

namespace orbitcodes {

BigUint::BigUint(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow(std::uint64_t base, unsigned exp) {
    BigUint r(1);
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

BigUint& BigUint::operator+=(std::uint64_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
        std::uint64_t s = limbs_[i] + (carry & 0xffffffffu);
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = (carry >> 32) + (s >> 32);
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
    return *this;
}

BigUint& BigUint::operator-=(std::uint64_t v) {
    std::uint64_t borrow = v;
    for (std::size_t i = 0; borrow && i < limbs_.size(); ++i) {
        std::uint64_t sub = borrow & 0xffffffffu;
        if (limbs_[i] >= sub) {
            limbs_[i] -= static_cast<std::uint32_t>(sub);
            borrow >>= 32;
        } else {
            limbs_[i] = static_cast<std::uint32_t>((std::uint64_t(1) << 32) + limbs_[i] - sub);
            borrow = (borrow >> 32) + 1;
        }
    }
    if (borrow) throw Error(errc::invalid_argument, "BigUint underflow");
    trim();
    return *this;
}

BigUint& BigUint::operator*=(std::uint64_t v) {
    if (v == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    if (v >> 32) {
        BigUint big(v);
        return *this *= big;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t p = std::uint64_t(limb) * v + carry;
        limb = static_cast<std::uint32_t>(p);
        carry = p >> 32;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
    return *this;
}

BigUint& BigUint::operator*=(const BigUint& v) {
    if (limbs_.empty() || v.limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + v.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < v.limbs_.size(); ++j) {
            std::uint64_t p = std::uint64_t(limbs_[i]) * v.limbs_[j] + out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(p);
            carry = p >> 32;
        }
        std::size_t pos = i + v.limbs_.size();
        while (carry) {
            std::uint64_t p = out[pos] + carry;
            out[pos] = static_cast<std::uint32_t>(p);
            carry = p >> 32;
            ++pos;
        }
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

std::uint32_t BigUint::divmod_small(std::uint32_t divisor) {
    if (divisor == 0) throw Error(errc::division_by_zero, "BigUint divmod by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::uint64_t BigUint::as_u64() const {
    if (!fits_u64()) throw Error(errc::invalid_argument, "BigUint exceeds 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = std::uint64_t(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint32_t d = tmp.divmod_small(1000000000u);
        std::string chunk = std::to_string(d);
        if (!tmp.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
        out.insert(0, chunk);
    }
    return out;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

} // namespace orbitcodes
