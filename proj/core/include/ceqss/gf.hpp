#pragma once

#include <cstdint>

#include "ceqss/errors.hpp"

namespace ceqss {

using u64 = std::uint64_t;

bool is_prime(u64 n);
u64 next_prime_above(u64 n);

u64 mod_add(u64 a, u64 b, u64 q);
u64 mod_sub(u64 a, u64 b, u64 q);
u64 mod_neg(u64 a, u64 q);
u64 mod_mul(u64 a, u64 b, u64 q);
u64 mod_pow(u64 base, u64 exp, u64 q);

// Multiplicative inverse by extended Euclid. Throws ZeroInverse on a == 0.
u64 mod_inverse(u64 a, u64 q);

// One element of F_q. The modulus travels with the value; combining
// elements from different fields is a hard error.
class FieldElement {
public:
    FieldElement(u64 value, u64 q);

    u64 value() const { return value_; }
    u64 modulus() const { return q_; }

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator/(const FieldElement& other) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(u64 exp) const;

    bool operator==(const FieldElement& other) const {
        return value_ == other.value_ && q_ == other.q_;
    }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

private:
    u64 value_;
    u64 q_;

    void require_same_field(const FieldElement& other) const;
};

} // namespace ceqss
