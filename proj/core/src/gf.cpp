#include "ceqss/gf.hpp"

namespace ceqss {

namespace {

using u128 = unsigned __int128;

u64 mulmod_wide(u64 a, u64 b, u64 q) {
    return static_cast<u64>((u128)a * b % q);
}

// Deterministic Miller-Rabin witness set for 64-bit inputs.
constexpr u64 kMrWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_wide(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : kMrWitnesses) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

u64 next_prime_above(u64 n) {
    u64 c = n + 1;
    if (c <= 2) return 2;
    if ((c & 1) == 0) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

u64 mod_add(u64 a, u64 b, u64 q) {
    a %= q;
    b %= q;
    u64 s = a + b; // q < 2^63 is enforced at field construction, no overflow
    return s >= q ? s - q : s;
}

u64 mod_sub(u64 a, u64 b, u64 q) {
    a %= q;
    b %= q;
    return a >= b ? a - b : a + q - b;
}

u64 mod_neg(u64 a, u64 q) {
    a %= q;
    return a == 0 ? 0 : q - a;
}

u64 mod_mul(u64 a, u64 b, u64 q) {
    a %= q;
    b %= q;
    if (q <= 0xFFFFFFFFull) return (a * b) % q;
    return mulmod_wide(a, b, q);
}

u64 mod_pow(u64 base, u64 exp, u64 q) {
    base %= q;
    u64 acc = 1 % q;
    while (exp > 0) {
        if (exp & 1) acc = mod_mul(acc, base, q);
        base = mod_mul(base, base, q);
        exp >>= 1;
    }
    return acc;
}

u64 mod_inverse(u64 a, u64 q) {
    a %= q;
    if (a == 0) throw ZeroInverse("no inverse of 0 in F_" + std::to_string(q));
    // extended Euclid on (a, q); signs tracked via the standard iteration
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(q), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw ZeroInverse("argument not invertible mod " + std::to_string(q));
    if (t < 0) t += static_cast<std::int64_t>(q);
    return static_cast<u64>(t);
}

FieldElement::FieldElement(u64 value, u64 q) : value_(value % (q ? q : 1)), q_(q) {
    if (q < 2 || q >= (1ull << 63) || !is_prime(q)) {
        throw InvalidPrime("modulus " + std::to_string(q) + " is not an odd-word prime");
    }
}

void FieldElement::require_same_field(const FieldElement& other) const {
    if (q_ != other.q_) {
        throw DimensionMismatch("field mismatch: F_" + std::to_string(q_) + " vs F_" +
                                std::to_string(other.q_));
    }
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same_field(other);
    return {mod_add(value_, other.value_, q_), q_};
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    require_same_field(other);
    return {mod_sub(value_, other.value_, q_), q_};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same_field(other);
    return {mod_mul(value_, other.value_, q_), q_};
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
    require_same_field(other);
    return {mod_mul(value_, mod_inverse(other.value_, q_), q_), q_};
}

FieldElement FieldElement::operator-() const { return {mod_neg(value_, q_), q_}; }

FieldElement FieldElement::inverse() const { return {mod_inverse(value_, q_), q_}; }

FieldElement FieldElement::pow(u64 exp) const { return {mod_pow(value_, exp, q_), q_}; }

} // namespace ceqss
