#ifndef MUTAU_PRIME_FIELD_HPP
#define MUTAU_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "mutau/errors.hpp"
#include "mutau/rational.hpp"

namespace mutau {

#if !defined(__SIZEOF_INT128__)
#error "mutau requires unsigned __int128 (GCC/Clang)"
#endif
using u128 = unsigned __int128;

// Largest admissible modulus: keeps a*b inside 128-bit intermediates with
// headroom for sums before reduction.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 61);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

// Checks primality (deterministically) and the 2^61 bound.
void validate_prime_modulus(std::uint64_t p);

// Element of F_p. Self-describing: carries its modulus so that mixed-field
// arithmetic is detectable.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }
    std::string str() const { return std::to_string(v); }
};

inline void check_same_field(const Fp& a, const Fp& b) {
    if (a.p != b.p) throw FieldMismatchError("elements of F_" + std::to_string(a.p) + " and F_" + std::to_string(b.p));
}

inline Fp operator+(const Fp& a, const Fp& b) {
    check_same_field(a, b);
    std::uint64_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return {s, a.p};
}

inline Fp operator-(const Fp& a, const Fp& b) {
    check_same_field(a, b);
    std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
    return {s, a.p};
}

inline Fp operator-(const Fp& a) { return {a.v == 0 ? 0 : a.p - a.v, a.p}; }

inline Fp operator*(const Fp& a, const Fp& b) {
    check_same_field(a, b);
    return {mulmod_u64(a.v, b.v, a.p), a.p};
}

inline Fp inverse(const Fp& a) {
    if (a.v == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(a.p));
    return {invmod_u64(a.v, a.p), a.p};
}

inline Fp operator/(const Fp& a, const Fp& b) {
    check_same_field(a, b);
    return a * inverse(b);
}

inline bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

inline Fp fp_from_int(long long n, std::uint64_t p) {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return {static_cast<std::uint64_t>(r), p};
}

inline Fp fp_from_bigint(const BigInt& n, std::uint64_t p) {
    BigInt r = n % p;
    if (r < 0) r += p;
    return {r.convert_to<std::uint64_t>(), p};
}

// Residue map Q -> F_p on its domain of definition; a denominator divisible
// by p means the prime cannot be used for this input.
inline Fp reduce_mod_p(const Rational& q, std::uint64_t p) {
    Fp den = fp_from_bigint(q.den(), p);
    if (den.is_zero())
        throw BadPrimeError("prime " + std::to_string(p) + " divides a denominator");
    return fp_from_bigint(q.num(), p) * inverse(den);
}

}  // namespace mutau

#endif
