#include "mutau/prime_field.hpp"

namespace mutau {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((u128)a * b % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, 0 < a < p
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw DivisionByZeroError("element not invertible mod " + std::to_string(p));
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void validate_prime_modulus(std::uint64_t p) {
    if (p >= kMaxPrime)
        throw NotPrimeError("modulus " + std::to_string(p) + " exceeds the 2^61 bound");
    if (!is_prime_u64(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
}

}  // namespace mutau
