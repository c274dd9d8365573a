#ifndef MUTAU_UNIPOLY_HPP
#define MUTAU_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "mutau/errors.hpp"
#include "mutau/prime_field.hpp"
#include "mutau/rational.hpp"

namespace mutau {

inline Rational inverse(const Rational& a) { return a.inverse(); }

// Dense univariate polynomial over a field K (K = Rational or Fp).
// Invariant: leading (highest-degree) coefficient nonzero; zero = empty.
template <class K>
struct UniPoly {
    std::vector<K> c;  // c[i] is the coefficient of t^i

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    const K& lc() const { return c.back(); }
};

template <class K>
UniPoly<K> uni_const(const K& a) {
    UniPoly<K> r;
    if (!a.is_zero()) r.c.push_back(a);
    return r;
}

template <class K>
UniPoly<K> operator+(const UniPoly<K>& a, const UniPoly<K>& b) {
    UniPoly<K> r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size() && i < b.c.size())
            r.c[i] = a.c[i] + b.c[i];
        else if (i < a.c.size())
            r.c[i] = a.c[i];
        else
            r.c[i] = b.c[i];
    }
    r.trim();
    return r;
}

template <class K>
UniPoly<K> operator-(const UniPoly<K>& a) {
    UniPoly<K> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class K>
UniPoly<K> operator-(const UniPoly<K>& a, const UniPoly<K>& b) {
    return a + (-b);
}

template <class K>
UniPoly<K> operator*(const UniPoly<K>& a, const UniPoly<K>& b) {
    UniPoly<K> r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, a.c[0] - a.c[0]);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
}

template <class K>
bool operator==(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}

// Division with remainder over a field.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(UniPoly<K> a, const UniPoly<K>& b) {
    if (b.is_zero()) throw DivisionByZeroError("univariate division by zero");
    UniPoly<K> q;
    if (a.degree() < b.degree()) return {q, a};
    q.c.assign(a.c.size() - b.c.size() + 1, b.lc() - b.lc());
    K inv_lc = inverse(b.lc());
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int k = a.degree() - b.degree();
        K f = a.lc() * inv_lc;
        q.c[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= b.degree(); ++i)
            a.c[static_cast<std::size_t>(i + k)] =
                a.c[static_cast<std::size_t>(i + k)] - f * b.c[static_cast<std::size_t>(i)];
        a.trim();
    }
    return {q, a};
}

template <class K>
UniPoly<K> make_monic(UniPoly<K> a) {
    if (a.is_zero() || a.lc().is_one()) return a;
    K inv = inverse(a.lc());
    for (auto& x : a.c) x = x * inv;
    return a;
}

template <class K>
K uni_eval(const UniPoly<K>& a, const K& at, const K& zero) {
    K r = zero;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = r * at + *it;
    return r;
}

// ---- integer polynomial helpers (fraction-free gcd machinery) ----

using ZPoly = std::vector<BigInt>;  // dense, leading coeff nonzero

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline BigInt zcontent(const ZPoly& a) {
    BigInt g = 0;
    for (const auto& x : a) g = boost::multiprecision::gcd(g, x < 0 ? BigInt(-x) : x);
    return g;
}

inline ZPoly zprimitive(ZPoly a) {
    ztrim(a);
    if (a.empty()) return a;
    BigInt g = zcontent(a);
    if (g > 1)
        for (auto& x : a) x /= g;
    if (a.back() < 0)
        for (auto& x : a) x = -x;
    return a;
}

inline ZPoly zdiv_exact(ZPoly a, const BigInt& s) {
    for (auto& x : a) x /= s;
    return a;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
inline ZPoly zprem(ZPoly a, const ZPoly& b) {
    const BigInt lb = b.back();
    const int db = zdeg(b);
    const int d = zdeg(a) - db;
    int steps = 0;
    while (!a.empty() && zdeg(a) >= db) {
        BigInt la = a.back();
        int k = zdeg(a) - db;
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + k)] -= la * b[static_cast<std::size_t>(i)];
        ztrim(a);
        ++steps;
    }
    // pad so the total factor is exactly lc(b)^(d+1), as the subresultant
    // divisions require
    for (int i = steps; i <= d; ++i)
        for (auto& x : a) x *= lb;
    return a;
}

// Subresultant PRS. Returns a primitive gcd of the primitive parts (content
// is irrelevant to callers, which normalize to monic over Q).
inline ZPoly zgcd_subresultant(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    if (a.empty()) return zprimitive(std::move(b));
    if (b.empty()) return zprimitive(std::move(a));
    a = zprimitive(std::move(a));
    b = zprimitive(std::move(b));
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    BigInt g = 1, h = 1;
    while (true) {
        if (zdeg(b) == 0) return {BigInt(1)};
        int d = zdeg(a) - zdeg(b);
        ZPoly r = zprem(a, b);
        if (r.empty()) return zprimitive(std::move(b));
        a = std::move(b);
        BigInt divisor = g;
        for (int i = 0; i < d; ++i) divisor *= h;
        b = zdiv_exact(std::move(r), divisor);
        g = a.back();
        if (d > 0) {
            BigInt num = 1;
            for (int i = 0; i < d; ++i) num *= g;
            BigInt den = 1;
            for (int i = 0; i < d - 1; ++i) den *= h;
            h = num / den;
        }
    }
}

// gcd over Q[t]: clear denominators, run the fraction-free PRS in Z[t],
// return the result monic. Naive rational Euclid blows up on coefficients;
// this route keeps intermediates integral.
inline UniPoly<Rational> uni_gcd(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    auto clear_den = [](const UniPoly<Rational>& f) {
        BigInt l = 1;
        for (const auto& x : f.c) l = boost::multiprecision::lcm(l, x.den());
        ZPoly z;
        z.reserve(f.c.size());
        for (const auto& x : f.c) z.push_back(x.num() * (l / x.den()));
        ztrim(z);
        return z;
    };
    ZPoly g = zgcd_subresultant(clear_den(a), clear_den(b));
    UniPoly<Rational> r;
    r.c.reserve(g.size());
    for (auto& x : g) r.c.emplace_back(std::move(x));
    r.trim();
    return make_monic(std::move(r));
}

// gcd over F_p[t]: plain monic Euclid.
inline UniPoly<Fp> uni_gcd(UniPoly<Fp> a, UniPoly<Fp> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(std::move(a), b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

template <class K>
std::string uni_str(const UniPoly<K>& a, const std::string& var = "t") {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        const K& x = a.c[static_cast<std::size_t>(i)];
        if (x.is_zero()) continue;
        std::string cs = x.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        first = false;
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace mutau

#endif
