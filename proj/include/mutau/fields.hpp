#ifndef MUTAU_FIELDS_HPP
#define MUTAU_FIELDS_HPP

#include <cstdint>
#include <string>

#include "mutau/rational_function.hpp"

namespace mutau {

enum class FieldTag { Q, Fp, Qt, Fpt };

// Runtime description of a coefficient field. Text forms: "Q", "F:<p>",
// "Qt", "Ft:<p>".
struct FieldDescriptor {
    FieldTag tag = FieldTag::Q;
    std::uint64_t p = 0;

    std::string str() const;
    bool has_parameter() const { return tag == FieldTag::Qt || tag == FieldTag::Fpt; }
    std::uint64_t characteristic() const { return (tag == FieldTag::Fp || tag == FieldTag::Fpt) ? p : 0; }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        return a.tag == b.tag && a.p == b.p;
    }
};

FieldDescriptor parse_field_descriptor(const std::string& text);

// The four concrete fields share one static interface: an Elem value type,
// constants, from_int, and a descriptor. Elements carry enough context for
// arithmetic; the field object supplies constants and conversions.

struct QField {
    using Elem = Rational;
    static constexpr bool has_parameter = false;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(long long n) const { return Rational(n); }
    Elem from_bigint(const BigInt& n) const { return Rational(n); }
    FieldDescriptor descriptor() const { return {FieldTag::Q, 0}; }
    std::uint64_t characteristic() const { return 0; }
    bool same(const QField&) const { return true; }
};

struct FpField {
    using Elem = Fp;
    static constexpr bool has_parameter = false;

    std::uint64_t p;

    explicit FpField(std::uint64_t prime) : p(prime) { validate_prime_modulus(p); }

    Elem zero() const { return {0, p}; }
    Elem one() const { return {1 % p, p}; }
    Elem from_int(long long n) const { return fp_from_int(n, p); }
    Elem from_bigint(const BigInt& n) const { return fp_from_bigint(n, p); }
    FieldDescriptor descriptor() const { return {FieldTag::Fp, p}; }
    std::uint64_t characteristic() const { return p; }
    bool same(const FpField& o) const { return p == o.p; }
};

struct QtField {
    using Elem = RatFunQ;
    static constexpr bool has_parameter = true;

    Elem zero() const { return Elem::from_poly({}, Rational(1)); }
    Elem one() const { return Elem::from_poly(uni_const(Rational(1)), Rational(1)); }
    Elem from_int(long long n) const { return Elem::from_poly(uni_const(Rational(n)), Rational(1)); }
    Elem from_bigint(const BigInt& n) const { return Elem::from_poly(uni_const(Rational(n)), Rational(1)); }
    Elem parameter() const {
        UniPoly<Rational> t;
        t.c = {Rational(0), Rational(1)};
        return Elem::from_poly(std::move(t), Rational(1));
    }
    FieldDescriptor descriptor() const { return {FieldTag::Qt, 0}; }
    std::uint64_t characteristic() const { return 0; }
    bool same(const QtField&) const { return true; }
};

struct FptField {
    using Elem = RatFunFp;
    static constexpr bool has_parameter = true;

    std::uint64_t p;

    explicit FptField(std::uint64_t prime) : p(prime) { validate_prime_modulus(p); }

    Elem zero() const { return Elem::from_poly({}, Fp{1 % p, p}); }
    Elem one() const { return Elem::from_poly(uni_const(Fp{1 % p, p}), Fp{1 % p, p}); }
    Elem from_int(long long n) const { return Elem::from_poly(uni_const(fp_from_int(n, p)), Fp{1 % p, p}); }
    Elem from_bigint(const BigInt& n) const {
        return Elem::from_poly(uni_const(fp_from_bigint(n, p)), Fp{1 % p, p});
    }
    Elem parameter() const {
        UniPoly<Fp> t;
        t.c = {Fp{0, p}, Fp{1 % p, p}};
        return Elem::from_poly(std::move(t), Fp{1 % p, p});
    }
    FieldDescriptor descriptor() const { return {FieldTag::Fpt, p}; }
    std::uint64_t characteristic() const { return p; }
    bool same(const FptField& o) const { return p == o.p; }
};

}  // namespace mutau

#endif
