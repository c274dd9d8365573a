#ifndef MUTAU_RATIONAL_FUNCTION_HPP
#define MUTAU_RATIONAL_FUNCTION_HPP

#include <string>
#include <utility>

#include "mutau/unipoly.hpp"

namespace mutau {

// Element of k(t), k = Q or F_p. Canonical form: denominator monic and
// coprime to the numerator; zero is 0/1.
template <class K>
class RatFun {
  public:
    RatFun() = default;
    explicit RatFun(UniPoly<K> num, UniPoly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    static RatFun from_poly(UniPoly<K> num, const K& one) {
        RatFun r;
        r.num_ = std::move(num);
        r.den_ = uni_const(one);
        return r;
    }

    const UniPoly<K>& num() const { return num_; }
    const UniPoly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.degree() == 0 && num_.c[0].is_one() && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw DivisionByZeroError("division by zero in k(t)");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inv() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero in k(t)");
        return RatFun(den_, num_);
    }

    std::string str() const {
        if (is_polynomial()) return uni_str(num_);
        return "(" + uni_str(num_) + ")/(" + uni_str(den_) + ")";
    }

  private:
    void normalize() {
        num_.trim();
        den_.trim();
        if (den_.is_zero()) throw DivisionByZeroError("zero denominator in k(t)");
        if (num_.is_zero()) {
            K one = inverse(den_.lc()) * den_.lc();
            den_ = uni_const(one);
            return;
        }
        UniPoly<K> g = uni_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divrem(std::move(num_), g).first;
            den_ = divrem(std::move(den_), g).first;
        }
        if (!den_.lc().is_one()) {
            K inv = inverse(den_.lc());
            for (auto& x : num_.c) x = x * inv;
            for (auto& x : den_.c) x = x * inv;
        }
    }

    UniPoly<K> num_;
    UniPoly<K> den_;
};

template <class K>
RatFun<K> inverse(const RatFun<K>& a) {
    return a.inv();
}

using RatFunQ = RatFun<Rational>;
using RatFunFp = RatFun<Fp>;

}  // namespace mutau

#endif
