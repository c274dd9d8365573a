#ifndef MUTAU_RATIONAL_HPP
#define MUTAU_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

#include "mutau/errors.hpp"

namespace mutau {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number in lowest terms, denominator always positive.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZeroError("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        return Rational(den_, num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

  private:
    void normalize() {
        if (den_ == 0) throw DivisionByZeroError("rational with zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace mutau

#endif
