#ifndef MUTAU_DIMENSION_HPP
#define MUTAU_DIMENSION_HPP

#include <cstdint>
#include <string>

#include "mutau/errors.hpp"

namespace mutau {

// A dimension count: a natural number or infinity.
class Dim {
  public:
    Dim() = default;
    static Dim finite(std::uint64_t v) { return Dim(false, v); }
    static Dim infinite() { return Dim(true, 0); }

    bool is_finite() const { return !inf_; }
    bool is_infinite() const { return inf_; }

    std::uint64_t value() const {
        if (inf_) throw MathError("dimension is infinite");
        return v_;
    }

    std::string str() const { return inf_ ? "infinite" : std::to_string(v_); }

    friend bool operator==(const Dim& a, const Dim& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator!=(const Dim& a, const Dim& b) { return !(a == b); }

    // a <= b with the usual conventions for infinity
    friend bool operator<=(const Dim& a, const Dim& b) {
        if (b.inf_) return true;
        if (a.inf_) return false;
        return a.v_ <= b.v_;
    }
    friend bool operator<(const Dim& a, const Dim& b) { return a <= b && a != b; }

  private:
    Dim(bool inf, std::uint64_t v) : inf_(inf), v_(v) {}
    bool inf_ = false;
    std::uint64_t v_ = 0;
};

}  // namespace mutau

#endif
