#ifndef MUTAU_POLYNOMIAL_HPP
#define MUTAU_POLYNOMIAL_HPP

#include <algorithm>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mutau/fields.hpp"
#include "mutau/ordering.hpp"

namespace mutau {

inline constexpr int kMaxVariables = 16;

template <class F>
struct Ring {
    F field;
    std::vector<std::string> vars;
    OrdKind ord = OrdKind::Ds;

    int nvars() const { return static_cast<int>(vars.size()); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

template <class F>
using RingP = std::shared_ptr<const Ring<F>>;

template <class F>
RingP<F> make_ring(F field, std::vector<std::string> vars, OrdKind ord = OrdKind::Ds) {
    if (vars.empty()) throw InputError("a ring needs at least one variable");
    if (static_cast<int>(vars.size()) > kMaxVariables)
        throw InputError("at most " + std::to_string(kMaxVariables) + " variables supported");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) throw InputError("empty variable name");
        if (F::has_parameter && vars[i] == "t")
            throw InputError("'t' is reserved for the field parameter");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw InputError("duplicate variable '" + vars[i] + "'");
    }
    return std::make_shared<const Ring<F>>(Ring<F>{std::move(field), std::move(vars), ord});
}

template <class F>
bool same_ring(const RingP<F>& a, const RingP<F>& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->field.same(b->field) && a->vars == b->vars && a->ord == b->ord;
}

template <class F>
void require_same_ring(const RingP<F>& a, const RingP<F>& b) {
    if (!same_ring(a, b)) throw RingMismatchError("operands live in different rings");
}

// Sparse multivariate polynomial. Terms strictly decreasing in the ring's
// local ordering; all coefficients nonzero; zero = empty term list.
template <class F>
class Poly {
  public:
    using Elem = typename F::Elem;
    struct Term {
        Elem c;
        Exp m;
    };

    Poly() = default;
    explicit Poly(RingP<F> ring) : ring_(std::move(ring)) {}

    const RingP<F>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Leading data (largest monomial in the local ordering).
    const Term& lt() const { return terms_.front(); }
    const Exp& lm() const { return terms_.front().m; }
    const Elem& lc() const { return terms_.front().c; }

    // Order = minimal total degree among terms; infinity (nullopt) for 0.
    std::optional<std::uint64_t> order() const {
        if (terms_.empty()) return std::nullopt;
        std::uint64_t o = std::numeric_limits<std::uint64_t>::max();
        for (const auto& t : terms_) o = std::min(o, total_degree(t.m));
        return o;
    }

    std::uint64_t max_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, total_degree(t.m));
        return d;
    }

    // A unit of the local ring = nonzero constant term. The constant
    // monomial is the ordering maximum, so it can only sit in front.
    bool is_unit_local() const {
        return !terms_.empty() && total_degree(terms_.front().m) == 0;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && is_unit_local()); }

    static Poly zero(RingP<F> ring) { return Poly(std::move(ring)); }

    static Poly constant(RingP<F> ring, Elem c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({std::move(c), Exp(p.ring_->vars.size(), 0)});
        return p;
    }

    static Poly monomial(RingP<F> ring, Elem c, Exp m) {
        Poly p(ring);
        if (static_cast<int>(m.size()) != ring->nvars())
            throw RingMismatchError("exponent vector length mismatch");
        if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }

    // Assembles a polynomial from arbitrary (coeff, exponent) pairs.
    static Poly from_terms(RingP<F> ring, std::vector<Term> ts) {
        Poly p(ring);
        OrdKind ord = ring->ord;
        std::sort(ts.begin(), ts.end(), [ord](const Term& a, const Term& b) {
            return cmp_mono(ord, a.m, b.m) > 0;
        });
        for (auto& t : ts) {
            if (t.c.is_zero()) continue;
            if (!p.terms_.empty() && p.terms_.back().m == t.m) {
                p.terms_.back().c = p.terms_.back().c + t.c;
                if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        require_same_ring(a.ring_, b.ring_);
        Poly r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        OrdKind ord = a.ring_->ord;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = cmp_mono(ord, a.terms_[i].m, b.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Elem s = a.terms_[i].c + b.terms_[j].c;
                if (!s.is_zero()) r.terms_.push_back({std::move(s), a.terms_[i].m});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_ring(a.ring_, b.ring_);
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) prod.push_back({ta.c * tb.c, exp_sum(ta.m, tb.m)});
        return from_terms(a.ring_, std::move(prod));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!same_ring(a.ring_, b.ring_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].m == b.terms_[i].m && a.terms_[i].c == b.terms_[i].c)) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Elem& c) const {
        Poly r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({c * t.c, t.m});
        return r;
    }

    Poly mul_monomial(const Elem& c, const Exp& m) const {
        Poly r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Elem cc = c * t.c;
            if (!cc.is_zero()) r.terms_.push_back({std::move(cc), exp_sum(m, t.m)});
        }
        return r;
    }

    // this - c * x^m * g, the single reduction step everything is made of.
    void sub_mul(const Elem& c, const Exp& m, const Poly& g) {
        Poly shift(ring_);
        shift.terms_.reserve(g.terms_.size());
        for (const auto& t : g.terms_) {
            Elem cc = c * t.c;
            if (!cc.is_zero()) shift.terms_.push_back({std::move(cc), exp_sum(m, t.m)});
        }
        *this = *this - shift;
    }

    Poly derivative(int var) const {
        if (var < 0 || var >= ring_->nvars()) throw InputError("variable index out of range");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (t.m[static_cast<std::size_t>(var)] == 0) continue;
            Elem c = t.c * ring_->field.from_int(static_cast<long long>(t.m[static_cast<std::size_t>(var)]));
            if (c.is_zero()) continue;
            Exp m = t.m;
            --m[static_cast<std::size_t>(var)];
            out.push_back({std::move(c), std::move(m)});
        }
        return from_terms(ring_, std::move(out));
    }

    // Substitute each variable by the given polynomial (common ring).
    Poly substituted(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != ring_->nvars())
            throw InputError("substitution needs one image per variable");
        Poly acc = Poly::zero(ring_);
        for (const auto& t : terms_) {
            Poly term = Poly::constant(ring_, t.c);
            for (std::size_t i = 0; i < t.m.size(); ++i)
                for (std::uint32_t e = 0; e < t.m[i]; ++e) term = term * images[i];
            acc = acc + term;
        }
        return acc;
    }

    std::string str() const;

  private:
    RingP<F> ring_;
    std::vector<Term> terms_;
};

namespace detail {
// Does a printed coefficient need parentheses inside "c*x^a"?
inline bool coeff_needs_parens(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if ((ch == '+' || ch == '-') && depth == 0 && i > 0) return true;
    }
    return false;
}
}  // namespace detail

template <class F>
std::string Poly<F>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = t.c.str();
        bool neg = !cs.empty() && cs[0] == '-' && !detail::coeff_needs_parens(cs);
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.m.size(); ++i) {
            if (t.m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars[i];
            if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
        }
        if (mono.empty()) {
            if (detail::coeff_needs_parens(cs)) cs = "(" + cs + ")";
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            if (detail::coeff_needs_parens(cs)) cs = "(" + cs + ")";
            out += cs + "*" + mono;
        }
    }
    return out;
}

}  // namespace mutau

#endif
