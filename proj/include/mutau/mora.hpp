#ifndef MUTAU_MORA_HPP
#define MUTAU_MORA_HPP

#include <deque>
#include <optional>

#include "mutau/dimension.hpp"
#include "mutau/polynomial.hpp"

namespace mutau {

// Element of a free module R^q over the polynomial ring, stored per
// component. Rank-1 vectors double as ideal elements.
template <class F>
struct Vec {
    using Elem = typename F::Elem;

    RingP<F> ring;
    std::vector<Poly<F>> comp;

    int rank() const { return static_cast<int>(comp.size()); }

    bool is_zero() const {
        for (const auto& p : comp)
            if (!p.is_zero()) return false;
        return true;
    }

    static Vec from_poly(Poly<F> p) {
        Vec v{p.ring(), {}};
        v.comp.push_back(std::move(p));
        return v;
    }

    static Vec zero(RingP<F> ring, int rank) {
        Vec v{ring, {}};
        v.comp.assign(static_cast<std::size_t>(rank), Poly<F>::zero(ring));
        return v;
    }

    // Leading module term: the largest component-leading monomial, ties to
    // the lower component index.
    struct Lead {
        int comp;
        Exp m;
        Elem c;
    };

    Lead lead() const {
        int best = -1;
        for (int j = 0; j < rank(); ++j) {
            const auto& p = comp[static_cast<std::size_t>(j)];
            if (p.is_zero()) continue;
            if (best < 0 || cmp_mono(ring->ord, p.lm(), comp[static_cast<std::size_t>(best)].lm()) > 0)
                best = j;
        }
        if (best < 0) throw MathError("leading term of the zero vector");
        const auto& p = comp[static_cast<std::size_t>(best)];
        return {best, p.lm(), p.lc()};
    }

    std::uint64_t max_degree() const {
        std::uint64_t d = 0;
        for (const auto& p : comp) d = std::max(d, p.max_degree());
        return d;
    }

    // Order of the vector: minimal total degree across all components.
    std::optional<std::uint64_t> order() const {
        std::optional<std::uint64_t> o;
        for (const auto& p : comp) {
            auto po = p.order();
            if (po && (!o || *po < *o)) o = po;
        }
        return o;
    }

    std::uint64_t ecart() const {
        Lead l = lead();
        return max_degree() - total_degree(l.m);
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        if (a.rank() != b.rank()) throw RingMismatchError("module rank mismatch");
        Vec r{a.ring, {}};
        r.comp.reserve(a.comp.size());
        for (std::size_t j = 0; j < a.comp.size(); ++j) r.comp.push_back(a.comp[j] + b.comp[j]);
        return r;
    }

    Vec operator-() const {
        Vec r{ring, {}};
        r.comp.reserve(comp.size());
        for (const auto& p : comp) r.comp.push_back(-p);
        return r;
    }

    friend Vec operator-(const Vec& a, const Vec& b) { return a + (-b); }

    Vec scaled(const Elem& c) const {
        Vec r{ring, {}};
        r.comp.reserve(comp.size());
        for (const auto& p : comp) r.comp.push_back(p.scaled(c));
        return r;
    }

    // this -= c * x^m * g
    void sub_mul(const Elem& c, const Exp& m, const Vec& g) {
        for (std::size_t j = 0; j < comp.size(); ++j) comp[j].sub_mul(c, m, g.comp[j]);
    }

    Vec mul_monomial(const Elem& c, const Exp& m) const {
        Vec r{ring, {}};
        r.comp.reserve(comp.size());
        for (const auto& p : comp) r.comp.push_back(p.mul_monomial(c, m));
        return r;
    }

    friend bool operator==(const Vec& a, const Vec& b) {
        if (a.rank() != b.rank()) return false;
        for (std::size_t j = 0; j < a.comp.size(); ++j)
            if (a.comp[j] != b.comp[j]) return false;
        return true;
    }
};

struct MoraOptions {
    std::uint64_t max_steps = 1'000'000;
    bool want_certificate = false;
};

struct StepBudget {
    std::uint64_t remaining;
    void charge() {
        if (remaining == 0)
            throw ResourceExhaustedError("reduction step budget exhausted");
        --remaining;
    }
};

// u * f = sum coeffs[i] * g_i + remainder, with u a unit of order 0.
template <class F>
struct Certificate {
    Poly<F> unit;
    std::vector<Poly<F>> coeffs;
};

template <class F>
struct NormalFormResult {
    Vec<F> remainder;
    std::optional<Certificate<F>> certificate;
};

namespace detail {

// Rescales a nonzero vector to a canonical representative and returns the
// factor applied. Over Q: primitive integer coefficients with positive
// leading coefficient, the only normalization that keeps digit growth in
// reduction chains polynomial. Elsewhere: monic. A weak normal form is only
// defined up to a unit, so callers fold the factor into the certificate.
template <class F>
typename F::Elem canonical_scale(const Vec<F>& v) {
    if constexpr (std::is_same_v<F, QField>) {
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& p : v.comp) {
            for (const auto& t : p.terms()) {
                num_gcd = boost::multiprecision::gcd(
                    num_gcd, t.c.num() < 0 ? BigInt(-t.c.num()) : t.c.num());
                den_lcm = boost::multiprecision::lcm(den_lcm, t.c.den());
            }
        }
        Rational mult(den_lcm, num_gcd);
        if (v.lead().c.num() < 0) mult = -mult;
        return mult;
    } else {
        return inverse(v.lead().c);
    }
}

template <class F>
struct TEntry {
    Vec<F> v;
    typename Vec<F>::Lead lead;
    std::uint64_t ecart;
    std::size_t length;  // total term count, the ecart tie-break
    int gen_index;       // >= 0: input generator; -1: saved intermediate
    // representation of saved intermediates in terms of f and the gens
    Poly<F> rep_unit;
    std::vector<Poly<F>> rep_coeffs;
};

template <class F>
std::size_t term_count(const Vec<F>& v) {
    std::size_t n = 0;
    for (const auto& p : v.comp) n += p.terms().size();
    return n;
}

// An element supported on a single component that factors as monomial *
// unit generates the same submodule as the bare monomial (units are
// invertible in the localization). The replacement strips the unit tail,
// which otherwise turns reductions against the element into power-series
// inversion.
template <class F>
Vec<F> simplify_unit_factor(Vec<F> v) {
    int nz = -1;
    for (int j = 0; j < v.rank(); ++j) {
        if (v.comp[static_cast<std::size_t>(j)].is_zero()) continue;
        if (nz >= 0) return v;
        nz = j;
    }
    if (nz < 0) return v;
    auto& p = v.comp[static_cast<std::size_t>(nz)];
    if (p.terms().size() <= 1) return v;
    const Exp& lead = p.lm();
    for (const auto& t : p.terms())
        if (!divides(lead, t.m)) return v;
    v.comp[static_cast<std::size_t>(nz)] = Poly<F>::monomial(v.ring, v.ring->field.one(), lead);
    return v;
}

// Mora's weak normal form with the T-set discipline: intermediate results
// with larger ecart are kept as extra reducers, which is what makes the
// loop terminate for local orderings.
template <class F>
NormalFormResult<F> normal_form_impl(const Vec<F>& f, const std::vector<Vec<F>>& gens,
                                     bool want_certificate, StepBudget& budget) {
    RingP<F> ring = f.ring;
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring);
        if (g.rank() != f.rank()) throw RingMismatchError("module rank mismatch");
    }

    std::vector<TEntry<F>> T;
    T.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        T.push_back({gens[i], gens[i].lead(), gens[i].ecart(), term_count(gens[i]),
                     static_cast<int>(i), {}, {}});
    }

    Vec<F> h = f;
    Poly<F> rep_unit = Poly<F>::constant(ring, ring->field.one());
    std::vector<Poly<F>> rep_coeffs;
    if (want_certificate)
        rep_coeffs.assign(gens.size(), Poly<F>::zero(ring));

    auto rescale = [&](const typename F::Elem& mult) {
        h = h.scaled(mult);
        if (want_certificate) {
            rep_unit = rep_unit.scaled(mult);
            for (auto& a : rep_coeffs) a = a.scaled(mult);
        }
    };
    if (!h.is_zero()) rescale(canonical_scale(h));

    while (!h.is_zero()) {
        auto lead_h = h.lead();
        // Reductor choice: minimal ecart, then fewest terms, then list
        // position. The term-count tie-break matters: breaking ties purely
        // by position sends ordinary inputs into reduction chains with
        // exponential coefficient growth.
        int chosen = -1;
        for (std::size_t k = 0; k < T.size(); ++k) {
            const auto& t = T[k];
            if (t.lead.comp != lead_h.comp || !divides(t.lead.m, lead_h.m)) continue;
            if (chosen < 0) {
                chosen = static_cast<int>(k);
                continue;
            }
            const auto& cur = T[static_cast<std::size_t>(chosen)];
            if (t.ecart < cur.ecart || (t.ecart == cur.ecart && t.length < cur.length))
                chosen = static_cast<int>(k);
        }
        if (chosen < 0) break;

        const std::uint64_t ecart_h = h.max_degree() - total_degree(lead_h.m);
        if (T[static_cast<std::size_t>(chosen)].ecart > ecart_h) {
            TEntry<F> snap{h, lead_h, ecart_h, term_count(h), -1, rep_unit, rep_coeffs};
            T.push_back(std::move(snap));
        }

        const TEntry<F>& t = T[static_cast<std::size_t>(chosen)];
        typename F::Elem c = lead_h.c * inverse(t.lead.c);
        Exp m = exp_quotient(lead_h.m, t.lead.m);
        h.sub_mul(c, m, t.v);
        if (want_certificate) {
            Poly<F> cm = Poly<F>::monomial(ring, c, m);
            if (t.gen_index >= 0) {
                rep_coeffs[static_cast<std::size_t>(t.gen_index)] =
                    rep_coeffs[static_cast<std::size_t>(t.gen_index)] + cm;
            } else {
                rep_unit = rep_unit - cm * t.rep_unit;
                for (std::size_t i = 0; i < rep_coeffs.size(); ++i)
                    rep_coeffs[i] = rep_coeffs[i] - cm * t.rep_coeffs[i];
            }
        }
        if (!h.is_zero()) rescale(canonical_scale(h));
        budget.charge();
    }

    NormalFormResult<F> res{std::move(h), std::nullopt};
    if (want_certificate)
        res.certificate = Certificate<F>{std::move(rep_unit), std::move(rep_coeffs)};
    return res;
}

}  // namespace detail

template <class F>
NormalFormResult<F> mora_normal_form(const Vec<F>& f, const std::vector<Vec<F>>& gens,
                                     const MoraOptions& opts = {}) {
    StepBudget budget{opts.max_steps};
    return detail::normal_form_impl(f, gens, opts.want_certificate, budget);
}

template <class F>
NormalFormResult<F> mora_normal_form(const Poly<F>& f, const std::vector<Poly<F>>& gens,
                                     const MoraOptions& opts = {}) {
    std::vector<Vec<F>> G;
    G.reserve(gens.size());
    for (const auto& g : gens) G.push_back(Vec<F>::from_poly(g));
    return mora_normal_form(Vec<F>::from_poly(f), G, opts);
}

// Completed standard basis of a submodule of R^q w.r.t. the ring's local
// ordering. Elements are monic with pairwise non-divisible leading
// monomials; `leading` holds the minimal generators of the leading module
// per component.
template <class F>
struct StandardBasis {
    RingP<F> ring;
    int rank = 1;
    std::vector<Vec<F>> elements;
    std::vector<std::vector<Exp>> leading;

    bool component_has_unit(int j) const {
        for (const auto& m : leading[static_cast<std::size_t>(j)])
            if (total_degree(m) == 0) return true;
        return false;
    }
};

template <class F>
StandardBasis<F> standard_basis(const std::vector<Vec<F>>& gens_in, int rank,
                                const MoraOptions& opts = {}) {
    if (gens_in.empty()) throw InputError("standard basis of an empty generator list");
    RingP<F> ring = gens_in.front().ring;
    StepBudget budget{opts.max_steps};

    std::vector<Vec<F>> S;
    for (const auto& g : gens_in) {
        require_same_ring(ring, g.ring);
        if (g.rank() != rank) throw RingMismatchError("module rank mismatch");
        if (g.is_zero()) continue;
        Vec<F> v = detail::simplify_unit_factor(g);
        S.push_back(v.scaled(detail::canonical_scale(v)));
    }

    struct Pair {
        std::size_t i, j;
        std::uint64_t lcm_deg;
        std::uint64_t seq;
    };
    std::vector<Pair> queue;
    std::uint64_t seq = 0;

    auto push_pairs_for = [&](std::size_t jnew) {
        const auto ln = S[jnew].lead();
        for (std::size_t i = 0; i < jnew; ++i) {
            const auto li = S[i].lead();
            if (li.comp != ln.comp) continue;
            Exp l = exp_lcm(li.m, ln.m);
            // coprime-lead criterion, safe for ideals only
            if (rank == 1 && l == exp_sum(li.m, ln.m)) continue;
            queue.push_back({i, jnew, total_degree(l), seq++});
        }
    };
    for (std::size_t j = 0; j < S.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < queue.size(); ++k) {
            if (queue[k].lcm_deg < queue[best].lcm_deg ||
                (queue[k].lcm_deg == queue[best].lcm_deg && queue[k].seq < queue[best].seq))
                best = k;
        }
        Pair pr = queue[best];
        queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));

        const auto li = S[pr.i].lead();
        const auto lj = S[pr.j].lead();
        Exp l = exp_lcm(li.m, lj.m);
        // cross-multiplied s-vector: lc_j x^(l-a) f - lc_i x^(l-b) g
        Vec<F> spoly = S[pr.i].mul_monomial(lj.c, exp_quotient(l, li.m)) -
                       S[pr.j].mul_monomial(li.c, exp_quotient(l, lj.m));

        auto nf = detail::normal_form_impl(spoly, S, false, budget);
        if (nf.remainder.is_zero()) continue;
        Vec<F> h = detail::simplify_unit_factor(nf.remainder);
        S.push_back(h.scaled(detail::canonical_scale(h)));
        push_pairs_for(S.size() - 1);
    }

    // Minimalize: sort by leading monomial (largest first); in a local
    // ordering a proper divisor is strictly larger, so one pass suffices.
    std::vector<std::size_t> idx(S.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto la = S[a].lead();
        const auto lb = S[b].lead();
        ModMono ma{la.m, la.comp}, mb{lb.m, lb.comp};
        int c = cmp_mod_mono(ring->ord, ma, mb);
        if (c != 0) return c > 0;
        return a < b;
    });

    StandardBasis<F> out;
    out.ring = ring;
    out.rank = rank;
    out.leading.assign(static_cast<std::size_t>(rank), {});
    for (std::size_t k : idx) {
        const auto lk = S[k].lead();
        bool redundant = false;
        for (const auto& m : out.leading[static_cast<std::size_t>(lk.comp)]) {
            if (divides(m, lk.m)) {
                redundant = true;
                break;
            }
        }
        if (redundant) continue;
        out.leading[static_cast<std::size_t>(lk.comp)].push_back(lk.m);
        out.elements.push_back(S[k].scaled(inverse(lk.c)));  // monic output
    }
    return out;
}

template <class F>
StandardBasis<F> standard_basis(const std::vector<Poly<F>>& gens, const MoraOptions& opts = {}) {
    std::vector<Vec<F>> G;
    G.reserve(gens.size());
    for (const auto& g : gens) G.push_back(Vec<F>::from_poly(g));
    return standard_basis(G, 1, opts);
}

template <class F>
const std::vector<std::vector<Exp>>& leading_module(const StandardBasis<F>& sb) {
    return sb.leading;
}

// k-dimension of R^q / N from the leading module: finite iff every
// component's leading ideal contains a pure power of every variable; then
// the standard monomials are counted inside the pure-power box.
template <class F>
Dim vector_space_dimension(const StandardBasis<F>& sb) {
    const int n = sb.ring->nvars();
    std::uint64_t total = 0;
    for (int j = 0; j < sb.rank; ++j) {
        const auto& lead = sb.leading[static_cast<std::size_t>(j)];
        if (lead.empty()) return Dim::infinite();
        std::vector<std::uint64_t> bound(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            bool found = false;
            std::uint64_t b = 0;
            for (const auto& m : lead) {
                bool pure = true;
                for (int k = 0; k < n; ++k)
                    if (k != i && m[static_cast<std::size_t>(k)] != 0) {
                        pure = false;
                        break;
                    }
                if (!pure) continue;
                std::uint64_t v = m[static_cast<std::size_t>(i)];
                if (!found || v < b) b = v;
                found = true;
            }
            if (!found) return Dim::infinite();
            bound[static_cast<std::size_t>(i)] = b;
        }
        // enumerate the box and drop multiples of leading monomials
        std::uint64_t box = 1;
        for (auto b : bound) {
            box *= std::max<std::uint64_t>(b, 1);
            if (box > 100'000'000ull)
                throw ResourceExhaustedError("standard monomial box too large");
        }
        bool empty = false;
        for (auto b : bound)
            if (b == 0) empty = true;
        if (empty) continue;
        Exp beta(static_cast<std::size_t>(n), 0);
        while (true) {
            bool standard = true;
            for (const auto& m : lead)
                if (divides(m, beta)) {
                    standard = false;
                    break;
                }
            if (standard) ++total;
            int i = 0;
            while (i < n) {
                if (++beta[static_cast<std::size_t>(i)] < bound[static_cast<std::size_t>(i)]) break;
                beta[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == n) break;
        }
    }
    return Dim::finite(total);
}

// Krull dimension of R^q / N, combinatorial on the leading module: per
// component n minus a minimum variable cover of the generator supports.
// Returns -1 when the quotient is the zero module (empty scheme).
template <class F>
int krull_dimension(const StandardBasis<F>& sb) {
    const int n = sb.ring->nvars();
    int best = -1;
    for (int j = 0; j < sb.rank; ++j) {
        const auto& lead = sb.leading[static_cast<std::size_t>(j)];
        if (sb.component_has_unit(j)) continue;
        if (lead.empty()) {
            best = std::max(best, n);
            continue;
        }
        std::vector<std::uint32_t> supports;
        std::uint32_t used = 0;
        for (const auto& m : lead) {
            std::uint32_t s = 0;
            for (int i = 0; i < n; ++i)
                if (m[static_cast<std::size_t>(i)] != 0) s |= (1u << i);
            supports.push_back(s);
            used |= s;
        }
        int min_cover = n;
        for (std::uint32_t mask = 0; mask <= used; ++mask) {
            if ((mask & ~used) != 0) continue;
            bool covers = true;
            for (auto s : supports)
                if ((s & mask) == 0) {
                    covers = false;
                    break;
                }
            if (covers) min_cover = std::min(min_cover, __builtin_popcount(mask));
        }
        best = std::max(best, n - min_cover);
    }
    return best;
}

// f lies in the submodule (of the localization) iff its weak normal form
// against a completed basis vanishes.
template <class F>
bool ideal_membership_local(const Vec<F>& f, const StandardBasis<F>& sb,
                            const MoraOptions& opts = {}) {
    return mora_normal_form(f, sb.elements, opts).remainder.is_zero();
}

template <class F>
bool ideal_membership_local(const Poly<F>& f, const StandardBasis<F>& sb,
                            const MoraOptions& opts = {}) {
    return ideal_membership_local(Vec<F>::from_poly(f), sb, opts);
}

// Expands u*f - sum coeffs[i]*g_i and compares with the remainder, term by
// term. Exact; used by the test suites.
template <class F>
bool verify_certificate(const Vec<F>& f, const std::vector<Vec<F>>& gens,
                        const NormalFormResult<F>& res) {
    if (!res.certificate) return false;
    const auto& cert = *res.certificate;
    if (cert.unit.is_zero() || !cert.unit.is_unit_local()) return false;
    Vec<F> lhs = Vec<F>::zero(f.ring, f.rank());
    for (std::size_t j = 0; j < f.comp.size(); ++j)
        lhs.comp[j] = cert.unit * f.comp[j];
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < f.comp.size(); ++j)
            lhs.comp[j] = lhs.comp[j] - cert.coeffs[i] * gens[i].comp[j];
    return lhs == res.remainder;
}

}  // namespace mutau

#endif
