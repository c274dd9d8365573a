#ifndef MUTAU_ORACLE_HPP
#define MUTAU_ORACLE_HPP

#include <map>
#include <optional>

#include "mutau/mora.hpp"

namespace mutau {

// Independent dimension oracle: works in the finite-dimensional truncation
// (k[x]/<x>^D)^q by exact row reduction, never through normal forms or
// standard bases. Used to cross-check the standard-basis dimensions.

namespace detail {

template <class F>
struct TruncatedQuotient {
    std::uint64_t dim = 0;
    bool pure_powers_covered = false;
};

inline void enumerate_monomials_below(int n, std::uint64_t D, Exp& cur, int pos,
                                      std::uint64_t used, std::vector<Exp>& out) {
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    for (std::uint64_t e = 0; used + e < D; ++e) {
        cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(e);
        enumerate_monomials_below(n, D, cur, pos + 1, used + e, out);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
}

template <class F>
TruncatedQuotient<F> truncated_quotient(const std::vector<Vec<F>>& gens, int rank,
                                        const RingP<F>& ring, std::uint64_t D) {
    using Elem = typename F::Elem;
    const int n = ring->nvars();

    TruncatedQuotient<F> out;
    if (D == 0) {
        out.pure_powers_covered = false;
        return out;
    }

    std::vector<Exp> monos;
    Exp cur(static_cast<std::size_t>(n), 0);
    enumerate_monomials_below(n, D, cur, 0, 0, monos);

    // columns sorted by the module ordering, largest first, so a row's first
    // entry is its leading monomial
    std::vector<ModMono> cols;
    cols.reserve(monos.size() * static_cast<std::size_t>(rank));
    for (const auto& m : monos)
        for (int j = 0; j < rank; ++j) cols.push_back({m, j});
    OrdKind ord = ring->ord;
    std::sort(cols.begin(), cols.end(),
              [ord](const ModMono& a, const ModMono& b) { return cmp_mod_mono(ord, a, b) > 0; });
    std::map<std::pair<Exp, int>, int> col_index;
    for (std::size_t c = 0; c < cols.size(); ++c) col_index[{cols[c].m, cols[c].comp}] = static_cast<int>(c);

    using Row = std::vector<std::pair<int, Elem>>;  // sorted by column index
    auto vec_to_row = [&](const Vec<F>& v) {
        Row r;
        for (int j = 0; j < rank; ++j) {
            for (const auto& t : v.comp[static_cast<std::size_t>(j)].terms()) {
                if (total_degree(t.m) >= D) continue;
                r.push_back({col_index.at({t.m, j}), t.c});
            }
        }
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    };

    std::map<int, Row> pivot_rows;
    auto insert_row = [&](Row r) {
        while (!r.empty()) {
            auto it = pivot_rows.find(r.front().first);
            if (it == pivot_rows.end()) {
                pivot_rows.emplace(r.front().first, std::move(r));
                return;
            }
            const Row& p = it->second;
            Elem fact = r.front().second * inverse(p.front().second);
            // r -= fact * p, merged by column
            Row merged;
            merged.reserve(r.size() + p.size());
            std::size_t i = 0, k = 0;
            while (i < r.size() && k < p.size()) {
                if (r[i].first < p[k].first) {
                    merged.push_back(r[i++]);
                } else if (r[i].first > p[k].first) {
                    merged.push_back({p[k].first, -(fact * p[k].second)});
                    ++k;
                } else {
                    Elem c = r[i].second - fact * p[k].second;
                    if (!c.is_zero()) merged.push_back({r[i].first, std::move(c)});
                    ++i;
                    ++k;
                }
            }
            for (; i < r.size(); ++i) merged.push_back(r[i]);
            for (; k < p.size(); ++k) merged.push_back({p[k].first, -(fact * p[k].second)});
            r = std::move(merged);
        }
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        std::uint64_t og = *g.order();
        if (og >= D) continue;
        std::vector<Exp> mults;
        Exp cur2(static_cast<std::size_t>(n), 0);
        enumerate_monomials_below(n, D - og, cur2, 0, 0, mults);
        for (const auto& m : mults) {
            Row r = vec_to_row(g.mul_monomial(ring->field.one(), m));
            if (!r.empty()) insert_row(std::move(r));
        }
    }

    out.dim = cols.size() - pivot_rows.size();

    // Every variable must show a pure-power pivot in every component for the
    // truncation to certify finiteness.
    out.pure_powers_covered = true;
    for (int j = 0; j < rank && out.pure_powers_covered; ++j) {
        for (int i = 0; i < n && out.pure_powers_covered; ++i) {
            bool found = false;
            for (const auto& [c, row] : pivot_rows) {
                const ModMono& mm = cols[static_cast<std::size_t>(c)];
                if (mm.comp != j) continue;
                bool pure = true;
                for (int k = 0; k < n; ++k)
                    if (k != i && mm.m[static_cast<std::size_t>(k)] != 0) {
                        pure = false;
                        break;
                    }
                if (pure) {
                    found = true;
                    break;
                }
            }
            if (!found) out.pure_powers_covered = false;
        }
    }
    return out;
}

}  // namespace detail

// Truncated dimension at level D: the quotient dimension in degrees < D,
// or Unstable (nullopt) when D does not yet certify the answer. Stability
// requires the count to agree at D-1 and D and the pivot set to contain a
// pure power of every variable in every component.
template <class F>
std::optional<std::uint64_t> truncated_dimension_oracle(const std::vector<Vec<F>>& gens, int rank,
                                                        const RingP<F>& ring, std::uint64_t D) {
    if (D < 1) throw InputError("truncation degree must be >= 1");
    auto lo = detail::truncated_quotient(gens, rank, ring, D - 1);
    auto hi = detail::truncated_quotient(gens, rank, ring, D);
    if (lo.dim == hi.dim && hi.pure_powers_covered) return hi.dim;
    return std::nullopt;
}

template <class F>
std::optional<std::uint64_t> truncated_dimension_oracle(const std::vector<Poly<F>>& gens,
                                                        const RingP<F>& ring, std::uint64_t D) {
    std::vector<Vec<F>> G;
    G.reserve(gens.size());
    for (const auto& g : gens) G.push_back(Vec<F>::from_poly(g));
    return truncated_dimension_oracle(G, 1, ring, D);
}

// Searches for the first stabilizing truncation degree; bail_dim cuts off
// candidates whose dimension is already known to be too large to care about.
template <class F>
std::optional<std::uint64_t> oracle_stable_dimension(const std::vector<Vec<F>>& gens, int rank,
                                                     const RingP<F>& ring, std::uint64_t max_D,
                                                     std::uint64_t bail_dim = UINT64_MAX) {
    std::uint64_t prev = 0;
    bool have_prev = false;
    for (std::uint64_t D = 1; D <= max_D; ++D) {
        auto r = detail::truncated_quotient(gens, rank, ring, D);
        if (have_prev && prev == r.dim && r.pure_powers_covered) return r.dim;
        if (r.dim > bail_dim) return std::nullopt;
        prev = r.dim;
        have_prev = true;
    }
    return std::nullopt;
}

}  // namespace mutau

#endif
