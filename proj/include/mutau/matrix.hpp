#ifndef MUTAU_MATRIX_HPP
#define MUTAU_MATRIX_HPP

#include <vector>

#include "mutau/polynomial.hpp"

namespace mutau {

template <class F>
struct PolyMatrix {
    RingP<F> ring;
    int rows = 0;
    int cols = 0;
    std::vector<Poly<F>> entries;  // row-major

    Poly<F>& at(int i, int j) { return entries[static_cast<std::size_t>(i * cols + j)]; }
    const Poly<F>& at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }
};

// Jacobian of a generator list: entry (i,j) = d F_j / d x_i, so the matrix
// is nvars x m.
template <class F>
PolyMatrix<F> jacobian_matrix(const std::vector<Poly<F>>& gens) {
    if (gens.empty()) throw InputError("jacobian of an empty generator list");
    RingP<F> ring = gens.front().ring();
    for (const auto& g : gens) require_same_ring(ring, g.ring());
    int n = ring->nvars();
    int m = static_cast<int>(gens.size());
    PolyMatrix<F> J{ring, n, m, {}};
    J.entries.reserve(static_cast<std::size_t>(n * m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) J.entries.push_back(gens[static_cast<std::size_t>(j)].derivative(i));
    return J;
}

// Exact division f / g in the polynomial ring; the quotient must exist.
// Each step strips the leading term, so it takes exactly #terms(quotient)
// iterations when the division is exact.
template <class F>
Poly<F> exact_divide(Poly<F> f, const Poly<F>& g) {
    if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Poly<F> q = Poly<F>::zero(f.ring());
    typename F::Elem glc_inv = inverse(g.lc());
    while (!f.is_zero()) {
        if (!divides(g.lm(), f.lm()))
            throw MathError("internal: non-exact polynomial division");
        typename F::Elem c = f.lc() * glc_inv;
        Exp m = exp_quotient(f.lm(), g.lm());
        q = q + Poly<F>::monomial(f.ring(), c, m);
        f.sub_mul(c, m, g);
    }
    return q;
}

namespace detail {

template <class F>
Poly<F> det_cofactor(const PolyMatrix<F>& M, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return M.at(rows[0], cols[0]);
    Poly<F> acc = Poly<F>::zero(M.ring);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Poly<F>& e = M.at(rows[0], cols[k]);
        if (e.is_zero()) continue;
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        Poly<F> minor = det_cofactor(M, sub_rows, sub_cols);
        Poly<F> contrib = e * minor;
        acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

// Fraction-free Bareiss elimination; every division is exact by the
// Sylvester identity.
template <class F>
Poly<F> det_bareiss(const PolyMatrix<F>& M, const std::vector<int>& rows, const std::vector<int>& cols) {
    const int d = static_cast<int>(rows.size());
    RingP<F> ring = M.ring;
    std::vector<Poly<F>> a;
    a.reserve(static_cast<std::size_t>(d * d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a.push_back(M.at(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]));
    auto at = [&](int i, int j) -> Poly<F>& { return a[static_cast<std::size_t>(i * d + j)]; };

    Poly<F> prev = Poly<F>::constant(ring, ring->field.one());
    int sign = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < d; ++i)
                if (!at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Poly<F>::zero(ring);
            for (int j = 0; j < d; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j) {
                Poly<F> num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                at(i, j) = num.is_zero() ? std::move(num) : exact_divide(std::move(num), prev);
            }
            at(i, k) = Poly<F>::zero(ring);
        }
        prev = at(k, k);
    }
    Poly<F> det = at(d - 1, d - 1);
    return sign < 0 ? -det : det;
}

}  // namespace detail

template <class F>
Poly<F> determinant(const PolyMatrix<F>& M, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() <= 3) return detail::det_cofactor(M, rows, cols);
    return detail::det_bareiss(M, rows, cols);
}

template <class F>
Poly<F> determinant(const PolyMatrix<F>& M) {
    if (M.rows != M.cols) throw InputError("determinant of a non-square matrix");
    std::vector<int> idx(static_cast<std::size_t>(M.rows));
    for (int i = 0; i < M.rows; ++i) idx[static_cast<std::size_t>(i)] = i;
    return determinant(M, idx, idx);
}

// All d x d minors, enumerated in lexicographic row-set then column-set
// order. d = 0 yields the single polynomial 1 (the empty determinant).
template <class F>
std::vector<Poly<F>> minors(const PolyMatrix<F>& M, int d) {
    if (d < 0 || d > std::min(M.rows, M.cols))
        throw InputError("minor size " + std::to_string(d) + " out of range for " +
                         std::to_string(M.rows) + "x" + std::to_string(M.cols) + " matrix");
    std::vector<Poly<F>> out;
    if (d == 0) {
        out.push_back(Poly<F>::constant(M.ring, M.ring->field.one()));
        return out;
    }
    std::vector<int> rows(static_cast<std::size_t>(d)), cols(static_cast<std::size_t>(d));
    auto next_subset = [](std::vector<int>& s, int n) {
        int k = static_cast<int>(s.size());
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    };
    for (int i = 0; i < d; ++i) rows[static_cast<std::size_t>(i)] = i;
    do {
        for (int j = 0; j < d; ++j) cols[static_cast<std::size_t>(j)] = j;
        do {
            out.push_back(determinant(M, rows, cols));
        } while (next_subset(cols, M.cols));
    } while (next_subset(rows, M.rows));
    return out;
}

}  // namespace mutau

#endif
