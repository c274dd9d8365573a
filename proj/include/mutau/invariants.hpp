#ifndef MUTAU_INVARIANTS_HPP
#define MUTAU_INVARIANTS_HPP

#include "mutau/matrix.hpp"
#include "mutau/mora.hpp"

namespace mutau {

inline constexpr int kMaxGenerators = 16;

// Everything the tool knows about one fibre/ideal at the origin.
struct InvariantReport {
    std::string field;
    int nvars = 0;
    int ngens = 0;  // nonzero generators actually used
    std::optional<Dim> mu;   // hypersurfaces only
    std::optional<Dim> tau;  // hypersurfaces only
    Dim dim_T_I = Dim::finite(0);
    std::uint64_t ord = 0;
    std::optional<std::uint64_t> determinacy_bound;
    std::optional<bool> is_ci;
    std::optional<bool> isolated;
    std::vector<std::string> warnings;
};

namespace detail {

template <class F>
std::vector<Poly<F>> nonzero_gens(const std::vector<Poly<F>>& gens) {
    std::vector<Poly<F>> out;
    for (const auto& g : gens)
        if (!g.is_zero()) out.push_back(g);
    return out;
}

template <class F>
std::vector<Poly<F>> jacobian_ideal(const Poly<F>& f) {
    std::vector<Poly<F>> j;
    for (int i = 0; i < f.ring()->nvars(); ++i) j.push_back(f.derivative(i));
    return j;
}

template <class F>
Dim quotient_dimension(const std::vector<Poly<F>>& gens, const RingP<F>& ring,
                       const MoraOptions& opts) {
    auto nz = nonzero_gens(gens);
    if (nz.empty()) return Dim::infinite();  // quotient by the zero ideal
    (void)ring;
    return vector_space_dimension(standard_basis(nz, opts));
}

}  // namespace detail

// mu(f) = dim k[[x]]/j(f). A unit is not singular at the origin: reported
// as 0 with a warning so family scans can keep going over smooth fibres.
// mu(0) is infinite by convention, not an error.
template <class F>
Dim milnor_number(const Poly<F>& f, const MoraOptions& opts = {},
                  std::vector<std::string>* warnings = nullptr) {
    if (f.is_zero()) return Dim::infinite();
    if (f.is_unit_local()) {
        if (warnings) warnings->push_back("NotSingularAtOrigin: input is a unit; mu reported as 0");
        return Dim::finite(0);
    }
    return detail::quotient_dimension(detail::jacobian_ideal(f), f.ring(), opts);
}

// tau(f) = dim k[[x]]/<f, j(f)>.
template <class F>
Dim tjurina_number(const Poly<F>& f, const MoraOptions& opts = {},
                   std::vector<std::string>* warnings = nullptr) {
    if (f.is_zero()) return Dim::infinite();
    if (f.is_unit_local()) {
        if (warnings) warnings->push_back("NotSingularAtOrigin: input is a unit; tau reported as 0");
        return Dim::finite(0);
    }
    auto gens = detail::jacobian_ideal(f);
    gens.insert(gens.begin(), f);
    return detail::quotient_dimension(gens, f.ring(), opts);
}

// dim of T_I = k[[x]]^m / (I k[[x]]^m + <df/dx_1, ..., df/dx_n>), the
// module behind finite contact determinacy. Coincides with tau at m = 1.
template <class F>
Dim tjurina_module_dimension(const std::vector<Poly<F>>& gens, const MoraOptions& opts = {}) {
    if (gens.empty()) throw ZeroIdealError("empty generator list");
    RingP<F> ring = gens.front().ring();
    const int m = static_cast<int>(gens.size());
    const int n = ring->nvars();
    if (m > kMaxGenerators)
        throw InputError("at most " + std::to_string(kMaxGenerators) + " generators supported");
    std::vector<Vec<F>> module_gens;
    for (int i = 0; i < m; ++i) {
        if (gens[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < m; ++j) {
            Vec<F> v = Vec<F>::zero(ring, m);
            v.comp[static_cast<std::size_t>(j)] = gens[static_cast<std::size_t>(i)];
            module_gens.push_back(std::move(v));
        }
    }
    for (int i = 0; i < n; ++i) {
        Vec<F> v = Vec<F>::zero(ring, m);
        for (int j = 0; j < m; ++j)
            v.comp[static_cast<std::size_t>(j)] = gens[static_cast<std::size_t>(j)].derivative(i);
        if (!v.is_zero()) module_gens.push_back(std::move(v));
    }
    if (module_gens.empty()) return Dim::infinite();
    return vector_space_dimension(standard_basis(module_gens, m, opts));
}

// ord(I) = largest k with I inside <x>^k = the minimum order of a generator.
template <class F>
std::uint64_t order_of_ideal(const std::vector<Poly<F>>& gens) {
    std::optional<std::uint64_t> best;
    for (const auto& g : gens) {
        auto o = g.order();
        if (o && (!best || *o < *best)) best = o;
    }
    if (!best) throw ZeroIdealError("order of the zero ideal");
    return *best;
}

inline std::uint64_t determinacy_bound_value(const Dim& dim_t_i, std::uint64_t ord) {
    if (dim_t_i.is_infinite())
        throw NotFinitelyDeterminedError("dim T_I is infinite; not finitely contact determined");
    std::int64_t b = 2 * static_cast<std::int64_t>(dim_t_i.value()) - static_cast<std::int64_t>(ord) + 2;
    if (b < 0) throw MathError("internal: negative determinacy bound");
    return static_cast<std::uint64_t>(b);
}

// Contact determinacy bound 2*dim T_I - ord(I) + 2.
template <class F>
std::uint64_t determinacy_bound(const std::vector<Poly<F>>& gens, const MoraOptions& opts = {}) {
    return determinacy_bound_value(tjurina_module_dimension(gens, opts), order_of_ideal(gens));
}

// Complete intersection test: Krull dimension of the quotient equals
// n - m. One standard-basis computation instead of a stepwise regular
// sequence check; equivalent because the power series ring is
// Cohen-Macaulay. Zero generators are dropped (and do not count towards m).
template <class F>
bool is_complete_intersection(const std::vector<Poly<F>>& gens, const MoraOptions& opts = {},
                              std::vector<std::string>* warnings = nullptr) {
    auto nz = detail::nonzero_gens(gens);
    if (nz.size() != gens.size() && warnings)
        warnings->push_back("DroppedZeroGenerators: zero generators ignored");
    if (nz.empty()) throw ZeroIdealError("complete intersection test on the zero ideal");
    RingP<F> ring = nz.front().ring();
    for (const auto& g : nz)
        if (g.is_unit_local()) throw ImproperIdealError("generator is a unit; ideal is not proper");
    const int n = ring->nvars();
    const int m = static_cast<int>(nz.size());
    int dim = krull_dimension(standard_basis(nz, opts));
    return dim == n - m;
}

// Generators of I + I_(n-m)(Jac(I)): the input generators together with the
// (n-m) x (n-m) minors of the Jacobian. Pure dimension comes from the
// complete intersection precondition.
template <class F>
std::vector<Poly<F>> singular_locus_ideal(const std::vector<Poly<F>>& gens,
                                          const MoraOptions& opts = {},
                                          std::vector<std::string>* warnings = nullptr) {
    if (!is_complete_intersection(gens, opts, warnings))
        throw NotCompleteIntersectionError("singular locus needs a complete intersection");
    auto nz = detail::nonzero_gens(gens);
    RingP<F> ring = nz.front().ring();
    const int n = ring->nvars();
    const int m = static_cast<int>(nz.size());
    const int d = n - m;
    std::vector<Poly<F>> out = nz;
    for (auto& mr : minors(jacobian_matrix(nz), d)) out.push_back(std::move(mr));
    return out;
}

// Isolated singularity test: the singular locus is supported at most at the
// origin, i.e. the quotient by the singular locus ideal is finite
// dimensional. When the (n-m)-minor route is not available (n > 2m), falls
// back to finiteness of dim T_I, which characterizes isolated complete
// intersection singularities.
template <class F>
bool has_isolated_singularity(const std::vector<Poly<F>>& gens, const MoraOptions& opts = {},
                              std::vector<std::string>* warnings = nullptr) {
    if (!is_complete_intersection(gens, opts, warnings))
        throw NotCompleteIntersectionError("isolated singularity test needs a complete intersection");
    auto nz = detail::nonzero_gens(gens);
    RingP<F> ring = nz.front().ring();
    const int n = ring->nvars();
    const int m = static_cast<int>(nz.size());
    if (n - m > std::min(n, m)) {
        if (warnings)
            warnings->push_back("IsolatedViaTjurinaModule: (n-m)-minors unavailable, using dim T_I finiteness");
        return tjurina_module_dimension(nz, opts).is_finite();
    }
    auto sing = singular_locus_ideal(nz, opts, nullptr);
    return detail::quotient_dimension(sing, ring, opts).is_finite();
}

// tau(f) = mu(f) iff f lies in its Jacobian ideal (in the localization).
template <class F>
bool mu_equals_tau(const Poly<F>& f, const MoraOptions& opts = {}) {
    auto j = detail::nonzero_gens(detail::jacobian_ideal(f));
    if (j.empty()) return f.is_zero();  // j(f) = 0: membership degenerates
    return ideal_membership_local(f, standard_basis(j, opts), opts);
}

// One-stop report; constituent failures that only affect optional fields
// are recorded as warnings instead of aborting the whole fibre.
template <class F>
InvariantReport full_report(const std::vector<Poly<F>>& gens, const MoraOptions& opts = {}) {
    if (gens.empty()) throw ZeroIdealError("empty generator list");
    RingP<F> ring = gens.front().ring();
    for (const auto& g : gens) require_same_ring(ring, g.ring());
    InvariantReport rep;
    rep.field = ring->field.descriptor().str();
    rep.nvars = ring->nvars();

    auto nz = detail::nonzero_gens(gens);
    if (nz.empty()) throw ZeroIdealError("all generators are zero");
    if (nz.size() != gens.size())
        rep.warnings.push_back("DroppedZeroGenerators: zero generators ignored");
    rep.ngens = static_cast<int>(nz.size());
    if (rep.ngens > kMaxGenerators)
        throw InputError("at most " + std::to_string(kMaxGenerators) + " generators supported");

    if (rep.ngens == 1) {
        rep.mu = milnor_number(nz.front(), opts, &rep.warnings);
        rep.tau = tjurina_number(nz.front(), opts, nullptr);
    }
    rep.dim_T_I = tjurina_module_dimension(nz, opts);
    rep.ord = order_of_ideal(nz);
    if (rep.dim_T_I.is_finite()) {
        rep.determinacy_bound = determinacy_bound_value(rep.dim_T_I, rep.ord);
        if (ring->field.characteristic() != 0)
            rep.warnings.push_back(
                "FiniteFieldDeterminacy: bound computed over a finite field, where finite "
                "determinacy itself is only guaranteed for hypersurfaces");
    }
    try {
        rep.is_ci = is_complete_intersection(nz, opts, nullptr);
        if (*rep.is_ci)
            rep.isolated = has_isolated_singularity(nz, opts, &rep.warnings);
        else
            rep.warnings.push_back("NotCompleteIntersection: isolated-singularity test skipped");
    } catch (const ImproperIdealError&) {
        rep.warnings.push_back("ImproperIdeal: a generator is a unit; CI and isolated tests skipped");
    }
    return rep;
}

}  // namespace mutau

#endif
