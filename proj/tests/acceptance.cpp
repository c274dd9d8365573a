// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code = number of
// failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "mutau/fibres.hpp"
#include "mutau/oracle.hpp"

using namespace mutau;

namespace {

const std::string kFixtures = MUTAU_FIXTURE_DIR;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count() / 1000.0;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

template <class F>
std::vector<Poly<F>> parse_all(const std::vector<std::string>& ss, const RingP<F>& ring) {
    std::vector<Poly<F>> out;
    for (const auto& s : ss) out.push_back(parse_polynomial<F>(s, ring));
    return out;
}

// 1. Paper family reproduction: F = x^p + x^(p+1) + y^q.
bool criterion1(std::string& detail) {
    auto t0 = Clock::now();
    Check c;
    for (auto [p, q] : {std::pair{2ull, 3ull}, {3ull, 5ull}}) {
        std::string fs = "x^" + std::to_string(p) + "+x^" + std::to_string(p + 1) + "+y^" +
                         std::to_string(q);
        std::uint64_t mu0 = (p - 1) * (q - 1);
        auto rq = make_ring(QField{}, {"x", "y"});
        c.expect(milnor_number(parse_polynomial<QField>(fs, rq)) == Dim::finite(mu0),
                 fs + ": mu over Q != " + std::to_string(mu0));
        auto rp = make_ring(FpField(p), std::vector<std::string>{"x", "y"});
        c.expect(milnor_number(parse_polynomial<FpField>(fs, rp)) == Dim::finite(p * (q - 1)),
                 fs + ": mu over F_p != " + std::to_string(p * (q - 1)));
        auto rqq = make_ring(FpField(q), std::vector<std::string>{"x", "y"});
        c.expect(milnor_number(parse_polynomial<FpField>(fs, rqq)) == Dim::infinite(),
                 fs + ": mu over F_q not infinite");
        for (std::uint64_t r : {7ull, 11ull, 13ull}) {
            if (r == p || r == q) continue;
            auto rr = make_ring(FpField(r), std::vector<std::string>{"x", "y"});
            c.expect(milnor_number(parse_polynomial<FpField>(fs, rr)) == Dim::finite(mu0),
                     fs + ": mu over F_" + std::to_string(r) + " != " + std::to_string(mu0));
        }
    }
    double ms = ms_since(t0);
    c.expect(ms < 2000.0, "runtime " + std::to_string(ms) + " ms >= 2 s");
    detail = c.detail.str();
    return c.ok;
}

// 2. Example ex.Z reproduction.
bool criterion2(std::string& detail) {
    auto t0 = Clock::now();
    Check c;
    auto fam = load_family_file(kFixtures + "/ex_Z.fam");
    c.expect(completed_fibre_dimension(fam, FibrePoint::at_prime(5)) == Dim::finite(1),
             "d at p=5 != 1");
    for (std::uint64_t q : {2ull, 3ull, 7ull})
        c.expect(completed_fibre_dimension(fam, FibrePoint::at_prime(q)) == Dim::finite(0),
                 "d at p=" + std::to_string(q) + " != 0");
    c.expect(completed_fibre_dimension(fam, FibrePoint::generic()) == Dim::finite(0),
             "d at generic != 0");
    double ms = ms_since(t0);
    c.expect(ms < 1000.0, "runtime " + std::to_string(ms) + " ms >= 1 s");
    detail = c.detail.str();
    return c.ok;
}

// 3. Example ex.Kt reproduction.
bool criterion3(std::string& detail) {
    auto t0 = Clock::now();
    Check c;
    auto fam = load_family_file(kFixtures + "/ex_Kt.fam");
    c.expect(completed_fibre_dimension(fam, FibrePoint::at_value(Rational(0))) == Dim::finite(1),
             "d at t=0 != 1");
    c.expect(completed_fibre_dimension(fam, FibrePoint::at_value(Rational(1))) == Dim::finite(0),
             "d at t=1 != 0");
    c.expect(completed_fibre_dimension(fam, FibrePoint::generic()) == Dim::finite(0),
             "d at generic != 0 (unit detection over Q(t))");
    double ms = ms_since(t0);
    c.expect(ms < 1000.0, "runtime " + std::to_string(ms) + " ms >= 1 s");
    detail = c.detail.str();
    return c.ok;
}

// 4. Oracle equivalence on >= 50 random ideals over F_31.
bool criterion4(std::string& detail) {
    auto t0 = Clock::now();
    Check c;
    std::mt19937_64 rng(20250810);
    auto ring = make_ring(FpField(31), std::vector<std::string>{"x", "y", "z"});
    std::uniform_int_distribution<int> dc(1, 30), de(0, 4), dt(1, 4), dg(1, 4);
    int accepted = 0, attempts = 0;
    while (accepted < 50 && attempts < 2000) {
        ++attempts;
        std::vector<Poly<FpField>> gens;
        std::vector<Vec<FpField>> vgens;
        int m = dg(rng);
        for (int j = 0; j < m; ++j) {
            std::vector<Poly<FpField>::Term> ts;
            int k = dt(rng);
            for (int i = 0; i < k; ++i) {
                Exp mm{static_cast<std::uint32_t>(de(rng)), static_cast<std::uint32_t>(de(rng)),
                       static_cast<std::uint32_t>(de(rng))};
                if (total_degree(mm) > 4) continue;
                ts.push_back({Fp{static_cast<std::uint64_t>(dc(rng)), 31}, mm});
            }
            gens.push_back(Poly<FpField>::from_terms(ring, std::move(ts)));
        }
        for (const auto& g : gens) vgens.push_back(Vec<FpField>::from_poly(g));
        auto od = oracle_stable_dimension(vgens, 1, ring, 14, 60);
        if (!od || *od > 60) continue;
        ++accepted;
        Dim sb_dim = vector_space_dimension(standard_basis(gens, {2'000'000, false}));
        c.expect(sb_dim == Dim::finite(*od),
                 "sample " + std::to_string(accepted) + ": sb=" + sb_dim.str() + " oracle=" +
                     std::to_string(*od));
    }
    c.expect(accepted >= 50, "only " + std::to_string(accepted) + " stabilizing samples");
    double ms = ms_since(t0);
    c.expect(ms < 60000.0, "runtime " + std::to_string(ms) + " ms >= 60 s");
    detail = c.detail.str() + (c.ok ? " (" + std::to_string(accepted) + "/50 agree, " +
                                          std::to_string(static_cast<int>(ms)) + " ms)"
                                    : "");
    return c.ok;
}

// 5. Semicontinuity property suite over >= 100 random integer hypersurfaces.
bool criterion5(std::string& detail) {
    Check c;
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> dc(-4, 4), de(0, 5), dt(2, 6);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11};
    int families = 0, finite_comparisons = 0;
    while (families < 100) {
        auto ring = make_ring(QField{}, {"x", "y"});
        std::vector<Poly<QField>::Term> ts;
        int k = dt(rng);
        for (int i = 0; i < k; ++i) {
            Exp m{static_cast<std::uint32_t>(de(rng)), static_cast<std::uint32_t>(de(rng))};
            if (total_degree(m) == 0) continue;
            int cc = dc(rng);
            if (cc == 0) continue;
            ts.push_back({Rational(cc), m});
        }
        auto f = Poly<QField>::from_terms(ring, std::move(ts));
        if (f.is_zero()) continue;
        ++families;
        Dim mu0 = milnor_number(f);
        for (std::uint64_t p : primes) {
            std::vector<Poly<FpField>::Term> fts;
            auto rp = make_ring(FpField(p), std::vector<std::string>{"x", "y"});
            for (const auto& t : f.terms()) {
                Fp cc = reduce_mod_p(t.c, p);
                if (!cc.is_zero()) fts.push_back({cc, t.m});
            }
            auto fp = Poly<FpField>::from_terms(rp, std::move(fts));
            Dim mup = milnor_number(fp);
            if (mup.is_finite()) {
                ++finite_comparisons;
                c.expect(mu0 <= mup, "mu(F_0) > mu(F_" + std::to_string(p) + ") for " + f.str());
            }
            Dim taup = tjurina_number(fp);
            c.expect(taup <= mup, "tau > mu over F_" + std::to_string(p) + " for " + f.str());
        }
    }
    c.expect(finite_comparisons > 100, "too few finite fibres sampled");
    detail = c.detail.str() +
             (c.ok ? " (" + std::to_string(finite_comparisons) + " finite fibre comparisons)" : "");
    return c.ok;
}

// 6. Determinacy consistency for 20 isolated singularities over Q.
bool criterion6(std::string& detail) {
    Check c;
    std::mt19937_64 rng(60646);
    auto ring = make_ring(QField{}, {"x", "y"});
    std::uniform_int_distribution<int> da(2, 5), dcoef(1, 4), dmix(-2, 2), dsplit(0, 4);
    int done = 0, attempts = 0;
    while (done < 20 && attempts < 400) {
        ++attempts;
        // x^a + y^b plus a random mixed term keeps mu finite most of the time
        int a = da(rng), b = da(rng);
        std::vector<Poly<QField>::Term> ts;
        ts.push_back({Rational(dcoef(rng)), Exp{static_cast<std::uint32_t>(a), 0}});
        ts.push_back({Rational(dcoef(rng)), Exp{0, static_cast<std::uint32_t>(b)}});
        int mix = dmix(rng);
        if (mix != 0) ts.push_back({Rational(mix), Exp{1, 1}});
        auto f = Poly<QField>::from_terms(ring, std::move(ts));
        Dim mu = milnor_number(f);
        Dim tau = tjurina_number(f);
        if (mu.is_infinite() || tau.is_infinite()) continue;
        ++done;
        std::uint64_t bound = determinacy_bound<QField>({f});
        auto g = f;
        for (int k = 0; k < 5; ++k) {
            std::uint32_t deg = static_cast<std::uint32_t>(bound + 1 + dsplit(rng));
            std::uint32_t split = std::min<std::uint32_t>(static_cast<std::uint32_t>(dsplit(rng)), deg);
            g = g + Poly<QField>::monomial(ring, Rational(dcoef(rng)), Exp{deg - split, split});
        }
        c.expect(milnor_number(g) == mu, "mu changed above the bound for " + f.str());
        c.expect(tjurina_number(g) == tau, "tau changed above the bound for " + f.str());
    }
    c.expect(done >= 20, "only " + std::to_string(done) + " isolated samples");
    detail = c.detail.str();
    return c.ok;
}

// 7. Ordering and permutation independence on the fixture corpus.
bool criterion7(std::string& detail) {
    Check c;
    struct Entry {
        std::string field;
        std::vector<std::string> vars;
        std::vector<std::string> gens;
    };
    const std::vector<Entry> corpus = {
        {"Q", {"x", "y"}, {"x^3+y^2"}},
        {"Q", {"x", "y"}, {"x^2+y^2"}},
        {"Q", {"x", "y"}, {"x^2+x^3+y^3"}},
        {"Q", {"x", "y"}, {"x^3+y^5"}},
        {"Q", {"x", "y"}, {"x^3+x^4+y^5"}},
        {"Q", {"x", "y"}, {"x^2+y^3", "x*y"}},
        {"Q", {"x", "y"}, {"x^2+y^2", "x*y"}},
        {"Q", {"x", "y"}, {"x", "y"}},
        {"Q", {"x", "y"}, {"x*y"}},
        {"Q", {"x", "y"}, {"x-x^2"}},
        {"Q", {"x", "y", "z"}, {"x^2+y^2+z^2"}},
        {"F:2", {"x", "y"}, {"x^2+x^3+y^3"}},
        {"F:3", {"x", "y"}, {"x^2+x^3+y^3"}},
        {"F:5", {"x", "y"}, {"x^2+x^3+y^3"}},
        {"F:7", {"x", "y"}, {"x^3+x^4+y^5"}},
        {"F:31", {"x", "y"}, {"x^4+y^4+x*y^3"}},
    };

    auto run_for = [&](const Entry& e, OrdKind ord, bool reversed) {
        auto compute = [&](auto ring) {
            auto gens = parse_all(e.gens, ring);
            if (reversed) std::reverse(gens.begin(), gens.end());
            std::optional<Dim> mu, tau;
            if (gens.size() == 1) {
                mu = milnor_number(gens[0]);
                tau = tjurina_number(gens[0]);
            }
            Dim dimT = tjurina_module_dimension(gens);
            int krull = krull_dimension(standard_basis(gens));
            std::ostringstream os;
            os << (mu ? mu->str() : "-") << "/" << (tau ? tau->str() : "-") << "/" << dimT.str()
               << "/" << krull;
            return os.str();
        };
        FieldDescriptor fd = parse_field_descriptor(e.field);
        if (fd.tag == FieldTag::Q) return compute(make_ring(QField{}, e.vars, ord));
        return compute(make_ring(FpField(fd.p), e.vars, ord));
    };

    for (const auto& e : corpus) {
        std::string base = run_for(e, OrdKind::Ds, false);
        c.expect(run_for(e, OrdKind::Ls, false) == base,
                 "ds/ls disagree on " + e.gens[0] + " over " + e.field);
        c.expect(run_for(e, OrdKind::Ds, true) == base,
                 "generator permutation changes invariants on " + e.gens[0]);
        c.expect(run_for(e, OrdKind::Ls, true) == base,
                 "ls+permutation changes invariants on " + e.gens[0]);
    }
    detail = c.detail.str();
    return c.ok;
}

// 8. Mora termination regression on <x - x^2>.
bool criterion8(std::string& detail) {
    Check c;
    auto t0 = Clock::now();
    auto ring = make_ring(QField{}, {"x"});
    auto sb = standard_basis(parse_all<QField>({"x-x^2"}, ring));
    double ms = ms_since(t0);
    c.expect(sb.leading[0].size() == 1 && sb.leading[0][0] == Exp{1},
             "leading ideal is not <x>");
    c.expect(vector_space_dimension(sb) == Dim::finite(1), "dimension != 1");
    c.expect(ms < 100.0, "runtime " + std::to_string(ms) + " ms >= 100 ms");
    detail = c.detail.str() + (c.ok ? " (" + std::to_string(ms) + " ms)" : "");
    return c.ok;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<bool(std::string&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "paper family reproduction (mu over Q, F_p, F_q, F_r)", criterion1},
        {2, "ex.Z reproduction (Z-family x-5)", criterion2},
        {3, "ex.Kt reproduction (Q[t]-family t-x)", criterion3},
        {4, "oracle equivalence on 50 random ideals over F_31", criterion4},
        {5, "semicontinuity suite over 100 random integer hypersurfaces", criterion5},
        {6, "determinacy consistency under perturbation above the bound", criterion6},
        {7, "ordering and permutation independence on the fixture corpus", criterion7},
        {8, "mora termination regression on <x - x^2>", criterion8},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name;
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
    }
    return failures;
}
