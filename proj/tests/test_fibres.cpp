#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mutau/fibres.hpp"

using namespace mutau;

namespace {
const std::string kFixtures = MUTAU_FIXTURE_DIR;

FamilySpec fixture(const std::string& name) { return load_family_file(kFixtures + "/" + name); }
}  // namespace

TEST_CASE("family files parse and round-trip") {
    auto fam = fixture("ex_Z.fam");
    CHECK(fam.base == BaseRing::Z);
    CHECK(fam.kind == FamilyKind::Presentation);
    CHECK(fam.rows == 1);
    CHECK(fam.cols == 1);
    std::string text = serialize_family(fam);
    auto fam2 = parse_family_text(text);
    CHECK(serialize_family(fam2) == text);

    auto kt = fixture("ex_Kt.fam");
    CHECK(kt.base == BaseRing::Qt);
    CHECK(serialize_family(parse_family_text(serialize_family(kt))) == serialize_family(kt));
}

TEST_CASE("family validation rejects out-of-ring coefficients") {
    CHECK_THROWS_AS(parse_family_text("base Z\nvars x\nkind hypersurface\nentry x/2\n"),
                    InputError);
    CHECK_THROWS_AS(
        parse_family_text("base Q[t]\nvars x\nkind hypersurface\nentry (1/(t-1))*x\n"),
        InputError);
    CHECK_THROWS_AS(parse_family_text("base Z\nvars x\nkind presentation 1 2\nentry x\n"),
                    InputError);
    CHECK_THROWS_AS(parse_family_text("vars x\nkind hypersurface\nentry x\n"), InputError);
}

TEST_CASE("specialization of the ex.Z matrix") {
    auto fam = fixture("ex_Z.fam");
    auto at3 = specialize_z_at_prime(fam, 3);
    REQUIRE(at3.size() == 1);
    CHECK(at3[0].is_unit_local());  // x - 5 = x + 1 mod 3
    auto at5 = specialize_z_at_prime(fam, 5);
    CHECK_FALSE(at5[0].is_unit_local());  // x - 5 = x mod 5
    auto gen = specialize_z_generic(fam);
    CHECK(gen[0].is_unit_local());  // constant term -5 over Q
}

TEST_CASE("specialization of the ex.Kt matrix") {
    auto fam = fixture("ex_Kt.fam");
    auto at0 = specialize_qt_at_value(fam, Rational(0));
    REQUIRE(at0.size() == 1);
    CHECK_FALSE(at0[0].is_unit_local());  // -x
    CHECK(at0[0].terms().size() == 1);
    auto at1 = specialize_qt_at_value(fam, Rational(1));
    CHECK(at1[0].is_unit_local());  // 1 - x
    auto gen = specialize_qt_generic(fam);
    CHECK(gen[0].is_unit_local());  // t is a unit in Q(t)
}

TEST_CASE("completed fibre dimensions reproduce ex.Z") {
    auto fam = fixture("ex_Z.fam");
    CHECK(completed_fibre_dimension(fam, FibrePoint::at_prime(5)) == Dim::finite(1));
    for (std::uint64_t q : {2, 3, 7})
        CHECK(completed_fibre_dimension(fam, FibrePoint::at_prime(q)) == Dim::finite(0));
    CHECK(completed_fibre_dimension(fam, FibrePoint::generic()) == Dim::finite(0));
}

TEST_CASE("completed fibre dimensions reproduce ex.Kt") {
    auto fam = fixture("ex_Kt.fam");
    CHECK(completed_fibre_dimension(fam, FibrePoint::at_value(Rational(0))) == Dim::finite(1));
    CHECK(completed_fibre_dimension(fam, FibrePoint::at_value(Rational(1))) == Dim::finite(0));
    CHECK(completed_fibre_dimension(fam, FibrePoint::generic()) == Dim::finite(0));
}

TEST_CASE("identity presentation has zero cokernel everywhere") {
    auto fam = parse_family_text("base Z\nvars x\nkind presentation 1 1\nentry 1\n");
    CHECK(completed_fibre_dimension(fam, FibrePoint::generic()) == Dim::finite(0));
    CHECK(completed_fibre_dimension(fam, FibrePoint::at_prime(7)) == Dim::finite(0));
}

TEST_CASE("fibre field names") {
    auto fam = fixture("ex_Z.fam");
    CHECK(fibre_field_name(fam, FibrePoint::at_prime(5)) == "F:5");
    CHECK(fibre_field_name(fam, FibrePoint::generic()) == "Q");
    auto kt = fixture("ex_Kt.fam");
    CHECK(fibre_field_name(kt, FibrePoint::at_value(Rational(0))) == "Q");
    CHECK(fibre_field_name(kt, FibrePoint::generic()) == "Qt");
}

TEST_CASE("point parsing and validation") {
    auto fam = fixture("ex_Z.fam");
    CHECK(parse_fibre_point("p=5", fam).prime == 5);
    CHECK(parse_fibre_point("generic", fam).kind == FibrePoint::Kind::Generic);
    CHECK_THROWS_AS(parse_fibre_point("t=0", fam), InputError);
    CHECK_THROWS_AS(parse_fibre_point("p=6", fam), NotPrimeError);
    auto kt = fixture("ex_Kt.fam");
    CHECK(parse_fibre_point("t=-1/2", kt).value == Rational(BigInt(-1), BigInt(2)));
    CHECK_THROWS_AS(parse_fibre_point("p=5", kt), InputError);
}

TEST_CASE("specialization commutes with ring operations") {
    std::mt19937_64 rng(71);
    auto ring = make_ring(QField{}, {"x", "y"});
    std::uniform_int_distribution<int> dc(-6, 6), de(0, 3), dt(1, 4);
    auto rand_zpoly = [&]() {
        std::vector<Poly<QField>::Term> ts;
        int k = dt(rng);
        for (int i = 0; i < k; ++i)
            ts.push_back({Rational(dc(rng)),
                          Exp{static_cast<std::uint32_t>(de(rng)), static_cast<std::uint32_t>(de(rng))}});
        return Poly<QField>::from_terms(ring, std::move(ts));
    };
    for (std::uint64_t p : {2, 5, 13}) {
        auto rp = make_ring(FpField(p), std::vector<std::string>{"x", "y"});
        auto reduce = [&](const Poly<QField>& f) {
            std::vector<Poly<FpField>::Term> ts;
            for (const auto& t : f.terms()) {
                Fp c = reduce_mod_p(t.c, p);
                if (!c.is_zero()) ts.push_back({c, t.m});
            }
            return Poly<FpField>::from_terms(rp, std::move(ts));
        };
        for (int i = 0; i < 60; ++i) {
            auto f = rand_zpoly();
            auto g = rand_zpoly();
            CHECK(reduce(f * g) == reduce(f) * reduce(g));
            CHECK(reduce(f + g) == reduce(f) + reduce(g));
        }
    }
}

TEST_CASE("modular scan of the paper hypersurface family (p=2, q=3)") {
    auto fam = fixture("mu_p2q3.fam");
    auto rep = modular_scan(fam, {2, 3, 5, 7});
    CHECK(rep.quantity == ScanQuantity::Mu);
    CHECK(rep.generic_value == Dim::finite(2));
    REQUIRE(rep.entries.size() == 4);
    CHECK(rep.entries[0].value == Dim::finite(4));
    CHECK(rep.entries[1].value == Dim::infinite());
    CHECK(rep.entries[2].value == Dim::finite(2));
    CHECK(rep.entries[3].value == Dim::finite(2));
    CHECK(rep.lucky == std::vector<std::uint64_t>{5, 7});
    CHECK(rep.violations.empty());
}

TEST_CASE("modular scan of the paper hypersurface family (p=3, q=5)") {
    auto fam = fixture("mu_p3q5.fam");
    auto rep = modular_scan(fam, {3, 5, 7});
    CHECK(rep.generic_value == Dim::finite(8));
    CHECK(rep.entries[0].value == Dim::finite(12));
    CHECK(rep.entries[1].value == Dim::infinite());
    CHECK(rep.entries[2].value == Dim::finite(8));
    CHECK(rep.violations.empty());
}

TEST_CASE("modular scan of a presentation family") {
    auto fam = fixture("ex_Z.fam");
    auto rep = modular_scan(fam, {2, 5});
    CHECK(rep.quantity == ScanQuantity::CokerDim);
    CHECK(rep.generic_value == Dim::finite(0));
    CHECK(rep.entries[0].value == Dim::finite(0));
    CHECK(rep.entries[1].value == Dim::finite(1));
    CHECK(rep.lucky == std::vector<std::uint64_t>{2});
    CHECK(rep.violations.empty());
}

TEST_CASE("modular scan is deterministic under concurrency and prime order") {
    auto fam = fixture("mu_p2q3.fam");
    auto a = modular_scan(fam, {7, 2, 5, 3}, {}, true);
    auto b = modular_scan(fam, {2, 3, 5, 7}, {}, false);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].prime == b.entries[i].prime);
        CHECK(a.entries[i].value == b.entries[i].value);
    }
    CHECK(a.lucky == b.lucky);
}

TEST_CASE("modular scan rejects non-primes and non-Z bases") {
    auto fam = fixture("mu_p2q3.fam");
    CHECK_THROWS_AS(modular_scan(fam, {4}), NotPrimeError);
    auto kt = fixture("ex_Kt.fam");
    CHECK_THROWS_AS(modular_scan(kt, {2}), InputError);
}

TEST_CASE("lucky primes are cofinite; the bad ones divide the discriminant-like pq") {
    auto fam = fixture("mu_p2q3.fam");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 2; n <= 200; ++n)
        if (is_prime_u64(n)) primes.push_back(n);
    auto rep = modular_scan(fam, primes);
    std::size_t classified = rep.lucky.size();
    for (const auto& e : rep.entries) {
        bool lucky = false;
        for (auto p : rep.lucky) lucky = lucky || p == e.prime;
        if (!lucky) {
            CHECK((6 % e.prime) == 0);  // non-lucky primes divide p*q = 6
            ++classified;
        }
    }
    CHECK(classified == rep.entries.size());  // every prime classified exactly once
    double bad_fraction =
        static_cast<double>(rep.entries.size() - rep.lucky.size()) / static_cast<double>(rep.entries.size());
    MESSAGE("non-lucky fraction over primes <= 200: ", bad_fraction);
    CHECK(rep.violations.empty());
}

TEST_CASE("semicontinuity check: ex.Kt") {
    auto fam = fixture("ex_Kt.fam");
    auto rep = semicontinuity_check(fam, FibrePoint::at_value(Rational(0)),
                                    {FibrePoint::generic(), FibrePoint::at_value(Rational(1))});
    CHECK(rep.quantity == ScanQuantity::CokerDim);
    CHECK(*rep.special_value == Dim::finite(1));
    REQUIRE(rep.comparisons.size() == 2);
    CHECK(rep.comparisons[0].status == "PASS");
    CHECK(rep.comparisons[0].hard);
    CHECK(rep.comparisons[1].status == "PASS");
    CHECK_FALSE(rep.comparisons[1].hard);
    CHECK(rep.ok);
}

TEST_CASE("semicontinuity check: ex.Z and the mu family") {
    auto rep = semicontinuity_check(fixture("ex_Z.fam"), FibrePoint::at_prime(5),
                                    {FibrePoint::generic()});
    CHECK(*rep.special_value == Dim::finite(1));
    CHECK(rep.comparisons[0].status == "PASS");
    CHECK(rep.ok);

    auto mu = semicontinuity_check(fixture("mu_p2q3.fam"), FibrePoint::at_prime(2),
                                   {FibrePoint::generic()});
    CHECK(*mu.special_value == Dim::finite(4));
    REQUIRE(mu.comparisons[0].value.has_value());
    CHECK(*mu.comparisons[0].value == Dim::finite(2));
    CHECK(mu.comparisons[0].status == "PASS");
}

TEST_CASE("semicontinuity check: vacuous at an infinite special value") {
    auto fam = fixture("mu_p2q3.fam");
    auto rep = semicontinuity_check(fam, FibrePoint::at_prime(3), {FibrePoint::generic()});
    CHECK(rep.vacuous);
    CHECK(rep.comparisons[0].status == "VACUOUS");
    CHECK(rep.ok);
}

TEST_CASE("fibre invariant scan of an icis family") {
    auto fam = fixture("icis.fam");
    auto reports = fibre_invariant_scan(
        fam, {FibrePoint::generic(), FibrePoint::at_prime(2), FibrePoint::at_prime(3)});
    REQUIRE(reports.size() == 3);
    REQUIRE(reports[0].d_hat.has_value());
    REQUIRE(reports[0].invariants.has_value());
    Dim generic_T = *reports[0].d_hat;
    CHECK(generic_T.is_finite());
    for (const auto& r : reports) {
        REQUIRE(r.invariants.has_value());
        CHECK(r.invariants->is_ci == true);
        REQUIRE(r.d_hat.has_value());
        if (r.d_hat->is_finite()) CHECK(generic_T <= *r.d_hat);
    }
}

TEST_CASE("fibre invariant scan of the cusp family") {
    auto fam = fixture("cusp.fam");
    auto reports = fibre_invariant_scan(fam, {FibrePoint::generic(), FibrePoint::at_prime(2)});
    REQUIRE(reports.size() == 2);
    REQUIRE(reports[0].invariants.has_value());
    REQUIRE(reports[1].invariants.has_value());
    Dim tau_gen = *reports[0].invariants->tau;
    Dim tau_2 = *reports[1].invariants->tau;
    CHECK(tau_gen == Dim::finite(2));
    CHECK(tau_gen <= tau_2);
}

TEST_CASE("degenerate fibres are reported, not crashed") {
    auto fam = fixture("degenerate_t.fam");
    auto reports = fibre_invariant_scan(fam, {FibrePoint::at_value(Rational(0))});
    REQUIRE(reports.size() == 1);
    CHECK_FALSE(reports[0].invariants.has_value());
    CHECK_FALSE(reports[0].note.empty());
}

TEST_CASE("semicontinuity over 100 random integer hypersurfaces") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<int> dc(-4, 4), de(0, 5), dt(2, 6);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11};
    int families = 0;
    while (families < 100) {
        auto ring = make_ring(QField{}, {"x", "y"});
        std::vector<Poly<QField>::Term> ts;
        int k = dt(rng);
        for (int i = 0; i < k; ++i) {
            Exp m{static_cast<std::uint32_t>(de(rng)), static_cast<std::uint32_t>(de(rng))};
            if (total_degree(m) == 0) continue;
            int c = dc(rng);
            if (c == 0) continue;
            ts.push_back({Rational(c), m});
        }
        auto f = Poly<QField>::from_terms(ring, std::move(ts));
        if (f.is_zero()) continue;
        ++families;
        auto fam = family_over_z({f.str()}, {"x", "y"}, OrdKind::Ds, FamilyKind::Hypersurface);
        auto rep = modular_scan(fam, primes, {}, false);
        CHECK(rep.violations.empty());
        for (const auto& e : rep.entries) {
            if (e.status != ScanEntry::Status::Ok) continue;
            if (e.value.is_finite()) CHECK(rep.generic_value <= e.value);
            // tau <= mu on each fibre
            auto polys = specialize_z_at_prime(fam, e.prime);
            Dim tau = tjurina_number(polys[0]);
            Dim mu = milnor_number(polys[0]);
            CHECK(tau <= mu);
        }
    }
}
