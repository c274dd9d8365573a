#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mutau/matrix.hpp"
#include "mutau/parser.hpp"

using namespace mutau;

namespace {
RingP<QField> qring(std::vector<std::string> vars, OrdKind ord = OrdKind::Ds) {
    return make_ring(QField{}, std::move(vars), ord);
}
}  // namespace

TEST_CASE("parse examples") {
    auto ring = qring({"x", "y"});
    auto f = parse_polynomial<QField>("x^2*y + 3", ring);
    CHECK(f.terms().size() == 2);
    CHECK(f.str() == "3 + x^2*y");  // constant term is the ds maximum

    auto g = parse_polynomial<QField>("x - x^2", ring);
    REQUIRE(g.terms().size() == 2);
    CHECK(total_degree(g.terms()[0].m) == 1);  // x before -x^2 under ds
    CHECK(total_degree(g.terms()[1].m) == 2);

    CHECK_THROWS_AS(parse_polynomial<QField>("x/y", ring), DivisionNotAllowedError);
    CHECK_THROWS_AS(parse_polynomial<QField>("x + z", ring), UnknownVariableError);
    CHECK_THROWS_AS(parse_polynomial<QField>("2x", ring), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial<QField>("x +", ring), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial<QField>("1/0", ring), DivisionByZeroError);
    CHECK(parse_polynomial<QField>("  x ^ 2 * y + 3 ", ring) == f);
}

TEST_CASE("parameter fields accept t in coefficient position only") {
    auto ring = make_ring(QtField{}, {"x"});
    auto f = parse_polynomial<QtField>("((t^2+1)/(t-1))*x", ring);
    CHECK(f.terms().size() == 1);
    CHECK_FALSE(f.terms()[0].c.is_polynomial());
    CHECK_THROWS_AS(parse_polynomial<QtField>("t/x", ring), DivisionNotAllowedError);
    // t is not a ring variable over plain Q
    auto q = qring({"x"});
    CHECK_THROWS_AS(parse_polynomial<QField>("t*x", q), UnknownVariableError);
}

TEST_CASE("monomial comparison: ds") {
    auto c = [](const Exp& a, const Exp& b) { return cmp_mono(OrdKind::Ds, a, b); };
    CHECK(c({0, 0}, {1, 0}) > 0);   // 1 > x
    CHECK(c({1, 0}, {0, 1}) > 0);   // x > y (reverse lex tie-break)
    CHECK(c({1, 0}, {0, 2}) > 0);   // x > y^2 (degree 1 beats 2)
    CHECK(c({1, 1}, {1, 1}) == 0);
    CHECK_THROWS_AS(cmp_mono(OrdKind::Ds, {1}, {1, 0}), RingMismatchError);
}

TEST_CASE("monomial comparison: ls") {
    auto c = [](const Exp& a, const Exp& b) { return cmp_mono(OrdKind::Ls, a, b); };
    CHECK(c({0, 0}, {1, 0}) > 0);  // 1 > x
    CHECK(c({0, 2}, {1, 0}) > 0);  // y^2 > x under negative lex
}

TEST_CASE("1 is the maximum and the order is total and multiplicative") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(0, 5);
    for (OrdKind ord : {OrdKind::Ds, OrdKind::Ls}) {
        for (int it = 0; it < 500; ++it) {
            Exp a{static_cast<std::uint32_t>(d(rng)), static_cast<std::uint32_t>(d(rng)),
                  static_cast<std::uint32_t>(d(rng))};
            Exp b{static_cast<std::uint32_t>(d(rng)), static_cast<std::uint32_t>(d(rng)),
                  static_cast<std::uint32_t>(d(rng))};
            Exp c{static_cast<std::uint32_t>(d(rng)), static_cast<std::uint32_t>(d(rng)),
                  static_cast<std::uint32_t>(d(rng))};
            Exp one{0, 0, 0};
            CHECK(cmp_mono(ord, one, a) >= 0);
            // antisymmetry
            CHECK(cmp_mono(ord, a, b) == -cmp_mono(ord, b, a));
            // compatibility with multiplication
            int ab = cmp_mono(ord, a, b);
            CHECK(cmp_mono(ord, exp_sum(a, c), exp_sum(b, c)) == ab);
        }
    }
}

TEST_CASE("polynomial arithmetic") {
    auto ring = qring({"x"});
    auto xp1 = parse_polynomial<QField>("x+1", ring);
    auto xm1 = parse_polynomial<QField>("x-1", ring);
    CHECK((xp1 * xm1).str() == "-1 + x^2");
    CHECK((xp1 - xp1).is_zero());

    auto ring2 = qring({"x", "y"});
    auto f = parse_polynomial<QField>("x - x^2", ring2);
    auto g = parse_polynomial<QField>("1 + x", ring2);
    CHECK((f * g) == parse_polynomial<QField>("x - x^3", ring2));

    auto other = qring({"x", "z"});
    CHECK_THROWS_AS(f + parse_polynomial<QField>("z", other), RingMismatchError);
}

TEST_CASE("derivatives, including characteristic p") {
    auto ring = qring({"x", "y"});
    auto f = parse_polynomial<QField>("x^3 + y^2", ring);
    CHECK(f.derivative(0) == parse_polynomial<QField>("3*x^2", ring));

    auto r3 = make_ring(FpField(3), std::vector<std::string>{"x", "y"});
    CHECK(parse_polynomial<FpField>("x^3", r3).derivative(0).is_zero());
    CHECK(parse_polynomial<FpField>("x^2+x^3+y^3", r3).derivative(1).is_zero());
}

TEST_CASE("Leibniz rule") {
    std::mt19937_64 rng(17);
    auto ring = qring({"x", "y"});
    std::uniform_int_distribution<int> dc(-4, 4), de(0, 3), dt(1, 4);
    auto rand_poly = [&]() {
        std::vector<Poly<QField>::Term> ts;
        int k = dt(rng);
        for (int i = 0; i < k; ++i) {
            Exp m{static_cast<std::uint32_t>(de(rng)), static_cast<std::uint32_t>(de(rng))};
            ts.push_back({Rational(dc(rng)), m});
        }
        return Poly<QField>::from_terms(ring, std::move(ts));
    };
    for (int i = 0; i < 200; ++i) {
        auto f = rand_poly();
        auto g = rand_poly();
        for (int v = 0; v < 2; ++v) {
            auto lhs = (f * g).derivative(v);
            auto rhs = f * g.derivative(v) + g * f.derivative(v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("order of a polynomial") {
    auto ring = qring({"x", "y"});
    CHECK(*parse_polynomial<QField>("x^2 + y^5", ring).order() == 2);
    CHECK(!Poly<QField>::zero(ring).order().has_value());
    CHECK(*parse_polynomial<QField>("1 + x", ring).order() == 0);
}

TEST_CASE("local units") {
    auto qt = make_ring(QtField{}, {"x"});
    CHECK(parse_polynomial<QtField>("t - x", qt).is_unit_local());
    auto f5 = make_ring(FpField(5), std::vector<std::string>{"x"});
    CHECK_FALSE(parse_polynomial<FpField>("x - 5", f5).is_unit_local());
    auto f3 = make_ring(FpField(3), std::vector<std::string>{"x"});
    CHECK(parse_polynomial<FpField>("x - 5", f3).is_unit_local());
}

TEST_CASE("print/parse round trip") {
    std::mt19937_64 rng(23);
    auto ring = qring({"x", "y", "z"});
    std::uniform_int_distribution<int> dc(-9, 9), de(0, 4), dt(0, 6);
    for (int i = 0; i < 300; ++i) {
        std::vector<Poly<QField>::Term> ts;
        int k = dt(rng);
        for (int j = 0; j < k; ++j) {
            Exp m{static_cast<std::uint32_t>(de(rng)), static_cast<std::uint32_t>(de(rng)),
                  static_cast<std::uint32_t>(de(rng))};
            ts.push_back({Rational(BigInt(dc(rng)), BigInt(std::max(1, std::abs(dc(rng))))), m});
        }
        auto f = Poly<QField>::from_terms(ring, std::move(ts));
        CHECK(parse_polynomial<QField>(f.str(), ring) == f);
    }
    // and with parameter coefficients
    auto qt = make_ring(QtField{}, {"x", "y"});
    auto f = parse_polynomial<QtField>("((t^2+1)/(t-1))*x + (t-2)*y^2 - 3", qt);
    CHECK(parse_polynomial<QtField>(f.str(), qt) == f);
}

TEST_CASE("jacobian matrix shape and entries") {
    auto ring = qring({"x", "y"});
    auto f1 = parse_polynomial<QField>("x^2+y^2", ring);
    auto f2 = parse_polynomial<QField>("x*y", ring);
    auto J = jacobian_matrix<QField>({f1, f2});
    CHECK(J.rows == 2);
    CHECK(J.cols == 2);
    CHECK(J.at(0, 0) == parse_polynomial<QField>("2*x", ring));
    CHECK(J.at(0, 1) == parse_polynomial<QField>("y", ring));
    CHECK(J.at(1, 0) == parse_polynomial<QField>("2*y", ring));
    CHECK(J.at(1, 1) == parse_polynomial<QField>("x", ring));

    auto r3 = make_ring(FpField(3), std::vector<std::string>{"x"});
    auto J3 = jacobian_matrix<FpField>({parse_polynomial<FpField>("x^3", r3)});
    CHECK(J3.at(0, 0).is_zero());
}

TEST_CASE("minors") {
    auto ring = qring({"x", "y"});
    auto J = jacobian_matrix<QField>({parse_polynomial<QField>("x^2+y^2", ring),
                                      parse_polynomial<QField>("x*y", ring)});
    auto m2 = minors(J, 2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == parse_polynomial<QField>("2*x^2 - 2*y^2", ring));

    auto m0 = minors(J, 0);
    REQUIRE(m0.size() == 1);
    CHECK(m0[0] == parse_polynomial<QField>("1", ring));

    PolyMatrix<QField> row{ring, 1, 2, {parse_polynomial<QField>("x", ring),
                                        parse_polynomial<QField>("y", ring)}};
    auto m1 = minors(row, 1);
    REQUIRE(m1.size() == 2);
    CHECK(m1[0] == parse_polynomial<QField>("x", ring));
    CHECK(m1[1] == parse_polynomial<QField>("y", ring));

    CHECK_THROWS_AS(minors(row, 2), InputError);
}

TEST_CASE("Bareiss agrees with cofactor expansion on random matrices") {
    std::mt19937_64 rng(31);
    auto ring = qring({"x", "y"});
    std::uniform_int_distribution<int> dc(-3, 3), de(0, 2), dt(0, 2);
    auto rand_poly = [&]() {
        std::vector<Poly<QField>::Term> ts;
        int k = dt(rng);
        for (int j = 0; j <= k; ++j) {
            Exp m{static_cast<std::uint32_t>(de(rng)), static_cast<std::uint32_t>(de(rng))};
            ts.push_back({Rational(dc(rng)), m});
        }
        return Poly<QField>::from_terms(ring, std::move(ts));
    };
    for (int n : {2, 3, 4}) {
        for (int it = 0; it < 25; ++it) {
            PolyMatrix<QField> M{ring, n, n, {}};
            for (int i = 0; i < n * n; ++i) M.entries.push_back(rand_poly());
            std::vector<int> idx;
            for (int i = 0; i < n; ++i) idx.push_back(i);
            auto a = detail::det_bareiss(M, idx, idx);
            auto b = detail::det_cofactor(M, idx, idx);
            CHECK(a == b);
        }
    }
}
