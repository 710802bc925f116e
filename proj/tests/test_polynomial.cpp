#include <doctest.h>

#include "restrikt/newton.hpp"

#include <random>

using namespace restrikt;

namespace {

std::vector<LatticePoint> sorted_support(const BivariatePolynomial& p) {
    auto s = p.support();
    std::sort(s.begin(), s.end());
    return s;
}

BivariatePolynomial random_poly(std::mt19937& rng, int max_terms = 8, int max_deg = 9) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<long long> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    BivariatePolynomial p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        long long a = deg(rng), b = deg(rng);
        if (a + b < 2) a += 2;
        int c = coef(rng);
        if (c == 0) c = 1;
        p.add({a, b}, Rational(c, den(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("parse: canonical sparse form") {
    auto p = parse_polynomial("x2^2 - 2 x1^2 x2 + x1^4 + x1^5");
    CHECK(sorted_support(p) ==
          std::vector<LatticePoint>{{0, 2}, {2, 1}, {4, 0}, {5, 0}});
    CHECK(p.coeff({2, 1}) == Rational(-2));

    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    auto zero = parse_polynomial("0");
    CHECK(zero.is_zero());

    auto q = parse_polynomial("x1 x2^2 - 2 x1^3 x2 + x1^5 + x1^6");
    CHECK(sorted_support(q) ==
          std::vector<LatticePoint>{{1, 2}, {3, 1}, {5, 0}, {6, 0}});
}

TEST_CASE("parse: rational coefficients, stars, error positions") {
    auto p = parse_polynomial("3/4 x1^2 * x2 + 2*x1^3");
    CHECK(p.coeff({2, 1}) == Rational(3, 4));
    CHECK(p.coeff({3, 0}) == Rational(2));

    CHECK_THROWS_AS(parse_polynomial("x1^-2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x3"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 + "), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0 x1^2"), ParseError);
    try {
        parse_polynomial("x1^2 @ x2");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
    // cancelling monomials leave a canonical sparse form
    CHECK(parse_polynomial("x1^2 x2 - x1^2 x2 + x2^3") == parse_polynomial("x2^3"));
}

TEST_CASE("extended rationals") {
    ExtRational inf = ExtRational::infinity();
    ExtRational two{Rational(2)};
    CHECK(inf.is_infinite());
    CHECK((two + inf).is_infinite());
    CHECK((inf + inf).is_infinite());
    CHECK((two + ExtRational(Rational(1, 2))) == ExtRational(Rational(5, 2)));
    CHECK(two < inf);
    CHECK(!(inf < inf));
    CHECK(inf <= inf);
    CHECK(inf > two);
    CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("parse/print round trip") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 100; ++i) {
        BivariatePolynomial p = random_poly(rng);
        CHECK(parse_polynomial(p.to_string()) == p);
    }
    CHECK(parse_polynomial("0").to_string() == "0");
}

TEST_CASE("origin conditions") {
    CHECK(check_origin_conditions(parse_polynomial("x2^2 + x1^5")).ok);
    auto g = check_origin_conditions(parse_polynomial("x1 + x2^2"));
    CHECK(!g.ok);
    CHECK(g.violation == OriginCheck::Violation::NonzeroGradient);
    auto c = check_origin_conditions(parse_polynomial("1 + x1^2"));
    CHECK(!c.ok);
    CHECK(c.violation == OriginCheck::Violation::NonzeroConstant);
    auto z = check_origin_conditions(BivariatePolynomial::zero());
    CHECK(!z.ok);
    CHECK(z.violation == OriginCheck::Violation::IdenticallyZero);
}

TEST_CASE("normalize_gradient") {
    CHECK(normalize_gradient(parse_polynomial("3 x1 + x2^2")) == parse_polynomial("x2^2"));
    auto p = parse_polynomial("x2^2 + x1^5");
    CHECK(normalize_gradient(p) == p);
    CHECK(normalize_gradient(parse_polynomial("2 x1 - x2 + x1 x2")) ==
          parse_polynomial("x1 x2"));
    // idempotence
    std::mt19937 rng(7);
    for (int i = 0; i < 30; ++i) {
        auto q = normalize_gradient(random_poly(rng));
        CHECK(normalize_gradient(q) == q);
    }
}

TEST_CASE("apply_shear: expansion and inverse") {
    auto e1 = parse_polynomial("x2^2 - 2 x1^2 x2 + x1^4 + x1^5");
    ShearMap s(UnivariatePolynomial::monomial(Rational(1), 2));
    CHECK(apply_shear(e1, s) == parse_polynomial("x2^2 + x1^5"));

    auto e2 = parse_polynomial("x1 x2^2 - 2 x1^3 x2 + x1^5 + x1^6");
    CHECK(apply_shear(e2, s) == parse_polynomial("x1 x2^2 + x1^6"));

    ShearMap id{UnivariatePolynomial()};
    CHECK(apply_shear(e1, id) == e1);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int i = 0; i < 40; ++i) {
        BivariatePolynomial p = random_poly(rng);
        std::vector<Rational> cs = {Rational(0), Rational(coef(rng)), Rational(coef(rng), 2)};
        ShearMap sh{UnivariatePolynomial(cs)};
        CHECK(apply_shear(apply_shear(p, sh), sh.inverse()) == p);
    }
}

TEST_CASE("shear map validation") {
    std::vector<Rational> with_constant = {Rational(1), Rational(2)};
    CHECK_THROWS_AS(ShearMap{UnivariatePolynomial(with_constant)}, std::invalid_argument);
}

TEST_CASE("swap_variables is an involution") {
    CHECK(swap_variables(parse_polynomial("x1^2 x2")) == parse_polynomial("x1 x2^2"));
    CHECK(swap_variables(parse_polynomial("x2^2 + x1^5")) == parse_polynomial("x1^2 + x2^5"));
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        auto p = random_poly(rng);
        CHECK(swap_variables(swap_variables(p)) == p);
    }
}

TEST_CASE("face_series") {
    auto e1 = parse_polynomial("x2^2 - 2 x1^2 x2 + x1^4 + x1^5");
    NewtonPolyhedron np = NewtonPolyhedron::of(e1);
    REQUIRE(np.compact_edge_count() == 1);

    CHECK(face_series(e1, np.compact_edge_face(1)) ==
          parse_polynomial("x2^2 - 2 x1^2 x2 + x1^4"));
    CHECK(face_series(e1, np.vertex_face(0)) == parse_polynomial("x2^2"));

    auto e1a = parse_polynomial("x2^2 + x1^5");
    NewtonPolyhedron npa = NewtonPolyhedron::of(e1a);
    CHECK(face_series(e1a, npa.compact_edge_face(1)) == e1a);

    Face bogus{Face::Kind::Vertex, {3, 3}, {3, 3}, std::nullopt};
    CHECK_THROWS_AS(face_series(e1, bogus), FaceNotOnPolyhedron);
}

TEST_CASE("face series of a compact edge is kappa-homogeneous of degree 1") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> svals(2, 5);
    for (int i = 0; i < 40; ++i) {
        BivariatePolynomial p = random_poly(rng);
        NewtonPolyhedron np = NewtonPolyhedron::of(p);
        for (size_t l = 1; l <= np.compact_edge_count(); ++l) {
            const Weight& w = np.edge_weight(l);
            BivariatePolynomial fs = face_series(p, np.compact_edge_face(l));
            // common denominator q of the weight: substituting
            // (s^p1 x1, s^p2 x2) must multiply the series by s^q
            Int q = boost::multiprecision::lcm(denominator(w.k1), denominator(w.k2.value()));
            Int p1 = numerator(w.k1) * (q / denominator(w.k1));
            Int p2 = numerator(w.k2.value()) * (q / denominator(w.k2.value()));
            Rational s(svals(rng));
            BivariatePolynomial scaled, expect;
            for (const auto& [pt, c] : fs.terms()) {
                Int ex = p1 * pt.t1 + p2 * pt.t2;
                scaled.add(pt, c * rat_pow(s, ex.convert_to<long long>()));
                expect.add(pt, c * rat_pow(s, q.convert_to<long long>()));
            }
            CHECK(scaled == expect);
        }
    }
}
