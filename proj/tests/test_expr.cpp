#include <doctest.h>

#include "test_support.hpp"

#include "cohomjump/expr.hpp"

using namespace cohomjump;
using testsupport::Rng;

TEST_CASE("gaussian rational expressions") {
    CHECK(parse_gaussian("0") == GaussianRational());
    CHECK(parse_gaussian("3/4") == GaussianRational(make_rational(3, 4)));
    CHECK(parse_gaussian("-2") == GaussianRational(-2));
    CHECK(parse_gaussian("i") == GaussianRational::i());
    CHECK(parse_gaussian("i*i") == GaussianRational(-1));
    CHECK(parse_gaussian("(1+i)*(1-i)") == GaussianRational(2));
    CHECK(parse_gaussian("1/(1+i)") ==
          GaussianRational(make_rational(1, 2), make_rational(-1, 2)));
    CHECK(parse_gaussian("2^3") == GaussianRational(8));
    CHECK(parse_gaussian("(1+i)^2") == GaussianRational::i() * GaussianRational(2));
    CHECK(parse_gaussian(" 1 + 2 * 3 ") == GaussianRational(7));
    CHECK(parse_gaussian("-(1+i) + i") == GaussianRational(-1));
    CHECK_THROWS_AS(parse_gaussian("1/0"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("1 +"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("x"), ParseError);
    CHECK_THROWS_AS(parse_gaussian(""), ParseError);
    CHECK_THROWS_AS(parse_gaussian("(1"), ParseError);
}

TEST_CASE("gaussian rational lists") {
    auto xs = parse_gaussian_list("1, -2, i ,3/4");
    REQUIRE(xs.size() == 4);
    CHECK(xs[0] == GaussianRational(1));
    CHECK(xs[1] == GaussianRational(-2));
    CHECK(xs[2] == GaussianRational::i());
    CHECK(xs[3] == GaussianRational(make_rational(3, 4)));
    CHECK_THROWS_AS(parse_gaussian_list("1,,2"), ParseError);
}

TEST_CASE("scalar jets in parameters") {
    auto p = make_params({"t11", "t12"});
    Jet j = parse_scalar_jet("t11*t12 - 2*t11 + 1", p, 2);
    CHECK(j.render() == "1 - 2*t11 + t11*t12");
    // truncation: degree-3 terms drop at order 2
    Jet k = parse_scalar_jet("t11^3 + t12", p, 2);
    CHECK(k.render() == "t12");
    // division by a constant works, by a parameter does not
    CHECK(parse_scalar_jet("t11/2", p, 1).render() ==
          Jet::parameter(p, 1, 0).scaled(make_rational(1, 2)).render());
    CHECK_THROWS_AS(parse_scalar_jet("1/t11", p, 2), ParseError);
    CHECK_THROWS_AS(parse_scalar_jet("t13", p, 2), ParseError);
    // nested powers of sums
    Jet n = parse_scalar_jet("(t11 + t12)^2", p, 2);
    CHECK(n == parse_scalar_jet("t11^2 + 2*t11*t12 + t12^2", p, 2));
}

TEST_CASE("exact polynomials in s") {
    Poly p = parse_poly("s^2 - 2*s + 1");
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == GaussianRational(1));
    CHECK(p.coeff(1) == GaussianRational(-2));
    CHECK(p.coeff(2) == GaussianRational(1));
    CHECK(parse_poly("(s+1)*(s-1)") == parse_poly("s^2 - 1"));
    CHECK(parse_poly("0").is_zero());
    // high degrees are exact, not truncated
    CHECK(parse_poly("s^40").degree() == 40);
    CHECK_THROWS_AS(parse_poly("t11"), ParseError);
}

TEST_CASE("class expressions over the generators") {
    auto m = testsupport::iwasawa_model();
    auto p = make_params({"t11", "t12"});
    TVForm f = parse_class_expr("theta2", m, p, 1);
    CHECK(f.degree() == 0);
    CHECK(f.coefficient(1, {}) == Jet::constant(p, 1, GaussianRational(1)));

    TVForm g = parse_class_expr("t11*theta3⊗phibar1 + t12*theta3⊗phibar2", m, p, 1);
    CHECK(g.degree() == 1);
    CHECK(g.coefficient(2, {0}) == Jet::parameter(p, 1, 0));
    CHECK(g.coefficient(2, {1}) == Jet::parameter(p, 1, 1));

    // unicode and ascii product signs are interchangeable; generators are
    // always spelled in ascii (the display renderer's θ/φ̄ are output-only)
    TVForm u = parse_class_expr("theta3⊗(phibar1∧phibar2)", m, p, 1);
    TVForm a = parse_class_expr("theta3*phibar1*phibar2", m, p, 1);
    CHECK(u == a);
    TVForm dotted = parse_class_expr("(t11)·theta1⊗phibar1", m, p, 1);
    CHECK(dotted.coefficient(0, {0}) == Jet::parameter(p, 1, 0));
    CHECK_THROWS_AS(parse_class_expr("θ3", m, p, 1), ParseError);

    // wedge ordering folds signs
    TVForm w = parse_class_expr("theta1⊗phibar2*phibar1", m, p, 1);
    CHECK(w.coefficient(0, {0, 1}) == Jet::constant(p, 1, GaussianRational(-1)));

    // generator order inside a term is free; vec and wedge parts commute
    TVForm rev = parse_class_expr("phibar1*theta1", m, p, 1);
    CHECK(rev == parse_class_expr("theta1⊗phibar1", m, p, 1));

    // mixed arity is rejected; unknown generators are rejected
    CHECK_THROWS_AS(parse_class_expr("theta1 + theta1⊗phibar1", m, p, 1),
                    InvalidInputError);
    CHECK_THROWS_AS(parse_class_expr("theta9", m, p, 1), InvalidInputError);
    CHECK_THROWS_AS(parse_class_expr("theta1*theta2", m, p, 1), ParseError);

    // zero expression takes the degree hint
    TVForm z = parse_class_expr("0", m, p, 1, 2);
    CHECK(z.is_zero());
    CHECK(z.degree() == 2);
}

TEST_CASE("render_flat output parses back to the same form") {
    auto m = testsupport::iwasawa_model();
    auto p = make_params({"t11", "t12", "t21"});
    Rng rng(44001);
    int nonzero = 0;
    for (int it = 0; it < 60; ++it) {
        int q = testsupport::rand_int(rng, 0, 3);
        TVForm f = testsupport::rand_form(rng, m, p, 2, q, 2);
        TVForm back = parse_class_expr(f.render_flat(), m, p, 2, q);
        CHECK(back == f);
        if (!f.is_zero()) ++nonzero;
    }
    CHECK(nonzero > 20);
}
