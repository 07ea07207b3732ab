#include <doctest.h>

#include "test_support.hpp"

using namespace cohomjump;
using testsupport::Rng;

TEST_CASE("poly basics") {
    Poly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    Poly p = Poly::monomial(2, GaussianRational(3)) + Poly(GaussianRational(1));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == GaussianRational(1));
    CHECK(p.coeff(1) == GaussianRational());
    CHECK(p.coeff(2) == GaussianRational(3));
    CHECK(p.coeff(9) == GaussianRational());
    CHECK(p.at_zero() == GaussianRational(1));
    CHECK(p.render() == "1 + 3*s^2");
    CHECK(Poly().render() == "0");
}

TEST_CASE("poly cancellation trims trailing zeros") {
    Poly p = Poly::monomial(3);
    Poly q = p - p;
    CHECK(q.is_zero());
    CHECK(q.degree() == -1);
    Poly r = Poly::monomial(2) + Poly(GaussianRational(5));
    r -= Poly::monomial(2);
    CHECK(r.degree() == 0);
}

TEST_CASE("shifted and truncated") {
    Poly p = Poly(GaussianRational(1)) + Poly::monomial(1, GaussianRational(2));
    CHECK(p.shifted(2).render() == "s^2 + 2*s^3");
    CHECK(p.shifted(0) == p);
    CHECK(p.truncated(0).render() == "1");
    CHECK((Poly::monomial(4).truncated(2)).is_zero());
}

TEST_CASE("jet round trip over one parameter") {
    auto s = curve_params();
    Jet j(s, 5);
    j.add_term(Monomial{0}, GaussianRational(2));
    j.add_term(Monomial{3}, -GaussianRational::i());
    Poly p = Poly::from_jet(j);
    CHECK(p.degree() == 3);
    CHECK(p.coeff(3) == -GaussianRational::i());
    CHECK(p.to_jet(5) == j);
    // truncation drops high terms when converting back at lower order
    CHECK(p.to_jet(2).render() == "2");

    auto two = make_params({"a", "b"});
    CHECK_THROWS_AS(Poly::from_jet(Jet::parameter(two, 1, 0)), ParamMismatchError);
}

TEST_CASE("divide_exact inverts multiplication and rejects remainders") {
    Rng rng(55001);
    for (int it = 0; it < 100; ++it) {
        Poly a = testsupport::rand_poly(rng, 4);
        Poly b = testsupport::rand_poly(rng, 3);
        if (b.is_zero()) continue;
        CHECK((a * b).divide_exact(b) == a);
    }
    Poly s = Poly::monomial(1);
    Poly one(GaussianRational(1));
    CHECK_THROWS_AS((s + one).divide_exact(s), InternalConsistencyError);
    CHECK_THROWS_AS(one.divide_exact(Poly()), InvalidInputError);
}

TEST_CASE("poly ring identities on random samples") {
    Rng rng(55002);
    for (int it = 0; it < 100; ++it) {
        Poly a = testsupport::rand_poly(rng, 5);
        Poly b = testsupport::rand_poly(rng, 5);
        Poly c = testsupport::rand_poly(rng, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        CHECK(a.scaled(GaussianRational(-2)) == a * Poly(GaussianRational(-2)));
    }
}
