#include <doctest.h>

#include "test_support.hpp"

using namespace cohomjump;
using testsupport::Rng;

static ParamSetPtr tparams() { return make_params({"t11", "t12", "t21"}); }

TEST_CASE("jet factories and term access") {
    auto p = tparams();
    Jet c = Jet::constant(p, 2, GaussianRational(5));
    CHECK(c.order() == 2);
    CHECK(c.terms().size() == 1);
    CHECK(c.evaluate({GaussianRational(1), GaussianRational(2), GaussianRational(3)}) ==
          GaussianRational(5));

    Jet x = Jet::parameter(p, 3, 1);
    CHECK(x.max_degree() == 1);
    CHECK(x.render() == "t12");
    CHECK_THROWS_AS(Jet::parameter(p, 3, 7), InvalidInputError);

    Jet zero(p, 4);
    CHECK(zero.is_zero());
    CHECK(zero.max_degree() == -1);
}

TEST_CASE("jet multiplication truncates at the order") {
    auto p = tparams();
    Jet x = Jet::parameter(p, 1, 0);
    Jet y = Jet::parameter(p, 1, 1);
    Jet prod = jet_mul(x, y);
    // both factors have order 1, so the degree-2 product truncates to zero
    CHECK(prod.is_zero());
    Jet x2 = Jet::parameter(p, 2, 0);
    Jet y2 = Jet::parameter(p, 2, 1);
    CHECK(jet_mul(x2, y2).render() == "t11*t12");
}

TEST_CASE("homogeneous parts, truncation, order lifting") {
    auto p = tparams();
    Jet x = Jet::parameter(p, 3, 0);
    Jet y = Jet::parameter(p, 3, 1);
    Jet f = Jet::constant(p, 3, GaussianRational(2)) + jet_mul(x, y) + x;
    CHECK(f.homogeneous_part(0).render() == "2");
    CHECK(f.homogeneous_part(1).render() == "t11");
    CHECK(f.homogeneous_part(2).render() == "t11*t12");
    CHECK(f.homogeneous_part(3).is_zero());
    CHECK(f.truncate(1).render() == "2 + t11");
    CHECK(f.truncate(0).render() == "2");
    Jet lifted = f.with_order(6);
    CHECK(lifted.order() == 6);
    CHECK(lifted.terms() == f.terms());
    CHECK_THROWS_AS(f.with_order(1), DegreeRangeError);
    CHECK_THROWS_AS(f.homogeneous_part(5), DegreeRangeError);
    CHECK_THROWS_AS(f.truncate(-1), DegreeRangeError);
}

TEST_CASE("substitute_curve specializes parameters to multiples of s") {
    auto p = tparams();
    Jet x = Jet::parameter(p, 2, 0);
    Jet y = Jet::parameter(p, 2, 1);
    Jet f = jet_mul(x, y) + x;
    Jet g = f.substitute_curve(
        {GaussianRational(2), GaussianRational(-1), GaussianRational()});
    CHECK(g.params()->size() == 1);
    CHECK(g.params()->names[0] == "s");
    CHECK(g.render() == "2*s - 2*s^2");
    CHECK_THROWS_AS(f.substitute_curve({GaussianRational(1)}), ParamMismatchError);
}

TEST_CASE("mixing incompatible parameter sets throws") {
    auto p = tparams();
    auto q = make_params({"a", "b"});
    Jet f = Jet::parameter(p, 2, 0);
    Jet g = Jet::parameter(q, 2, 0);
    CHECK_THROWS_AS(f + g, ParamMismatchError);
    CHECK_THROWS_AS(jet_mul(f, g), ParamMismatchError);
}

TEST_CASE("jet rendering round-trips through evaluation spot checks") {
    auto p = tparams();
    Jet x = Jet::parameter(p, 2, 0);
    Jet f = Jet::constant(p, 2, -GaussianRational::i()) + x.scaled(GaussianRational(3));
    CHECK(f.render() == "-i + 3*t11");
    GaussianRational v = f.evaluate(
        {GaussianRational(2), GaussianRational(), GaussianRational()});
    CHECK(v == GaussianRational(6) - GaussianRational::i());
}

TEST_CASE("random jets: ring identities compatible with truncation") {
    Rng rng(987123);
    auto p = tparams();
    for (int it = 0; it < 120; ++it) {
        int order = testsupport::rand_int(rng, 1, 4);
        Jet a = testsupport::rand_jet(rng, p, order, order);
        Jet b = testsupport::rand_jet(rng, p, order, order);
        Jet c = testsupport::rand_jet(rng, p, order, order);
        CHECK(jet_mul(a, b).terms() == jet_mul(b, a).terms());
        CHECK(jet_mul(jet_mul(a, b), c).terms() == jet_mul(a, jet_mul(b, c)).terms());
        CHECK(jet_mul(a, b + c).terms() == (jet_mul(a, b) + jet_mul(a, c)).terms());
        // truncation is a ring map on jets of matching order
        int n = testsupport::rand_int(rng, 0, order);
        Jet lhs = jet_mul(a, b).truncate(n);
        Jet rhs = jet_mul(a.truncate(n).with_order(order),
                          b.truncate(n).with_order(order))
                      .truncate(n);
        CHECK(lhs.terms() == rhs.terms());
    }
}
