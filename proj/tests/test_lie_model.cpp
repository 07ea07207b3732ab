#include <doctest.h>

#include "test_support.hpp"

using namespace cohomjump;
using testsupport::Rng;

TEST_CASE("structure constants and antisymmetry completion") {
    auto m = testsupport::iwasawa_model();
    CHECK(m->dim() == 3);
    CHECK(m->c(0, 1, 2) == GaussianRational(1));
    CHECK(m->c(1, 0, 2) == GaussianRational(-1)); // filled in by antisymmetry
    CHECK(m->c(0, 2, 1).is_zero());
    CHECK(m->conj_c(0, 1, 2) == GaussianRational(1));
    auto b = m->bracket(0, 1);
    CHECK(b == std::vector<GaussianRational>{GaussianRational(), GaussianRational(),
                                             GaussianRational(1)});
    CHECK(m->nilpotency_class() == 2);
    CHECK(m->is_nilpotent());
}

TEST_CASE("conjugated structure constants") {
    GaussianRational v = GaussianRational(2) + GaussianRational::i();
    LieModel m("cplx", 3, {{0, 1, 2, v}});
    CHECK(m.conj_c(0, 1, 2) == v.conj());
}

TEST_CASE("both orientations accepted when consistent, rejected when not") {
    LieModel ok("ok", 3,
                {{0, 1, 2, GaussianRational(1)}, {1, 0, 2, GaussianRational(-1)}});
    CHECK(ok.c(0, 1, 2) == GaussianRational(1));
    CHECK_THROWS_AS(LieModel("bad", 3,
                             {{0, 1, 2, GaussianRational(1)},
                              {1, 0, 2, GaussianRational(1)}}),
                    ModelError);
    // [e_i, e_i] must vanish
    CHECK_THROWS_AS(LieModel("diag", 2, {{0, 0, 1, GaussianRational(1)}}), ModelError);
    // out-of-range indices
    CHECK_THROWS_AS(LieModel("range", 2, {{0, 1, 5, GaussianRational(1)}}), ModelError);
}

TEST_CASE("jacobi identity is verified eagerly") {
    // [e0,e1]=e2, [e0,e2]=e0: the jacobiator of (e0,e1,e2) is -e2
    CHECK_THROWS_AS(LieModel("nonjacobi", 3,
                             {{0, 1, 2, GaussianRational(1)},
                              {0, 2, 0, GaussianRational(1)}}),
                    ModelError);
}

TEST_CASE("nilpotency classification") {
    LieModel abelian("abelian", 4, {});
    CHECK(abelian.nilpotency_class() == 1);
    CHECK(abelian.is_nilpotent());

    // sl2-like: [e0,e1]=2e1 is solvable non-nilpotent already
    LieModel affine("affine", 2, {{0, 1, 1, GaussianRational(2)}});
    CHECK(affine.nilpotency_class() == -1);
    CHECK_FALSE(affine.is_nilpotent());

    // 3-step: [e0,e1]=e2, [e0,e2]=e3
    LieModel threestep("threestep", 4,
                       {{0, 1, 2, GaussianRational(1)}, {0, 2, 3, GaussianRational(1)}});
    CHECK(threestep.nilpotency_class() == 3);
}

TEST_CASE("random two-step models are valid and two-step") {
    Rng rng(77001);
    for (int it = 0; it < 40; ++it) {
        auto m = testsupport::rand_two_step_model(rng);
        CHECK(m->is_nilpotent());
        CHECK(m->nilpotency_class() <= 2);
        // antisymmetry holds everywhere
        for (int i = 0; i < m->dim(); ++i)
            for (int j = 0; j < m->dim(); ++j)
                for (int k = 0; k < m->dim(); ++k)
                    CHECK(m->c(i, j, k) == -m->c(j, i, k));
    }
}
