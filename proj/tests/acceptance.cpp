// Acceptance harness: eight end-to-end checks over the full engine, printed
// one line each as "ACCEPTANCE n: PASS/FAIL - description". Exits nonzero
// when any check fails. Expected values are frozen from independent
// derivations; randomized sections state their sample counts inline.
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "test_support.hpp"

#include "cohomjump/cohomology.hpp"
#include "cohomjump/expr.hpp"
#include "cohomjump/model_io.hpp"

using namespace cohomjump;
using testsupport::Rng;

namespace {

TruncatedClass cls(int degree, int order, std::vector<Poly> rep) {
    TruncatedClass a;
    a.degree = degree;
    a.order = order;
    a.rep = std::move(rep);
    return a;
}

std::vector<Poly> fiber_polys(const QVec& v) {
    std::vector<Poly> out;
    out.reserve(v.size());
    for (const GaussianRational& g : v) out.push_back(Poly(g));
    return out;
}

GaussianRational koszul_sign(int p, int q) {
    return GaussianRational((p * q) % 2 == 0 ? 1 : -1);
}

// ------------------------------------------------------------ criterion 1

bool criterion_fiber_cohomology() {
    auto model = testsupport::iwasawa_model();
    auto spaces = complex_cohomology(model);
    if (h_vector(spaces) != std::vector<int>{3, 6, 6, 3}) return false;

    // The six unit classes theta_i (x) phibar_lambda (i in 1..3, lambda in
    // 1..2) must reduce to an invertible 6x6 coordinate matrix in the
    // computed H^1 basis: mutual reduction, change of basis invertible.
    const CohomologySpace& H1 = spaces[1];
    if (H1.dim() != 6) return false;
    auto params = curve_params();
    QMat U(6, 6);
    int row = 0;
    for (int i = 0; i < 3; ++i)
        for (int lam = 0; lam < 2; ++lam) {
            TVForm unit = TVForm::generator(model, params, 1, i, {lam});
            auto red = H1.reduce(unit);
            for (int k = 0; k < 6; ++k)
                U(row, k) = red.coords[static_cast<std::size_t>(k)].evaluate(
                    {GaussianRational()});
            ++row;
        }
    return rank_of(U) == 6;
}

// ------------------------------------------------------------ criterion 2

bool criterion_jump_table() {
    ModelFile mf = parse_model(builtin_model_text("iwasawa"));
    const Deformation& def = mf.deformations.front();
    struct Case {
        QVec v;
        std::vector<int> h_generic;
    };
    const std::vector<Case> cases = {
        {testsupport::qvec({0, 0, 0, 0, 1, 0}), {3, 6, 6, 3}},
        {testsupport::qvec({1, 0, 0, 0, 0, 0}), {2, 5, 5, 2}},
        {testsupport::qvec({1, 0, 0, 1, 0, 0}), {1, 4, 5, 2}},
    };
    for (const Case& c : cases) {
        auto rows = jump_report(def, c.v, 4);
        if (rows.size() != 4) return false;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (rows[q].h0 != std::vector<int>{3, 6, 6, 3}[q]) return false;
            if (rows[q].h_generic != c.h_generic[q]) return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ criterion 3

bool criterion_first_order_obstructions() {
    Deformation def = testsupport::kodaira_deformation();
    auto theta = [&](int i) {
        return TVForm::generator(def.model(), def.params(), def.order(), i, {});
    };
    auto first_step = [&](const TVForm& base) {
        return obstruction_step(def, make_extension_state(def, base));
    };

    auto o2 = first_step(theta(1));
    if (o2.vanishes || o2.rep.render_flat() != "t11*theta3⊗phibar1 + t12*theta3⊗phibar2")
        return false;
    auto o1 = first_step(theta(0));
    if (o1.vanishes || o1.rep.render_flat() != "-t21*theta3⊗phibar1 - t22*theta3⊗phibar2")
        return false;
    auto o3 = first_step(theta(2));
    if (!o3.vanishes) return false;

    // The determinant combination: nonzero symbolically, zero on the curve
    // where all four upper parameters move together.
    TVForm combo = theta(0).scaled(Jet::parameter(def.params(), def.order(), 0)) +
                   theta(1).scaled(Jet::parameter(def.params(), def.order(), 2));
    auto oc = first_step(combo);
    if (oc.rep.render_flat() != "(t12*t21 - t11*t22)*theta3⊗phibar2") return false;
    QVec dir = testsupport::qvec({1, 1, 1, 1, 0, 0});
    if (!oc.rep.substitute_curve(dir).is_zero()) return false;
    Deformation curve = along_curve(def, dir);
    auto on_curve = obstruction_step(curve, make_extension_state(curve, combo.substitute_curve(dir)));
    return on_curve.vanishes;
}

// ------------------------------------------------------------ criterion 4

bool criterion_maurer_cartan() {
    Deformation def = testsupport::kodaira_deformation();
    TVForm expected = parse_class_expr("(t11*t22 - t12*t21)*theta3⊗phibar1*phibar2",
                                       def.model(), def.params(), def.order());
    TVForm lhs = def.psi().dbar();
    TVForm rhs = bracket(def.psi(), def.psi()).scaled(GaussianRational(2).inverse());
    if (!(lhs - expected).is_zero()) return false;
    if (!(rhs - expected).is_zero()) return false;
    for (int n = 1; n <= 6; ++n) {
        MCReport r = mc_check(def.model(), def.psi().with_order(std::max(4, n)), n);
        if (!r.mc_ok) return false;
        if (n == 4 && !r.dd_ok) return false;
    }
    return true;
}

// ------------------------------------------------------------ criterion 5

bool criterion_recursion_vs_bracket() {
    Deformation def = testsupport::kodaira_deformation();
    auto spaces = complex_cohomology(def.model());
    Rng rng(52001);
    int steps_checked = 0;
    for (int it = 0; it < 50; ++it) {
        QVec v(6);
        bool nonzero = false;
        for (auto& x : v) {
            x = GaussianRational(testsupport::rand_int(rng, -3, 3));
            nonzero = nonzero || !x.is_zero();
        }
        if (!nonzero) v[0] = GaussianRational(1);
        Deformation curve = along_curve(def, v);
        for (int q = 0; q <= 3; ++q) {
            for (int k = 0; k < spaces[static_cast<std::size_t>(q)].dim(); ++k) {
                TVForm base = spaces[static_cast<std::size_t>(q)]
                                  .rep_form(k, def.params(), def.order())
                                  .substitute_curve(v);
                ExtensionState st = make_extension_state(curve, base);
                for (int n = 1; n <= 3; ++n) {
                    ObstructionClass step = obstruction_step(curve, st);
                    Deformation cw = curve.with_order(st.base.order());
                    TVForm route = bracket(cw.component(n), st.total());
                    if (q >= 3) {
                        // top degree: the bracket overflows to the zero form
                        if (!route.is_zero() || !step.vanishes) return false;
                    } else {
                        auto red = spaces[static_cast<std::size_t>(q) + 1].reduce(route);
                        if (red.coords.size() != step.coords.size()) return false;
                        for (std::size_t c = 0; c < red.coords.size(); ++c)
                            if (!(step.coords[c].truncate(n) == red.coords[c].truncate(n)))
                                return false;
                    }
                    ++steps_checked;
                    if (!step.vanishes) break;
                    st.corrections.push_back(step.correction);
                    st.achieved = n;
                }
            }
        }
    }
    return steps_checked >= 50 * 18;
}

// ------------------------------------------------------------ criterion 6

bool criterion_jet_machinery() {
    Rng rng(62001);
    const int M = 4;
    for (int instance = 0; instance < 200; ++instance) {
        JetModuleComplex C = testsupport::rand_closed_complex(rng);

        // Pushed image of the order-n obstruction map into degree q1, with
        // coordinates in H^{q1}(mod s^n); memoized per (q1, n).
        std::map<std::pair<int, int>, SpanBuilder> memo;
        auto pushed_span = [&](int q1, int n) -> SpanBuilder& {
            auto key = std::make_pair(q1, n);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            TruncatedCohomology Hn(C, q1, n);
            SpanBuilder span(Hn.dim());
            TruncatedCohomology Hsrc(C, q1 - 1, n);
            for (const TruncatedClass& g : Hsrc.basis()) {
                QVec chain = obstruction_o(C, q1 - 1, n, g);
                TruncatedClass pushed = rho(C, q1, n - 1, chain);
                span.add(Hn.reduce(pushed).coords);
            }
            return memo.emplace(key, std::move(span)).first->second;
        };
        auto pushed_coords = [&](int q1, int n, const QVec& beta) {
            TruncatedClass pushed = rho(C, q1, n - 1, beta);
            return TruncatedCohomology(C, q1, n).reduce(pushed).coords;
        };

        // (a) greedy extension agrees with fibre obstruction vanishing along
        // the canonical path, for every degree and fibre class
        for (int q = 0; q <= C.length(); ++q) {
            int P = C.rank_at(q);
            if (P == 0) continue;
            TruncatedCohomology Hf(C, q, 1);
            for (int k = 0; k < Hf.dim(); ++k) {
                QVec alpha = flatten(Hf.basis()[static_cast<std::size_t>(k)].rep, P, 1);
                auto r = extend_oracle(C, q, alpha, M);
                for (int n = 1; n <= r.achieved; ++n) {
                    std::vector<Poly> rep;
                    rep.reserve(r.extension.size());
                    for (const Poly& p : r.extension) rep.push_back(p.truncated(n - 1));
                    if (!class_vanishes(C, obstruction_oni(C, q, n, 0, cls(q, n, rep))))
                        return false;
                }
                if (!r.obstructed) continue;
                if (r.fail_order != r.achieved + 1) return false;
                TruncatedClass last = cls(q, r.fail_order, r.extension);
                if (class_vanishes(C, obstruction_oni(C, q, r.fail_order, 0, last)))
                    return false;

                // (b) every nonzero obstruction value is detected by some
                // pushed obstruction image at an order <= its own
                bool found = false;
                for (int np = 1; np <= r.fail_order && !found; ++np) {
                    TruncatedClass pb = rho(C, q + 1, np - 1, r.certificate);
                    if (class_vanishes(C, pb)) continue;
                    if (pushed_span(q + 1, np).contains(pushed_coords(q + 1, np, r.certificate)))
                        found = true;
                }
                if (!found) return false;
            }
        }

        // (a') staged equivalence, brute force: extension to order n+1 with
        // the low blocks held fixed is a constrained linear system whose
        // solvability must match the vanishing of the pushed obstruction
        {
            int q = testsupport::rand_int(rng, 0, C.length());
            int P = C.rank_at(q);
            int n = testsupport::rand_int(rng, 1, M);
            int i = testsupport::rand_int(rng, 1, n);
            TruncatedCohomology Hn(C, q, n);
            if (P > 0 && Hn.dim() > 0) {
                std::vector<Poly> rep(static_cast<std::size_t>(P));
                auto basis = Hn.basis();
                for (const TruncatedClass& b : basis) {
                    GaussianRational c(testsupport::rand_int(rng, -2, 2));
                    for (int j = 0; j < P; ++j)
                        rep[static_cast<std::size_t>(j)] +=
                            b.rep[static_cast<std::size_t>(j)].scaled(c);
                }
                TruncatedClass a = cls(q, n, rep);
                bool expected =
                    class_vanishes(C, obstruction_oni(C, q, n, n - i, a));
                std::vector<Poly> low;
                low.reserve(rep.size());
                for (const Poly& p : rep) low.push_back(p.truncated(i - 1));
                QMat T = toeplitz(C, q, n + 1);
                QVec rhs = vec_scale(mat_vec(T, flatten(low, P, n + 1)),
                                     GaussianRational(-1));
                QMat Afree(T.rows, (n + 1 - i) * P);
                for (int rr = 0; rr < T.rows; ++rr)
                    for (int cc = 0; cc < (n + 1 - i) * P; ++cc)
                        Afree(rr, cc) = T(rr, i * P + cc);
                bool solvable = make_rref(Afree).solve(rhs).has_value();
                if (solvable != expected) return false;
            }
        }

        // (c) second-class detection agrees with the pushed-image scan,
        // including the order of the first hit, for every fibre class
        for (int q1 = 1; q1 <= C.length(); ++q1) {
            int R = C.rank_at(q1);
            if (R == 0) continue;
            TruncatedCohomology Hf(C, q1, 1);
            for (int k = 0; k < Hf.dim(); ++k) {
                QVec beta = flatten(Hf.basis()[static_cast<std::size_t>(k)].rep, R, 1);
                auto hit = second_class_detect(C, q1, beta, M);
                int scan = 0;
                for (int n = 1; n <= M && scan == 0; ++n)
                    if (pushed_span(q1, n).contains(pushed_coords(q1, n, beta))) scan = n;
                if (hit.has_value() != (scan != 0)) return false;
                if (hit) {
                    if (hit->order != scan) return false;
                    QVec chain = obstruction_o(C, q1 - 1, hit->order,
                                               cls(q1 - 1, hit->order, hit->witness));
                    TruncatedCohomology fib(C, q1, 1);
                    if (fib.reduce(cls(q1, 1, fiber_polys(chain))).coords !=
                        fib.reduce(cls(q1, 1, fiber_polys(beta))).coords)
                        return false;
                }
            }
        }

        // (d) accounting identity and semicontinuity in every degree
        for (const DegreeAccounting& r : jump_accounting(C, 8)) {
            if (r.h0 - r.h_generic != r.first_dim + r.second_dim) return false;
            if (r.h_generic > r.h0) return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ criterion 7

bool criterion_second_class_mechanism() {
    Deformation def = testsupport::kodaira_deformation();
    QVec dir = testsupport::qvec({1, 0, 0, 0, 0, 0});
    JetModuleComplex C = export_twisted_complex(def, dir, 4);

    BasisIndex b0 = BasisIndex::make(*def.model(), 0);
    BasisIndex b1 = BasisIndex::make(*def.model(), 1);
    int idx_t3p1 = b1.index_of(GenKey{2, {0}}); // theta3 (x) phibar1
    int idx_t2 = b0.index_of(GenKey{1, {}});    // theta2
    if (idx_t3p1 < 0 || idx_t2 < 0) return false;

    QVec beta(static_cast<std::size_t>(C.rank_at(1)));
    beta[static_cast<std::size_t>(idx_t3p1)] = GaussianRational(1);
    auto hit = second_class_detect(C, 1, beta, 4);
    if (!hit || hit->order != 1) return false;
    // witness is theta2 itself (constant coordinates 0, 1, 0)
    if (static_cast<int>(hit->witness.size()) != C.rank_at(0)) return false;
    for (int j = 0; j < C.rank_at(0); ++j) {
        GaussianRational want(j == idx_t2 ? 1 : 0);
        if (!(hit->witness[static_cast<std::size_t>(j)] == Poly(want))) return false;
    }

    // d(theta2) = s^1 * (theta3 (x) phibar1) literally in the exported
    // matrices: the greedy extension of theta2 fails at order 1 with exactly
    // that certificate
    QVec alpha(static_cast<std::size_t>(C.rank_at(0)));
    alpha[static_cast<std::size_t>(idx_t2)] = GaussianRational(1);
    auto r = extend_oracle(C, 0, alpha, 4);
    if (!r.obstructed || r.fail_order != 1) return false;
    return r.certificate == beta;
}

// ------------------------------------------------------------ criterion 8

bool criterion_invariant_suites() {
    Rng rng(82001);
    auto filiform = std::make_shared<LieModel>(
        "filiform4", 4,
        std::vector<LieModel::BracketEntry>{{0, 1, 2, GaussianRational(1)},
                                            {0, 2, 3, GaussianRational(1)}});
    auto affine = std::make_shared<LieModel>(
        "affine", 2, std::vector<LieModel::BracketEntry>{{0, 1, 1, GaussianRational(2)}});
    auto params = make_params({"t1", "t2"});
    auto pick_model = [&](int it) -> LieModelPtr {
        switch (it % 3) {
        case 0: return testsupport::rand_two_step_model(rng);
        case 1: return filiform;
        default: return affine;
        }
    };
    for (int it = 0; it < 120; ++it) {
        LieModelPtr m = pick_model(it);
        int order = testsupport::rand_int(rng, 1, 3);
        int dim = m->dim();
        int p = testsupport::rand_int(rng, 0, dim);
        int q = testsupport::rand_int(rng, 0, dim);
        int r = testsupport::rand_int(rng, 0, dim);
        TVForm a = testsupport::rand_form(rng, m, params, order, p, order);
        TVForm b = testsupport::rand_form(rng, m, params, order, q, order);
        TVForm c = testsupport::rand_form(rng, m, params, order, r, order);

        if (!a.dbar().dbar().is_zero()) return false;
        if (!(bracket(a, b) + bracket(b, a).scaled(koszul_sign(p, q))).is_zero()) return false;
        TVForm jac = bracket(a, bracket(b, c)).scaled(koszul_sign(p, r)) +
                     bracket(b, bracket(c, a)).scaled(koszul_sign(q, p)) +
                     bracket(c, bracket(a, b)).scaled(koszul_sign(r, q));
        if (!jac.is_zero()) return false;
        if (!leibniz_defect(a, b).is_zero()) return false;
        int n = testsupport::rand_int(rng, 0, order);
        TVForm lhsT = bracket(a, b).truncated(n);
        TVForm rhsT = bracket(a.truncated(n), b.truncated(n)).truncated(n);
        if (!(lhsT - rhsT).is_zero()) return false;
    }
    return true;
}

// ------------------------------------------------------------ harness

int g_failures = 0;

void check(int n, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << "ACCEPTANCE " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what << note
              << "\n";
    if (!ok) ++g_failures;
}

} // namespace

int main() {
    check(1, "fiber cohomology dimensions (3 6 6 3) and the unit-class basis of H^1",
          criterion_fiber_cohomology);
    check(2, "generic dimension vectors along the three bundled directions",
          criterion_jump_table);
    check(3, "first-order obstruction classes and the vanishing determinant combination",
          criterion_first_order_obstructions);
    check(4, "maurer-cartan identity of the kodaira family and twisted d squared",
          criterion_maurer_cartan);
    check(5, "obstruction recursion matches the bracket with the order-n deformation part "
             "(50 random directions, all basis classes, orders 1..3)",
          criterion_recursion_vs_bracket);
    check(6, "staged obstruction / extension / second-class / jump accounting equivalences "
             "on 200 random complexes",
          criterion_jet_machinery);
    check(7, "second-class certificate for theta3⊗phibar1 with witness theta2 along the "
             "first coordinate direction",
          criterion_second_class_mechanism);
    check(8, "graded invariants on randomized forms: d^2, antisymmetry, jacobi, leibniz, "
             "truncation (120 samples)",
          criterion_invariant_suites);
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
