#include "cohomjump/deformation.hpp"

#include <algorithm>
#include <utility>

#include "cohomjump/errors.hpp"

namespace cohomjump {

namespace {

GaussianRational half() { return GaussianRational(2).inverse(); }

TVForm mc_defect(const TVForm& psi) {
    return psi.dbar() - bracket(psi, psi).scaled(half());
}

} // namespace

int max_param_degree(const TVForm& f) {
    int d = 0;
    for (const auto& [key, coef] : f.terms()) d = std::max(d, coef.max_degree());
    return d;
}

Deformation::Deformation(std::string name, TVForm psi) : name_(std::move(name)) {
    if (psi.degree() != 1)
        throw InvalidDeformationError("a deformation form must have degree 1, got " +
                                      std::to_string(psi.degree()));
    if (!psi.homogeneous_part(0).is_zero())
        throw InvalidDeformationError("a deformation form must vanish at the parameter origin; "
                                      "its constant part is " +
                                      psi.homogeneous_part(0).render());
    int target = std::max({psi.order(), 2 * max_param_degree(psi), 2});
    psi_ = psi.order() == target ? std::move(psi) : psi.with_order(target);
    TVForm defect = mc_defect(psi_);
    if (!defect.is_zero())
        throw InconsistentDeformationError(
            "the form does not satisfy the Maurer-Cartan equation; the defect is " +
            defect.render());
}

TVForm Deformation::component(int n) const {
    if (n < 0) throw DegreeRangeError("component index must be nonnegative");
    return psi_.homogeneous_part(n);
}

Deformation Deformation::with_order(int n) const {
    if (n < psi_.order())
        throw DegreeRangeError("cannot lower a deformation's jet order from " +
                               std::to_string(psi_.order()) + " to " + std::to_string(n));
    return Deformation(name_, psi_.with_order(n));
}

std::string Deformation::fingerprint() const {
    return model()->name() + "/" + name_ + "/" + psi_.render();
}

Deformation along_curve(const Deformation& def, const QVec& direction) {
    if (direction.size() != def.params()->size())
        throw InvalidInputError("direction has " + std::to_string(direction.size()) +
                                " components, expected " +
                                std::to_string(def.params()->size()));
    return Deformation(def.name(), def.psi().substitute_curve(direction));
}

MCReport mc_check(const LieModelPtr& model, const TVForm& psi, int order) {
    if (order < 0) throw DegreeRangeError("check order must be nonnegative");
    if (psi.degree() != 1)
        throw InvalidDeformationError("a deformation form must have degree 1, got " +
                                      std::to_string(psi.degree()));
    if (!psi.homogeneous_part(0).is_zero())
        throw InvalidDeformationError("a deformation form must vanish at the parameter origin; "
                                      "its constant part is " +
                                      psi.homogeneous_part(0).render());
    if (psi.model() != model) throw ParamMismatchError("the form does not live on this model");

    int work = std::max({order + std::max(max_param_degree(psi), 1), 2 * max_param_degree(psi),
                         psi.order()});
    TVForm lifted = psi.order() == work ? psi : psi.with_order(work);

    MCReport report;
    report.order = order;
    report.defect = mc_defect(lifted).truncated(order);
    report.mc_ok = report.defect.is_zero();

    report.dd_ok = true;
    for (int q = 0; q <= model->dim(); ++q) {
        BasisIndex basis = BasisIndex::make(*model, q);
        for (const GenKey& key : basis.keys) {
            TVForm gen = TVForm::generator(model, psi.params(), work, key.vec, key.idx);
            TVForm once = gen.dbar() - bracket(lifted, gen);
            TVForm twice = once.dbar() - bracket(lifted, once);
            if (!twice.truncated(order).is_zero()) {
                report.dd_ok = false;
                break;
            }
        }
        if (!report.dd_ok) break;
    }
    return report;
}

KSClass kodaira_spencer(const Deformation& def, int n) {
    if (n < 1 || n > def.order())
        throw DegreeRangeError("Kodaira-Spencer order " + std::to_string(n) +
                               " outside the validity range 1.." + std::to_string(def.order()));
    KSClass out;
    out.n = n;
    out.rep = def.component(n);
    TVForm sum(def.model(), def.params(), def.order(), 2);
    for (int j = 1; j < n; ++j) sum += bracket(def.component(j), def.component(n - j));
    out.defect = out.rep.dbar() - sum.scaled(half());
    if (!out.defect.is_zero())
        throw InconsistentDeformationError("the degree-" + std::to_string(n) +
                                           " Maurer-Cartan component does not close; the defect is " +
                                           out.defect.render());
    return out;
}

TVForm ExtensionState::part(int m) const {
    if (m == 0) return base;
    if (m >= 1 && m <= static_cast<int>(corrections.size())) return corrections[m - 1];
    return TVForm(base.model(), base.params(), base.order(), base.degree());
}

TVForm ExtensionState::total() const {
    TVForm out = base;
    for (const TVForm& c : corrections) out += c;
    return out;
}

ExtensionState make_extension_state(const Deformation& def, const TVForm& base, int work_order) {
    if (base.model() != def.model())
        throw ParamMismatchError("the class does not live on the deformation's model");
    if (!(base.params() == def.params() || *base.params() == *def.params()))
        throw ParamMismatchError("the class uses different parameters than the deformation");
    int W = std::max({def.order(), base.order(), work_order});
    ExtensionState state;
    state.base = base.order() == W ? base : base.with_order(W);
    state.achieved = 0;
    state.fingerprint = def.fingerprint();
    TVForm defect = state.base.dbar();
    if (!defect.is_zero())
        throw NotACocycleError("the class is not closed; its differential is " + defect.render());
    return state;
}

namespace {

// Lift the deformation and every stored form to one shared jet order large
// enough for the order-n bracket products to be exact.
struct Lifted {
    Deformation def;
    TVForm base;
    std::vector<TVForm> corrections;

    TVForm part(int m) const {
        if (m == 0) return base;
        if (m >= 1 && m <= static_cast<int>(corrections.size())) return corrections[m - 1];
        return TVForm(base.model(), base.params(), base.order(), base.degree());
    }
    TVForm total() const {
        TVForm out = base;
        for (const TVForm& c : corrections) out += c;
        return out;
    }
};

Lifted lift_for_order(const Deformation& def, const ExtensionState& state, int n) {
    int needed = n + max_param_degree(state.base);
    int W = std::max({state.base.order(), def.order(), needed});
    Lifted out{def.order() == W ? def : def.with_order(W),
               state.base.order() == W ? state.base : state.base.with_order(W),
               {}};
    out.corrections.reserve(state.corrections.size());
    for (const TVForm& c : state.corrections)
        out.corrections.push_back(c.order() == W ? c : c.with_order(W));
    return out;
}

} // namespace

ObstructionClass obstruction_step(const Deformation& def, const ExtensionState& state) {
    if (state.fingerprint != def.fingerprint())
        throw StaleExtensionError("the extension state was built for a different deformation");
    if (static_cast<int>(state.corrections.size()) != state.achieved)
        throw StaleExtensionError("the extension state stores " +
                                  std::to_string(state.corrections.size()) +
                                  " corrections but claims order " +
                                  std::to_string(state.achieved));
    int n = state.achieved + 1;
    Lifted L = lift_for_order(def, state, n);
    int q = L.base.degree();
    int W = L.base.order();

    const int dim = L.def.model()->dim();
    TVForm beta(L.def.model(), L.def.params(), W, std::min(q + 1, dim + 1));
    for (int j = 1; j <= n; ++j) beta += bracket(L.def.component(j), L.part(n - j));

    ObstructionClass out;
    out.n = n;
    out.chain = beta;

    if (q >= dim) {
        // The target cohomology vanishes; the obstruction chain must overflow
        // to zero and the canonical correction is the zero form.
        if (!beta.is_zero())
            throw InternalConsistencyError(
                "a top-degree obstruction chain failed to overflow to zero");
        out.rep = beta;
        out.vanishes = true;
        out.correction = TVForm(L.def.model(), L.def.params(), W, q);
        return out;
    }

    CohomologySpace target(L.def.model(), q + 1);
    CohomologySpace::Reduction red;
    try {
        red = target.reduce(beta);
    } catch (const NotACocycleError& e) {
        throw InternalConsistencyError(std::string("the obstruction chain is not closed; the "
                                                   "extension state is corrupt: ") +
                                       e.what());
    }

    // Kodaira-Spencer route: the bracket of psi^(n) with the whole extension.
    TVForm route = bracket(L.def.component(n), L.total());
    int needed = n + max_param_degree(state.base);
    CohomologySpace::Reduction red2;
    try {
        red2 = target.reduce(route);
    } catch (const NotACocycleError& e) {
        throw InternalConsistencyError(
            std::string("the Kodaira-Spencer bracket route produced a non-closed chain: ") +
            e.what());
    }
    for (std::size_t k = 0; k < red.coords.size(); ++k) {
        if (!(red.coords[k].truncate(needed) == red2.coords[k].truncate(needed)))
            throw InternalConsistencyError(
                "the recursion and the Kodaira-Spencer bracket route disagree at order " +
                std::to_string(n));
    }

    out.coords = red.coords;
    out.rep = TVForm(L.def.model(), L.def.params(), W, q + 1);
    for (std::size_t k = 0; k < red.coords.size(); ++k)
        out.rep += target.rep_form(static_cast<int>(k), L.def.params(), W).scaled(red.coords[k]);
    out.vanishes = true;
    for (const Jet& c : out.coords)
        if (!c.is_zero()) {
            out.vanishes = false;
            break;
        }
    if (out.vanishes)
        out.correction = red.witness;
    else
        out.correction = TVForm(L.def.model(), L.def.params(), W, q);
    return out;
}

ExtendReport extend_class(const Deformation& def, const TVForm& base, int maxOrder) {
    if (maxOrder < 0) throw DegreeRangeError("extension order must be nonnegative");
    int W = std::max({def.order(), base.order(), maxOrder + max_param_degree(base)});
    ExtendReport report;
    report.state = make_extension_state(def, base, W);
    for (int n = 1; n <= maxOrder; ++n) {
        ObstructionClass step = obstruction_step(def, report.state);
        if (!step.vanishes) {
            report.obstructed = true;
            report.fail_order = n;
            report.certificate = std::move(step);
            return report;
        }
        report.state.corrections.push_back(step.correction);
        report.state.achieved = n;
    }
    return report;
}

bool validate_extension(const Deformation& def, const ExtensionState& state) {
    if (state.fingerprint != def.fingerprint()) return false;
    if (static_cast<int>(state.corrections.size()) != state.achieved) return false;
    Lifted L = lift_for_order(def, state, state.achieved + 1);
    if (!L.base.dbar().is_zero()) return false;
    for (int m = 1; m <= state.achieved; ++m) {
        TVForm rhs(L.def.model(), L.def.params(), L.base.order(),
                   std::min(L.base.degree() + 1, L.def.model()->dim() + 1));
        for (int j = 1; j <= m; ++j) rhs += bracket(L.def.component(j), L.part(m - j));
        if (!(L.part(m).dbar() == rhs)) return false;
    }
    return true;
}

Mat<Jet> first_order_matrix(const Deformation& def, int q) {
    if (q < 0 || q >= def.model()->dim())
        throw DegreeRangeError("first-order matrix needs 0 <= q < " +
                               std::to_string(def.model()->dim()) + ", got " + std::to_string(q));
    CohomologySpace source(def.model(), q);
    CohomologySpace target(def.model(), q + 1);
    TVForm kappa1 = def.component(1);
    Mat<Jet> out(target.dim(), source.dim());
    for (int c = 0; c < source.dim(); ++c) {
        TVForm rep = source.rep_form(c, def.params(), def.order());
        CohomologySpace::Reduction red = target.reduce(bracket(kappa1, rep));
        for (int r = 0; r < target.dim(); ++r) out(r, c) = red.coords[r];
    }
    return out;
}

JetModuleComplex export_twisted_complex(const Deformation& def, const QVec& direction,
                                        int truncation) {
    if (truncation < 1) throw InvalidInputError("truncation order must be at least 1");
    Deformation curve = along_curve(def, direction);
    const TVForm& psis = curve.psi();
    LieModelPtr model = def.model();
    int dim = model->dim();

    std::vector<BasisIndex> bases;
    bases.reserve(static_cast<std::size_t>(dim) + 1);
    for (int q = 0; q <= dim; ++q) bases.push_back(BasisIndex::make(*model, q));

    std::vector<int> ranks;
    for (const BasisIndex& b : bases) ranks.push_back(b.size());

    int maxdeg = 0;
    std::vector<Mat<Poly>> diffs;
    for (int q = 0; q < dim; ++q) {
        Mat<Poly> d(bases[q + 1].size(), bases[q].size());
        for (int c = 0; c < bases[q].size(); ++c) {
            const GenKey& key = bases[q].keys[c];
            TVForm gen = TVForm::generator(model, psis.params(), psis.order(), key.vec, key.idx);
            TVForm img = gen.dbar() + bracket(psis, gen);
            std::vector<Jet> coords = to_coords(img, bases[q + 1]);
            for (int r = 0; r < bases[q + 1].size(); ++r) {
                d(r, c) = Poly::from_jet(coords[r]);
                maxdeg = std::max(maxdeg, d(r, c).degree());
            }
        }
        diffs.push_back(std::move(d));
    }
    if (maxdeg > truncation)
        throw DegreeRangeError("truncation " + std::to_string(truncation) +
                               " is smaller than the differential entry degree " +
                               std::to_string(maxdeg));
    try {
        return JetModuleComplex::make(std::move(ranks), std::move(diffs), truncation);
    } catch (const InvalidInputError& e) {
        throw InconsistentDeformationError(
            std::string("the twisted differential does not square to zero along this "
                        "direction: ") +
            e.what());
    }
}

std::vector<JumpRow> jump_report(const Deformation& def, const QVec& direction, int maxOrder) {
    if (maxOrder < 2) throw InvalidInputError("jump reports need a search order of at least 2");
    JetModuleComplex C = export_twisted_complex(def, direction, maxOrder);
    std::vector<DegreeAccounting> acc = jump_accounting(C, maxOrder);
    Deformation curve = along_curve(def, direction);

    std::vector<JumpRow> out;
    for (const DegreeAccounting& a : acc) {
        int q = a.q;
        CohomologySpace fibre(def.model(), q);
        if (fibre.dim() != a.h0)
            throw InternalConsistencyError(
                "the exported complex and the invariant complex disagree on h^" +
                std::to_string(q));
        JumpRow row;
        row.q = q;
        row.h0 = a.h0;
        row.h_generic = a.h_generic;
        row.stable_order = a.stable_order;

        auto combine = [&](const QVec& coords, ParamSetPtr params, int order) {
            TVForm form(def.model(), params, order, q);
            for (int k = 0; k < fibre.dim(); ++k)
                if (!coords[k].is_zero())
                    form += fibre.rep_form(k, params, order).scaled(coords[k]);
            return form;
        };

        for (const QVec& v : a.first_basis) {
            FirstClassEntry entry;
            entry.rep = combine(v, def.params(), def.order());
            ExtendReport report = extend_class(curve, combine(v, curve.params(), curve.order()),
                                               maxOrder);
            if (!report.obstructed)
                throw InternalConsistencyError(
                    "a class outside the stabilized extendable subspace extended to order " +
                    std::to_string(maxOrder) + " in degree " + std::to_string(q));
            entry.fail_order = report.fail_order;
            entry.certificate = report.certificate->rep;
            row.first.push_back(std::move(entry));
        }

        for (const QVec& w : a.second_basis) {
            SecondClassEntry entry;
            entry.rep = combine(w, def.params(), def.order());
            QVec chain(static_cast<std::size_t>(C.rank_at(q)));
            for (int k = 0; k < fibre.dim(); ++k)
                chain = vec_add(chain, vec_scale(fibre.rep_coords()[k], w[k]));
            std::optional<SecondClassWitness> hit = second_class_detect(C, q, chain, maxOrder);
            if (!hit)
                throw InternalConsistencyError(
                    "a class inside the obstruction image had no witness up to order " +
                    std::to_string(maxOrder) + " in degree " + std::to_string(q));
            entry.order = hit->order;
            entry.witness = std::move(hit->witness);
            row.second.push_back(std::move(entry));
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace cohomjump
