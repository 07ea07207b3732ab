#include "cohomjump/cohomology.hpp"

#include <algorithm>
#include <set>

namespace cohomjump {

namespace {

void enumerate_subsets(int n, int q, int start, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == q) {
        out.push_back(cur);
        return;
    }
    for (int j = start; j < n; ++j) {
        cur.push_back(j);
        enumerate_subsets(n, q, j + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

BasisIndex BasisIndex::make(const LieModel& model, int q) {
    BasisIndex b;
    b.degree = q;
    if (q < 0 || q > model.dim()) return b;
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    enumerate_subsets(model.dim(), q, 0, cur, subsets);
    for (int i = 0; i < model.dim(); ++i)
        for (const auto& idx : subsets) b.keys.push_back(GenKey{i, idx});
    std::sort(b.keys.begin(), b.keys.end());
    for (std::size_t k = 0; k < b.keys.size(); ++k) b.pos.emplace(b.keys[k], static_cast<int>(k));
    return b;
}

int BasisIndex::index_of(const GenKey& k) const {
    auto it = pos.find(k);
    return it == pos.end() ? -1 : it->second;
}

std::vector<Jet> to_coords(const TVForm& f, const BasisIndex& basis) {
    std::vector<Jet> out(static_cast<std::size_t>(basis.size()), Jet(f.params(), f.order()));
    for (const auto& [k, c] : f.terms()) {
        const int p = basis.index_of(k);
        if (p < 0) throw InternalConsistencyError("form term outside its basis enumeration");
        out[static_cast<std::size_t>(p)] = c;
    }
    return out;
}

TVForm from_coords(LieModelPtr model, ParamSetPtr params, int order, const BasisIndex& basis,
                   const std::vector<Jet>& coords) {
    TVForm f(model, params, order, basis.degree);
    for (std::size_t k = 0; k < coords.size(); ++k)
        f.add_term(basis.keys[k].vec, basis.keys[k].idx, coords[k]);
    return f;
}

TVForm from_coords(LieModelPtr model, ParamSetPtr params, int order, const BasisIndex& basis,
                   const QVec& coords) {
    std::vector<Jet> jets;
    jets.reserve(coords.size());
    for (const auto& c : coords) jets.push_back(Jet::constant(params, order, c));
    return from_coords(std::move(model), std::move(params), order, basis, jets);
}

QMat dbar_matrix(const LieModel& model, int q) {
    const BasisIndex src = BasisIndex::make(model, q);
    const BasisIndex dst = BasisIndex::make(model, q + 1);
    QMat m(dst.size(), src.size());
    // throwaway scalar context; dbar coefficients are parameter-free
    auto mp = std::make_shared<const LieModel>(model);
    for (int c = 0; c < src.size(); ++c) {
        TVForm g = TVForm::generator(mp, curve_params(), 0, src.keys[static_cast<std::size_t>(c)].vec,
                                     src.keys[static_cast<std::size_t>(c)].idx);
        const TVForm dg = g.dbar();
        for (const auto& [k, coef] : dg.terms())
            m(dst.index_of(k), c) = coef.constant_term();
    }
    return m;
}

CohomologySpace::CohomologySpace(LieModelPtr model, int q) : model_(std::move(model)), q_(q) {
    if (q_ < 0 || q_ > model_->dim()) throw DegreeRangeError("cohomology degree outside 0..dim");
    basis_q_ = BasisIndex::make(*model_, q_);
    basis_prev_ = BasisIndex::make(*model_, q_ - 1);
    QMat A = dbar_matrix(*model_, q_);
    QMat B(basis_q_.size(), basis_prev_.size());
    if (q_ > 0) B = dbar_matrix(*model_, q_ - 1);
    space_ = QuotientSpace(A, B);
}

TVForm CohomologySpace::rep_form(int k, ParamSetPtr params, int order) const {
    return from_coords(model_, std::move(params), order, basis_q_,
                       space_.reps()[static_cast<std::size_t>(k)]);
}

CohomologySpace::Reduction CohomologySpace::reduce(const TVForm& omega) const {
    if (omega.degree() != q_ && !omega.is_zero())
        throw DegreeRangeError("reducing a form of the wrong degree");
    {
        TVForm defect = omega.dbar();
        if (!defect.is_zero())
            throw NotACocycleError("form is not closed; its differential is " + defect.render());
    }
    const auto coords = to_coords(omega.degree() == q_ ? omega
                                                       : TVForm(model_, omega.params(),
                                                                omega.order(), q_),
                                  basis_q_);
    // split by monomial and reduce each exact coefficient vector
    std::set<Monomial> monos;
    for (const auto& jet : coords)
        for (const auto& [m, c] : jet.terms()) monos.insert(m);

    std::vector<Jet> classCoords(static_cast<std::size_t>(dim()), Jet(omega.params(), omega.order()));
    std::vector<Jet> witnessCoords(static_cast<std::size_t>(basis_prev_.size()),
                                   Jet(omega.params(), omega.order()));
    for (const auto& m : monos) {
        QVec v(coords.size());
        for (std::size_t k = 0; k < coords.size(); ++k) {
            auto it = coords[k].terms().find(m);
            if (it != coords[k].terms().end()) v[k] = it->second;
        }
        auto red = space_.reduce(v);
        for (std::size_t k = 0; k < red.coords.size(); ++k)
            if (!red.coords[k].is_zero()) classCoords[k].add_term(m, red.coords[k]);
        for (std::size_t k = 0; k < red.witness.size(); ++k)
            if (!red.witness[k].is_zero()) witnessCoords[k].add_term(m, red.witness[k]);
    }

    Reduction out{std::move(classCoords),
                  q_ > 0 ? from_coords(model_, omega.params(), omega.order(), basis_prev_,
                                       witnessCoords)
                         : TVForm(model_, omega.params(), omega.order(), 0)};
    return out;
}

bool CohomologySpace::is_zero_class(const TVForm& omega) const {
    auto red = reduce(omega);
    return std::all_of(red.coords.begin(), red.coords.end(),
                       [](const Jet& j) { return j.is_zero(); });
}

std::vector<CohomologySpace> complex_cohomology(LieModelPtr model) {
    std::vector<CohomologySpace> out;
    for (int q = 0; q <= model->dim(); ++q) out.emplace_back(model, q);
    return out;
}

std::vector<int> h_vector(const std::vector<CohomologySpace>& spaces) {
    std::vector<int> h;
    h.reserve(spaces.size());
    for (const auto& s : spaces) h.push_back(s.dim());
    return h;
}

} // namespace cohomjump
