#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohomjump/linalg.hpp"
#include "cohomjump/tv_form.hpp"

namespace cohomjump {

// Ordered enumeration of the degree-q generators (vec, idx); the coordinate
// system shared by the matrices and the cohomology spaces.
struct BasisIndex {
    int degree = 0;
    std::vector<GenKey> keys;
    std::map<GenKey, int> pos;

    static BasisIndex make(const LieModel& model, int q);
    int size() const { return static_cast<int>(keys.size()); }
    int index_of(const GenKey& k) const;
};

std::vector<Jet> to_coords(const TVForm& f, const BasisIndex& basis);
TVForm from_coords(LieModelPtr model, ParamSetPtr params, int order, const BasisIndex& basis,
                   const std::vector<Jet>& coords);
TVForm from_coords(LieModelPtr model, ParamSetPtr params, int order, const BasisIndex& basis,
                   const QVec& coords);

// Matrix of dbar from degree q to q+1 in BasisIndex coordinates; constant
// entries since the structure constants carry no parameters.
QMat dbar_matrix(const LieModel& model, int q);

// H^q of the invariant complex with deterministic representatives: echelon
// pivots of the kernel against the image, in BasisIndex order.
class CohomologySpace {
public:
    CohomologySpace() = default;
    CohomologySpace(LieModelPtr model, int q);

    int degree() const { return q_; }
    int dim() const { return space_.dim(); }
    const LieModelPtr& model() const { return model_; }
    const BasisIndex& basis() const { return basis_q_; }
    const BasisIndex& witness_basis() const { return basis_prev_; }
    const std::vector<QVec>& rep_coords() const { return space_.reps(); }
    TVForm rep_form(int k, ParamSetPtr params, int order) const;

    struct Reduction {
        std::vector<Jet> coords; // length dim()
        TVForm witness;          // degree q-1 (zero 0-form when q = 0)
    };
    // omega = sum coords_k·rep_k + dbar(witness), exactly. Throws
    // NotACocycleError (message carries dbar(omega)) on non-closed input.
    Reduction reduce(const TVForm& omega) const;

    bool is_zero_class(const TVForm& omega) const;

private:
    LieModelPtr model_;
    int q_ = 0;
    BasisIndex basis_q_, basis_prev_;
    QuotientSpace space_;
};

// Spaces for q = 0..dim.
std::vector<CohomologySpace> complex_cohomology(LieModelPtr model);
std::vector<int> h_vector(const std::vector<CohomologySpace>& spaces);

} // namespace cohomjump
