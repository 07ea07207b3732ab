#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cohomjump/jet.hpp"
#include "cohomjump/lie_model.hpp"

namespace cohomjump {

using LieModelPtr = std::shared_ptr<const LieModel>;

// One generator of the invariant complex: e_vec tensor the wedge of the
// conjugate generators listed in idx (strictly increasing, 0-based). The
// ordering (vec, idx) is the canonical basis order everywhere.
struct GenKey {
    int vec;
    std::vector<int> idx;

    auto operator<=>(const GenKey&) const = default;
};

// Sorts idx in place, returning the permutation sign (+1/-1), or 0 when an
// index repeats (the wedge vanishes).
int sort_multi_index(std::vector<int>& idx);

// Tangent-valued (0,q)-form with truncated-polynomial coefficients on a fixed
// Lie model. Degree-homogeneous; a degree of model dim + 1 is allowed only
// for the identically-zero overflow results of dbar/bracket.
class TVForm {
public:
    TVForm() = default;
    TVForm(LieModelPtr model, ParamSetPtr params, int order, int degree);

    static TVForm generator(LieModelPtr model, ParamSetPtr params, int order, int vec,
                            std::vector<int> idx);

    const LieModelPtr& model() const { return model_; }
    const ParamSetPtr& params() const { return params_; }
    int order() const { return order_; }
    int degree() const { return degree_; }
    const std::map<GenKey, Jet>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // idx in any order; sorted here with the wedge parity folded into coef.
    void add_term(int vec, std::vector<int> idx, const Jet& coef);
    // Zero jet when the (sorted) generator is absent.
    Jet coefficient(int vec, const std::vector<int>& idx) const;

    TVForm operator-() const;
    TVForm& operator+=(const TVForm& o);
    TVForm& operator-=(const TVForm& o);
    friend TVForm operator+(TVForm a, const TVForm& b) { return a += b; }
    friend TVForm operator-(TVForm a, const TVForm& b) { return a -= b; }
    friend bool operator==(const TVForm& a, const TVForm& b);

    TVForm scaled(const GaussianRational& c) const;
    TVForm scaled(const Jet& f) const;

    // The invariant Dolbeault operator; raises degree by one, coefficients
    // pass through untouched.
    TVForm dbar() const;

    // Coefficientwise jet truncation to total degree n.
    TVForm truncated(int n) const;
    // Terms of parameter degree exactly k.
    TVForm homogeneous_part(int k) const;
    TVForm substitute_curve(const std::vector<GaussianRational>& direction) const;
    TVForm with_order(int n) const;

    std::string render() const;      // (t11)·θ3⊗(φ̄1∧φ̄2)
    std::string render_flat() const; // t11*theta3⊗phibar1

private:
    LieModelPtr model_;
    ParamSetPtr params_;
    int order_ = 0;
    int degree_ = 0;
    std::map<GenKey, Jet> terms_;
};

// [e_i⊗φ̄_I, e_j⊗φ̄_J] = [e_i,e_j]⊗(φ̄_I∧φ̄_J), extended bilinearly over the
// coefficients. Degree overflow past the model dimension gives the zero form.
TVForm bracket(const TVForm& a, const TVForm& b);

// dbar([a,b]) - [dbar(a), b] - (-1)^deg(a)·[a, dbar(b)]; identically zero,
// kept as a testable oracle and internal assertion.
TVForm leibniz_defect(const TVForm& a, const TVForm& b);

// Throws ParamMismatchError unless the operands share model, parameters and
// truncation order.
void require_same_context(const TVForm& a, const TVForm& b);

} // namespace cohomjump
