#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohomjump/cohomology.hpp"
#include "cohomjump/jet_complex.hpp"
#include "cohomjump/linalg.hpp"
#include "cohomjump/tv_form.hpp"

namespace cohomjump {

// Largest parameter degree appearing in the coefficients of f (0 for the
// zero form).
int max_param_degree(const TVForm& f);

// A degree-1 tangent-valued form psi with vanishing constant part that
// satisfies the Maurer-Cartan equation dbar(psi) = 1/2·[psi, psi] exactly at
// its jet order. Drives the twisted differential D = dbar - [psi, ·].
class Deformation {
public:
    Deformation(std::string name, TVForm psi);

    const std::string& name() const { return name_; }
    const TVForm& psi() const { return psi_; }
    LieModelPtr model() const { return psi_.model(); }
    ParamSetPtr params() const { return psi_.params(); }
    int order() const { return psi_.order(); }

    // homogeneous degree-n component psi^(n) (zero beyond the polynomial
    // degree of psi)
    TVForm component(int n) const;
    // the same deformation re-embedded at jet order n >= order()
    Deformation with_order(int n) const;
    // stable identity of the deformation content across jet orders
    std::string fingerprint() const;

private:
    std::string name_;
    TVForm psi_;
};

// Restriction of the deformation to the curve t = s·direction.
Deformation along_curve(const Deformation& def, const QVec& direction);

struct MCReport {
    int order = 0;
    TVForm defect; // dbar(psi) - 1/2·[psi, psi] truncated to the order
    bool mc_ok = false;
    bool dd_ok = false; // D∘D kills every generator modulo m^{order+1}
};
// Validates a candidate psi without constructing a Deformation; throws only
// for a malformed psi (wrong degree / nonzero constant part).
MCReport mc_check(const LieModelPtr& model, const TVForm& psi, int order);

struct KSClass {
    int n = 0;
    TVForm rep;    // homogeneous degree-n component of psi
    TVForm defect; // degree-n component of the Maurer-Cartan defect (zero)
};
// Throws InconsistentDeformationError when the degree-n Maurer-Cartan
// component fails to close.
KSClass kodaira_spencer(const Deformation& def, int n);

// alpha^(0) plus homogeneous corrections alpha^(1..k) solving
// dbar(alpha^(m)) = sum_{j=1}^{m} [psi^(j), alpha^(m-j)] for every m <= k.
struct ExtensionState {
    TVForm base;
    std::vector<TVForm> corrections;
    int achieved = 0;
    std::string fingerprint;

    TVForm part(int m) const; // alpha^(m); the base for m = 0
    TVForm total() const;
};
// Checks the base is closed and aligns jet orders. work_order = -1 keeps the
// deformation's own order.
ExtensionState make_extension_state(const Deformation& def, const TVForm& base,
                                    int work_order = -1);
// Recheck the correction equations by direct expansion.
bool validate_extension(const Deformation& def, const ExtensionState& state);

struct ObstructionClass {
    int n = 0;
    TVForm chain;            // beta_n = sum_j [psi^(j), alpha^(n-j)]
    std::vector<Jet> coords; // reduction of beta_n in H^{q+1}
    TVForm rep;              // the same class as a representative combination
    bool vanishes = false;
    TVForm correction;       // canonical dbar-preimage of beta_n when it vanishes
};
// One step of the extension recursion at order n = achieved + 1. The result
// is cross-checked against the reduction of [psi^(n), alpha_{n-1}] (the
// Kodaira-Spencer route); disagreement raises InternalConsistencyError.
ObstructionClass obstruction_step(const Deformation& def, const ExtensionState& state);

struct ExtendReport {
    ExtensionState state; // at the last achieved order
    bool obstructed = false;
    int fail_order = -1;
    std::optional<ObstructionClass> certificate;
};
// Iterates obstruction_step with canonical corrections; stops at the first
// nonvanishing obstruction.
ExtendReport extend_class(const Deformation& def, const TVForm& base, int maxOrder);

// Matrix of [psi^(1), ·]: H^q -> H^{q+1} in the representative bases;
// entries are degree-1 jets.
Mat<Jet> first_order_matrix(const Deformation& def, int q);

// The twisted complex along t = s·direction: block matrices of
// dbar + [psi(s·direction), ·] on the invariant generators. The sign pairs
// with the reported obstruction so that d(alpha) = s^n·o_n(alpha) + ... holds
// literally in the exported matrices.
JetModuleComplex export_twisted_complex(const Deformation& def, const QVec& direction,
                                        int truncation);

struct FirstClassEntry {
    TVForm rep;          // fiber class that dies without reaching order maxOrder
    int fail_order = 0;  // first order whose obstruction cannot be cleared
    TVForm certificate;  // the obstruction class representative at that order
};
struct SecondClassEntry {
    TVForm rep;                // fiber class hit by an order-n obstruction
    int order = 0;             // the n of the hit
    std::vector<Poly> witness; // coordinates of the class it obstructs, mod s^n
};
struct JumpRow {
    int q = 0;
    int h0 = 0;
    int h_generic = 0;
    int stable_order = 0;
    std::vector<FirstClassEntry> first;
    std::vector<SecondClassEntry> second;
};
// Per-degree jump accounting along a direction, with the accounting identity
// h^q(0) - h^q(generic) = #first + #second asserted internally.
std::vector<JumpRow> jump_report(const Deformation& def, const QVec& direction, int maxOrder);

} // namespace cohomjump
