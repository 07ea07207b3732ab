#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohomjump/linalg.hpp"

namespace cohomjump {

// Finite complex of free modules over Q(i)[s]/(s^{M+1}):
//   0 -> E^0 -> E^1 -> ... -> E^N -> 0,  d^q of size ranks[q+1] x ranks[q],
// entries polynomial in s of degree <= M, with d∘d ≡ 0 mod s^{M+1} verified
// at construction.
class JetModuleComplex {
public:
    static JetModuleComplex make(std::vector<int> ranks, std::vector<Mat<Poly>> diffs,
                                 int truncation);

    int length() const { return static_cast<int>(ranks_.size()) - 1; } // N
    int truncation() const { return truncation_; }                     // M
    const std::vector<int>& ranks() const { return ranks_; }
    // 0 outside 0..N
    int rank_at(int q) const;

    // d^q as a polynomial matrix; zero-shaped outside 0..N-1
    Mat<Poly> matrix(int q) const;
    // s^k coefficient matrix of d^q
    QMat coeff(int q, int k) const;
    // whether d∘d vanishes identically (not only mod s^{M+1}); licenses
    // truncated computations past M
    bool exactly_closed() const { return exactly_closed_; }

private:
    JetModuleComplex() = default;
    std::vector<int> ranks_;
    int truncation_ = 1;
    std::vector<Mat<Poly>> d_;
    bool exactly_closed_ = false;
};

// Line format: `ranks P0 P1 ... PN`, optional `truncation M`, then one
// `d q r c : <polynomial in s>` line per nonzero entry (q 0-based, r and c
// 1-based). '#' starts a comment. Defaults: M = max entry degree (at least 1).
JetModuleComplex parse_complex(const std::string& text);
std::string render_complex(const JetModuleComplex& C);

// Coordinates of E^q ⊗ O/m^n: n blocks of size P, s-degree-major.
QVec flatten(const std::vector<Poly>& rep, int P, int n);
std::vector<Poly> unflatten(const QVec& flat, int P, int n);

// Block lower-triangular band matrix of d^q on E^q ⊗ O/m^n; block (a,b) is
// the s^{a-b} coefficient of d^q.
QMat toeplitz(const JetModuleComplex& C, int q, int n);

// Element of H^q(E ⊗ O/m^order): a cocycle mod s^order with polynomial
// representative entries of degree < order.
struct TruncatedClass {
    int degree = 0;
    int order = 1;
    std::vector<Poly> rep;
};

// H^q(E ⊗ O/m^n) as a Q(i) vector space, with deterministic representatives
// and exact reduction (coords plus coboundary witness).
class TruncatedCohomology {
public:
    TruncatedCohomology(const JetModuleComplex& C, int q, int n);

    int degree() const { return q_; }
    int order() const { return n_; }
    int dim() const { return space_.dim(); }
    std::vector<TruncatedClass> basis() const;

    struct Reduction {
        QVec coords;               // length dim()
        std::vector<Poly> witness; // element of E^{q-1} ⊗ O/m^n
    };
    Reduction reduce(const TruncatedClass& a) const; // NotACocycleError
    bool is_zero_class(const TruncatedClass& a) const;
    bool is_cocycle(const TruncatedClass& a) const;

private:
    int q_, n_, P_, Pprev_;
    QuotientSpace space_;
};

TruncatedCohomology truncated_cohomology(const JetModuleComplex& C, int q, int n);

// The s^n coefficient of d(alpha) for a cocycle mod s^n: a d_0-closed chain
// of E^{q+1}_0 representing the obstruction class in H^{q+1}(E_0). Requires
// 1 <= n <= truncation.
QVec obstruction_o(const JetModuleComplex& C, int q, int n, const TruncatedClass& alpha);

// The class of s^i·sigma in H^q(E ⊗ O/m^{i+1}) for a fiber cocycle sigma.
TruncatedClass rho(const JetModuleComplex& C, int q, int i, const QVec& sigma);

// rho_i after obstruction_o: a class in H^{q+1}(E ⊗ O/m^{i+1}).
TruncatedClass obstruction_oni(const JetModuleComplex& C, int q, int n, int i,
                               const TruncatedClass& alpha);

// Zero test in the class's own truncated cohomology.
bool class_vanishes(const JetModuleComplex& C, const TruncatedClass& a);

// Greedy order-by-order extension of a fiber cocycle alpha with the base
// block held fixed: solves d(alpha + s·x_1 + ... + s^k·x_k) ≡ 0 mod s^{k+1}
// as one linear system per k. On failure the certificate is the obstruction
// chain of the canonical (free-variables-zero) extension at the last
// achievable order.
struct ExtendResult {
    int achieved = 0;
    bool obstructed = false;
    int fail_order = -1;
    QVec certificate;            // chain in E^{q+1}_0 when obstructed
    std::vector<Poly> extension; // cocycle mod s^{achieved+1} with block 0 = alpha
};
ExtendResult extend_oracle(const JetModuleComplex& C, int q, const QVec& alpha, int maxOrder);

// Smallest n with a truncated class in degree q1-1 whose order-n obstruction
// hits [beta]; the witness is the canonical solution of that linear system.
// beta must represent a nonzero class of H^{q1}(E_0).
struct SecondClassWitness {
    int order = 0;             // the n of the hit
    std::vector<Poly> witness; // cocycle mod s^n in degree q1-1
};
std::optional<SecondClassWitness> second_class_detect(const JetModuleComplex& C, int q1,
                                                      const QVec& beta, int maxOrder);

// Subspace of H^q(E_0) of classes that lift to cocycles mod s^{n+1}
// (n = 0 gives the whole space). Coordinates are taken in the fiber
// cohomology's representative basis.
SpanBuilder extendable_subspace(const JetModuleComplex& C, int q, int n);

// Sum over 1 <= m <= n of the images of the order-m obstruction maps into
// H^q(E_0): the second-class subspace at order n.
SpanBuilder obstruction_image(const JetModuleComplex& C, int q, int n);

// Per-degree jump accounting: h^q(0), generic h^q, the stabilized first- and
// second-class subspaces, and the accounting identity
//   h^q(0) - h^q(generic) = first_dim + second_dim
// asserted as a tripwire. maxOrder bounds the stabilization search; the last
// two orders must agree, and orders past the truncation are used only when
// the complex is exactly closed.
struct DegreeAccounting {
    int q = 0;
    int h0 = 0;
    int h_generic = 0;
    int first_dim = 0;
    std::vector<QVec> first_basis; // coordinates in H^q(E_0) representatives
    int second_dim = 0;
    std::vector<QVec> second_basis;
    int stable_order = 0; // order at which both subspaces stabilized
};
std::vector<DegreeAccounting> jump_accounting(const JetModuleComplex& C, int maxOrder);

} // namespace cohomjump
