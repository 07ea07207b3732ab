#pragma once

#include <optional>
#include <vector>

#include "cohomjump/poly.hpp"
#include "cohomjump/rational.hpp"

namespace cohomjump {

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    T& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const T& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

using QVec = std::vector<GaussianRational>;
using QMat = Mat<GaussianRational>;

QMat identity(int n);
QMat mat_mul(const QMat& a, const QMat& b);
QVec mat_vec(const QMat& a, const QVec& x);
QVec vec_add(QVec a, const QVec& b);
QVec vec_sub(QVec a, const QVec& b);
QVec vec_scale(QVec a, const GaussianRational& c);
bool vec_zero(const QVec& v);

// Reduced row echelon form together with the row transform (R = T * A), so
// repeated solves against the same matrix reuse one elimination.
struct Rref {
    QMat R;
    QMat T;
    std::vector<int> pivot_cols; // one per pivot row, increasing
    int rank = 0;

    // Particular solution of A x = b with all free variables zero.
    std::optional<QVec> solve(const QVec& b) const;
};

Rref make_rref(const QMat& A);

// Kernel basis of A, one vector per free column in column order. For each
// free column f the basis vector has x[f] = 1.
std::vector<QVec> kernel_basis(const QMat& A);
std::vector<QVec> kernel_basis(const Rref& r, int cols);

int rank_of(const QMat& A);

// Row-echelon accumulator for span/membership bookkeeping over Q(i).
class SpanBuilder {
public:
    explicit SpanBuilder(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<QVec>& rows() const { return rows_; }

    // Returns true when v enlarged the span.
    bool add(QVec v);
    bool contains(QVec v) const;
    bool same_span(const SpanBuilder& other) const;

    // Unit vectors on the non-pivot coordinates: a deterministic basis of a
    // complement of the span.
    std::vector<QVec> complement_basis() const;

private:
    void reduce(QVec& v, int& lead) const;
    int dim_;
    std::vector<QVec> rows_;      // echelon rows, leading entry 1
    std::vector<int> lead_cols_;  // increasing
};

// V = ker(A) / span(columns of B), with deterministic representatives chosen
// from the kernel basis in coordinate order. reduce() solves
//   v = reps * coords + B * witness
// exactly; rep_k reduces to the k-th unit coordinate vector with witness 0.
class QuotientSpace {
public:
    QuotientSpace() = default;
    // A: m x n cocycle conditions (may have zero rows), B: n x p image columns
    QuotientSpace(const QMat& A, const QMat& B);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(reps_.size()); }
    const std::vector<QVec>& reps() const { return reps_; }

    bool is_cocycle(const QVec& v) const;
    // defect A*v when not a cocycle (for error payloads)
    QVec cocycle_defect(const QVec& v) const;

    struct Reduction {
        QVec coords;  // length dim()
        QVec witness; // length = columns of B
    };
    // Pre: is_cocycle(v). Throws InternalConsistencyError if v is not in
    // span(reps) + im(B), which cannot happen for genuine cocycles.
    Reduction reduce(const QVec& v) const;

    QVec rep_combination(const QVec& coords) const;

private:
    int ambient_ = 0;
    int witness_cols_ = 0;
    QMat A_;
    std::vector<QVec> reps_;
    Rref solver_; // rref of [reps | B]
};

// Rank over the rational function field Q(i)(s): fraction-free elimination
// with exact polynomial division (Bareiss). Destroys nothing; takes a copy.
int generic_rank(Mat<Poly> m);

// Rank after the substitution s = 0.
int rank_at_zero(const Mat<Poly>& m);

} // namespace cohomjump
