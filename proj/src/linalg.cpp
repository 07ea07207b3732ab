#include "cohomjump/linalg.hpp"

#include <algorithm>

namespace cohomjump {

QMat identity(int n) {
    QMat m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = GaussianRational(1);
    return m;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    if (a.cols != b.rows) throw InternalConsistencyError("matrix product shape mismatch");
    QMat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (b(k, j).is_zero()) continue;
                r(i, j) += a(i, k) * b(k, j);
            }
        }
    return r;
}

QVec mat_vec(const QMat& a, const QVec& x) {
    if (a.cols != static_cast<int>(x.size()))
        throw InternalConsistencyError("matrix-vector shape mismatch");
    QVec r(static_cast<std::size_t>(a.rows));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (a(i, j).is_zero() || x[static_cast<std::size_t>(j)].is_zero()) continue;
            r[static_cast<std::size_t>(i)] += a(i, j) * x[static_cast<std::size_t>(j)];
        }
    return r;
}

QVec vec_add(QVec a, const QVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

QVec vec_sub(QVec a, const QVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

QVec vec_scale(QVec a, const GaussianRational& c) {
    for (auto& x : a) x *= c;
    return a;
}

bool vec_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

Rref make_rref(const QMat& A) {
    Rref out;
    out.R = A;
    out.T = identity(A.rows);
    QMat& R = out.R;
    QMat& T = out.T;
    int row = 0;
    for (int col = 0; col < A.cols && row < A.rows; ++col) {
        int pr = -1;
        for (int r = row; r < A.rows; ++r)
            if (!R(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row) {
            for (int c = 0; c < R.cols; ++c) std::swap(R(row, c), R(pr, c));
            for (int c = 0; c < T.cols; ++c) std::swap(T(row, c), T(pr, c));
        }
        GaussianRational inv = R(row, col).inverse();
        for (int c = col; c < R.cols; ++c) R(row, c) *= inv;
        for (int c = 0; c < T.cols; ++c) T(row, c) *= inv;
        for (int r = 0; r < A.rows; ++r) {
            if (r == row || R(r, col).is_zero()) continue;
            GaussianRational f = R(r, col);
            for (int c = col; c < R.cols; ++c) R(r, c) -= f * R(row, c);
            for (int c = 0; c < T.cols; ++c) T(r, c) -= f * T(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

std::optional<QVec> Rref::solve(const QVec& b) const {
    QVec y = mat_vec(T, b);
    // consistency: rows past the rank are zero rows of R
    for (int r = rank; r < R.rows; ++r)
        if (!y[static_cast<std::size_t>(r)].is_zero()) return std::nullopt;
    QVec x(static_cast<std::size_t>(R.cols));
    for (int k = 0; k < rank; ++k) x[static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(k)])] = y[static_cast<std::size_t>(k)];
    return x;
}

std::vector<QVec> kernel_basis(const Rref& r, int cols) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<QVec> out;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        QVec x(static_cast<std::size_t>(cols));
        x[static_cast<std::size_t>(f)] = GaussianRational(1);
        for (int k = 0; k < r.rank; ++k)
            x[static_cast<std::size_t>(r.pivot_cols[static_cast<std::size_t>(k)])] = -r.R(k, f);
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<QVec> kernel_basis(const QMat& A) { return kernel_basis(make_rref(A), A.cols); }

int rank_of(const QMat& A) { return make_rref(A).rank; }

void SpanBuilder::reduce(QVec& v, int& lead) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const int lc = lead_cols_[k];
        if (!v[static_cast<std::size_t>(lc)].is_zero()) {
            const GaussianRational f = v[static_cast<std::size_t>(lc)];
            for (int c = lc; c < dim_; ++c) v[static_cast<std::size_t>(c)] -= f * rows_[k][static_cast<std::size_t>(c)];
        }
    }
    lead = -1;
    for (int c = 0; c < dim_; ++c)
        if (!v[static_cast<std::size_t>(c)].is_zero()) {
            lead = c;
            break;
        }
}

bool SpanBuilder::add(QVec v) {
    int lead;
    reduce(v, lead);
    if (lead < 0) return false;
    const GaussianRational inv = v[static_cast<std::size_t>(lead)].inverse();
    for (int c = lead; c < dim_; ++c) v[static_cast<std::size_t>(c)] *= inv;
    // keep earlier rows reduced against the new one
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        GaussianRational f = rows_[k][static_cast<std::size_t>(lead)];
        if (f.is_zero()) continue;
        for (int c = lead; c < dim_; ++c) rows_[k][static_cast<std::size_t>(c)] -= f * v[static_cast<std::size_t>(c)];
    }
    auto pos = std::upper_bound(lead_cols_.begin(), lead_cols_.end(), lead) - lead_cols_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    lead_cols_.insert(lead_cols_.begin() + pos, lead);
    return true;
}

bool SpanBuilder::contains(QVec v) const {
    int lead;
    reduce(v, lead);
    return lead < 0;
}

bool SpanBuilder::same_span(const SpanBuilder& other) const {
    if (rank() != other.rank()) return false;
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

std::vector<QVec> SpanBuilder::complement_basis() const {
    std::vector<bool> is_lead(static_cast<std::size_t>(dim_), false);
    for (int c : lead_cols_) is_lead[static_cast<std::size_t>(c)] = true;
    std::vector<QVec> out;
    for (int c = 0; c < dim_; ++c) {
        if (is_lead[static_cast<std::size_t>(c)]) continue;
        QVec v(static_cast<std::size_t>(dim_));
        v[static_cast<std::size_t>(c)] = GaussianRational(1);
        out.push_back(std::move(v));
    }
    return out;
}

QuotientSpace::QuotientSpace(const QMat& A, const QMat& B) : ambient_(A.cols), witness_cols_(B.cols), A_(A) {
    if (B.rows != ambient_) throw InternalConsistencyError("quotient image rows mismatch ambient");
    SpanBuilder span(ambient_);
    for (int c = 0; c < B.cols; ++c) {
        QVec col(static_cast<std::size_t>(ambient_));
        for (int r = 0; r < ambient_; ++r) col[static_cast<std::size_t>(r)] = B(r, c);
        span.add(std::move(col));
    }
    for (auto& k : kernel_basis(A))
        if (span.add(k)) reps_.push_back(std::move(k));
    QMat S(ambient_, static_cast<int>(reps_.size()) + B.cols);
    for (int c = 0; c < static_cast<int>(reps_.size()); ++c)
        for (int r = 0; r < ambient_; ++r) S(r, c) = reps_[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    for (int c = 0; c < B.cols; ++c)
        for (int r = 0; r < ambient_; ++r) S(r, static_cast<int>(reps_.size()) + c) = B(r, c);
    solver_ = make_rref(S);
}

bool QuotientSpace::is_cocycle(const QVec& v) const { return vec_zero(mat_vec(A_, v)); }

QVec QuotientSpace::cocycle_defect(const QVec& v) const { return mat_vec(A_, v); }

QuotientSpace::Reduction QuotientSpace::reduce(const QVec& v) const {
    auto x = solver_.solve(v);
    if (!x) throw InternalConsistencyError("cocycle not reducible against representatives and image");
    Reduction r;
    r.coords.assign(x->begin(), x->begin() + static_cast<long>(reps_.size()));
    r.witness.assign(x->begin() + static_cast<long>(reps_.size()), x->end());
    return r;
}

QVec QuotientSpace::rep_combination(const QVec& coords) const {
    QVec v(static_cast<std::size_t>(ambient_));
    for (std::size_t k = 0; k < reps_.size(); ++k) {
        if (coords[k].is_zero()) continue;
        for (int r = 0; r < ambient_; ++r) v[static_cast<std::size_t>(r)] += coords[k] * reps_[k][static_cast<std::size_t>(r)];
    }
    return v;
}

int generic_rank(Mat<Poly> m) {
    int rank = 0;
    Poly prev(GaussianRational(1));
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        // pivot: minimal-degree nonzero entry, ties to the lowest row
        int pr = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m(r, col).is_zero()) continue;
            if (pr < 0 || m(r, col).degree() < m(pr, col).degree()) pr = r;
        }
        if (pr < 0) continue;
        if (pr != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m(rank, c), m(pr, c));
        const Poly pivot = m(rank, col);
        for (int r = rank + 1; r < m.rows; ++r) {
            const Poly head = m(r, col);
            for (int c = col; c < m.cols; ++c) {
                Poly num = pivot * m(r, c) - head * m(rank, c);
                m(r, c) = num.is_zero() ? num : num.divide_exact(prev);
            }
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

int rank_at_zero(const Mat<Poly>& m) {
    QMat q(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) q(r, c) = m(r, c).at_zero();
    return rank_of(q);
}

} // namespace cohomjump
