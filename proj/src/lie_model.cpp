#include "cohomjump/lie_model.hpp"

#include <string>
#include <vector>

#include "cohomjump/linalg.hpp"

namespace cohomjump {

std::size_t LieModel::slot(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
}

LieModel::LieModel(std::string name, int dim, const std::vector<BracketEntry>& entries)
    : name_(std::move(name)), dim_(dim) {
    if (dim_ < 1) throw ModelError("model dimension must be at least 1");
    c_.assign(static_cast<std::size_t>(dim_) * dim_ * dim_, GaussianRational());
    std::vector<bool> set(c_.size(), false);

    auto place = [&](int i, int j, int k, const GaussianRational& v) {
        const std::size_t s = slot(i, j, k);
        if (set[s]) {
            if (!(c_[s] == v))
                throw ModelError("conflicting structure constants for [e" + std::to_string(i + 1) +
                                 ", e" + std::to_string(j + 1) + "] on e" + std::to_string(k + 1));
        } else {
            set[s] = true;
            c_[s] = v;
        }
    };

    for (const auto& e : entries) {
        if (e.i < 0 || e.i >= dim_ || e.j < 0 || e.j >= dim_ || e.k < 0 || e.k >= dim_)
            throw ModelError("bracket entry index out of range");
        if (e.i == e.j && !e.value.is_zero())
            throw ModelError("[e" + std::to_string(e.i + 1) + ", e" + std::to_string(e.i + 1) +
                             "] must vanish");
        place(e.i, e.j, e.k, e.value);
        if (e.i != e.j) place(e.j, e.i, e.k, -e.value);
    }

    check_jacobi();
    compute_nilpotency();
}

const GaussianRational& LieModel::c(int i, int j, int k) const { return c_[slot(i, j, k)]; }

GaussianRational LieModel::conj_c(int i, int j, int k) const { return c(i, j, k).conj(); }

std::vector<GaussianRational> LieModel::bracket(int i, int j) const {
    std::vector<GaussianRational> out(static_cast<std::size_t>(dim_));
    for (int k = 0; k < dim_; ++k) out[static_cast<std::size_t>(k)] = c(i, j, k);
    return out;
}

void LieModel::check_jacobi() const {
    // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0, componentwise.
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k)
                for (int l = 0; l < dim_; ++l) {
                    GaussianRational sum;
                    for (int m = 0; m < dim_; ++m) {
                        sum += c(i, j, m) * c(m, k, l);
                        sum += c(j, k, m) * c(m, i, l);
                        sum += c(k, i, m) * c(m, j, l);
                    }
                    if (!sum.is_zero())
                        throw ModelError("Jacobi identity fails on (e" + std::to_string(i + 1) +
                                         ", e" + std::to_string(j + 1) + ", e" + std::to_string(k + 1) +
                                         ")");
                }
}

void LieModel::compute_nilpotency() {
    // Lower central series by spans of coefficient vectors.
    SpanBuilder cur(dim_);
    for (int i = 0; i < dim_; ++i) {
        QVec e(static_cast<std::size_t>(dim_));
        e[static_cast<std::size_t>(i)] = GaussianRational(1);
        cur.add(std::move(e));
    }
    int steps = 0;
    while (cur.rank() > 0 && steps <= dim_) {
        SpanBuilder next(dim_);
        for (int i = 0; i < dim_; ++i)
            for (const auto& v : cur.rows()) {
                QVec w(static_cast<std::size_t>(dim_));
                for (int j = 0; j < dim_; ++j) {
                    if (v[static_cast<std::size_t>(j)].is_zero()) continue;
                    for (int k = 0; k < dim_; ++k)
                        w[static_cast<std::size_t>(k)] += v[static_cast<std::size_t>(j)] * c(i, j, k);
                }
                next.add(std::move(w));
            }
        ++steps;
        if (next.rank() == cur.rank()) {
            nilpotency_class_ = -1; // series stabilized while nonzero
            return;
        }
        cur = std::move(next);
    }
    nilpotency_class_ = steps;
}

} // namespace cohomjump
