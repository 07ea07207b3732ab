#pragma once

#include <string>
#include <vector>

#include "cohomjump/rational.hpp"

namespace cohomjump {

// Finite-dimensional complex Lie algebra presented by structure constants,
//   [e_i, e_j] = sum_k c(i,j,k) e_k          (indices 0-based in the API).
//
// Bracket entries may be given in either orientation; the mirror image is
// filled in by antisymmetry, and a conflicting pair raises ModelError. The
// Jacobi identity is verified eagerly at construction. Nilpotency is only
// reported, never required.
class LieModel {
public:
    struct BracketEntry {
        int i, j, k;
        GaussianRational value;
    };

    LieModel(std::string name, int dim, const std::vector<BracketEntry>& entries);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }

    const GaussianRational& c(int i, int j, int k) const;
    GaussianRational conj_c(int i, int j, int k) const;

    // [e_i, e_j] as a coefficient vector of length dim().
    std::vector<GaussianRational> bracket(int i, int j) const;

    bool is_nilpotent() const { return nilpotency_class_ >= 0; }
    // Smallest c with vanishing (c+1)-st term of the lower central series;
    // 1 for a nonzero abelian algebra. -1 when the series stabilizes nonzero.
    int nilpotency_class() const { return nilpotency_class_; }

private:
    std::size_t slot(int i, int j, int k) const;
    void check_jacobi() const;
    void compute_nilpotency();

    std::string name_;
    int dim_;
    std::vector<GaussianRational> c_; // dim^3, row-major (i, j, k)
    int nilpotency_class_ = -1;
};

} // namespace cohomjump
