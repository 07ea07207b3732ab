#pragma once

#include <string>
#include <vector>

#include "cohomjump/jet.hpp"
#include "cohomjump/rational.hpp"

namespace cohomjump {

// Dense univariate polynomial over Q(i), exact (no truncation). Used for the
// one-parameter complexes and for rank computations over the function field.
class Poly {
public:
    Poly() = default;
    explicit Poly(GaussianRational c);
    explicit Poly(std::vector<GaussianRational> coeffs);

    static Poly monomial(int k, GaussianRational c = GaussianRational(1));
    // exact conversion; the jet must live over a single parameter
    static Poly from_jet(const Jet& j);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    GaussianRational coeff(int k) const;
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(const GaussianRational& g) const;
    // drop coefficients of s^k for k > m
    Poly truncated(int m) const;
    // multiply by s^k
    Poly shifted(int k) const;
    GaussianRational at_zero() const { return coeff(0); }

    // Exact division; throws InternalConsistencyError when the remainder is
    // nonzero. Fraction-free elimination relies on this being exact.
    Poly divide_exact(const Poly& den) const;

    Jet to_jet(int order) const;
    std::string render(const std::string& var = "s") const;

private:
    void normalize();
    std::vector<GaussianRational> c_; // c_[k] multiplies s^k; trailing entry nonzero
};

} // namespace cohomjump
