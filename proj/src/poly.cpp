#include "cohomjump/poly.hpp"

#include <algorithm>

namespace cohomjump {

Poly::Poly(GaussianRational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int k, GaussianRational c) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, GaussianRational());
    p.c_.back() = std::move(c);
    return p;
}

Poly Poly::from_jet(const Jet& j) {
    if (j.params()->size() != 1) throw ParamMismatchError("jet is not univariate");
    Poly p;
    p.c_.assign(static_cast<std::size_t>(j.max_degree() + 1), GaussianRational());
    for (const auto& [m, c] : j.terms()) p.c_[m[0]] = c;
    p.normalize();
    return p;
}

GaussianRational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return GaussianRational();
    return c_[static_cast<std::size_t>(k)];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussianRational());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(const GaussianRational& g) const {
    Poly r;
    if (g.is_zero()) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c *= g;
    return r;
}

Poly Poly::truncated(int m) const {
    Poly r;
    r.c_.assign(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), static_cast<std::size_t>(m) + 1));
    r.normalize();
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), GaussianRational());
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

Poly Poly::divide_exact(const Poly& den) const {
    if (den.is_zero()) throw InvalidInputError("polynomial division by zero");
    Poly rem = *this;
    Poly quot;
    if (rem.degree() >= den.degree())
        quot.c_.assign(static_cast<std::size_t>(rem.degree() - den.degree()) + 1, GaussianRational());
    const GaussianRational lead_inv = den.c_.back().inverse();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int k = rem.degree() - den.degree();
        GaussianRational q = rem.c_.back() * lead_inv;
        quot.c_[static_cast<std::size_t>(k)] = q;
        for (std::size_t j = 0; j < den.c_.size(); ++j)
            rem.c_[static_cast<std::size_t>(k) + j] -= q * den.c_[j];
        rem.normalize();
    }
    if (!rem.is_zero())
        throw InternalConsistencyError("expected exact polynomial division left a remainder");
    quot.normalize();
    return quot;
}

Jet Poly::to_jet(int order) const {
    Jet j(curve_params(), order);
    for (std::size_t k = 0; k < c_.size(); ++k) j.add_term(Monomial{static_cast<unsigned>(k)}, c_[k]);
    return j;
}

std::string Poly::render(const std::string& var) const {
    Jet j(make_params({var}), std::max(0, degree()));
    for (std::size_t k = 0; k < c_.size(); ++k)
        j.add_term(Monomial{static_cast<unsigned>(k)}, c_[k]);
    return j.render();
}

} // namespace cohomjump
