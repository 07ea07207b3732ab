#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cohomjump/rational.hpp"

namespace cohomjump {

struct ParamSet {
    std::vector<std::string> names;

    std::size_t size() const { return names.size(); }
    // -1 if the name is unknown
    int index_of(const std::string& name) const;

    friend bool operator==(const ParamSet& a, const ParamSet& b) { return a.names == b.names; }
};

using ParamSetPtr = std::shared_ptr<const ParamSet>;

ParamSetPtr make_params(std::vector<std::string> names);
// The single parameter "s" used for curves and exported complexes.
ParamSetPtr curve_params();

// Exponent vector, one entry per parameter. std::map's lexicographic vector
// order is the canonical term order.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);
std::string render_monomial(const Monomial& m, const ParamSet& ps);

// Polynomial truncated at a fixed total degree. Terms of higher degree are
// discarded by every operation; zero coefficients are never stored.
class Jet {
public:
    Jet() = default;
    Jet(ParamSetPtr params, int order);

    static Jet constant(ParamSetPtr params, int order, GaussianRational value);
    static Jet parameter(ParamSetPtr params, int order, int index);

    const ParamSetPtr& params() const { return params_; }
    int order() const { return order_; }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term (zero monomial coefficient)
    GaussianRational constant_term() const;
    int max_degree() const; // -1 for zero

    void add_term(const Monomial& m, const GaussianRational& c);

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend bool operator==(const Jet& a, const Jet& b);

    Jet scaled(const GaussianRational& c) const;

    friend Jet jet_mul(const Jet& a, const Jet& b);

    // Terms of total degree exactly n. 0 <= n <= order.
    Jet homogeneous_part(int n) const;
    // Lower the truncation order to n, dropping higher terms. 0 <= n <= order.
    Jet truncate(int n) const;
    // Substitute t_k <- s * v_k; the result lives over the "s" parameter set
    // with the same truncation order.
    Jet substitute_curve(const std::vector<GaussianRational>& direction) const;
    // Evaluate at a point.
    GaussianRational evaluate(const std::vector<GaussianRational>& point) const;
    // Same terms, new truncation cap n >= max_degree().
    Jet with_order(int n) const;

    std::string render() const;

private:
    ParamSetPtr params_;
    int order_ = 0;
    std::map<Monomial, GaussianRational> terms_;
};

// Throws ParamMismatchError unless both jets share parameters and order.
void require_compatible(const Jet& a, const Jet& b);

} // namespace cohomjump
