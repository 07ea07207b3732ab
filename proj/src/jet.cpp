#include "cohomjump/jet.hpp"

#include <algorithm>
#include <sstream>

namespace cohomjump {

int ParamSet::index_of(const std::string& name) const {
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return static_cast<int>(k);
    return -1;
}

ParamSetPtr make_params(std::vector<std::string> names) {
    return std::make_shared<const ParamSet>(ParamSet{std::move(names)});
}

ParamSetPtr curve_params() {
    static const ParamSetPtr s = make_params({"s"});
    return s;
}

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

std::string render_monomial(const Monomial& m, const ParamSet& ps) {
    std::string out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += ps.names[k];
        if (m[k] > 1) out += "^" + std::to_string(m[k]);
    }
    return out; // empty for the constant monomial
}

Jet::Jet(ParamSetPtr params, int order) : params_(std::move(params)), order_(order) {
    if (!params_) throw InvalidInputError("jet without parameter set");
    if (order_ < 0) throw DegreeRangeError("jet order must be nonnegative");
}

Jet Jet::constant(ParamSetPtr params, int order, GaussianRational value) {
    Jet j(std::move(params), order);
    if (!value.is_zero()) j.terms_.emplace(Monomial(j.params_->size(), 0u), std::move(value));
    return j;
}

Jet Jet::parameter(ParamSetPtr params, int order, int index) {
    Jet j(std::move(params), order);
    if (index < 0 || index >= static_cast<int>(j.params_->size()))
        throw InvalidInputError("parameter index out of range");
    if (order < 1) throw DegreeRangeError("order too small to hold a linear term");
    Monomial m(j.params_->size(), 0u);
    m[static_cast<std::size_t>(index)] = 1;
    j.terms_.emplace(std::move(m), GaussianRational(1));
    return j;
}

bool Jet::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

GaussianRational Jet::constant_term() const {
    auto it = terms_.find(Monomial(params_ ? params_->size() : 0, 0u));
    return it == terms_.end() ? GaussianRational() : it->second;
}

int Jet::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total_degree(m)));
    return d;
}

void Jet::add_term(const Monomial& m, const GaussianRational& c) {
    if (m.size() != params_->size()) throw ParamMismatchError("monomial arity mismatch");
    if (static_cast<int>(total_degree(m)) > order_) return;
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void require_compatible(const Jet& a, const Jet& b) {
    if (!a.params() || !b.params()) throw ParamMismatchError("uninitialized jet operand");
    if (a.params() != b.params() && !(*a.params() == *b.params()))
        throw ParamMismatchError("jets over different parameter sets");
    if (a.order() != b.order()) throw ParamMismatchError("jets with different truncation orders");
}

Jet Jet::operator-() const {
    Jet r(params_, order_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    require_compatible(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    require_compatible(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

bool operator==(const Jet& a, const Jet& b) {
    require_compatible(a, b);
    return a.terms_ == b.terms_;
}

Jet Jet::scaled(const GaussianRational& c) const {
    Jet r(params_, order_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Jet jet_mul(const Jet& a, const Jet& b) {
    require_compatible(a, b);
    Jet r(a.params_, a.order_);
    for (const auto& [ma, ca] : a.terms_) {
        unsigned da = total_degree(ma);
        for (const auto& [mb, cb] : b.terms_) {
            if (da + total_degree(mb) > static_cast<unsigned>(a.order_)) continue;
            Monomial m(ma.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Jet Jet::homogeneous_part(int n) const {
    if (n < 0 || n > order_) throw DegreeRangeError("homogeneous part outside truncation range");
    Jet r(params_, order_);
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(total_degree(m)) == n) r.terms_.emplace(m, c);
    return r;
}

Jet Jet::truncate(int n) const {
    if (n < 0 || n > order_) throw DegreeRangeError("truncation order outside range");
    Jet r(params_, n);
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(total_degree(m)) <= n) r.terms_.emplace(m, c);
    return r;
}

Jet Jet::substitute_curve(const std::vector<GaussianRational>& direction) const {
    if (direction.size() != params_->size())
        throw ParamMismatchError("direction length does not match parameter count");
    Jet r(curve_params(), order_);
    for (const auto& [m, c] : terms_) {
        GaussianRational v = c;
        for (std::size_t k = 0; k < m.size(); ++k)
            for (unsigned e = 0; e < m[k]; ++e) v *= direction[k];
        Monomial sm{total_degree(m)};
        r.add_term(sm, v);
    }
    return r;
}

GaussianRational Jet::evaluate(const std::vector<GaussianRational>& point) const {
    if (point.size() != params_->size())
        throw ParamMismatchError("point length does not match parameter count");
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational v = c;
        for (std::size_t k = 0; k < m.size(); ++k)
            for (unsigned e = 0; e < m[k]; ++e) v *= point[k];
        acc += v;
    }
    return acc;
}

Jet Jet::with_order(int n) const {
    if (n < max_degree()) throw DegreeRangeError("new order drops existing terms");
    Jet r(params_, n);
    r.terms_ = terms_;
    return r;
}

std::string Jet::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono = render_monomial(m, *params_);
        GaussianRational coef = c;
        std::string sep;
        if (!first) {
            // fold a real or imaginary sign into the separator
            if (!needs_parens(coef) && ((coef.is_real() && sgn(coef.re()) < 0) ||
                                        (!coef.is_real() && sgn(coef.im()) < 0))) {
                sep = " - ";
                coef = -coef;
            } else {
                sep = " + ";
            }
        }
        out << sep;
        if (mono.empty()) {
            out << (needs_parens(coef) && !first ? "(" + cohomjump::render(coef) + ")"
                                                 : cohomjump::render(coef));
        } else if (coef.is_one()) {
            out << mono;
        } else if (coef == GaussianRational(-1)) {
            out << "-" << mono;
        } else if (needs_parens(coef)) {
            out << "(" << cohomjump::render(coef) << ")*" << mono;
        } else {
            out << cohomjump::render(coef) << "*" << mono;
        }
        first = false;
    }
    return out.str();
}

} // namespace cohomjump
