#include "cohomjump/tv_form.hpp"

#include <algorithm>
#include <sstream>

namespace cohomjump {

int sort_multi_index(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t a = 1; a < idx.size(); ++a) {
        std::size_t b = a;
        while (b > 0 && idx[b] < idx[b - 1]) {
            std::swap(idx[b], idx[b - 1]);
            sign = -sign;
            --b;
        }
        if (b > 0 && idx[b] == idx[b - 1]) return 0;
    }
    return sign;
}

TVForm::TVForm(LieModelPtr model, ParamSetPtr params, int order, int degree)
    : model_(std::move(model)), params_(std::move(params)), order_(order), degree_(degree) {
    if (!model_) throw InvalidInputError("form without a model");
    if (!params_) throw InvalidInputError("form without a parameter set");
    if (degree_ < 0 || degree_ > model_->dim() + 1)
        throw DegreeRangeError("form degree outside 0..dim+1");
}

TVForm TVForm::generator(LieModelPtr model, ParamSetPtr params, int order, int vec,
                         std::vector<int> idx) {
    TVForm f(model, params, order, static_cast<int>(idx.size()));
    f.add_term(vec, std::move(idx), Jet::constant(params, order, GaussianRational(1)));
    return f;
}

void TVForm::add_term(int vec, std::vector<int> idx, const Jet& coef) {
    if (static_cast<int>(idx.size()) != degree_)
        throw InvalidInputError("wedge arity does not match form degree");
    if (vec < 0 || vec >= model_->dim()) throw InvalidInputError("vector index out of range");
    for (int j : idx)
        if (j < 0 || j >= model_->dim()) throw InvalidInputError("conjugate index out of range");
    if (coef.is_zero()) return;
    const int sign = sort_multi_index(idx);
    if (sign == 0) return;
    Jet c = sign < 0 ? -coef : coef;
    GenKey key{vec, std::move(idx)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Jet TVForm::coefficient(int vec, const std::vector<int>& idx) const {
    auto it = terms_.find(GenKey{vec, idx});
    return it == terms_.end() ? Jet(params_, order_) : it->second;
}

void require_same_context(const TVForm& a, const TVForm& b) {
    if (!a.model() || !b.model()) throw ParamMismatchError("uninitialized form operand");
    if (a.model() != b.model()) throw ParamMismatchError("forms over different models");
    if (a.params() != b.params() && !(*a.params() == *b.params()))
        throw ParamMismatchError("forms over different parameter sets");
    if (a.order() != b.order()) throw ParamMismatchError("forms with different truncation orders");
}

TVForm TVForm::operator-() const {
    TVForm r(model_, params_, order_, degree_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TVForm& TVForm::operator+=(const TVForm& o) {
    require_same_context(*this, o);
    if (degree_ != o.degree_) {
        if (o.terms_.empty()) return *this;
        if (terms_.empty()) return *this = o;
        throw DegreeRangeError("adding forms of different degrees");
    }
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TVForm& TVForm::operator-=(const TVForm& o) { return *this += -o; }

bool operator==(const TVForm& a, const TVForm& b) {
    require_same_context(a, b);
    if (a.degree_ != b.degree_) return a.terms_.empty() && b.terms_.empty();
    return a.terms_ == b.terms_;
}

TVForm TVForm::scaled(const GaussianRational& c) const {
    TVForm r(model_, params_, order_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v.scaled(c));
    return r;
}

TVForm TVForm::scaled(const Jet& f) const {
    TVForm r(model_, params_, order_, degree_);
    for (const auto& [k, v] : terms_) {
        Jet c = jet_mul(v, f);
        if (!c.is_zero()) r.terms_.emplace(k, std::move(c));
    }
    return r;
}

TVForm TVForm::dbar() const {
    const int n = model_->dim();
    TVForm r(model_, params_, order_, std::min(degree_ + 1, n + 1));
    if (degree_ >= n) return r;
    for (const auto& [key, coef] : terms_) {
        for (std::size_t p = 0; p < key.idx.size(); ++p) {
            // antiderivation position sign, then the structure expansion of
            // the p-th conjugate generator
            const int psign = (p % 2 == 0) ? 1 : -1;
            const int k = key.idx[p];
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    const GaussianRational cc = model_->conj_c(u, v, k);
                    if (cc.is_zero()) continue;
                    std::vector<int> idx;
                    idx.reserve(key.idx.size() + 1);
                    idx.insert(idx.end(), key.idx.begin(), key.idx.begin() + static_cast<long>(p));
                    idx.push_back(u);
                    idx.push_back(v);
                    idx.insert(idx.end(), key.idx.begin() + static_cast<long>(p) + 1, key.idx.end());
                    r.add_term(key.vec, std::move(idx), coef.scaled(psign < 0 ? cc : -cc));
                }
        }
    }
    return r;
}

TVForm bracket(const TVForm& a, const TVForm& b) {
    require_same_context(a, b);
    const int n = a.model()->dim();
    const int deg = a.degree() + b.degree();
    TVForm r(a.model(), a.params(), a.order(), std::min(deg, n + 1));
    if (deg > n) return r;
    for (const auto& [ka, fa] : a.terms())
        for (const auto& [kb, fb] : b.terms()) {
            const Jet prod = jet_mul(fa, fb);
            if (prod.is_zero()) continue;
            for (int k = 0; k < n; ++k) {
                const GaussianRational& c = a.model()->c(ka.vec, kb.vec, k);
                if (c.is_zero()) continue;
                std::vector<int> idx;
                idx.reserve(ka.idx.size() + kb.idx.size());
                idx.insert(idx.end(), ka.idx.begin(), ka.idx.end());
                idx.insert(idx.end(), kb.idx.begin(), kb.idx.end());
                r.add_term(k, std::move(idx), prod.scaled(c));
            }
        }
    return r;
}

TVForm leibniz_defect(const TVForm& a, const TVForm& b) {
    TVForm lhs = bracket(a, b).dbar();
    TVForm rhs = bracket(a.dbar(), b);
    TVForm mixed = bracket(a, b.dbar());
    if (a.degree() % 2 != 0) mixed = -mixed;
    return lhs - rhs - mixed;
}

TVForm TVForm::truncated(int n) const {
    TVForm r(model_, params_, order_, degree_);
    for (const auto& [k, c] : terms_) {
        Jet t = c.truncate(n).with_order(order_);
        if (!t.is_zero()) r.terms_.emplace(k, std::move(t));
    }
    return r;
}

TVForm TVForm::homogeneous_part(int k) const {
    TVForm r(model_, params_, order_, degree_);
    for (const auto& [key, c] : terms_) {
        Jet h = c.homogeneous_part(k);
        if (!h.is_zero()) r.terms_.emplace(key, std::move(h));
    }
    return r;
}

TVForm TVForm::substitute_curve(const std::vector<GaussianRational>& direction) const {
    TVForm r(model_, curve_params(), order_, degree_);
    for (const auto& [k, c] : terms_) {
        Jet s = c.substitute_curve(direction);
        if (!s.is_zero()) r.terms_.emplace(k, std::move(s));
    }
    return r;
}

TVForm TVForm::with_order(int n) const {
    TVForm r(model_, params_, n, degree_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.with_order(n));
    return r;
}

std::string TVForm::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        out << "(" << c.render() << ")·θ" << k.vec + 1;
        if (!k.idx.empty()) {
            out << "⊗(";
            for (std::size_t p = 0; p < k.idx.size(); ++p) {
                if (p) out << "∧";
                out << "φ̄" << k.idx[p] + 1;
            }
            out << ")";
        }
        first = false;
    }
    return out.str();
}

std::string TVForm::render_flat() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string gens = "theta" + std::to_string(k.vec + 1);
        for (std::size_t p = 0; p < k.idx.size(); ++p)
            gens += (p == 0 ? "⊗" : "*") + std::string("phibar") + std::to_string(k.idx[p] + 1);
        std::string piece;
        const std::string cr = c.render();
        // a lone constant with both real and imaginary parts renders as a
        // sum ("1/2 + i") and needs the parentheses too
        const bool product_safe =
            c.terms().size() == 1 && !(total_degree(c.terms().begin()->first) == 0 &&
                                       needs_parens(c.terms().begin()->second));
        if (cr == "1") {
            piece = gens;
        } else if (cr == "-1") {
            piece = "-" + gens;
        } else if (product_safe) {
            piece = cr + "*" + gens;
        } else {
            piece = "(" + cr + ")*" + gens;
        }
        if (out.empty()) {
            out = piece;
        } else if (piece.front() == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

} // namespace cohomjump
