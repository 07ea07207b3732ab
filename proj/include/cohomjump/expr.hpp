#pragma once

#include <string>
#include <vector>

#include "cohomjump/jet.hpp"
#include "cohomjump/poly.hpp"
#include "cohomjump/rational.hpp"
#include "cohomjump/tv_form.hpp"

namespace cohomjump {

// Exact Gaussian-rational expression: integers, 'i', + - * / ^ and
// parentheses.
GaussianRational parse_gaussian(const std::string& text);

// Comma-separated list of Gaussian-rational expressions.
std::vector<GaussianRational> parse_gaussian_list(const std::string& text);

// Polynomial expression in the given parameters, computed modulo total
// degree > order. Division is allowed by nonzero constants only.
Jet parse_scalar_jet(const std::string& text, const ParamSetPtr& params, int order);

// Exact univariate polynomial in s.
Poly parse_poly(const std::string& text);

// Class expression over the generators theta<i> and phibar<j>, with scalar
// coefficients in the given parameters; '⊗', '∧' and '·' read as products.
// All terms must share one wedge arity; a zero expression takes degree_hint
// (or 0) as its degree.
TVForm parse_class_expr(const std::string& text, const LieModelPtr& model,
                        const ParamSetPtr& params, int order, int degree_hint = -1);

} // namespace cohomjump
