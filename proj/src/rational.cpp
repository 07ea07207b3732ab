#include "cohomjump/rational.hpp"

namespace cohomjump {

std::string render(const Rational& r) {
    return r.get_str(); // canonical form already ensures "p" or "p/q", q > 0
}

namespace {

// imaginary part alone: "i", "-i", "3/4*i"
std::string render_im(const Rational& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
}

} // namespace

std::string render(const GaussianRational& g) {
    if (g.is_zero()) return "0";
    if (sgn(g.im()) == 0) return g.re().get_str();
    if (sgn(g.re()) == 0) return render_im(g.im());
    std::string s = g.re().get_str();
    if (sgn(g.im()) > 0) {
        s += "+" + render_im(g.im());
    } else {
        std::string i = render_im(g.im());
        s += i; // already starts with '-'
    }
    return s;
}

bool needs_parens(const GaussianRational& g) {
    return sgn(g.re()) != 0 && sgn(g.im()) != 0;
}

} // namespace cohomjump
