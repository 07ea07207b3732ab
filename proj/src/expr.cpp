#include "cohomjump/expr.hpp"

#include <cctype>
#include <utility>

#include "cohomjump/errors.hpp"

namespace cohomjump {

namespace {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t k = 0;
    auto starts_with = [&](const char* s) {
        return text.compare(k, std::char_traits<char>::length(s), s) == 0;
    };
    while (k < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[k]);
        if (std::isspace(c)) { ++k; continue; }
        if (std::isdigit(c)) {
            std::size_t j = k;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Int, text.substr(k, j - k)});
            k = j;
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = k;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            out.push_back({Token::Ident, text.substr(k, j - k)});
            k = j;
            continue;
        }
        // unicode product signs: tensor, wedge, middle dot
        if (starts_with("\xE2\x8A\x97") || starts_with("\xE2\x88\xA7")) {
            out.push_back({Token::Star, "*"});
            k += 3;
            continue;
        }
        if (starts_with("\xC2\xB7")) {
            out.push_back({Token::Star, "*"});
            k += 2;
            continue;
        }
        switch (c) {
            case '+': out.push_back({Token::Plus, "+"}); break;
            case '-': out.push_back({Token::Minus, "-"}); break;
            case '*': out.push_back({Token::Star, "*"}); break;
            case '/': out.push_back({Token::Slash, "/"}); break;
            case '^': out.push_back({Token::Caret, "^"}); break;
            case '(': out.push_back({Token::LParen, "("}); break;
            case ')': out.push_back({Token::RParen, ")"}); break;
            default:
                throw ParseError("unexpected character '" + text.substr(k, 1) + "' in expression");
        }
        ++k;
    }
    out.push_back({Token::End, ""});
    return out;
}

// One distributed term of an expression: a scalar jet times an optional
// theta generator times a formal (unsorted) wedge of phibar generators.
struct FTerm {
    Jet coef;
    int vec = -1;
    std::vector<int> wedge;
};
using Value = std::vector<FTerm>;

constexpr std::size_t kTermGuard = 100000;
constexpr unsigned long kExponentGuard = 512;

// Digits of a generator name like theta2 / phibar13; -1 when not of the form
// prefix + positive integer.
int generator_index(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return -1;
    long v = 0;
    for (std::size_t k = prefix.size(); k < name.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(name[k]))) return -1;
        v = v * 10 + (name[k] - '0');
        if (v > 1000000) return -1;
    }
    return v >= 1 ? static_cast<int>(v) : -1;
}

class Parser {
public:
    Parser(const std::string& text, ParamSetPtr params, int order, LieModelPtr model)
        : toks_(lex(text)), params_(std::move(params)), order_(order), model_(std::move(model)) {}

    Value run() {
        Value v = expr();
        if (peek().kind != Token::End)
            throw ParseError("unexpected token '" + peek().text + "' in expression");
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    Jet one() const { return Jet::constant(params_, order_, GaussianRational(1)); }

    GaussianRational int_value(const std::string& digits) const {
        GaussianRational v;
        for (char c : digits) v = v * GaussianRational(10) + GaussianRational(c - '0');
        return v;
    }

    static Value negated(Value v) {
        for (FTerm& t : v) t.coef = t.coef.scaled(GaussianRational(-1));
        return v;
    }

    static Value sum(Value a, Value b) {
        for (FTerm& t : b) a.push_back(std::move(t));
        return a;
    }

    static Value product(const Value& a, const Value& b) {
        if (a.size() * b.size() > kTermGuard) throw ParseError("expression is too large");
        Value out;
        out.reserve(a.size() * b.size());
        for (const FTerm& x : a)
            for (const FTerm& y : b) {
                if (x.vec >= 0 && y.vec >= 0)
                    throw ParseError("a term multiplies two theta generators");
                FTerm t;
                t.coef = jet_mul(x.coef, y.coef);
                t.vec = std::max(x.vec, y.vec);
                t.wedge = x.wedge;
                t.wedge.insert(t.wedge.end(), y.wedge.begin(), y.wedge.end());
                out.push_back(std::move(t));
            }
        return out;
    }

    Value quotient(Value a, const Value& b) const {
        Jet total(params_, order_);
        for (const FTerm& t : b) {
            if (t.vec >= 0 || !t.wedge.empty())
                throw ParseError("division by an expression with generators");
            total += t.coef;
        }
        if (!total.is_constant()) throw ParseError("division by a non-constant expression");
        GaussianRational c = total.constant_term();
        if (c.is_zero()) throw ParseError("division by zero");
        GaussianRational inv = c.inverse();
        for (FTerm& t : a) t.coef = t.coef.scaled(inv);
        return a;
    }

    Value power(Value base, const std::string& digits) const {
        unsigned long e = 0;
        for (char c : digits) {
            e = e * 10 + static_cast<unsigned long>(c - '0');
            if (e > kExponentGuard) throw ParseError("exponent larger than supported");
        }
        Value out{FTerm{one(), -1, {}}};
        for (unsigned long k = 0; k < e; ++k) out = product(out, base);
        return out;
    }

    Value expr() {
        Value v = term();
        while (true) {
            if (accept(Token::Plus)) v = sum(std::move(v), term());
            else if (accept(Token::Minus)) v = sum(std::move(v), negated(term()));
            else return v;
        }
    }

    Value term() {
        Value v = factor();
        while (true) {
            if (accept(Token::Star)) v = product(v, factor());
            else if (accept(Token::Slash)) v = quotient(std::move(v), factor());
            else return v;
        }
    }

    Value factor() {
        Value v = primary();
        while (peek().kind == Token::Caret) {
            take();
            if (peek().kind != Token::Int)
                throw ParseError("'^' needs a nonnegative integer exponent");
            v = power(std::move(v), take().text);
        }
        return v;
    }

    Value primary() {
        if (accept(Token::Minus)) return negated(factor());
        if (accept(Token::Plus)) return factor();
        if (accept(Token::LParen)) {
            Value v = expr();
            if (!accept(Token::RParen)) throw ParseError("missing ')'");
            return v;
        }
        if (peek().kind == Token::Int)
            return {FTerm{one().scaled(int_value(take().text)), -1, {}}};
        if (peek().kind == Token::Ident) {
            std::string name = take().text;
            if (name == "i") return {FTerm{one().scaled(GaussianRational::i()), -1, {}}};
            int p = params_->index_of(name);
            if (p >= 0) return {FTerm{Jet::parameter(params_, order_, p), -1, {}}};
            if (model_) {
                int t = generator_index(name, "theta");
                if (t >= 1) {
                    if (t > model_->dim())
                        throw InvalidInputError("generator " + name + " is out of range for a " +
                                                std::to_string(model_->dim()) +
                                                "-dimensional model");
                    return {FTerm{one(), t - 1, {}}};
                }
                int f = generator_index(name, "phibar");
                if (f >= 1) {
                    if (f > model_->dim())
                        throw InvalidInputError("generator " + name + " is out of range for a " +
                                                std::to_string(model_->dim()) +
                                                "-dimensional model");
                    return {FTerm{one(), -1, {f - 1}}};
                }
            }
            throw ParseError("unknown name '" + name + "' in expression");
        }
        throw ParseError("unexpected token '" + peek().text + "' in expression");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    ParamSetPtr params_;
    int order_;
    LieModelPtr model_;
};

Jet scalar_total(const Value& v, const ParamSetPtr& params, int order) {
    Jet total(params, order);
    for (const FTerm& t : v) {
        if (t.vec >= 0 || !t.wedge.empty())
            throw ParseError("vector generator in a scalar expression");
        total += t.coef;
    }
    return total;
}

} // namespace

GaussianRational parse_gaussian(const std::string& text) {
    ParamSetPtr none = make_params({});
    Value v = Parser(text, none, 0, nullptr).run();
    return scalar_total(v, none, 0).constant_term();
}

std::vector<GaussianRational> parse_gaussian_list(const std::string& text) {
    std::vector<GaussianRational> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
        if (blank) throw ParseError("empty component in a comma-separated list");
        out.push_back(parse_gaussian(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Jet parse_scalar_jet(const std::string& text, const ParamSetPtr& params, int order) {
    return scalar_total(Parser(text, params, order, nullptr).run(), params, order);
}

Poly parse_poly(const std::string& text) {
    ParamSetPtr s = curve_params();
    constexpr int kExactOrder = 1 << 20;
    return Poly::from_jet(parse_scalar_jet(text, s, kExactOrder));
}

TVForm parse_class_expr(const std::string& text, const LieModelPtr& model,
                        const ParamSetPtr& params, int order, int degree_hint) {
    Value v = Parser(text, params, order, model).run();
    int arity = -1;
    for (const FTerm& t : v) {
        if (t.coef.is_zero()) continue;
        if (t.vec < 0)
            throw InvalidInputError("class expression has a term without a theta generator");
        int a = static_cast<int>(t.wedge.size());
        if (arity == -1) arity = a;
        else if (arity != a)
            throw InvalidInputError("class expression mixes wedge degrees " +
                                    std::to_string(arity) + " and " + std::to_string(a));
    }
    if (arity == -1) arity = degree_hint >= 0 ? degree_hint : 0;
    TVForm out(model, params, order, arity);
    for (const FTerm& t : v) {
        if (t.coef.is_zero()) continue;
        out.add_term(t.vec, t.wedge, t.coef);
    }
    return out;
}

} // namespace cohomjump
