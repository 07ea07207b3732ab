#include "cohomjump/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "cohomjump/errors.hpp"
#include "cohomjump/expr.hpp"

namespace cohomjump {
namespace {

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

std::string strip(std::string s) {
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, int lineno, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(lineno, "expected an integer " + what + ", got '" + tok + "'");
    }
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

// Names the expression language already claims for itself.
bool is_reserved_name(const std::string& s) {
    if (s == "i" || s == "s") return true;
    for (const char* prefix : {"theta", "phibar"}) {
        std::string p = prefix;
        if (s.size() > p.size() && s.compare(0, p.size(), p) == 0) {
            bool digits = true;
            for (std::size_t k = p.size(); k < s.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(s[k]))) digits = false;
            if (digits) return true;
        }
    }
    return false;
}

struct TermLine {
    int lineno;
    std::string poly;
    int vec;              // 1-based
    std::vector<int> idx; // 1-based
};

struct DefSection {
    int lineno;
    std::string name;
    int params_lineno = 0;
    std::vector<std::string> params;
    std::vector<TermLine> terms;
};

// Jet order chosen so every declared coefficient survives exactly; the
// Deformation constructor lifts further as its validation needs.
constexpr int kProbeOrder = 1 << 20;

} // namespace

ModelFile parse_model(const std::string& text) {
    std::string model_name;
    int model_lineno = 0;
    int dim = -1;
    std::vector<LieModel::BracketEntry> entries;
    // unordered pair + target -> first declaring line, for duplicate detection
    std::map<std::tuple<int, int, int>, int> seen_brackets;
    std::vector<DefSection> sections;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty()) continue;

        std::istringstream ls(line);
        std::string head;
        ls >> head;

        if (head == "model") {
            if (!model_name.empty()) fail(lineno, "duplicate 'model' line");
            std::string name, extra;
            ls >> name;
            if (name.empty()) fail(lineno, "expected a model name");
            if (ls >> extra) fail(lineno, "unexpected trailing text '" + extra + "'");
            model_name = name;
            model_lineno = lineno;
        } else if (head == "dim") {
            if (model_name.empty()) fail(lineno, "'dim' before 'model'");
            if (dim >= 0) fail(lineno, "duplicate 'dim' line");
            std::string tok, extra;
            ls >> tok;
            if (tok.empty()) fail(lineno, "expected a dimension");
            if (ls >> extra) fail(lineno, "unexpected trailing text '" + extra + "'");
            dim = parse_int(tok, lineno, "dimension");
            if (dim < 1) fail(lineno, "dimension must be at least 1");
        } else if (head == "bracket") {
            if (dim < 0) fail(lineno, "'bracket' before 'dim'");
            if (!sections.empty()) fail(lineno, "'bracket' after a 'deformation' section");
            auto colon = line.find(':');
            if (colon == std::string::npos) fail(lineno, "expected ':' before the bracket value");
            std::istringstream lhs(line.substr(0, colon));
            std::string kw, ti, tj, arrow, tk, extra;
            lhs >> kw >> ti >> tj >> arrow >> tk;
            if (tk.empty()) fail(lineno, "expected 'bracket <i> <j> -> <k> : <value>'");
            if (arrow != "->") fail(lineno, "expected '->' between sources and target");
            if (lhs >> extra) fail(lineno, "unexpected trailing text '" + extra + "'");
            int i = parse_int(ti, lineno, "index");
            int j = parse_int(tj, lineno, "index");
            int k = parse_int(tk, lineno, "index");
            for (int v : {i, j, k})
                if (v < 1 || v > dim)
                    fail(lineno, "index " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(dim));
            GaussianRational value;
            try {
                value = parse_gaussian(line.substr(colon + 1));
            } catch (const Error& e) {
                fail(lineno, e.what());
            }
            if (i == j) {
                if (!value.is_zero())
                    fail(lineno, "the bracket of a vector with itself must vanish");
                continue;
            }
            auto key = std::make_tuple(std::min(i, j), std::max(i, j), k);
            auto [it, fresh] = seen_brackets.emplace(key, lineno);
            if (!fresh)
                fail(lineno, "duplicate bracket entry (already declared on line " +
                                 std::to_string(it->second) + ")");
            entries.push_back({i - 1, j - 1, k - 1, value});
        } else if (head == "deformation") {
            if (dim < 0) fail(lineno, "'deformation' before 'model'/'dim'");
            std::string name, extra;
            ls >> name;
            if (name.empty()) fail(lineno, "expected a deformation name");
            if (ls >> extra) fail(lineno, "unexpected trailing text '" + extra + "'");
            for (const auto& s : sections)
                if (s.name == name)
                    fail(lineno, "duplicate deformation '" + name + "' (already declared on line " +
                                     std::to_string(s.lineno) + ")");
            sections.push_back({lineno, name, 0, {}, {}});
        } else if (head == "params") {
            if (sections.empty()) fail(lineno, "'params' outside a deformation section");
            DefSection& sec = sections.back();
            if (sec.params_lineno != 0) fail(lineno, "duplicate 'params' line in this section");
            if (!sec.terms.empty()) fail(lineno, "'params' must precede the 'term' lines");
            std::string tok;
            while (ls >> tok) {
                if (!is_identifier(tok))
                    fail(lineno, "'" + tok + "' is not a valid parameter name");
                if (is_reserved_name(tok))
                    fail(lineno, "parameter name '" + tok + "' is reserved by the expression language");
                for (const auto& p : sec.params)
                    if (p == tok) fail(lineno, "duplicate parameter '" + tok + "'");
                sec.params.push_back(tok);
            }
            if (sec.params.empty()) fail(lineno, "expected at least one parameter name");
            sec.params_lineno = lineno;
        } else if (head == "term") {
            if (sections.empty()) fail(lineno, "'term' outside a deformation section");
            DefSection& sec = sections.back();
            if (sec.params_lineno == 0) fail(lineno, "'term' before the 'params' line");
            auto colon = line.find(':');
            if (colon == std::string::npos)
                fail(lineno, "expected 'term <polynomial> : <vector> | <conj indices>'");
            std::string poly = strip(line.substr(4, colon - 4));
            if (poly.empty()) fail(lineno, "missing coefficient polynomial");
            std::string rest = line.substr(colon + 1);
            auto bar = rest.find('|');
            if (bar == std::string::npos) fail(lineno, "expected '|' between vector and conj indices");
            int vec = parse_int(strip(rest.substr(0, bar)), lineno, "vector index");
            if (vec < 1 || vec > dim)
                fail(lineno, "vector index " + std::to_string(vec) + " out of range 1.." +
                                 std::to_string(dim));
            std::vector<int> idx;
            std::istringstream is(rest.substr(bar + 1));
            std::string piece;
            while (std::getline(is, piece, ',')) {
                piece = strip(piece);
                if (piece.empty()) fail(lineno, "empty conj index");
                int v = parse_int(piece, lineno, "conj index");
                if (v < 1 || v > dim)
                    fail(lineno, "conj index " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(dim));
                for (int u : idx)
                    if (u == v) fail(lineno, "repeated conj index " + std::to_string(v));
                idx.push_back(v);
            }
            if (idx.empty()) fail(lineno, "expected at least one conj index");
            if (!sec.terms.empty() && sec.terms.front().idx.size() != idx.size())
                fail(lineno, "wedge degree differs from the earlier terms of this deformation");
            for (const auto& t : sec.terms) {
                auto a = t.idx, b = idx;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (t.vec == vec && a == b)
                    fail(lineno, "duplicate term for this generator (already declared on line " +
                                     std::to_string(t.lineno) + ")");
            }
            sec.terms.push_back({lineno, poly, vec, std::move(idx)});
        } else {
            fail(lineno, "unknown directive '" + head + "'");
        }
    }

    if (model_name.empty()) throw ParseError("missing 'model' line");
    if (dim < 0) fail(model_lineno, "missing 'dim' line");

    ModelFile out;
    out.model = std::make_shared<LieModel>(model_name, dim, entries);

    for (const auto& sec : sections) {
        if (sec.params_lineno == 0)
            fail(sec.lineno, "deformation '" + sec.name + "' has no 'params' line");
        ParamSetPtr ps = make_params(sec.params);

        // First pass at a huge order learns the exact coefficient degrees.
        int maxdeg = 0;
        for (const auto& t : sec.terms) {
            Jet probe;
            try {
                probe = parse_scalar_jet(t.poly, ps, kProbeOrder);
            } catch (const Error& e) {
                fail(t.lineno, e.what());
            }
            maxdeg = std::max(maxdeg, probe.max_degree());
        }
        int order = std::max(1, maxdeg);
        int degree = sec.terms.empty() ? 1 : static_cast<int>(sec.terms.front().idx.size());

        TVForm psi(out.model, ps, order, degree);
        for (const auto& t : sec.terms) {
            Jet coef = parse_scalar_jet(t.poly, ps, order);
            std::vector<int> idx0;
            for (int v : t.idx) idx0.push_back(v - 1);
            psi.add_term(t.vec - 1, std::move(idx0), coef);
        }

        try {
            out.deformations.emplace_back(sec.name, std::move(psi));
        } catch (const InconsistentDeformationError& e) {
            throw InconsistentDeformationError("deformation '" + sec.name + "' (line " +
                                               std::to_string(sec.lineno) + "): " + e.what());
        } catch (const InvalidDeformationError& e) {
            throw InvalidDeformationError("deformation '" + sec.name + "' (line " +
                                          std::to_string(sec.lineno) + "): " + e.what());
        }
    }
    return out;
}

std::string render_model(const ModelFile& mf) {
    std::ostringstream os;
    const LieModel& m = *mf.model;
    os << "model " << m.name() << "\n";
    os << "dim " << m.dim() << "\n";
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j)
            for (int k = 0; k < m.dim(); ++k) {
                const GaussianRational& c = m.c(i, j, k);
                if (c.is_zero()) continue;
                os << "bracket " << i + 1 << " " << j + 1 << " -> " << k + 1 << " : "
                   << render(c) << "\n";
            }
    for (const Deformation& d : mf.deformations) {
        os << "\n";
        os << "deformation " << d.name() << "\n";
        os << "params";
        for (const auto& nm : d.params()->names) os << " " << nm;
        os << "\n";
        for (const auto& [key, coef] : d.psi().terms()) {
            os << "term " << coef.render() << " : " << key.vec + 1 << " |";
            std::string sep = " ";
            for (int v : key.idx) {
                os << sep << v + 1;
                sep = ",";
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string builtin_model_text(const std::string& name) {
    if (name == "iwasawa") {
        return "# Nilpotent holomorphically parallelisable model with a single relation\n"
               "model iwasawa\n"
               "dim 3\n"
               "bracket 1 2 -> 3 : 1\n"
               "\n"
               "deformation kodaira\n"
               "params t11 t12 t21 t22 t31 t32\n"
               "term t11 : 1 | 1\n"
               "term t12 : 1 | 2\n"
               "term t21 : 2 | 1\n"
               "term t22 : 2 | 2\n"
               "term t31 : 3 | 1\n"
               "term t32 : 3 | 2\n"
               "term -t11*t22+t21*t12 : 3 | 3\n";
    }
    throw InvalidInputError("unknown builtin model '" + name + "'");
}

ModelFile load_model(const std::string& path_or_builtin) {
    if (path_or_builtin == "iwasawa") return parse_model(builtin_model_text(path_or_builtin));
    std::ifstream in(path_or_builtin);
    if (!in) throw InvalidInputError("cannot read model file '" + path_or_builtin + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

} // namespace cohomjump
