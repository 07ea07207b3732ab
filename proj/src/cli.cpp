#include "cohomjump/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cohomjump/cohomology.hpp"
#include "cohomjump/deformation.hpp"
#include "cohomjump/errors.hpp"
#include "cohomjump/expr.hpp"
#include "cohomjump/jet_complex.hpp"
#include "cohomjump/model_io.hpp"

namespace cohomjump {
namespace {

struct GlobalOpts {
    std::string model = "iwasawa";
    std::string deformation;
    std::string format = "table";
    long long seed = 0; // reserved for randomized harnesses; commands are deterministic
};

bool use_records(const GlobalOpts& g) { return g.format == "records"; }

void kv(std::ostream& out, const std::string& key, const std::string& value) {
    out << key << "=" << value << "\n";
}

ModelFile resolve_model(const std::string& arg) {
    if (arg == "iwasawa") return parse_model(builtin_model_text(arg));
    if (std::ifstream probe(arg); probe) return load_model(arg);
    if (std::string alt = "models/" + arg; true) {
        if (std::ifstream probe(alt); probe) return load_model(alt);
    }
    throw InvalidInputError("cannot read model '" + arg +
                            "' (neither a builtin name nor a readable file)");
}

const Deformation& pick_deformation(const ModelFile& mf, const std::string& name) {
    if (mf.deformations.empty())
        throw InvalidInputError("model '" + mf.model->name() + "' declares no deformation");
    if (name.empty()) return mf.deformations.front();
    for (const Deformation& d : mf.deformations)
        if (d.name() == name) return d;
    std::string msg = "unknown deformation '" + name + "'; available:";
    for (const Deformation& d : mf.deformations) msg += " " + d.name();
    throw InvalidInputError(msg);
}

QVec parse_direction(const std::string& text, const Deformation& def) {
    QVec v = parse_gaussian_list(text);
    if (v.size() != def.params()->size())
        throw InvalidInputError("direction has " + std::to_string(v.size()) +
                                " entries; deformation '" + def.name() + "' has " +
                                std::to_string(def.params()->size()) + " parameters");
    return v;
}

std::string render_direction(const QVec& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + render(v[k]);
    return s;
}

std::string basis_class_listing(const LieModelPtr& model) {
    std::ostringstream os;
    os << "available basis classes:";
    for (const CohomologySpace& sp : complex_cohomology(model)) {
        os << "\n  H^" << sp.degree() << ":";
        for (int k = 0; k < sp.dim(); ++k)
            os << (k ? ", " : " ") << sp.rep_form(k, curve_params(), 1).render_flat();
    }
    return os.str();
}

TVForm parse_class_arg(const std::string& text, const Deformation& def) {
    try {
        TVForm f = parse_class_expr(text, def.model(), def.params(), def.order());
        if (f.is_zero())
            throw InvalidInputError("the zero expression does not name a class");
        return f;
    } catch (const Error& e) {
        throw InvalidInputError("cannot interpret class expression '" + text +
                                "': " + e.what() + "\n" + basis_class_listing(def.model()));
    }
}

std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? " " : "") + std::to_string(xs[k]);
    return s;
}

std::string render_qvec(const QVec& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + render(v[k]);
    return s + ")";
}

std::string render_poly_vec(const std::vector<Poly>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].render();
    return s + "]";
}

// Linear combination of degree-q generators with polynomial coefficients,
// rendered as a form over the curve parameter.
TVForm chain_form(const LieModelPtr& model, int q, const std::vector<Poly>& coords) {
    BasisIndex basis = BasisIndex::make(*model, q);
    int W = 1;
    for (const Poly& p : coords) W = std::max(W, p.degree());
    std::vector<Jet> jets;
    jets.reserve(coords.size());
    for (const Poly& p : coords) jets.push_back(p.to_jet(W));
    return from_coords(model, curve_params(), W, basis, jets);
}

// ---------------------------------------------------------------- commands

int cmd_check_model(const GlobalOpts& g, std::ostream& out) {
    ModelFile mf = resolve_model(g.model);
    const LieModel& m = *mf.model;
    int brackets = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j)
            for (int k = 0; k < m.dim(); ++k)
                if (!m.c(i, j, k).is_zero()) ++brackets;
    if (use_records(g)) {
        kv(out, "model", m.name());
        kv(out, "dim", std::to_string(m.dim()));
        kv(out, "brackets", std::to_string(brackets));
        kv(out, "nilpotent", m.is_nilpotent() ? "1" : "0");
        kv(out, "nilpotency_class", std::to_string(m.nilpotency_class()));
        kv(out, "deformations", std::to_string(mf.deformations.size()));
        int n = 0;
        for (const Deformation& d : mf.deformations) {
            ++n;
            std::string p = "deformation_" + std::to_string(n);
            kv(out, p, d.name());
            kv(out, p + "_terms", std::to_string(d.psi().terms().size()));
            kv(out, p + "_params", std::to_string(d.params()->size()));
            kv(out, p + "_mc_ok", "1");
        }
    } else {
        out << "model: " << m.name() << "\n";
        out << "dim: " << m.dim() << "\n";
        out << "bracket entries: " << brackets << "\n";
        if (m.is_nilpotent())
            out << "nilpotency class: " << m.nilpotency_class() << "\n";
        else
            out << "nilpotency: not nilpotent\n";
        for (const Deformation& d : mf.deformations)
            out << "deformation " << d.name() << ": " << d.psi().terms().size() << " terms, "
                << d.params()->size() << " params, maurer-cartan ok\n";
    }
    return 0;
}

int cmd_cohomology(const GlobalOpts& g, std::ostream& out) {
    ModelFile mf = resolve_model(g.model);
    auto spaces = complex_cohomology(mf.model);
    auto h = h_vector(spaces);
    if (use_records(g)) {
        kv(out, "model", mf.model->name());
        kv(out, "dim", std::to_string(mf.model->dim()));
        for (std::size_t q = 0; q < h.size(); ++q)
            kv(out, "h_" + std::to_string(q), std::to_string(h[q]));
        for (const CohomologySpace& sp : spaces)
            for (int k = 0; k < sp.dim(); ++k)
                kv(out, "rep_" + std::to_string(sp.degree()) + "_" + std::to_string(k + 1),
                   sp.rep_form(k, curve_params(), 1).render_flat());
    } else {
        out << "model: " << mf.model->name() << "\n";
        out << "dim: " << mf.model->dim() << "\n";
        out << "h(T): " << join_ints(h) << "\n";
        for (const CohomologySpace& sp : spaces) {
            out << "H^" << sp.degree() << ":";
            for (int k = 0; k < sp.dim(); ++k)
                out << (k ? ", " : " ") << sp.rep_form(k, curve_params(), 1).render_flat();
            out << "\n";
        }
    }
    return 0;
}

int cmd_mc_check(const GlobalOpts& g, int order, std::ostream& out) {
    ModelFile mf = resolve_model(g.model);
    const Deformation& def = pick_deformation(mf, g.deformation);
    MCReport rep = mc_check(mf.model, def.psi(), order);
    TVForm lhs = def.psi().with_order(std::max(def.order(), order)).dbar().truncated(order);
    TVForm psi = def.psi().with_order(std::max(def.order(), order));
    TVForm rhs = bracket(psi, psi).scaled(GaussianRational(2).inverse()).truncated(order);
    if (use_records(g)) {
        kv(out, "deformation", def.name());
        kv(out, "order", std::to_string(rep.order));
        kv(out, "dbar_psi", lhs.render_flat());
        kv(out, "half_bracket", rhs.render_flat());
        kv(out, "defect", rep.defect.render_flat());
        kv(out, "mc_ok", rep.mc_ok ? "1" : "0");
        kv(out, "dd_ok", rep.dd_ok ? "1" : "0");
    } else {
        out << "deformation: " << def.name() << "\n";
        out << "order: " << rep.order << "\n";
        out << "dbar(psi) = " << lhs.render_flat() << "\n";
        out << "[psi,psi]/2 = " << rhs.render_flat() << "\n";
        out << "defect = " << rep.defect.render_flat() << "\n";
        out << "maurer-cartan: " << (rep.mc_ok ? "ok" : "FAILED") << "\n";
        out << "twisted d squared: " << (rep.dd_ok ? "ok" : "FAILED") << "\n";
    }
    return rep.mc_ok && rep.dd_ok ? 0 : 1;
}

int cmd_obstruct(const GlobalOpts& g, const std::string& class_expr, int order,
                 const std::string& direction, std::ostream& out) {
    ModelFile mf = resolve_model(g.model);
    const Deformation& def0 = pick_deformation(mf, g.deformation);
    TVForm base = parse_class_arg(class_expr, def0);
    Deformation def = def0;
    bool on_curve = !direction.empty();
    QVec v;
    if (on_curve) {
        v = parse_direction(direction, def0);
        def = along_curve(def0, v);
        base = base.substitute_curve(v);
    }
    ExtendReport er = extend_class(def, base, order);
    std::string o_line, o_value;
    int o_order;
    if (er.obstructed) {
        o_order = er.fail_order;
        o_value = er.certificate->rep.render_flat();
    } else {
        o_order = order;
        o_value = "0";
    }
    o_line = "o" + std::to_string(o_order) + " = " + o_value;
    if (use_records(g)) {
        kv(out, "class", class_expr);
        kv(out, "deformation", def0.name());
        if (on_curve) kv(out, "direction", render_direction(v));
        kv(out, "normalization", "1");
        kv(out, "order", std::to_string(order));
        kv(out, "o" + std::to_string(o_order), o_value);
        kv(out, "obstructed", er.obstructed ? "1" : "0");
        kv(out, "fail_order", std::to_string(er.fail_order));
        kv(out, "achieved", std::to_string(er.state.achieved));
    } else {
        out << "class: " << class_expr << "\n";
        out << "deformation: " << def0.name() << "\n";
        if (on_curve) out << "direction: " << render_direction(v) << "\n";
        out << "normalization: 1\n";
        out << o_line << "\n";
        if (er.obstructed)
            out << "status: obstructed at order " << er.fail_order << "\n";
        else
            out << "status: extends to order " << order << "\n";
    }
    return 0;
}

int cmd_extend(const GlobalOpts& g, const std::string& class_expr, int max_order,
               const std::string& direction, std::ostream& out) {
    ModelFile mf = resolve_model(g.model);
    const Deformation& def0 = pick_deformation(mf, g.deformation);
    TVForm base = parse_class_arg(class_expr, def0);
    QVec v = parse_direction(direction, def0);
    Deformation def = along_curve(def0, v);
    base = base.substitute_curve(v);
    ExtendReport er = extend_class(def, base, max_order);
    bool valid = validate_extension(def, er.state);
    if (use_records(g)) {
        kv(out, "class", class_expr);
        kv(out, "deformation", def0.name());
        kv(out, "direction", render_direction(v));
        kv(out, "max_order", std::to_string(max_order));
        kv(out, "achieved", std::to_string(er.state.achieved));
        kv(out, "obstructed", er.obstructed ? "1" : "0");
        kv(out, "fail_order", std::to_string(er.fail_order));
        if (er.obstructed)
            kv(out, "o" + std::to_string(er.fail_order), er.certificate->rep.render_flat());
        for (int m = 1; m <= er.state.achieved; ++m)
            kv(out, "alpha_" + std::to_string(m), er.state.part(m).render_flat());
        kv(out, "validated", valid ? "1" : "0");
    } else {
        out << "class: " << class_expr << "\n";
        out << "deformation: " << def0.name() << "\n";
        out << "direction: " << render_direction(v) << "\n";
        out << "achieved order: " << er.state.achieved << "\n";
        if (er.obstructed) {
            out << "status: obstructed at order " << er.fail_order << "\n";
            out << "o" << er.fail_order << " = " << er.certificate->rep.render_flat() << "\n";
        } else {
            out << "status: extends to order " << max_order << "\n";
        }
        for (int m = 1; m <= er.state.achieved; ++m)
            out << "alpha^(" << m << ") = " << er.state.part(m).render_flat() << "\n";
        out << "validated: " << (valid ? "yes" : "NO") << "\n";
    }
    return 0;
}

int cmd_jump_report(const GlobalOpts& g, const std::string& direction, int max_order,
                    std::ostream& out) {
    ModelFile mf = resolve_model(g.model);
    const Deformation& def = pick_deformation(mf, g.deformation);
    QVec v = parse_direction(direction, def);
    auto rows = jump_report(def, v, max_order);
    std::vector<int> h0s, hgens;
    for (const JumpRow& r : rows) {
        h0s.push_back(r.h0);
        hgens.push_back(r.h_generic);
    }
    if (use_records(g)) {
        kv(out, "model", mf.model->name());
        kv(out, "deformation", def.name());
        kv(out, "direction", render_direction(v));
        kv(out, "max_order", std::to_string(max_order));
        for (const JumpRow& r : rows) {
            std::string q = std::to_string(r.q);
            kv(out, "h_" + q, std::to_string(r.h0));
            kv(out, "hgen_" + q, std::to_string(r.h_generic));
            kv(out, "jump_" + q, std::to_string(r.h0 - r.h_generic));
            kv(out, "first_" + q, std::to_string(r.first.size()));
            kv(out, "second_" + q, std::to_string(r.second.size()));
            kv(out, "stable_" + q, std::to_string(r.stable_order));
            int n = 0;
            for (const FirstClassEntry& e : r.first) {
                ++n;
                std::string p = "first_" + q + "_" + std::to_string(n);
                kv(out, p, e.rep.render_flat());
                kv(out, p + "_order", std::to_string(e.fail_order));
                kv(out, p + "_obstruction", e.certificate.render_flat());
            }
            n = 0;
            for (const SecondClassEntry& e : r.second) {
                ++n;
                std::string p = "second_" + q + "_" + std::to_string(n);
                kv(out, p, e.rep.render_flat());
                kv(out, p + "_order", std::to_string(e.order));
                kv(out, p + "_witness",
                   chain_form(mf.model, r.q - 1, e.witness).render_flat());
            }
        }
    } else {
        out << "model: " << mf.model->name() << "\n";
        out << "deformation: " << def.name() << "\n";
        out << "direction: " << render_direction(v) << "\n";
        out << "h(T) central: " << join_ints(h0s) << "\n";
        out << "h(T) generic: " << join_ints(hgens) << "\n";
        for (const JumpRow& r : rows) {
            out << "q=" << r.q << ": h=" << r.h0 << " generic=" << r.h_generic
                << " jump=" << (r.h0 - r.h_generic) << " first=" << r.first.size()
                << " second=" << r.second.size() << " stable-order=" << r.stable_order << "\n";
            for (const FirstClassEntry& e : r.first)
                out << "  first-class: " << e.rep.render_flat() << " (obstructed at order "
                    << e.fail_order << ", o" << e.fail_order << " = "
                    << e.certificate.render_flat() << ")\n";
            for (const SecondClassEntry& e : r.second)
                out << "  second-class: " << e.rep.render_flat() << " (order " << e.order
                    << ", obstructs " << chain_form(mf.model, r.q - 1, e.witness).render_flat()
                    << ")\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------ jet commands

JetModuleComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot read complex file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

int cmd_jet_check(const GlobalOpts& g, const std::string& path, std::ostream& out) {
    JetModuleComplex C = load_complex(path);
    if (use_records(g)) {
        kv(out, "length", std::to_string(C.length()));
        kv(out, "truncation", std::to_string(C.truncation()));
        kv(out, "exactly_closed", C.exactly_closed() ? "1" : "0");
        for (std::size_t q = 0; q < C.ranks().size(); ++q)
            kv(out, "rank_" + std::to_string(q), std::to_string(C.ranks()[q]));
    } else {
        out << "ranks: " << join_ints(C.ranks()) << "\n";
        out << "length: " << C.length() << "\n";
        out << "truncation: " << C.truncation() << "\n";
        out << "exactly closed: " << (C.exactly_closed() ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_jet_cohomology(const GlobalOpts& g, const std::string& path, int order,
                       std::ostream& out) {
    JetModuleComplex C = load_complex(path);
    std::vector<int> dims;
    std::vector<TruncatedCohomology> spaces;
    for (int q = 0; q <= C.length(); ++q) {
        spaces.push_back(truncated_cohomology(C, q, order));
        dims.push_back(spaces.back().dim());
    }
    if (use_records(g)) {
        kv(out, "order", std::to_string(order));
        for (int q = 0; q <= C.length(); ++q) {
            kv(out, "h_" + std::to_string(q), std::to_string(dims[q]));
            auto basis = spaces[q].basis();
            for (std::size_t k = 0; k < basis.size(); ++k)
                kv(out, "basis_" + std::to_string(q) + "_" + std::to_string(k + 1),
                   render_poly_vec(basis[k].rep));
        }
    } else {
        out << "order: " << order << "\n";
        out << "h: " << join_ints(dims) << "\n";
        for (int q = 0; q <= C.length(); ++q) {
            auto basis = spaces[q].basis();
            out << "H^" << q << ":";
            for (std::size_t k = 0; k < basis.size(); ++k)
                out << (k ? ", " : " ") << render_poly_vec(basis[k].rep);
            out << "\n";
        }
    }
    return 0;
}

QVec parse_fiber_vector(const std::string& text, int expected, const std::string& what) {
    QVec v = parse_gaussian_list(text);
    if (static_cast<int>(v.size()) != expected)
        throw InvalidInputError(what + " has " + std::to_string(v.size()) +
                                " entries; expected " + std::to_string(expected));
    return v;
}

int cmd_jet_extend(const GlobalOpts& g, const std::string& path, int q,
                   const std::string& class_text, int max_order, std::ostream& out) {
    JetModuleComplex C = load_complex(path);
    QVec alpha = parse_fiber_vector(class_text, C.rank_at(q), "class");
    ExtendResult r = extend_oracle(C, q, alpha, max_order);
    if (use_records(g)) {
        kv(out, "degree", std::to_string(q));
        kv(out, "max_order", std::to_string(max_order));
        kv(out, "achieved", std::to_string(r.achieved));
        kv(out, "obstructed", r.obstructed ? "1" : "0");
        kv(out, "fail_order", std::to_string(r.fail_order));
        if (r.obstructed) kv(out, "certificate", render_qvec(r.certificate));
        kv(out, "extension", render_poly_vec(r.extension));
    } else {
        out << "degree: " << q << "\n";
        out << "achieved order: " << r.achieved << "\n";
        if (r.obstructed) {
            out << "status: obstructed at order " << r.fail_order << "\n";
            out << "certificate: " << render_qvec(r.certificate) << "\n";
        } else {
            out << "status: extends to order " << max_order << "\n";
        }
        out << "extension: " << render_poly_vec(r.extension) << "\n";
    }
    return 0;
}

int cmd_jet_second_class(const GlobalOpts& g, const std::string& path, int q,
                         const std::string& class_text, int max_order, std::ostream& out) {
    JetModuleComplex C = load_complex(path);
    QVec beta = parse_fiber_vector(class_text, C.rank_at(q), "class");
    auto hit = second_class_detect(C, q, beta, max_order);
    if (use_records(g)) {
        kv(out, "degree", std::to_string(q));
        kv(out, "max_order", std::to_string(max_order));
        kv(out, "second_class", hit ? "1" : "0");
        if (hit) {
            kv(out, "order", std::to_string(hit->order));
            kv(out, "witness", render_poly_vec(hit->witness));
        }
    } else {
        out << "degree: " << q << "\n";
        if (hit) {
            out << "second-class: yes (order " << hit->order << ")\n";
            out << "witness: " << render_poly_vec(hit->witness) << "\n";
        } else {
            out << "second-class: no (searched to order " << max_order << ")\n";
        }
    }
    return 0;
}

int cmd_jet_jump(const GlobalOpts& g, const std::string& path, int max_order,
                 std::ostream& out) {
    JetModuleComplex C = load_complex(path);
    auto rows = jump_accounting(C, max_order);
    if (use_records(g)) {
        kv(out, "max_order", std::to_string(max_order));
        for (const DegreeAccounting& r : rows) {
            std::string q = std::to_string(r.q);
            kv(out, "h_" + q, std::to_string(r.h0));
            kv(out, "hgen_" + q, std::to_string(r.h_generic));
            kv(out, "jump_" + q, std::to_string(r.h0 - r.h_generic));
            kv(out, "first_" + q, std::to_string(r.first_dim));
            kv(out, "second_" + q, std::to_string(r.second_dim));
            kv(out, "stable_" + q, std::to_string(r.stable_order));
            for (std::size_t k = 0; k < r.first_basis.size(); ++k)
                kv(out, "first_" + q + "_" + std::to_string(k + 1), render_qvec(r.first_basis[k]));
            for (std::size_t k = 0; k < r.second_basis.size(); ++k)
                kv(out, "second_" + q + "_" + std::to_string(k + 1),
                   render_qvec(r.second_basis[k]));
        }
    } else {
        for (const DegreeAccounting& r : rows) {
            out << "q=" << r.q << ": h=" << r.h0 << " generic=" << r.h_generic
                << " jump=" << (r.h0 - r.h_generic) << " first=" << r.first_dim
                << " second=" << r.second_dim << " stable-order=" << r.stable_order << "\n";
            for (const QVec& b : r.first_basis)
                out << "  first-class basis: " << render_qvec(b) << "\n";
            for (const QVec& b : r.second_basis)
                out << "  second-class basis: " << render_qvec(b) << "\n";
        }
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cohomology, obstruction calculus, and jump accounting for "
                 "invariant complex models"};
    app.name("cohomjump");
    GlobalOpts g;
    app.add_option("--model", g.model, "builtin model name or model file path")
        ->default_str("iwasawa");
    app.add_option("--deformation", g.deformation, "deformation name (default: first declared)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "records"}))
        ->default_str("table");
    app.add_option("--seed", g.seed, "seed for randomized harnesses (commands are deterministic)");
    app.require_subcommand(1);

    int rc = 0;

    auto* check = app.add_subcommand("check-model", "parse and validate a model file");
    check->fallthrough();
    check->callback([&] { rc = cmd_check_model(g, out); });

    auto* coh = app.add_subcommand("cohomology", "fiber cohomology of the tangent complex");
    coh->fallthrough();
    coh->callback([&] { rc = cmd_cohomology(g, out); });

    auto* mc = app.add_subcommand("mc-check", "verify the Maurer-Cartan equation");
    mc->fallthrough();
    auto mc_order = std::make_shared<int>(4);
    mc->add_option("--order", *mc_order, "jet order of the verification")->default_str("4");
    mc->callback([&, mc_order] { rc = cmd_mc_check(g, *mc_order, out); });

    auto* ob = app.add_subcommand("obstruct", "obstruction class of a cohomology class");
    ob->fallthrough();
    auto ob_class = std::make_shared<std::string>();
    auto ob_order = std::make_shared<int>(1);
    auto ob_dir = std::make_shared<std::string>();
    ob->add_option("--class", *ob_class, "class expression, e.g. theta2")->required();
    ob->add_option("--order", *ob_order, "obstruction order")->default_str("1");
    ob->add_option("--direction", *ob_dir, "restrict to the curve t = s*direction");
    ob->callback([&, ob_class, ob_order, ob_dir] {
        rc = cmd_obstruct(g, *ob_class, *ob_order, *ob_dir, out);
    });

    auto* ex = app.add_subcommand("extend", "extend a class order-by-order along a direction");
    ex->fallthrough();
    auto ex_class = std::make_shared<std::string>();
    auto ex_order = std::make_shared<int>(4);
    auto ex_dir = std::make_shared<std::string>();
    ex->add_option("--class", *ex_class, "class expression, e.g. theta2")->required();
    ex->add_option("--max-order", *ex_order, "extension order bound")->default_str("4");
    ex->add_option("--direction", *ex_dir, "curve direction in parameter order")->required();
    ex->callback([&, ex_class, ex_order, ex_dir] {
        rc = cmd_extend(g, *ex_class, *ex_order, *ex_dir, out);
    });

    auto* jr = app.add_subcommand("jump-report", "explain cohomology jumps along a direction");
    jr->fallthrough();
    auto jr_dir = std::make_shared<std::string>();
    auto jr_order = std::make_shared<int>(4);
    jr->add_option("--direction", *jr_dir, "curve direction in parameter order")->required();
    jr->add_option("--max-order", *jr_order, "stabilization order bound")->default_str("4");
    jr->callback([&, jr_dir, jr_order] { rc = cmd_jump_report(g, *jr_dir, *jr_order, out); });

    auto* jet = app.add_subcommand("jet", "one-parameter truncated-module complexes");
    jet->fallthrough();
    jet->require_subcommand(1);
    auto jet_path = std::make_shared<std::string>();
    jet->add_option("--complex", *jet_path, "complex file path")->required();

    auto* jc = jet->add_subcommand("check", "parse and validate a complex file");
    jc->fallthrough();
    jc->callback([&, jet_path] { rc = cmd_jet_check(g, *jet_path, out); });

    auto* jh = jet->add_subcommand("cohomology", "truncated cohomology dimensions");
    jh->fallthrough();
    auto jh_order = std::make_shared<int>(1);
    jh->add_option("--order", *jh_order, "truncation order n (classes mod s^n)")
        ->default_str("1");
    jh->callback([&, jet_path, jh_order] { rc = cmd_jet_cohomology(g, *jet_path, *jh_order, out); });

    auto* je = jet->add_subcommand("extend", "greedy order-by-order extension of a fiber class");
    je->fallthrough();
    auto je_q = std::make_shared<int>(0);
    auto je_class = std::make_shared<std::string>();
    auto je_order = std::make_shared<int>(4);
    je->add_option("--degree", *je_q, "cochain degree q")->required();
    je->add_option("--class", *je_class, "fiber vector, comma-separated scalars")->required();
    je->add_option("--max-order", *je_order, "extension order bound")->default_str("4");
    je->callback([&, jet_path, je_q, je_class, je_order] {
        rc = cmd_jet_extend(g, *jet_path, *je_q, *je_class, *je_order, out);
    });

    auto* js = jet->add_subcommand("second-class", "search for an obstruction hitting a class");
    js->fallthrough();
    auto js_q = std::make_shared<int>(0);
    auto js_class = std::make_shared<std::string>();
    auto js_order = std::make_shared<int>(4);
    js->add_option("--degree", *js_q, "cochain degree of the target class")->required();
    js->add_option("--class", *js_class, "fiber vector, comma-separated scalars")->required();
    js->add_option("--max-order", *js_order, "search order bound")->default_str("4");
    js->callback([&, jet_path, js_q, js_class, js_order] {
        rc = cmd_jet_second_class(g, *jet_path, *js_q, *js_class, *js_order, out);
    });

    auto* jj = jet->add_subcommand("jump", "jump accounting for the complex");
    jj->fallthrough();
    auto jj_order = std::make_shared<int>(8);
    jj->add_option("--max-order", *jj_order, "stabilization order bound")->default_str("8");
    jj->callback([&, jet_path, jj_order] { rc = cmd_jet_jump(g, *jet_path, *jj_order, out); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

} // namespace cohomjump
