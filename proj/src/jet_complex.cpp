#include "cohomjump/jet_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "cohomjump/errors.hpp"
#include "cohomjump/expr.hpp"

namespace cohomjump {

namespace {

// Orders up to truncation+1 are backed by the verified d∘d ≡ 0 mod s^{M+1};
// beyond that only an exactly closed complex gives a genuine complex.
void check_order(const JetModuleComplex& C, int n) {
    if (n < 1) throw DegreeRangeError("truncation order must be at least 1, got " + std::to_string(n));
    if (!C.exactly_closed() && n > C.truncation() + 1)
        throw DegreeRangeError("order " + std::to_string(n) + " exceeds the validated range " +
                               std::to_string(C.truncation() + 1) +
                               " of a complex that is closed only modulo s^" +
                               std::to_string(C.truncation() + 1));
}

std::string render_chain(const std::vector<Poly>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ", ";
        out += v[k].render("s");
    }
    return out + ")";
}

// s^k coefficient vectors of a polynomial chain.
QVec block_of(const std::vector<Poly>& rep, int k) {
    QVec out(rep.size());
    for (std::size_t p = 0; p < rep.size(); ++p) out[p] = rep[p].coeff(k);
    return out;
}

std::vector<Poly> normalized_rep(const TruncatedClass& a, int P, int n) {
    if (static_cast<int>(a.rep.size()) != P)
        throw InvalidInputError("class representative has " + std::to_string(a.rep.size()) +
                                " entries, expected " + std::to_string(P));
    std::vector<Poly> rep;
    rep.reserve(a.rep.size());
    for (const Poly& p : a.rep) rep.push_back(p.truncated(n - 1));
    return rep;
}

Mat<Poly> poly_mat_mul(const Mat<Poly>& a, const Mat<Poly>& b) {
    if (a.cols != b.rows) throw InternalConsistencyError("polynomial matrix shape mismatch");
    Mat<Poly> out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < b.cols; ++c) {
            Poly acc;
            for (int k = 0; k < a.cols; ++k) acc += a(r, k) * b(k, c);
            out(r, c) = acc;
        }
    return out;
}

} // namespace

JetModuleComplex JetModuleComplex::make(std::vector<int> ranks, std::vector<Mat<Poly>> diffs,
                                        int truncation) {
    if (ranks.empty()) throw InvalidInputError("a complex needs at least one rank");
    for (int p : ranks)
        if (p < 0) throw InvalidInputError("module ranks must be nonnegative");
    if (diffs.size() + 1 != ranks.size())
        throw InvalidInputError("a complex with " + std::to_string(ranks.size()) +
                                " modules needs " + std::to_string(ranks.size() - 1) +
                                " differentials, got " + std::to_string(diffs.size()));
    if (truncation < 1) throw InvalidInputError("truncation order must be at least 1");
    for (std::size_t q = 0; q < diffs.size(); ++q) {
        const Mat<Poly>& d = diffs[q];
        if (d.rows != ranks[q + 1] || d.cols != ranks[q])
            throw InvalidInputError("differential " + std::to_string(q) + " has shape " +
                                    std::to_string(d.rows) + "x" + std::to_string(d.cols) +
                                    ", expected " + std::to_string(ranks[q + 1]) + "x" +
                                    std::to_string(ranks[q]));
        for (const Poly& e : d.a)
            if (e.degree() > truncation)
                throw InvalidInputError("differential entry " + e.render("s") +
                                        " has degree above the truncation order " +
                                        std::to_string(truncation));
    }

    bool exact = true;
    for (std::size_t q = 0; q + 1 < diffs.size(); ++q) {
        Mat<Poly> prod = poly_mat_mul(diffs[q + 1], diffs[q]);
        for (const Poly& e : prod.a) {
            if (e.is_zero()) continue;
            exact = false;
            if (!e.truncated(truncation).is_zero())
                throw InvalidInputError(
                    "not a complex: consecutive differentials at degree " + std::to_string(q) +
                    " compose to " + e.render("s") + " modulo s^" + std::to_string(truncation + 1));
        }
    }

    JetModuleComplex C;
    C.ranks_ = std::move(ranks);
    C.truncation_ = truncation;
    C.d_ = std::move(diffs);
    C.exactly_closed_ = exact;
    return C;
}

int JetModuleComplex::rank_at(int q) const {
    if (q < 0 || q >= static_cast<int>(ranks_.size())) return 0;
    return ranks_[q];
}

Mat<Poly> JetModuleComplex::matrix(int q) const {
    if (q >= 0 && q < static_cast<int>(d_.size())) return d_[q];
    return Mat<Poly>(rank_at(q + 1), rank_at(q));
}

QMat JetModuleComplex::coeff(int q, int k) const {
    Mat<Poly> m = matrix(q);
    QMat out(m.rows, m.cols);
    for (std::size_t idx = 0; idx < m.a.size(); ++idx) out.a[idx] = m.a[idx].coeff(k);
    return out;
}

JetModuleComplex parse_complex(const std::string& text) {
    std::vector<int> ranks;
    int truncation = -1;
    std::vector<Mat<Poly>> diffs;
    std::map<std::tuple<int, int, int>, int> seen; // (q, r, c) -> line
    int maxdeg = 0;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line.substr(0, line.find('#'));
        std::istringstream ls(body);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "ranks") {
            if (!ranks.empty()) fail("duplicate ranks line");
            int p;
            while (ls >> p) {
                if (p < 0) fail("module ranks must be nonnegative");
                ranks.push_back(p);
            }
            if (!ls.eof()) fail("ranks line has a non-integer token");
            if (ranks.empty()) fail("ranks line lists no ranks");
            diffs.assign(ranks.size() - 1, Mat<Poly>());
            for (std::size_t q = 0; q + 1 < ranks.size(); ++q)
                diffs[q] = Mat<Poly>(ranks[q + 1], ranks[q]);
        } else if (head == "truncation") {
            if (truncation != -1) fail("duplicate truncation line");
            if (!(ls >> truncation) || truncation < 1) fail("truncation needs a positive integer");
            std::string extra;
            if (ls >> extra) fail("unexpected token '" + extra + "' after truncation order");
        } else if (head == "d") {
            if (ranks.empty()) fail("entry line before the ranks line");
            std::string::size_type colon = body.find(':');
            if (colon == std::string::npos) fail("entry line is missing ':'");
            std::istringstream lhs(body.substr(0, colon));
            std::string dtok;
            int q, r, c;
            if (!(lhs >> dtok >> q >> r >> c)) fail("entry line needs 'd q r c : value'");
            std::string extra;
            if (lhs >> extra) fail("unexpected token '" + extra + "' before ':'");
            if (q < 0 || q + 1 >= static_cast<int>(ranks.size()))
                fail("differential index " + std::to_string(q) + " out of range");
            if (r < 1 || r > ranks[q + 1]) fail("row " + std::to_string(r) + " out of range");
            if (c < 1 || c > ranks[q]) fail("column " + std::to_string(c) + " out of range");
            auto key = std::make_tuple(q, r, c);
            auto it = seen.find(key);
            if (it != seen.end())
                fail("entry d " + std::to_string(q) + " " + std::to_string(r) + " " +
                     std::to_string(c) + " already set on line " + std::to_string(it->second));
            seen.emplace(key, lineno);
            Poly value;
            try {
                value = parse_poly(body.substr(colon + 1));
            } catch (const ParseError& e) {
                fail(e.what());
            }
            maxdeg = std::max(maxdeg, value.degree());
            diffs[q](r - 1, c - 1) = value;
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
    if (ranks.empty()) throw ParseError("missing ranks line");
    if (truncation == -1) truncation = std::max(1, maxdeg);
    return JetModuleComplex::make(std::move(ranks), std::move(diffs), truncation);
}

std::string render_complex(const JetModuleComplex& C) {
    std::ostringstream out;
    out << "ranks";
    for (int p : C.ranks()) out << " " << p;
    out << "\n";
    out << "truncation " << C.truncation() << "\n";
    for (int q = 0; q < C.length(); ++q) {
        Mat<Poly> d = C.matrix(q);
        for (int r = 0; r < d.rows; ++r)
            for (int c = 0; c < d.cols; ++c)
                if (!d(r, c).is_zero())
                    out << "d " << q << " " << (r + 1) << " " << (c + 1) << " : "
                        << d(r, c).render("s") << "\n";
    }
    return out.str();
}

QVec flatten(const std::vector<Poly>& rep, int P, int n) {
    if (static_cast<int>(rep.size()) != P)
        throw InternalConsistencyError("flatten: representative size mismatch");
    QVec out(static_cast<std::size_t>(P) * n);
    for (int p = 0; p < P; ++p) {
        if (rep[p].degree() >= n)
            throw InternalConsistencyError("flatten: representative degree exceeds the order");
        for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k) * P + p] = rep[p].coeff(k);
    }
    return out;
}

std::vector<Poly> unflatten(const QVec& flat, int P, int n) {
    if (static_cast<int>(flat.size()) != P * n)
        throw InternalConsistencyError("unflatten: vector size mismatch");
    std::vector<Poly> out(static_cast<std::size_t>(P));
    for (int p = 0; p < P; ++p) {
        std::vector<GaussianRational> coeffs(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) coeffs[k] = flat[static_cast<std::size_t>(k) * P + p];
        out[p] = Poly(std::move(coeffs));
    }
    return out;
}

QMat toeplitz(const JetModuleComplex& C, int q, int n) {
    check_order(C, n);
    int rows = C.rank_at(q + 1), cols = C.rank_at(q);
    QMat out(rows * n, cols * n);
    for (int k = 0; k <= std::min(n - 1, C.truncation()); ++k) {
        QMat dk = C.coeff(q, k);
        bool zero = true;
        for (const GaussianRational& g : dk.a)
            if (!g.is_zero()) { zero = false; break; }
        if (zero) continue;
        for (int b = 0; b + k < n; ++b) {
            int a = b + k;
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c)
                    out(a * rows + r, b * cols + c) = dk(r, c);
        }
    }
    return out;
}

TruncatedCohomology::TruncatedCohomology(const JetModuleComplex& C, int q, int n)
    : q_(q), n_(n), P_(C.rank_at(q)), Pprev_(C.rank_at(q - 1)) {
    check_order(C, n);
    space_ = QuotientSpace(toeplitz(C, q, n), toeplitz(C, q - 1, n));
}

std::vector<TruncatedClass> TruncatedCohomology::basis() const {
    std::vector<TruncatedClass> out;
    out.reserve(space_.reps().size());
    for (const QVec& v : space_.reps()) out.push_back({q_, n_, unflatten(v, P_, n_)});
    return out;
}

TruncatedCohomology::Reduction TruncatedCohomology::reduce(const TruncatedClass& a) const {
    if (a.degree != q_ || a.order != n_)
        throw InvalidInputError("class of degree " + std::to_string(a.degree) + " and order " +
                                std::to_string(a.order) + " reduced in cohomology of degree " +
                                std::to_string(q_) + " and order " + std::to_string(n_));
    QVec v = flatten(normalized_rep(a, P_, n_), P_, n_);
    if (!space_.is_cocycle(v)) {
        QVec defect = space_.cocycle_defect(v);
        int P1 = static_cast<int>(defect.size()) / n_;
        throw NotACocycleError("representative is not closed modulo s^" + std::to_string(n_) +
                               "; its differential is " + render_chain(unflatten(defect, P1, n_)));
    }
    QuotientSpace::Reduction r = space_.reduce(v);
    return {r.coords, unflatten(r.witness, Pprev_, n_)};
}

bool TruncatedCohomology::is_zero_class(const TruncatedClass& a) const {
    return vec_zero(reduce(a).coords);
}

bool TruncatedCohomology::is_cocycle(const TruncatedClass& a) const {
    if (a.degree != q_ || a.order != n_) return false;
    return space_.is_cocycle(flatten(normalized_rep(a, P_, n_), P_, n_));
}

TruncatedCohomology truncated_cohomology(const JetModuleComplex& C, int q, int n) {
    return TruncatedCohomology(C, q, n);
}

QVec obstruction_o(const JetModuleComplex& C, int q, int n, const TruncatedClass& alpha) {
    if (alpha.degree != q || alpha.order != n)
        throw InvalidInputError("obstruction of a class of degree " + std::to_string(alpha.degree) +
                                " and order " + std::to_string(alpha.order) +
                                " requested at degree " + std::to_string(q) + " and order " +
                                std::to_string(n));
    check_order(C, n + 1);
    std::vector<Poly> rep = normalized_rep(alpha, C.rank_at(q), n);
    QVec v = flatten(rep, C.rank_at(q), n);
    QVec defect = mat_vec(toeplitz(C, q, n), v);
    if (!vec_zero(defect))
        throw NotACocycleError("representative is not closed modulo s^" + std::to_string(n) +
                               "; its differential is " +
                               render_chain(unflatten(defect, C.rank_at(q + 1), n)));
    QVec chain(static_cast<std::size_t>(C.rank_at(q + 1)));
    for (int a = 1; a <= n; ++a)
        chain = vec_add(chain, mat_vec(C.coeff(q, a), block_of(rep, n - a)));
    if (!vec_zero(mat_vec(C.coeff(q + 1, 0), chain)))
        throw InternalConsistencyError("obstruction chain is not closed in the central fibre");
    return chain;
}

TruncatedClass rho(const JetModuleComplex& C, int q, int i, const QVec& sigma) {
    if (i < 0) throw DegreeRangeError("shift index must be nonnegative, got " + std::to_string(i));
    check_order(C, i + 1);
    if (static_cast<int>(sigma.size()) != C.rank_at(q))
        throw InvalidInputError("fibre chain has " + std::to_string(sigma.size()) +
                                " entries, expected " + std::to_string(C.rank_at(q)));
    if (!vec_zero(mat_vec(C.coeff(q, 0), sigma)))
        throw NotACocycleError("fibre chain is not closed in the central fibre");
    TruncatedClass out{q, i + 1, {}};
    out.rep.reserve(sigma.size());
    for (const GaussianRational& g : sigma) out.rep.push_back(Poly::monomial(i, g));
    return out;
}

TruncatedClass obstruction_oni(const JetModuleComplex& C, int q, int n, int i,
                               const TruncatedClass& alpha) {
    if (i > n)
        throw DegreeRangeError("shift index " + std::to_string(i) + " exceeds the order " +
                               std::to_string(n));
    return rho(C, q + 1, i, obstruction_o(C, q, n, alpha));
}

bool class_vanishes(const JetModuleComplex& C, const TruncatedClass& a) {
    return TruncatedCohomology(C, a.degree, a.order).is_zero_class(a);
}

ExtendResult extend_oracle(const JetModuleComplex& C, int q, const QVec& alpha, int maxOrder) {
    if (maxOrder < 0) throw DegreeRangeError("extension order must be nonnegative");
    check_order(C, maxOrder + 1);
    int P = C.rank_at(q), R = C.rank_at(q + 1);
    if (static_cast<int>(alpha.size()) != P)
        throw InvalidInputError("fibre chain has " + std::to_string(alpha.size()) +
                                " entries, expected " + std::to_string(P));
    if (!vec_zero(mat_vec(C.coeff(q, 0), alpha)))
        throw NotACocycleError("fibre chain is not closed in the central fibre");

    ExtendResult res;
    std::vector<QVec> blocks{alpha}; // canonical solution so far, blocks 0..achieved
    auto to_polys = [&](const std::vector<QVec>& bs) {
        std::vector<Poly> out(static_cast<std::size_t>(P));
        for (int p = 0; p < P; ++p) {
            std::vector<GaussianRational> coeffs(bs.size());
            for (std::size_t k = 0; k < bs.size(); ++k) coeffs[k] = bs[k][p];
            out[p] = Poly(std::move(coeffs));
        }
        return out;
    };

    for (int k = 1; k <= maxOrder; ++k) {
        // rows j = 1..k: d_0 x_j + ... + d_{j-1} x_1 = -d_j alpha
        QMat S(R * k, P * k);
        QVec b(static_cast<std::size_t>(R) * k);
        for (int j = 1; j <= k; ++j) {
            for (int m = 1; m <= j; ++m) {
                QMat dk = C.coeff(q, j - m);
                for (int r = 0; r < R; ++r)
                    for (int c = 0; c < P; ++c)
                        S((j - 1) * R + r, (m - 1) * P + c) = dk(r, c);
            }
            QVec rhs = vec_scale(mat_vec(C.coeff(q, j), alpha), GaussianRational(-1));
            for (int r = 0; r < R; ++r) b[static_cast<std::size_t>(j - 1) * R + r] = rhs[r];
        }
        std::optional<QVec> sol = make_rref(S).solve(b);
        if (!sol) {
            res.obstructed = true;
            res.fail_order = k;
            res.achieved = k - 1;
            QVec chain(static_cast<std::size_t>(R));
            for (int a = 1; a <= k; ++a)
                chain = vec_add(chain, mat_vec(C.coeff(q, a), blocks[k - a]));
            res.certificate = chain;
            res.extension = to_polys(blocks);
            return res;
        }
        blocks.assign(1, alpha);
        for (int m = 1; m <= k; ++m)
            blocks.emplace_back(sol->begin() + static_cast<std::ptrdiff_t>(m - 1) * P,
                                sol->begin() + static_cast<std::ptrdiff_t>(m) * P);
    }
    res.achieved = maxOrder;
    res.extension = to_polys(blocks);
    return res;
}

std::optional<SecondClassWitness> second_class_detect(const JetModuleComplex& C, int q1,
                                                      const QVec& beta, int maxOrder) {
    if (q1 < 1)
        throw InvalidInputError("obstruction classes live in degree at least 1, got " +
                                std::to_string(q1));
    if (maxOrder < 1) throw DegreeRangeError("search order must be at least 1");
    int R = C.rank_at(q1), P = C.rank_at(q1 - 1);
    if (static_cast<int>(beta.size()) != R)
        throw InvalidInputError("fibre chain has " + std::to_string(beta.size()) +
                                " entries, expected " + std::to_string(R));
    if (!vec_zero(mat_vec(C.coeff(q1, 0), beta)))
        throw NotACocycleError("fibre chain is not closed in the central fibre");
    {
        TruncatedCohomology fibre(C, q1, 1);
        std::vector<Poly> rep;
        for (const GaussianRational& g : beta) rep.push_back(Poly(g));
        if (fibre.is_zero_class({q1, 1, rep}))
            throw InvalidInputError("the zero class is never of the second kind");
    }

    int bound = C.exactly_closed() ? maxOrder : std::min(maxOrder, C.truncation());
    for (int n = 1; n <= bound; ++n) {
        // unknowns: blocks a_0..a_{n-1} in degree q1-1, then u in the fibre of
        // degree q1; rows: T_n(d^{q1-1}) a = 0 and sum_a d_a a_{n-a} - d_0 u = beta
        QMat T = toeplitz(C, q1 - 1, n);
        int rows = T.rows + R, cols = T.cols + P;
        QMat S(rows, cols);
        for (int r = 0; r < T.rows; ++r)
            for (int c = 0; c < T.cols; ++c) S(r, c) = T(r, c);
        for (int a = 1; a <= n; ++a) {
            QMat da = C.coeff(q1 - 1, a);
            for (int r = 0; r < R; ++r)
                for (int c = 0; c < P; ++c) S(T.rows + r, (n - a) * P + c) = da(r, c);
        }
        QMat d0 = C.coeff(q1 - 1, 0);
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < P; ++c) S(T.rows + r, T.cols + c) = -d0(r, c);
        QVec b(static_cast<std::size_t>(rows));
        for (int r = 0; r < R; ++r) b[static_cast<std::size_t>(T.rows) + r] = beta[r];
        std::optional<QVec> sol = make_rref(S).solve(b);
        if (sol) {
            QVec flat(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(P) * n);
            return SecondClassWitness{n, unflatten(flat, P, n)};
        }
    }
    return std::nullopt;
}

SpanBuilder extendable_subspace(const JetModuleComplex& C, int q, int n) {
    TruncatedCohomology fibre(C, q, 1);
    SpanBuilder V(fibre.dim());
    if (n == 0) {
        for (int k = 0; k < fibre.dim(); ++k) {
            QVec unit(static_cast<std::size_t>(fibre.dim()));
            unit[k] = GaussianRational(1);
            V.add(std::move(unit));
        }
        return V;
    }
    int P = C.rank_at(q);
    for (const QVec& kv : kernel_basis(toeplitz(C, q, n + 1))) {
        std::vector<Poly> rep;
        rep.reserve(static_cast<std::size_t>(P));
        for (int p = 0; p < P; ++p) rep.push_back(Poly(kv[p]));
        V.add(fibre.reduce({q, 1, rep}).coords);
    }
    return V;
}

SpanBuilder obstruction_image(const JetModuleComplex& C, int q1, int n) {
    TruncatedCohomology fibre(C, q1, 1);
    SpanBuilder W(fibre.dim());
    if (q1 == 0 || C.rank_at(q1 - 1) == 0 || n < 1) return W;
    int P = C.rank_at(q1 - 1);
    for (int m = 1; m <= n; ++m) {
        check_order(C, m + 1);
        for (const QVec& kv : kernel_basis(toeplitz(C, q1 - 1, m))) {
            QVec chain(static_cast<std::size_t>(C.rank_at(q1)));
            for (int a = 1; a <= m; ++a) {
                QVec block(kv.begin() + static_cast<std::ptrdiff_t>(m - a) * P,
                           kv.begin() + static_cast<std::ptrdiff_t>(m - a + 1) * P);
                chain = vec_add(chain, mat_vec(C.coeff(q1 - 1, a), block));
            }
            if (!vec_zero(mat_vec(C.coeff(q1, 0), chain)))
                throw InternalConsistencyError("obstruction chain is not closed in the central fibre");
            std::vector<Poly> rep;
            rep.reserve(chain.size());
            for (const GaussianRational& g : chain) rep.push_back(Poly(g));
            W.add(fibre.reduce({q1, 1, rep}).coords);
        }
    }
    return W;
}

std::vector<DegreeAccounting> jump_accounting(const JetModuleComplex& C, int maxOrder) {
    if (maxOrder < 2) throw InvalidInputError("stabilization needs a search order of at least 2");
    int bound = C.exactly_closed() ? maxOrder : std::min(maxOrder, C.truncation());
    if (bound < 2)
        throw InvalidInputError(
            "the validated truncation range is too short to certify stabilization");

    std::vector<DegreeAccounting> out;
    for (int q = 0; q <= C.length(); ++q) {
        DegreeAccounting acc;
        acc.q = q;
        TruncatedCohomology fibre(C, q, 1);
        acc.h0 = fibre.dim();
        acc.h_generic = C.rank_at(q) - generic_rank(C.matrix(q)) - generic_rank(C.matrix(q - 1));

        std::vector<int> vdims, wdims;
        SpanBuilder V(0), W(0);
        for (int k = 1; k <= bound; ++k) {
            SpanBuilder Vk = extendable_subspace(C, q, k);
            SpanBuilder Wk = obstruction_image(C, q, k);
            if (!vdims.empty() && Vk.rank() > vdims.back())
                throw InternalConsistencyError("extendable subspace grew with the order");
            if (!wdims.empty() && Wk.rank() < wdims.back())
                throw InternalConsistencyError("obstruction image shrank with the order");
            vdims.push_back(Vk.rank());
            wdims.push_back(Wk.rank());
            if (k == bound) { V = std::move(Vk); W = std::move(Wk); }
        }
        if (vdims[bound - 2] != vdims[bound - 1] || wdims[bound - 2] != wdims[bound - 1])
            throw InternalConsistencyError(
                "jump accounting did not stabilize by order " + std::to_string(bound) +
                " in degree " + std::to_string(q) + "; raise the order bound");
        acc.stable_order = bound;
        for (int k = 1; k <= bound; ++k)
            if (vdims[k - 1] == vdims[bound - 1] && wdims[k - 1] == wdims[bound - 1]) {
                acc.stable_order = k;
                break;
            }

        acc.first_dim = acc.h0 - V.rank();
        acc.first_basis = V.complement_basis();
        acc.second_dim = W.rank();
        acc.second_basis = W.rows();

        if (acc.h_generic > acc.h0)
            throw InternalConsistencyError("generic dimension exceeds the central dimension");
        if (acc.h0 - acc.h_generic != acc.first_dim + acc.second_dim) {
            std::string msg = "jump accounting identity failed in degree " + std::to_string(q) +
                              ": " + std::to_string(acc.h0) + " - " + std::to_string(acc.h_generic) +
                              " != " + std::to_string(acc.first_dim) + " + " +
                              std::to_string(acc.second_dim);
            if (C.exactly_closed()) throw InternalConsistencyError(msg);
            throw InvalidInputError(msg + " (the complex is closed only modulo s^" +
                                    std::to_string(C.truncation() + 1) + ")");
        }
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace cohomjump
