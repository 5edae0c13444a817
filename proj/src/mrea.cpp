#include "qlab/mrea.hpp"

#include "qlab/anchors.hpp"
#include "qlab/errors.hpp"
#include "qlab/linear_solve.hpp"

#include <algorithm>
#include <sstream>

namespace qlab {

// ---- noncommutative polynomials

NcPolynomial NcPolynomial::unit(const Scalar& c) {
    NcPolynomial p;
    p.add_term({}, c);
    return p;
}

NcPolynomial NcPolynomial::generator(int g, const Scalar& c) {
    NcPolynomial p;
    p.add_term({g}, c);
    return p;
}

int NcPolynomial::degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

Scalar NcPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void NcPolynomial::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
    NcPolynomial out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

NcPolynomial operator*(const Scalar& s, const NcPolynomial& a) {
    NcPolynomial out;
    if (s.is_zero()) return out;
    for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, s * c);
    return out;
}

NcPolynomial NcPolynomial::substitute(const std::vector<NcPolynomial>& images) const {
    NcPolynomial out;
    for (const auto& [w, c] : terms_) {
        NcPolynomial t = unit(c);
        for (int g : w) t = t * images.at(static_cast<std::size_t>(g));
        out += t;
    }
    return out;
}

std::string NcPolynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ')';
        for (int g : w) os << '*' << names.at(static_cast<std::size_t>(g));
    }
    return os.str();
}

NcMatrix::NcMatrix(const Matrix& m) : NcMatrix(m.rows(), m.cols()) {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!m.raw(r, c).is_zero()) at(r, c) = NcPolynomial::unit(m.raw(r, c));
}

NcMatrix operator*(const NcMatrix& a, const NcMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("NcMatrix product shape mismatch");
    NcMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const NcPolynomial& x = a.at(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const NcPolynomial& y = b.at(k, c);
                if (!y.is_zero()) out.at(r, c) += x * y;
            }
        }
    return out;
}

NcMatrix operator+(const NcMatrix& a, const NcMatrix& b) {
    NcMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_.at(i);
    return out;
}

NcMatrix operator-(const NcMatrix& a, const NcMatrix& b) {
    NcMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_.at(i);
    return out;
}

NcMatrix operator*(const Scalar& s, const NcMatrix& a) {
    NcMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
    return out;
}

NcMatrix first_copy(std::size_t n) {
    NcMatrix l(n * n, n * n);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2)
            for (std::size_t j1 = 0; j1 < n; ++j1)
                l.at(i1 * n + i2, j1 * n + i2) = NcPolynomial::generator(static_cast<int>(i1 * n + j1));
    return l;
}

// ---- relation sets

NcPolynomial RelationSet::relation(std::size_t r) const {
    std::size_t g = generators();
    NcPolynomial p;
    for (std::size_t c = 0; c < g * g; ++c)
        p.add_term({static_cast<int>(c / g), static_cast<int>(c % g)}, quadratic.raw(r, c));
    for (std::size_t t = 0; t < g; ++t) p.add_term({static_cast<int>(t)}, linear.raw(r, t));
    return p;
}

std::vector<NcPolynomial> RelationSet::polynomials() const {
    std::vector<NcPolynomial> out;
    for (std::size_t r = 0; r < size(); ++r) out.push_back(relation(r));
    return out;
}

RelationSet RelationSet::from_polynomials(std::size_t n, const Scalar& hbar, const std::vector<NcPolynomial>& rels) {
    RelationSet out;
    out.n = n;
    out.hbar = hbar;
    std::size_t g = n * n;
    out.quadratic = Matrix(rels.size(), g * g);
    out.linear = Matrix(rels.size(), g);
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (const auto& [w, c] : rels[r].terms()) {
            if (w.size() == 2)
                out.quadratic.raw(r, static_cast<std::size_t>(w[0]) * g + static_cast<std::size_t>(w[1])) = c;
            else if (w.size() == 1)
                out.linear.raw(r, static_cast<std::size_t>(w[0])) = c;
            else
                throw Error("relation outside the quadratic-linear shape");
        }
    return out;
}

namespace {

std::vector<SparseVector> coefficient_rows(const RelationSet& s) {
    std::vector<SparseVector> rows;
    std::size_t g = s.generators();
    for (std::size_t r = 0; r < s.size(); ++r) {
        SparseVector v;
        for (std::size_t t = 0; t < g; ++t)
            if (!s.linear.raw(r, t).is_zero()) v.emplace_back(t, s.linear.raw(r, t));
        for (std::size_t c = 0; c < g * g; ++c)
            if (!s.quadratic.raw(r, c).is_zero()) v.emplace_back(g + c, s.quadratic.raw(r, c));
        rows.push_back(std::move(v));
    }
    return rows;
}

std::vector<NcPolynomial> entries(const NcMatrix& m) {
    std::vector<NcPolynomial> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
    return out;
}

}  // namespace

bool same_span(const RelationSet& a, const RelationSet& b) {
    auto ra = coefficient_rows(a), rb = coefficient_rows(b);
    std::size_t na = sparse_rank(ra), nb = sparse_rank(rb);
    ra.insert(ra.end(), rb.begin(), rb.end());
    return na == nb && sparse_rank(std::move(ra)) == na;
}

RelationSet relation_set(const Braiding& r, const Scalar& hbar) {
    std::size_t n = r.dim();
    NcMatrix R(r.matrix()), L = first_copy(n);
    NcMatrix RL = R * L, LR = L * R;
    NcMatrix mrea = RL * RL - LR * LR - hbar * (RL - LR);
    RelationSet out = RelationSet::from_polynomials(n, hbar, entries(mrea));

    // L_1bar L_2bar - R^-1 L_1bar L_2bar R = hbar (L_1 R - R L_1), L_2bar = R L_1 R^-1
    NcMatrix Ri(r.inverse_matrix());
    NcMatrix two = L * R * L * Ri;
    NcMatrix eq = two - Ri * two * R - hbar * (LR - RL);
    RelationSet eqs = RelationSet::from_polynomials(n, hbar, entries(eq));
    out.checks.push_back(check_true("rearranged form spans the same relations", anchor::eq_form, same_span(out, eqs),
                                    "relation spans differ"));
    return out;
}

RelationSet classical_gl_relations(std::size_t n) {
    std::vector<NcPolynomial> rels;
    auto gen = [n](std::size_t i, std::size_t j) { return NcPolynomial::generator(static_cast<int>(i * n + j)); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    NcPolynomial p = gen(i, j) * gen(k, m) - gen(k, m) * gen(i, j);
                    if (j == k) p -= gen(i, m);
                    if (i == m) p += gen(k, j);
                    rels.push_back(p);
                }
    return RelationSet::from_polynomials(n, Scalar(1), rels);
}

// ---- representations

const Matrix& GeneratorRep::image(std::size_t i, std::size_t j) const {
    std::size_t n = 0;
    while (n * n < images.size()) ++n;
    return images.at(i * n + j);
}

Matrix ell_image(const GeneratorRep& rho, const SkewInverseData& skew) {
    std::size_t n = skew.C.rows();
    if (rho.carrier_dim == 0) return Matrix();
    Matrix out(rho.carrier_dim, rho.carrier_dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!skew.C(j, i).is_zero()) out += rho.images.at(i * n + j) * skew.C(j, i);
    return out;
}

void attach_chi(GeneratorRep& rho, const SkewInverseData& skew) {
    rho.chi.reset();
    if (rho.carrier_dim == 0) return;
    Matrix l = ell_image(rho, skew);
    Scalar c = l(0, 0);
    if (l == Matrix::scalar(rho.carrier_dim, c)) rho.chi = c;
}

GeneratorRep vector_rep(const Braiding& r, const SkewInverseData& skew) {
    std::size_t n = r.dim();
    if (bareiss_determinant(skew.B).is_zero()) throw Error("B is singular; no vector representation");
    GeneratorRep rho;
    rho.carrier_dim = n;
    rho.equivariant = true;
    rho.word = std::vector<bool>{false};
    rho.label = "V";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix m(n, n);
            for (std::size_t k = 0; k < n; ++k) m(i, k) = skew.B(k, j);
            rho.images.push_back(std::move(m));
        }
    attach_chi(rho, skew);
    return rho;
}

GeneratorRep covector_rep(const Braiding& r, const SkewInverseData& skew) {
    std::size_t n = r.dim();
    GeneratorRep rho;
    rho.carrier_dim = n;
    rho.equivariant = true;
    rho.word = std::vector<bool>{true};
    rho.label = "V*";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix m(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t k = 0; k < n; ++k) m(a, k) = -r.entry(a, i, k, j);
            rho.images.push_back(std::move(m));
        }
    attach_chi(rho, skew);
    return rho;
}

CheckEntry check_representation(const GeneratorRep& rho, const Braiding& r, const Scalar& hbar) {
    std::string name = "relations in rho_" + rho.label;
    std::size_t d = rho.carrier_dim, n = r.dim(), n2 = n * n;
    if (rho.images.size() != n2) throw DimensionError("representation has the wrong number of generators");
    if (d == 0) return check_true(name, anchor::mrea, true);
    // L_1 on V (x) V (x) U with blocks delta_{i2 j2} rho(l_i1^j1)
    Matrix L(n2 * d, n2 * d);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2)
            for (std::size_t j1 = 0; j1 < n; ++j1) {
                const Matrix& img = rho.images[i1 * n + j1];
                for (std::size_t u = 0; u < d; ++u)
                    for (std::size_t v = 0; v < d; ++v)
                        if (!img.raw(u, v).is_zero()) L.raw((i1 * n + i2) * d + u, (j1 * n + i2) * d + v) = img.raw(u, v);
            }
    Matrix Rb = kronecker(r.matrix(), Matrix::identity(d));
    Matrix RL = Rb * L, LR = L * Rb;
    Matrix e = RL * RL - LR * LR - (RL - LR) * hbar;
    for (std::size_t row = 0; row < e.rows(); ++row)
        for (std::size_t col = 0; col < e.cols(); ++col)
            if (!e.raw(row, col).is_zero()) {
                std::size_t a = row / d, b = col / d;
                std::ostringstream os;
                os << "relation " << a * n2 + b << " ((" << a / n << ' ' << a % n << "), (" << b / n << ' ' << b % n
                   << ")): block entry (" << row % d << ", " << col % d << ") = " << e.raw(row, col).str();
                return check_true(name, anchor::mrea, false, os.str());
            }
    return check_true(name, anchor::mrea, true);
}

CheckEntry check_representation(const GeneratorRep& rho, const RelationSet& rels) {
    std::string name = "relations in rho_" + rho.label;
    std::size_t g = rels.generators(), d = rho.carrier_dim;
    if (rho.images.size() != g) throw DimensionError("representation has the wrong number of generators");
    if (d == 0) return check_true(name, anchor::mrea, true);
    std::vector<Matrix> prod(g * g);
    for (std::size_t r = 0; r < rels.size(); ++r) {
        Matrix v(d, d);
        for (std::size_t c = 0; c < g * g; ++c) {
            const Scalar& k = rels.quadratic.raw(r, c);
            if (k.is_zero()) continue;
            if (prod[c].rows() == 0) prod[c] = rho.images[c / g] * rho.images[c % g];
            v += prod[c] * k;
        }
        for (std::size_t t = 0; t < g; ++t)
            if (!rels.linear.raw(r, t).is_zero()) v += rho.images[t] * rels.linear.raw(r, t);
        if (!v.is_zero()) return check_true(name, anchor::mrea, false, "relation " + std::to_string(r) + ": " + v.first_nonzero());
    }
    return check_true(name, anchor::mrea, true);
}

// ---- bialgebra structure on generators

BialgebraMaps bialgebra_maps(const Braiding& r) {
    std::size_t n = r.dim();
    BialgebraMaps out;
    out.n = n;
    Scalar omega = r.omega();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<DeltaTerm> d;
            int g = static_cast<int>(i * n + j);
            d.push_back({g, -1, Scalar(1)});
            d.push_back({-1, g, Scalar(1)});
            if (!omega.is_zero())
                for (std::size_t k = 0; k < n; ++k)
                    d.push_back({static_cast<int>(i * n + k), static_cast<int>(k * n + j), -omega});
            out.delta.push_back(std::move(d));
            out.epsilon.push_back(Scalar());
        }
    // (id (x) eps) Delta = id = (eps (x) id) Delta
    auto eps = [&](int g) { return g < 0 ? Scalar(1) : out.epsilon[static_cast<std::size_t>(g)]; };
    bool left = true, right = true;
    std::string witness;
    for (std::size_t g = 0; g < out.delta.size(); ++g) {
        std::vector<Scalar> lhs(n * n + 1), rhs(n * n + 1);  // slot 0 is the unit
        for (const auto& t : out.delta[g]) {
            lhs[static_cast<std::size_t>(t.left + 1)] += t.coeff * eps(t.right);
            rhs[static_cast<std::size_t>(t.right + 1)] += t.coeff * eps(t.left);
        }
        for (std::size_t s = 0; s <= n * n; ++s) {
            Scalar want = s == g + 1 ? Scalar(1) : Scalar();
            if (lhs[s] != want) left = false;
            if (rhs[s] != want) right = false;
        }
        if ((!left || !right) && witness.empty()) witness = "generator " + std::to_string(g);
    }
    out.checks.push_back(check_true("(id x eps) Delta = id", anchor::counit, left, left ? "" : witness));
    out.checks.push_back(check_true("(eps x id) Delta = id", anchor::counit, right, right ? "" : witness));
    return out;
}

GeneratorRep tensor_rep(const GeneratorRep& u, const GeneratorRep& w, const Matrix& braid_u, const Scalar& omega) {
    if (!u.equivariant || !w.equivariant) throw Error("tensor_rep needs equivariant factors");
    std::size_t du = u.carrier_dim, dw = w.carrier_dim, g = u.images.size();
    if (w.images.size() != g) throw DimensionError("factors act through different generator sets");
    if (braid_u.rows() != du * g || braid_u.cols() != du * g) throw DimensionError("braiding past U has the wrong size");
    std::size_t n = 0;
    while (n * n < g) ++n;
    std::size_t d = du * dw;
    Matrix idw = Matrix::identity(dw);

    std::vector<Matrix> T(g, Matrix(d, d));
    for (std::size_t beta = 0; beta < g; ++beta)
        for (std::size_t a = 0; a < du; ++a)
            for (std::size_t a2 = 0; a2 < du; ++a2)
                for (std::size_t b2 = 0; b2 < g; ++b2) {
                    const Scalar& z = braid_u.raw(a2 * g + b2, beta * du + a);
                    if (z.is_zero()) continue;
                    const Matrix& img = w.images[b2];
                    for (std::size_t x = 0; x < dw; ++x)
                        for (std::size_t y = 0; y < dw; ++y)
                            if (!img.raw(x, y).is_zero()) T[beta].raw(a2 * dw + x, a * dw + y) += z * img.raw(x, y);
                }

    GeneratorRep out;
    out.carrier_dim = d;
    out.equivariant = true;
    out.label = u.label + "(x)" + w.label;
    if (u.word && w.word) {
        std::vector<bool> word = *u.word;
        word.insert(word.end(), w.word->begin(), w.word->end());
        out.word = word;
    }
    std::vector<Matrix> lifted;
    for (const auto& m : u.images) lifted.push_back(kronecker(m, idw));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix m = lifted[i * n + j] + T[i * n + j];
            if (!omega.is_zero())
                for (std::size_t k = 0; k < n; ++k) m -= lifted[i * n + k] * T[k * n + j] * omega;
            out.images.push_back(std::move(m));
        }
    return out;
}

GeneratorRep tensor_rep(const GeneratorRep& u, const GeneratorRep& w, const ExtendedBraiding& ext) {
    if (!u.word) throw Error("no braiding of End(V) past rho_" + u.label);
    GeneratorRep out = tensor_rep(u, w, end_braiding_with(ext, *u.word), ext.base.omega());
    attach_chi(out, ext.skew);
    return out;
}

GeneratorRep tensor_power_rep(const ExtendedBraiding& ext, int k) {
    if (k < 1) throw Error("tensor power needs k >= 1");
    GeneratorRep v = vector_rep(ext.base, ext.skew);
    GeneratorRep acc = v;
    for (int i = 2; i <= k; ++i) acc = tensor_rep(acc, v, ext);
    if (k > 1) acc.label = "V^" + std::to_string(k);
    return acc;
}

GeneratorRep restrict_rep(const GeneratorRep& rho, const ProjectorBank& bank, const Partition& shape, int a) {
    const ProjectorEntry& e = bank.find(shape, a);
    const Matrix& E = e.projector;
    if (E.rows() != rho.carrier_dim) throw DimensionError("projector and representation live on different spaces");
    for (std::size_t g = 0; g < rho.images.size(); ++g) {
        std::string d = difference(E * rho.images[g], rho.images[g] * E);
        if (!d.empty()) throw Error("E" + shape.str() + "," + std::to_string(a) + " does not commute with generator " + std::to_string(g) + ": " + d);
    }
    GeneratorRep out;
    out.carrier_dim = e.rank;
    out.equivariant = rho.equivariant;
    out.chi = rho.chi;
    out.label = rho.label + "|" + shape.str() + "," + std::to_string(a);
    if (e.rank == 0) {
        out.images.assign(rho.images.size(), Matrix());
        return out;
    }
    std::vector<std::size_t> cols = pivot_columns(E);
    Matrix basis(E.rows(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < E.rows(); ++r) basis.raw(r, c) = E.raw(r, cols[c]);
    for (const auto& img : rho.images) {
        SolveResult s = solve_linear(basis, img * basis);
        if (!s.ok()) throw Error("image of E is not invariant");
        out.images.push_back(std::move(s.solution));
    }
    return out;
}

// ---- filtered dimensions

namespace {

struct WordIndex {
    std::size_t gens;
    std::vector<std::size_t> offset;  // first index of words of each length

    WordIndex(std::size_t g, int max_len) : gens(g) {
        std::size_t total = 0, count = 1;
        for (int l = 0; l <= max_len + 1; ++l) {
            offset.push_back(total);
            total += count;
            count *= g;
        }
    }
    std::size_t count_upto(int m) const { return offset[static_cast<std::size_t>(m) + 1]; }
    std::size_t index(const Word& w) const {
        std::size_t x = 0;
        for (int c : w) x = x * gens + static_cast<std::size_t>(c);
        return offset[w.size()] + x;
    }
    Word word(std::size_t len, std::size_t x) const {
        Word w(len);
        for (std::size_t i = len; i-- > 0;) {
            w[i] = static_cast<int>(x % gens);
            x /= gens;
        }
        return w;
    }
};

SparseVector to_sparse(const NcPolynomial& p, const WordIndex& idx) {
    SparseVector v;
    for (const auto& [w, c] : p.terms()) v.emplace_back(idx.index(w), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

// all u r v with |u| + |v| + deg r <= m
std::vector<SparseVector> ideal_rows(const std::vector<NcPolynomial>& rels, const WordIndex& idx, int m) {
    std::vector<SparseVector> rows;
    for (const auto& r : rels) {
        int deg = r.degree();
        if (deg < 0) continue;
        for (int extra = 0; extra + deg <= m; ++extra)
            for (int lu = 0; lu <= extra; ++lu) {
                int lv = extra - lu;
                std::size_t nu = 1, nv = 1;
                for (int i = 0; i < lu; ++i) nu *= idx.gens;
                for (int i = 0; i < lv; ++i) nv *= idx.gens;
                for (std::size_t xu = 0; xu < nu; ++xu) {
                    NcPolynomial left = NcPolynomial::unit();
                    for (int c : idx.word(static_cast<std::size_t>(lu), xu)) left = left * NcPolynomial::generator(c);
                    NcPolynomial lr = left * r;
                    for (std::size_t xv = 0; xv < nv; ++xv) {
                        NcPolynomial right = NcPolynomial::unit();
                        for (int c : idx.word(static_cast<std::size_t>(lv), xv)) right = right * NcPolynomial::generator(c);
                        rows.push_back(to_sparse(lr * right, idx));
                    }
                }
            }
    }
    return rows;
}

}  // namespace

FilteredDims filtered_dimension(const RelationSet& rels, int d, int cap) {
    if (d < 0) throw Error("negative degree");
    if (d > cap) throw Error("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(cap));
    WordIndex idx(rels.generators(), d);
    auto polys = rels.polynomials();
    FilteredDims out;
    out.max_degree = d;
    for (int m = 0; m <= d; ++m) {
        std::size_t rk = m < 2 ? 0 : sparse_rank(ideal_rows(polys, idx, m));
        out.dims.push_back(idx.count_upto(m) - rk);
    }
    return out;
}

std::size_t truncated_ideal_rank(const std::vector<NcPolynomial>& rels, std::size_t generators, int degree) {
    return sparse_rank(ideal_rows(rels, WordIndex(generators, degree), degree));
}

bool in_truncated_ideal(const std::vector<NcPolynomial>& rels, std::size_t generators, const NcPolynomial& p, int degree) {
    if (p.degree() > degree) return false;
    WordIndex idx(generators, degree);
    auto rows = ideal_rows(rels, idx, degree);
    std::size_t base = sparse_rank(rows);
    rows.push_back(to_sparse(p, idx));
    return sparse_rank(std::move(rows)) == base;
}

bool in_truncated_ideal(const RelationSet& rels, const NcPolynomial& p, int degree) {
    return in_truncated_ideal(rels.polynomials(), rels.generators(), p, degree);
}

}  // namespace qlab
