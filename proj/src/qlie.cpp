#include "qlab/qlie.hpp"

#include "qlab/anchors.hpp"
#include "qlab/errors.hpp"
#include "qlab/linear_solve.hpp"

namespace qlab {

Matrix bracket_targets(const Braiding& r) {
    std::size_t n = r.dim(), n2 = n * n;
    Matrix g(n2 * n2, n2);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2)
            for (std::size_t j1 = 0; j1 < n; ++j1)
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    std::size_t e = (i1 * n + i2) * n2 + j1 * n + j2;
                    for (std::size_t a = 0; a < n; ++a) {
                        // (L_1 R)_e = sum_a l_i1^a R_(a i2),(j1 j2);  (R L_1)_e = sum_a R_(i1 i2),(a j2) l_a^j1
                        const Scalar& x = r.entry(a, i2, j1, j2);
                        if (!x.is_zero()) g.raw(e, i1 * n + a) += x;
                        const Scalar& y = r.entry(i1, i2, a, j2);
                        if (!y.is_zero()) g.raw(e, a * n + j1) -= y;
                    }
                }
    return g;
}

BracketData bracket_tensor(const Braiding& r, const QProjectors& qp) {
    BracketData bd;
    bd.n = r.dim();
    bd.K = two_copy_matrix(r);
    SolveResult s = solve_linear(bd.K, bracket_targets(r));
    if (!s.ok()) throw Error("L_1bar L_2bar entries are not independent over l (x) l");
    bd.bracket = s.solution.transpose();
    bd.Q = qp.Q;
    bd.S = qp.S;
    bd.A = qp.A;
    return bd;
}

namespace {

Matrix adjoint_images_block(const BracketData& bd, std::size_t g) {
    std::size_t n2 = bd.n * bd.n;
    Matrix m(n2, n2);
    for (std::size_t t = 0; t < n2; ++t)
        for (std::size_t y = 0; y < n2; ++y) m.raw(t, y) = bd.bracket.raw(t, g * n2 + y);
    return m;
}

}  // namespace

GeneratorRep adjoint_rep(const BracketData& bd, const ExtendedBraiding& ext) {
    std::size_t n2 = bd.n * bd.n;
    GeneratorRep ad;
    ad.carrier_dim = n2;
    ad.equivariant = true;
    ad.word = std::vector<bool>{false, true};
    ad.label = "ad";
    for (std::size_t g = 0; g < n2; ++g) ad.images.push_back(adjoint_images_block(bd, g));
    attach_chi(ad, ext.skew);

    GeneratorRep tv = tensor_rep(vector_rep(ext.base, ext.skew), covector_rep(ext.base, ext.skew), ext);
    for (std::size_t g = 0; g < n2; ++g) {
        std::string d = difference(ad.images[g], tv.images[g]);
        if (!d.empty()) throw Error("adjoint action differs from rho_V(x)V* at generator " + std::to_string(g) + ": " + d);
    }
    return ad;
}

CheckEntry check_bracket_in_rep(const BracketData& bd, const GeneratorRep& rho) {
    std::string name = "bracket agrees with the rearranged relations in rho_" + rho.label;
    std::size_t n2 = bd.n * bd.n, n4 = n2 * n2, d = rho.carrier_dim;
    if (d == 0) return check_true(name, anchor::q_bracket, true);
    std::vector<Matrix> pairs;
    for (std::size_t b = 0; b < n4; ++b) pairs.push_back(rho.images[b / n2] * rho.images[b % n2]);
    Matrix lhs_coeff = bd.K - bd.K * bd.Q.transpose();  // e x beta over l (x) l
    Matrix rhs_coeff = bd.K * bd.bracket.transpose();   // e x t over l
    for (std::size_t e = 0; e < n4; ++e) {
        Matrix lhs(d, d), rhs(d, d);
        for (std::size_t b = 0; b < n4; ++b)
            if (!lhs_coeff.raw(e, b).is_zero()) lhs += pairs[b] * lhs_coeff.raw(e, b);
        for (std::size_t t = 0; t < n2; ++t)
            if (!rhs_coeff.raw(e, t).is_zero()) rhs += rho.images[t] * rhs_coeff.raw(e, t);
        std::string diff = difference(lhs, rhs);
        if (!diff.empty()) return check_true(name, anchor::q_bracket, false, "entry " + std::to_string(e) + ": " + diff);
    }
    return check_true(name, anchor::q_bracket, true);
}

std::vector<CheckEntry> verify_bracket_axioms(const BracketData& bd, const EndBraiding& end) {
    std::size_t n2 = bd.n * bd.n;
    Matrix id = Matrix::identity(n2);
    const Matrix& br = bd.bracket;
    std::vector<CheckEntry> out;
    out.push_back(check_zero("[,] S_q = 0", anchor::q_skew, br * bd.S));
    out.push_back(check_equal("[,] A_q = [,]", anchor::q_skew, br * bd.A, br));
    Matrix br12 = kronecker(br, id), br23 = kronecker(id, br);
    Matrix q12 = kronecker(bd.Q, id);
    out.push_back(check_equal("[,][,]_12 = [,][,]_23 (I - Q_12)", anchor::q_jacobi, br * br12,
                              br * br23 * (Matrix::identity(q12.rows()) - q12)));
    TensorLayout l3 = TensorLayout::uniform(n2, 3);
    Matrix r12 = place_operator(end.matrix, 1, l3), r23 = place_operator(end.matrix, 2, l3);
    out.push_back(check_equal("R_End [,]_23 = [,]_12 R_23 R_12", anchor::bracket_invariance, end.matrix * br23,
                              br12 * r23 * r12));
    out.push_back(check_equal("R_End [,]_12 = [,]_23 R_12 R_23", anchor::bracket_invariance, end.matrix * br12,
                              br23 * r12 * r23));
    return out;
}

Matrix classical_structure_constants(std::size_t n) {
    std::size_t n2 = n * n;
    Matrix m(n2, n2 * n2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    std::size_t col = (i * n + j) * n2 + k * n + l;
                    if (j == k) m(i * n + l, col) += Scalar(1);
                    if (i == l) m(k * n + j, col) -= Scalar(1);
                }
    return m;
}

RTrace r_trace_data(const SkewInverseData& skew) {
    RTrace rt;
    rt.n = skew.C.rows();
    std::size_t n = rt.n, n2 = n * n;
    rt.C = skew.C;
    rt.B = skew.B;
    rt.weights_l = Matrix(1, n2);
    rt.weights_h = Matrix(1, n2);
    rt.h_basis = Matrix(n2, n2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rt.weights_l(0, i * n + j) = skew.C(j, i);
            rt.weights_h(0, i * n + j) = skew.B(j, i);
            for (std::size_t k = 0; k < n; ++k) rt.h_basis(i * n + k, i * n + j) = skew.C(k, j);
        }
    // f_l = f_h P^-1
    auto pinv = inverse(rt.h_basis);
    if (!pinv) throw Error("C is singular; no h-basis");
    rt.weights_h_on_l = rt.weights_h * *pinv;
    return rt;
}

Scalar r_trace(const RTrace& rt, const Matrix& x) { return (rt.weights_l * x)(0, 0); }

Scalar r_trace_h(const RTrace& rt, const Matrix& x) { return (rt.weights_h * x)(0, 0); }

Matrix super_commutator_table(std::size_t m, std::size_t n) {
    std::size_t d = m + n, d2 = d * d;
    auto par = [m](std::size_t i) { return i < m ? 0 : 1; };
    Matrix t(d2, d2 * d2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    std::size_t col = (i * d + j) * d2 + k * d + l;
                    int sign = ((par(i) + par(j)) * (par(k) + par(l))) % 2 ? -1 : 1;
                    if (j == k) t(i * d + l, col) += Scalar(1);
                    if (i == l) t(k * d + j, col) -= Scalar(sign);
                }
    return t;
}

InvolutiveReport involutive_axioms_check(const ExtendedBraiding& ext, const EndBraiding& end, int pbw_degree) {
    const Braiding& r = ext.base;
    if (r.is_hecke()) throw Error("involutive_axioms_check needs an involutive symmetry");
    std::size_t n = r.dim(), n2 = n * n;
    Matrix id = Matrix::identity(n2), id2 = Matrix::identity(n2 * n2);
    const Matrix& R = end.matrix;
    Matrix mult = end_multiplication(ext.skew, n);

    InvolutiveReport rep;
    rep.bracket = mult - mult * R;
    const Matrix& br = rep.bracket;
    auto& c = rep.checks;
    TensorLayout l3 = TensorLayout::uniform(n2, 3);
    Matrix r12 = place_operator(R, 1, l3), r23 = place_operator(R, 2, l3);
    Matrix id3 = Matrix::identity(r12.rows());
    Matrix br12 = kronecker(br, id), br23 = kronecker(id, br);
    Matrix cyc = id3 + r12 * r23 + r23 * r12;

    c.push_back(check_equal("axiom 1: [,] R = -[,]", anchor::lie_axioms, br * R, -br));
    c.push_back(check_zero("axiom 2: [,][,]_12 (I + R_12 R_23 + R_23 R_12) = 0", anchor::lie_axioms, br * br12 * cyc));
    c.push_back(check_equal("axiom 3: R [,]_23 = [,]_12 R_23 R_12", anchor::lie_axioms, R * br23, br12 * r23 * r12));
    c.push_back(check_equal("axiom 3: R [,]_12 = [,]_23 R_12 R_23", anchor::lie_axioms, R * br12, br23 * r12 * r23));
    c.push_back(check_zero("Jacobi: [,][,]_23 (I + R_12 R_23 + R_23 R_12) = 0", anchor::lie_axioms, br * br23 * cyc));
    c.push_back(check_equal("Jacobi: [,][,]_12 (I - R_23) = [,][,]_23", anchor::lie_axioms, br * br12 * (id3 - r23),
                            br * br23));
    c.push_back(check_equal("Jacobi: [,][,]_23 (I - R_12) = [,][,]_12", anchor::lie_axioms, br * br23 * (id3 - r12),
                            br * br12));

    RTrace rt = r_trace_data(ext.skew);
    const Matrix& tr = rt.weights_h_on_l;
    c.push_back(check_zero("Tr_R [,] = 0", anchor::r_trace, tr * br));
    c.push_back(check_equal("R_End (Tr_R (x) I) = (I (x) Tr_R) R_End", anchor::r_trace, kronecker(tr, id),
                            kronecker(id, tr) * R));
    c.push_back(check_equal("R_End (I (x) Tr_R) = (Tr_R (x) I) R_End", anchor::r_trace, kronecker(id, tr),
                            kronecker(tr, id) * R));
    Matrix gram(n2, n2);
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = 0; b < n2; ++b) {
            Scalar s;
            for (std::size_t t = 0; t < n2; ++t) s += tr(0, t) * mult(t, a * n2 + b);
            gram(a, b) = s;
        }
    c.push_back(check_true("Tr_R (X o Y) is non-degenerate", anchor::r_trace, !bareiss_determinant(gram).is_zero(),
                           "Gram determinant vanishes"));

    // sl(V_R): closure and R_End-invariance of ker Tr_R (x) ker Tr_R
    std::vector<Matrix> kernel = nullspace(tr);
    bool closed = true, invariant = true;
    std::string wc, wi;
    for (const auto& x : kernel)
        for (const auto& y : kernel) {
            Matrix xy = kronecker(x, y);
            if (!(tr * br * xy).is_zero() && closed) {
                closed = false;
                wc = "bracket of kernel vectors leaves the kernel";
            }
            Matrix img = R * xy;
            if ((!(kronecker(tr, id) * img).is_zero() || !(kronecker(id, tr) * img).is_zero()) && invariant) {
                invariant = false;
                wi = "R_End moves ker Tr_R (x) ker Tr_R";
            }
        }
    c.push_back(check_true("sl(V_R) closed under [,]", anchor::r_trace, closed, wc));
    c.push_back(check_true("sl(V_R)^(x)2 is R_End-invariant", anchor::r_trace, invariant, wi));

    // U(g) = T / <X (x) Y - R(X (x) Y) - [X,Y]> against Sym(g)
    Matrix quad = (id2 - R).transpose();
    Matrix lin = (-br).transpose();
    RelationSet u, s;
    u.n = s.n = n;
    u.quadratic = s.quadratic = quad;
    u.linear = lin;
    s.linear = Matrix(quad.rows(), n2);
    s.hbar = Scalar(0);
    rep.enveloping = filtered_dimension(u, pbw_degree, std::max(pbw_degree, default_degree_cap));
    rep.symmetric = filtered_dimension(s, pbw_degree, std::max(pbw_degree, default_degree_cap));
    std::string dims;
    for (auto d : rep.enveloping.dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    std::string sdims;
    for (auto d : rep.symmetric.dims) sdims += (sdims.empty() ? "" : ",") + std::to_string(d);
    c.push_back(check_true("U(g) and Sym(g) filtered dimensions agree", anchor::enveloping,
                           rep.enveloping.dims == rep.symmetric.dims, "[" + dims + "] vs [" + sdims + "]"));
    c.back().value = "[" + dims + "]";
    return rep;
}

}  // namespace qlab
