#include "qlab/sl_reduction.hpp"

#include "qlab/anchors.hpp"
#include "qlab/errors.hpp"

namespace qlab {

namespace {

// sum C_j^i l_i^j over generator offset 0
NcPolynomial trace_poly(const SkewInverseData& skew, std::size_t n) {
    NcPolynomial p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.add_term({static_cast<int>(i * n + j)}, skew.C(j, i));
    return p;
}

Matrix ell_vector(const SkewInverseData& skew, std::size_t n) {
    Matrix v(1, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v(0, i * n + j) = skew.C(j, i);
    return v;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix combine(const std::vector<Matrix>& mats, const Matrix& weights, std::size_t col) {
    Matrix out(mats.front().rows(), mats.front().cols());
    for (std::size_t r = 0; r < mats.size(); ++r)
        if (!weights.raw(r, col).is_zero()) out += mats[r] * weights.raw(r, col);
    return out;
}

}  // namespace

std::vector<CheckEntry> ell_center_check(const RelationSet& rels, const SkewInverseData& skew,
                                         const std::vector<GeneratorRep>& reps) {
    std::size_t n = rels.n, n2 = n * n;
    std::vector<CheckEntry> out;
    NcPolynomial ell = trace_poly(skew, n);
    auto polys = rels.polynomials();
    std::string miss;
    for (std::size_t t = 0; t < n2 && miss.empty(); ++t) {
        NcPolynomial g = NcPolynomial::generator(static_cast<int>(t));
        if (!in_truncated_ideal(polys, n2, ell * g - g * ell, 2))
            miss = "l l_" + std::to_string(t) + " - l_" + std::to_string(t) + " l is not a consequence in degree 2";
    }
    out.push_back(check_true("l central in the relations", anchor::central_element, miss.empty(), miss));
    for (const auto& rho : reps) {
        if (rho.carrier_dim == 0) continue;
        Matrix l = ell_image(rho, skew);
        std::string w;
        for (std::size_t t = 0; t < n2 && w.empty(); ++t) {
            Matrix c = commutator(l, rho.images[t]);
            if (!c.is_zero()) w = "generator " + std::to_string(t) + ": " + c.first_nonzero();
        }
        out.push_back(check_true("rho_" + rho.label + "(l) central", anchor::central_element, w.empty(), w));
    }
    return out;
}

SlPresentation sl_present(const Braiding& r, const SkewInverseData& skew) {
    if (!skew.sl_available()) throw Error("sl-reduction unavailable: Tr C = 0");
    std::size_t n = r.dim(), n2 = n * n;
    SlPresentation s;
    s.n = n;
    s.trC = skew.trC;
    Scalar c = Scalar(1) / skew.trC, omega = r.omega();
    s.ell = ell_vector(skew, n);
    s.pi = Matrix::identity(n2);
    for (std::size_t d = 0; d < n; ++d)
        for (std::size_t row = 0; row < n2; ++row) s.pi(row, d * n + d) -= c * s.ell(0, row);

    int li = s.ell_index();
    NcPolynomial ell = NcPolynomial::generator(li);
    NcMatrix R(r.matrix()), F = first_copy(n);
    NcMatrix RF = R * F, FR = F * R;
    NcMatrix quad = RF * RF - FR * FR, lin = RF - FR;
    NcPolynomial factor = NcPolynomial::unit() - (omega * c) * ell;
    std::vector<NcPolynomial> quotient_polys;
    for (std::size_t e = 0; e < quad.rows() * quad.cols(); ++e) {
        const NcPolynomial& a = quad.at(e / quad.cols(), e % quad.cols());
        const NcPolynomial& b = lin.at(e / lin.cols(), e % lin.cols());
        s.mixed.push_back(a - factor * b);
        quotient_polys.push_back(a - b);
    }
    for (std::size_t t = 0; t < n2; ++t) {
        NcPolynomial f = NcPolynomial::generator(static_cast<int>(t));
        s.mixed.push_back(ell * f - f * ell);
    }
    s.trace_constraint = trace_poly(skew, n);
    s.quotient = RelationSet::from_polynomials(n, Scalar(1), quotient_polys);

    // l_i^j -> f_i^j + c delta_i^j l
    RelationSet rels = relation_set(r);
    std::vector<NcPolynomial> shift(n2);
    for (std::size_t t = 0; t < n2; ++t) {
        shift[t] = NcPolynomial::generator(static_cast<int>(t));
        if (t / n == t % n) shift[t] += c * ell;
    }
    for (const auto& p : rels.polynomials()) s.shifted.push_back(p.substitute(shift));

    auto with_trace = [&](std::vector<NcPolynomial> v) {
        v.push_back(s.trace_constraint);
        return v;
    };
    auto contained = [&](const std::vector<NcPolynomial>& ps, const std::vector<NcPolynomial>& ideal) {
        for (std::size_t k = 0; k < ps.size(); ++k)
            if (!in_truncated_ideal(ideal, s.generators(), ps[k], 2)) return "relation " + std::to_string(k);
        return std::string();
    };
    std::string fw = contained(s.shifted, with_trace(s.mixed));
    s.checks.push_back(check_true("shifted relations follow from the mixed system", anchor::shift, fw.empty(), fw));
    std::string bw = contained(s.mixed, with_trace(s.shifted));
    s.checks.push_back(check_true("mixed system follows from the shifted relations", anchor::shift, bw.empty(), bw));

    // f_s -> sum_r pi(r, s) l_r, l -> sum ell_t l_t
    std::vector<NcPolynomial> back(n2 + 1);
    for (std::size_t sidx = 0; sidx < n2; ++sidx)
        for (std::size_t row = 0; row < n2; ++row)
            back[sidx] += NcPolynomial::generator(static_cast<int>(row), s.pi(row, sidx));
    back[n2] = trace_poly(skew, n);
    std::vector<NcPolynomial> pulled;
    for (const auto& p : s.mixed) pulled.push_back(p.substitute(back));
    bool same = same_span(RelationSet::from_polynomials(n, Scalar(1), pulled), rels);
    s.checks.push_back(check_true("back-substitution reproduces the mREA relations", anchor::shift, same,
                                  "relation spans differ"));
    NcPolynomial tr = s.trace_constraint.substitute(back);
    s.checks.push_back(check_true("Tr_R F = 0 after back-substitution", anchor::shift, tr.is_zero(),
                                  tr.is_zero() ? "" : "residual has " + std::to_string(tr.terms().size()) + " terms"));

    bool q_eq = s.quotient.quadratic == rels.quadratic && s.quotient.linear == rels.linear;
    s.checks.push_back(check_true("quotient relations have the mREA form in f", anchor::sl_relations, q_eq,
                                  "coefficients differ"));
    std::vector<NcPolynomial> at_zero(n2 + 1);
    for (std::size_t t = 0; t < n2; ++t) at_zero[t] = NcPolynomial::generator(static_cast<int>(t));
    std::string qz;
    for (std::size_t e = 0; e < quotient_polys.size() && qz.empty(); ++e)
        if (!(s.mixed[e].substitute(at_zero) == quotient_polys[e])) qz = "relation " + std::to_string(e);
    s.checks.push_back(check_true("quotient = mixed system at l = 0", anchor::sl_relations, qz.empty(), qz));
    return s;
}

SlAdjoint sl_adjoint_rep(const Braiding& r, const BracketData& bd, const SlPresentation& slp) {
    std::size_t n = bd.n, n2 = n * n;
    Scalar omega = r.omega();
    const Matrix& pi = slp.pi;
    Matrix ellv = slp.ell.transpose();

    std::vector<Matrix> ad_l;
    for (std::size_t g = 0; g < n2; ++g) {
        Matrix m(n2, n2);
        for (std::size_t t = 0; t < n2; ++t)
            for (std::size_t y = 0; y < n2; ++y) m.raw(t, y) = bd.bracket.raw(t, g * n2 + y);
        ad_l.push_back(std::move(m));
    }
    SlAdjoint out;
    out.rep.carrier_dim = n2;
    out.rep.equivariant = true;
    out.rep.word = std::vector<bool>{false, true};
    out.rep.label = "ad_sl";
    for (std::size_t sidx = 0; sidx < n2; ++sidx) out.rep.images.push_back(combine(ad_l, pi, sidx));
    Matrix ad_ell = combine(ad_l, slp.ell.transpose(), 0);

    out.checks.push_back(check_zero("ad(l) l = 0", anchor::sl_adjoint, ad_ell * ellv));
    std::string w;
    for (std::size_t sidx = 0; sidx < n2 && w.empty(); ++sidx) {
        Matrix v = out.rep.images[sidx] * ellv;
        if (!v.is_zero()) w = "f_" + std::to_string(sidx) + ": " + v.first_nonzero();
    }
    out.checks.push_back(check_true("ad(F) l = 0", anchor::sl_adjoint, w.empty(), w));
    out.checks.push_back(check_equal("ad(l) F = -omega Tr C F", anchor::sl_adjoint, ad_ell * pi,
                                     pi * (-omega * slp.trC)));

    // H(e, a*N + c): coefficient of l_a^c in (R L_1 R^-1)_e
    Matrix h(n2 * n2, n2);
    const Matrix& rinv = r.inverse_matrix();
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const Scalar& x = r.matrix().raw(i, a * n + b);
                    if (x.is_zero()) continue;
                    for (std::size_t cc = 0; cc < n; ++cc) {
                        const Scalar& y = rinv.raw(cc * n + b, j);
                        if (!y.is_zero()) h.raw(i * n2 + j, a * n + cc) += x * y;
                    }
                }
    Matrix pp = kronecker(pi, pi);
    Matrix restricted = bd.bracket * pp;  // ad(f_a) f_b in l-coordinates
    out.checks.push_back(check_equal("ad(F_1bar) F_2bar = F_1 R - R F_1 + omega R F_1 R^-1", anchor::sl_adjoint,
                                     bd.K * restricted.transpose(),
                                     (bracket_targets(r) + h * omega) * pi.transpose()));
    if (!all_pass(out.checks)) throw CertificationError("sl-adjoint identity failed", first_failure(out.checks));

    out.coincides_with_restricted_bracket = pi * bd.bracket == restricted;
    Matrix id = Matrix::identity(n2);
    Matrix q12 = kronecker(bd.Q, id);
    out.restricted_jacobi = check_equal("q-Jacobi for the sl-adjoint bracket", anchor::q_jacobi,
                                        restricted * kronecker(restricted, id),
                                        restricted * kronecker(id, restricted) * (Matrix::identity(q12.rows()) - q12));
    return out;
}

TwistedRep z_twist(const GeneratorRep& rho, const Scalar& z, const Braiding& r, const SkewInverseData& skew) {
    Scalar omega = r.omega();
    if (omega.is_zero()) throw Error("z-twist needs q - q^-1 != 0");
    std::size_t n = r.dim(), d = rho.carrier_dim;
    TwistedRep t;
    t.z = z;
    t.rep = rho;
    t.rep.label = rho.label + "^z";
    Scalar shift = (Scalar(1) - z) / omega;
    for (std::size_t k = 0; k < t.rep.images.size(); ++k) {
        t.rep.images[k] = rho.images[k] * z;
        if (k / n == k % n && d > 0) t.rep.images[k] += Matrix::scalar(d, shift);
    }
    attach_chi(t.rep, skew);
    if (rho.chi && skew.sl_available()) t.xi = Scalar(1) - omega * *rho.chi / skew.trC;
    CheckEntry ce = check_representation(t.rep, r);
    if (!ce.pass) throw CertificationError("twisted images are not a representation", ce.witness);
    return t;
}

ReducedRep sl_reduce_rep(const GeneratorRep& rho, const Braiding& r, const SkewInverseData& skew) {
    if (!skew.sl_available()) throw Error("sl-reduction unavailable: Tr C = 0");
    if (!rho.chi) throw Error("rho(l) is not scalar");
    if (rho.carrier_dim > 0) {
        Matrix l = ell_image(rho, skew);
        if (l != Matrix::scalar(rho.carrier_dim, *rho.chi)) throw Error("stored chi does not match rho(l)");
    }
    std::size_t n = r.dim(), n2 = n * n, d = rho.carrier_dim;
    ReducedRep out;
    Scalar c = Scalar(1) / skew.trC;
    out.xi = Scalar(1) - r.omega() * c * *rho.chi;
    if (out.xi.is_zero()) throw Error("reduction singular: xi = 0");
    Scalar inv = Scalar(1) / out.xi;
    out.rep = rho;
    out.rep.label = rho.label + "~";
    for (std::size_t k = 0; k < n2; ++k) {
        Matrix m = rho.images[k];
        if (k / n == k % n && d > 0) m -= Matrix::scalar(d, c * *rho.chi);
        out.rep.images[k] = m * inv;
    }
    attach_chi(out.rep, skew);
    CheckEntry ce = check_representation(out.rep, r);
    ce.name = "reduced images satisfy the sl relations in rho_" + rho.label;
    ce.anchor = anchor::sl_reduction;
    out.checks.push_back(ce);
    Matrix tr = d > 0 ? ell_image(out.rep, skew) : Matrix();
    out.checks.push_back(check_true("sum C_j^i rho~(f_i^j) = 0 in rho_" + rho.label, anchor::sl_reduction, d == 0 || tr.is_zero(),
                                    d == 0 || tr.is_zero() ? "" : tr.first_nonzero()));
    return out;
}

}  // namespace qlab
