#include "qlab/braidings.hpp"

#include "qlab/anchors.hpp"
#include "qlab/errors.hpp"
#include "qlab/linear_solve.hpp"

#include <sstream>

namespace qlab {

const char* to_string(SymmetryClass c) {
    return c == SymmetryClass::hecke ? "hecke" : "involutive";
}

SymmetrySpec SymmetrySpec::explicit_matrix(Matrix r) {
    std::size_t n = 1;
    while (n * n < r.rows()) ++n;
    if (n * n != r.rows() || !r.is_square()) throw DimensionError("explicit braiding must be N^2 x N^2");
    return {Kind::explicit_matrix, n, 0, std::move(r)};
}

std::string SymmetrySpec::label() const {
    switch (kind) {
    case Kind::flip: return "flip(" + std::to_string(n) + ")";
    case Kind::super_flip: return "super_flip(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Kind::standard_a_series: return "standard_a_series(" + std::to_string(n) + ")";
    case Kind::explicit_matrix: return "explicit(" + std::to_string(n) + ")";
    }
    return {};
}

Scalar Braiding::omega() const {
    return is_hecke() ? Scalar::omega() : Scalar();
}

namespace {

std::string triple(std::size_t idx, std::size_t n) {
    std::ostringstream os;
    os << "(" << idx / (n * n) << "," << (idx / n) % n << "," << idx % n << ")";
    return os.str();
}

Matrix standard_matrix(std::size_t n) {
    Matrix r(n * n, n * n);
    Scalar q = Scalar::q(), w = Scalar::omega();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                r(i * n + i, i * n + i) = q;
            } else {
                r(i * n + j, j * n + i) = Scalar(1);
                if (i < j) r(i * n + j, i * n + j) = w;
            }
        }
    return r;
}

Matrix signed_flip(std::size_t m, std::size_t n) {
    std::size_t dim = m + n;
    Matrix r(dim * dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            bool odd = i >= m && j >= m;
            r(i * dim + j, j * dim + i) = Scalar(odd ? -1 : 1);
        }
    return r;
}

struct SkewSolve {
    SolveStatus status = SolveStatus::inconsistent;
    Matrix psi;
};

SkewSolve solve_skew(const Matrix& r, std::size_t n) {
    TensorLayout l3 = TensorLayout::uniform(n, 3);
    Matrix r23 = place_operator(r, 2, l3);
    auto f = [&](const Matrix& psi) { return partial_trace(place_operator(psi, 1, l3) * r23, l3, 2); };
    SolveResult res = solve_linear_map(n * n, n * n, f, swap_operator(n, n));
    return {res.status, res.solution};
}

Matrix second_skew_identity(const Matrix& r, const Matrix& psi, std::size_t n) {
    TensorLayout l3 = TensorLayout::uniform(n, 3);
    return partial_trace(place_operator(psi, 2, l3) * place_operator(r, 1, l3), l3, 2);
}

// Both trace identities for B and C, and the scalar C.B = q^{-2a}.
void bc_checks(const Matrix& r, const SkewInverseData& s, std::size_t n, std::vector<CheckEntry>& out) {
    TensorLayout l2{n, n};
    Matrix id = Matrix::identity(n);
    out.push_back(check_equal("Tr_(1)(B_1 R_12) = I", anchor::trace_identity,
                              partial_trace(kronecker(s.B, id) * r, l2, 1), id));
    out.push_back(check_equal("Tr_(2)(C_2 R_12) = I", anchor::trace_identity,
                              partial_trace(kronecker(id, s.C) * r, l2, 2), id));
    Matrix target = Matrix::scalar(n, Scalar::q_power(-2 * s.a));
    out.push_back(check_equal("C B = q^{-2a} I", anchor::cb_exponent, s.C * s.B, target));
    out.push_back(check_equal("B C = q^{-2a} I", anchor::cb_exponent, s.B * s.C, target));
}

}  // namespace

CheckEntry check_yang_baxter(const Matrix& r, std::size_t n) {
    TensorLayout l3 = TensorLayout::uniform(n, 3);
    Matrix r12 = place_operator(r, 1, l3), r23 = place_operator(r, 2, l3);
    Matrix d = r12 * r23 * r12 - r23 * r12 * r23;
    CheckEntry e = check_true("R_12 R_23 R_12 = R_23 R_12 R_23", anchor::yang_baxter, true);
    for (std::size_t i = 0; i < d.rows() && e.pass; ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!d.raw(i, j).is_zero()) {
                e.pass = false;
                e.witness = "index triples " + triple(i, n) + " -> " + triple(j, n) + ", residual " + d.raw(i, j).str();
                break;
            }
    return e;
}

std::optional<SymmetryClass> classify(const Matrix& r, std::string* evidence) {
    std::size_t m = r.rows();
    Matrix id = Matrix::identity(m);
    Matrix sq = r * r - id;
    if (sq.is_zero()) return SymmetryClass::involutive;
    Matrix hk = (r - Matrix::scalar(m, Scalar::q())) * (r + Matrix::scalar(m, Scalar::q_power(-1)));
    if (hk.is_zero()) return SymmetryClass::hecke;
    if (evidence)
        *evidence = "R^2 - I nonzero at " + sq.first_nonzero() + "; (R - q)(R + q^-1) nonzero at " + hk.first_nonzero();
    return std::nullopt;
}

Braiding build_symmetry(const SymmetrySpec& spec) {
    Braiding b;
    b.origin_ = spec;
    switch (spec.kind) {
    case SymmetrySpec::Kind::flip: b.r_ = swap_operator(spec.n, spec.n); break;
    case SymmetrySpec::Kind::super_flip: b.r_ = signed_flip(spec.m, spec.n); break;
    case SymmetrySpec::Kind::standard_a_series: b.r_ = standard_matrix(spec.n); break;
    case SymmetrySpec::Kind::explicit_matrix: b.r_ = spec.entries; break;
    }
    b.n_ = spec.dim();
    if (b.n_ == 0) throw DimensionError("braiding on a zero-dimensional space");
    CheckEntry ybe = check_yang_baxter(b.r_, b.n_);
    if (!ybe.pass) throw CertificationError("Yang-Baxter equation fails", ybe.witness);
    std::string evidence;
    auto cls = classify(b.r_, &evidence);
    if (!cls) throw CertificationError("neither involutive nor Hecke", evidence);
    b.cls_ = *cls;
    b.op_ = b.r_.transpose();
    b.rinv_ = b.is_hecke() ? b.r_ - Matrix::scalar(b.r_.rows(), Scalar::omega()) : b.r_;
    return b;
}

Matrix skew_inverse(const Braiding& r) {
    std::size_t n = r.dim();
    SkewSolve s = solve_skew(r.matrix(), n);
    if (s.status == SolveStatus::inconsistent) throw CertificationError("not skew-invertible", "");
    if (s.status == SolveStatus::underdetermined)
        throw CertificationError("skew inverse is not unique", "degenerate braiding");
    std::string d = difference(second_skew_identity(r.matrix(), s.psi, n), swap_operator(n, n));
    if (!d.empty()) throw CertificationError("Tr_2 Psi_23 R_12 = P_13 fails", d);
    return s.psi;
}

SkewInverseData bc_data(const Braiding& r, const Matrix& psi) {
    std::size_t n = r.dim();
    TensorLayout l2{n, n};
    SkewInverseData s;
    s.psi = psi;
    s.B = partial_trace(psi, l2, 1);
    s.C = partial_trace(psi, l2, 2);
    s.trC = s.C.trace();

    Matrix cb = s.C * s.B;
    Scalar c0 = cb(0, 0);
    if (!(cb == Matrix::scalar(n, c0))) throw CertificationError("C B is not a scalar matrix", cb.first_nonzero());
    auto mono = c0.as_monomial();
    if (!mono || mono->first != 1 || mono->second % 2 != 0)
        throw CertificationError("C B is not of the form q^{-2a} I", c0.str());
    s.a = -mono->second / 2;

    std::vector<CheckEntry> checks;
    bc_checks(r.matrix(), s, n, checks);
    std::string f = first_failure(checks);
    if (!f.empty()) throw CertificationError("skew-inverse identities fail", f);
    return s;
}

bool Certificate::all_pass() const {
    return ybe && cls && skew_invertible && qlab::all_pass(checks);
}

Certificate certify_matrix(const Matrix& r, std::size_t n) {
    Certificate c;
    if (r.rows() != n * n || !r.is_square()) throw DimensionError("braiding must be N^2 x N^2");
    CheckEntry ybe = check_yang_baxter(r, n);
    c.ybe = ybe.pass;
    c.checks.push_back(ybe);
    std::string evidence;
    c.cls = classify(r, &evidence);
    CheckEntry ce = check_true("class polynomial annihilates R", anchor::symmetry_class, c.cls.has_value(), evidence);
    if (c.cls) ce.value = to_string(*c.cls);
    c.checks.push_back(ce);

    SkewSolve s = solve_skew(r, n);
    c.skew_invertible = s.status == SolveStatus::unique;
    std::string why = s.status == SolveStatus::inconsistent ? "no solution" : "solution not unique";
    c.checks.push_back(check_true("Tr_2 Psi_12 R_23 = P_13 has a unique solution", anchor::skew_inverse,
                                  c.skew_invertible, why));
    if (!c.skew_invertible) return c;
    c.checks.push_back(check_equal("Tr_2 Psi_23 R_12 = P_13", anchor::skew_inverse,
                                   second_skew_identity(r, s.psi, n), swap_operator(n, n)));

    SkewInverseData d;
    TensorLayout l2{n, n};
    d.B = partial_trace(s.psi, l2, 1);
    d.C = partial_trace(s.psi, l2, 2);
    Matrix cb = d.C * d.B;
    auto mono = cb(0, 0).as_monomial();
    bool scalar_form = cb == Matrix::scalar(n, cb(0, 0)) && mono && mono->first == 1 && mono->second % 2 == 0;
    if (scalar_form) {
        d.a = -mono->second / 2;
        bc_checks(r, d, n, c.checks);
        c.checks.back().value = "a = " + std::to_string(d.a);
    } else {
        TensorLayout l{n, n};
        Matrix id = Matrix::identity(n);
        c.checks.push_back(check_equal("Tr_(1)(B_1 R_12) = I", anchor::trace_identity,
                                       partial_trace(kronecker(d.B, id) * r, l, 1), id));
        c.checks.push_back(check_equal("Tr_(2)(C_2 R_12) = I", anchor::trace_identity,
                                       partial_trace(kronecker(id, d.C) * r, l, 2), id));
        c.checks.push_back(check_true("C B = q^{-2a} I", anchor::cb_exponent, false, "C B = " + cb.first_nonzero()));
    }
    return c;
}

Certificate certify_symmetry(const Braiding& r) {
    return certify_matrix(r.matrix(), r.dim());
}

Matrix ExtendedBraiding::assembled() const {
    std::size_t n = dim(), m = 2 * n;
    Matrix a(m * m, m * m);
    // block (src factors) -> (dst factors), offsets 0 for V and n for V*
    auto put = [&](const Matrix& blk, std::size_t in1, std::size_t in2, std::size_t out1, std::size_t out2) {
        for (std::size_t r = 0; r < n * n; ++r)
            for (std::size_t c = 0; c < n * n; ++c) {
                const Scalar& x = blk.raw(r, c);
                if (x.is_zero()) continue;
                std::size_t row = (out1 + r / n) * m + out2 + r % n;
                std::size_t col = (in1 + c / n) * m + in2 + c % n;
                a.raw(row, col) = x;
            }
    };
    put(vv, 0, 0, 0, 0);
    put(v_dual, 0, n, n, 0);
    put(dual_v, n, 0, 0, n);
    put(dual_dual, n, n, n, n);
    return a;
}

namespace {

// block braiding A (x) B -> B (x) A for A, B in {V = false, V* = true}
const Matrix& block(const ExtendedBraiding& e, bool a, bool b) {
    if (!a && !b) return e.vv;
    if (!a && b) return e.v_dual;
    if (a && !b) return e.dual_v;
    return e.dual_dual;
}

// Naturality of the braiding with a pairing e: A (x) B -> 1, for W passing
// from the right (braid (A B) past W) and from the left.
std::vector<CheckEntry> pairing_naturality(const ExtendedBraiding& x, const Matrix& e, bool a, bool b,
                                           const std::string& label) {
    std::size_t n = x.dim();
    Matrix id = Matrix::identity(n);
    std::vector<CheckEntry> out;
    for (bool w : {false, true}) {
        std::string wn = w ? "V*" : "V";
        // (I_W (x) e)(c_{A,W} (x) I_B)(I_A (x) c_{B,W}) = e (x) I_W
        Matrix lhs = kronecker(id, e) * kronecker(block(x, a, w), id) * kronecker(id, block(x, b, w));
        out.push_back(check_equal(label + " natural for " + wn + " passing on the right", anchor::pairing_invariance,
                                  lhs, kronecker(e, id)));
        // (e (x) I_W)(I_A (x) c_{W,B})(c_{W,A} (x) I_B) = I_W (x) e
        Matrix lhs2 = kronecker(e, id) * kronecker(id, block(x, w, b)) * kronecker(block(x, w, a), id);
        out.push_back(check_equal(label + " natural for " + wn + " passing on the left", anchor::pairing_invariance,
                                  lhs2, kronecker(id, e)));
    }
    return out;
}

Matrix solve_block(std::size_t n, const std::function<Matrix(const Matrix&)>& f, const Matrix& rhs,
                   const std::string& what) {
    SolveResult s = solve_linear_map(n * n, n * n, f, rhs);
    if (s.status == SolveStatus::inconsistent) throw CertificationError("no braiding " + what, "invariance system inconsistent");
    if (s.status == SolveStatus::underdetermined)
        throw CertificationError("braiding " + what + " is not unique", "invariance system underdetermined");
    return s.solution;
}

}  // namespace

ExtendedBraiding extend_to_dual(const Braiding& r, const SkewInverseData& skew) {
    std::size_t n = r.dim();
    ExtendedBraiding x{r, skew, r.op(), {}, {}, {}, Matrix(1, n * n), Matrix(1, n * n), {}};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            x.left_pairing(0, j * n + k) = skew.B(k, j);
            if (j == k) x.right_pairing(0, j * n + k) = Scalar(1);
        }
    Matrix id = Matrix::identity(n);
    const Matrix& ev = x.left_pairing;
    Matrix ev_i = kronecker(ev, id), i_ev = kronecker(id, ev);
    Matrix rop_r = kronecker(id, r.op()), rop_l = kronecker(r.op(), id);

    x.dual_v = solve_block(
        n, [&](const Matrix& m) { return i_ev * kronecker(m, id) * rop_r; }, ev_i, "V* (x) V -> V (x) V*");
    x.v_dual = solve_block(
        n, [&](const Matrix& m) { return ev_i * kronecker(id, r.op()) * kronecker(m, id); }, i_ev,
        "V (x) V* -> V* (x) V");
    Matrix y_r = kronecker(id, x.v_dual);
    x.dual_dual = solve_block(
        n, [&](const Matrix& m) { return i_ev * kronecker(m, id) * y_r; }, ev_i, "V* (x) V* -> V* (x) V*");

    // index formula R(x^i (x) x^j) = R_lk^ji x^k (x) x^l
    Matrix formula(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) formula(k * n + l, i * n + j) = r.entry(l, k, j, i);
    x.checks.push_back(check_equal("V* (x) V* block matches the index formula", anchor::dual_extension, x.dual_dual,
                                   formula));
    for (auto& c : pairing_naturality(x, x.left_pairing, true, false, "<x^j, x_k> = B_k^j")) x.checks.push_back(c);
    for (auto& c : pairing_naturality(x, x.right_pairing, false, true, "<x_i, x^j> = delta")) x.checks.push_back(c);

    Matrix full = x.assembled();
    CheckEntry ybe = check_yang_baxter(full, 2 * n);
    ybe.name = "assembled braiding on (V + V*)^3 satisfies YBE";
    ybe.anchor = anchor::dual_extension;
    if (!ybe.pass) throw CertificationError("extended braiding fails YBE", ybe.witness);
    x.checks.push_back(ybe);

    if (r.is_hecke()) {
        auto hecke = [&](const Matrix& m) {
            std::size_t s = m.rows();
            return (m - Matrix::scalar(s, Scalar::q())) * (m + Matrix::scalar(s, Scalar::q_power(-1)));
        };
        x.checks.push_back(check_zero("V (x) V block is Hecke", anchor::dual_extension, hecke(x.vv)));
        x.checks.push_back(check_zero("V* (x) V* block is Hecke", anchor::dual_extension, hecke(x.dual_dual)));
    } else {
        x.checks.push_back(check_true("assembled braiding squares to I", anchor::dual_extension,
                                      (full * full).is_identity()));
    }
    std::string f = first_failure(x.checks);
    if (!f.empty()) throw CertificationError("dual extension invalid", f);
    return x;
}

Matrix end_multiplication(const SkewInverseData& skew, std::size_t n) {
    std::size_t n2 = n * n;
    Matrix m(n2, n2 * n2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const Scalar& b = skew.B(k, j);
                    if (!b.is_zero()) m(i * n + l, (i * n + j) * n2 + k * n + l) = b;
                }
    return m;
}

EndBraiding end_braiding(const ExtendedBraiding& ext) {
    std::size_t n = ext.dim(), n2 = n * n;
    EndBraiding e;
    e.layout = TensorLayout::uniform(n, 4);
    e.matrix = place_operator(ext.v_dual, 2, e.layout) * place_operator(ext.dual_dual, 3, e.layout) *
               place_operator(ext.vv, 1, e.layout) * place_operator(ext.dual_v, 2, e.layout);

    CheckEntry ybe = check_yang_baxter(e.matrix, n2);
    ybe.name = "R_End(V) satisfies YBE on End(V)^3";
    ybe.anchor = anchor::end_braiding;
    e.checks.push_back(ybe);
    if (!ext.base.is_hecke())
        e.checks.push_back(check_true("R_End(V)^2 = I", anchor::end_braiding, (e.matrix * e.matrix).is_identity()));

    Matrix mult = end_multiplication(ext.skew, n);
    Matrix id = Matrix::identity(n2);
    TensorLayout l3 = TensorLayout::uniform(n2, 3);
    Matrix r1 = place_operator(e.matrix, 1, l3), r2 = place_operator(e.matrix, 2, l3);
    e.checks.push_back(check_equal("R_End (o (x) I) = (I (x) o) R_12 R_23", anchor::product_invariance,
                                   e.matrix * kronecker(mult, id), kronecker(id, mult) * r1 * r2));
    e.checks.push_back(check_equal("R_End (I (x) o) = (o (x) I) R_23 R_12", anchor::product_invariance,
                                   e.matrix * kronecker(id, mult), kronecker(mult, id) * r2 * r1));
    return e;
}

Matrix end_braiding_with(const ExtendedBraiding& ext, const std::vector<bool>& dual) {
    std::size_t n = ext.dim(), n2 = n * n;
    Matrix id = Matrix::identity(n);
    std::size_t total = n2;
    for (std::size_t i = 0; i < dual.size(); ++i) total *= n;
    Matrix acc = Matrix::identity(total);
    std::size_t before = 1;
    for (std::size_t t = 0; t < dual.size(); ++t) {
        // End(V) (x) U_t -> U_t (x) End(V) on V (x) V* (x) U_t
        Matrix step = dual[t] ? kronecker(ext.v_dual, id) * kronecker(id, ext.dual_dual)
                              : kronecker(ext.vv, id) * kronecker(id, ext.dual_v);
        std::size_t after = total / (before * n2 * n);
        Matrix placed = kronecker(kronecker(Matrix::identity(before), step), Matrix::identity(after));
        acc = placed * acc;
        before *= n;
    }
    return acc;
}

}  // namespace qlab
