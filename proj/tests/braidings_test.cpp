#include "qlab/braidings.hpp"
#include "qlab/errors.hpp"

#include <gtest/gtest.h>

using namespace qlab;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

// Hecke but not symmetric: the off-diagonal permutation entries carry p, 1/p
Matrix multiparameter(std::size_t n, const Scalar& p) {
    Braiding b = build_symmetry(SymmetrySpec::standard_a_series(n));
    Matrix r = b.matrix();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            r(i * n + j, j * n + i) = p;
            r(j * n + i, i * n + j) = p.inverse();
        }
    return r;
}

Matrix at_one(const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j).evaluate_at(1));
    return out;
}

}  // namespace

TEST(Braidings, FlipBasics) {
    Braiding f = build_symmetry(SymmetrySpec::flip(2));
    EXPECT_EQ(f.symmetry_class(), SymmetryClass::involutive);
    EXPECT_EQ(f.matrix(), swap_operator(2, 2));
    Matrix psi = skew_inverse(f);
    EXPECT_EQ(psi, swap_operator(2, 2));
    SkewInverseData s = bc_data(f, psi);
    EXPECT_TRUE(s.B.is_identity());
    EXPECT_TRUE(s.C.is_identity());
    EXPECT_EQ(s.a, 0);
    EXPECT_EQ(s.trC, Scalar(2));
}

TEST(Braidings, SuperFlip) {
    Braiding f = build_symmetry(SymmetrySpec::super_flip(1, 1));
    EXPECT_EQ(f.symmetry_class(), SymmetryClass::involutive);
    // x_2 (x) x_2 -> -x_2 (x) x_2
    EXPECT_EQ(f.matrix()(3, 3), Scalar(-1));
    SkewInverseData s = bc_data(f, skew_inverse(f));
    Matrix d = Matrix::from_rows({{1, 0}, {0, -1}});
    EXPECT_EQ(s.B, d);
    EXPECT_EQ(s.C, d);
    EXPECT_TRUE(s.trC.is_zero());
    EXPECT_FALSE(s.sl_available());
}

TEST(Braidings, StandardSeries) {
    for (std::size_t n : {2u, 3u}) {
        Braiding r = build_symmetry(SymmetrySpec::standard_a_series(n));
        EXPECT_EQ(r.symmetry_class(), SymmetryClass::hecke);
        Certificate c = certify_symmetry(r);
        EXPECT_TRUE(c.all_pass()) << first_failure(c.checks);
        SkewInverseData s = bc_data(r, skew_inverse(r));
        // diagonal B and C
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) {
                    EXPECT_TRUE(s.B(i, j).is_zero());
                    EXPECT_TRUE(s.C(i, j).is_zero());
                }
        EXPECT_EQ(s.a, static_cast<int>(n));
        EXPECT_EQ(at_one(r.matrix()), swap_operator(n, n));
    }
    Braiding r2 = build_symmetry(SymmetrySpec::standard_a_series(2));
    SkewInverseData s = bc_data(r2, skew_inverse(r2));
    EXPECT_EQ(s.B, Matrix::from_rows({{S("q^-1"), 0}, {0, S("q^-3")}}));
    EXPECT_EQ(s.C, Matrix::from_rows({{S("q^-3"), 0}, {0, S("q^-1")}}));
    EXPECT_EQ(s.trC, S("q^-1 + q^-3"));
}

TEST(Braidings, CertificationFleet) {
    for (auto spec : {SymmetrySpec::flip(3), SymmetrySpec::super_flip(2, 1)}) {
        Certificate c = certify_symmetry(build_symmetry(spec));
        EXPECT_TRUE(c.all_pass()) << spec.label() << " " << first_failure(c.checks);
        EXPECT_EQ(c.cls, SymmetryClass::involutive);
    }
}

TEST(Braidings, RejectsNonBraidings) {
    Matrix bad = Matrix::identity(4);
    bad(0, 1) = Scalar(1);
    bad(2, 3) = Scalar(2);
    Certificate c = certify_matrix(bad, 2);
    EXPECT_FALSE(c.ybe || c.all_pass());
    EXPECT_FALSE(c.checks[0].witness.empty());
    EXPECT_THROW(build_symmetry(SymmetrySpec::explicit_matrix(bad)), CertificationError);
    // YBE holds for scalar matrices, but 2 I is neither involutive nor Hecke
    try {
        build_symmetry(SymmetrySpec::explicit_matrix(Matrix::scalar(4, Scalar(2))));
        FAIL();
    } catch (const CertificationError& e) {
        EXPECT_NE(e.witness.find("R^2 - I"), std::string::npos);
    }
}

TEST(Braidings, ExtensionFlip) {
    Braiding f = build_symmetry(SymmetrySpec::flip(2));
    ExtendedBraiding x = extend_to_dual(f, bc_data(f, skew_inverse(f)));
    Matrix p = swap_operator(2, 2);
    EXPECT_EQ(x.vv, p);
    EXPECT_EQ(x.v_dual, p);
    EXPECT_EQ(x.dual_v, p);
    EXPECT_EQ(x.dual_dual, p);
    EndBraiding e = end_braiding(x);
    EXPECT_EQ(e.matrix, swap_operator(4, 4));
    EXPECT_TRUE(all_pass(e.checks));
}

TEST(Braidings, ExtensionAllBases) {
    std::vector<Matrix> bases = {multiparameter(2, S("2")), multiparameter(3, S("q^2 + 1"))};
    for (auto spec : {SymmetrySpec::super_flip(1, 1), SymmetrySpec::standard_a_series(2),
                      SymmetrySpec::standard_a_series(3), SymmetrySpec::super_flip(2, 1)})
        bases.push_back(build_symmetry(spec).matrix());
    for (const auto& m : bases) {
        Braiding r = build_symmetry(SymmetrySpec::explicit_matrix(m));
        ExtendedBraiding x = extend_to_dual(r, bc_data(r, skew_inverse(r)));
        EXPECT_TRUE(all_pass(x.checks)) << first_failure(x.checks);
        EXPECT_GE(x.checks.size(), 11u);
        EndBraiding e = end_braiding(x);
        EXPECT_TRUE(all_pass(e.checks)) << first_failure(e.checks);
    }
}

TEST(Braidings, SuperFlipBlocksAreSignedFlips) {
    Braiding f = build_symmetry(SymmetrySpec::super_flip(1, 1));
    ExtendedBraiding x = extend_to_dual(f, bc_data(f, skew_inverse(f)));
    EXPECT_EQ(x.dual_dual, f.matrix());
    EXPECT_EQ(x.v_dual, f.matrix());
    EXPECT_EQ(x.dual_v, f.matrix());
    EndBraiding e = end_braiding(x);
    EXPECT_TRUE((e.matrix * e.matrix).is_identity());
}

TEST(Braidings, MixedBlocksAreNotHecke) {
    // the class polynomial holds on the pure blocks only
    Braiding r = build_symmetry(SymmetrySpec::standard_a_series(2));
    ExtendedBraiding x = extend_to_dual(r, bc_data(r, skew_inverse(r)));
    Matrix a = x.assembled();
    std::size_t m = a.rows();
    Matrix h = (a - Matrix::scalar(m, Scalar::q())) * (a + Matrix::scalar(m, Scalar::q_power(-1)));
    EXPECT_FALSE(h.is_zero());
}

TEST(Braidings, EndBraidingWithWords) {
    Braiding r = build_symmetry(SymmetrySpec::standard_a_series(2));
    ExtendedBraiding x = extend_to_dual(r, bc_data(r, skew_inverse(r)));
    Matrix single = end_braiding_with(x, {false});
    Matrix id = Matrix::identity(2);
    EXPECT_EQ(single, kronecker(x.vv, id) * kronecker(id, x.dual_v));
    Matrix both = end_braiding_with(x, {false, true});
    EXPECT_EQ(both.rows(), 16u);
    // braiding End(V) past V (x) V* is R_End(V) itself
    EXPECT_EQ(both, end_braiding(x).matrix);
}
