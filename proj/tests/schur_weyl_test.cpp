#include "qlab/errors.hpp"
#include "qlab/schur_weyl.hpp"

#include <gtest/gtest.h>

using namespace qlab;

namespace {

Braiding sym(SymmetrySpec s) { return build_symmetry(s); }

std::vector<std::size_t> dims(const std::vector<DecompositionEntry>& d) {
    std::vector<std::size_t> out;
    for (const auto& e : d) out.push_back(e.dim);
    return out;
}

Matrix at_one(const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j).evaluate_at(1));
    return out;
}

}  // namespace

TEST(SchurWeyl, Partitions) {
    auto p = partitions(4);
    ASSERT_EQ(p.size(), 5u);
    EXPECT_EQ(p[0].parts, std::vector<int>({4}));
    EXPECT_EQ(p[2].parts, std::vector<int>({2, 2}));
    EXPECT_EQ(p[4].parts, std::vector<int>({1, 1, 1, 1}));
    EXPECT_EQ(p[1].str(), "(3,1)");
}

TEST(SchurWeyl, LastLetterOrder) {
    auto t = standard_tableaux({{2, 1}});
    ASSERT_EQ(t.size(), 2u);
    // 3 sits in the upper row first
    EXPECT_EQ(t[0].rows, std::vector<std::vector<int>>({{1, 3}, {2}}));
    EXPECT_EQ(t[1].rows, std::vector<std::vector<int>>({{1, 2}, {3}}));
    EXPECT_EQ(t[1].index, 2);
    EXPECT_EQ(standard_tableaux({{3, 2}}).size(), 5u);
    EXPECT_EQ(standard_tableaux({{2, 2}})[0].content_of(4), 0);
}

TEST(SchurWeyl, HeckeRep) {
    auto f = hecke_rep(sym(SymmetrySpec::flip(2)), 3);
    ASSERT_EQ(f.size(), 2u);
    TensorLayout l = TensorLayout::uniform(2, 3);
    EXPECT_EQ(f[0], place_operator(swap_operator(2, 2), 1, l));
    EXPECT_EQ(f[1], place_operator(swap_operator(2, 2), 2, l));
    EXPECT_EQ(hecke_rep(sym(SymmetrySpec::standard_a_series(2)), 4).size(), 3u);
    EXPECT_THROW(hecke_rep(sym(SymmetrySpec::flip(2)), 1), Error);
    EXPECT_THROW(hecke_rep(sym(SymmetrySpec::flip(3)), 5), Error);
}

TEST(SchurWeyl, DegreeTwo) {
    auto fd = decompose(sym(SymmetrySpec::flip(2)), 2);
    ASSERT_EQ(fd.size(), 2u);
    EXPECT_EQ(fd[0].shape.parts, std::vector<int>({2}));
    EXPECT_EQ(dims(fd), std::vector<std::size_t>({3, 1}));
    EXPECT_EQ(dims(decompose(sym(SymmetrySpec::standard_a_series(2)), 2)), std::vector<std::size_t>({3, 1}));
    auto sf = dims(decompose(sym(SymmetrySpec::super_flip(1, 1)), 2));
    EXPECT_EQ(sf[0] + sf[1], 4u);
    EXPECT_EQ(sf, std::vector<std::size_t>({2, 2}));
}

TEST(SchurWeyl, DegreeThreeStandard) {
    auto d = decompose(sym(SymmetrySpec::standard_a_series(2)), 3);
    ASSERT_EQ(d.size(), 4u);
    EXPECT_EQ(dims(d), std::vector<std::size_t>({4, 2, 2, 0}));
    EXPECT_EQ(d[1].a, 1);
    EXPECT_EQ(d[2].a, 2);
    EXPECT_EQ(d[3].shape.parts, std::vector<int>({1, 1, 1}));
}

TEST(SchurWeyl, BanksAtDegreeFour) {
    for (auto s : {SymmetrySpec::standard_a_series(2), SymmetrySpec::standard_a_series(3), SymmetrySpec::super_flip(1, 1)}) {
        ProjectorBank b = young_projectors(sym(s), 4);
        EXPECT_TRUE(all_pass(b.checks)) << s.label();
        EXPECT_EQ(b.entries.size(), 10u);
    }
}

TEST(SchurWeyl, ClassicalLimit) {
    ProjectorBank qb = young_projectors(sym(SymmetrySpec::standard_a_series(2)), 3);
    ProjectorBank cb = young_projectors(sym(SymmetrySpec::flip(2)), 3);
    ASSERT_EQ(qb.entries.size(), cb.entries.size());
    for (std::size_t i = 0; i < qb.entries.size(); ++i) EXPECT_EQ(at_one(qb.entries[i].projector), cb.entries[i].projector);
}

TEST(SchurWeyl, QProjectorsFlip) {
    Braiding f = sym(SymmetrySpec::flip(2));
    ExtendedBraiding x = extend_to_dual(f, bc_data(f, skew_inverse(f)));
    EndBraiding e = end_braiding(x);
    QProjectors p = q_projectors(x, e);
    EXPECT_TRUE(all_pass(p.checks)) << first_failure(p.checks);
    EXPECT_EQ(p.Q, e.matrix);
    EXPECT_TRUE(p.q_ybe);
}

TEST(SchurWeyl, QProjectorsAllBases) {
    for (auto s : {SymmetrySpec::standard_a_series(2), SymmetrySpec::super_flip(1, 1), SymmetrySpec::standard_a_series(3)}) {
        Braiding r = sym(s);
        ExtendedBraiding x = extend_to_dual(r, bc_data(r, skew_inverse(r)));
        QProjectors p = q_projectors(x, end_braiding(x));
        EXPECT_TRUE(all_pass(p.checks)) << s.label() << " " << first_failure(p.checks);
        EXPECT_EQ(p.S + p.A, Matrix::identity(p.Q.rows()));
    }
}

TEST(SchurWeyl, QIsConjugation) {
    // applying Q to every entry of L_1bar L_2bar gives R^-1 (L_1bar L_2bar) R
    Braiding r = sym(SymmetrySpec::standard_a_series(2));
    ExtendedBraiding x = extend_to_dual(r, bc_data(r, skew_inverse(r)));
    QProjectors p = q_projectors(x, end_braiding(x));
    Matrix k = two_copy_matrix(r);
    Matrix kq = k * p.Q.transpose();
    for (std::size_t gamma = 0; gamma < 16; ++gamma) {
        Matrix m(4, 4), qm(4, 4);
        for (std::size_t e = 0; e < 16; ++e) {
            m(e / 4, e % 4) = k(e, gamma);
            qm(e / 4, e % 4) = kq(e, gamma);
        }
        EXPECT_EQ(qm, r.inverse_matrix() * m * r.matrix()) << gamma;
    }
}
