#include "qlab/errors.hpp"
#include "qlab/linear_solve.hpp"
#include "qlab/mrea.hpp"

#include <gtest/gtest.h>

using namespace qlab;

namespace {

struct Fixture {
    Braiding r;
    SkewInverseData skew;
    ExtendedBraiding ext;
};

Fixture make(SymmetrySpec s) {
    Braiding r = build_symmetry(s);
    SkewInverseData skew = bc_data(r, skew_inverse(r));
    ExtendedBraiding ext = extend_to_dual(r, skew);
    return {r, skew, ext};
}

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = Scalar(1);
    return m;
}

}  // namespace

TEST(Mrea, NcPolynomialBasics) {
    NcPolynomial a = NcPolynomial::generator(0), b = NcPolynomial::generator(1);
    NcPolynomial c = a * b - b * a;
    EXPECT_EQ(c.degree(), 2);
    EXPECT_EQ(c.coefficient({1, 0}), Scalar(-1));
    EXPECT_TRUE((c + b * a - a * b).is_zero());
    std::vector<NcPolynomial> sub = {b, a};
    EXPECT_EQ(c.substitute(sub), b * a - a * b);
}

TEST(Mrea, FlipIsClassicalGl) {
    for (std::size_t n : {2u, 3u}) {
        RelationSet rel = relation_set(build_symmetry(SymmetrySpec::flip(n)));
        EXPECT_EQ(rel.size(), n * n * n * n);
        EXPECT_TRUE(all_pass(rel.checks));
        EXPECT_TRUE(same_span(rel, classical_gl_relations(n)));
    }
}

TEST(Mrea, RelationSpans) {
    Braiding r = build_symmetry(SymmetrySpec::standard_a_series(2));
    RelationSet one = relation_set(r), zero = relation_set(r, Scalar(0));
    EXPECT_TRUE(all_pass(one.checks)) << first_failure(one.checks);
    EXPECT_TRUE(all_pass(zero.checks));
    EXPECT_TRUE(zero.linear.is_zero());
    EXPECT_FALSE(one.linear.is_zero());
    EXPECT_EQ(rank(one.quadratic), rank(zero.quadratic));
}

TEST(Mrea, VectorAndCovector) {
    Fixture f = make(SymmetrySpec::flip(2));
    GeneratorRep v = vector_rep(f.r, f.skew);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            EXPECT_EQ(v.image(i, j), unit(2, i, j));
            EXPECT_EQ(covector_rep(f.r, f.skew).image(i, j), -unit(2, j, i));
        }
    for (auto s : {SymmetrySpec::standard_a_series(2), SymmetrySpec::standard_a_series(3), SymmetrySpec::super_flip(1, 1)}) {
        Fixture x = make(s);
        GeneratorRep a = vector_rep(x.r, x.skew), b = covector_rep(x.r, x.skew);
        EXPECT_TRUE(check_representation(a, x.r).pass) << s.label();
        EXPECT_TRUE(check_representation(b, x.r).pass) << s.label();
        ASSERT_TRUE(a.chi.has_value());
        EXPECT_EQ(*a.chi, Scalar::q_power(-2 * x.skew.a));
        ASSERT_TRUE(b.chi.has_value());
    }
}

TEST(Mrea, CovectorChiStandard) {
    Fixture x = make(SymmetrySpec::standard_a_series(2));
    GeneratorRep b = covector_rep(x.r, x.skew);
    EXPECT_EQ(ell_image(b, x.skew), Matrix::scalar(2, *b.chi));
    // Tr_2 (I (x) C) R = I forces -1
    EXPECT_EQ(*b.chi, Scalar(-1));
}

TEST(Mrea, CheckRepresentationWitness) {
    Fixture x = make(SymmetrySpec::standard_a_series(2));
    GeneratorRep v = vector_rep(x.r, x.skew);
    v.images[1](0, 0) += Scalar(1);
    CheckEntry c = check_representation(v, x.r);
    EXPECT_FALSE(c.pass);
    EXPECT_NE(c.witness.find("relation"), std::string::npos);
    GeneratorRep zero = vector_rep(x.r, x.skew);
    for (auto& m : zero.images) m = Matrix(2, 2);
    EXPECT_TRUE(check_representation(zero, x.r).pass);
    // the substitution path agrees
    RelationSet rel = relation_set(x.r);
    EXPECT_FALSE(check_representation(v, rel).pass);
    EXPECT_TRUE(check_representation(vector_rep(x.r, x.skew), rel).pass);
}

TEST(Mrea, Bialgebra) {
    BialgebraMaps flip = bialgebra_maps(build_symmetry(SymmetrySpec::flip(2)));
    for (const auto& d : flip.delta) EXPECT_EQ(d.size(), 2u);
    BialgebraMaps m = bialgebra_maps(build_symmetry(SymmetrySpec::standard_a_series(2)));
    EXPECT_TRUE(all_pass(m.checks));
    const auto& d12 = m.delta[1];
    ASSERT_EQ(d12.size(), 4u);
    for (std::size_t t = 2; t < 4; ++t) EXPECT_EQ(d12[t].coeff, -Scalar::omega());
    EXPECT_EQ(d12[2].left, 0);
    EXPECT_EQ(d12[2].right, 1);
}

TEST(Mrea, TensorReps) {
    for (auto s : {SymmetrySpec::flip(2), SymmetrySpec::standard_a_series(2), SymmetrySpec::super_flip(1, 1),
                   SymmetrySpec::standard_a_series(3)}) {
        Fixture x = make(s);
        GeneratorRep v = vector_rep(x.r, x.skew), c = covector_rep(x.r, x.skew);
        for (const auto& [a, b] : {std::pair{v, v}, std::pair{v, c}, std::pair{c, v}, std::pair{c, c}}) {
            GeneratorRep t = tensor_rep(a, b, x.ext);
            CheckEntry e = check_representation(t, x.r);
            EXPECT_TRUE(e.pass) << s.label() << " " << t.label << " " << e.witness;
        }
    }
    // classical tensor product at the flip
    Fixture f = make(SymmetrySpec::flip(2));
    GeneratorRep v = vector_rep(f.r, f.skew);
    GeneratorRep vv = tensor_rep(v, v, f.ext);
    for (std::size_t g = 0; g < 4; ++g)
        EXPECT_EQ(vv.images[g], kronecker(v.images[g], Matrix::identity(2)) + kronecker(Matrix::identity(2), v.images[g]));
}

TEST(Mrea, TensorRepRefusesUntagged) {
    Fixture x = make(SymmetrySpec::standard_a_series(2));
    GeneratorRep v = vector_rep(x.r, x.skew);
    GeneratorRep raw = v;
    raw.equivariant = false;
    EXPECT_THROW(tensor_rep(raw, v, x.ext), Error);
}

TEST(Mrea, Restrictions) {
    Fixture x = make(SymmetrySpec::standard_a_series(2));
    for (int k : {2, 3}) {
        GeneratorRep p = tensor_power_rep(x.ext, k);
        EXPECT_TRUE(check_representation(p, x.r).pass);
        ProjectorBank bank = young_projectors(x.r, k);
        std::size_t total = 0;
        for (const auto& e : bank.entries) {
            GeneratorRep res = restrict_rep(p, bank, e.tableau.shape, e.tableau.index);
            EXPECT_EQ(res.carrier_dim, e.rank);
            total += res.carrier_dim;
            CheckEntry c = check_representation(res, x.r);
            EXPECT_TRUE(c.pass) << res.label << " " << c.witness;
        }
        EXPECT_EQ(total, static_cast<std::size_t>(k == 2 ? 4 : 8));
    }
    ProjectorBank b2 = young_projectors(x.r, 2);
    GeneratorRep anti = restrict_rep(tensor_power_rep(x.ext, 2), b2, {{1, 1}}, 1);
    EXPECT_EQ(anti.carrier_dim, 1u);
    for (const auto& m : anti.images) EXPECT_EQ(m.rows(), 1u);
}

TEST(Mrea, FilteredDims) {
    std::vector<std::size_t> expected = {1, 5, 15, 35};
    Braiding r = build_symmetry(SymmetrySpec::standard_a_series(2));
    EXPECT_EQ(filtered_dimension(relation_set(r), 3).dims, expected);
    EXPECT_EQ(filtered_dimension(relation_set(r, Scalar(0)), 3).dims, expected);
    EXPECT_EQ(filtered_dimension(relation_set(build_symmetry(SymmetrySpec::flip(2))), 3).dims, expected);
    EXPECT_EQ(filtered_dimension(classical_gl_relations(2), 2).dims, std::vector<std::size_t>({1, 5, 15}));
    EXPECT_THROW(filtered_dimension(classical_gl_relations(2), 4), Error);
}

TEST(Mrea, EllIsCentralModDegreeTwo) {
    Fixture x = make(SymmetrySpec::standard_a_series(2));
    RelationSet rel = relation_set(x.r);
    NcPolynomial ell;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ell += x.skew.C(j, i) * NcPolynomial::generator(static_cast<int>(i * 2 + j));
    for (int g = 0; g < 4; ++g) {
        NcPolynomial l = NcPolynomial::generator(g);
        EXPECT_TRUE(in_truncated_ideal(rel, ell * l - l * ell, 2));
    }
    EXPECT_FALSE(in_truncated_ideal(rel, NcPolynomial::generator(0) * NcPolynomial::generator(1), 2));
}
