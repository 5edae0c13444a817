#include "qlab/errors.hpp"
#include "qlab/sl_reduction.hpp"

#include <gtest/gtest.h>

using namespace qlab;

namespace {

struct Fixture {
    Braiding r;
    SkewInverseData skew;
    ExtendedBraiding ext;
    EndBraiding end;
};

Fixture make(SymmetrySpec s) {
    Braiding r = build_symmetry(s);
    SkewInverseData skew = bc_data(r, skew_inverse(r));
    ExtendedBraiding ext = extend_to_dual(r, skew);
    EndBraiding end = end_braiding(ext);
    return {r, skew, ext, end};
}

BracketData bracket_for(const Fixture& f) { return bracket_tensor(f.r, q_projectors(f.ext, f.end)); }

}  // namespace

TEST(SlReduction, EllIsCentral) {
    Fixture f = make(SymmetrySpec::standard_a_series(2));
    std::vector<GeneratorRep> reps = {vector_rep(f.r, f.skew), covector_rep(f.r, f.skew),
                                      adjoint_rep(bracket_for(f), f.ext)};
    auto checks = ell_center_check(relation_set(f.r), f.skew, reps);
    EXPECT_EQ(checks.size(), 4u);
    EXPECT_TRUE(all_pass(checks)) << first_failure(checks);

    Fixture g = make(SymmetrySpec::flip(2));
    EXPECT_TRUE(all_pass(ell_center_check(relation_set(g.r), g.skew)));
}

TEST(SlReduction, DroppedLinearTermIsCaught) {
    Fixture f = make(SymmetrySpec::flip(2));
    RelationSet rels = classical_gl_relations(2);
    ASSERT_TRUE(all_pass(ell_center_check(rels, f.skew)));
    // [l_0^0, l_0^1] = l_0^1 and its mirror lose their linear part
    for (std::size_t r : {1u, 4u})
        for (std::size_t t = 0; t < rels.generators(); ++t) rels.linear(r, t) = Scalar();
    auto checks = ell_center_check(rels, f.skew);
    ASSERT_FALSE(all_pass(checks));
    EXPECT_NE(checks[0].witness.find("not a consequence"), std::string::npos);
}

TEST(SlReduction, PresentationStandard) {
    for (std::size_t n : {2u, 3u}) {
        Fixture f = make(SymmetrySpec::standard_a_series(n));
        SlPresentation s = sl_present(f.r, f.skew);
        EXPECT_EQ(s.checks.size(), 6u);
        EXPECT_TRUE(all_pass(s.checks)) << first_failure(s.checks);
        EXPECT_EQ(s.mixed.size(), n * n * n * n + n * n);
        EXPECT_EQ(s.generators(), n * n + 1);
    }
}

TEST(SlReduction, PresentationFlipIsClassicalSl) {
    Fixture f = make(SymmetrySpec::flip(2));
    SlPresentation s = sl_present(f.r, f.skew);
    EXPECT_TRUE(all_pass(s.checks)) << first_failure(s.checks);
    EXPECT_EQ(s.trC, Scalar(2));
    EXPECT_TRUE(same_span(s.quotient, classical_gl_relations(2)));
    // traceless combination f_0 + f_3 is the trace constraint
    EXPECT_EQ(s.trace_constraint, NcPolynomial::generator(0) + NcPolynomial::generator(3));
}

TEST(SlReduction, SuperFlipRefused) {
    Fixture f = make(SymmetrySpec::super_flip(1, 1));
    try {
        sl_present(f.r, f.skew);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("sl-reduction unavailable"), std::string::npos);
    }
    EXPECT_THROW(sl_reduce_rep(vector_rep(f.r, f.skew), f.r, f.skew), Error);
}

TEST(SlReduction, AdjointIdentities) {
    Fixture f = make(SymmetrySpec::standard_a_series(2));
    BracketData bd = bracket_for(f);
    SlAdjoint a = sl_adjoint_rep(f.r, bd, sl_present(f.r, f.skew));
    EXPECT_EQ(a.checks.size(), 4u);
    EXPECT_TRUE(all_pass(a.checks));
    EXPECT_FALSE(a.coincides_with_restricted_bracket);
    EXPECT_FALSE(a.restricted_jacobi.pass);
    EXPECT_FALSE(a.restricted_jacobi.witness.empty());
}

TEST(SlReduction, AdjointClassical) {
    Fixture f = make(SymmetrySpec::flip(2));
    SlAdjoint a = sl_adjoint_rep(f.r, bracket_for(f), sl_present(f.r, f.skew));
    EXPECT_TRUE(all_pass(a.checks));
    EXPECT_TRUE(a.coincides_with_restricted_bracket);
    EXPECT_TRUE(a.restricted_jacobi.pass) << a.restricted_jacobi.witness;
}

TEST(SlReduction, Twists) {
    Fixture f = make(SymmetrySpec::standard_a_series(2));
    std::vector<GeneratorRep> reps = {vector_rep(f.r, f.skew), covector_rep(f.r, f.skew),
                                      adjoint_rep(bracket_for(f), f.ext)};
    EXPECT_FALSE(reps[2].chi.has_value());
    for (const auto& rho : reps) {
        for (const Scalar& z : {Scalar(1), Scalar::q(), Scalar(2)}) {
            TwistedRep t = z_twist(rho, z, f.r, f.skew);
            EXPECT_EQ(t.rep.chi.has_value(), rho.chi.has_value());
            EXPECT_EQ(t.xi.has_value(), rho.chi.has_value());
            if (z == Scalar(1)) EXPECT_EQ(t.rep.images, rho.images);
        }
        if (!rho.chi) continue;
        // z = 1/xi kills l
        TwistedRep probe = z_twist(rho, Scalar(1), f.r, f.skew);
        TwistedRep red = z_twist(rho, Scalar(1) / *probe.xi, f.r, f.skew);
        EXPECT_TRUE(red.rep.chi->is_zero()) << rho.label;
    }
    Fixture g = make(SymmetrySpec::flip(2));
    EXPECT_THROW(z_twist(vector_rep(g.r, g.skew), Scalar(2), g.r, g.skew), Error);
}

TEST(SlReduction, Reduction) {
    Fixture f = make(SymmetrySpec::standard_a_series(2));
    GeneratorRep v = vector_rep(f.r, f.skew);
    ReducedRep red = sl_reduce_rep(v, f.r, f.skew);
    EXPECT_TRUE(all_pass(red.checks)) << first_failure(red.checks);
    EXPECT_EQ(red.xi, Scalar(1) - f.r.omega() * *v.chi / f.skew.trC);
    // agrees with the twist at z = 1/xi
    TwistedRep t = z_twist(v, Scalar(1) / red.xi, f.r, f.skew);
    EXPECT_EQ(t.rep.images, red.rep.images);

    ReducedRep rc = sl_reduce_rep(covector_rep(f.r, f.skew), f.r, f.skew);
    EXPECT_TRUE(all_pass(rc.checks)) << first_failure(rc.checks);
    EXPECT_THROW(sl_reduce_rep(adjoint_rep(bracket_for(f), f.ext), f.r, f.skew), Error);

    Fixture g = make(SymmetrySpec::flip(2));
    ReducedRep cl = sl_reduce_rep(vector_rep(g.r, g.skew), g.r, g.skew);
    EXPECT_EQ(cl.xi, Scalar(1));
    EXPECT_TRUE(all_pass(cl.checks));
    EXPECT_EQ(cl.rep.images[0], Matrix::from_rows({{Scalar(Rational(1, 2)), Scalar()}, {Scalar(), Scalar(Rational(-1, 2))}}));
}

TEST(SlReduction, SingularReduction) {
    Fixture f = make(SymmetrySpec::standard_a_series(2));
    GeneratorRep v = vector_rep(f.r, f.skew);
    Scalar chi = f.skew.trC / f.r.omega();
    for (std::size_t d = 0; d < 2; ++d) v.images[d * 2 + d] = Matrix::scalar(2, chi / f.skew.trC);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (i != j) v.images[i * 2 + j] = Matrix(2, 2);
    attach_chi(v, f.skew);
    ASSERT_EQ(v.chi, chi);
    try {
        sl_reduce_rep(v, f.r, f.skew);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("reduction singular"), std::string::npos);
    }
}
