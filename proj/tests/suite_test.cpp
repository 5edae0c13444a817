#include "qlab/errors.hpp"
#include "qlab/suite.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace qlab;

TEST(Serialize, SpecRoundTrip) {
    for (const SymmetrySpec& s : {SymmetrySpec::flip(3), SymmetrySpec::super_flip(2, 1), SymmetrySpec::standard_a_series(2)}) {
        SymmetrySpec back = spec_from_json(to_json(s));
        EXPECT_EQ(back.kind, s.kind);
        EXPECT_EQ(back.dim(), s.dim());
    }
    Braiding r = build_symmetry(SymmetrySpec::standard_a_series(2));
    SymmetrySpec e = spec_from_json(to_json(SymmetrySpec::explicit_matrix(r.matrix())));
    EXPECT_EQ(build_symmetry(e).matrix(), r.matrix());
}

TEST(Serialize, ParseExplicitText) {
    std::string text = R"({"kind": "explicit", "n": 2, "entries": [
      ["q", 0, 0, 0], [0, "q - q^-1", 1, 0], [0, 1, 0, 0], [0, 0, 0, "q"]]})";
    SymmetrySpec s = parse_spec(text);
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_EQ(build_symmetry(s).symmetry_class(), SymmetryClass::hecke);
}

TEST(Serialize, ParseErrorsCarryPosition) {
    try {
        parse_spec("{\"kind\": \"flip\",\n \"n\": }");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 2u);
    }
    try {
        parse_spec("{\"kind\": \"explicit\", \"n\": 1,\n \"entries\": [[\"q^\"]]}");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 2u);
        EXPECT_EQ(e.column, 15u);
        EXPECT_NE(std::string(e.what()).find("\"q^\""), std::string::npos);
    }
    EXPECT_THROW(parse_spec(R"({"kind": "weird", "n": 2})"), Error);
    EXPECT_THROW(parse_spec(R"({"kind": "explicit", "n": 2, "entries": [["1"]]})"), DimensionError);
}

TEST(Serialize, StructureConstantsFlip) {
    Json sc = structure_constants_json(classical_structure_constants(2), 2);
    // [l_0^1, l_1^0] = l_0^0 - l_1^1
    bool found = false;
    for (const auto& row : sc)
        if (row[0] == 0 && row[1] == 1 && row[2] == 1 && row[3] == 0 && row[4] == 0) found = row[5] == "1";
    EXPECT_TRUE(found);
}

TEST(Suite, Names) {
    for (const char* n : {"certify", "decompose", "mrea", "bracket", "sl", "pbw", "all"})
        EXPECT_STREQ(to_string(suite_from_string(n)), n);
    EXPECT_THROW(suite_from_string("everything"), Error);
}

TEST(Suite, CertifyOnlyAndRoundTrip) {
    SuiteConfig cfg;
    cfg.spec = SymmetrySpec::standard_a_series(2);
    cfg.suite = Suite::certify;
    cfg.timings = true;
    Report r = run_suite(cfg);
    EXPECT_FALSE(r.entries.empty());
    EXPECT_EQ(exit_code(r), 0);
    Report back = report_from_json(to_json(r));
    ASSERT_EQ(back.entries.size(), r.entries.size());
    EXPECT_EQ(to_json(back), to_json(r));
    std::string md = emit_markdown(r);
    EXPECT_NE(md.find("| # | stage | check | anchor | result | detail | ms |"), std::string::npos);
}

TEST(Suite, UncertifiedMatrix) {
    Matrix m = Matrix::identity(4);
    m(0, 0) = Scalar(2);
    SuiteConfig cfg;
    cfg.spec = SymmetrySpec::explicit_matrix(m);
    cfg.suite = Suite::certify;
    EXPECT_EQ(exit_code(run_suite(cfg)), 1);
    cfg.suite = Suite::all;
    Report r = run_suite(cfg);
    EXPECT_TRUE(r.error.has_value());
    EXPECT_EQ(exit_code(r), 2);
}

TEST(Suite, RefusesSlForZeroTrace) {
    SuiteConfig cfg;
    cfg.spec = SymmetrySpec::super_flip(1, 1);
    cfg.suite = Suite::sl;
    Report r = run_suite(cfg);
    EXPECT_EQ(exit_code(r), 0);
    bool refused = false;
    for (const auto& e : r.entries) refused |= e.check.value.find("sl-reduction unavailable") != std::string::npos;
    EXPECT_TRUE(refused);
}

TEST(Suite, DegreeCapFromEnv) {
    ::setenv("QLAB_DEGREE_CAP", "2", 1);
    EXPECT_EQ(degree_cap_from_env(), 2);
    ::setenv("QLAB_DEGREE_CAP", "x", 1);
    EXPECT_THROW(degree_cap_from_env(), Error);
    ::unsetenv("QLAB_DEGREE_CAP");
    EXPECT_EQ(degree_cap_from_env(), default_degree_cap);
}

TEST(Suite, EmptyReportMarkdown) {
    Report r;
    std::string md = emit_markdown(r);
    EXPECT_NE(md.find("0 total"), std::string::npos);
    EXPECT_EQ(exit_code(r), 0);
}
