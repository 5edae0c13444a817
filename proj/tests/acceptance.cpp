// Acceptance run: one line per criterion, nonzero exit if any fails.
// argv[1], when given, is the qlab executable used for the byte-identity run.

#include "qlab/errors.hpp"
#include "qlab/suite.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Base {
    std::string name;
    SymmetrySpec spec;
};

std::vector<Base> fleet() {
    return {{"flip(2)", SymmetrySpec::flip(2)},
            {"flip(3)", SymmetrySpec::flip(3)},
            {"super_flip(1,1)", SymmetrySpec::super_flip(1, 1)},
            {"super_flip(2,1)", SymmetrySpec::super_flip(2, 1)},
            {"standard_a_series(2)", SymmetrySpec::standard_a_series(2)},
            {"standard_a_series(3)", SymmetrySpec::standard_a_series(3)}};
}

struct Built {
    Braiding r;
    SkewInverseData skew;
    ExtendedBraiding ext;
    EndBraiding end;
};

Built build(const SymmetrySpec& s) {
    Braiding r = build_symmetry(s);
    SkewInverseData skew = bc_data(r, skew_inverse(r));
    ExtendedBraiding ext = extend_to_dual(r, skew);
    EndBraiding end = end_braiding(ext);
    return {r, skew, ext, end};
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string dims_str(const std::vector<std::size_t>& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + "]";
}

// Weyl dimension of the GL(N) irrep of shape p: prod (N + content) / hook
std::size_t classical_dim(const Partition& p, std::size_t n) {
    long long num = 1, den = 1;
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (int j = 0; j < p.parts[i]; ++j) {
            long long arm = p.parts[i] - j - 1, leg = 0;
            for (std::size_t k = i + 1; k < p.parts.size(); ++k) leg += p.parts[k] > j;
            num *= static_cast<long long>(n) + j - static_cast<long long>(i);
            den *= arm + leg + 1;
        }
    return num <= 0 ? 0 : static_cast<std::size_t>(num / den);
}

// first failing item, or empty
using Probe = std::function<std::string()>;

int failures = 0;

void report(int id, const std::string& what, const Probe& probe) {
    std::string why;
    try {
        why = probe();
    } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) ++failures;
    std::cout << "criterion " << id << ": " << (why.empty() ? "PASS" : "FAIL") << "  " << what;
    if (!why.empty()) std::cout << "  [" << why << "]";
    std::cout << std::endl;
}

std::string checks_fail(const std::string& where, const std::vector<CheckEntry>& cs) {
    std::string f = first_failure(cs);
    return f.empty() ? "" : where + ": " + f;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    report(1, "fleet certification (YBE, class, skew-inverse, trace identities, C B = q^{-2a} I) under 60 s", [] {
        auto t0 = Clock::now();
        for (const auto& b : fleet()) {
            Braiding r = build_symmetry(b.spec);
            Certificate c = certify_symmetry(r);
            if (!c.all_pass()) return b.name + ": " + first_failure(c.checks);
            SkewInverseData s = bc_data(r, skew_inverse(r));
            if (s.C * s.B != Matrix::scalar(r.dim(), Scalar::q_power(-2 * s.a))) return b.name + ": C B mismatch";
        }
        double t = seconds_since(t0);
        return t < 60 ? std::string() : "took " + std::to_string(t) + " s";
    });

    report(2, "projector banks k = 2, 3 (k = 4 for N = 2); standard_a_series(2) k = 3 gives 4 + 2 + 2 + 0", [] {
        for (const auto& b : fleet()) {
            Braiding r = build_symmetry(b.spec);
            bool even = b.spec.kind != SymmetrySpec::Kind::super_flip;
            for (int k = 2; k <= (r.dim() == 2 ? 4 : 3); ++k) {
                ProjectorBank bank = young_projectors(r, k);
                std::string f = checks_fail(b.name + " k=" + std::to_string(k), bank.checks);
                if (!f.empty()) return f;
                std::size_t total = 1, sum = 0;
                for (int i = 0; i < k; ++i) total *= r.dim();
                for (const auto& e : bank.entries) {
                    sum += e.rank;
                    if (even && e.rank != classical_dim(e.tableau.shape, r.dim()))
                        return b.name + " " + e.tableau.shape.str() + ": rank " + std::to_string(e.rank) +
                               " vs classical " + std::to_string(classical_dim(e.tableau.shape, r.dim()));
                }
                if (sum != total) return b.name + ": ranks sum to " + std::to_string(sum);
            }
        }
        std::vector<std::size_t> got;
        for (const auto& e : decompose(build_symmetry(SymmetrySpec::standard_a_series(2)), 3)) got.push_back(e.dim);
        std::vector<std::size_t> table = {4, 2, 2, 0};
        return got == table ? std::string() : "standard_a_series(2) k=3 dims " + dims_str(got);
    });

    report(3, "rho_1, rho_1*, rho_V(x)V*, rho_V(x)V and all projector restrictions satisfy the relations (Hecke fleet)", [] {
        for (const auto& b : fleet()) {
            Built x = build(b.spec);
            if (!x.r.is_hecke()) continue;
            GeneratorRep v = vector_rep(x.r, x.skew), c = covector_rep(x.r, x.skew);
            std::vector<GeneratorRep> reps = {v, c, tensor_rep(v, c, x.ext), tensor_power_rep(x.ext, 2)};
            for (int k = 2; k <= (x.r.dim() == 2 ? 4 : 3); ++k) {
                ProjectorBank bank = young_projectors(x.r, k);
                GeneratorRep big = tensor_power_rep(x.ext, k);
                for (const auto& e : bank.entries)
                    if (e.rank > 0) reps.push_back(restrict_rep(big, bank, e.tableau.shape, e.tableau.index));
            }
            for (const auto& rho : reps) {
                CheckEntry ce = check_representation(rho, x.r);
                if (!ce.pass) return b.name + " rho_" + rho.label + ": " + ce.witness;
            }
        }
        return std::string();
    });

    report(4, "adjoint action equals rho_V(x)V* entrywise for N = 2, 3", [] {
        for (const auto& b : fleet()) {
            Built x = build(b.spec);
            BracketData bd = bracket_tensor(x.r, q_projectors(x.ext, x.end));
            GeneratorRep ad = adjoint_rep(bd, x.ext);
            GeneratorRep tv = tensor_rep(vector_rep(x.r, x.skew), covector_rep(x.r, x.skew), x.ext);
            if (ad.images != tv.images) return b.name + ": images differ";
        }
        return std::string();
    });

    report(5, "q-skew, q-Jacobi and both invariance identities (Hecke fleet); q = 1 gives gl(N) structure constants", [] {
        for (const auto& b : fleet()) {
            Built x = build(b.spec);
            if (!x.r.is_hecke()) continue;
            BracketData bd = bracket_tensor(x.r, q_projectors(x.ext, x.end));
            std::string f = checks_fail(b.name, verify_bracket_axioms(bd, x.end));
            if (!f.empty()) return f;
            if (specialize(bd.bracket, Rational(1)) != classical_structure_constants(x.r.dim()))
                return b.name + ": q = 1 bracket differs from gl(N)";
        }
        return std::string();
    });

    report(6, "involutive axioms, Jacobi forms, Tr_R[,] = 0, sl closure, pairing, U(g) dims ([1,5,15,35] for flip(2))", [] {
        for (const auto& b : fleet()) {
            Built x = build(b.spec);
            if (x.r.is_hecke()) continue;
            InvolutiveReport ir = involutive_axioms_check(x.ext, x.end, 3);
            std::string f = checks_fail(b.name, ir.checks);
            if (!f.empty()) return f;
            if (b.spec.kind == SymmetrySpec::Kind::flip && x.r.dim() == 2 &&
                ir.enveloping.dims != std::vector<std::size_t>{1, 5, 15, 35})
                return b.name + ": U(g) dims " + dims_str(ir.enveloping.dims);
        }
        return std::string();
    });

    report(7, "flatness N = 2: mREA, REA and q = 1 classical algebra all [1,5,15,35] through degree 3, under 5 min", [] {
        auto t0 = Clock::now();
        Braiding r = build_symmetry(SymmetrySpec::standard_a_series(2));
        Braiding r1 = build_symmetry(SymmetrySpec::explicit_matrix(specialize(r.matrix(), Rational(1))));
        std::vector<std::size_t> want = {1, 5, 15, 35};
        std::vector<std::pair<std::string, RelationSet>> algebras = {
            {"mREA", relation_set(r)}, {"REA", relation_set(r, Scalar(0))}, {"classical", relation_set(r1)}};
        for (const auto& [name, rels] : algebras) {
            FilteredDims fd = filtered_dimension(rels, 3);
            if (fd.dims != want) return name + ": " + dims_str(fd.dims);
        }
        if (!same_span(relation_set(r1), classical_gl_relations(2))) return std::string("q = 1 algebra is not U(gl(2))");
        double t = seconds_since(t0);
        return t < 300 ? std::string() : "took " + std::to_string(t) + " s";
    });

    report(8, "sl pipeline: shift equivalence, l central, sl-adjoint identities, z-twists, reduction, Tr C = 0 refused, "
              "restricted q-Jacobi fails", [] {
        for (const auto& b : fleet()) {
            Built x = build(b.spec);
            BracketData bd = bracket_tensor(x.r, q_projectors(x.ext, x.end));
            GeneratorRep v = vector_rep(x.r, x.skew), c = covector_rep(x.r, x.skew);
            std::vector<GeneratorRep> reps = {v, c, tensor_rep(v, c, x.ext), tensor_power_rep(x.ext, 2),
                                              adjoint_rep(bd, x.ext)};
            std::string f = checks_fail(b.name, ell_center_check(relation_set(x.r), x.skew, reps));
            if (!f.empty()) return f;
            if (!x.skew.sl_available()) {
                try {
                    sl_present(x.r, x.skew);
                    return b.name + ": Tr C = 0 but sl_present succeeded";
                } catch (const Error& e) {
                    if (std::string(e.what()).find("sl-reduction unavailable") == std::string::npos)
                        return b.name + ": wrong refusal: " + e.what();
                }
                continue;
            }
            SlPresentation slp = sl_present(x.r, x.skew);
            f = checks_fail(b.name, slp.checks);
            if (!f.empty()) return f;
            SlAdjoint a = sl_adjoint_rep(x.r, bd, slp);
            if (!x.r.is_hecke()) continue;
            if (a.coincides_with_restricted_bracket) return b.name + ": sl-adjoint coincides with the restricted bracket";
            if (a.restricted_jacobi.pass) return b.name + ": restricted q-Jacobi unexpectedly holds";
            for (const auto& rho : reps) {
                for (const Scalar& z : {Scalar(1), Scalar::q(), Scalar(2)}) z_twist(rho, z, x.r, x.skew);
                if (!rho.chi) continue;
                ReducedRep red = sl_reduce_rep(rho, x.r, x.skew);
                f = checks_fail(b.name + " rho_" + rho.label, red.checks);
                if (!f.empty()) return f;
            }
        }
        return std::string();
    });

    report(9, "two runs of `qlab all` give byte-identical reports", [&cli] {
        SuiteConfig cfg;
        cfg.spec = SymmetrySpec::standard_a_series(2);
        cfg.suite = Suite::all;
        std::string a = emit_json(run_suite(cfg)), b = emit_json(run_suite(cfg));
        if (a != b) return std::string("in-process reports differ");
        if (cli.empty()) return std::string();
        auto dir = std::filesystem::temp_directory_path() / ("qlab_acceptance_" + std::to_string(Clock::now().time_since_epoch().count()));
        std::filesystem::create_directories(dir);
        std::string outs[2];
        for (int i = 0; i < 2; ++i) {
            auto out = dir / ("run" + std::to_string(i) + ".json");
            std::string cmd = "\"" + cli + "\" all --builtin standard_a_series --n 2 --out \"" + out.string() + "\"";
            int rc = std::system(cmd.c_str());
            if (rc != 0) return "qlab exited with status " + std::to_string(rc);
            outs[i] = read_file(out);
        }
        std::filesystem::remove_all(dir);
        if (outs[0] != outs[1]) return std::string("CLI reports differ");
        if (outs[0] != a) return std::string("CLI report differs from the in-process report");
        return std::string();
    });

    return failures == 0 ? 0 : 1;
}
