#include "qlab/suite.hpp"

#include "qlab/anchors.hpp"
#include "qlab/errors.hpp"

#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>

namespace qlab {

const char* to_string(Suite s) {
    switch (s) {
    case Suite::certify: return "certify";
    case Suite::decompose: return "decompose";
    case Suite::mrea: return "mrea";
    case Suite::bracket: return "bracket";
    case Suite::sl: return "sl";
    case Suite::pbw: return "pbw";
    case Suite::all: return "all";
    }
    return "";
}

Suite suite_from_string(const std::string& name) {
    for (Suite s : {Suite::certify, Suite::decompose, Suite::mrea, Suite::bracket, Suite::sl, Suite::pbw, Suite::all})
        if (name == to_string(s)) return s;
    throw Error("unknown suite \"" + name + "\"");
}

int degree_cap_from_env() {
    const char* v = std::getenv("QLAB_DEGREE_CAP");
    if (!v || !*v) return default_degree_cap;
    char* end = nullptr;
    long x = std::strtol(v, &end, 10);
    if (*end != '\0' || x < 0 || x > 16) throw Error(std::string("QLAB_DEGREE_CAP must be an integer in [0, 16], got \"") + v + "\"");
    return static_cast<int>(x);
}

std::size_t Report::passed() const {
    std::size_t k = 0;
    for (const auto& e : entries) k += e.check.pass;
    return k;
}

std::size_t Report::failed() const { return entries.size() - passed(); }

int exit_code(const Report& r) {
    if (r.error) return 2;
    return r.failed() ? 1 : 0;
}

namespace {

std::string dims_str(const std::vector<std::size_t>& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + "]";
}

bool includes(Suite chosen, Suite stage) { return chosen == stage || chosen == Suite::all; }

class Runner {
public:
    Runner(const SuiteConfig& cfg, Report& rep) : cfg_(cfg), rep_(rep) {
        n_ = cfg.spec.dim();
        max_k_ = cfg.max_k > 0 ? cfg.max_k : (n_ == 2 ? 4 : 3);
        pbw_ = cfg.pbw_degree >= 0 ? cfg.pbw_degree : cfg.degree_cap;
    }

    void run() {
        if (max_k_ < 2 || max_k_ > 4) throw Error("k must lie in [2, 4]");
        if (pbw_ > cfg_.degree_cap)
            throw Error("pbw degree " + std::to_string(pbw_) + " exceeds the cap " + std::to_string(cfg_.degree_cap));
        if (!certify()) return;
        Suite s = cfg_.suite;
        if (includes(s, Suite::decompose)) decompose();
        if (includes(s, Suite::mrea)) mrea();
        if (includes(s, Suite::bracket)) bracket();
        if (includes(s, Suite::sl)) sl();
        if (includes(s, Suite::pbw)) pbw();
    }

    int max_k() const { return max_k_; }
    int pbw_degree() const { return pbw_; }

private:
    using Clock = std::chrono::steady_clock;

    // run f, which appends checks through add(); all of them get the elapsed time
    template <class F>
    void step(F&& f) {
        std::size_t first = rep_.entries.size();
        auto t0 = Clock::now();
        f();
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (cfg_.timings)
            for (std::size_t i = first; i < rep_.entries.size(); ++i) rep_.entries[i].wall_ms = ms;
    }

    void add(CheckEntry c) { rep_.entries.push_back({stage_, std::move(c), std::nullopt}); }
    void add(const std::vector<CheckEntry>& cs) {
        for (const auto& c : cs) add(c);
    }

    bool certify() {
        stage_ = "certify";
        Matrix raw;
        bool ok = true;
        step([&] {
            raw = cfg_.spec.kind == SymmetrySpec::Kind::explicit_matrix ? cfg_.spec.entries : build_symmetry(cfg_.spec).matrix();
            Certificate cert = certify_matrix(raw, n_);
            add(cert.checks);
            ok = cert.all_pass();
        });
        if (!ok) {
            if (cfg_.suite == Suite::certify) return false;
            throw CertificationError("braiding not certified", first_failure(collect()));
        }
        step([&] {
            r_ = build_symmetry(cfg_.spec);
            skew_ = bc_data(*r_, skew_inverse(*r_));
            rep_.data["braiding"] = {{"class", to_string(r_->symmetry_class())},
                                     {"a", skew_.a},
                                     {"trC", skew_.trC.str()},
                                     {"B", to_json(skew_.B)},
                                     {"C", to_json(skew_.C)}};
        });
        step([&] {
            ext_ = extend_to_dual(*r_, skew_);
            add(ext_->checks);
        });
        step([&] {
            end_ = end_braiding(*ext_);
            add(end_->checks);
        });
        return true;
    }

    std::vector<CheckEntry> collect() const {
        std::vector<CheckEntry> out;
        for (const auto& e : rep_.entries) out.push_back(e.check);
        return out;
    }

    const ProjectorBank& bank(int k) {
        auto it = banks_.find(k);
        if (it == banks_.end()) it = banks_.emplace(k, young_projectors(*r_, k)).first;
        return it->second;
    }

    // q_projectors checks are reported once, wherever they are first needed
    const QProjectors& qp() {
        if (!qp_) {
            qp_ = q_projectors(*ext_, *end_);
            add(qp_->checks);
            rep_.data["q_yang_baxter"] = qp_->q_ybe;
        }
        return *qp_;
    }

    const BracketData& bd() {
        if (!bd_) bd_ = bracket_tensor(*r_, qp());
        return *bd_;
    }

    const std::vector<GeneratorRep>& reps() {
        if (!reps_) {
            GeneratorRep v = vector_rep(*r_, skew_), c = covector_rep(*r_, skew_);
            reps_ = std::vector<GeneratorRep>{v,
                                              c,
                                              tensor_rep(v, c, *ext_),
                                              tensor_rep(c, v, *ext_),
                                              tensor_power_rep(*ext_, 2),
                                              tensor_rep(c, c, *ext_)};
        }
        return *reps_;
    }

    // ad, or nullopt when it differs from rho_V(x)V* (the failure is reported by the bracket stage)
    const std::optional<GeneratorRep>& ad() {
        if (!ad_tried_) {
            ad_tried_ = true;
            try {
                ad_ = adjoint_rep(bd(), *ext_);
            } catch (const CertificationError&) {
                throw;
            } catch (const Error& e) {
                ad_error_ = e.what();
            }
        }
        return ad_;
    }

    void decompose() {
        stage_ = "decompose";
        for (int k = 2; k <= max_k_; ++k)
            step([&] {
                const ProjectorBank& b = bank(k);
                add(b.checks);
                auto dec = qlab::decompose(b);
                rep_.data["decomposition"][std::to_string(k)] = to_json(dec);
                std::size_t total = 1, sum = 0;
                for (int i = 0; i < k; ++i) total *= n_;
                std::string v;
                for (const auto& e : dec) {
                    sum += e.dim;
                    v += (v.empty() ? "" : " ") + e.shape.str() + "_" + std::to_string(e.a) + ":" + std::to_string(e.dim);
                }
                CheckEntry c = check_true("V^(x)" + std::to_string(k) + " decomposes with dimensions summing to N^k",
                                          anchor::decomposition, sum == total,
                                          std::to_string(sum) + " != " + std::to_string(total));
                c.value = v;
                add(c);
            });
        step([&] { qp(); });
    }

    void representation_check(const GeneratorRep& rho, std::string_view anchor_tag) {
        CheckEntry c = check_representation(rho, *r_);
        c.anchor = anchor_tag;
        if (rho.chi) c.value = "chi = " + rho.chi->str();
        add(c);
    }

    void mrea() {
        stage_ = "mrea";
        step([&] {
            for (int h : {1, 0})
                for (CheckEntry c : relation_set(*r_, Scalar(h)).checks) {
                    c.name = "hbar = " + std::to_string(h) + ": " + c.name;
                    add(c);
                }
        });
        step([&] {
            const auto& rs = reps();
            representation_check(rs[0], anchor::vector_rep);
            representation_check(rs[1], anchor::covector_rep);
            for (std::size_t i = 2; i < rs.size(); ++i) representation_check(rs[i], anchor::tensor_rep);
            for (const auto& rho : rs) rep_.data["chi"][rho.label] = rho.chi ? Json(rho.chi->str()) : Json();
        });
        step([&] { add(bialgebra_maps(*r_).checks); });
        for (int k = 2; k <= std::min(max_k_, 3); ++k)
            step([&] {
                const ProjectorBank& b = bank(k);
                GeneratorRep big = tensor_power_rep(*ext_, k);
                for (const auto& e : b.entries) {
                    if (e.rank == 0) continue;
                    GeneratorRep sub = restrict_rep(big, b, e.tableau.shape, e.tableau.index);
                    representation_check(sub, anchor::restricted_rep);
                }
            });
    }

    void bracket() {
        stage_ = "bracket";
        step([&] {
            add(verify_bracket_axioms(bd(), *end_));
        });
        step([&] {
            ad();
            add(check_true("ad(l_i^j) = rho_V(x)V*(l_i^j)", anchor::adjoint, ad_.has_value(), ad_error_));
            const auto& rs = reps();
            add(check_bracket_in_rep(bd(), rs[0]));
            add(check_bracket_in_rep(bd(), rs[1]));
            if (ad_) add(check_bracket_in_rep(bd(), *ad_));
        });
        if (r_->is_hecke()) {
            step([&] {
                add(check_equal("bracket at q = 1 equals the gl(N) structure constants", anchor::q_bracket,
                                specialize(bd().bracket, Rational(1)), classical_structure_constants(n_)));
            });
        } else {
            step([&] {
                if (cfg_.spec.kind == SymmetrySpec::Kind::flip)
                    add(check_equal("bracket equals the gl(N) structure constants", anchor::q_bracket, bd().bracket,
                                    classical_structure_constants(n_)));
                InvolutiveReport ir = involutive_axioms_check(*ext_, *end_, pbw_);
                add(ir.checks);
                add(check_equal("commutator bracket equals the quantum bracket", anchor::lie_axioms, ir.bracket,
                                bd().bracket));
            });
        }
        if (cfg_.artifacts) rep_.artifacts["structure_constants"] = structure_constants_json(bd().bracket, n_);
    }

    void sl() {
        stage_ = "sl";
        if (!skew_.sl_available()) {
            CheckEntry c = check_true("sl-reduction refused for Tr C = 0", anchor::sl_reduction, true);
            c.value = "sl-reduction unavailable: Tr C = 0";
            add(c);
            rep_.data["sl"] = {{"available", false}};
            return;
        }
        bool hecke = r_->is_hecke();
        std::vector<GeneratorRep> all = reps();
        step([&] {
            if (ad()) all.push_back(*ad_);
            add(ell_center_check(relation_set(*r_), skew_, all));
        });
        std::optional<SlPresentation> slp;
        step([&] {
            slp = sl_present(*r_, skew_);
            add(slp->checks);
        });
        step([&] {
            try {
                SlAdjoint a = sl_adjoint_rep(*r_, bd(), *slp);
                add(a.checks);
                bool expect = !hecke;
                CheckEntry c = check_true(expect ? "sl-adjoint action coincides with the restricted bracket at omega = 0"
                                                 : "sl-adjoint action differs from the restricted bracket",
                                          anchor::sl_adjoint, a.coincides_with_restricted_bracket == expect,
                                          a.coincides_with_restricted_bracket ? "they coincide" : "they differ");
                c.value = a.coincides_with_restricted_bracket ? "coincides" : "differs";
                add(c);
                if (hecke) {
                    CheckEntry j = check_true("q-Jacobi fails for the restricted sl bracket (expected)", anchor::q_jacobi,
                                              !a.restricted_jacobi.pass, "the identity holds");
                    j.value = a.restricted_jacobi.witness;
                    add(j);
                } else {
                    CheckEntry j = a.restricted_jacobi;
                    j.name = "q-Jacobi holds for the restricted sl bracket at omega = 0";
                    add(j);
                }
            } catch (const CertificationError& e) {
                add(check_true("sl-adjoint identities", anchor::sl_adjoint, false, e.what()));
            }
        });
        Json xi = Json::object();
        if (hecke)
            step([&] {
                for (const auto& rho : all)
                    for (const Scalar& z : {Scalar(1), Scalar::q(), Scalar(2)}) {
                        std::string name = "z-twist of rho_" + rho.label + " at z = " + z.str();
                        try {
                            TwistedRep t = z_twist(rho, z, *r_, skew_);
                            CheckEntry c = check_true(name, anchor::z_twist, true);
                            if (t.rep.chi) c.value = "chi = " + t.rep.chi->str();
                            add(c);
                        } catch (const Error& e) {
                            add(check_true(name, anchor::z_twist, false, e.what()));
                        }
                    }
            });
        step([&] {
            for (const auto& rho : all) {
                if (!rho.chi) continue;
                std::string label = "rho_" + rho.label;
                try {
                    ReducedRep red = sl_reduce_rep(rho, *r_, skew_);
                    add(red.checks);
                    xi[rho.label] = red.xi.str();
                    if (hecke) {
                        TwistedRep t = z_twist(rho, Scalar(1) / red.xi, *r_, skew_);
                        add(check_true(label + " twisted at z = 1/xi equals the reduction", anchor::z_twist,
                                       t.rep.images == red.rep.images && t.rep.chi && t.rep.chi->is_zero(),
                                       "twist at 1/xi differs from the reduced images"));
                    }
                } catch (const Error& e) {
                    add(check_true("sl-reduction of " + label, anchor::sl_reduction, false, e.what()));
                }
            }
        });
        rep_.data["sl"] = {{"available", true}, {"trC", skew_.trC.str()}, {"xi", xi}};
        if (cfg_.artifacts) rep_.artifacts["sl_presentation"] = to_json(*slp);
    }

    void pbw() {
        stage_ = "pbw";
        int d = pbw_, cap = cfg_.degree_cap;
        step([&] {
            FilteredDims mrea = filtered_dimension(relation_set(*r_), d, cap);
            FilteredDims rea = filtered_dimension(relation_set(*r_, Scalar(0)), d, cap);
            Braiding r1 = build_symmetry(SymmetrySpec::explicit_matrix(specialize(r_->matrix(), Rational(1))));
            FilteredDims classical = filtered_dimension(relation_set(r1), d, cap);
            // symmetric model X (x) Y = R_End(X (x) Y) of the q = 1 braiding
            SkewInverseData s1 = bc_data(r1, skew_inverse(r1));
            EndBraiding e1 = end_braiding(extend_to_dual(r1, s1));
            RelationSet sym;
            sym.n = n_;
            sym.hbar = Scalar(0);
            sym.quadratic = (Matrix::identity(n_ * n_ * n_ * n_) - e1.matrix).transpose();
            sym.linear = Matrix(sym.quadratic.rows(), n_ * n_);
            FilteredDims model = filtered_dimension(sym, d, cap);
            auto entry = [&](const std::string& what, const FilteredDims& fd) {
                CheckEntry c = check_true(what + " filtered dimensions match the symmetric model", anchor::flatness,
                                          fd.dims == model.dims, dims_str(fd.dims) + " vs " + dims_str(model.dims));
                c.value = dims_str(fd.dims);
                add(c);
            };
            entry("mREA (hbar = 1)", mrea);
            entry("REA (hbar = 0)", rea);
            entry("q = 1 classical algebra", classical);
            rep_.data["filtered_dims"] = {{"degree", d},
                                          {"mrea", mrea.dims},
                                          {"rea", rea.dims},
                                          {"classical", classical.dims},
                                          {"symmetric", model.dims}};
        });
    }

    const SuiteConfig& cfg_;
    Report& rep_;
    std::size_t n_ = 0;
    int max_k_ = 3, pbw_ = default_degree_cap;
    std::string stage_;
    std::optional<Braiding> r_;
    SkewInverseData skew_;
    std::optional<ExtendedBraiding> ext_;
    std::optional<EndBraiding> end_;
    std::optional<QProjectors> qp_;
    std::optional<BracketData> bd_;
    std::map<int, ProjectorBank> banks_;
    std::optional<std::vector<GeneratorRep>> reps_;
    std::optional<GeneratorRep> ad_;
    bool ad_tried_ = false;
    std::string ad_error_;
};

}  // namespace

Report run_suite(const SuiteConfig& cfg) {
    Report rep;
    Runner run(cfg, rep);
    rep.input = {{"spec", to_json(cfg.spec)},
                 {"label", cfg.spec.label()},
                 {"suite", to_string(cfg.suite)},
                 {"max_k", run.max_k()},
                 {"pbw_degree", run.pbw_degree()},
                 {"degree_cap", cfg.degree_cap}};
    try {
        run.run();
        if (cfg.artifacts && rep.artifacts.is_null()) rep.artifacts = Json::object();
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    return rep;
}

Json to_json(const Report& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json j = to_json(e.check);
        j["stage"] = e.stage;
        if (e.wall_ms) j["wall_ms"] = *e.wall_ms;
        entries.push_back(std::move(j));
    }
    Json out = {{"tool", r.tool},
                {"version", r.version},
                {"input", r.input},
                {"entries", entries},
                {"data", r.data},
                {"summary", {{"total", r.entries.size()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
    if (!r.artifacts.is_null()) out["artifacts"] = r.artifacts;
    if (r.error) out["error"] = *r.error;
    return out;
}

Report report_from_json(const Json& j) {
    Report r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.input = j.at("input");
    r.data = j.value("data", Json::object());
    if (j.contains("artifacts")) r.artifacts = j.at("artifacts");
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    for (const auto& e : j.at("entries")) {
        ReportEntry re;
        re.stage = e.at("stage").get<std::string>();
        re.check = check_from_json(e);
        if (e.contains("wall_ms")) re.wall_ms = e.at("wall_ms").get<double>();
        r.entries.push_back(std::move(re));
    }
    return r;
}

std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

}  // namespace

std::string emit_markdown(const Report& r) {
    std::ostringstream os;
    os << "# qlab report\n\n";
    os << "- tool: " << r.tool << ' ' << r.version << '\n';
    if (r.input.contains("label")) os << "- braiding: " << r.input.at("label").get<std::string>() << '\n';
    if (r.input.contains("suite")) os << "- suite: " << r.input.at("suite").get<std::string>() << '\n';
    os << "- checks: " << r.entries.size() << " total, " << r.passed() << " passed, " << r.failed() << " failed\n";
    if (r.error) os << "- error: " << cell(*r.error) << '\n';
    os << '\n';
    bool timed = false;
    for (const auto& e : r.entries) timed |= e.wall_ms.has_value();
    os << "| # | stage | check | anchor | result | detail |" << (timed ? " ms |" : "") << '\n';
    os << "|---|---|---|---|---|---|" << (timed ? "---|" : "") << '\n';
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        const auto& e = r.entries[i];
        const std::string& detail = e.check.pass ? e.check.value : e.check.witness;
        os << "| " << i + 1 << " | " << e.stage << " | " << cell(e.check.name) << " | " << e.check.anchor << " | "
           << (e.check.pass ? "pass" : "FAIL") << " | " << cell(detail) << " |";
        if (timed) {
            std::ostringstream ms;
            ms.setf(std::ios::fixed);
            ms.precision(1);
            if (e.wall_ms) ms << *e.wall_ms;
            os << ' ' << ms.str() << " |";
        }
        os << '\n';
    }
    if (!r.data.empty()) {
        os << "\n## Data\n\n";
        for (const auto& [k, v] : r.data.items()) os << "- " << k << ": `" << v.dump() << "`\n";
    }
    return os.str();
}

}  // namespace qlab
