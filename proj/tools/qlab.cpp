#include "qlab/errors.hpp"
#include "qlab/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Options {
    std::string spec_path;
    std::string builtin;
    std::size_t n = 2;
    std::size_t m = 1;
    std::string out;
    std::string format = "json";
    int k = 0;
    int degree = -1;
    bool timings = false;
    bool artifacts = false;
};

qlab::SymmetrySpec make_spec(const Options& o) {
    if (!o.spec_path.empty() && !o.builtin.empty()) throw qlab::Error("--spec and --builtin are exclusive");
    if (!o.spec_path.empty()) {
        std::ifstream in(o.spec_path);
        if (!in) throw qlab::Error("cannot read " + o.spec_path);
        std::stringstream ss;
        ss << in.rdbuf();
        return qlab::parse_spec(ss.str());
    }
    if (o.builtin == "flip") return qlab::SymmetrySpec::flip(o.n);
    if (o.builtin == "super_flip") return qlab::SymmetrySpec::super_flip(o.m, o.n);
    if (o.builtin == "standard_a_series") return qlab::SymmetrySpec::standard_a_series(o.n);
    if (o.builtin.empty()) throw qlab::Error("one of --spec or --builtin is required");
    throw qlab::Error("unknown builtin \"" + o.builtin + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification workbench for braidings and modified reflection equation algebras"};
    app.set_version_flag("--version", std::string(qlab::tool_version));
    app.require_subcommand(1);
    Options o;
    std::string chosen;
    for (const char* name : {"certify", "decompose", "mrea", "bracket", "sl", "pbw", "all"}) {
        CLI::App* sub = app.add_subcommand(name, std::string("run the ") + name + " suite");
        sub->add_option("--spec", o.spec_path, "braiding spec file (JSON)");
        sub->add_option("--builtin", o.builtin, "flip, super_flip or standard_a_series");
        sub->add_option("--n", o.n, "dim V, or the odd part of a super flip");
        sub->add_option("--m", o.m, "even part of a super flip");
        sub->add_option("--out", o.out, "write the report here instead of stdout");
        sub->add_option("--format", o.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
        sub->add_option("--k", o.k, "largest tensor degree for projector banks (2..4)");
        sub->add_option("--degree", o.degree, "filtered-dimension degree (default: the cap)");
        sub->add_flag("--timings", o.timings, "record wall time per check");
        sub->add_flag("--artifacts", o.artifacts, "include representations, structure constants and sl presentation");
        sub->callback([&chosen, name] { chosen = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    qlab::Report report;
    try {
        qlab::SuiteConfig cfg;
        cfg.spec = make_spec(o);
        cfg.suite = qlab::suite_from_string(chosen);
        cfg.max_k = o.k;
        cfg.pbw_degree = o.degree;
        cfg.degree_cap = qlab::degree_cap_from_env();
        cfg.timings = o.timings;
        cfg.artifacts = o.artifacts;
        report = qlab::run_suite(cfg);
    } catch (const std::exception& e) {
        std::cerr << "qlab: " << e.what() << '\n';
        return 2;
    }

    std::string text = o.format == "markdown" ? qlab::emit_markdown(report) : qlab::emit_json(report);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        f << text;
        if (!f) {
            std::cerr << "qlab: cannot write " << o.out << '\n';
            return 2;
        }
    }
    if (report.error) std::cerr << "qlab: " << *report.error << '\n';
    return qlab::exit_code(report);
}
