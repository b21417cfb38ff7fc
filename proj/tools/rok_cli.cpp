// SPDX-License-Identifier: Apache-2.0
//
// rok — rearrangement / Orlicz / Kruglov calculus toolkit.
//
// Subcommands: norm, kruglov, construct (bk | xm-chain | from-a0),
// verify (first-orlicz | kws | rademacher | js | modified-ms | junge-pos |
// estimates | all), certify (p-convex | q-concave | equivalent).
// Exit codes: 0 ok, 2 malformed input, 3 precondition violation,
// 4 atom explosion.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rok/json_io.hpp"
#include "rok/kruglov.hpp"
#include "rok/verify.hpp"

namespace {

using rok::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw json::other_error::create(501, "cannot open input file: " + path, nullptr);
    json j;
    in >> j;
    return j;
}

std::ostream& output_stream(const std::string& out_path, std::ofstream& file) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw rok::PreconditionError("cannot open output file: " + out_path);
    return file;
}

// "lo:hi:n" -> n equally spaced points
std::vector<double> parse_grid(const std::string& spec) {
    double lo = 0.0, hi = 0.0;
    int n = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2)
        throw rok::PreconditionError("grid must be lo:hi:n with n >= 2");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return g;
}

struct Options {
    std::string input, law, phi, orlicz, orlicz2, a0, out, format = "json", charfn_grid;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
    int kmax = 20;
    int depth = 60;
    int grid_n = 64;
    double p = 1.0, q = 2.0, d = 2.0;
    bool mc = false;
};

int cmd_norm(const Options& opt) {
    const json j = load_json(opt.input);
    rok::require(j.contains("orlicz"), "norm input must contain \"orlicz\"");
    const rok::OrliczFunction m = rok::orlicz_from_json(j.at("orlicz"));
    double norm = 0.0;
    if (j.contains("sequence"))
        norm = rok::luxemburg_seq_norm(m, j.at("sequence").get<std::vector<double>>());
    else if (j.contains("plateaus"))
        norm = rok::luxemburg_fn_norm(m, rok::step_from_json(json{{"plateaus", j.at("plateaus")}}));
    else if (j.contains("step"))
        norm = rok::luxemburg_fn_norm(m, rok::step_from_json(j.at("step")));
    else
        throw rok::PreconditionError("norm input needs \"sequence\", \"plateaus\" or \"step\"");
    std::printf("%.12g\n", norm);
    return 0;
}

int cmd_kruglov(const Options& opt) {
    const rok::DiscreteDistribution law = rok::law_from_json(load_json(opt.law));
    const rok::KruglovResult kr = rok::kruglov_exact(law, opt.kmax);
    std::ofstream file;
    std::ostream& os = output_stream(opt.out, file);
    if (!opt.charfn_grid.empty() && opt.format == "csv") {
        os << "t,re,im\n";
        for (double t : parse_grid(opt.charfn_grid)) {
            const auto v = rok::kruglov_charfn(law, t);
            os << json(t).dump() << ',' << json(v.real()).dump() << ',' << json(v.imag()).dump()
               << '\n';
        }
        return 0;
    }
    json out{{"transform", rok::to_json(kr.mixture)}, {"tail_mass", kr.tail_mass}};
    if (!opt.charfn_grid.empty()) {
        json cf = json::array();
        for (double t : parse_grid(opt.charfn_grid)) {
            const auto v = rok::kruglov_charfn(law, t);
            cf.push_back({t, v.real(), v.imag()});
        }
        out["charfn"] = cf;
    }
    if (opt.mc) {
        const std::int64_t trials = opt.trials > 0 ? opt.trials : 100000;
        const rok::DiscreteDistribution emp = rok::kruglov_mc(law, opt.seed, trials);
        out["mc"] = {{"law", rok::to_json(emp)},
                     {"trials", trials},
                     {"seed", opt.seed},
                     {"ks_distance", rok::ks_distance(emp, kr.mixture)}};
    }
    os << out.dump(2) << '\n';
    return 0;
}

int cmd_construct_bk(const Options& opt) {
    const rok::QuasiConcaveFn phi = rok::quasiconcave_from_json(load_json(opt.phi));
    const rok::BkBuild built = rok::bk_build(phi, opt.d, opt.depth);
    const std::vector<double> grid = rok::log_grid(1e-6, 1.0, static_cast<std::size_t>(opt.grid_n));
    const rok::VerificationReport rep = rok::bk_verify(phi, built.x, opt.d, grid);
    std::ofstream file;
    std::ostream& os = output_stream(opt.out, file);
    if (opt.format == "csv") {  // plot-ready two-column table t, G(t)/phi(t)
        os << "t,ratio\n";
        for (double t : grid)
            os << json(t).dump() << ',' << json(rok::bk_g(built.x, opt.d, t) / phi(t)).dump() << '\n';
        return rep.pass ? 0 : 1;
    }
    os << json{{"t", built.seq.t},
               {"s", built.seq.s},
               {"u", built.seq.u},
               {"v", built.seq.v},
               {"finite_branch", built.seq.finite_branch},
               {"truncation_tail", built.seq.truncation_tail},
               {"x", rok::to_json(built.x)},
               {"band_report", rok::to_json(rep)}}
              .dump(2)
       << '\n';
    return rep.pass ? 0 : 1;
}

int cmd_construct_xm(const Options& opt) {
    const rok::OrliczFunction m = rok::orlicz_from_json(load_json(opt.orlicz));
    const int trials = opt.trials > 0 ? static_cast<int>(opt.trials) : 100;
    const rok::XmChain chain = rok::xm_chain(m, opt.p, opt.depth, trials, opt.seed);
    json mprime = json::array();
    for (double t : rok::log_grid(1e-6, 10.0, 64)) mprime.push_back({t, chain.m_prime(t)});
    std::ofstream file;
    std::ostream& os = output_stream(opt.out, file);
    os << json{{"x_M", rok::to_json(chain.bk.x)},
               {"finite_branch", chain.bk.seq.finite_branch},
               {"m_prime_points", mprime},
               {"band_report", rok::to_json(chain.report)}}
              .dump(2)
       << '\n';
    return chain.report.pass ? 0 : 1;
}

int cmd_construct_a0(const Options& opt) {
    const rok::DecreasingStep a0 = rok::step_from_json(load_json(opt.a0));
    const rok::OrliczFunction m = rok::orlicz_from_a0(a0, opt.p);
    json pts = json::array();
    for (double t : rok::log_grid(1e-6, 10.0, 64)) pts.push_back({t, m(t)});
    std::ofstream file;
    std::ostream& os = output_stream(opt.out, file);
    if (opt.format == "csv") {
        os << "t,M\n";
        for (const json& e : pts) os << e[0].dump() << ',' << e[1].dump() << '\n';
        return 0;
    }
    os << json{{"M_points", pts}}.dump(2) << '\n';
    return 0;
}

int cmd_verify(const std::string& suite, const Options& opt) {
    const std::vector<rok::VerificationReport> reports = rok::run_suite(suite, opt.seed, opt.trials);
    std::ofstream file;
    std::ostream& os = output_stream(opt.out, file);
    if (opt.format == "csv")
        rok::write_csv(reports, os);
    else
        rok::write_jsonl(reports, os);
    if (!opt.out.empty()) {  // aggregate CSV next to the JSONL report
        std::ofstream csv(opt.out + ".csv");
        rok::write_csv(reports, csv);
    }
    return rok::all_hard_checks_pass(reports) ? 0 : 1;
}

int cmd_certify(const std::string& kind, const Options& opt) {
    const rok::OrliczFunction m = rok::orlicz_from_json(load_json(opt.orlicz));
    const std::vector<double> grid = rok::default_cert_grid(static_cast<std::size_t>(
        std::max(opt.grid_n, 64)));
    if (kind == "p-convex") {
        std::printf("%.12g\n", rok::certify_p_convex(m, opt.p, grid));
        return 0;
    }
    if (kind == "q-concave") {
        std::printf("%.12g\n", rok::certify_q_concave(m, opt.q, grid));
        return 0;
    }
    const rok::OrliczFunction m2 = rok::orlicz_from_json(load_json(opt.orlicz2));
    const auto c = rok::equivalent_on_unit(m, m2, grid);
    if (c) {
        std::printf("%.12g\n", *c);
        return 0;
    }
    std::printf("failure\n");
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rearrangement / Orlicz / Kruglov calculus toolkit"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* norm = app.add_subcommand("norm", "Luxemburg norm of a sequence or step function");
    norm->add_option("--input", opt.input, "JSON with an Orlicz spec and the data")->required();

    CLI::App* kruglov = app.add_subcommand("kruglov", "exact Kruglov transform of a discrete law");
    kruglov->add_option("--law", opt.law, "JSON law {\"atoms\": ...}")->required();
    kruglov->add_option("--kmax", opt.kmax, "truncation order (default 20)");
    kruglov->add_flag("--mc", opt.mc, "add a Monte Carlo realization");
    kruglov->add_option("--trials", opt.trials, "MC trials");
    kruglov->add_option("--seed", opt.seed, "MC seed (default 0)");
    kruglov->add_option("--charfn", opt.charfn_grid, "characteristic function table, lo:hi:n");
    kruglov->add_option("--out", opt.out, "output path (default stdout)");
    kruglov->add_option("--format", opt.format, "json|csv");

    CLI::App* construct = app.add_subcommand("construct", "constructive chains");
    construct->require_subcommand(1);
    CLI::App* bk = construct->add_subcommand("bk", "quasi-concave -> step function");
    bk->add_option("--phi", opt.phi, "quasi-concave JSON spec")->required();
    bk->add_option("--d", opt.d, "exponent d > 1 (default 2)");
    bk->add_option("--depth", opt.depth, "dyadic depth (default 60)");
    bk->add_option("--grid", opt.grid_n, "verification grid size (default 64)");
    bk->add_option("--out", opt.out, "output path");
    bk->add_option("--format", opt.format, "json|csv");
    CLI::App* xm = construct->add_subcommand("xm-chain", "M -> (N_M, phi_M, x_M, M')");
    xm->add_option("--orlicz", opt.orlicz, "Orlicz JSON spec")->required();
    xm->add_option("--p", opt.p, "convexity index p in [1,2)")->required();
    xm->add_option("--depth", opt.depth, "dyadic depth (default 60)");
    xm->add_option("--trials", opt.trials, "band-check sample count (default 100)");
    xm->add_option("--seed", opt.seed, "sample seed");
    xm->add_option("--out", opt.out, "output path");
    CLI::App* a0 = construct->add_subcommand("from-a0", "Orlicz function of a length-1 step A0");
    a0->add_option("--a0", opt.a0, "step JSON spec")->required();
    a0->add_option("--p", opt.p, "index p in [1,2]")->required();
    a0->add_option("--out", opt.out, "output path");
    a0->add_option("--format", opt.format, "json|csv");

    CLI::App* verify = app.add_subcommand("verify", "inequality suites");
    std::string suite;
    verify
        ->add_option("suite", suite,
                     "first-orlicz|kws|rademacher|js|modified-ms|junge-pos|estimates|all")
        ->required();
    verify->add_option("--seed", opt.seed, "harness seed (default 0)");
    verify->add_option("--trials", opt.trials, "per-cell trials (suite default if omitted)");
    verify->add_option("--out", opt.out, "output path");
    verify->add_option("--format", opt.format, "json|csv");

    CLI::App* certify = app.add_subcommand("certify", "convexity/concavity certification");
    std::string kind;
    certify->add_option("kind", kind, "p-convex|q-concave|equivalent")->required();
    certify->add_option("--orlicz", opt.orlicz, "Orlicz JSON spec")->required();
    certify->add_option("--orlicz2", opt.orlicz2, "second spec (equivalent)");
    certify->add_option("--p", opt.p, "convexity index");
    certify->add_option("--q", opt.q, "concavity index");
    certify->add_option("--grid", opt.grid_n, "grid size (default 128)");

    try {
        app.parse(argc, argv);
        if (*norm) return cmd_norm(opt);
        if (*kruglov) return cmd_kruglov(opt);
        if (*construct) {
            if (construct->got_subcommand("bk")) return cmd_construct_bk(opt);
            if (construct->got_subcommand("xm-chain")) return cmd_construct_xm(opt);
            return cmd_construct_a0(opt);
        }
        if (*verify) return cmd_verify(suite, opt);
        if (*certify) {
            if (kind == "equivalent" && opt.orlicz2.empty())
                throw rok::PreconditionError("certify equivalent needs --orlicz2");
            if (kind != "p-convex" && kind != "q-concave" && kind != "equivalent")
                throw rok::PreconditionError("unknown certify kind: " + kind);
            return cmd_certify(kind, opt);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const rok::AtomExplosionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const rok::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
