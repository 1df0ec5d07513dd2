#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bs5/coeffs.hpp"
#include "bs5/hypergeom.hpp"
#include "bs5/ode5.hpp"
#include "bs5/sim.hpp"
#include "bs5/steady.hpp"
#include "bs5/validate.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

// Emits `body` to --out (or stdout) and a reproducibility manifest next to it
// (or to stderr when writing to stdout).
void emit(const std::string& out, const std::string& body, const nlohmann::json& manifest_cfg,
          const std::string& command) {
    nlohmann::json manifest;
    manifest["version"] = kVersion;
    manifest["command"] = command;
    manifest["config"] = manifest_cfg;
    if (out.empty()) {
        std::cout << body;
        std::cerr << manifest.dump(2) << "\n";
    } else {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot open output file: " + out);
        os << body;
        std::ofstream ms(out + ".manifest.json");
        ms << manifest.dump(2) << "\n";
    }
}

bs5::CoeffTable table_at(int k) {
    bs5::CoeffTable t = bs5::seed_table_k1();
    for (int i = 1; i < k; ++i) t = bs5::advance(t);
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Five-species Bak-Sneppen steady-state toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // coeffs
    auto* cmd_coeffs = app.add_subcommand("coeffs", "Emit the exact coefficient table for step k");
    int k = 1;
    std::string format = "csv", out;
    cmd_coeffs->add_option("--k", k, "step index")->required()->check(CLI::Range(1, 15))
        ->envname("BS5_K");
    cmd_coeffs->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))
        ->envname("BS5_FORMAT");
    cmd_coeffs->add_option("--out", out)->envname("BS5_OUT");

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "Integrate the fifth-order ODE and sample it");
    double ymin = 1e-3, tol = 1e-10;
    int points = 200;
    cmd_solve->add_option("--ymin", ymin)->check(CLI::Range(1e-4, 0.5))->envname("BS5_YMIN");
    cmd_solve->add_option("--tol", tol)->envname("BS5_TOL");
    cmd_solve->add_option("--points", points)->check(CLI::PositiveNumber);
    cmd_solve->add_option("--out", out)->envname("BS5_OUT");

    // marginal / cdf
    auto* cmd_marginal = app.add_subcommand("marginal", "Steady-state marginal density samples");
    auto* cmd_cdf = app.add_subcommand("cdf", "Steady-state marginal CDF samples");
    for (auto* c : {cmd_marginal, cmd_cdf}) {
        c->add_option("--points", points)->check(CLI::PositiveNumber);
        c->add_option("--ymin", ymin)->check(CLI::Range(1e-4, 0.5))->envname("BS5_YMIN");
        c->add_option("--out", out)->envname("BS5_OUT");
    }

    // hyperg eval
    auto* cmd_hyperg = app.add_subcommand("hyperg", "Hypergeometric building blocks");
    auto* cmd_heval = cmd_hyperg->add_subcommand("eval", "Evaluate F_{n,m} or a derivative");
    int hn = 2, hm = 1, hderiv = 0;
    double hx = 0.0;
    cmd_heval->add_option("--n", hn)->required();
    cmd_heval->add_option("--m", hm)->required();
    cmd_heval->add_option("--x", hx)->required();
    cmd_heval->add_option("--deriv", hderiv)->check(CLI::Range(0, 3));

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo simulation of the model");
    bs5::sim::SimConfig scfg;
    scfg.n_samples = 100000;
    long long kstep = -1;
    int bins = 50;
    std::string emit_mode = "histogram";
    cmd_sim->add_option("--n-species", scfg.n_species)->check(CLI::Range(3, 1000000))
        ->envname("BS5_N_SPECIES");
    cmd_sim->add_option("--samples", scfg.n_samples)->envname("BS5_SAMPLES");
    cmd_sim->add_option("--burn-in", scfg.burn_in)->envname("BS5_BURN_IN");
    cmd_sim->add_option("--thin", scfg.thinning)->envname("BS5_THIN");
    cmd_sim->add_option("--seed", scfg.seed)->envname("BS5_SEED");
    cmd_sim->add_option("--replicas", scfg.n_replicas)->envname("BS5_REPLICAS");
    cmd_sim->add_flag("--pool-sites", scfg.pool_sites);
    cmd_sim->add_option("--kstep", kstep, "run k-step mode instead of steady state");
    cmd_sim->add_option("--emit", emit_mode)->check(CLI::IsMember({"samples", "histogram"}));
    cmd_sim->add_option("--bins", bins)->check(CLI::PositiveNumber);
    cmd_sim->add_option("--out", out)->envname("BS5_OUT");

    // figure-data
    auto* cmd_fig = app.add_subcommand("figure-data", "Data behind the marginal-density figures");
    std::string which = "margdens";
    cmd_fig->add_option("--which", which)->check(CLI::IsMember({"margdens", "cdfcompare"}));
    cmd_fig->add_option("--points", points)->check(CLI::PositiveNumber);
    cmd_fig->add_option("--out", out)->envname("BS5_OUT");

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "Run the cross-validation suite");
    std::string level = "quick";
    unsigned long long vseed = 20260823ULL;
    cmd_validate->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))
        ->envname("BS5_LEVEL");
    cmd_validate->add_option("--seed", vseed)->envname("BS5_SEED");
    cmd_validate->add_option("--out", out)->envname("BS5_OUT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_coeffs) {
            const auto t = table_at(k);
            std::string body;
            if (format == "csv") {
                std::ostringstream os;
                bs5::write_csv(t, os);
                body = os.str();
            } else {
                body = bs5::to_json(t) + "\n";
            }
            emit(out, body, {{"k", k}, {"format", format}}, "coeffs");
        } else if (*cmd_solve) {
            bs5::ode::SolverConfig cfg;
            cfg.y_min = ymin;
            cfg.rel_tol = tol;
            const auto sol = bs5::ode::solve(cfg);
            std::ostringstream os;
            os.precision(15);
            os << "y,B1,B1p,B1pp\n";
            for (int p = 0; p <= points; ++p) {
                const double y = ymin + (1.0 - ymin) * p / points;
                os << y << "," << sol.eval(y, 0) << "," << sol.eval(y, 1) << ","
                   << sol.eval(y, 2) << "\n";
            }
            const auto& d = sol.diagnostics();
            emit(out, os.str(),
                 {{"ymin", ymin},
                  {"rel_tol", tol},
                  {"accepted_steps", d.accepted_steps},
                  {"rejected_steps", d.rejected_steps},
                  {"min_abs_c5", d.min_abs_c5},
                  {"c5_sign", d.c5_sign}},
                 "solve");
        } else if (*cmd_marginal || *cmd_cdf) {
            bs5::ode::SolverConfig cfg;
            cfg.y_min = ymin;
            const bs5::steady::SteadyModel model(cfg);
            const bool want_cdf = static_cast<bool>(*cmd_cdf);
            std::ostringstream os;
            os.precision(15);
            os << "x," << (want_cdf ? "cdf" : "pdf") << ",extrapolated\n";
            for (int p = 0; p <= points; ++p) {
                const double x = static_cast<double>(p) / points;
                const double v = want_cdf ? model.marginal_cdf(x) : model.marginal_pdf(x);
                os << x << "," << v << "," << (model.is_extrapolated(x) ? 1 : 0) << "\n";
            }
            emit(out, os.str(), {{"ymin", ymin}, {"points", points}},
                 want_cdf ? "cdf" : "marginal");
        } else if (*cmd_heval) {
            const double v = hderiv == 0 ? bs5::hyp::F(hn, hm, hx)
                                         : bs5::hyp::F_deriv(hn, hm, hx, hderiv);
            std::ostringstream os;
            os.precision(15);
            os << v << "\n";
            emit(out, os.str(), {{"n", hn}, {"m", hm}, {"x", hx}, {"deriv", hderiv}},
                 "hyperg eval");
        } else if (*cmd_sim) {
            const auto ecdf = kstep >= 0 ? bs5::sim::run_kstep(scfg, kstep)
                                         : bs5::sim::run_steady(scfg);
            std::ostringstream os;
            os.precision(15);
            if (emit_mode == "samples") {
                os << "sample\n";
                for (double s : ecdf.samples()) os << s << "\n";
            } else {
                os << "bin_left,bin_right,density\n";
                std::size_t idx = 0;
                for (int bin = 0; bin < bins; ++bin) {
                    const double lo = static_cast<double>(bin) / bins;
                    const double hi = static_cast<double>(bin + 1) / bins;
                    std::size_t count = 0;
                    while (idx < ecdf.size() &&
                           (ecdf.samples()[idx] < hi || bin == bins - 1)) {
                        ++count;
                        ++idx;
                    }
                    os << lo << "," << hi << ","
                       << static_cast<double>(count) * bins / static_cast<double>(ecdf.size())
                       << "\n";
                }
            }
            nlohmann::json m = {{"n_species", scfg.n_species},
                                {"seed", scfg.seed},
                                {"burn_in", scfg.burn_in},
                                {"thinning", scfg.thinning},
                                {"n_samples", scfg.n_samples},
                                {"n_replicas", scfg.n_replicas},
                                {"pool_sites", scfg.pool_sites},
                                {"mode", kstep >= 0 ? "kstep" : "steady"},
                                {"mean", ecdf.mean()},
                                {"collected", ecdf.size()}};
            if (kstep >= 0) m["k"] = kstep;
            if (kstep >= 1 && kstep <= 15) {
                const auto cdf = bs5::marginal_poly_k(table_at(static_cast<int>(kstep)))
                                     .antiderivative();
                m["ks_vs_exact_kstep_cdf"] =
                    ecdf.ks_distance([&](double x) { return cdf.eval(x); });
            } else if (kstep < 0 && scfg.n_species == 5) {
                const bs5::steady::SteadyModel model;
                m["ks_vs_marginal_cdf"] =
                    ecdf.ks_distance([&](double x) { return model.marginal_cdf(x); });
            }
            emit(out, os.str(), m, "simulate");
        } else if (*cmd_fig) {
            std::ostringstream os;
            os.precision(15);
            if (which == "margdens") {
                const bs5::steady::SteadyModel model;
                std::vector<bs5::Polynomial> polys;
                bs5::CoeffTable t = bs5::seed_table_k1();
                polys.push_back(bs5::marginal_poly_k(t));
                for (int kk = 2; kk <= 6; ++kk) {
                    t = bs5::advance(t);
                    polys.push_back(bs5::marginal_poly_k(t));
                }
                os << "x,k0,k1,k2,k3,k4,k5,k6,limit\n";
                for (int p = 0; p <= points; ++p) {
                    const double x = static_cast<double>(p) / points;
                    os << x << ",1";
                    for (const auto& poly : polys) os << "," << poly.eval(x);
                    os << "," << model.marginal_pdf(x) << "\n";
                }
            } else {
                const bs5::steady::SteadyModel model;
                os << "x,cdf5,conjectured\n";
                for (int p = 0; p <= points; ++p) {
                    const double x = static_cast<double>(p) / points;
                    os << x << "," << model.marginal_cdf(x) << ","
                       << bs5::steady::conjectured_cdf(x) << "\n";
                }
            }
            emit(out, os.str(), {{"which", which}, {"points", points}}, "figure-data");
        } else if (*cmd_validate) {
            const auto report = bs5::validate::run_validation(level == "full", vseed);
            emit(out, bs5::validate::report_to_json(report) + "\n",
                 {{"level", level}, {"seed", vseed}}, "validate");
            return report.all_pass() ? 0 : 1;
        } else if (*cmd_hyperg) {
            std::cerr << "hyperg requires the 'eval' subcommand\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
