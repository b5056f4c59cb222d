#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "meso/config.hpp"
#include "meso/verify.hpp"

namespace {

using namespace meso;

constexpr const char* kVersion = "0.1.0";

void apply_cli_overrides(RunConfig& rc, const std::string& scenario, int grid, double dt,
                         double t_end, const std::string& out, const std::string& format,
                         const std::string& only, long long seed) {
    if (!scenario.empty()) rc.scenario = scenario;
    if (grid > 0) rc.grid = grid;
    if (dt > 0) rc.dt = dt;
    if (t_end > 0) rc.t_end = t_end;
    if (!out.empty()) rc.out_dir = out;
    if (!format.empty()) rc.format = format;
    if (!only.empty()) rc.only = only;
    if (seed >= 0) rc.seed = uint64_t(seed);
}

nlohmann::ordered_json manifest_for(const RunConfig& rc,
                                    const std::vector<std::pair<std::string, std::string>>& arts) {
    nlohmann::ordered_json j;
    j["tool"] = "mesolab";
    j["version"] = kVersion;
    nlohmann::ordered_json params;
    params["scenario"] = rc.scenario;
    params["a0"] = rc.a0;
    params["eps"] = rc.eps;
    params["seed"] = rc.seed;
    params["grid"] = rc.grid;
    params["t0"] = rc.t0;
    params["t_end"] = rc.t_end;
    params["dt"] = rc.dt;
    params["mu_T"] = rc.material.mu_T;
    params["mu_R"] = rc.material.mu_R;
    params["rho_T"] = rc.material.rho_T;
    params["rho_R"] = rc.material.rho_R;
    params["gamma_T"] = rc.material.gamma_T;
    params["gamma_R"] = rc.material.gamma_R;
    j["parameters"] = params;
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const auto& [name, content] : arts) {
        nlohmann::ordered_json f;
        f["file"] = name;
        f["bytes"] = content.size();
        f["fnv1a"] = fnv1a_hex(content);
        files.push_back(f);
    }
    j["artifacts"] = files;
    return j;
}

int cmd_run(const RunConfig& rc) {
    std::vector<std::pair<std::string, std::string>> artifacts;
    if (rc.scenario == "appendix-table") {
        auto rows = appendix_table(0.5, {0.25, 0.50, 0.75}, rc.material);
        artifacts.emplace_back("appendix_table.csv", appendix_table_csv(rows));
    } else if (rc.scenario == "example1" || rc.scenario == "example2" ||
               rc.scenario == "manufactured-random") {
        Grid g = Grid::square(rc.grid);
        CosseratState s0 = rc.scenario == "example1"
                               ? example1(g, rc.t0)
                               : rc.scenario == "example2"
                                     ? example2(g, rc.t0, rc.a0, rc.eps)
                                     : manufactured_random(g, rc.t0, rc.seed);
        int steps = int(std::llround((rc.t_end - rc.t0) / rc.dt));
        int stride = std::max(1, steps / 8);
        auto res = integrate_transport(s0, rc.dt, steps, rc.tol("transport", 1e-8), true, stride);
        if (rc.format == "csv" || rc.format == "both")
            artifacts.emplace_back("trajectory.csv", trajectory_csv(res.trajectory, rc.material));
        ResidualReport rep;
        rep.add("transport.dual_path", res.dual_path_gap, res.dual_path_gap,
                rc.tol("transport", 1e-8));
        artifacts.emplace_back("residuals.json", report_json(rep, "run residuals"));
        if (!rep.all_pass()) {
            for (const auto& name : rep.failing())
                std::cerr << "FAIL " << name << "\n";
            return 1;
        }
    } else if (rc.scenario == "wave1d") {
        auto res = dispersion_check(rc.material, 2.0 * 3.14159265358979323846, rc.grid > 0 ? 256 : 256,
                                    false);
        ResidualReport rep;
        rep.add("dispersion.speed_ratio_error",
                std::abs(res.measured_speed / res.predicted_speed - 1.0), 0.0,
                rc.tol("dispersion", 0.01));
        artifacts.emplace_back("residuals.json", report_json(rep, "wave1d"));
        if (!rep.all_pass()) return 1;
    } else {
        std::cerr << "unknown scenario: " << rc.scenario << "\n";
        return 2;
    }
    auto manifest = manifest_for(rc, artifacts);
    artifacts.emplace_back("manifest.json", manifest.dump(2) + "\n");
    for (const auto& [name, content] : artifacts)
        write_file(rc.out_dir + "/" + name, content);
    std::cout << "wrote " << artifacts.size() << " artifact(s) to " << rc.out_dir << "\n";
    return 0;
}

int cmd_verify(const RunConfig& rc, bool mutate) {
    VerifyOptions opt;
    opt.only = rc.only;
    opt.material = rc.material;
    opt.seed = rc.seed;
    opt.mutate = mutate;
    opt.tol = rc.tolerances;
    ResidualReport rep = run_verify(opt);
    std::string json = report_json(rep, "verify");
    write_file(rc.out_dir + "/verify.json", json);
    for (const auto& [name, c] : rep.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << name << "  inf=" << format_double(c.norm_inf);
        if (c.order) std::cout << "  order=" << format_double(*c.order);
        std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "verify: all checks passed\n" : "verify: FAILURES\n");
    return rep.all_pass() ? 0 : 1;
}

int cmd_convergence(const RunConfig& rc) {
    if (rc.resolutions.size() < 3) {
        std::cerr << "convergence: need at least 3 resolutions\n";
        return 2;
    }
    std::vector<ConvergenceRow> rows;
    bool ok = true;

    // Bianchi transport-consistency residual on the grid ladder
    {
        std::vector<double> ns;
        for (int n : rc.resolutions) {
            Grid g = Grid::square(n);
            CosseratState sa = manufactured_random(g, 0.25, rc.seed);
            CosseratState s = sa.sampled();
            Form dtT = sample(time_derivative(sa.torsion()), 0.25, 0);
            Form dtOm = sample(time_derivative(sa.curvature()), 0.25, 0);
            auto br = bianchi_residuals(s, dtT, dtOm);
            ns.push_back(std::max(linf(br.torsion_law, 0.25), linf(br.curvature_law, 0.25)));
        }
        auto ord = richardson_order(ns);
        for (std::size_t i = 0; i < ns.size(); ++i)
            rows.push_back({"bianchi", rc.resolutions[i], ns[i],
                            i + 1 < ns.size() ? format_double(std::log2(ns[i] / ns[i + 1]))
                                              : (ord ? format_double(*ord) : "n/a")});
        if (!ord || *ord < 1.8) ok = false;
    }

    // Noether identity residual in grid mode
    {
        std::vector<double> ns;
        for (int n : rc.resolutions) {
            Grid g = Grid::square(n);
            CosseratState sa = manufactured_random(g, 0.3, rc.seed + 1);
            ResidualReport rep = noether_translation_residual_grid(sa, rc.material, 0, 1.0);
            ns.push_back(rep.checks.at("noether.translation.grid").norm_inf);
        }
        auto ord = richardson_order(ns);
        for (std::size_t i = 0; i < ns.size(); ++i)
            rows.push_back({"noether", rc.resolutions[i], ns[i],
                            i + 1 < ns.size() ? format_double(std::log2(ns[i] / ns[i + 1]))
                                              : (ord ? format_double(*ord) : "n/a")});
        if (!ord || *ord < 1.8) ok = false;
    }

    // analytic-mode spot check: norms stay at rounding level on every grid
    {
        for (int n : rc.resolutions) {
            Grid g = Grid::square(n);
            auto br = bianchi_residuals(example1(g, 0.4));
            double v = std::max(linf(br.torsion_law, 0.4), linf(br.curvature_law, 0.4));
            rows.push_back({"bianchi_analytic", n, v, "exact"});
            if (v > 1e-8) ok = false;
        }
    }

    std::string csv = convergence_csv(rows);
    write_file(rc.out_dir + "/convergence.csv", csv);
    std::cout << csv;
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mesolab: defect-transport and configurational-force laboratory"};
    app.require_subcommand(1);

    std::string config_path, scenario, out, format, only;
    int grid = -1;
    double dt = -1, t_end = -1;
    long long seed = -1;
    bool mutate = false;
    std::map<std::string, double> tol_cli;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value configuration file");
        sub->add_option("--scenario", scenario,
                        "example1 | example2 | manufactured-random | wave1d | appendix-table");
        sub->add_option("--grid", grid, "points per axis")->check(CLI::PositiveNumber);
        sub->add_option("--dt", dt, "time step");
        sub->add_option("--t-end", t_end, "end time");
        sub->add_option("--out", out, "output directory");
        sub->add_option("--format", format, "csv | json | both");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--only", only, "check-name filter (substring)");
        for (const char* name : {"bianchi", "noether", "phi", "transport", "el", "dispersion",
                                 "energy", "appendix"})
            sub->add_option(std::string("--tol.") + name, tol_cli[name],
                            std::string("tolerance override for ") + name + " checks");
    };

    CLI::App* run = app.add_subcommand("run", "execute a scenario and dump artifacts");
    CLI::App* verify = app.add_subcommand("verify", "run the identity-check suite");
    CLI::App* conv = app.add_subcommand("convergence", "grid refinement study");
    add_common(run);
    add_common(verify);
    add_common(conv);
    verify->add_flag("--inject-sign-error", mutate, "mutation-test hook: flip a source sign");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        meso::RunConfig rc;
        if (!config_path.empty())
            rc = meso::RunConfig::from_config(meso::KeyValueConfig::parse_file(config_path));
        apply_cli_overrides(rc, scenario, grid, dt, t_end, out, format, only, seed);
        for (const auto& [k, v] : tol_cli)
            if (v != 0.0) rc.tolerances[k] = v;
        rc.validate();
        if (run->parsed()) return cmd_run(rc);
        if (verify->parsed()) return cmd_verify(rc, mutate);
        if (conv->parsed()) return cmd_convergence(rc);
    } catch (const meso::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
