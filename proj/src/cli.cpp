#include "riesz/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "riesz/balayage.hpp"
#include "riesz/classification.hpp"
#include "riesz/kernel_core.hpp"
#include "riesz/oracle.hpp"
#include "riesz/single_attractor.hpp"

namespace riesz::cli {

namespace {

using nlohmann::json;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// numeric JSON fields are rounded to 12 significant digits like all other output
double j12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* key : allowed)
            if (it.key() == key) { ok = true; break; }
        if (!ok) throw DomainError("config: unknown key '" + it.key() + "' in " + where);
    }
}

struct RunConfig {
    int d = 3;
    double s = 1.0;
    std::vector<ChargeConfig::Charge> charges;
    std::string task;
    // task options
    std::optional<std::string> out;
    double tol = 1e-6;
    std::uint64_t seed = 1;
    int n = 400;              // oracle particle count
    int grid = 200;           // density grid size
    int max_iters = 5000;
    int bins = 24;
    int interior = 20;
    int exterior = 5;
    double quantile = 0.99;
    int figure_id = 1;
    int points = 0;           // figure sample override, 0 = default

    json to_json() const;
    static RunConfig from_json(const json& j);
};

json RunConfig::to_json() const {
    json charges_json = json::array();
    for (const auto& c : charges) charges_json.push_back({{"gamma", c.gamma}, {"height", c.height}});
    json opts{{"tol", tol},       {"seed", seed},         {"n", n},
              {"grid", grid},     {"max_iters", max_iters}, {"bins", bins},
              {"interior", interior}, {"exterior", exterior}, {"quantile", quantile},
              {"figure_id", figure_id}, {"points", points}};
    if (out) opts["out"] = *out;
    return json{{"kernel", {{"d", d}, {"s", s}}},
                {"charges", charges_json},
                {"task", task},
                {"task_options", opts}};
}

RunConfig RunConfig::from_json(const json& j) {
    RunConfig cfg;
    reject_unknown_keys(j, {"kernel", "charges", "task", "task_options"}, "document root");
    if (j.contains("kernel")) {
        const auto& k = j.at("kernel");
        reject_unknown_keys(k, {"d", "s"}, "kernel");
        if (k.contains("d")) cfg.d = k.at("d").get<int>();
        if (k.contains("s")) cfg.s = k.at("s").get<double>();
    }
    if (j.contains("charges")) {
        for (const auto& c : j.at("charges")) {
            reject_unknown_keys(c, {"gamma", "height"}, "charges[]");
            cfg.charges.push_back({c.at("gamma").get<double>(), c.at("height").get<double>()});
        }
    }
    if (j.contains("task")) cfg.task = j.at("task").get<std::string>();
    if (j.contains("task_options")) {
        const auto& o = j.at("task_options");
        reject_unknown_keys(o,
                            {"out", "tol", "seed", "n", "grid", "max_iters", "bins", "interior",
                             "exterior", "quantile", "figure_id", "points"},
                            "task_options");
        if (o.contains("out")) cfg.out = o.at("out").get<std::string>();
        if (o.contains("tol")) cfg.tol = o.at("tol").get<double>();
        if (o.contains("seed")) cfg.seed = o.at("seed").get<std::uint64_t>();
        if (o.contains("n")) cfg.n = o.at("n").get<int>();
        if (o.contains("grid")) cfg.grid = o.at("grid").get<int>();
        if (o.contains("max_iters")) cfg.max_iters = o.at("max_iters").get<int>();
        if (o.contains("bins")) cfg.bins = o.at("bins").get<int>();
        if (o.contains("interior")) cfg.interior = o.at("interior").get<int>();
        if (o.contains("exterior")) cfg.exterior = o.at("exterior").get<int>();
        if (o.contains("quantile")) cfg.quantile = o.at("quantile").get<double>();
        if (o.contains("figure_id")) cfg.figure_id = o.at("figure_id").get<int>();
        if (o.contains("points")) cfg.points = o.at("points").get<int>();
    }
    return cfg;
}

ChargeConfig build_charge_config(const RunConfig& cfg) {
    return ChargeConfig(RieszKernel(cfg.d, cfg.s), cfg.charges);
}

void require_single_attractor(const RunConfig& cfg, const char* task) {
    if (cfg.charges.size() != 1)
        throw DomainError(std::string(task) + ": expects exactly one charge (--gamma/--height)");
}

class CsvWriter {
public:
    CsvWriter(const std::optional<std::string>& path, std::ostream& fallback)
        : fallback_(fallback) {
        if (path) {
            file_.open(*path);
            if (!file_) throw DomainError("cannot open output file: " + *path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

json classification_to_json(const ClassificationReport& report) {
    json j{{"verdict", verdict_name(report.verdict)},
           {"justification", report.justification},
           {"boundary_case", report.boundary_case}};
    if (report.total_charge) j["total_charge"] = j12(*report.total_charge);
    if (report.moment) j["height_moment"] = j12(*report.moment);
    if (report.pair_case) j["pair_case"] = pair_case_name(*report.pair_case);
    if (report.radius) j["radius"] = j12(*report.radius);
    if (report.threshold_lower) j["threshold_lower"] = j12(*report.threshold_lower);
    if (report.threshold_upper) j["threshold_upper"] = j12(*report.threshold_upper);
    return j;
}

int task_radius(const RunConfig& cfg, std::ostream& out) {
    require_single_attractor(cfg, "radius");
    RieszKernel kernel(cfg.d, cfg.s);
    const double R0 = solve_radius(kernel, cfg.charges[0].gamma, cfg.charges[0].height);
    out << "R0 = " << fmt12(R0) << "\n";
    return 0;
}

int task_density(const RunConfig& cfg, std::ostream& out) {
    require_single_attractor(cfg, "density");
    RieszKernel kernel(cfg.d, cfg.s);
    const double gamma = cfg.charges[0].gamma;
    const double h = cfg.charges[0].height;
    const double R0 = solve_radius(kernel, gamma, h);
    CsvWriter csv(cfg.out, out);
    csv.stream() << "r,density\n";
    for (int k = 0; k <= cfg.grid; ++k) {
        const double r = R0 * k / cfg.grid;
        csv.stream() << fmt12(r) << "," << fmt12(equilibrium_density(kernel, gamma, h, R0, r))
                     << "\n";
    }
    if (csv.to_file()) out << "R0 = " << fmt12(R0) << "\n";
    return 0;
}

int task_classify(const RunConfig& cfg, std::ostream& out) {
    ChargeConfig config = build_charge_config(cfg);
    ClassificationReport report = classify_config(config);
    json j = classification_to_json(report);
    // attractor-repellent pair: refine with the threshold analysis
    if (config.charges().size() == 2 && report.total_charge &&
        std::abs(*report.total_charge + 1.0) <= 1e-12) {
        const auto& cs = config.charges();
        int neg = cs[0].gamma < 0.0 ? 0 : 1;
        int pos = 1 - neg;
        if (cs[pos].gamma > 0.0) {
            ClassificationReport pair = classify_pair(config.kernel(), cs[pos].gamma,
                                                      cs[neg].height, cs[pos].height);
            j["pair_analysis"] = classification_to_json(pair);
            j["verdict"] = verdict_name(pair.verdict);
            j["justification"] = pair.justification;
        }
    }
    out << j.dump(2) << "\n";
    return 0;
}

int task_frostman(const RunConfig& cfg, std::ostream& out) {
    require_single_attractor(cfg, "frostman");
    RieszKernel kernel(cfg.d, cfg.s);
    ChargeConfig config = build_charge_config(cfg);
    EquilibriumSolution solution =
        solve_equilibrium(kernel, cfg.charges[0].gamma, cfg.charges[0].height);
    FrostmanReport report = verify_frostman(solution, config, cfg.interior, cfg.exterior);
    json j{{"support_radius", j12(solution.support_radius)},
           {"robin_constant", j12(report.robin)},
           {"mass_check", j12(solution.mass_check)},
           {"max_interior_deviation", j12(report.max_interior_deviation)},
           {"min_exterior_slack", j12(report.min_exterior_slack)},
           {"tol_equality", j12(report.tol_equality)},
           {"tol_inequality", j12(report.tol_inequality)},
           {"passed", report.passed()}};
    out << j.dump(2) << "\n";
    if (cfg.out) {
        std::ofstream f(*cfg.out);
        if (!f) throw DomainError("cannot open output file: " + *cfg.out);
        f << j.dump(2) << "\n";
    }
    return 0;
}

int task_oracle(const RunConfig& cfg, std::ostream& out) {
    ChargeConfig config = build_charge_config(cfg);
    ParticleSystem system = minimize_particles(config, cfg.n, cfg.seed, cfg.max_iters);
    const double radius = support_radius_estimate(system, cfg.quantile);
    json j{{"n", cfg.n},
           {"seed", cfg.seed},
           {"iterations", system.iteration_count},
           {"energy", j12(system.energy)},
           {"support_radius_estimate", j12(radius)},
           {"quantile", j12(cfg.quantile)}};
    out << j.dump(2) << "\n";
    if (cfg.out) {
        RadialProfile hist = radial_histogram(system, cfg.bins);
        std::ofstream f(*cfg.out);
        if (!f) throw DomainError("cannot open output file: " + *cfg.out);
        f << "r,density\n";
        for (std::size_t k = 0; k < hist.radii().size(); ++k)
            f << fmt12(hist.radii()[k]) << "," << fmt12(hist.values()[k]) << "\n";
    }
    return 0;
}

int task_figure(const RunConfig& cfg, std::ostream& out) {
    CsvWriter csv(cfg.out, out);
    std::ostream& os = csv.stream();
    const int id = cfg.figure_id;
    auto points = [&](int fallback) { return cfg.points > 0 ? cfg.points : fallback; };

    switch (id) {
        case 1: {
            RieszKernel kernel(3, 2.0);
            os << "# figure 1: support radius R0 vs attractor charge gamma (d=3, s=2, h=1)\n";
            os << "gamma,R0\n";
            const int n = points(180);
            for (int k = 0; k <= n; ++k) {
                const double gamma = -10.0 + (10.0 - 1.05) * k / n;
                os << fmt12(gamma) << "," << fmt12(solve_radius(kernel, gamma, 1.0)) << "\n";
            }
            break;
        }
        case 2: {
            RieszKernel kernel(3, 2.0);
            const double gamma = -5.0;
            const double R1 = solve_radius(kernel, gamma, 1.0);
            const double R2 = solve_radius(kernel, gamma, 2.0);
            os << "# figure 2: equilibrium density vs r (d=3, s=2, gamma=-5, h=1 and h=2)\n";
            os << "r,density_h1,density_h2\n";
            const int n = points(200);
            for (int k = 0; k <= n; ++k) {
                const double r = R2 * k / n;
                const double d1 = r <= R1 ? equilibrium_density(kernel, gamma, 1.0, R1, r) : 0.0;
                const double d2 = r <= R2 ? equilibrium_density(kernel, gamma, 2.0, R2, r) : 0.0;
                os << fmt12(r) << "," << fmt12(d1) << "," << fmt12(d2) << "\n";
            }
            break;
        }
        case 3:
        case 4: {
            RieszKernel kernel(2, 1.0);
            const double gamma = 1.0, h1 = 1.0, h2 = 3.0;
            const double lo = id == 3 ? 0.0 : 4.0;
            const double hi = 6.0;
            if (id == 3)
                os << "# figure 3: positive part of the pair signed-equilibrium density "
                      "(d=2, s=1, charges -2@1 and +1@3)\n";
            else
                os << "# figure 4: pair signed-equilibrium density near its vanishing radius "
                      "(d=2, s=1, charges -2@1 and +1@3)\n";
            os << (id == 3 ? "r,density_positive\n" : "r,density\n");
            const int n = points(id == 3 ? 300 : 200);
            for (int k = 0; k <= n; ++k) {
                const double r = lo + (hi - lo) * k / n;
                double v = pair_signed_density(kernel, gamma, h1, h2, r);
                if (id == 3) v = std::max(v, 0.0);
                os << fmt12(r) << "," << fmt12(v) << "\n";
            }
            break;
        }
        case 5: {
            RieszKernel kernel(3, 2.0);
            os << "# figure 5: sign-change radius of the pair signed density vs gamma "
                  "(h2=4) and vs h2 (gamma=1) (d=3, s=2, h1=1)\n";
            os << "sweep,value,R\n";
            const int n = points(120);
            for (int k = 0; k <= n; ++k) {
                const double gamma = 0.4 + (8.0 - 0.4) * k / n;
                os << "gamma," << fmt12(gamma) << ","
                   << fmt12(pair_exclusion_radius(kernel, gamma, 1.0, 4.0)) << "\n";
            }
            for (int k = 0; k <= n; ++k) {
                const double h2 = 2.2 + (10.0 - 2.2) * k / n;
                os << "h2," << fmt12(h2) << ","
                   << fmt12(pair_exclusion_radius(kernel, 1.0, 1.0, h2)) << "\n";
            }
            break;
        }
        case 6: {
            RieszKernel kernel(3, 2.0);
            os << "# figure 6: pair signed-equilibrium density vs r "
                  "(d=3, s=2, h1=1, h2=4, gamma=1 and gamma=3)\n";
            os << "r,density_gamma1,density_gamma3\n";
            const int n = points(300);
            for (int k = 0; k <= n; ++k) {
                const double r = 8.0 * k / n;
                os << fmt12(r) << "," << fmt12(pair_signed_density(kernel, 1.0, 1.0, 4.0, r))
                   << "," << fmt12(pair_signed_density(kernel, 3.0, 1.0, 4.0, r)) << "\n";
            }
            break;
        }
        default:
            throw DomainError("figure: id must be between 1 and 6");
    }
    if (csv.to_file()) out << "figure " << id << " written to " << *cfg.out << "\n";
    return 0;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.task == "radius") return task_radius(cfg, out);
    if (cfg.task == "density") return task_density(cfg, out);
    if (cfg.task == "classify") return task_classify(cfg, out);
    if (cfg.task == "frostman") return task_frostman(cfg, out);
    if (cfg.task == "oracle") return task_oracle(cfg, out);
    if (cfg.task == "figure") return task_figure(cfg, out);
    throw DomainError("unknown task: " + cfg.task);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weighted Riesz equilibrium measures on the hyperplane under point-charge "
                 "fields"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    std::string config_path;
    std::string charges_json;
    std::optional<double> gamma_flag, height_flag;
    std::optional<int> d_flag;
    std::optional<double> s_flag;
    std::optional<std::string> out_flag;
    std::optional<double> tol_flag;
    std::optional<std::uint64_t> seed_flag;
    std::optional<int> n_flag;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--d", d_flag, "conductor dimension d");
        sub->add_option("--s", s_flag, "kernel exponent s");
        sub->add_option("--gamma", gamma_flag, "single charge value");
        sub->add_option("--height", height_flag, "single charge height");
        sub->add_option("--charges", charges_json, "charges as JSON [{\"gamma\":..,\"height\":..}]");
        sub->add_option("--config", config_path, "JSON run configuration file");
        sub->add_option("--out", out_flag, "output file path");
        sub->add_option("--tol", tol_flag, "tolerance");
        sub->add_option("--seed", seed_flag, "random seed");
        sub->add_option("--n", n_flag, "particle count");
        return sub;
    };

    std::optional<int> grid_flag, iters_flag, bins_flag, interior_flag, exterior_flag,
        id_flag, points_flag;
    std::optional<double> quantile_flag;

    auto* sub_radius = add_common(app.add_subcommand("radius", "single-attractor support radius"));
    auto* sub_density = add_common(app.add_subcommand("density", "single-attractor density grid"));
    sub_density->add_option("--grid", grid_flag, "grid size");
    auto* sub_classify = add_common(app.add_subcommand("classify", "existence/compactness verdict"));
    auto* sub_frostman =
        add_common(app.add_subcommand("frostman", "variational-inequality verification"));
    sub_frostman->add_option("--interior", interior_flag, "interior sample count");
    sub_frostman->add_option("--exterior", exterior_flag, "exterior sample count");
    auto* sub_oracle = add_common(app.add_subcommand("oracle", "discrete particle minimization"));
    sub_oracle->add_option("--max-iters", iters_flag, "iteration cap");
    sub_oracle->add_option("--bins", bins_flag, "histogram bins");
    sub_oracle->add_option("--quantile", quantile_flag, "support radius quantile");
    auto* sub_figure = add_common(app.add_subcommand("figure", "figure-reproduction dataset"));
    sub_figure->add_option("--id", id_flag, "figure id 1..6");
    sub_figure->add_option("--points", points_flag, "sample count override");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string prog = "riesz";
    argv.push_back(prog.data());
    for (auto& a : storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        CLI::App* active = nullptr;
        for (CLI::App* sub : {sub_radius, sub_density, sub_classify, sub_frostman, sub_oracle,
                              sub_figure})
            if (sub->parsed()) active = sub;
        if (!active) {
            err << app.help() << std::flush;
            return 1;
        }

        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw DomainError("cannot open config file: " + config_path);
            json doc = json::parse(f);
            cfg = RunConfig::from_json(doc);
        }
        cfg.task = active->get_name();

        if (d_flag) cfg.d = *d_flag;
        if (s_flag) cfg.s = *s_flag;
        if (!charges_json.empty()) {
            cfg.charges.clear();
            json doc = json::parse(charges_json);
            for (const auto& c : doc) {
                reject_unknown_keys(c, {"gamma", "height"}, "--charges[]");
                cfg.charges.push_back({c.at("gamma").get<double>(), c.at("height").get<double>()});
            }
        }
        if (gamma_flag || height_flag) {
            if (!(gamma_flag && height_flag))
                throw DomainError("--gamma and --height must be given together");
            cfg.charges = {{*gamma_flag, *height_flag}};
        }
        if (out_flag) cfg.out = out_flag;
        if (tol_flag) cfg.tol = *tol_flag;
        if (seed_flag) cfg.seed = *seed_flag;
        if (n_flag) cfg.n = *n_flag;
        if (grid_flag) cfg.grid = *grid_flag;
        if (iters_flag) cfg.max_iters = *iters_flag;
        if (bins_flag) cfg.bins = *bins_flag;
        if (interior_flag) cfg.interior = *interior_flag;
        if (exterior_flag) cfg.exterior = *exterior_flag;
        if (quantile_flag) cfg.quantile = *quantile_flag;
        if (id_flag) cfg.figure_id = *id_flag;
        if (points_flag) cfg.points = *points_flag;

        if (cfg.charges.empty() && cfg.task != "figure")
            throw DomainError("no charges given (use --gamma/--height, --charges, or --config)");

        return dispatch(cfg, out);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help() << std::flush;
            return 0;
        }
        err << nlohmann::json{{"error", {{"type", "validation"}, {"message", e.what()}}}}.dump()
            << "\n";
        return 1;
    } catch (const NumericError& e) {
        err << nlohmann::json{{"error", {{"type", "numeric"}, {"message", e.what()}}}}.dump()
            << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << nlohmann::json{{"error", {{"type", "validation"}, {"message", e.what()}}}}.dump()
            << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << nlohmann::json{{"error", {{"type", "validation"}, {"message", e.what()}}}}.dump()
            << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << nlohmann::json{{"error", {{"type", "numeric"}, {"message", e.what()}}}}.dump()
            << "\n";
        return 2;
    }
}

} // namespace riesz::cli
