#include "commands.hpp"

#include <tslasso/empirical.hpp>
#include <tslasso/estimators.hpp>
#include <tslasso/evalmetrics.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace tslasso::cli {

namespace {

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

std::uint64_t to_uint(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("not a non-negative integer: '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw UsageError("integer out of range: '" + s + "'");
    }
}

bool is_penalized(Family f) {
    return f == Family::Plasso || f == Family::Slasso || f == Family::Alasso || f == Family::TAlasso;
}

std::vector<double> parse_grid(const std::string& value) {
    if (value.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(trim(item));
        if (parts.size() != 3) throw UsageError("grid range must be lo:hi:points");
        const auto points = to_uint(parts[2]);
        try {
            return log_grid(to_double(parts[0]), to_double(parts[1]), points);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    std::vector<double> g;
    for (const auto& v : split_list(value)) {
        const double c = to_double(v);
        if (!(c > 0.0)) throw UsageError("grid values must be positive");
        g.push_back(c);
    }
    if (g.empty()) throw UsageError("grid is empty");
    return g;
}

void set_key(MonteCarloConfig& c, std::set<std::string>& seen, const std::string& key,
             const std::string& value) {
    if (!seen.insert(key).second) throw UsageError("duplicate key '" + key + "'");
    if (value.empty()) throw UsageError("empty value for '" + key + "'");
    if (key == "designs") {
        for (const auto& d : split_list(value)) {
            try {
                c.designs.push_back(design_from_string(d));
            } catch (const Error&) {
                throw UsageError("unknown design '" + d + "'");
            }
        }
    } else if (key == "n") {
        for (const auto& v : split_list(value)) {
            const auto n = to_uint(v);
            if (n < 40) throw UsageError("n must be at least 40");
            c.n_list.push_back(n);
        }
    } else if (key == "estimators") {
        for (const auto& e : split_list(value)) {
            try {
                family_from_string(e);
            } catch (const Error&) {
                throw UsageError("unknown estimator '" + e + "'");
            }
            c.estimators.push_back(e);
        }
    } else if (key == "reps") {
        c.reps = to_uint(value);
        if (c.reps < 1) throw UsageError("reps must be at least 1");
    } else if (key == "master_seed" || key == "seed") {
        c.master_seed = to_uint(value);
    } else if (key == "tuning") {
        if (value != "calibrate" && value != "fixed") {
            throw UsageError("tuning must be 'calibrate' or 'fixed'");
        }
        c.calibrate = value == "calibrate";
    } else if (key.rfind("c_lambda.", 0) == 0) {
        const double v = to_double(value);
        if (!(v > 0.0)) throw UsageError("c_lambda must be positive");
        c.c_lambda[key.substr(9)] = v;
    } else if (key == "calibration_reps") {
        c.calibration_reps = to_uint(value);
        if (c.calibration_reps < 1) throw UsageError("calibration_reps must be at least 1");
    } else if (key == "calibration_n") {
        c.calibration_n = to_uint(value);
        if (c.calibration_n < 40) throw UsageError("calibration_n must be at least 40");
    } else if (key == "grid") {
        c.grid = parse_grid(value);
    } else if (key == "folds") {
        c.folds = to_uint(value);
        if (c.folds < 2) throw UsageError("folds must be at least 2");
    } else if (key == "gamma") {
        c.gamma = to_double(value);
        if (!(c.gamma >= 1.0)) throw UsageError("gamma must be >= 1");
    } else if (key == "lambda_scale") {
        try {
            c.scale = lambda_scale_from_string(value);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    } else {
        throw UsageError("unknown key '" + key + "'");
    }
}

void finish_config(const MonteCarloConfig& c, const std::string& source) {
    if (c.designs.empty()) throw UsageError(source + ": missing key 'designs'");
    if (c.n_list.empty()) throw UsageError(source + ": missing key 'n'");
    if (c.estimators.empty()) throw UsageError(source + ": missing key 'estimators'");
    if (c.calibrate) return;
    for (auto d : c.designs) {
        for (const auto& e : c.estimators) {
            if (!is_penalized(family_from_string(e))) continue;
            if (!c.c_lambda.count(std::string(to_string(d)) + "." + e) && !c.c_lambda.count(e)) {
                throw UsageError(source + ": tuning = fixed needs c_lambda." + e);
            }
        }
    }
}

std::string json_value_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) {
            if (!s.empty()) s += ",";
            s += json_value_text(x);
        }
        return s;
    }
    if (v.is_number_unsigned() || v.is_number_integer()) return v.dump();
    if (v.is_number()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    throw UsageError("unsupported value " + v.dump());
}

}  // namespace

MonteCarloConfig parse_config(const std::string& text, const std::string& source) {
    MonteCarloConfig c;
    std::set<std::string> seen;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(source + ": invalid JSON: " + e.what());
        }
        auto apply = [&](const std::string& key, const nlohmann::json& v) {
            try {
                set_key(c, seen, key, json_value_text(v));
            } catch (const UsageError& e) {
                throw UsageError(source + ": field '" + key + "': " + e.what());
            }
        };
        for (const auto& [key, v] : j.items()) {
            if (key == "c_lambda" && v.is_object()) {
                for (const auto& [sub, w] : v.items()) {
                    if (w.is_object()) {
                        for (const auto& [fam, x] : w.items()) apply("c_lambda." + sub + "." + fam, x);
                    } else {
                        apply("c_lambda." + sub, w);
                    }
                }
            } else {
                apply(key, v);
            }
        }
    } else {
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            const std::string where = source + ":" + std::to_string(lineno);
            if (eq == std::string::npos) throw UsageError(where + ": expected 'key = value'");
            try {
                set_key(c, seen, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
            } catch (const UsageError& e) {
                throw UsageError(where + ": " + e.what());
            }
        }
    }
    finish_config(c, source);
    return c;
}

namespace {

struct Provenance {
    ojson doc;

    std::string csv_line() const { return "# provenance: " + doc.dump() + "\n"; }
};

// The recorded command line leaves out --jobs and output locations, neither
// of which affects any number written.
std::string recorded_command(int argc, const char* const* argv) {
    static const std::set<std::string> dropped = {"--jobs", "-j", "--out", "--out-dir"};
    std::string cmd = "tslasso";
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (dropped.count(a)) {
            ++i;
            continue;
        }
        const auto eq = a.find('=');
        if (eq != std::string::npos && dropped.count(a.substr(0, eq))) continue;
        cmd += " " + a;
    }
    return cmd;
}

Provenance make_provenance(int argc, const char* const* argv) {
    Provenance p;
    p.doc["tool"] = "tslasso";
    p.doc["version"] = kVersion;
    p.doc["command"] = recorded_command(argc, argv);
    return p;
}

void write_text(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

ojson grid_json(const std::vector<double>& grid) {
    ojson g;
    g["points"] = grid.size();
    g["lo"] = grid.front();
    g["hi"] = grid.back();
    return g;
}

// ---- simulate ------------------------------------------------------------

struct SimulateArgs {
    std::string design;
    std::size_t n = 200;
    std::uint64_t seed = 0;
    std::size_t burn_in = kDefaultBurnIn;
    std::string out;
};

int cmd_simulate(const SimulateArgs& a, const Provenance& prov, std::ostream& out) {
    const DgpSpec spec{design_from_string(a.design), a.n, a.seed, a.burn_in};
    const auto data = simulate(spec);
    Provenance p = prov;
    p.doc["seeds"] = {{"seed", a.seed}};
    std::ostringstream csv;
    csv << p.csv_line();
    write_dataset_csv(data, csv);
    ojson truth = ojson::parse(truth_to_json(data, spec));
    truth["provenance"] = p.doc;
    const std::string truth_path = a.out + ".truth.json";
    write_text(a.out, csv.str());
    write_text(truth_path, truth.dump(2) + "\n");
    out << "wrote " << a.out << " and " << truth_path << "\n";
    return 0;
}

// ---- calibrate -----------------------------------------------------------

struct CalibrateArgs {
    std::string design;
    std::string family;
    std::uint64_t seed = 0;
    std::size_t reps = 100;
    std::size_t n = 200;
    std::string grid;
    std::string scale = "per_observation";
    unsigned jobs = 1;
    std::string out;
};

int cmd_calibrate(const CalibrateArgs& a, const Provenance& prov, std::ostream& out) {
    const Family family = family_from_string(a.family);
    if (!is_penalized(family)) throw UsageError("calibration needs a penalized family");
    CalibrationOptions opt;
    opt.reps = a.reps;
    opt.n = a.n;
    if (!a.grid.empty()) opt.grid = parse_grid(a.grid);
    opt.scale = lambda_scale_from_string(a.scale);
    opt.jobs = a.jobs;
    const auto r = calibrate_clambda(design_from_string(a.design), family, a.seed, opt);
    ojson j = ojson::parse(calibration_to_json(r));
    Provenance p = prov;
    p.doc["seeds"] = {{"master_seed", a.seed}};
    p.doc["tuning"] = {{"lambda_scale", to_string(opt.scale)}, {"grid", grid_json(opt.grid)},
                       {"folds", opt.folds}};
    j["choices"] = r.choices;
    j["provenance"] = p.doc;
    write_text(a.out, j.dump(2) + "\n");
    out << a.design << " " << a.family << " c_lambda = " << r.c_lambda << "\n";
    return 0;
}

// ---- montecarlo ----------------------------------------------------------

int cmd_montecarlo(const std::string& config_path, const std::string& out_dir,
                   std::optional<std::uint64_t> seed, unsigned jobs, const Provenance& prov,
                   std::ostream& out, std::ostream& err) {
    MonteCarloConfig cfg = parse_config(read_text(config_path), config_path);
    if (seed) cfg.master_seed = *seed;

    ojson constants = ojson::object();
    ojson calibrations = ojson::array();
    std::vector<CellReport> cells;
    for (Design d : cfg.designs) {
        std::vector<Estimator> ests;
        for (const auto& name : cfg.estimators) {
            const Family f = family_from_string(name);
            double c = 1.0;
            if (is_penalized(f)) {
                if (cfg.calibrate) {
                    CalibrationOptions opt;
                    opt.reps = cfg.calibration_reps;
                    opt.n = cfg.calibration_n;
                    opt.grid = cfg.grid;
                    opt.folds = cfg.folds;
                    opt.gamma = cfg.gamma;
                    opt.scale = cfg.scale;
                    opt.jobs = jobs;
                    const auto r = calibrate_clambda(d, f, cfg.master_seed, opt);
                    c = r.c_lambda;
                    calibrations.push_back(ojson::parse(calibration_to_json(r)));
                } else {
                    const std::string key = std::string(to_string(d)) + "." + name;
                    c = cfg.c_lambda.count(key) ? cfg.c_lambda.at(key) : cfg.c_lambda.at(name);
                }
                constants[to_string(d)][name] = c;
            }
            ests.push_back(make_estimator(f, c, cfg.gamma, cfg.scale));
        }
        auto part = run_montecarlo(d, cfg.n_list, ests, {cfg.reps, cfg.master_seed, jobs});
        cells.insert(cells.end(), part.begin(), part.end());
    }

    Provenance p = prov;
    p.doc["seeds"] = {{"master_seed", cfg.master_seed}};
    ojson tuning;
    tuning["mode"] = cfg.calibrate ? "calibrate" : "fixed";
    tuning["lambda_scale"] = to_string(cfg.scale);
    tuning["c_lambda"] = constants;
    if (cfg.calibrate) {
        tuning["calibration_reps"] = cfg.calibration_reps;
        tuning["calibration_n"] = cfg.calibration_n;
        tuning["grid"] = grid_json(cfg.grid);
        tuning["folds"] = cfg.folds;
    }
    tuning["gamma"] = cfg.gamma;
    p.doc["tuning"] = tuning;
    p.doc["reps"] = cfg.reps;

    const fs::path dir(out_dir);
    write_text(dir / "table2.csv", p.csv_line() + table2_csv(cells));
    write_text(dir / "table3.csv", p.csv_line() + table3_csv(cells));
    write_text(dir / "report.json", report_json(cells, p.doc.dump()));
    if (cfg.calibrate && !calibrations.empty()) {
        ojson cal;
        cal["provenance"] = p.doc;
        cal["calibrations"] = calibrations;
        write_text(dir / "calibration.json", cal.dump(2) + "\n");
    }

    std::size_t dead = 0;
    for (const auto& c : cells) {
        if (c.effective_reps == 0) {
            ++dead;
            err << "cell " << to_string(c.design) << " n=" << c.n << " " << c.estimator
                << " failed in every replication";
            if (!c.failures.empty()) err << ": " << c.failures.front();
            err << "\n";
        }
    }
    out << "wrote " << cells.size() << " cells to " << out_dir << "\n";
    return dead == 0 ? 0 : 1;
}

// ---- forecast ------------------------------------------------------------

struct ForecastArgs {
    std::string panel;
    std::string horizons = "1/12,1/4,1/2,1,2,3";
    std::string windows = "120,180";
    std::string estimators = "rwwd,ols,plasso,slasso,alasso-bic,talasso-bic";
    std::string grid;
    std::string scale = "per_observation";
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::string out_dir;
};

int cmd_forecast(const ForecastArgs& a, const Provenance& prov, std::ostream& out,
                 std::ostream& err) {
    std::vector<int> horizons;
    for (const auto& h : split_list(a.horizons)) {
        try {
            horizons.push_back(horizon_months(h));
        } catch (const Error& e) {
            throw UsageError(std::string("--horizons: ") + e.what());
        }
    }
    std::vector<int> windows;
    for (const auto& w : split_list(a.windows)) {
        const auto v = to_uint(w);
        if (v < 24) throw UsageError("--windows: window must be at least 24 months");
        windows.push_back(static_cast<int>(v));
    }
    std::vector<ForecastMethod> methods;
    for (const auto& e : split_list(a.estimators)) {
        try {
            methods.push_back(forecast_method_from_string(e));
        } catch (const Error& ex) {
            throw UsageError(std::string("--estimators: ") + ex.what());
        }
    }
    if (horizons.empty() || windows.empty() || methods.empty()) {
        throw UsageError("horizons, windows and estimators must be nonempty");
    }
    RollingOptions opt;
    if (!a.grid.empty()) opt.grid = parse_grid(a.grid);
    opt.scale = lambda_scale_from_string(a.scale);
    opt.jobs = a.jobs;

    const ReturnPanel panel = load_panel(a.panel);

    std::vector<RollingResult> results;
    for (const auto& m : methods) {
        for (int w : windows) {
            for (int h : horizons) results.push_back(rolling_forecast(panel, {h, w}, m, opt));
        }
    }

    Provenance p = prov;
    p.doc["seeds"] = {{"seed", a.seed}};
    p.doc["tuning"] = {{"lambda_scale", to_string(opt.scale)}, {"grid", grid_json(opt.grid)},
                       {"folds", opt.folds}, {"gamma", opt.gamma}};
    p.doc["panel"] = {{"source", panel.source}, {"first", panel.dates.front()},
                      {"last", panel.dates.back()}, {"predictors", panel.names}};

    std::ostringstream metrics;
    metrics << p.csv_line() << "estimator,window_months,h,rmpse_x100,mpae_x100,forecasts,failures\n";
    ojson mj;
    mj["provenance"] = p.doc;
    auto arr = ojson::array();
    for (const auto& r : results) {
        metrics << r.method << ',' << r.horizon.window_months << ',' << horizon_label(r.horizon.months)
                << ',' << fmt6(r.rmpse_x100) << ',' << fmt6(r.mpae_x100) << ',' << r.forecasts.size()
                << ',' << r.failures.size() << '\n';
        ojson rj;
        rj["estimator"] = r.method;
        rj["window_months"] = r.horizon.window_months;
        rj["h"] = horizon_label(r.horizon.months);
        rj["rmpse_x100"] = r.rmpse_x100;
        rj["mpae_x100"] = r.mpae_x100;
        rj["forecasts"] = r.forecasts.size();
        rj["failures"] = r.failures;
        arr.push_back(rj);
    }
    mj["results"] = arr;

    // Table 4 layout: one row per (window, estimator, metric), one column per h.
    std::ostringstream table;
    table << p.csv_line() << "window_months,estimator,metric";
    for (int h : horizons) table << ",h=" << horizon_label(h);
    table << '\n';
    for (int w : windows) {
        for (const auto& m : methods) {
            for (const char* metric : {"rmpse_x100", "mpae_x100"}) {
                table << w << ',' << m.name << ',' << metric;
                for (int h : horizons) {
                    for (const auto& r : results) {
                        if (r.method == m.name && r.horizon.window_months == w && r.horizon.months == h) {
                            table << ',' << fmt6(metric[0] == 'r' ? r.rmpse_x100 : r.mpae_x100);
                        }
                    }
                }
                table << '\n';
            }
        }
    }

    std::ostringstream fc, coef;
    fc << p.csv_line();
    write_forecasts_csv(results, fc);
    coef << p.csv_line();
    write_coefficients_csv(results, panel, coef);

    const fs::path dir(a.out_dir);
    write_text(dir / "metrics.csv", metrics.str());
    write_text(dir / "table4.csv", table.str());
    write_text(dir / "metrics.json", mj.dump(2) + "\n");
    write_text(dir / "forecasts.csv", fc.str());
    write_text(dir / "coefficients.csv", coef.str());

    int status = 0;
    for (const auto& r : results) {
        if (r.forecasts.empty()) {
            err << r.method << " h=" << horizon_label(r.horizon.months) << " window "
                << r.horizon.window_months << ": no window produced a forecast\n";
            status = 1;
        }
    }
    out << "wrote " << results.size() << " result sets to " << a.out_dir << "\n";
    return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Penalized predictive regression with mixed-persistence regressors"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    const std::vector<std::string> design_names = {"dgp1", "dgp2", "dgp3"};

    SimulateArgs sim;
    auto* s = app.add_subcommand("simulate", "Simulate a Monte Carlo design to CSV plus a truth sidecar");
    s->add_option("--design", sim.design, "dgp1, dgp2 or dgp3")->required()->check(CLI::IsMember(design_names));
    s->add_option("--n", sim.n, "Estimation sample size (n + 1 rows are written)")->check(CLI::Range(20, 10000000));
    s->add_option("--seed", sim.seed, "Seed");
    s->add_option("--burn-in", sim.burn_in, "Burn-in for stationary components");
    s->add_option("--out", sim.out, "Output CSV path")->required();

    CalibrateArgs cal;
    auto* c = app.add_subcommand("calibrate", "Calibrate c_lambda by repeated cross-validation");
    c->add_option("--design", cal.design)->required()->check(CLI::IsMember(design_names));
    c->add_option("--family", cal.family)->required()->check(
        CLI::IsMember({"plasso", "slasso", "alasso", "talasso"}));
    c->add_option("--seed", cal.seed, "Master seed");
    c->add_option("--reps", cal.reps)->check(CLI::PositiveNumber);
    c->add_option("--n", cal.n)->check(CLI::Range(40, 10000000));
    c->add_option("--grid", cal.grid, "lo:hi:points or a comma list");
    c->add_option("--lambda-scale", cal.scale)->check(CLI::IsMember({"per_observation", "literal"}));
    c->add_option("--jobs,-j", cal.jobs)->check(CLI::PositiveNumber);
    c->add_option("--out", cal.out, "JSON sidecar path")->required();

    std::string config_path, mc_out;
    std::optional<std::uint64_t> mc_seed;
    unsigned mc_jobs = 1;
    auto* m = app.add_subcommand("montecarlo", "Run the Monte Carlo tables from a config file");
    m->add_option("--config", config_path)->required();
    m->add_option("--out-dir", mc_out)->required();
    m->add_option("--seed", mc_seed, "Overrides master_seed from the config");
    m->add_option("--jobs,-j", mc_jobs)->check(CLI::PositiveNumber);

    ForecastArgs fa;
    auto* f = app.add_subcommand("forecast", "Rolling-window return forecasts from a predictor panel");
    f->add_option("--panel", fa.panel)->required();
    f->add_option("--horizons", fa.horizons, "Comma list of h in years");
    f->add_option("--windows", fa.windows, "Comma list of window lengths in months");
    f->add_option("--estimators", fa.estimators, "Comma list: rwwd, ols, plasso, slasso, alasso, talasso, optional -cv/-bic suffix");
    f->add_option("--grid", fa.grid, "lo:hi:points or a comma list");
    f->add_option("--lambda-scale", fa.scale)->check(CLI::IsMember({"per_observation", "literal"}));
    f->add_option("--seed", fa.seed, "Recorded only; the pipeline draws no random numbers");
    f->add_option("--jobs,-j", fa.jobs)->check(CLI::PositiveNumber);
    f->add_option("--out-dir", fa.out_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    const Provenance prov = make_provenance(argc, argv);
    try {
        if (*s) return cmd_simulate(sim, prov, out);
        if (*c) return cmd_calibrate(cal, prov, out);
        if (*m) return cmd_montecarlo(config_path, mc_out, mc_seed, mc_jobs, prov, out, err);
        if (*f) return cmd_forecast(fa, prov, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace tslasso::cli
