#include "tslasso/tuning.hpp"

#include "tslasso/estimators.hpp"
#include "tslasso/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace tslasso {

const char* to_string(Selector s) {
    return s == Selector::CV ? "cv" : "bic";
}

const char* to_string(LambdaScale s) {
    return s == LambdaScale::PerObservation ? "per_observation" : "literal";
}

LambdaScale lambda_scale_from_string(const std::string& name) {
    if (name == "per_observation") return LambdaScale::PerObservation;
    if (name == "literal") return LambdaScale::Literal;
    throw InvalidArgument("unknown lambda scale: " + name);
}

double solver_lambda(double lambda_n, std::size_t n, LambdaScale scale) {
    return scale == LambdaScale::PerObservation ? 2.0 * static_cast<double>(n) * lambda_n : lambda_n;
}

double tuned_lambda(double c_lambda, std::size_t n, Family family, LambdaScale scale) {
    return solver_lambda(lambda_schedule(c_lambda, n, family), n, scale);
}

Schedule schedule_for(Family family) {
    switch (family) {
        case Family::Plasso:
        case Family::Slasso: return Schedule::SqrtN;
        case Family::Alasso:
        case Family::TAlasso: return Schedule::SqrtNOverLogLog;
        default: break;
    }
    throw InvalidArgument(std::string("no lambda schedule for ") + to_string(family));
}

double lambda_schedule(double c_lambda, std::size_t n, Schedule schedule) {
    if (!(c_lambda > 0.0) || !std::isfinite(c_lambda)) {
        throw InvalidArgument("c_lambda must be positive");
    }
    const double nn = static_cast<double>(n);
    if (schedule == Schedule::SqrtN) {
        if (n == 0) throw DomainError("sample size must be positive");
        return c_lambda * std::sqrt(nn);
    }
    if (nn <= std::exp(1.0)) throw DomainError("log(log(n)) is not positive for n = " + std::to_string(n));
    return c_lambda * std::sqrt(nn) / std::log(std::log(nn));
}

double lambda_schedule(double c_lambda, std::size_t n, Family family) {
    return lambda_schedule(c_lambda, n, schedule_for(family));
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    if (!(lo > 0.0) || !(hi >= lo) || points == 0) throw InvalidArgument("bad grid bounds");
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (std::size_t k = 0; k < points; ++k) {
        g[k] = std::pow(10.0, a + (b - a) * static_cast<double>(k) / static_cast<double>(points - 1));
    }
    return g;
}

std::vector<double> default_grid() {
    return log_grid(1e-5, 1.0, 30);
}

std::vector<std::pair<std::size_t, std::size_t>> fold_partition(std::size_t n, std::size_t folds) {
    if (folds < 2) throw InvalidArgument("need at least two folds");
    if (n < folds) throw InvalidArgument("fewer observations than folds");
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    const std::size_t base = n / folds;
    const std::size_t extra = n % folds;
    std::size_t start = 0;
    for (std::size_t k = 0; k < folds; ++k) {
        const std::size_t len = base + (k < extra ? 1 : 0);
        blocks.emplace_back(start, start + len);
        start += len;
    }
    return blocks;
}

namespace {

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw InvalidArgument("candidate grid is empty");
    for (double c : grid) {
        if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("grid values must be positive");
    }
}

// Lowest score wins; exact ties go to the larger candidate.
double pick(const std::vector<double>& grid, const std::vector<double>& scores) {
    std::size_t best = grid.size();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (std::isnan(scores[k])) continue;
        if (best == grid.size() || scores[k] < scores[best] ||
            (scores[k] == scores[best] && grid[k] > grid[best])) {
            best = k;
        }
    }
    if (best == grid.size()) throw AllCandidatesFailed("every tuning candidate failed");
    return grid[best];
}

}  // namespace

SelectionResult cv_select(const TimeSeriesDataset& data, Family family,
                          const std::vector<double>& grid, std::size_t folds, double gamma,
                          LambdaScale scale) {
    check_grid(grid);
    validate_shape(data);
    const std::size_t n = data.n();
    if (n < 3 * folds) throw InvalidArgument("cross-validation needs n >= 3 * folds");
    const auto blocks = fold_partition(n, folds);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::vector<double>> fold_mpse(grid.size(), std::vector<double>(folds, nan));
    SelectionResult result;

    for (std::size_t k = 0; k < folds; ++k) {
        const auto [lo, hi] = blocks[k];
        IndexSet train;
        train.reserve(n - (hi - lo));
        for (std::size_t i = 0; i < n; ++i) {
            if (i < lo || i >= hi) train.push_back(i);
        }
        const TimeSeriesDataset tr = select_rows(data, train);
        const LeastSquaresProblem problem(tr, true);
        for (std::size_t c = 0; c < grid.size(); ++c) {
            try {
                const double lambda = tuned_lambda(grid[c], train.size(), family, scale);
                const FitResult fit = fit_family(problem, family, lambda, gamma);
                double sse = 0.0;
                for (std::size_t i = lo; i < hi; ++i) {
                    const auto r = static_cast<Eigen::Index>(i);
                    const double e = data.y(r) - fit.predict(data.W.row(r).transpose());
                    sse += e * e;
                }
                fold_mpse[c][k] = sse / static_cast<double>(hi - lo);
            } catch (const Error& e) {
                result.failures.push_back("candidate " + std::to_string(grid[c]) + " fold " +
                                          std::to_string(k) + ": " + e.what());
            }
        }
    }

    result.scores.assign(grid.size(), nan);
    for (std::size_t c = 0; c < grid.size(); ++c) {
        double sum = 0.0;
        bool ok = true;
        for (double v : fold_mpse[c]) {
            if (std::isnan(v)) {
                ok = false;
                break;
            }
            sum += v;
        }
        if (ok) result.scores[c] = sum / static_cast<double>(folds);
    }
    result.c_lambda = pick(grid, result.scores);
    return result;
}

SelectionResult bic_select(const TimeSeriesDataset& data, Family family,
                           const std::vector<double>& grid, double gamma, LambdaScale scale) {
    check_grid(grid);
    validate_shape(data);
    const std::size_t n = data.n();
    const double nn = static_cast<double>(n);
    const LeastSquaresProblem problem(data, true);
    SelectionResult result;
    result.scores.assign(grid.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t c = 0; c < grid.size(); ++c) {
        try {
            const FitResult fit = fit_family(problem, family, tuned_lambda(grid[c], n, family, scale), gamma);
            const double rss = problem.rss(fit.coefficients);
            result.scores[c] =
                nn * std::log(rss / nn) + static_cast<double>(fit.active_set.size()) * std::log(nn);
        } catch (const Error& e) {
            result.failures.push_back("candidate " + std::to_string(grid[c]) + ": " + e.what());
        }
    }
    result.c_lambda = pick(grid, result.scores);
    return result;
}

double lower_median(std::vector<double> values) {
    if (values.empty()) throw InvalidArgument("median of an empty set");
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

std::uint64_t calibration_seed(std::uint64_t master_seed, Design design, std::size_t n,
                               std::size_t rep) {
    constexpr std::uint64_t kCalibrationStream = 0xca1b;
    return derive_seed(master_seed, {kCalibrationStream, static_cast<std::uint64_t>(design),
                                     static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(rep)});
}

CalibrationResult calibrate_clambda(Design design, Family family, std::uint64_t master_seed,
                                    const CalibrationOptions& options) {
    if (options.reps < 1) throw InvalidArgument("calibration needs at least one replication");
    CalibrationResult out;
    out.design = design;
    out.family = family;
    out.reps = options.reps;
    out.n = options.n;
    out.master_seed = master_seed;
    out.choices.assign(options.reps, 0.0);
    parallel_for(options.reps, options.jobs, [&](std::size_t rep) {
        const auto sample = head(
            simulate({design, options.n, calibration_seed(master_seed, design, options.n, rep),
                      kDefaultBurnIn}),
            options.n);
        out.choices[rep] = cv_select(sample, family, options.grid, options.folds, options.gamma, options.scale).c_lambda;
    });
    out.c_lambda = lower_median(out.choices);
    return out;
}

std::string calibration_to_json(const CalibrationResult& r) {
    nlohmann::ordered_json j;
    j["design"] = to_string(r.design);
    j["family"] = to_string(r.family);
    j["c_lambda"] = r.c_lambda;
    j["reps"] = r.reps;
    j["n"] = r.n;
    j["master_seed"] = r.master_seed;
    return j.dump(2) + "\n";
}

CalibrationResult calibration_from_json(const std::string& text) {
    CalibrationResult r;
    try {
        const auto j = nlohmann::json::parse(text);
        r.design = design_from_string(j.at("design").get<std::string>());
        r.family = family_from_string(j.at("family").get<std::string>());
        r.c_lambda = j.at("c_lambda").get<double>();
        r.reps = j.at("reps").get<std::size_t>();
        r.n = j.at("n").get<std::size_t>();
        r.master_seed = j.at("master_seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed calibration sidecar: ") + e.what());
    }
    return r;
}

}  // namespace tslasso
