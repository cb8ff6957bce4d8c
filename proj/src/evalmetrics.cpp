#include "tslasso/evalmetrics.hpp"

#include "tslasso/estimators.hpp"
#include "tslasso/parallel.hpp"
#include "tslasso/tuning.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tslasso {

double mpse(std::span<const double> forecasts, std::span<const double> realized) {
    if (forecasts.size() != realized.size()) {
        throw LengthMismatch("forecasts and realizations differ in length");
    }
    if (forecasts.empty()) throw LengthMismatch("no forecasts to evaluate");
    std::vector<double> sq(forecasts.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
        const double e = realized[i] - forecasts[i];
        sq[i] = e * e;
    }
    return pairwise_sum(sq) / static_cast<double>(sq.size());
}

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

SelectionRates selection_rates(const IndexSet& truth_active, const IndexSet& estimated_active,
                               std::size_t p) {
    std::vector<char> truth(p, 0), est(p, 0);
    for (auto j : truth_active) {
        if (j >= p) throw DimensionMismatch("truth index out of range");
        truth[j] = 1;
    }
    for (auto j : estimated_active) {
        if (j >= p) throw DimensionMismatch("estimated index out of range");
        est[j] = 1;
    }
    std::size_t n_active = 0, hit = 0, n_inactive = 0, removed = 0, agree = 0;
    for (std::size_t j = 0; j < p; ++j) {
        if (truth[j]) {
            ++n_active;
            hit += est[j];
        } else {
            ++n_inactive;
            removed += !est[j];
        }
        agree += truth[j] == est[j];
    }
    SelectionRates r;
    r.sr1 = n_active == 0 ? 1.0 : static_cast<double>(hit) / static_cast<double>(n_active);
    r.sr2 = n_inactive == 0 ? 1.0 : static_cast<double>(removed) / static_cast<double>(n_inactive);
    r.sr = p == 0 ? 1.0 : static_cast<double>(agree) / static_cast<double>(p);
    return r;
}

Estimator make_estimator(Family family, double c_lambda, double gamma, LambdaScale scale) {
    Estimator e;
    e.name = to_string(family);
    switch (family) {
        case Family::Oracle:
            e.fit = [](const TimeSeriesDataset& train) { return oracle_fit(train); };
            break;
        case Family::OLS:
            e.fit = [](const TimeSeriesDataset& train) {
                return fit_family(LeastSquaresProblem(train, true), Family::OLS, 0.0);
            };
            break;
        default:
            e.fit = [family, c_lambda, gamma, scale](const TimeSeriesDataset& train) {
                const double lambda = tuned_lambda(c_lambda, train.n(), family, scale);
                return fit_family(LeastSquaresProblem(train, true), family, lambda, gamma);
            };
            break;
    }
    return e;
}

std::uint64_t replication_seed(std::uint64_t master_seed, Design design, std::size_t n,
                               std::size_t rep) {
    constexpr std::uint64_t kMonteCarloStream = 0x3c;
    return derive_seed(master_seed, {kMonteCarloStream, static_cast<std::uint64_t>(design),
                                     static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(rep)});
}

IndexSet inactive_coint_pair(const TruthInfo& truth) {
    for (Eigen::Index r = 0; r < truth.coint_matrix.rows(); ++r) {
        IndexSet cols;
        bool inactive = true;
        for (Eigen::Index c = 0; c < truth.coint_matrix.cols(); ++c) {
            if (truth.coint_matrix(r, c) == 0.0) continue;
            cols.push_back(static_cast<std::size_t>(c));
            if (truth.theta_star(c) != 0.0) inactive = false;
        }
        if (inactive && !cols.empty()) return cols;
    }
    return {};
}

PairOutcome classify_pair(const Vector& coefficients, const IndexSet& pair) {
    std::size_t zeros = 0;
    for (auto j : pair) zeros += coefficients(static_cast<Eigen::Index>(j)) == 0.0;
    if (zeros == pair.size()) return PairOutcome::BothZero;
    if (zeros == 0) return PairOutcome::NeitherZero;
    return PairOutcome::OneZero;
}

namespace {

struct RepRecord {
    bool ok = false;
    double sq_error = 0.0;
    SelectionRates rates;
    PairOutcome pair = PairOutcome::NeitherZero;
    std::string failure;
};

double mean_of(const std::vector<double>& v) {
    return v.empty() ? 0.0 : pairwise_sum(v) / static_cast<double>(v.size());
}

CellReport aggregate(Design design, std::size_t n, const std::string& name, std::size_t reps,
                     const std::vector<RepRecord>& records, bool has_pair) {
    CellReport cell;
    cell.design = design;
    cell.n = n;
    cell.estimator = name;
    cell.reps = reps;
    std::vector<double> se, sr, sr1, sr2, both, one, neither;
    for (std::size_t r = 0; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (!rec.ok) {
            cell.failures.push_back("rep " + std::to_string(r) + ": " + rec.failure);
            continue;
        }
        se.push_back(rec.sq_error);
        sr.push_back(rec.rates.sr);
        sr1.push_back(rec.rates.sr1);
        sr2.push_back(rec.rates.sr2);
        both.push_back(rec.pair == PairOutcome::BothZero ? 1.0 : 0.0);
        one.push_back(rec.pair == PairOutcome::OneZero ? 1.0 : 0.0);
        neither.push_back(rec.pair == PairOutcome::NeitherZero ? 1.0 : 0.0);
    }
    cell.effective_reps = se.size();
    cell.mpse = mean_of(se);
    if (se.size() > 1) {
        std::vector<double> dev(se.size());
        for (std::size_t i = 0; i < se.size(); ++i) dev[i] = (se[i] - cell.mpse) * (se[i] - cell.mpse);
        cell.mpse_se = std::sqrt(pairwise_sum(dev) / static_cast<double>(se.size() - 1) /
                                 static_cast<double>(se.size()));
    }
    cell.sr = mean_of(sr);
    cell.sr1 = mean_of(sr1);
    cell.sr2 = mean_of(sr2);
    if (has_pair && !se.empty()) {
        CointGroupReport c;
        c.reps = se.size();
        c.frac_both_zero = mean_of(both);
        c.frac_exactly_one_zero = mean_of(one);
        c.frac_neither_zero = mean_of(neither);
        cell.coint = c;
    }
    return cell;
}

}  // namespace

std::vector<CellReport> run_montecarlo(Design design, const std::vector<std::size_t>& n_list,
                                       const std::vector<Estimator>& estimators,
                                       const MonteCarloOptions& options) {
    if (options.reps < 1) throw InvalidArgument("Monte Carlo needs at least one replication");
    std::vector<CellReport> cells;
    const std::size_t k = estimators.size();
    for (std::size_t n : n_list) {
        std::vector<RepRecord> records(options.reps * k);
        bool has_pair = false;
        std::vector<char> pair_flag(options.reps, 0);
        parallel_for(options.reps, options.jobs, [&](std::size_t rep) {
            const auto full = simulate({design, n, replication_seed(options.master_seed, design, n, rep),
                                        kDefaultBurnIn});
            const auto train = head(full, n);
            const auto last = static_cast<Eigen::Index>(n);
            const Vector row = full.W.row(last).transpose();
            const double realized = full.y(last);
            const IndexSet pair = inactive_coint_pair(*full.truth);
            pair_flag[rep] = !pair.empty();
            for (std::size_t e = 0; e < k; ++e) {
                RepRecord& rec = records[rep * k + e];
                try {
                    const FitResult fit = estimators[e].fit(train);
                    const double err = realized - fit.predict(row);
                    rec.sq_error = err * err;
                    rec.rates = selection_rates(full.truth->active_set, fit.active_set, full.p());
                    if (!pair.empty()) rec.pair = classify_pair(fit.coefficients, pair);
                    rec.ok = true;
                } catch (const Error& ex) {
                    rec.failure = ex.what();
                }
            }
        });
        has_pair = std::any_of(pair_flag.begin(), pair_flag.end(), [](char c) { return c != 0; });
        for (std::size_t e = 0; e < k; ++e) {
            std::vector<RepRecord> mine(options.reps);
            for (std::size_t rep = 0; rep < options.reps; ++rep) mine[rep] = records[rep * k + e];
            cells.push_back(aggregate(design, n, estimators[e].name, options.reps, mine, has_pair));
        }
    }
    return cells;
}

CointGroupReport coint_group_screening(Design design, std::size_t n, const Estimator& estimator,
                                       std::size_t reps, std::uint64_t master_seed, unsigned jobs) {
    if (design == Design::DGP1) {
        throw InvalidArgument("cointegration-group screening needs DGP2 or DGP3");
    }
    const auto cells = run_montecarlo(design, {n}, {estimator}, {reps, master_seed, jobs});
    const auto& cell = cells.front();
    if (!cell.coint) throw AllCandidatesFailed("no replication produced a fit");
    return *cell.coint;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::string table2_csv(const std::vector<CellReport>& cells) {
    std::ostringstream out;
    out << "design,n,estimator,reps,effective_reps,mpse,mpse_se,sr,sr1,sr2\n";
    for (const auto& c : cells) {
        out << to_string(c.design) << ',' << c.n << ',' << c.estimator << ',' << c.reps << ','
            << c.effective_reps << ',' << fmt(c.mpse) << ',' << fmt(c.mpse_se) << ',' << fmt(c.sr)
            << ',' << fmt(c.sr1) << ',' << fmt(c.sr2) << '\n';
    }
    return out.str();
}

std::string table3_csv(const std::vector<CellReport>& cells) {
    std::ostringstream out;
    out << "design,n,estimator,effective_reps,both_zero,exactly_one_zero,neither_zero\n";
    for (const auto& c : cells) {
        if (!c.coint) continue;
        out << to_string(c.design) << ',' << c.n << ',' << c.estimator << ',' << c.coint->reps << ','
            << fmt(c.coint->frac_both_zero) << ',' << fmt(c.coint->frac_exactly_one_zero) << ','
            << fmt(c.coint->frac_neither_zero) << '\n';
    }
    return out.str();
}

std::string report_json(const std::vector<CellReport>& cells, const std::string& header_json) {
    nlohmann::ordered_json j;
    j["provenance"] = header_json.empty() ? nlohmann::ordered_json::object()
                                          : nlohmann::ordered_json::parse(header_json);
    j["note"] = "selection metrics exclude the intercept; column indices are 0-based";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : cells) {
        nlohmann::ordered_json cj;
        cj["design"] = to_string(c.design);
        cj["n"] = c.n;
        cj["estimator"] = c.estimator;
        cj["reps"] = c.reps;
        cj["effective_reps"] = c.effective_reps;
        cj["mpse"] = c.mpse;
        cj["mpse_se"] = c.mpse_se;
        cj["sr"] = c.sr;
        cj["sr1"] = c.sr1;
        cj["sr2"] = c.sr2;
        if (c.coint) {
            cj["coint_group"] = {{"both_zero", c.coint->frac_both_zero},
                                 {"exactly_one_zero", c.coint->frac_exactly_one_zero},
                                 {"neither_zero", c.coint->frac_neither_zero}};
        }
        cj["failures"] = c.failures;
        arr.push_back(cj);
    }
    j["cells"] = arr;
    return j.dump(2) + "\n";
}

}  // namespace tslasso
