#pragma once

#include "tslasso/core.hpp"
#include "tslasso/dgp.hpp"
#include "tslasso/tuning.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tslasso {

double mpse(std::span<const double> forecasts, std::span<const double> realized);

struct SelectionRates {
    double sr = 1.0;
    double sr1 = 1.0;
    double sr2 = 1.0;
};

// Success rates of zero/nonzero classification over columns 0..p-1; the
// intercept never enters.
SelectionRates selection_rates(const IndexSet& truth_active, const IndexSet& estimated_active,
                               std::size_t p);

// Outcome of the inactive cointegrated pair in one replication.
enum class PairOutcome { BothZero, OneZero, NeitherZero };

struct CointGroupReport {
    double frac_both_zero = 0.0;
    double frac_exactly_one_zero = 0.0;
    double frac_neither_zero = 0.0;
    std::size_t reps = 0;
};

struct Estimator {
    std::string name;
    std::function<FitResult(const TimeSeriesDataset& train)> fit;
};

// Penalized families take lambda = tuned_lambda(c_lambda, n_train, family, scale);
// OLS and Oracle ignore c_lambda.
Estimator make_estimator(Family family, double c_lambda = 1.0, double gamma = 1.0,
                         LambdaScale scale = LambdaScale::PerObservation);

struct CellReport {
    Design design = Design::DGP1;
    std::size_t n = 0;
    std::string estimator;
    std::size_t reps = 0;            // requested
    std::size_t effective_reps = 0;  // replications that produced a fit
    double mpse = 0.0;
    double mpse_se = 0.0;
    double sr = 0.0;
    double sr1 = 0.0;
    double sr2 = 0.0;
    std::optional<CointGroupReport> coint;  // designs with an inactive cointegrated pair
    std::vector<std::string> failures;
};

struct MonteCarloOptions {
    std::size_t reps = 500;
    std::uint64_t master_seed = 0;
    unsigned jobs = 1;
};

std::uint64_t replication_seed(std::uint64_t master_seed, Design design, std::size_t n, std::size_t rep);

// For each n: simulate n + 1 observations per replication, fit every
// estimator on the first n, forecast the last, and aggregate. All estimators
// in a replication see the same sample. Cells are ordered by (n, estimator).
std::vector<CellReport> run_montecarlo(Design design, const std::vector<std::size_t>& n_list,
                                       const std::vector<Estimator>& estimators,
                                       const MonteCarloOptions& options);

CointGroupReport coint_group_screening(Design design, std::size_t n, const Estimator& estimator,
                                       std::size_t reps, std::uint64_t master_seed, unsigned jobs = 1);

// Columns of the cointegrating relation whose true coefficients are all zero.
IndexSet inactive_coint_pair(const TruthInfo& truth);

PairOutcome classify_pair(const Vector& coefficients, const IndexSet& pair);

// Summation in a fixed binary-tree order.
double pairwise_sum(std::span<const double> values);

// Table-2 shaped CSV (MPSE and success rates) and Table-3 shaped CSV.
std::string table2_csv(const std::vector<CellReport>& cells);
std::string table3_csv(const std::vector<CellReport>& cells);
std::string report_json(const std::vector<CellReport>& cells, const std::string& header_json);

}  // namespace tslasso
