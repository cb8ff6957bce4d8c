#pragma once

#include "tslasso/core.hpp"
#include "tslasso/dgp.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tslasso {

enum class Schedule { SqrtN, SqrtNOverLogLog };
enum class Selector { CV, BIC };

// How a scheduled lambda_n reaches the solver, whose objective is
// |y - W theta|^2 + lambda * sum tau_j |theta_j|.
//   PerObservation: lambda_n belongs to the per-observation objective
//                   |y - W theta|^2 / (2n) + lambda_n * sum tau_j |theta_j|,
//                   so the solver receives 2 n lambda_n (glmnet convention).
//   Literal:        the solver receives lambda_n unchanged.
enum class LambdaScale { PerObservation, Literal };

const char* to_string(Selector s);
const char* to_string(LambdaScale s);
LambdaScale lambda_scale_from_string(const std::string& name);

double solver_lambda(double lambda_n, std::size_t n, LambdaScale scale);

// Plasso/Slasso use sqrt(n); Alasso/TAlasso use sqrt(n)/log(log(n)).
Schedule schedule_for(Family family);

struct TuningConfig {
    double c_lambda = 1.0;
    Schedule schedule = Schedule::SqrtN;
    std::vector<double> grid;
    std::size_t folds = 10;
    Selector selector = Selector::CV;
    LambdaScale scale = LambdaScale::PerObservation;
};

double lambda_schedule(double c_lambda, std::size_t n, Schedule schedule);
double lambda_schedule(double c_lambda, std::size_t n, Family family);

// 30 log-spaced points on [1e-5, 1].
std::vector<double> default_grid();
std::vector<double> log_grid(double lo, double hi, std::size_t points);

// Contiguous blocks [begin, end) covering 0..n-1 exactly once; sizes differ
// by at most one, larger blocks first.
std::vector<std::pair<std::size_t, std::size_t>> fold_partition(std::size_t n, std::size_t folds);

struct SelectionResult {
    double c_lambda = 0.0;
    std::vector<double> scores;   // per grid point; NaN where the candidate failed
    std::vector<std::string> failures;
};

// K-fold CV over consecutive blocks: each candidate is scored by the mean
// held-out MPSE, training on every other block with lambda scaled to the
// training length. Ties go to the larger candidate.
SelectionResult cv_select(const TimeSeriesDataset& data, Family family,
                          const std::vector<double>& grid, std::size_t folds = 10,
                          double gamma = 1.0, LambdaScale scale = LambdaScale::PerObservation);

// BIC(c) = n log(RSS/n) + |active| log n on the full sample.
SelectionResult bic_select(const TimeSeriesDataset& data, Family family,
                           const std::vector<double>& grid, double gamma = 1.0,
                           LambdaScale scale = LambdaScale::PerObservation);

// Solver lambda for tuning constant c on a sample of length n.
double tuned_lambda(double c_lambda, std::size_t n, Family family, LambdaScale scale);

// Lower median (element (k-1)/2 of the sorted values).
double lower_median(std::vector<double> values);

struct CalibrationResult {
    Design design = Design::DGP1;
    Family family = Family::Plasso;
    double c_lambda = 0.0;
    std::size_t reps = 0;
    std::size_t n = 0;
    std::uint64_t master_seed = 0;
    std::vector<double> choices;  // per replication, in replication order
};

struct CalibrationOptions {
    std::size_t reps = 100;
    std::size_t n = 200;
    std::vector<double> grid = default_grid();
    std::size_t folds = 10;
    double gamma = 1.0;
    LambdaScale scale = LambdaScale::PerObservation;
    unsigned jobs = 1;
};

// Median of per-replication CV choices over independent simulated samples.
CalibrationResult calibrate_clambda(Design design, Family family, std::uint64_t master_seed,
                                    const CalibrationOptions& options = {});

// Seed of calibration replication `rep`.
std::uint64_t calibration_seed(std::uint64_t master_seed, Design design, std::size_t n,
                               std::size_t rep);

std::string calibration_to_json(const CalibrationResult& result);
CalibrationResult calibration_from_json(const std::string& text);

}  // namespace tslasso
