#pragma once

#include "tslasso/core.hpp"

#include <optional>

namespace tslasso {

// OLS coefficients below this magnitude get an infinite adaptive weight.
inline constexpr double kZeroEps = 1e-10;

struct EstimatorOptions {
    bool include_intercept = true;
    SolverOptions solver;
};

FitResult plasso_fit(const TimeSeriesDataset& data, double lambda, const EstimatorOptions& opt = {});
FitResult slasso_fit(const TimeSeriesDataset& data, double lambda, const EstimatorOptions& opt = {});
FitResult alasso_fit(const TimeSeriesDataset& data, double lambda, double gamma = 1.0,
                     const EstimatorOptions& opt = {});

// Alasso, then OLS on the selected columns, then a second Alasso restricted
// to them. `stage2_lambda` overrides the shared lambda for the second stage.
FitResult talasso_fit(const TimeSeriesDataset& data, double lambda, double gamma = 1.0,
                      const EstimatorOptions& opt = {},
                      std::optional<double> stage2_lambda = std::nullopt);

FitResult oracle_fit(const TimeSeriesDataset& data, const EstimatorOptions& opt = {});

// Same estimators on a prepared problem, so repeated fits on one design
// (cross-validation grids) skip the centering and Gram work.
FitResult plasso_fit(const LeastSquaresProblem& problem, double lambda, const SolverOptions& s = {});
FitResult slasso_fit(const LeastSquaresProblem& problem, double lambda, const SolverOptions& s = {});
FitResult alasso_fit(const LeastSquaresProblem& problem, double lambda, double gamma,
                     const SolverOptions& s = {});
FitResult talasso_fit(const LeastSquaresProblem& problem, double lambda, double gamma,
                      const SolverOptions& s = {}, std::optional<double> stage2_lambda = std::nullopt);

// tau_j = |init_j|^-gamma, infinite where |init_j| < kZeroEps.
Vector adaptive_weights(const Vector& init, double gamma);

// Random walk with drift: the historical mean.
double rwwd_forecast(std::span<const double> window);

// Dispatches on a penalized family; OLS ignores lambda. Oracle is excluded
// because it needs truth labels.
FitResult fit_family(const LeastSquaresProblem& problem, Family family, double lambda,
                     double gamma = 1.0, const SolverOptions& s = {});

}  // namespace tslasso
