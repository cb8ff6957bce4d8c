#include "tslasso/estimators.hpp"

#include <limits>
#include <numeric>

namespace tslasso {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

FitResult zero_fit(const LeastSquaresProblem& problem) {
    FitResult fit;
    fit.coefficients = Vector::Zero(static_cast<Eigen::Index>(problem.p()));
    fit.intercept = problem.intercept_for(fit.coefficients);
    fit.objective = problem.rss(fit.coefficients);
    return fit;
}

void check_lambda(double lambda) {
    if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be nonnegative");
}

void check_gamma(double gamma) {
    if (!(gamma >= 1.0)) throw InvalidArgument("gamma must be >= 1");
}

}  // namespace

Vector adaptive_weights(const Vector& init, double gamma) {
    Vector tau(init.size());
    for (Eigen::Index j = 0; j < init.size(); ++j) {
        const double a = std::abs(init(j));
        tau(j) = a < kZeroEps ? kInf : std::pow(a, -gamma);
    }
    return tau;
}

FitResult plasso_fit(const LeastSquaresProblem& problem, double lambda, const SolverOptions& s) {
    check_lambda(lambda);
    return weighted_lasso_solve(problem, lambda, Vector::Ones(static_cast<Eigen::Index>(problem.p())), s);
}

FitResult slasso_fit(const LeastSquaresProblem& problem, double lambda, const SolverOptions& s) {
    check_lambda(lambda);
    const auto p = static_cast<Eigen::Index>(problem.p());
    Vector tau(p);
    std::vector<std::string> warnings;
    for (Eigen::Index j = 0; j < p; ++j) {
        tau(j) = sample_std(Vector(problem.X().col(j)));
        if (tau(j) == 0.0) {
            warnings.push_back("ConstantColumn: column " + std::to_string(j) + " is unpenalized");
        }
    }
    FitResult fit = weighted_lasso_solve(problem, lambda, tau, s);
    fit.warnings.insert(fit.warnings.end(), warnings.begin(), warnings.end());
    return fit;
}

FitResult alasso_fit(const LeastSquaresProblem& problem, double lambda, double gamma,
                     const SolverOptions& s) {
    check_lambda(lambda);
    check_gamma(gamma);
    IndexSet all(problem.p());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const FitResult init = ols_fit(problem, all);
    return weighted_lasso_solve(problem, lambda, adaptive_weights(init.coefficients, gamma), s);
}

FitResult talasso_fit(const LeastSquaresProblem& problem, double lambda, double gamma,
                      const SolverOptions& s, std::optional<double> stage2_lambda) {
    auto stage1 = std::make_shared<FitResult>(alasso_fit(problem, lambda, gamma, s));
    if (stage1->active_set.empty()) {
        FitResult fit = zero_fit(problem);
        fit.stage_detail = stage1;
        return fit;
    }
    const double lambda2 = stage2_lambda.value_or(lambda);
    check_lambda(lambda2);

    const FitResult post_ols = ols_fit(problem, stage1->active_set);
    Vector tau = Vector::Constant(static_cast<Eigen::Index>(problem.p()), kInf);
    const Vector post_tau = adaptive_weights(post_ols.coefficients, gamma);
    for (auto j : stage1->active_set) {
        tau(static_cast<Eigen::Index>(j)) = post_tau(static_cast<Eigen::Index>(j));
    }
    FitResult fit = weighted_lasso_solve(problem, lambda2, tau, s);
    fit.iterations += stage1->iterations;
    fit.converged = fit.converged && stage1->converged;
    fit.stage_detail = stage1;
    return fit;
}

FitResult fit_family(const LeastSquaresProblem& problem, Family family, double lambda, double gamma,
                     const SolverOptions& s) {
    switch (family) {
        case Family::Plasso: return plasso_fit(problem, lambda, s);
        case Family::Slasso: return slasso_fit(problem, lambda, s);
        case Family::Alasso: return alasso_fit(problem, lambda, gamma, s);
        case Family::TAlasso: return talasso_fit(problem, lambda, gamma, s);
        case Family::OLS: {
            IndexSet all(problem.p());
            std::iota(all.begin(), all.end(), std::size_t{0});
            return ols_fit(problem, all);
        }
        case Family::Oracle: break;
    }
    throw InvalidArgument("fit_family cannot dispatch the oracle estimator");
}

FitResult plasso_fit(const TimeSeriesDataset& data, double lambda, const EstimatorOptions& opt) {
    validate_shape(data);
    return plasso_fit(LeastSquaresProblem(data, opt.include_intercept), lambda, opt.solver);
}

FitResult slasso_fit(const TimeSeriesDataset& data, double lambda, const EstimatorOptions& opt) {
    validate_shape(data);
    return slasso_fit(LeastSquaresProblem(data, opt.include_intercept), lambda, opt.solver);
}

FitResult alasso_fit(const TimeSeriesDataset& data, double lambda, double gamma,
                     const EstimatorOptions& opt) {
    validate_shape(data);
    return alasso_fit(LeastSquaresProblem(data, opt.include_intercept), lambda, gamma, opt.solver);
}

FitResult talasso_fit(const TimeSeriesDataset& data, double lambda, double gamma,
                      const EstimatorOptions& opt, std::optional<double> stage2_lambda) {
    validate_shape(data);
    return talasso_fit(LeastSquaresProblem(data, opt.include_intercept), lambda, gamma, opt.solver,
                       stage2_lambda);
}

FitResult oracle_fit(const TimeSeriesDataset& data, const EstimatorOptions& opt) {
    if (!data.truth) throw MissingTruth();
    validate_shape(data);
    return ols_fit(LeastSquaresProblem(data, opt.include_intercept), data.truth->active_set);
}

double rwwd_forecast(std::span<const double> window) {
    if (window.empty()) throw EmptyWindow();
    return std::accumulate(window.begin(), window.end(), 0.0) / static_cast<double>(window.size());
}

}  // namespace tslasso
