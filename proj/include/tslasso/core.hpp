#pragma once

#include "tslasso/dataset.hpp"
#include "tslasso/errors.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace tslasso {

enum class Family { Plasso, Slasso, Alasso, TAlasso, OLS, Oracle };

const char* to_string(Family f);
Family family_from_string(const std::string& name);

struct PenaltySpec {
    Family family = Family::Plasso;
    double lambda = 0.0;
    Vector weights;  // +infinity forces the coefficient to zero
    double gamma = 1.0;
};

struct FitResult {
    Vector coefficients;
    double intercept = 0.0;
    IndexSet active_set;
    double objective = 0.0;
    long iterations = 0;
    bool converged = true;
    std::shared_ptr<const FitResult> stage_detail;  // TAlasso stage 1
    std::vector<std::string> warnings;

    double predict(const Eigen::Ref<const Vector>& row) const {
        return intercept + row.dot(coefficients);
    }
};

struct SolverOptions {
    double tol = 1e-8;  // relative to max(1, |theta|_inf)
    long max_iter = 100000;
};

// Least-squares data prepared once and shared by every fit on the same
// design: with an intercept the columns and response are centered, which
// profiles out the unpenalized intercept exactly.
class LeastSquaresProblem {
public:
    LeastSquaresProblem(const Matrix& W, const Vector& y, bool include_intercept);
    explicit LeastSquaresProblem(const TimeSeriesDataset& data, bool include_intercept)
        : LeastSquaresProblem(data.W, data.y, include_intercept) {}

    std::size_t n() const { return static_cast<std::size_t>(yc_.size()); }
    std::size_t p() const { return static_cast<std::size_t>(Xc_.cols()); }
    bool has_intercept() const { return intercept_; }

    const Matrix& X() const { return Xc_; }
    const Vector& y() const { return yc_; }
    const Matrix& gram() const { return gram_; }
    const Vector& xty() const { return xty_; }
    const Vector& x_mean() const { return x_mean_; }
    double y_mean() const { return y_mean_; }

    double intercept_for(const Vector& theta) const;
    double rss(const Vector& theta) const;

private:
    Matrix Xc_;
    Vector yc_;
    Vector x_mean_;
    double y_mean_ = 0.0;
    bool intercept_;
    Matrix gram_;
    Vector xty_;
};

inline double soft_threshold(double z, double t) {
    if (z > t) return z - t;
    if (z < -t) return z + t;
    return 0.0;
}

// Population-style standard deviation with the 1/n divisor.
double sample_std(std::span<const double> x);
double sample_std(const Vector& x);

FitResult ols_fit(const TimeSeriesDataset& data, const IndexSet& subset, bool include_intercept);
FitResult ols_fit(const LeastSquaresProblem& problem, const IndexSet& subset);

// Minimizes |y - W theta|^2 + lambda * sum_j weights_j |theta_j| by cyclic
// coordinate descent. The returned point is polished onto the exact
// sign-constrained least-squares solution of its active set when that
// point satisfies the optimality conditions.
FitResult weighted_lasso_solve(const TimeSeriesDataset& data, const PenaltySpec& penalty,
                               bool include_intercept, const SolverOptions& options = {});
FitResult weighted_lasso_solve(const LeastSquaresProblem& problem, double lambda,
                               const Vector& weights, const SolverOptions& options = {},
                               const Vector* warm_start = nullptr);

// Penalized objective at theta; terms with theta_j == 0 contribute nothing
// regardless of the weight.
double penalized_objective(const LeastSquaresProblem& problem, double lambda,
                           const Vector& weights, const Vector& theta);

}  // namespace tslasso
