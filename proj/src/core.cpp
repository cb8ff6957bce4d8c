#include "tslasso/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace tslasso {

const char* to_string(Persistence p) {
    switch (p) {
        case Persistence::I0: return "I0";
        case Persistence::C1: return "C1";
        case Persistence::C2: return "C2";
        case Persistence::I1: return "I1";
    }
    return "?";
}

const char* to_string(Family f) {
    switch (f) {
        case Family::Plasso: return "plasso";
        case Family::Slasso: return "slasso";
        case Family::Alasso: return "alasso";
        case Family::TAlasso: return "talasso";
        case Family::OLS: return "ols";
        case Family::Oracle: return "oracle";
    }
    return "?";
}

Family family_from_string(const std::string& name) {
    for (auto f : {Family::Plasso, Family::Slasso, Family::Alasso, Family::TAlasso, Family::OLS,
                   Family::Oracle}) {
        if (name == to_string(f)) return f;
    }
    throw InvalidArgument("unknown estimator family: " + name);
}

void validate_shape(const TimeSeriesDataset& data) {
    if (data.W.rows() != data.y.size()) {
        throw DimensionMismatch("predictor matrix has " + std::to_string(data.W.rows()) +
                                " rows but response has " + std::to_string(data.y.size()));
    }
    if (!data.names.empty() && data.names.size() != data.p()) {
        throw DimensionMismatch("column labels do not match predictor count");
    }
    if (!data.y.allFinite() || !data.W.allFinite()) {
        throw InvalidArgument("dataset contains non-finite entries");
    }
}

void validate(const TimeSeriesDataset& data) {
    validate_shape(data);
    if (data.n() < data.p() + 2) {
        throw InvalidArgument("dataset needs n >= p + 2 (n=" + std::to_string(data.n()) +
                              ", p=" + std::to_string(data.p()) + ")");
    }
}

TimeSeriesDataset head(const TimeSeriesDataset& data, std::size_t rows) {
    if (rows > data.n()) throw DimensionMismatch("head() beyond dataset length");
    TimeSeriesDataset out;
    const auto r = static_cast<Eigen::Index>(rows);
    out.y = data.y.head(r);
    out.W = data.W.topRows(r);
    out.names = data.names;
    out.truth = data.truth;
    return out;
}

TimeSeriesDataset select_rows(const TimeSeriesDataset& data, const IndexSet& rows) {
    TimeSeriesDataset out;
    out.y.resize(static_cast<Eigen::Index>(rows.size()));
    out.W.resize(static_cast<Eigen::Index>(rows.size()), data.W.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k] >= data.n()) throw DimensionMismatch("row index out of range");
        const auto i = static_cast<Eigen::Index>(rows[k]);
        out.y(static_cast<Eigen::Index>(k)) = data.y(i);
        out.W.row(static_cast<Eigen::Index>(k)) = data.W.row(i);
    }
    out.names = data.names;
    out.truth = data.truth;
    return out;
}

IndexSet nonzero_indices(const Vector& v) {
    IndexSet out;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        if (v(j) != 0.0) out.push_back(static_cast<std::size_t>(j));
    }
    return out;
}

LeastSquaresProblem::LeastSquaresProblem(const Matrix& W, const Vector& y, bool include_intercept)
    : intercept_(include_intercept) {
    if (W.rows() != y.size()) throw DimensionMismatch("W and y row counts differ");
    if (y.size() == 0) throw DimensionMismatch("empty sample");
    if (include_intercept) {
        x_mean_ = W.colwise().mean().transpose();
        y_mean_ = y.mean();
        Xc_ = W.rowwise() - x_mean_.transpose();
        yc_ = y.array() - y_mean_;
    } else {
        x_mean_ = Vector::Zero(W.cols());
        Xc_ = W;
        yc_ = y;
    }
    gram_ = Xc_.transpose() * Xc_;
    xty_ = Xc_.transpose() * yc_;
}

double LeastSquaresProblem::intercept_for(const Vector& theta) const {
    return intercept_ ? y_mean_ - x_mean_.dot(theta) : 0.0;
}

double LeastSquaresProblem::rss(const Vector& theta) const {
    return (yc_ - Xc_ * theta).squaredNorm();
}

double sample_std(std::span<const double> x) {
    if (x.empty()) throw InvalidArgument("sample_std of an empty vector");
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / n);
}

double sample_std(const Vector& x) {
    return sample_std(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
}

double penalized_objective(const LeastSquaresProblem& problem, double lambda, const Vector& weights,
                           const Vector& theta) {
    double pen = 0.0;
    for (Eigen::Index j = 0; j < theta.size(); ++j) {
        if (theta(j) != 0.0) pen += weights(j) * std::abs(theta(j));
    }
    return problem.rss(theta) + lambda * pen;
}

namespace {

Matrix columns(const Matrix& X, const IndexSet& idx) {
    Matrix out(X.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) {
        out.col(static_cast<Eigen::Index>(k)) = X.col(static_cast<Eigen::Index>(idx[k]));
    }
    return out;
}

constexpr double kRankThreshold = 1e-12;

// Solves (X'X) b = X'y - shift through a pivoted QR of X, which avoids
// squaring the condition number. Returns false when X is rank deficient.
bool qr_normal_solve(const Matrix& X, const Vector& y, const Vector& shift, Vector& out) {
    Eigen::ColPivHouseholderQR<Matrix> qr(X);
    qr.setThreshold(kRankThreshold);
    const Eigen::Index k = X.cols();
    if (qr.rank() < k) return false;
    // X P = Q R  =>  R'R (P'b) = R'Q'y - P'shift.
    Vector qty = qr.householderQ().transpose() * y;
    Vector rhs = qty.head(k);
    const auto R = qr.matrixR().topLeftCorner(k, k).template triangularView<Eigen::Upper>();
    if (shift.size() > 0) {
        Vector pshift = qr.colsPermutation().transpose() * shift;
        rhs -= R.transpose().solve(pshift);
    }
    Vector z = R.solve(rhs);
    out = qr.colsPermutation() * z;
    return out.allFinite();
}

void check_weights(std::size_t p, double lambda, const Vector& weights) {
    if (static_cast<std::size_t>(weights.size()) != p) {
        throw DimensionMismatch("penalty weights have length " + std::to_string(weights.size()) +
                                ", expected " + std::to_string(p));
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw InvalidArgument("lambda must be finite and nonnegative");
    }
    for (Eigen::Index j = 0; j < weights.size(); ++j) {
        if (!(weights(j) >= 0.0)) throw InvalidArgument("penalty weights must be nonnegative");
    }
}

// Attempts to replace the coordinate-descent iterate by the exact minimizer
// on its active set with signs held fixed. Succeeds only when the result
// keeps those signs and every free inactive coordinate satisfies its
// subgradient bound.
bool polish(const LeastSquaresProblem& problem, double lambda, const Vector& weights,
            const IndexSet& free, Vector& theta) {
    IndexSet active;
    for (auto j : free) {
        if (theta(static_cast<Eigen::Index>(j)) != 0.0) active.push_back(j);
    }
    Vector candidate = Vector::Zero(theta.size());
    if (!active.empty()) {
        Vector shift(static_cast<Eigen::Index>(active.size()));
        for (std::size_t k = 0; k < active.size(); ++k) {
            const auto j = static_cast<Eigen::Index>(active[k]);
            shift(static_cast<Eigen::Index>(k)) =
                0.5 * lambda * weights(j) * (theta(j) > 0.0 ? 1.0 : -1.0);
        }
        Vector sol;
        if (!qr_normal_solve(columns(problem.X(), active), problem.y(), shift, sol)) return false;
        for (std::size_t k = 0; k < active.size(); ++k) {
            const auto j = static_cast<Eigen::Index>(active[k]);
            const double v = sol(static_cast<Eigen::Index>(k));
            if (v == 0.0 || (v > 0.0) != (theta(j) > 0.0)) return false;
            candidate(j) = v;
        }
    }
    const Vector grad = problem.X().transpose() * (problem.y() - problem.X() * candidate);
    const double scale = std::max(1.0, 2.0 * problem.xty().cwiseAbs().maxCoeff());
    for (auto j : free) {
        const auto jj = static_cast<Eigen::Index>(j);
        if (candidate(jj) != 0.0) continue;
        if (2.0 * std::abs(grad(jj)) > lambda * weights(jj) + 1e-9 * scale) return false;
    }
    const double before = penalized_objective(problem, lambda, weights, theta);
    const double after = penalized_objective(problem, lambda, weights, candidate);
    if (after > before + 1e-12 * std::max(1.0, std::abs(before))) return false;
    theta = candidate;
    return true;
}

}  // namespace

FitResult ols_fit(const LeastSquaresProblem& problem, const IndexSet& subset) {
    const auto p = problem.p();
    if (subset.empty() && !problem.has_intercept()) {
        throw InvalidArgument("ols_fit needs a nonempty subset or an intercept");
    }
    IndexSet sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidArgument("ols_fit subset has duplicate indices");
    }
    if (!sorted.empty() && sorted.back() >= p) {
        throw DimensionMismatch("ols_fit subset index out of range");
    }
    Vector theta = Vector::Zero(static_cast<Eigen::Index>(p));
    if (!sorted.empty()) {
        Vector sol;
        if (!qr_normal_solve(columns(problem.X(), sorted), problem.y(), Vector(), sol)) {
            throw SingularDesign("subset Gram matrix is rank deficient (collinear predictors)");
        }
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            theta(static_cast<Eigen::Index>(sorted[k])) = sol(static_cast<Eigen::Index>(k));
        }
    }
    FitResult fit;
    fit.coefficients = theta;
    fit.intercept = problem.intercept_for(theta);
    fit.active_set = nonzero_indices(theta);
    fit.objective = problem.rss(theta);
    fit.iterations = 0;
    fit.converged = true;
    return fit;
}

FitResult ols_fit(const TimeSeriesDataset& data, const IndexSet& subset, bool include_intercept) {
    validate_shape(data);
    return ols_fit(LeastSquaresProblem(data, include_intercept), subset);
}

FitResult weighted_lasso_solve(const LeastSquaresProblem& problem, double lambda,
                               const Vector& weights, const SolverOptions& options,
                               const Vector* warm_start) {
    const auto p = problem.p();
    check_weights(p, lambda, weights);
    const Matrix& G = problem.gram();

    // Coordinates with infinite weight or an all-zero column never move.
    IndexSet free;
    for (std::size_t j = 0; j < p; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        if (std::isfinite(weights(jj)) && G(jj, jj) > 0.0) free.push_back(j);
    }

    Vector theta = Vector::Zero(static_cast<Eigen::Index>(p));
    if (warm_start != nullptr) {
        if (static_cast<std::size_t>(warm_start->size()) != p) {
            throw DimensionMismatch("warm start has the wrong length");
        }
        for (auto j : free) theta(static_cast<Eigen::Index>(j)) = (*warm_start)(static_cast<Eigen::Index>(j));
    }
    // grad = X'(y - X theta), maintained incrementally.
    Vector grad = problem.xty() - G * theta;

    double tol = options.tol;
    long iter = 0;
    bool converged = false;
    while (iter < options.max_iter) {
        ++iter;
        double max_delta = 0.0;
        for (auto j : free) {
            const auto jj = static_cast<Eigen::Index>(j);
            const double gjj = G(jj, jj);
            const double z = grad(jj) + gjj * theta(jj);
            const double updated = soft_threshold(z, 0.5 * lambda * weights(jj)) / gjj;
            const double delta = updated - theta(jj);
            if (delta != 0.0) {
                theta(jj) = updated;
                grad.noalias() -= G.col(jj) * delta;
                max_delta = std::max(max_delta, std::abs(delta));
            }
        }
        const double bound = tol * std::max(1.0, theta.cwiseAbs().maxCoeff());
        if (max_delta < bound) {
            if (polish(problem, lambda, weights, free, theta) || max_delta == 0.0) {
                converged = true;
                break;
            }
            tol *= 1e-2;
        }
    }

    FitResult fit;
    fit.coefficients = theta;
    fit.intercept = problem.intercept_for(theta);
    fit.active_set = nonzero_indices(theta);
    fit.objective = penalized_objective(problem, lambda, weights, theta);
    fit.iterations = iter;
    fit.converged = converged;
    if (!converged) fit.warnings.emplace_back("NonConvergence: max_iter reached");
    return fit;
}

FitResult weighted_lasso_solve(const TimeSeriesDataset& data, const PenaltySpec& penalty,
                               bool include_intercept, const SolverOptions& options) {
    validate_shape(data);
    if (penalty.gamma < 1.0) throw InvalidArgument("gamma must be >= 1");
    return weighted_lasso_solve(LeastSquaresProblem(data, include_intercept), penalty.lambda,
                                penalty.weights, options);
}

}  // namespace tslasso
