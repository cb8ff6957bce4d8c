#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tslasso {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Column indices are 0-based throughout the library.
using IndexSet = std::vector<std::size_t>;

enum class Persistence { I0, C1, C2, I1 };

const char* to_string(Persistence p);

// Ground truth attached to simulated data.
struct TruthInfo {
    Vector theta_star;  // local-to-zero components already divided by sqrt(n)
    double intercept_star = 0.0;
    IndexSet active_set;
    std::vector<Persistence> persistence;
    Matrix coint_matrix;  // rows are cointegrating vectors over all p columns; empty when none
};

struct TimeSeriesDataset {
    Vector y;
    Matrix W;
    std::vector<std::string> names;
    std::optional<TruthInfo> truth;

    std::size_t n() const { return static_cast<std::size_t>(y.size()); }
    std::size_t p() const { return static_cast<std::size_t>(W.cols()); }
};

// Throws DimensionMismatch on inconsistent shapes and InvalidArgument on
// non-finite entries or n < p + 2.
void validate(const TimeSeriesDataset& data);

// Shape and finiteness checks only; used where short subsamples are legitimate.
void validate_shape(const TimeSeriesDataset& data);

// First `rows` observations; truth is carried over unchanged.
TimeSeriesDataset head(const TimeSeriesDataset& data, std::size_t rows);

// Observations at the given row indices, in the given order.
TimeSeriesDataset select_rows(const TimeSeriesDataset& data, const IndexSet& rows);

IndexSet nonzero_indices(const Vector& v);

}  // namespace tslasso
