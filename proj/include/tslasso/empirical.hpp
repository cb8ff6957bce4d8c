#pragma once

#include "tslasso/core.hpp"
#include "tslasso/tuning.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tslasso {

// The eleven named predictors; the twelfth is whatever single extra column
// the source file carries.
inline const std::vector<std::string> kNamedPredictors = {
    "dp", "dy", "ep", "tms", "dfy", "dfr", "bm", "tbl", "ltr", "svar", "infl"};

struct ReturnPanel {
    std::vector<int> dates;  // yyyymm, consecutive months
    Vector ex_return;
    Matrix predictors;  // rows aligned with dates
    std::vector<std::string> names;
    std::string source;

    std::size_t size() const { return dates.size(); }
};

// CSV with a header row. Required: a `date` (or `yyyymm`) column holding
// YYYYMM or YYYY-MM values, either `ex_return` or both `index_return` and
// `tbill`, the eleven named predictors, and exactly one further predictor.
// Lines starting with '#' are ignored.
ReturnPanel load_panel(const std::string& csv_path);
ReturnPanel parse_panel(std::istream& in, const std::string& source = "<stream>");

struct HorizonSpec {
    int months = 1;          // 12 h
    int window_months = 120;
};

// Accepts "1/12", "1/4", "0.5", "3", ...; returns 12 h, which must be a
// positive integer.
int horizon_months(const std::string& text);
std::string horizon_label(int months);

// Forward sums of `months` consecutive values; length n - months + 1.
std::vector<double> long_horizon_return(std::span<const double> ex_return, int months);
std::vector<double> long_horizon_return(std::span<const double> ex_return, double h_years);

double mpae(std::span<const double> forecasts, std::span<const double> realized);

// Slope of y_t on (1, y_{t-1}).
double ar1_coefficient(std::span<const double> series);

struct ForecastMethod {
    enum class Kind { RWwD, OLS, Penalized };
    Kind kind = Kind::OLS;
    Family family = Family::OLS;
    Selector selector = Selector::CV;
    std::string name;
};

// ols, rwwd, plasso, slasso, alasso, talasso, and `<family>-bic` variants.
ForecastMethod forecast_method_from_string(const std::string& name);

struct RollingOptions {
    std::vector<double> grid = default_grid();
    std::size_t folds = 10;
    double gamma = 1.0;
    LambdaScale scale = LambdaScale::PerObservation;
    unsigned jobs = 1;
};

struct WindowForecast {
    std::size_t window_end = 0;  // row index t of the last month in the window
    int target_date = 0;         // first month of the forecast target
    double forecast = 0.0;
    double realized = 0.0;
    double c_lambda = 0.0;       // 0 when no tuning was involved
    Vector coefficients;         // empty for RWwD
    double intercept = 0.0;
};

struct RollingResult {
    std::string method;
    HorizonSpec horizon;
    std::vector<WindowForecast> forecasts;  // ordered by window end
    std::vector<std::string> failures;      // windows excluded from the metrics
    double rmpse_x100 = 0.0;
    double mpae_x100 = 0.0;
};

// For each window [t - W + 1, t] the pairs (predictors_{i-1}, LongReturn_i)
// whose predictor month and whole target lie inside the window are fitted,
// and predictors_t forecasts LongReturn_{t+1}. Nothing dated after t enters a
// forecast made at t.
RollingResult rolling_forecast(const ReturnPanel& panel, const HorizonSpec& horizon,
                               const ForecastMethod& method, const RollingOptions& options = {});

void write_forecasts_csv(const std::vector<RollingResult>& results, std::ostream& out);
void write_coefficients_csv(const std::vector<RollingResult>& results, const ReturnPanel& panel,
                            std::ostream& out);

}  // namespace tslasso
