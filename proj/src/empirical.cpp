#include "tslasso/empirical.hpp"

#include "tslasso/estimators.hpp"
#include "tslasso/evalmetrics.hpp"
#include "tslasso/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tslasso {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\"");
    const auto e = s.find_last_not_of(" \t\r\"");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && std::isfinite(out);
}

int parse_date(const std::string& s, std::size_t row) {
    int year = 0, month = 0;
    if (s.size() == 6 && std::all_of(s.begin(), s.end(), ::isdigit)) {
        year = std::stoi(s.substr(0, 4));
        month = std::stoi(s.substr(4, 2));
    } else if (s.size() >= 7 && s[4] == '-') {
        year = std::atoi(s.substr(0, 4).c_str());
        month = std::atoi(s.substr(5, 2).c_str());
    }
    if (year <= 0 || month < 1 || month > 12) {
        throw NonMonotoneDates("unparseable date '" + s + "' at row " + std::to_string(row));
    }
    return year * 100 + month;
}

int next_month(int yyyymm) {
    const int y = yyyymm / 100, m = yyyymm % 100;
    return m == 12 ? (y + 1) * 100 + 1 : y * 100 + m + 1;
}

}  // namespace

ReturnPanel parse_panel(std::istream& in, const std::string& source) {
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        header = split_csv(t);
        break;
    }
    if (header.empty()) throw MissingColumn("date");
    std::map<std::string, std::size_t> col;
    for (std::size_t k = 0; k < header.size(); ++k) col[lower(header[k])] = k;

    auto find = [&](std::initializer_list<const char*> names) -> std::ptrdiff_t {
        for (const char* n : names) {
            auto it = col.find(n);
            if (it != col.end()) return static_cast<std::ptrdiff_t>(it->second);
        }
        return -1;
    };
    const auto date_col = find({"date", "yyyymm"});
    if (date_col < 0) throw MissingColumn("date");
    const auto ex_col = find({"ex_return", "exreturn"});
    const auto idx_col = find({"index_return"});
    const auto tb_col = find({"tbill"});
    if (ex_col < 0 && (idx_col < 0 || tb_col < 0)) throw MissingColumn("ex_return");

    std::vector<std::size_t> pred_cols;
    std::vector<std::string> names;
    for (const auto& name : kNamedPredictors) {
        auto it = col.find(name);
        if (it == col.end()) throw MissingColumn(name);
        pred_cols.push_back(it->second);
        names.push_back(name);
    }
    std::vector<std::size_t> extras;
    for (std::size_t k = 0; k < header.size(); ++k) {
        const auto name = lower(header[k]);
        if (name == "date" || name == "yyyymm" || name == "ex_return" || name == "exreturn" ||
            name == "index_return" || name == "tbill") {
            continue;
        }
        if (std::find(kNamedPredictors.begin(), kNamedPredictors.end(), name) != kNamedPredictors.end()) {
            continue;
        }
        extras.push_back(k);
    }
    if (extras.empty()) throw MissingColumn("12th predictor");
    if (extras.size() > 1) {
        std::string list;
        for (auto k : extras) list += (list.empty() ? "" : ", ") + header[k];
        throw InvalidArgument("expected exactly one predictor beyond the named eleven, found: " + list);
    }
    pred_cols.push_back(extras.front());
    names.push_back(lower(header[extras.front()]));

    ReturnPanel panel;
    panel.source = source;
    panel.names = names;
    std::vector<double> ex;
    std::vector<std::vector<double>> rows;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        ++row;
        const auto cells = split_csv(t);
        if (cells.size() != header.size()) {
            throw NonFiniteValue("row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                                 " fields, expected " + std::to_string(header.size()));
        }
        auto value = [&](std::size_t k) {
            double v;
            if (!parse_double(cells[k], v)) {
                throw NonFiniteValue("non-finite value in column " + header[k] + " at row " +
                                     std::to_string(row));
            }
            return v;
        };
        const int date = parse_date(cells[static_cast<std::size_t>(date_col)], row);
        if (!panel.dates.empty() && date != next_month(panel.dates.back())) {
            throw NonMonotoneDates("date " + std::to_string(date) + " at row " + std::to_string(row) +
                                   " does not follow " + std::to_string(panel.dates.back()));
        }
        panel.dates.push_back(date);
        ex.push_back(ex_col >= 0 ? value(static_cast<std::size_t>(ex_col))
                                 : value(static_cast<std::size_t>(idx_col)) -
                                       value(static_cast<std::size_t>(tb_col)));
        std::vector<double> r;
        for (auto k : pred_cols) r.push_back(value(k));
        rows.push_back(std::move(r));
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    panel.ex_return = Eigen::Map<Vector>(ex.data(), n);
    panel.predictors.resize(n, static_cast<Eigen::Index>(pred_cols.size()));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < panel.predictors.cols(); ++j) {
            panel.predictors(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return panel;
}

ReturnPanel load_panel(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw InvalidArgument("cannot open panel file: " + csv_path);
    return parse_panel(in, csv_path);
}

int horizon_months(const std::string& text) {
    double h = 0.0;
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        double a, b;
        if (!parse_double(trim(text.substr(0, slash)), a) || !parse_double(trim(text.substr(slash + 1)), b) ||
            b == 0.0) {
            throw InvalidArgument("bad horizon: " + text);
        }
        h = a / b;
    } else if (!parse_double(trim(text), h)) {
        throw InvalidArgument("bad horizon: " + text);
    }
    const double m = 12.0 * h;
    const double r = std::round(m);
    if (r < 1.0 || std::abs(m - r) > 1e-9) throw InvalidArgument("12*h must be a positive integer: " + text);
    return static_cast<int>(r);
}

std::string horizon_label(int months) {
    if (months % 12 == 0) return std::to_string(months / 12);
    const int g = std::gcd(months, 12);
    return std::to_string(months / g) + "/" + std::to_string(12 / g);
}

std::vector<double> long_horizon_return(std::span<const double> ex_return, int months) {
    if (months < 1) throw InvalidArgument("horizon must cover at least one month");
    const auto m = static_cast<std::size_t>(months);
    if (ex_return.size() < m) {
        throw SeriesTooShort("series of length " + std::to_string(ex_return.size()) +
                             " is shorter than the " + std::to_string(months) + "-month horizon");
    }
    std::vector<double> out(ex_return.size() - m + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += ex_return[i + k];
        out[i] = s;
    }
    return out;
}

std::vector<double> long_horizon_return(std::span<const double> ex_return, double h_years) {
    const double m = 12.0 * h_years;
    const double r = std::round(m);
    if (std::abs(m - r) > 1e-9 || r < 1.0) throw InvalidArgument("12*h must be a positive integer");
    return long_horizon_return(ex_return, static_cast<int>(r));
}

double mpae(std::span<const double> forecasts, std::span<const double> realized) {
    if (forecasts.size() != realized.size()) {
        throw LengthMismatch("forecasts and realizations differ in length");
    }
    if (forecasts.empty()) throw LengthMismatch("no forecasts to evaluate");
    std::vector<double> a(forecasts.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(realized[i] - forecasts[i]);
    return pairwise_sum(a) / static_cast<double>(a.size());
}

double ar1_coefficient(std::span<const double> series) {
    if (series.size() < 3) throw SeriesTooShort("AR(1) needs at least three observations");
    const auto m = static_cast<Eigen::Index>(series.size() - 1);
    Matrix W(m, 1);
    Vector y(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        W(i, 0) = series[static_cast<std::size_t>(i)];
        y(i) = series[static_cast<std::size_t>(i) + 1];
    }
    return ols_fit(LeastSquaresProblem(W, y, true), {0}).coefficients(0);
}

ForecastMethod forecast_method_from_string(const std::string& raw) {
    const std::string name = lower(raw);
    ForecastMethod m;
    m.name = name;
    if (name == "rwwd") {
        m.kind = ForecastMethod::Kind::RWwD;
        return m;
    }
    if (name == "ols") {
        m.kind = ForecastMethod::Kind::OLS;
        return m;
    }
    std::string fam = name;
    if (name.size() > 4 && name.substr(name.size() - 4) == "-bic") {
        m.selector = Selector::BIC;
        fam = name.substr(0, name.size() - 4);
    } else if (name.size() > 3 && name.substr(name.size() - 3) == "-cv") {
        fam = name.substr(0, name.size() - 3);
    }
    m.family = family_from_string(fam);
    if (m.family == Family::OLS || m.family == Family::Oracle) {
        throw InvalidArgument("not a forecasting method: " + raw);
    }
    m.kind = ForecastMethod::Kind::Penalized;
    return m;
}

RollingResult rolling_forecast(const ReturnPanel& panel, const HorizonSpec& horizon,
                               const ForecastMethod& method, const RollingOptions& options) {
    const auto H = static_cast<std::size_t>(horizon.months);
    const auto Wm = static_cast<std::size_t>(horizon.window_months);
    if (horizon.months < 1) throw InvalidArgument("horizon must be positive");
    if (horizon.window_months < 24) throw InvalidArgument("window must span at least 24 months");
    if (Wm <= H + 1) throw InvalidArgument("window too short for the horizon");
    const std::size_t T = panel.size();
    if (T < Wm + H) throw SeriesTooShort("panel too short for one window plus one target");

    const std::span<const double> ex(panel.ex_return.data(), T);
    const std::vector<double> lr = long_horizon_return(ex, horizon.months);
    const std::size_t m = Wm - H;  // training pairs per window
    const std::size_t first_end = Wm - 1;
    const std::size_t last_end = T - 1 - H;
    const std::size_t windows = last_end - first_end + 1;
    const auto p = panel.predictors.cols();

    RollingResult result;
    result.method = method.name;
    result.horizon = horizon;
    std::vector<WindowForecast> slots(windows);
    std::vector<std::string> errors(windows);

    parallel_for(windows, options.jobs, [&](std::size_t w) {
        const std::size_t t = first_end + w;
        const std::size_t s = t + 1 - Wm;
        WindowForecast& f = slots[w];
        f.window_end = t;
        f.target_date = panel.dates[t + 1];
        f.realized = lr[t + 1];
        try {
            TimeSeriesDataset d;
            d.y.resize(static_cast<Eigen::Index>(m));
            d.W.resize(static_cast<Eigen::Index>(m), p);
            for (std::size_t k = 0; k < m; ++k) {
                const std::size_t i = s + 1 + k;
                d.y(static_cast<Eigen::Index>(k)) = lr[i];
                d.W.row(static_cast<Eigen::Index>(k)) = panel.predictors.row(static_cast<Eigen::Index>(i - 1));
            }
            d.names = panel.names;
            const Vector x_now = panel.predictors.row(static_cast<Eigen::Index>(t)).transpose();
            switch (method.kind) {
                case ForecastMethod::Kind::RWwD:
                    f.forecast = rwwd_forecast(std::span<const double>(d.y.data(), m));
                    break;
                case ForecastMethod::Kind::OLS: {
                    const FitResult fit = fit_family(LeastSquaresProblem(d, true), Family::OLS, 0.0);
                    f.forecast = fit.predict(x_now);
                    f.coefficients = fit.coefficients;
                    f.intercept = fit.intercept;
                    break;
                }
                case ForecastMethod::Kind::Penalized: {
                    const SelectionResult sel =
                        method.selector == Selector::CV
                            ? cv_select(d, method.family, options.grid, options.folds, options.gamma,
                                        options.scale)
                            : bic_select(d, method.family, options.grid, options.gamma, options.scale);
                    f.c_lambda = sel.c_lambda;
                    const FitResult fit =
                        fit_family(LeastSquaresProblem(d, true), method.family,
                                   tuned_lambda(sel.c_lambda, m, method.family, options.scale), options.gamma);
                    f.forecast = fit.predict(x_now);
                    f.coefficients = fit.coefficients;
                    f.intercept = fit.intercept;
                    break;
                }
            }
        } catch (const Error& e) {
            errors[w] = "window ending " + std::to_string(panel.dates[t]) + ": " + e.what();
        }
    });

    std::vector<double> fc, re;
    for (std::size_t w = 0; w < windows; ++w) {
        if (!errors[w].empty()) {
            result.failures.push_back(errors[w]);
            continue;
        }
        result.forecasts.push_back(slots[w]);
        fc.push_back(slots[w].forecast);
        re.push_back(slots[w].realized);
    }
    if (fc.empty()) throw AllCandidatesFailed("every rolling window failed");
    result.rmpse_x100 = 100.0 * std::sqrt(mpse(fc, re));
    result.mpae_x100 = 100.0 * mpae(fc, re);
    return result;
}

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

void write_forecasts_csv(const std::vector<RollingResult>& results, std::ostream& out) {
    out << "date,realized,forecast,estimator,h,window_months\n";
    for (const auto& r : results) {
        for (const auto& f : r.forecasts) {
            out << f.target_date << ',' << num(f.realized) << ',' << num(f.forecast) << ',' << r.method
                << ',' << horizon_label(r.horizon.months) << ',' << r.horizon.window_months << '\n';
        }
    }
}

void write_coefficients_csv(const std::vector<RollingResult>& results, const ReturnPanel& panel,
                            std::ostream& out) {
    out << "window_end,estimator,h,window_months,c_lambda,intercept";
    for (const auto& n : panel.names) out << ',' << n;
    out << '\n';
    for (const auto& r : results) {
        for (const auto& f : r.forecasts) {
            if (f.coefficients.size() == 0) continue;
            out << panel.dates[f.window_end] << ',' << r.method << ',' << horizon_label(r.horizon.months)
                << ',' << r.horizon.window_months << ',' << num(f.c_lambda) << ',' << num(f.intercept);
            for (Eigen::Index j = 0; j < f.coefficients.size(); ++j) out << ',' << num(f.coefficients(j));
            out << '\n';
        }
    }
}

}  // namespace tslasso
