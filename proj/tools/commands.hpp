#pragma once

#include <tslasso/dgp.hpp>
#include <tslasso/tuning.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tslasso::cli {

inline constexpr const char* kVersion = "0.1.0";

// Usage and configuration problems; mapped to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MonteCarloConfig {
    std::vector<Design> designs;
    std::vector<std::size_t> n_list;
    std::vector<std::string> estimators;
    std::size_t reps = 500;
    std::uint64_t master_seed = 0;
    bool calibrate = true;
    // Fixed constants keyed "<family>" or "<design>.<family>".
    std::map<std::string, double> c_lambda;
    std::size_t calibration_reps = 100;
    std::size_t calibration_n = 200;
    std::vector<double> grid = default_grid();
    std::size_t folds = 10;
    double gamma = 1.0;
    LambdaScale scale = LambdaScale::PerObservation;
};

// Flat `key = value` text (lists comma separated, '#' starts a comment) or
// a JSON object with the same keys. Errors name the line or field.
MonteCarloConfig parse_config(const std::string& text, const std::string& source = "config");

// Entry point shared by the executable and the tests. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tslasso::cli
