#pragma once

#include "tslasso/dataset.hpp"
#include "tslasso/random.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace tslasso {

enum class Design { DGP1, DGP2, DGP3 };

const char* to_string(Design d);
Design design_from_string(const std::string& name);

inline constexpr std::size_t kDefaultBurnIn = 200;

struct DgpSpec {
    Design design = Design::DGP1;
    std::size_t n = 200;
    std::uint64_t seed = 0;
    std::size_t burn_in = kDefaultBurnIn;
};

// Every simulator returns n + 1 rows: the first n form the estimation sample
// and the last is the one-step-ahead holdout. Local-to-zero coefficients are
// scaled by 1/sqrt(n).
//
// DGP1: eight independent random walks, y = 0.25 + x b/sqrt(n) + u with
//       b = (1,1,1,1,0,0,0,0).
// DGP2: columns (z1, z2, xc1..xc4, x1, x2); z are AR(1)(0.5), xc is a
//       rank-2 VECM whose cointegrating residuals xc1-xc2 and xc3-xc4 are
//       AR(1)(0.2) processes, x are random walks.
// DGP3: ARDL with columns (y_lag, xc1..xc4, x, x_lag, z1..z3, z1_lag..z3_lag);
//       the VECM residuals are AR(1)(0.4) and z are AR(1) with (0.5, 0.2, 0.2).
TimeSeriesDataset simulate_dgp1(std::size_t n, std::uint64_t seed);
TimeSeriesDataset simulate_dgp2(std::size_t n, std::uint64_t seed);
TimeSeriesDataset simulate_dgp3(std::size_t n, std::uint64_t seed);

TimeSeriesDataset simulate(const DgpSpec& spec);

// Same simulators driven by an explicit innovation source.
TimeSeriesDataset simulate(Design design, std::size_t n, NormalSource& source,
                           std::size_t burn_in = kDefaultBurnIn);

// Debug dump: header `t,y,<names>` followed by one row per observation.
void write_dataset_csv(const TimeSeriesDataset& data, std::ostream& out);

// Truth labels as a JSON document; indices are 0-based.
std::string truth_to_json(const TimeSeriesDataset& data, const DgpSpec& spec);

}  // namespace tslasso
