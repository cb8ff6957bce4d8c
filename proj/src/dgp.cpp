#include "tslasso/dgp.hpp"

#include "tslasso/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>

namespace tslasso {

const char* to_string(Design d) {
    switch (d) {
        case Design::DGP1: return "dgp1";
        case Design::DGP2: return "dgp2";
        case Design::DGP3: return "dgp3";
    }
    return "?";
}

Design design_from_string(const std::string& name) {
    for (auto d : {Design::DGP1, Design::DGP2, Design::DGP3}) {
        if (name == to_string(d)) return d;
    }
    throw InvalidArgument("unknown design: " + name);
}

namespace {

void check_n(std::size_t n) {
    if (n < 20) throw InvalidArgument("simulated sample length must be >= 20");
}

struct Ar1 {
    double coef;
    double value = 0.0;
    double step(double shock) { return value = coef * value + shock; }
};

// Rank-2 VECM dx = G'L x_{-1} + e with L = [1 -1 0 0; 0 0 1 -1] and
// G = [0 1 0 0; 0 0 0 1]; e = (e1, e1 - nu1, e3, e3 - nu2). The induced
// residuals xc1 - xc2 and xc3 - xc4 equal nu1 and nu2 exactly.
struct CointBlock {
    Ar1 nu1, nu2;
    double x[4] = {0.0, 0.0, 0.0, 0.0};

    explicit CointBlock(double nu_coef) : nu1{nu_coef}, nu2{nu_coef} {}

    void burn(NormalSource& src) {
        nu1.step(src.normal());
        nu2.step(src.normal());
    }

    void step(NormalSource& src) {
        const double n1 = nu1.step(src.normal());
        const double n2 = nu2.step(src.normal());
        const double e1 = src.normal();
        const double e3 = src.normal();
        const double ec1 = x[0] - x[1];
        const double ec2 = x[2] - x[3];
        x[0] += e1;
        x[1] += ec1 + e1 - n1;
        x[2] += e3;
        x[3] += ec2 + e3 - n2;
    }
};

Matrix coint_rows(std::size_t p, std::size_t first_col) {
    Matrix L = Matrix::Zero(2, static_cast<Eigen::Index>(p));
    const auto c = static_cast<Eigen::Index>(first_col);
    L(0, c) = 1.0;
    L(0, c + 1) = -1.0;
    L(1, c + 2) = 1.0;
    L(1, c + 3) = -1.0;
    return L;
}

void finish_truth(TruthInfo& t) {
    t.active_set = nonzero_indices(t.theta_star);
}

TimeSeriesDataset dgp1(std::size_t n, NormalSource& src) {
    constexpr std::size_t p = 8;
    const std::size_t rows = n + 1;
    TimeSeriesDataset d;
    d.y.resize(static_cast<Eigen::Index>(rows));
    d.W.resize(static_cast<Eigen::Index>(rows), p);
    for (std::size_t j = 0; j < p; ++j) d.names.push_back("x" + std::to_string(j + 1));

    TruthInfo t;
    t.intercept_star = 0.25;
    t.theta_star = Vector::Zero(p);
    t.theta_star.head(4).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
    t.persistence.assign(p, Persistence::I1);

    Vector x = Vector::Zero(p);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < p; ++j) x(static_cast<Eigen::Index>(j)) += src.normal();
        const double u = src.normal();
        const auto r = static_cast<Eigen::Index>(i);
        d.W.row(r) = x.transpose();
        d.y(r) = t.intercept_star + x.dot(t.theta_star) + u;
    }
    finish_truth(t);
    d.truth = std::move(t);
    return d;
}

TimeSeriesDataset dgp2(std::size_t n, NormalSource& src, std::size_t burn_in) {
    constexpr std::size_t p = 8;
    const std::size_t rows = n + 1;
    TimeSeriesDataset d;
    d.y.resize(static_cast<Eigen::Index>(rows));
    d.W.resize(static_cast<Eigen::Index>(rows), p);
    d.names = {"z1", "z2", "xc1", "xc2", "xc3", "xc4", "x1", "x2"};

    TruthInfo t;
    t.intercept_star = 0.3;
    t.theta_star.resize(p);
    t.theta_star << 0.4, 0.0, 0.3, -0.3, 0.0, 0.0, 1.0 / std::sqrt(static_cast<double>(n)), 0.0;
    t.persistence = {Persistence::I0, Persistence::I0, Persistence::C1, Persistence::C2,
                     Persistence::C1, Persistence::C2, Persistence::I1, Persistence::I1};
    t.coint_matrix = coint_rows(p, 2);

    Ar1 z1{0.5}, z2{0.5};
    CointBlock xc(0.2);
    double x1 = 0.0, x2 = 0.0;
    for (std::size_t b = 0; b < burn_in; ++b) {
        z1.step(src.normal());
        z2.step(src.normal());
        xc.burn(src);
    }
    for (std::size_t i = 0; i < rows; ++i) {
        z1.step(src.normal());
        z2.step(src.normal());
        xc.step(src);
        x1 += src.normal();
        x2 += src.normal();
        const double u = src.normal();
        const auto r = static_cast<Eigen::Index>(i);
        d.W.row(r) << z1.value, z2.value, xc.x[0], xc.x[1], xc.x[2], xc.x[3], x1, x2;
        d.y(r) = t.intercept_star + d.W.row(r).dot(t.theta_star) + u;
    }
    finish_truth(t);
    d.truth = std::move(t);
    return d;
}

TimeSeriesDataset dgp3(std::size_t n, NormalSource& src, std::size_t burn_in) {
    constexpr std::size_t p = 13;
    const std::size_t rows = n + 1;
    TimeSeriesDataset d;
    d.y.resize(static_cast<Eigen::Index>(rows));
    d.W.resize(static_cast<Eigen::Index>(rows), p);
    d.names = {"y_lag", "xc1", "xc2", "xc3", "xc4", "x", "x_lag",
               "z1", "z2", "z3", "z1_lag", "z2_lag", "z3_lag"};

    constexpr double gamma = 0.3;
    constexpr double rho = 0.4;
    const double a_cur[3] = {0.6, 0.8, 0.0};
    const double a_lag[3] = {0.4, 0.0, 0.0};

    TruthInfo t;
    t.intercept_star = gamma;
    t.theta_star.resize(p);
    t.theta_star << rho, 0.75, -0.75, 0.0, 0.0, 1.5 / std::sqrt(static_cast<double>(n)), 0.0,
        a_cur[0], a_cur[1], a_cur[2], a_lag[0], a_lag[1], a_lag[2];
    t.persistence = {Persistence::I0, Persistence::C1, Persistence::C2, Persistence::C1,
                     Persistence::C2, Persistence::I1, Persistence::I1, Persistence::I0,
                     Persistence::I0, Persistence::I0, Persistence::I0, Persistence::I0,
                     Persistence::I0};
    t.coint_matrix = coint_rows(p, 1);

    Ar1 z[3] = {{0.5}, {0.2}, {0.2}};
    CointBlock xc(0.4);
    double x = 0.0;
    double y = 0.0;

    // Stationary parts run in; the integrated parts sit at their zero start.
    for (std::size_t b = 0; b < burn_in; ++b) {
        double zsum = 0.0;
        for (int l = 0; l < 3; ++l) {
            const double prev = z[l].value;
            zsum += a_cur[l] * z[l].step(src.normal()) + a_lag[l] * prev;
        }
        xc.burn(src);
        y = gamma + rho * y + zsum + src.normal();
    }
    for (std::size_t i = 0; i < rows; ++i) {
        double z_prev[3], z_cur[3];
        for (int l = 0; l < 3; ++l) {
            z_prev[l] = z[l].value;
            z_cur[l] = z[l].step(src.normal());
        }
        xc.step(src);
        const double x_prev = x;
        x += src.normal();
        const double u = src.normal();
        const double y_prev = y;
        const auto r = static_cast<Eigen::Index>(i);
        d.W.row(r) << y_prev, xc.x[0], xc.x[1], xc.x[2], xc.x[3], x, x_prev, z_cur[0], z_cur[1],
            z_cur[2], z_prev[0], z_prev[1], z_prev[2];
        y = gamma + d.W.row(r).dot(t.theta_star) + u;
        d.y(r) = y;
    }
    finish_truth(t);
    d.truth = std::move(t);
    return d;
}

}  // namespace

TimeSeriesDataset simulate(Design design, std::size_t n, NormalSource& source, std::size_t burn_in) {
    check_n(n);
    switch (design) {
        case Design::DGP1: return dgp1(n, source);
        case Design::DGP2: return dgp2(n, source, burn_in);
        case Design::DGP3: return dgp3(n, source, burn_in);
    }
    throw InvalidArgument("unknown design");
}

TimeSeriesDataset simulate(const DgpSpec& spec) {
    NormalSource src(spec.seed);
    return simulate(spec.design, spec.n, src, spec.burn_in);
}

TimeSeriesDataset simulate_dgp1(std::size_t n, std::uint64_t seed) {
    return simulate({Design::DGP1, n, seed, kDefaultBurnIn});
}

TimeSeriesDataset simulate_dgp2(std::size_t n, std::uint64_t seed) {
    return simulate({Design::DGP2, n, seed, kDefaultBurnIn});
}

TimeSeriesDataset simulate_dgp3(std::size_t n, std::uint64_t seed) {
    return simulate({Design::DGP3, n, seed, kDefaultBurnIn});
}

void write_dataset_csv(const TimeSeriesDataset& data, std::ostream& out) {
    out << "t,y";
    for (std::size_t j = 0; j < data.p(); ++j) {
        out << ',' << (j < data.names.size() ? data.names[j] : "w" + std::to_string(j + 1));
    }
    out << '\n';
    out << std::setprecision(17);
    for (std::size_t i = 0; i < data.n(); ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        out << (i + 1) << ',' << data.y(r);
        for (Eigen::Index j = 0; j < data.W.cols(); ++j) out << ',' << data.W(r, j);
        out << '\n';
    }
}

std::string truth_to_json(const TimeSeriesDataset& data, const DgpSpec& spec) {
    if (!data.truth) throw MissingTruth();
    const TruthInfo& t = *data.truth;
    nlohmann::ordered_json j;
    j["design"] = to_string(spec.design);
    j["n"] = spec.n;
    j["rows"] = data.n();
    j["seed"] = spec.seed;
    j["burn_in"] = spec.burn_in;
    j["index_base"] = 0;
    j["columns"] = data.names;
    j["theta_star"] = std::vector<double>(t.theta_star.data(), t.theta_star.data() + t.theta_star.size());
    j["intercept_star"] = t.intercept_star;
    j["active_set"] = t.active_set;
    std::vector<std::string> pers;
    for (auto p : t.persistence) pers.emplace_back(to_string(p));
    j["persistence"] = pers;
    auto rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < t.coint_matrix.rows(); ++r) {
        std::vector<double> row(static_cast<std::size_t>(t.coint_matrix.cols()));
        for (Eigen::Index c = 0; c < t.coint_matrix.cols(); ++c) row[static_cast<std::size_t>(c)] = t.coint_matrix(r, c);
        rows.push_back(row);
    }
    j["coint_matrix"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace tslasso
