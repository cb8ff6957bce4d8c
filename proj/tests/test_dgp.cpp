#include <doctest.h>

#include <tslasso/dgp.hpp>
#include <tslasso/errors.hpp>
#include <tslasso/evalmetrics.hpp>

#include <cmath>
#include <sstream>

using namespace tslasso;

namespace {

double variance(const Vector& v) {
    return (v.array() - v.mean()).square().sum() / static_cast<double>(v.size() - 1);
}

double ar1(const Vector& v) {
    const Eigen::Index n = v.size();
    const Vector a = v.head(n - 1), b = v.tail(n - 1);
    const double ma = a.mean(), mb = b.mean();
    return ((a.array() - ma) * (b.array() - mb)).sum() / (a.array() - ma).square().sum();
}

}  // namespace

TEST_CASE("simulators are deterministic and return n + 1 rows") {
    for (Design d : {Design::DGP1, Design::DGP2, Design::DGP3}) {
        const auto a = simulate({d, 60, 99, kDefaultBurnIn});
        const auto b = simulate({d, 60, 99, kDefaultBurnIn});
        CHECK(a.n() == 61);
        CHECK(a.W == b.W);
        CHECK(a.y == b.y);
        const auto c = simulate({d, 60, 100, kDefaultBurnIn});
        CHECK(c.y != a.y);
    }
    CHECK_THROWS_AS(simulate_dgp1(19, 1), InvalidArgument);
    CHECK_THROWS_AS(design_from_string("dgp4"), InvalidArgument);
}

TEST_CASE("DGP1 truth") {
    const auto d = simulate_dgp1(400, 1);
    REQUIRE(d.truth);
    CHECK(d.p() == 8);
    CHECK(d.truth->active_set == IndexSet{0, 1, 2, 3});
    CHECK(d.truth->intercept_star == 0.25);
    CHECK(d.truth->theta_star(0) == doctest::Approx(1.0 / 20.0).epsilon(1e-15));
    CHECK(d.truth->theta_star(4) == 0.0);
    for (auto p : d.truth->persistence) CHECK(p == Persistence::I1);
}

TEST_CASE("DGP1 random walks have Var(x_n) close to n") {
    const std::size_t n = 400;
    Vector last(200);
    for (int r = 0; r < 200; ++r) last(r) = simulate_dgp1(n, replication_seed(5, Design::DGP1, n, r)).W(n - 1, 0);
    const double ratio = variance(last) / static_cast<double>(n);
    CHECK(ratio >= 0.7);
    CHECK(ratio <= 1.3);
}

TEST_CASE("DGP2 truth and layout") {
    const auto d = simulate_dgp2(100, 2);
    REQUIRE(d.truth);
    CHECK(d.p() == 8);
    CHECK(d.names == std::vector<std::string>{"z1", "z2", "xc1", "xc2", "xc3", "xc4", "x1", "x2"});
    CHECK(d.truth->active_set == IndexSet{0, 2, 3, 6});
    CHECK(d.truth->intercept_star == 0.3);
    CHECK(d.truth->theta_star(0) == 0.4);
    CHECK(d.truth->theta_star(2) == 0.3);
    CHECK(d.truth->theta_star(3) == -0.3);
    CHECK(d.truth->theta_star(6) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(d.truth->coint_matrix.rows() == 2);
    CHECK(inactive_coint_pair(*d.truth) == IndexSet{4, 5});
}

TEST_CASE("DGP2 cointegrating residuals are small relative to the levels") {
    const std::size_t n = 800;
    double ratio = 0.0;
    for (int r = 0; r < 100; ++r) {
        const auto d = simulate_dgp2(n, replication_seed(6, Design::DGP2, n, r));
        const Matrix& L = d.truth->coint_matrix;
        double resid = 0.0;
        for (Eigen::Index k = 0; k < L.rows(); ++k) resid += variance(d.W * L.row(k).transpose());
        ratio += resid / L.rows() / variance(d.W.col(2));
    }
    CHECK(ratio / 100.0 < 0.05);
}

TEST_CASE("z columns have the design AR(1) coefficients") {
    const std::size_t n = 800;
    double dgp2[2] = {0, 0}, dgp3[3] = {0, 0, 0};
    for (int r = 0; r < 100; ++r) {
        const auto a = simulate_dgp2(n, replication_seed(7, Design::DGP2, n, r));
        for (int k = 0; k < 2; ++k) dgp2[k] += ar1(a.W.col(k)) / 100.0;
        const auto b = simulate_dgp3(n, replication_seed(7, Design::DGP3, n, r));
        for (int k = 0; k < 3; ++k) dgp3[k] += ar1(b.W.col(7 + k)) / 100.0;
    }
    CHECK(std::abs(dgp2[0] - 0.5) < 0.15);
    CHECK(std::abs(dgp2[1] - 0.5) < 0.15);
    CHECK(std::abs(dgp3[0] - 0.5) < 0.15);
    CHECK(std::abs(dgp3[1] - 0.2) < 0.15);
    CHECK(std::abs(dgp3[2] - 0.2) < 0.15);
}

TEST_CASE("DGP3 truth") {
    const auto d = simulate_dgp3(100, 3);
    REQUIRE(d.truth);
    CHECK(d.p() == 13);
    CHECK(d.names.front() == "y_lag");
    const Vector& t = d.truth->theta_star;
    CHECK(t(0) == 0.4);
    CHECK(t(1) == 0.75);
    CHECK(t(2) == -0.75);
    CHECK(t(3) == 0.0);
    CHECK(t(4) == 0.0);
    CHECK(t(5) == doctest::Approx(0.15).epsilon(1e-15));
    CHECK(t(6) == 0.0);
    CHECK(t(7) == 0.6);
    CHECK(t(8) == 0.8);
    CHECK(t(9) == 0.0);
    CHECK(t(10) == 0.4);
    CHECK(t(11) == 0.0);
    CHECK(t(12) == 0.0);
    CHECK(inactive_coint_pair(*d.truth) == IndexSet{3, 4});
    // y_lag is the previous response.
    for (Eigen::Index i = 1; i < static_cast<Eigen::Index>(d.n()); ++i) CHECK(d.W(i, 0) == d.y(i - 1));
}

TEST_CASE("DGP3 without innovations sits at its fixed point") {
    ZeroSource zero;
    const auto d = simulate(Design::DGP3, 50, zero);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(d.n()); ++i) {
        CHECK(d.y(i) == doctest::Approx(0.3 / (1.0 - 0.4)).epsilon(1e-12));
    }
}

TEST_CASE("truth labels are consistent") {
    for (Design des : {Design::DGP2, Design::DGP3}) {
        const auto d = simulate({des, 100, 1, kDefaultBurnIn});
        const auto& t = *d.truth;
        CHECK(t.persistence.size() == d.p());
        CHECK(t.active_set == nonzero_indices(t.theta_star));
        for (std::size_t j = 0; j < d.p(); ++j) {
            const bool coint = t.persistence[j] == Persistence::C1 || t.persistence[j] == Persistence::C2;
            const bool in_row = (t.coint_matrix.col(static_cast<Eigen::Index>(j)).array() != 0.0).any();
            CHECK(coint == in_row);
        }
    }
}

TEST_CASE("CSV dump and truth sidecar") {
    const DgpSpec spec{Design::DGP2, 30, 4, kDefaultBurnIn};
    const auto d = simulate(spec);
    std::ostringstream out;
    write_dataset_csv(d, out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,y,z1,z2,xc1,xc2,xc3,xc4,x1,x2");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 31);
    const std::string j = truth_to_json(d, spec);
    CHECK(j.find("\"active_set\"") != std::string::npos);
    CHECK(j.find("\"index_base\": 0") != std::string::npos);
}
