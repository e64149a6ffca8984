#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "thinheat/limit1d.hpp"

using thinheat::Epsilon;
using thinheat::GridField;
using thinheat::GridField1D;
using thinheat::kPi;
using thinheat::kPiSq;

namespace {

double max_abs_diff1d(const GridField1D& a, const GridField1D& b) {
    double worst = 0.0;
    for (int i = 0; i < a.nx(); ++i) worst = std::max(worst, std::fabs(a.at(i) - b.at(i)));
    return worst;
}

double max_abs_diff(const GridField& a, const GridField& b) {
    double worst = 0.0;
    for (int i = 0; i < a.nx1(); ++i) {
        for (int j = 0; j < a.nx2(); ++j) {
            worst = std::max(worst, std::fabs(a.at(i, j) - b.at(i, j)));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("eigenvalue1d follows pi^2 (n-1)^2") {
    CHECK(thinheat::eigenvalue1d(1) == 0.0);
    CHECK(thinheat::eigenvalue1d(2) == doctest::Approx(9.8696044).epsilon(1e-7));
    CHECK(thinheat::eigenvalue1d(3) == doctest::Approx(39.4784176).epsilon(1e-7));
    CHECK(thinheat::eigenvalue1d(2) == kPiSq);
    CHECK(thinheat::eigenvalue1d(3) == kPiSq * 4.0);
    CHECK_THROWS_AS(thinheat::eigenvalue1d(0), std::invalid_argument);
}

TEST_CASE("eigenvalue1d matches the sorted 2D ladder at eps = 1/k bitwise") {
    for (int k : {1, 2, 4, 8}) {
        const Epsilon eps(1.0 / static_cast<double>(k));
        for (int n = 1; n <= k; ++n) {
            const auto ladder = thinheat::ordered_spectrum(eps, n);
            CHECK(ladder[static_cast<std::size_t>(n) - 1].lambda == thinheat::eigenvalue1d(n));
        }
    }
}

TEST_CASE("eigenfunction1d values and normalization") {
    CHECK(thinheat::eigenfunction1d(1, 0.0) == 1.0);
    CHECK(thinheat::eigenfunction1d(1, 0.73) == 1.0);
    CHECK(thinheat::eigenfunction1d(2, 0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(thinheat::eigenfunction1d(3, 0.5) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(thinheat::eigenfunction1d(0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::eigenfunction1d(2, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::eigenfunction1d(2, 1.1), std::invalid_argument);

    const GridField1D mode2 =
        thinheat::sample1d([](double x) { return thinheat::eigenfunction1d(2, x); }, 65);
    CHECK(thinheat::inner_product1d(mode2, mode2) == doctest::Approx(1.0).epsilon(1e-10));
    const GridField1D mode3 =
        thinheat::sample1d([](double x) { return thinheat::eigenfunction1d(3, x); }, 65);
    CHECK(thinheat::inner_product1d(mode2, mode3) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("project1d and reconstruct1d round-trip band-limited data") {
    const GridField1D f = thinheat::sample1d(
        [](double x) { return 2.0 - std::cos(kPi * x) + 0.5 * std::cos(3.0 * kPi * x); }, 65);
    const thinheat::SpectralState1D state = thinheat::project1d(f, 6);
    CHECK(state.coefficient(0) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(state.coefficient(1) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-8));
    CHECK(state.coefficient(2) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(state.coefficient(3) == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-8));
    CHECK(max_abs_diff1d(thinheat::reconstruct1d(state, f.nx()), f) <= 1e-8);
    CHECK_THROWS_AS(thinheat::project1d(f, 0), std::invalid_argument);
}

TEST_CASE("evolve1d: equilibrium and closed forms") {
    const GridField1D one = thinheat::sample1d([](double) { return 1.0; }, 33);
    CHECK(max_abs_diff1d(thinheat::evolve1d(one, 3.0), one) <= 1e-12);

    const GridField1D c1 = thinheat::sample1d([](double x) { return std::cos(kPi * x); }, 65);
    const double d1 = std::exp(-0.1 * kPiSq);
    CHECK(d1 == doctest::Approx(0.372718).epsilon(1e-5));
    const GridField1D want1 =
        thinheat::sample1d([d1](double x) { return d1 * std::cos(kPi * x); }, 65);
    CHECK(max_abs_diff1d(thinheat::evolve1d(c1, 0.1), want1) <= 1e-8);

    const GridField1D c3 = thinheat::sample1d([](double x) { return std::cos(3.0 * kPi * x); }, 65);
    const double d3 = std::exp(-1.8 * kPiSq);
    CHECK(d3 == doctest::Approx(1.92e-8).epsilon(1e-2));
    const GridField1D want3 =
        thinheat::sample1d([d3](double x) { return d3 * std::cos(3.0 * kPi * x); }, 65);
    CHECK(max_abs_diff1d(thinheat::evolve1d(c3, 0.2), want3) <= 1e-8);

    CHECK_THROWS_AS(thinheat::evolve1d(one, -0.5), std::invalid_argument);
}

TEST_CASE("evolve1d semigroup splits bitwise") {
    std::vector<double> coeffs{0.3, -1.1, 0.7, 0.0, 2.5};
    const thinheat::SpectralState1D s(coeffs);
    const thinheat::SpectralState1D split = thinheat::evolve(thinheat::evolve(s, 0.7), 0.4);
    const thinheat::SpectralState1D direct = thinheat::evolve(s, 0.7 + 0.4);
    for (std::size_t k = 0; k < s.size(); ++k) {
        CHECK(split.coefficient(k) == direct.coefficient(k));
    }
    CHECK(thinheat::evolve(s, 5.0).coefficient(0) == 0.3);
}

TEST_CASE("embed: constants, cosine column content, zero") {
    const GridField1D one = thinheat::sample1d([](double) { return 1.0; }, 17);
    const GridField embedded_one = thinheat::embed(one, 9);
    for (int i = 0; i < 17; ++i) {
        for (int j = 0; j < 9; ++j) {
            CHECK(embedded_one.at(i, j) == 1.0);
        }
    }

    const GridField1D c1 = thinheat::sample1d([](double x) { return std::cos(kPi * x); }, 65);
    const GridField embedded = thinheat::embed(c1, 65);
    const thinheat::SpectralState state = thinheat::project(embedded, Epsilon(0.5), 8);
    for (std::size_t k = 0; k < state.size(); ++k) {
        const thinheat::EigenPair& p = state.pair(k);
        if (p.mode.m == 1 && p.mode.n == 0) {
            CHECK(state.coefficient(k) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
        } else if (p.mode.n != 0) {
            CHECK(state.coefficient(k) == doctest::Approx(0.0).epsilon(1e-12));
        } else {
            CHECK(state.coefficient(k) == doctest::Approx(0.0).epsilon(1e-8));
        }
    }

    const GridField1D zero = thinheat::sample1d([](double) { return 0.0; }, 5);
    const GridField embedded_zero = thinheat::embed(zero, 7);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 7; ++j) {
            CHECK(embedded_zero.at(i, j) == 0.0);
        }
    }
}

TEST_CASE("vertical_average: constants, odd transverse data, linearity") {
    const GridField c = thinheat::sample([](double, double) { return 4.25; }, 17, 17);
    const GridField1D avg_c = thinheat::vertical_average(c);
    for (int i = 0; i < avg_c.nx(); ++i) CHECK(avg_c.at(i) == doctest::Approx(4.25).epsilon(1e-14));

    const GridField odd = thinheat::sample([](double, double x2) { return std::cos(kPi * x2); },
                                           33, 33);
    const GridField1D avg_odd = thinheat::vertical_average(odd);
    for (int i = 0; i < avg_odd.nx(); ++i) CHECK(std::fabs(avg_odd.at(i)) <= 1e-10);

    const GridField mixed = thinheat::sample(
        [](double x1, double x2) { return std::cos(kPi * x1) * (1.0 + std::cos(kPi * x2)); }, 33,
        33);
    const GridField1D avg_mixed = thinheat::vertical_average(mixed);
    for (int i = 0; i < avg_mixed.nx(); ++i) {
        CHECK(avg_mixed.at(i) ==
              doctest::Approx(std::cos(kPi * avg_mixed.coord(i))).epsilon(1e-10));
    }

    const GridField phys =
        thinheat::sample_physical([](double, double) { return 1.0; }, Epsilon(0.5), 5, 5);
    CHECK_THROWS_AS(thinheat::vertical_average(phys), std::invalid_argument);
}

TEST_CASE("embed then vertical_average is an orthogonal projection") {
    const GridField f = thinheat::sample(
        [](double x1, double x2) {
            return std::exp(std::cos(kPi * x1)) * (1.0 + 0.5 * std::sin(kPi * x2) * std::sin(kPi * x2));
        },
        65, 65);
    const GridField g = thinheat::sample(
        [](double x1, double x2) { return std::cos(kPi * x1) + 0.25 * std::cos(2.0 * kPi * x2); },
        65, 65);

    const GridField pf = thinheat::embed(thinheat::vertical_average(f), f.nx2());
    const GridField pg = thinheat::embed(thinheat::vertical_average(g), g.nx2());

    const GridField ppf = thinheat::embed(thinheat::vertical_average(pf), pf.nx2());
    CHECK(max_abs_diff(ppf, pf) <= 1e-8);

    const double pf_g = thinheat::inner_product(pf, g);
    const double f_pg = thinheat::inner_product(f, pg);
    CHECK(pf_g == doctest::Approx(f_pg).epsilon(1e-8));
}

TEST_CASE("x2-independent data evolves identically in 1D and 2D") {
    const GridField1D u = thinheat::sample1d(
        [](double x) { return 1.0 + std::cos(kPi * x) - 0.2 * std::cos(2.0 * kPi * x); }, 65);
    for (double eps : {1.0, 0.5, 0.125}) {
        for (double t : {0.0, 0.05, 0.4}) {
            const GridField two_d = thinheat::solve(thinheat::embed(u, 65), Epsilon(eps), t);
            const GridField one_d_embedded = thinheat::embed(thinheat::evolve1d(u, t), 65);
            CHECK(max_abs_diff(two_d, one_d_embedded) <= 1e-8);
        }
    }
}
