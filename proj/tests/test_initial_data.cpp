#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "thinheat/initial_data.hpp"
#include "thinheat/types.hpp"

using thinheat::kPi;

TEST_CASE("make_initial: built-in selectors evaluate pointwise") {
    const auto constant = thinheat::make_initial("constant");
    CHECK(constant(0.3, 0.9) == 1.0);

    const auto cx1 = thinheat::make_initial("cos_x1(2)");
    CHECK(cx1(0.25, 0.8) == doctest::Approx(std::cos(0.5 * kPi)).epsilon(1e-15));
    CHECK(cx1(0.5, 0.1) == doctest::Approx(-1.0).epsilon(1e-12));

    const auto cx2 = thinheat::make_initial("cos_x2(1)");
    CHECK(cx2(0.9, 0.5) == doctest::Approx(std::cos(0.5 * kPi)).epsilon(1e-12));

    const auto prod = thinheat::make_initial("product(1,3)");
    CHECK(prod(0.2, 0.4) ==
          doctest::Approx(std::cos(0.2 * kPi) * std::cos(1.2 * kPi)).epsilon(1e-12));
}

TEST_CASE("make_initial: sums split on top-level commas only") {
    const auto s = thinheat::make_initial("sum:cos_x1(1),cos_x2(1)");
    CHECK(s(0.1, 0.7) ==
          doctest::Approx(std::cos(0.1 * kPi) + std::cos(0.7 * kPi)).epsilon(1e-12));

    const auto nested = thinheat::make_initial("sum:product(1,2),constant,cos_x1(3)");
    CHECK(nested(0.3, 0.25) ==
          doctest::Approx(std::cos(0.3 * kPi) * std::cos(0.5 * kPi) + 1.0 +
                          std::cos(0.9 * kPi))
              .epsilon(1e-12));

    const auto spaced = thinheat::make_initial("sum: cos_x1(1), constant");
    CHECK(spaced(0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("make_initial rejects malformed selectors with the offending piece") {
    CHECK_THROWS_AS(thinheat::make_initial(""), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial("wavelet"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial("cos_x1"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial("cos_x1()"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial("cos_x1(a)"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial("cos_x1(-1)"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial("product(1)"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial("product(1,2,3)"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial("sum:"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial("sum:cos_x1(1),"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial("sum:sum:constant"), std::invalid_argument);

    try {
        thinheat::make_initial("blob(2)");
        FAIL("expected a throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("blob") != std::string::npos);
    }
}

TEST_CASE("make_initial_1d keeps the x2-free subset") {
    const auto constant = thinheat::make_initial_1d("constant");
    CHECK(constant(0.4) == 1.0);

    const auto cx1 = thinheat::make_initial_1d("cos_x1(2)");
    CHECK(cx1(0.25) == doctest::Approx(std::cos(0.5 * kPi)).epsilon(1e-15));

    const auto s = thinheat::make_initial_1d("sum:constant,cos_x1(1)");
    CHECK(s(0.0) == doctest::Approx(2.0).epsilon(1e-15));

    CHECK_THROWS_AS(thinheat::make_initial_1d("cos_x2(1)"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial_1d("product(1,1)"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial_1d("sum:constant,cos_x2(2)"), std::invalid_argument);
    CHECK_THROWS_AS(thinheat::make_initial_1d("spline"), std::invalid_argument);
}
