#include "polar/construction.hpp"

#include "oracles.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

using namespace polar;

namespace {

double gaussian_tail(double z) {
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

// Reference profile for m = 4, sigma = 0.8: min-sum Monte Carlo density
// evolution, 1e7 samples, mc_density_evolution seed 20240901. Entries
// below 1e-6 are outside the comparison gate.
constexpr double kMcProfile[16] = {
    0.4889366, 0.3832668, 0.3512365, 0.1416958,
    0.3020037, 0.0993376, 0.0707210, 0.0056174,
    0.2368274, 0.0597710, 0.0399225, 0.0019170,
    0.0243665, 0.0007599, 0.0004049, 0.0000001,
};

} // namespace

TEST_SUITE("construction") {

TEST_CASE("single channel reduces to the raw Gaussian tail") {
    for (double sigma : {0.5, 0.8, 1.0, 2.0}) {
        const auto profile = ga_density_evolution(0, sigma);
        REQUIRE(profile.p_hat.size() == 1);
        CHECK(profile.p_hat[0] == doctest::Approx(gaussian_tail(1.0 / sigma)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(ga_density_evolution(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ga_density_evolution(3, -1.0), std::invalid_argument);
}

TEST_CASE("a useless channel polarizes nowhere") {
    const auto profile = ga_density_evolution(4, 1e6);
    for (double p : profile.p_hat) {
        CHECK(p == doctest::Approx(0.5).epsilon(1e-3));
    }
}

TEST_CASE("profile entries stay in range and the last index is best") {
    for (double sigma : {0.5, 0.8, 1.2}) {
        const auto profile = ga_density_evolution(6, sigma);
        double minimum = 1.0;
        for (double p : profile.p_hat) {
            CHECK(p >= 0.0);
            CHECK(p <= 0.5);
            minimum = std::min(minimum, p);
        }
        CHECK(profile.p_hat[63] == minimum);
    }
}

TEST_CASE("GA tracks the min-sum Monte Carlo oracle within 10%") {
    const auto profile = ga_density_evolution(4, 0.8);
    for (std::size_t i = 0; i < 16; ++i) {
        if (kMcProfile[i] < 1e-6) {
            continue;
        }
        const double rel = std::fabs(profile.p_hat[i] - kMcProfile[i]) / kMcProfile[i];
        CAPTURE(i);
        CHECK(rel <= 0.10);
    }
}

TEST_CASE("polarization partial order holds exhaustively up to m = 6") {
    for (std::size_t m = 1; m <= 6; ++m) {
        const std::size_t n = std::size_t{1} << m;
        const auto profile = ga_density_evolution(m, 0.8);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if ((i & j) == i && i != j) {   // j dominates i digit-wise
                    REQUIRE(profile.p_hat[j] <= profile.p_hat[i] + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("profiles are monotone in sigma") {
    const auto tight = ga_density_evolution(5, 0.7);
    const auto loose = ga_density_evolution(5, 0.9);
    for (std::size_t i = 0; i < 32; ++i) {
        CHECK(loose.p_hat[i] >= tight.p_hat[i] - 1e-12);
    }
}

TEST_CASE("GA frozen sets") {
    CHECK(build_frozen_ga(32, 32, 2.0).frozen_indices().empty());
    CHECK_THROWS_AS(build_frozen_ga(32, 0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(build_frozen_ga(32, 33, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(build_frozen_ga(24, 12, 2.0), std::invalid_argument);

    const auto code = build_frozen_ga(32, 16, 2.0);
    CHECK(code.is_frozen(0));
    CHECK_FALSE(code.is_frozen(31));
}

TEST_CASE("GA frozen sets are nested in the dimension") {
    for (std::size_t k = 1; k < 32; ++k) {
        const auto larger = build_frozen_ga(32, k, 2.0, SnrConvention::EsN0);
        const auto smaller = build_frozen_ga(32, k + 1, 2.0, SnrConvention::EsN0);
        for (std::size_t i : smaller.frozen_indices()) {
            CHECK(larger.is_frozen(i));
        }
    }
}

TEST_CASE("sequence construction") {
    const std::size_t n = 32;
    const auto profile = ga_density_evolution(5, 0.8);
    const auto order = ga_reliability_order(profile);

    CHECK(build_frozen_from_sequence(n, n, order).frozen_indices().empty());
    CHECK_THROWS_AS(build_frozen_from_sequence(n, 0, order), std::invalid_argument);

    std::vector<std::size_t> truncated(order.begin(), order.end() - 1);
    CHECK_THROWS_AS(build_frozen_from_sequence(n, 16, truncated), std::invalid_argument);
    auto duplicated = order;
    duplicated[5] = duplicated[4];
    CHECK_THROWS_AS(build_frozen_from_sequence(n, 16, duplicated), std::invalid_argument);

    // feeding the GA ranking back reproduces the GA construction
    const auto direct = build_frozen_ga(n, 12, 2.0, SnrConvention::EsN0);
    const auto profile2 =
        ga_density_evolution(5, snr_to_sigma(2.0, SnrConvention::EsN0, 12.0 / 32.0));
    const auto via_seq = build_frozen_from_sequence(n, 12, ga_reliability_order(profile2));
    CHECK(direct == via_seq);
}

} // TEST_SUITE
