#include "polar/construction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace polar {

namespace {

// ln of the GA transfer approximation: phi(x) ~ exp(-0.4527 x^0.86 + 0.0218)
// for 0 < x < 10, sqrt(pi/x) e^{-x/4} (1 - 10/(7x)) for x >= 10. The
// polynomial form slightly exceeds 1 near zero; clamp so phi(0) = 1 stays
// the maximum.
double log_phi(double x) {
    if (x <= 0.0) {
        return 0.0;
    }
    if (x < 10.0) {
        return std::min(0.0, -0.4527 * std::pow(x, 0.86) + 0.0218);
    }
    return 0.5 * std::log(std::numbers::pi / x) - x / 4.0
        + std::log1p(-10.0 / (7.0 * x));
}

// log_phi is strictly decreasing from 0; bracketed bisection to relative
// tolerance 1e-9.
double log_phi_inv(double target) {
    double lo = 0.0;
    double hi = 1.0;
    while (log_phi(hi) > target) {
        hi *= 2.0;
    }
    while (hi - lo > 1e-9 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (log_phi(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Check-side mean update m' with phi'(m') = 1 - (1 - phi(m))^2, evaluated
// through logs so deep recursions do not underflow.
double check_update(double mean) {
    if (mean <= 0.0) {
        return 0.0;
    }
    const double lp = log_phi(mean);
    const double p = std::exp(lp);
    double target;
    if (p > 1e-9) {
        target = std::log(1.0 - (1.0 - p) * (1.0 - p));
    } else {
        target = std::numbers::ln2 + lp + std::log1p(-0.5 * p);
    }
    if (target >= 0.0) {
        return 0.0;
    }
    return log_phi_inv(target);
}

double gaussian_tail(double z) {
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

} // namespace

ReliabilityProfile ga_density_evolution(std::size_t m, double sigma) {
    if (sigma <= 0.0) {
        throw std::invalid_argument("ga_density_evolution: sigma must be positive");
    }
    std::vector<double> means{2.0 / (sigma * sigma)};
    for (std::size_t stage = 0; stage < m; ++stage) {
        std::vector<double> next(2 * means.size());
        for (std::size_t i = 0; i < means.size(); ++i) {
            next[2 * i] = check_update(means[i]);
            next[2 * i + 1] = 2.0 * means[i];
        }
        means = std::move(next);
    }
    ReliabilityProfile profile;
    profile.design_sigma = sigma;
    profile.p_hat.resize(means.size());
    for (std::size_t i = 0; i < means.size(); ++i) {
        profile.p_hat[i] = std::clamp(gaussian_tail(std::sqrt(means[i] / 2.0)), 0.0, 0.5);
    }
    return profile;
}

std::vector<std::size_t> ga_reliability_order(const ReliabilityProfile& profile) {
    std::vector<std::size_t> order(profile.p_hat.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // ascending reliability = descending error probability; ties keep the
    // lower index first (it is frozen first)
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (profile.p_hat[a] != profile.p_hat[b]) {
            return profile.p_hat[a] > profile.p_hat[b];
        }
        return a < b;
    });
    return order;
}

PolarCode build_frozen_ga(std::size_t n, std::size_t k, double design_snr_db,
                          SnrConvention convention) {
    if (n == 0 || !std::has_single_bit(n)) {
        throw std::invalid_argument("build_frozen_ga: length must be a power of two");
    }
    if (k == 0 || k > n) {
        throw std::invalid_argument("build_frozen_ga: dimension must satisfy 0 < k <= n");
    }
    const auto m = static_cast<std::size_t>(std::countr_zero(n));
    const double rate = static_cast<double>(k) / static_cast<double>(n);
    const double sigma = snr_to_sigma(design_snr_db, convention, rate);
    const auto profile = ga_density_evolution(m, sigma);
    const auto order = ga_reliability_order(profile);
    std::vector<std::size_t> frozen(order.begin(), order.begin() + (n - k));
    return PolarCode(n, k, std::move(frozen));
}

PolarCode build_frozen_from_sequence(std::size_t n, std::size_t k,
                                     const std::vector<std::size_t>& seq) {
    if (n == 0 || !std::has_single_bit(n)) {
        throw std::invalid_argument("build_frozen_from_sequence: length must be a power of two");
    }
    if (k == 0 || k > n) {
        throw std::invalid_argument("build_frozen_from_sequence: dimension must satisfy 0 < k <= n");
    }
    if (seq.size() != n) {
        throw std::invalid_argument("build_frozen_from_sequence: sequence length must equal n");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t i : seq) {
        if (i >= n || seen[i]) {
            throw std::invalid_argument("build_frozen_from_sequence: sequence is not a permutation");
        }
        seen[i] = true;
    }
    std::vector<std::size_t> frozen(seq.begin(), seq.begin() + (n - k));
    return PolarCode(n, k, std::move(frozen));
}

} // namespace polar
