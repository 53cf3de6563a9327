// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "anmimo/rate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "anmimo/wishart.hpp"

namespace anmimo {

std::string to_string(RateMethod m) {
    switch (m) {
        case RateMethod::exact: return "exact";
        case RateMethod::approx: return "approx";
        case RateMethod::monte_carlo: return "monte-carlo";
    }
    return "unknown";
}

RateBreakdown exact_ergodic_secrecy_rate(const SystemConfig &config, const QuadratureSpec &quad) {
    config.validate();
    const double rho = config.rho();

    RateBreakdown out;
    out.method = RateMethod::exact;

    const CorrelationMatrix Rr = config.bob_R();
    out.c_main_ergodic =
        eigenchannel_capacity(WishartParams::from_correlation(Rr, config.t), rho, config.s1, quad);

    if (config.e > 0) {
        const CorrelationMatrix Re = config.eve_R();
        const int n1 = std::min(config.s2, config.e);
        if (config.s2 > 0)
            out.c_h3 = eigenchannel_capacity(WishartParams::from_correlation(Re, config.s2), rho,
                                             n1, quad);
        out.c_h4 =
            eigenchannel_capacity(WishartParams::from_correlation(Re, config.t), rho, config.e, quad);
    }
    out.secrecy_rate = std::max(out.unclamped(), 0.0);
    return out;
}

RateBreakdown approx_ergodic_secrecy_rate(const SystemConfig &config) {
    config.validate();
    const double rho = config.rho();

    RateBreakdown out;
    out.method = RateMethod::approx;

    const CorrelationMatrix Rr = config.bob_R();
    const Eigen::VectorXd mean_eigs =
        marginal_eigenvalue_means(WishartParams::from_correlation(Rr, config.t));
    for (int i = 0; i < config.s1; ++i)
        out.c_main_ergodic += std::log2(1.0 + rho * mean_eigs(i));

    if (config.e > 0) {
        const CorrelationMatrix Re = config.eve_R();
        const Eigen::VectorXd varrho = principal_minor_sums(Re);
        const int m1 = std::max(config.e, config.s2);

        auto moment_sum = [&](int free_dim) {
            double acc = 1.0;
            for (int k = 1; k <= config.e; ++k) {
                double factor = std::pow(rho, k) * varrho(k - 1);
                for (int i = 0; i < k; ++i) factor *= static_cast<double>(free_dim - i);
                acc += factor;
            }
            return acc;
        };
        if (config.s2 > 0) out.c_h3 = std::log2(moment_sum(m1));
        out.c_h4 = std::log2(moment_sum(config.t));
    }
    out.secrecy_rate = std::max(out.unclamped(), 0.0);
    return out;
}

double asymptotic_largest_eigen_mean(double c, double sigma1) {
    if (!(c > 0.0) || !(c < 1.0))
        throw std::domain_error("asymptotic_largest_eigen_mean: c must lie in (0, 1)");
    if (!(sigma1 > 0)) throw std::domain_error("asymptotic_largest_eigen_mean: sigma1 must be > 0");
    const double edge = 1.0 + std::sqrt(c);
    if (sigma1 > edge) return sigma1 * (1.0 + c / (sigma1 - 1.0));
    return edge * edge;
}

double chi1_high_low_snr(const SystemConfig &config) {
    config.validate();
    const int n = std::min(config.t, config.r);
    const int m = std::max(config.t, config.r);
    if (config.s1 != n)
        throw std::domain_error("chi1_high_low_snr: only stated for s1 = min(t, r)");

    const double rho = config.rho();
    const CorrelationMatrix Rr = config.bob_R();
    const Eigen::VectorXd mean_eigs =
        marginal_eigenvalue_means(WishartParams::from_correlation(Rr, config.t));

    // Regime picked on the weakest used subchannel: every rho E[lambda_i]
    // is large in the high branch.
    double hbar;
    if (rho * mean_eigs(n - 1) >= 1.0) {
        double prod = 1.0;
        for (int i = 0; i < n; ++i) prod *= static_cast<double>(m - i);
        hbar = std::log2(prod);
    } else {
        hbar = 0.0;
        for (int i = 0; i < n; ++i) hbar += digamma_positive_int(m - i);
    }
    return n * std::log2(rho) + hbar + std::log2(determinant(Rr));
}

S1Search search_best_s1(const SystemConfig &base, const QuadratureSpec &quad) {
    const int n = std::min(base.t, base.r);
    S1Search out;
    out.rates.reserve(n);
    double best = -std::numeric_limits<double>::infinity();
    for (int s1 = 1; s1 <= n; ++s1) {
        const double rate = exact_ergodic_secrecy_rate(base.with_s1(s1), quad).secrecy_rate;
        out.rates.push_back(rate);
        if (rate > best) { // strict: ties keep the smaller s1
            best = rate;
            out.best_s1 = s1;
        }
    }
    return out;
}

} // namespace anmimo
