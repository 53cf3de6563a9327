// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef ANMIMO_RATE_HPP
#define ANMIMO_RATE_HPP

#include <string>
#include <vector>

#include "anmimo/numerics.hpp"
#include "anmimo/system_config.hpp"

namespace anmimo {

enum class RateMethod { exact, approx, monte_carlo };

std::string to_string(RateMethod m);

// Ergodic secrecy rate split into its three capacity terms (bits/s/Hz):
// the main-channel term over the s1 message subchannels, the eavesdropper's
// noise-loading term (b = s2 side), and the eavesdropper's full-observation
// term (b = t side). The clamp at zero is applied to the sum, never per term.
struct RateBreakdown {
    double c_main_ergodic = 0.0;
    double c_h3 = 0.0;
    double c_h4 = 0.0;
    double secrecy_rate = 0.0; // max(c_main_ergodic + c_h3 - c_h4, 0)
    RateMethod method = RateMethod::exact;

    double unclamped() const { return c_main_ergodic + c_h3 - c_h4; }
};

// Exact ergodic secrecy rate from the marginal eigenvalue distributions:
//   [ C(R_r, rho, s1) + C(R_e, rho, min(s2, e)) - C(R_e, rho, e) ]^+
// with the first capacity over an r x t spectrum and the others over e x s2
// and e x t. With s2 = 0 the middle term vanishes.
RateBreakdown exact_ergodic_secrecy_rate(const SystemConfig &config,
                                         const QuadratureSpec &quad = {});

// Closed-form approximation: Jensen bound on the main term via the analytic
// eigenvalue means, and moment-expansion wiretap terms
//   log2[1 + sum_k rho^k prod_{i<k} (m1 - i) varrho_k],  m1 = max(e, s2),
// with t in place of m1 for the full-observation term; varrho_k are the
// principal-minor sums of R_e.
RateBreakdown approx_ergodic_secrecy_rate(const SystemConfig &config);

// Deterministic-equivalent mean of the largest eigenvalue of H H^H / t in the
// large-(t, r) limit with c = r/t in (0, 1): sigma1 (1 + c/(sigma1 - 1)) above
// the phase-transition point sigma1 = 1 + sqrt(c), (1 + sqrt(c))^2 below it.
double asymptotic_largest_eigen_mean(double c, double sigma1);

// High/low-SNR closed form for the main term when s1 = n = min(t, r):
//   n log2(rho) + hbar + log2 det(R_r),
// hbar = log2 prod_{i=0}^{n-1} (m - i) when rho E[lambda] >> 1 and
// sum_{i=0}^{n-1} psi(m - i) when rho E[lambda] << 1.
double chi1_high_low_snr(const SystemConfig &config);

struct S1Search {
    int best_s1 = 1;
    std::vector<double> rates; // indexed by s1 - 1, s1 = 1..min(t, r)
};

// Evaluates the exact rate for every s1 in 1..min(t, r); ties break toward
// the smaller s1.
S1Search search_best_s1(const SystemConfig &base, const QuadratureSpec &quad = {});

} // namespace anmimo

#endif // ANMIMO_RATE_HPP
