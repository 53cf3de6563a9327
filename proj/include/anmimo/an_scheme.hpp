// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef ANMIMO_AN_SCHEME_HPP
#define ANMIMO_AN_SCHEME_HPP

#include <Eigen/Dense>

#include "anmimo/channel.hpp"
#include "anmimo/system_config.hpp"

namespace anmimo {

// Message/noise precoders from the eigendecomposition of H^H H: B spans the
// s1 strongest eigenvectors, Z the remaining t - s1. [B, Z] is unitary, so
// (H B)^H (H Z) = 0 and the receiver can cancel the noise streams.
struct PrecoderPair {
    Eigen::MatrixXcd message_precoder; // B, t x s1
    Eigen::MatrixXcd an_precoder;      // Z, t x s2
    Eigen::VectorXd eigvals;           // all t eigenvalues of H^H H, descending
};

// s1 must lie in 1..min(t, r) and H must have rank >= s1 (ties in the
// spectrum are broken by the decomposition's stable output order).
PrecoderPair build_precoders(const Eigen::MatrixXcd &H, int s1);

// log2 det(I + rho H1 H1^H) with H1 = H B; equals the sum of
// log2(1 + rho lambda_i) over the s1 selected eigenvalues.
double main_capacity(const Eigen::MatrixXcd &H, const Eigen::MatrixXcd &B, double rho);

// Eavesdropper capacity under MMSE-SIC with the noise streams treated as
// interference: log2 det(I + rho H4 H4^H) - log2 det(I + rho H3 H3^H),
// H3 = He Z, H4 = He [B, Z]. Requires t > e.
double wiretap_capacity(const Eigen::MatrixXcd &He, const Eigen::MatrixXcd &B,
                        const Eigen::MatrixXcd &Z, double rho);

// (H B)^H y: projects a received vector onto the message subchannels,
// cancelling any component transmitted through Z.
Eigen::VectorXcd preprocess_receive(const Eigen::VectorXcd &y, const Eigen::MatrixXcd &H,
                                    const Eigen::MatrixXcd &B);

struct CapacityTerms {
    double c_main = 0.0;
    double c_wiretap = 0.0;
    double secrecy = 0.0; // max(c_main - c_wiretap, 0)
};

// Both capacities of one channel realization under the configured split.
CapacityTerms capacity_terms(const Eigen::MatrixXcd &H, const Eigen::MatrixXcd &He, int s1,
                             double rho);

struct MonteCarloResult {
    double mean = 0.0;   // E[max(Cm - Cw, 0)]
    double std_error = 0.0;
    double unclamped_mean = 0.0; // E[Cm] - E[Cw]
    double unclamped_std_error = 0.0;
    double clamp_rate = 0.0; // fraction of realizations with Cm < Cw
    long trials = 0;
};

// Sample mean and standard error of the secrecy rate over independent
// channel draws. Trials are processed in fixed-size blocks with substreams
// derived per block, so the result is identical for any `jobs`.
MonteCarloResult monte_carlo_secrecy(const SystemConfig &config, long trials, const RngStream &rng,
                                     int jobs = 1);

} // namespace anmimo

#endif // ANMIMO_AN_SCHEME_HPP
