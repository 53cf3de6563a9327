// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "anmimo/channel.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace anmimo {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t mix_stream(uint64_t a, uint64_t b) { return splitmix64(splitmix64(a) ^ (b + 0x9e3779b97f4a7c15ULL)); }

RngStream::RngStream(uint64_t seed, uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(mix_stream(splitmix64(seed), stream_id)) {}

double RngStream::uniform() {
    // 53 high bits -> [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian_half_variance() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    // Box-Muller with radius sqrt(-ln u1): each output is N(0, 1/2).
    const double radius = std::sqrt(-std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

std::complex<double> RngStream::complex_gaussian() {
    const double re = gaussian_half_variance();
    const double im = gaussian_half_variance();
    return {re, im};
}

Eigen::MatrixXcd sample_iid_cn(int rows, int cols, RngStream &rng) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("sample_iid_cn: dimensions must be >= 1");
    Eigen::MatrixXcd W(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) W(i, j) = rng.complex_gaussian();
    return W;
}

Eigen::MatrixXcd sample_channel(const CorrelationMatrix &R, int t, RngStream &rng) {
    if (t < 1) throw std::invalid_argument("sample_channel: t must be >= 1");
    return R.sqrt_entries * sample_iid_cn(R.size(), t, rng);
}

namespace {

InvarianceReport covariance_error(const CorrelationMatrix &R, long trials,
                                  const std::function<Eigen::MatrixXcd()> &draw) {
    const int a = R.size();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(a, a);
    long cols_total = 0;
    for (long tr = 0; tr < trials; ++tr) {
        const Eigen::MatrixXcd X = draw();
        acc += X * X.adjoint();
        cols_total += X.cols();
    }
    acc /= static_cast<double>(cols_total);
    InvarianceReport rep;
    rep.max_cov_error = (acc - R.entries).cwiseAbs().maxCoeff();
    rep.trials = trials;
    return rep;
}

} // namespace

InvarianceReport verify_unitary_invariance(const CorrelationMatrix &R, int t, int f, long trials,
                                           RngStream &rng) {
    if (f < 1 || t < f) throw std::invalid_argument("verify_unitary_invariance: need t >= f >= 1");
    // One unitary per report; its interaction with fresh channel draws is
    // what the distribution claim is about.
    const Eigen::MatrixXcd G = sample_iid_cn(t, f, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
    const Eigen::MatrixXcd F =
        qr.householderQ() * Eigen::MatrixXcd::Identity(t, f);
    return covariance_error(R, trials, [&]() -> Eigen::MatrixXcd {
        return sample_channel(R, t, rng) * F;
    });
}

InvarianceReport direct_sampling_error(const CorrelationMatrix &R, int f, long trials,
                                       RngStream &rng) {
    if (f < 1) throw std::invalid_argument("direct_sampling_error: f must be >= 1");
    return covariance_error(R, trials,
                            [&]() -> Eigen::MatrixXcd { return sample_channel(R, f, rng); });
}

} // namespace anmimo
