// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef ANMIMO_CHANNEL_HPP
#define ANMIMO_CHANNEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

#include "anmimo/corr.hpp"

namespace anmimo {

uint64_t splitmix64(uint64_t x);

// Mixes two identifiers into a substream id (sweep point, trial block, ...).
uint64_t mix_stream(uint64_t a, uint64_t b);

// Seeded, stream-separated random source. The engine (mt19937_64) and the
// Box-Muller transform below are both fully specified, so a given
// (seed, stream_id) reproduces the same draws on any platform. Concurrent
// consumers must use distinct streams; a stream itself is not synchronized.
class RngStream {
  public:
    explicit RngStream(uint64_t seed, uint64_t stream_id = 0);

    uint64_t seed() const { return seed_; }
    uint64_t stream_id() const { return stream_id_; }

    RngStream derive(uint64_t substream) const {
        return RngStream(seed_, mix_stream(stream_id_, substream));
    }

    double uniform(); // [0, 1)

    // One N(0, 1/2) variate; the variance comes out of the Box-Muller radius
    // directly rather than from scaling a unit normal.
    double gaussian_half_variance();

    // CN(0, 1): independent N(0, 1/2) real and imaginary parts.
    std::complex<double> complex_gaussian();

  private:
    uint64_t seed_, stream_id_;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// rows x cols matrix of i.i.d. CN(0, 1) entries.
Eigen::MatrixXcd sample_iid_cn(int rows, int cols, RngStream &rng);

// Kronecker-model draw: R^{1/2} W with W i.i.d. CN(0,1), so the columns have
// covariance R.entries.
Eigen::MatrixXcd sample_channel(const CorrelationMatrix &R, int t, RngStream &rng);

struct InvarianceReport {
    double max_cov_error = 0.0; // max entrywise |empirical cov - R|
    long trials = 0;
};

// Draws He ~ CN(0, R (x) I_t) and an independent t x f unitary F (thin QR of
// a Gaussian matrix), then measures how far the empirical column covariance
// of He F sits from R. Right-multiplication by an independent unitary leaves
// the distribution unchanged, so the error must match plain sampling noise.
InvarianceReport verify_unitary_invariance(const CorrelationMatrix &R, int t, int f, long trials,
                                           RngStream &rng);

// Same measurement without F (direct CN(0, R (x) I_f) draws); the baseline
// the invariance check is compared against.
InvarianceReport direct_sampling_error(const CorrelationMatrix &R, int f, long trials,
                                       RngStream &rng);

} // namespace anmimo

#endif // ANMIMO_CHANNEL_HPP
