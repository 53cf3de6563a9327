// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "anmimo/an_scheme.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "anmimo/numerics.hpp"

namespace anmimo {

PrecoderPair build_precoders(const Eigen::MatrixXcd &H, int s1) {
    const int r = static_cast<int>(H.rows());
    const int t = static_cast<int>(H.cols());
    if (s1 < 1 || s1 > std::min(t, r))
        throw std::invalid_argument("build_precoders: s1 must lie in 1..min(t, r)");

    HermitianEig eig = hermitian_eig(H.adjoint() * H);
    if (eig.values(s1 - 1) <= 1e-12 * std::max(eig.values(0), 1.0))
        throw std::invalid_argument("build_precoders: channel rank is below s1");

    PrecoderPair p;
    p.eigvals = eig.values;
    p.message_precoder = eig.vectors.leftCols(s1);
    p.an_precoder = eig.vectors.rightCols(t - s1);
    return p;
}

double main_capacity(const Eigen::MatrixXcd &H, const Eigen::MatrixXcd &B, double rho) {
    if (!(rho > 0)) throw std::invalid_argument("main_capacity: rho must be > 0");
    return log2_det_identity_plus_gram(H * B, rho);
}

double wiretap_capacity(const Eigen::MatrixXcd &He, const Eigen::MatrixXcd &B,
                        const Eigen::MatrixXcd &Z, double rho) {
    const int e = static_cast<int>(He.rows());
    const int t = static_cast<int>(He.cols());
    if (t <= e)
        throw std::invalid_argument("wiretap_capacity: requires t > e, the noise is not "
                                    "concealable otherwise");
    if (B.rows() != t || Z.rows() != t || B.cols() + Z.cols() != t)
        throw std::invalid_argument("wiretap_capacity: precoder shapes do not match He");
    Eigen::MatrixXcd U(t, t);
    U << B, Z;
    const double c4 = log2_det_identity_plus_gram(He * U, rho);
    const double c3 = Z.cols() > 0 ? log2_det_identity_plus_gram(He * Z, rho) : 0.0;
    return c4 - c3;
}

Eigen::VectorXcd preprocess_receive(const Eigen::VectorXcd &y, const Eigen::MatrixXcd &H,
                                    const Eigen::MatrixXcd &B) {
    if (y.size() != H.rows())
        throw std::invalid_argument("preprocess_receive: y length must match receive antennas");
    return (H * B).adjoint() * y;
}

CapacityTerms capacity_terms(const Eigen::MatrixXcd &H, const Eigen::MatrixXcd &He, int s1,
                             double rho) {
    const int t = static_cast<int>(H.cols());
    HermitianEig eig = hermitian_eig(H.adjoint() * H);

    CapacityTerms out;
    for (int i = 0; i < s1; ++i) out.c_main += std::log2(1.0 + rho * std::max(eig.values(i), 0.0));

    if (He.rows() > 0) {
        // He [B, Z] has the same Gram spectrum as He ([B, Z] unitary).
        const double c4 = log2_det_identity_plus_gram(He, rho);
        double c3 = 0.0;
        if (s1 < t) {
            const Eigen::MatrixXcd Z = eig.vectors.rightCols(t - s1);
            c3 = log2_det_identity_plus_gram(He * Z, rho);
        }
        out.c_wiretap = c4 - c3;
    }
    out.secrecy = std::max(out.c_main - out.c_wiretap, 0.0);
    return out;
}

namespace {

struct BlockStats {
    double sum = 0.0, sum_sq = 0.0;           // clamped
    double usum = 0.0, usum_sq = 0.0;         // unclamped
    long clamped = 0;
    long n = 0;
};

} // namespace

MonteCarloResult monte_carlo_secrecy(const SystemConfig &config, long trials, const RngStream &rng,
                                     int jobs) {
    config.validate();
    if (trials < 1) throw std::invalid_argument("monte_carlo_secrecy: trials must be >= 1");

    const CorrelationMatrix Rr = config.bob_R();
    const CorrelationMatrix Re = config.e > 0 ? config.eve_R() : CorrelationMatrix{};
    const double rho = config.rho();

    constexpr long kBlock = 4096;
    const long nblocks = (trials + kBlock - 1) / kBlock;
    std::vector<BlockStats> parts(nblocks);

    auto run_block = [&](long b) {
        RngStream local = rng.derive(static_cast<uint64_t>(b));
        BlockStats st;
        const long n = std::min(kBlock, trials - b * kBlock);
        for (long i = 0; i < n; ++i) {
            const Eigen::MatrixXcd H = sample_channel(Rr, config.t, local);
            CapacityTerms terms;
            if (config.e > 0) {
                const Eigen::MatrixXcd He = sample_channel(Re, config.t, local);
                terms = capacity_terms(H, He, config.s1, rho);
            } else {
                terms = capacity_terms(H, Eigen::MatrixXcd(0, config.t), config.s1, rho);
            }
            const double u = terms.c_main - terms.c_wiretap;
            const double c = std::max(u, 0.0);
            st.sum += c;
            st.sum_sq += c * c;
            st.usum += u;
            st.usum_sq += u * u;
            if (u < 0) ++st.clamped;
        }
        st.n = n;
        parts[b] = st;
    };

    if (jobs <= 1 || nblocks == 1) {
        for (long b = 0; b < nblocks; ++b) run_block(b);
    } else {
        std::atomic<long> next{0};
        const int workers = static_cast<int>(std::min<long>(jobs, nblocks));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (long b = next.fetch_add(1); b < nblocks; b = next.fetch_add(1)) run_block(b);
            });
        for (auto &th : pool) th.join();
    }

    BlockStats total;
    for (const BlockStats &st : parts) {
        total.sum += st.sum;
        total.sum_sq += st.sum_sq;
        total.usum += st.usum;
        total.usum_sq += st.usum_sq;
        total.clamped += st.clamped;
        total.n += st.n;
    }

    const double n = static_cast<double>(total.n);
    MonteCarloResult res;
    res.trials = total.n;
    res.mean = total.sum / n;
    res.unclamped_mean = total.usum / n;
    res.clamp_rate = static_cast<double>(total.clamped) / n;
    if (total.n > 1) {
        const double var = std::max(total.sum_sq / n - res.mean * res.mean, 0.0);
        const double uvar = std::max(total.usum_sq / n - res.unclamped_mean * res.unclamped_mean, 0.0);
        res.std_error = std::sqrt(var / (n - 1));
        res.unclamped_std_error = std::sqrt(uvar / (n - 1));
    }
    return res;
}

} // namespace anmimo
