// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "anmimo/corr.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "anmimo/numerics.hpp"

namespace anmimo {

void CorrelationSpec::validate() const {
    if (antennas < 1) throw std::invalid_argument("CorrelationSpec: antennas must be >= 1");
    if (!(spacing > 0)) throw std::invalid_argument("CorrelationSpec: spacing must be > 0");
    if (!(mean_aoa_deg > 0.0) || !(mean_aoa_deg < 180.0))
        throw std::invalid_argument("CorrelationSpec: mean AoA must lie in (0, 180) degrees");
    if (ras_deg < 0) throw std::invalid_argument("CorrelationSpec: angle spread must be >= 0");
}

Eigen::VectorXd regularize_descending(Eigen::VectorXd sigma, double trace, double eps_gap) {
    const Eigen::Index a = sigma.size();
    std::sort(sigma.data(), sigma.data() + a, std::greater<double>());
    for (Eigen::Index i = 0; i < a; ++i) sigma(i) = std::max(sigma(i), 0.0);
    const double s1 = sigma(0);
    if (!(s1 > 0)) throw DegeneracyError("regularize_descending: zero spectrum");

    bool tight = false;
    for (Eigen::Index i = 0; i + 1 < a; ++i)
        if (sigma(i) - sigma(i + 1) < eps_gap * s1) tight = true;
    if (tight) {
        const double gap = eps_gap * s1;
        // Multiplicative spread, strongest boost on the largest eigenvalue so
        // descent is strengthened, plus an additive floor for exact ties and
        // zeros; the trace is restored afterwards.
        for (Eigen::Index i = 0; i < a; ++i)
            sigma(i) = sigma(i) * (1.0 + static_cast<double>(a - 1 - i) * eps_gap);
        for (Eigen::Index i = a - 2; i >= 0; --i)
            sigma(i) = std::max(sigma(i), sigma(i + 1) + gap);
        sigma(a - 1) = std::max(sigma(a - 1), gap);
        for (Eigen::Index i = a - 2; i >= 0; --i)
            sigma(i) = std::max(sigma(i), sigma(i + 1) + gap);
        sigma *= trace / sigma.sum();
    }
    for (Eigen::Index i = 0; i + 1 < a; ++i)
        if (!(sigma(i) > sigma(i + 1)))
            throw DegeneracyError("regularize_descending: spectrum resists regularization");
    if (!(sigma(a - 1) > 0))
        throw DegeneracyError("regularize_descending: spectrum not positive definite");
    return sigma;
}

namespace {

CorrelationMatrix finish(Eigen::MatrixXcd entries) {
    const double eps_gap = 1e-6;
    CorrelationMatrix R;
    R.entries = std::move(entries);
    HermitianEig eig = hermitian_eig(R.entries);
    R.eigenvalues =
        regularize_descending(eig.values, static_cast<double>(R.entries.rows()), eps_gap);
    R.sqrt_entries = hermitian_sqrt(R.entries);
    return R;
}

} // namespace

CorrelationMatrix build_correlation(const CorrelationSpec &spec) {
    spec.validate();
    const int a = spec.antennas;
    const double aoa = spec.mean_aoa_deg * M_PI / 180.0;
    const double ras = spec.ras_deg * M_PI / 180.0;
    const double phase_rate = 2.0 * M_PI * spec.spacing * std::cos(aoa);
    const double spread_rate = 2.0 * M_PI * spec.spacing * ras * std::sin(aoa);

    Eigen::MatrixXcd R(a, a);
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < a; ++v) {
            const double k = static_cast<double>(u - v); // antenna index difference
            const double mag = std::exp(-0.5 * spread_rate * spread_rate * k * k);
            R(u, v) = std::polar(mag, -phase_rate * k);
        }
    }
    return finish(std::move(R));
}

CorrelationMatrix identity_correlation(int antennas) {
    if (antennas < 1) throw std::invalid_argument("identity_correlation: antennas must be >= 1");
    return finish(Eigen::MatrixXcd::Identity(antennas, antennas));
}

double largest_eigenvalue(const CorrelationMatrix &R) { return R.eigenvalues(0); }

double determinant(const CorrelationMatrix &R) { return R.eigenvalues.prod(); }

Eigen::VectorXd principal_minor_sums(const CorrelationMatrix &R) {
    const int a = R.size();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(a);
    std::vector<int> idx;
    // All 2^a - 1 nonempty index subsets; a stays small (<= 8 in practice).
    for (unsigned mask = 1; mask < (1u << a); ++mask) {
        idx.clear();
        for (int i = 0; i < a; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const int k = static_cast<int>(idx.size());
        Eigen::MatrixXcd sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = R.entries(idx[i], idx[j]);
        out(k - 1) += sub.partialPivLu().determinant().real();
    }
    return out;
}

} // namespace anmimo
