// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef ANMIMO_CORR_HPP
#define ANMIMO_CORR_HPP

#include <Eigen/Dense>

#include "anmimo/errors.hpp"

namespace anmimo {

// Physical correlation parameters of one uniformly-spaced linear receive
// array: element count, spacing in wavelengths, mean angle of arrival, and
// receive angle spread (the standard deviation of the Gaussian AoA). Angles
// are degrees at this boundary and converted to radians exactly once.
struct CorrelationSpec {
    int antennas = 1;
    double spacing = 0.5;      // d = d_min / wavelength
    double mean_aoa_deg = 30.0; // in (0, 180)
    double ras_deg = 10.0;      // >= 0

    void validate() const;
};

// Receiver-side correlation matrix: Hermitian, unit diagonal, positive
// definite, trace equal to the antenna count. Eigenvalues are kept sorted
// descending and regularized to strict descent (see build_correlation);
// the principal square root is precomputed for Kronecker channel sampling.
struct CorrelationMatrix {
    Eigen::MatrixXcd entries;
    Eigen::VectorXd eigenvalues;  // sigma_1 > ... > sigma_a > 0
    Eigen::MatrixXcd sqrt_entries; // S with S S^H = entries

    int size() const { return static_cast<int>(entries.rows()); }
};

// Entry (u, v) = exp{-j 2 pi d (u-v) cos(aoa)} * exp{-[2 pi d ras (u-v) sin(aoa)]^2 / 2}
// with ras in radians. Eigenvalues whose consecutive gaps fall below
// 1e-6 * sigma_1 are spread multiplicatively and rescaled to preserve the
// trace, so downstream spectral formulas never see coincident values.
CorrelationMatrix build_correlation(const CorrelationSpec &spec);

// Identity correlation (uncorrelated receiver), with the same eigenvalue
// regularization applied. Used as the worst-case stand-in when the
// eavesdropper's correlation is unknown.
CorrelationMatrix identity_correlation(int antennas);

// sigma_1, in [1, a].
double largest_eigenvalue(const CorrelationMatrix &R);

// prod sigma_i, in (0, 1].
double determinant(const CorrelationMatrix &R);

// varrho_k = sum over k-subsets of the principal k x k subdeterminants,
// k = 1..a; equals the k-th elementary symmetric polynomial of the
// eigenvalues. Computed by direct subset enumeration over the entries.
Eigen::VectorXd principal_minor_sums(const CorrelationMatrix &R);

// Strictly-descending regularization used by build_correlation: clamps tiny
// negatives, enforces consecutive gaps of at least eps_gap * sigma_1, and
// rescales to the requested trace. Exposed for the Wishart layer, which may
// need a wider gap for determinant conditioning.
Eigen::VectorXd regularize_descending(Eigen::VectorXd sigma, double trace, double eps_gap);

} // namespace anmimo

#endif // ANMIMO_CORR_HPP
