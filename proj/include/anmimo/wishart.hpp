// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef ANMIMO_WISHART_HPP
#define ANMIMO_WISHART_HPP

#include <Eigen/Dense>
#include <vector>

#include "anmimo/corr.hpp"
#include "anmimo/numerics.hpp"

namespace anmimo {

// Receiver-side correlated central complex Wishart matrix W: for an a x b
// Gaussian A with column covariance R_a (eigenvalues sigma_1 > ... > sigma_a),
// W = A A^H when b >= a and W = A^H A when b < a; n = min(a, b) eigenvalues,
// m = max(a, b) degrees of freedom.
//
// Construction widens near-coincident sigma gaps (doubling the spread from
// 1e-6, trace preserved) until the scaled Vandermonde prod (sigma_i - sigma_j)
// is resolvable in extended precision; the marginal formulas divide by it.
struct WishartParams {
    int a = 1;
    int b = 1;
    int n = 1;
    int m = 1;
    Eigen::VectorXd sigma; // strictly descending, regularized

    static WishartParams from_correlation(const CorrelationMatrix &R, int b);
    static WishartParams from_sigma(Eigen::VectorXd sigma, int b);
};

// Marginal law of the k-th largest eigenvalue, 1 <= k <= n.
struct EigenvalueDensity {
    WishartParams params;
    int k = 1;
};

// prod_{i<j<=a} (sigma_i - sigma_j) * prod_{i=1..n} (b-i)!, the positive
// normalization magnitude. The determinant evaluators additionally carry the
// row-order parity (-1)^{a(a-1)/2}, i.e. they divide by det[sigma_u^{c-1}];
// the product over all a sigmas (not just n of them) is what normalizes the
// b < a branch, as the quadrature and Monte Carlo suites verify.
double normalization_K(const WishartParams &p);

// a x (a-n) Vandermonde block, entry (u, j) = sigma_u^{j-1}; zero columns
// when b >= a.
Eigen::MatrixXd build_G(const WishartParams &p);

// a x n matrix whose column mu_v holds incomplete-gamma entries
// sigma_u^{a-n+mu_v-1} * Gamma(b-n+mu_v, x/sigma_u) for v < split and the
// lower-gamma counterpart for v >= split. det[G, Psi] summed over the
// permutation families gives the cdf.
Eigen::MatrixXd build_Psi(const WishartParams &p, const std::vector<int> &mu, int split, double x);

// Psi with the column of gamma order b-n+j replaced by its x-derivative
// -+ sigma_u^{a-b-1} e^{-x/sigma_u} x^{b-n+j-1} (negative on the upper rows);
// the density is the cdf determinant differentiated column by column.
Eigen::MatrixXd build_Omega(const WishartParams &p, const std::vector<int> &mu, int split, int j,
                            double x);

// Marginal pdf / cdf of the k-th largest eigenvalue. Tiny negative round-off
// (within 1e-9) is clamped; anything worse raises NumericalIntegrityError.
double eigenvalue_pdf(const EigenvalueDensity &d, double x);
double eigenvalue_cdf(const EigenvalueDensity &d, double x);

// Truncation point beyond which every marginal's remaining mass is
// negligible: sigma_1 (b + 10 sqrt(b) + 40).
double density_tail_bound(const WishartParams &p);

// integral of x * f_k(x) for k = 1..n in one pass (vector of means, strictly
// decreasing in k).
Eigen::VectorXd marginal_eigenvalue_means(const WishartParams &p, const QuadratureSpec &quad = {});

// sum_{k=1..eta} integral of log2(1 + rho x) f_k(x) dx: the ergodic capacity
// restricted to the eta strongest eigen-subchannels. Increasing in eta and
// in rho.
double eigenchannel_capacity(const WishartParams &p, double rho, int eta,
                             const QuadratureSpec &quad = {});
double eigenchannel_capacity(const CorrelationMatrix &R, int b, double rho, int eta,
                             const QuadratureSpec &quad = {});

} // namespace anmimo

#endif // ANMIMO_WISHART_HPP
