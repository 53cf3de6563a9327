// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef ANMIMO_NUMERICS_HPP
#define ANMIMO_NUMERICS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anmimo/errors.hpp"

namespace anmimo {

// ---------------------------------------------------------------------------
// Integer-order incomplete gamma functions.
//
// Only integer orders are needed anywhere in this library, so everything is
// computed through the finite-sum closed form
//   Gamma(eps, x) = (eps-1)! e^{-x} sum_{k=0}^{eps-1} x^k / k!,
// exact up to floating rounding. The regularized variants divide by (eps-1)!
// and are evaluated term-by-term in log space so they stay finite for large
// orders and large arguments.
// ---------------------------------------------------------------------------

double factorial(int n);     // n! as double, n in [0, 170]
double log_factorial(int n); // ln n!

// Gamma(eps, x) = int_x^inf e^{-z} z^{eps-1} dz, eps >= 1 integer, x >= 0.
double upper_incomplete_gamma(int eps, double x);

// gamma(eps, x) = (eps-1)! - Gamma(eps, x); nondecreasing in x, 0 at x = 0.
double lower_incomplete_gamma(int eps, double x);

// Regularized Q(eps, x) = Gamma(eps, x)/(eps-1)! in [0, 1] and P = 1 - Q.
// Templated on scalar so the determinant kernels can run in long double.
template <typename Scalar> Scalar regularized_gamma_q(int eps, Scalar x) {
    if (eps < 1) throw std::invalid_argument("regularized_gamma_q: order must be >= 1");
    if (x < Scalar(0)) throw std::invalid_argument("regularized_gamma_q: x must be >= 0");
    if (x == Scalar(0)) return Scalar(1);
    const Scalar lx = std::log(x);
    Scalar q = 0;
    Scalar lfac = 0; // ln k!
    for (int k = 0; k < eps; ++k) {
        if (k > 0) lfac += std::log(Scalar(k));
        q += std::exp(Scalar(k) * lx - x - lfac);
    }
    return q > Scalar(1) ? Scalar(1) : q;
}

template <typename Scalar> Scalar regularized_gamma_p(int eps, Scalar x) {
    return Scalar(1) - regularized_gamma_q<Scalar>(eps, x);
}

// e^{-y} y^{eps-1} / (eps-1)!, the unit-scale gamma density (integer order).
template <typename Scalar> Scalar gamma_density_scaled(int eps, Scalar y) {
    if (y < Scalar(0)) return Scalar(0);
    if (y == Scalar(0)) return eps == 1 ? Scalar(1) : Scalar(0);
    Scalar lfac = 0;
    for (int k = 1; k < eps; ++k) lfac += std::log(Scalar(k));
    return std::exp(Scalar(eps - 1) * std::log(y) - y - lfac);
}

// psi(x) = -EulerGamma + sum_{i=1}^{x-1} 1/i for positive integer x.
double digamma_positive_int(int x);

inline constexpr double kEulerGamma = 0.5772156649015329;

// ---------------------------------------------------------------------------
// Ordered-permutation enumeration.
//
// All permutations mu of (1..n) that ascend strictly on positions 1..split-1
// and on positions split..n. There are binomial(n, split-1) of them: choosing
// the first run fixes the rest. Order is lexicographic by the first run.
// ---------------------------------------------------------------------------

struct PermutationFamily {
    int n = 0;
    int split = 0;
    std::vector<std::vector<int>> members; // 1-based values
};

PermutationFamily enumerate_permutations(int n, int split);

double binomial(int n, int k);

// ---------------------------------------------------------------------------
// Quadrature.
// ---------------------------------------------------------------------------

enum class QuadTransform {
    truncate, // integrate [0, x_max] directly
    exp_map,  // map [0, inf) to [0, 1) via x = -ln(1-u)
};

struct QuadratureSpec {
    int node_count = 32; // Gauss-Legendre points per panel, >= 8
    QuadTransform transform = QuadTransform::truncate;
    double x_max = 0.0; // required when transform == truncate
    double tolerance = 1e-9;
    int max_refinements = 14; // panel-doubling cap

    void validate() const {
        if (node_count < 8) throw std::invalid_argument("QuadratureSpec: node_count must be >= 8");
        if (!(tolerance > 0)) throw std::invalid_argument("QuadratureSpec: tolerance must be > 0");
    }
};

// Gauss-Legendre nodes/weights on [-1, 1]; cached per order, thread-safe.
const std::vector<std::pair<double, double>> &gauss_legendre(int order);

// Fixed composite rule: `panels` equal panels of `order`-point Gauss-Legendre.
template <class F> double integrate_panels(F &&f, double lo, double hi, int order, int panels) {
    const auto &gl = gauss_legendre(order);
    const double h = (hi - lo) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * h;
        const double c = a + 0.5 * h;
        double acc = 0.0;
        for (const auto &[node, weight] : gl) acc += weight * f(c + 0.5 * h * node);
        sum += acc * 0.5 * h;
    }
    return sum;
}

// Composite rule on [lo, hi] with panel doubling until two successive
// estimates agree within spec.tolerance.
template <class F> double integrate_interval(F &&f, double lo, double hi, const QuadratureSpec &spec) {
    spec.validate();
    if (!(hi > lo)) return 0.0;
    double prev = integrate_panels(f, lo, hi, spec.node_count, 1);
    int panels = 2;
    for (int round = 0; round < spec.max_refinements; ++round, panels *= 2) {
        const double cur = integrate_panels(f, lo, hi, spec.node_count, panels);
        if (std::abs(cur - prev) <= spec.tolerance) return cur;
        prev = cur;
    }
    const double last = integrate_panels(f, lo, hi, spec.node_count, panels);
    if (std::abs(last - prev) <= spec.tolerance) return last;
    throw ConvergenceError("integrate_interval: panel doubling did not converge", prev, last);
}

// Integral of f over [0, inf). With QuadTransform::truncate the caller must
// supply spec.x_max past which the integrand is negligible; with exp_map the
// tail is folded into [0, 1) through x = -ln(1-u), dx = du/(1-u).
template <class F> double integrate_semi_infinite(F &&f, const QuadratureSpec &spec) {
    spec.validate();
    if (spec.transform == QuadTransform::truncate) {
        if (!(spec.x_max > 0))
            throw std::invalid_argument("integrate_semi_infinite: truncation requires x_max > 0");
        return integrate_interval(f, 0.0, spec.x_max, spec);
    }
    auto g = [&f](double u) {
        const double x = -std::log1p(-u);
        return f(x) / (1.0 - u);
    };
    return integrate_interval(g, 0.0, 1.0, spec);
}

// ---------------------------------------------------------------------------
// Dense Hermitian helpers. Eigen does the heavy lifting; these wrappers add
// the contract checks and the descending-order convention used throughout.
// ---------------------------------------------------------------------------

struct HermitianEig {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXcd vectors; // unitary, columns match values
};

// Requires max|M - M^H| <= 1e-10 entrywise.
HermitianEig hermitian_eig(const Eigen::MatrixXcd &M);

// Principal square root S with S S^H = M; eigenvalues below -1e-10 reject the
// input, small negatives are clamped to zero.
Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd &M);

// log2 det(I + scale * A A^H) for a complex matrix A, via the eigenvalues of
// the (small) Gram matrix. Accepts any Eigen expression.
template <typename Derived>
double log2_det_identity_plus_gram(const Eigen::MatrixBase<Derived> &A, double scale) {
    if (A.rows() == 0 || A.cols() == 0) return 0.0;
    Eigen::MatrixXcd gram;
    if (A.rows() <= A.cols())
        gram = A * A.adjoint();
    else
        gram = A.adjoint() * A; // same nonzero spectrum, smaller problem
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double v = std::max(es.eigenvalues()(i), 0.0);
        acc += std::log2(1.0 + scale * v);
    }
    return acc;
}

} // namespace anmimo

#endif // ANMIMO_NUMERICS_HPP
