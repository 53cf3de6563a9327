// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "anmimo/numerics.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace anmimo {

double factorial(int n) {
    if (n < 0 || n > 170) throw std::invalid_argument("factorial: n out of [0, 170]");
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double log_factorial(int n) {
    if (n < 0) throw std::invalid_argument("log_factorial: n must be >= 0");
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double upper_incomplete_gamma(int eps, double x) {
    if (eps < 1) throw std::invalid_argument("upper_incomplete_gamma: order must be >= 1");
    if (x < 0) throw std::invalid_argument("upper_incomplete_gamma: x must be >= 0");
    return factorial(eps - 1) * regularized_gamma_q<double>(eps, x);
}

double lower_incomplete_gamma(int eps, double x) {
    if (eps < 1) throw std::invalid_argument("lower_incomplete_gamma: order must be >= 1");
    if (x < 0) throw std::invalid_argument("lower_incomplete_gamma: x must be >= 0");
    return factorial(eps - 1) - upper_incomplete_gamma(eps, x);
}

double digamma_positive_int(int x) {
    if (x < 1) throw std::invalid_argument("digamma_positive_int: x must be >= 1");
    double h = 0.0;
    for (int i = 1; i <= x - 1; ++i) h += 1.0 / i;
    return -kEulerGamma + h;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

PermutationFamily enumerate_permutations(int n, int split) {
    if (n < 1) throw std::invalid_argument("enumerate_permutations: n must be >= 1");
    if (split < 1 || split > n)
        throw std::invalid_argument("enumerate_permutations: split must lie in 1..n");

    // The first ascending run (split-1 values) determines the member: the
    // remaining values fill positions split..n in ascending order. Walk the
    // (split-1)-subsets of 1..n in lexicographic order.
    PermutationFamily fam;
    fam.n = n;
    fam.split = split;
    const int head = split - 1;
    std::vector<int> pick(head);
    for (int i = 0; i < head; ++i) pick[i] = i + 1;
    while (true) {
        std::vector<int> mu;
        mu.reserve(n);
        mu.insert(mu.end(), pick.begin(), pick.end());
        std::vector<bool> used(n + 1, false);
        for (int v : pick) used[v] = true;
        for (int v = 1; v <= n; ++v)
            if (!used[v]) mu.push_back(v);
        fam.members.push_back(std::move(mu));

        if (head == 0) break;
        int i = head - 1;
        while (i >= 0 && pick[i] == n - (head - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < head; ++j) pick[j] = pick[j - 1] + 1;
    }
    return fam;
}

namespace {

// Newton iteration on the Legendre polynomial, standard construction.
std::vector<std::pair<double, double>> compute_gauss_legendre(int order) {
    std::vector<std::pair<double, double>> out(order);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < order; ++i) {
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        out[i] = {x, 2.0 / ((1.0 - x * x) * pp * pp)};
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

const std::vector<std::pair<double, double>> &gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::mutex mu;
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

HermitianEig hermitian_eig(const Eigen::MatrixXcd &M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("hermitian_eig: matrix must be square");
    const double asym = (M - M.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10)
        throw std::invalid_argument("hermitian_eig: input is not Hermitian within 1e-10");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: decomposition failed");

    const Eigen::Index a = M.rows();
    HermitianEig out;
    out.values = es.eigenvalues().reverse();
    out.vectors = es.eigenvectors().rowwise().reverse();
    (void)a;
    return out;
}

Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd &M) {
    HermitianEig eig = hermitian_eig(M);
    Eigen::VectorXd v = eig.values;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) < -1e-10)
            throw std::invalid_argument("hermitian_sqrt: matrix is not positive semidefinite");
        v(i) = std::sqrt(std::max(v(i), 0.0));
    }
    return eig.vectors * v.asDiagonal() * eig.vectors.adjoint();
}

} // namespace anmimo
