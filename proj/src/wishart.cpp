// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "anmimo/wishart.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anmimo {

namespace {

// Scaled Vandermonde magnitude: |prod_{i<j} (s_i - s_j)| / s_1^{a(a-1)/2}.
// The marginal formulas divide by this product; when it is not resolvable in
// extended precision the spectrum needs wider regularization.
long double scaled_vandermonde(const Eigen::VectorXd &sigma) {
    const Eigen::Index a = sigma.size();
    long double v = 1.0L;
    const long double s1 = static_cast<long double>(sigma(0));
    for (Eigen::Index i = 0; i < a; ++i)
        for (Eigen::Index j = i + 1; j < a; ++j)
            v *= (static_cast<long double>(sigma(i)) - static_cast<long double>(sigma(j))) / s1;
    return std::abs(v);
}

constexpr long double kMinScaledVandermonde = 3e-13L;

void check_params(const WishartParams &p) {
    if (p.a < 1 || p.b < 1) throw std::invalid_argument("WishartParams: dimensions must be >= 1");
    if (p.n != std::min(p.a, p.b) || p.m != std::max(p.a, p.b))
        throw std::invalid_argument("WishartParams: n/m inconsistent with a/b");
    if (p.sigma.size() != p.a)
        throw std::invalid_argument("WishartParams: sigma length must equal a");
    for (Eigen::Index i = 0; i + 1 < p.sigma.size(); ++i)
        if (!(p.sigma(i) > p.sigma(i + 1)))
            throw std::invalid_argument("WishartParams: sigma must be strictly descending");
    if (!(p.sigma(p.sigma.size() - 1) > 0))
        throw std::invalid_argument("WishartParams: sigma must be positive");
}

void check_permutation(const std::vector<int> &mu, int n, int split) {
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("permutation length must equal n");
    std::vector<bool> seen(n + 1, false);
    for (int v : mu) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = true;
    }
    for (int i = 0; i + 1 < split - 1; ++i)
        if (!(mu[i] < mu[i + 1]))
            throw std::invalid_argument("permutation head run must ascend");
    for (int i = split - 1; i + 1 < n; ++i)
        if (!(mu[i] < mu[i + 1]))
            throw std::invalid_argument("permutation tail run must ascend");
}

// Evaluates the per-split determinant sums t_i(x), i = 1..n, already divided
// by the signed Vandermonde normalizer. The incomplete-gamma columns are
// regularized (divided by (order-1)!), which cancels the factorial part of
// the normalization exactly; what remains is numerically tame. pdf and cdf
// of the k-th largest eigenvalue are prefix sums over t_i.
template <typename Scalar> class MarginalEvaluator {
  public:
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    explicit MarginalEvaluator(const WishartParams &p)
        : a_(p.a), b_(p.b), n_(p.n), sigma_(p.sigma.cast<Scalar>()) {
        // Signed Vandermonde det[sigma_u^{c-1}] = prod_{u<u'} (s_{u'} - s_u).
        Scalar kv = 1;
        for (int u = 0; u < a_; ++u)
            for (int v = u + 1; v < a_; ++v) kv *= sigma_(v) - sigma_(u);
        if (kv == Scalar(0)) throw DegeneracyError("MarginalEvaluator: coincident sigma");
        inv_kv_ = Scalar(1) / kv;

        G_.resize(a_, a_ - n_);
        for (int u = 0; u < a_; ++u)
            for (int j = 0; j < a_ - n_; ++j) G_(u, j) = std::pow(sigma_(u), Scalar(j));

        pref_.resize(a_, n_);
        dpref_.resize(a_, n_);
        for (int u = 0; u < a_; ++u)
            for (int mv = 1; mv <= n_; ++mv) {
                pref_(u, mv - 1) = std::pow(sigma_(u), Scalar(a_ - n_ + mv - 1));
                dpref_(u, mv - 1) = std::pow(sigma_(u), Scalar(a_ - n_ + mv - 2));
            }

        fams_.reserve(n_);
        for (int i = 1; i <= n_; ++i) fams_.push_back(enumerate_permutations(n_, i));
    }

    int n() const { return n_; }

    // out(i-1) = t_i(x) for the density decomposition.
    void pdf_terms(double x, Eigen::VectorXd &out) const {
        Mat Q, P, D;
        tables(x, Q, P, &D);
        out.setZero(n_);
        Mat M(a_, a_);
        M.leftCols(a_ - n_) = G_;
        Vec saved(a_);
        Eigen::PartialPivLU<Mat> lu;
        for (int i = 1; i <= n_; ++i) {
            Scalar acc = 0;
            for (const auto &mu : fams_[i - 1].members) {
                fill_columns(M, mu, i, Q, P);
                for (int j = 1; j <= n_; ++j) {
                    const int col = a_ - n_ + j - 1;
                    const int v = static_cast<int>(std::find(mu.begin(), mu.end(), j) - mu.begin()) + 1;
                    saved = M.col(col);
                    M.col(col) = (v >= i ? Scalar(1) : Scalar(-1)) * D.col(j - 1);
                    lu.compute(M);
                    acc += lu.determinant();
                    M.col(col) = saved;
                }
            }
            out(i - 1) = static_cast<double>(acc * inv_kv_);
        }
    }

    void cdf_terms(double x, Eigen::VectorXd &out) const {
        Mat Q, P;
        tables(x, Q, P, nullptr);
        out.setZero(n_);
        Mat M(a_, a_);
        M.leftCols(a_ - n_) = G_;
        Eigen::PartialPivLU<Mat> lu;
        for (int i = 1; i <= n_; ++i) {
            Scalar acc = 0;
            for (const auto &mu : fams_[i - 1].members) {
                fill_columns(M, mu, i, Q, P);
                lu.compute(M);
                acc += lu.determinant();
            }
            out(i - 1) = static_cast<double>(acc * inv_kv_);
        }
    }

  private:
    void tables(double x, Mat &Q, Mat &P, Mat *D) const {
        Q.resize(a_, n_);
        P.resize(a_, n_);
        if (D) D->resize(a_, n_);
        for (int u = 0; u < a_; ++u) {
            const Scalar y = Scalar(x) / sigma_(u);
            for (int mv = 1; mv <= n_; ++mv) {
                const int eps = b_ - n_ + mv;
                const Scalar q = regularized_gamma_q<Scalar>(eps, y);
                Q(u, mv - 1) = pref_(u, mv - 1) * q;
                P(u, mv - 1) = pref_(u, mv - 1) * (Scalar(1) - q);
                if (D) (*D)(u, mv - 1) = dpref_(u, mv - 1) * gamma_density_scaled<Scalar>(eps, y);
            }
        }
    }

    // Column mu_v of the gamma block: upper entries for v < split, lower for
    // v >= split.
    void fill_columns(Mat &M, const std::vector<int> &mu, int split, const Mat &Q,
                      const Mat &P) const {
        for (int v = 1; v <= n_; ++v) {
            const int mv = mu[v - 1];
            M.col(a_ - n_ + mv - 1) = (v < split) ? Q.col(mv - 1) : P.col(mv - 1);
        }
    }

    int a_, b_, n_;
    Vec sigma_;
    Scalar inv_kv_;
    Mat G_, pref_, dpref_;
    std::vector<PermutationFamily> fams_;
};

using Evaluator = MarginalEvaluator<long double>;

// Integral over [0, x_max] of weight(x) * t_i(x), one component per i,
// using dyadic segments so that densities living at very different scales
// (sigma spreads of several orders of magnitude) are each resolved, with
// panel doubling per segment.
template <class W>
Eigen::VectorXd integrate_weighted_terms(const Evaluator &ev, W &&weight, double x_max,
                                         double x_floor, const QuadratureSpec &quad) {
    quad.validate();
    const int n = ev.n();
    std::vector<double> cuts{x_max};
    while (cuts.back() > x_floor && cuts.size() < 60) cuts.push_back(cuts.back() * 0.5);
    cuts.push_back(0.0);
    std::reverse(cuts.begin(), cuts.end());

    const double tol_seg = quad.tolerance / static_cast<double>(cuts.size());
    const auto &gl = gauss_legendre(quad.node_count);

    Eigen::VectorXd total = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd terms(n);

    auto panel_sum = [&](double lo, double hi, int panels) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(n);
        const double h = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            const double c = lo + (p + 0.5) * h;
            for (const auto &[node, w] : gl) {
                const double x = c + 0.5 * h * node;
                ev.pdf_terms(x, terms);
                acc += (w * weight(x)) * terms;
            }
        }
        return Eigen::VectorXd(acc * 0.5 * h);
    };

    for (size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double lo = cuts[s], hi = cuts[s + 1];
        Eigen::VectorXd prev = panel_sum(lo, hi, 1);
        bool converged = false;
        int panels = 2;
        for (int round = 0; round < quad.max_refinements; ++round, panels *= 2) {
            Eigen::VectorXd cur = panel_sum(lo, hi, panels);
            const double delta = (cur - prev).cwiseAbs().maxCoeff();
            prev = cur;
            if (delta <= tol_seg) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            Eigen::VectorXd last = panel_sum(lo, hi, panels);
            const double delta = (last - prev).cwiseAbs().maxCoeff();
            if (delta > tol_seg)
                throw ConvergenceError("integrate_weighted_terms: segment did not converge",
                                       prev.cwiseAbs().maxCoeff(), last.cwiseAbs().maxCoeff());
            prev = last;
        }
        total += prev;
    }
    return total;
}

double smallest_scale(const WishartParams &p) {
    // Rough location scale of the smallest eigenvalue; only used to decide
    // how deep the dyadic segmentation must reach.
    return p.sigma(p.a - 1) * std::max(p.b - p.n + 1, 1) / 64.0;
}

} // namespace

WishartParams WishartParams::from_sigma(Eigen::VectorXd sigma, int b) {
    if (sigma.size() < 1) throw std::invalid_argument("WishartParams: sigma must be nonempty");
    if (b < 1) throw std::invalid_argument("WishartParams: b must be >= 1");
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (!(sigma(i) > 0) && !(sigma(i) == 0))
            throw std::invalid_argument("WishartParams: sigma must be nonnegative");

    const double trace = sigma.sum();
    if (!(trace > 0)) throw DegeneracyError("WishartParams: zero trace");

    // Widen the spread until the Vandermonde the formulas divide by is
    // resolvable; each pass keeps the trace. Starts at the build-level gap.
    double gap = 1e-6;
    Eigen::VectorXd reg;
    while (true) {
        reg = regularize_descending(sigma, trace, gap);
        if (scaled_vandermonde(reg) >= kMinScaledVandermonde) break;
        gap *= 2.0;
        if (gap > 0.25)
            throw DegeneracyError("WishartParams: spectrum too degenerate to regularize");
    }

    WishartParams p;
    p.a = static_cast<int>(reg.size());
    p.b = b;
    p.n = std::min(p.a, p.b);
    p.m = std::max(p.a, p.b);
    p.sigma = std::move(reg);
    return p;
}

WishartParams WishartParams::from_correlation(const CorrelationMatrix &R, int b) {
    return from_sigma(R.eigenvalues, b);
}

double normalization_K(const WishartParams &p) {
    check_params(p);
    long double log_mag = 0.0L;
    for (int i = 1; i <= p.n; ++i) log_mag += std::lgamma(static_cast<long double>(p.b - i + 1));
    for (int i = 0; i < p.a; ++i)
        for (int j = i + 1; j < p.a; ++j)
            log_mag += std::log(static_cast<long double>(p.sigma(i) - p.sigma(j)));
    const long double k = std::exp(log_mag);
    if (!std::isfinite(static_cast<double>(k)))
        throw std::overflow_error("normalization_K: magnitude exceeds double range");
    return static_cast<double>(k);
}

Eigen::MatrixXd build_G(const WishartParams &p) {
    check_params(p);
    Eigen::MatrixXd G(p.a, p.a - p.n);
    for (int u = 0; u < p.a; ++u)
        for (int j = 0; j < p.a - p.n; ++j) G(u, j) = std::pow(p.sigma(u), j);
    return G;
}

Eigen::MatrixXd build_Psi(const WishartParams &p, const std::vector<int> &mu, int split,
                          double x) {
    check_params(p);
    if (split < 1 || split > p.n) throw std::invalid_argument("build_Psi: split out of 1..n");
    if (x < 0) throw std::invalid_argument("build_Psi: x must be >= 0");
    check_permutation(mu, p.n, split);

    Eigen::MatrixXd Psi(p.a, p.n);
    for (int v = 1; v <= p.n; ++v) {
        const int mv = mu[v - 1];
        const int eps = p.b - p.n + mv;
        for (int u = 0; u < p.a; ++u) {
            const double s = p.sigma(u);
            const double g = v < split ? upper_incomplete_gamma(eps, x / s)
                                       : lower_incomplete_gamma(eps, x / s);
            Psi(u, mv - 1) = std::pow(s, p.a - p.n + mv - 1) * g;
        }
    }
    return Psi;
}

Eigen::MatrixXd build_Omega(const WishartParams &p, const std::vector<int> &mu, int split, int j,
                            double x) {
    if (j < 1 || j > p.n) throw std::invalid_argument("build_Omega: j out of 1..n");
    Eigen::MatrixXd Om = build_Psi(p, mu, split, x);
    const int v = static_cast<int>(std::find(mu.begin(), mu.end(), j) - mu.begin()) + 1;
    const int eps = p.b - p.n + j;
    for (int u = 0; u < p.a; ++u) {
        const double s = p.sigma(u);
        double d = std::pow(s, p.a - p.b - 1) * std::exp(-x / s);
        d *= x > 0 ? std::pow(x, eps - 1) : (eps == 1 ? 1.0 : 0.0);
        Om(u, j - 1) = (v >= split ? d : -d);
    }
    return Om;
}

double eigenvalue_pdf(const EigenvalueDensity &d, double x) {
    check_params(d.params);
    if (d.k < 1 || d.k > d.params.n)
        throw std::invalid_argument("eigenvalue_pdf: k must lie in 1..n");
    if (x < 0) throw std::invalid_argument("eigenvalue_pdf: x must be >= 0");

    Evaluator ev(d.params);
    Eigen::VectorXd t;
    ev.pdf_terms(x, t);
    const double f = t.head(d.k).sum();
    if (f < -1e-9)
        throw NumericalIntegrityError("eigenvalue_pdf: negative density beyond round-off; "
                                      "sigma gaps are too small");
    return std::max(f, 0.0);
}

double eigenvalue_cdf(const EigenvalueDensity &d, double x) {
    check_params(d.params);
    if (d.k < 1 || d.k > d.params.n)
        throw std::invalid_argument("eigenvalue_cdf: k must lie in 1..n");
    if (x < 0) throw std::invalid_argument("eigenvalue_cdf: x must be >= 0");

    Evaluator ev(d.params);
    Eigen::VectorXd t;
    ev.cdf_terms(x, t);
    const double F = t.head(d.k).sum();
    if (F < -1e-9 || F > 1.0 + 1e-9)
        throw NumericalIntegrityError("eigenvalue_cdf: value outside [0, 1] beyond round-off; "
                                      "sigma gaps are too small");
    return std::clamp(F, 0.0, 1.0);
}

double density_tail_bound(const WishartParams &p) {
    return p.sigma(0) * (p.b + 10.0 * std::sqrt(static_cast<double>(p.b)) + 40.0);
}

Eigen::VectorXd marginal_eigenvalue_means(const WishartParams &p, const QuadratureSpec &quad) {
    check_params(p);
    Evaluator ev(p);
    const double x_max =
        (quad.transform == QuadTransform::truncate && quad.x_max > 0) ? quad.x_max
                                                                      : density_tail_bound(p);
    Eigen::VectorXd I = integrate_weighted_terms(ev, [](double x) { return x; }, x_max,
                                                 smallest_scale(p), quad);
    Eigen::VectorXd means(p.n);
    double acc = 0.0;
    for (int k = 0; k < p.n; ++k) {
        acc += I(k);
        means(k) = acc;
    }
    return means;
}

double eigenchannel_capacity(const WishartParams &p, double rho, int eta,
                             const QuadratureSpec &quad) {
    check_params(p);
    if (!(rho > 0)) throw std::invalid_argument("eigenchannel_capacity: rho must be > 0");
    if (eta < 1 || eta > p.n)
        throw std::invalid_argument("eigenchannel_capacity: eta must lie in 1..n");

    Evaluator ev(p);
    const double x_max =
        (quad.transform == QuadTransform::truncate && quad.x_max > 0) ? quad.x_max
                                                                      : density_tail_bound(p);
    Eigen::VectorXd I = integrate_weighted_terms(
        ev, [rho](double x) { return std::log2(1.0 + rho * x); }, x_max, smallest_scale(p), quad);

    // sum_{k<=eta} F-prefix structure: term i contributes to every k >= i.
    double c = 0.0;
    for (int i = 1; i <= eta; ++i) c += (eta - i + 1) * I(i - 1);
    return std::max(c, 0.0);
}

double eigenchannel_capacity(const CorrelationMatrix &R, int b, double rho, int eta,
                             const QuadratureSpec &quad) {
    return eigenchannel_capacity(WishartParams::from_correlation(R, b), rho, eta, quad);
}

} // namespace anmimo
