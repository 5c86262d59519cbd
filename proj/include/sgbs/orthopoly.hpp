// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgbs/errors.hpp"
#include "sgbs/multi_index.hpp"

namespace sgbs {

enum class FamilyKind { StandardNormal, UniformSymmetric };

/// Distribution of one input random variable. StandardNormal is N(0,1);
/// UniformSymmetric(h) is uniform on [-h, h] (the paper's Delta uses h=0.5).
struct DistributionFamily {
    FamilyKind kind = FamilyKind::StandardNormal;
    double half_width = 0.5;

    static DistributionFamily standard_normal() {
        return DistributionFamily{FamilyKind::StandardNormal, 0.0};
    }
    static DistributionFamily uniform_symmetric(double h) {
        if (!(h > 0.0))
            throw ConfigError("UniformSymmetric: half width must be > 0");
        return DistributionFamily{FamilyKind::UniformSymmetric, h};
    }

    std::string name() const {
        if (kind == FamilyKind::StandardNormal) return "standard_normal";
        return "uniform_symmetric(" + std::to_string(half_width) + ")";
    }
    bool operator==(const DistributionFamily& o) const {
        if (kind != o.kind) return false;
        return kind == FamilyKind::StandardNormal || half_width == o.half_width;
    }
};

/// Value of the degree-d orthonormal polynomial of the family at x, by
/// three-term recurrence. StandardNormal gives normalized probabilists'
/// Hermite He_d/sqrt(d!); UniformSymmetric(h) gives normalized Legendre
/// sqrt(2d+1) P_d(x/h), so UniformSymmetric(0.5) has p_1(x) = sqrt(12) x.
inline double eval_1d(const DistributionFamily& fam, int degree, double x) {
    if (degree < 0) throw ConfigError("eval_1d: degree must be >= 0");
    if (fam.kind == FamilyKind::StandardNormal) {
        double pm = 0.0, p = 1.0;
        for (int k = 0; k < degree; ++k) {
            const double pn = (x * p - std::sqrt(double(k)) * pm) /
                              std::sqrt(double(k + 1));
            pm = p;
            p = pn;
        }
        return p;
    }
    const double u = x / fam.half_width;
    double pm = 0.0, p = 1.0;
    for (int k = 0; k < degree; ++k) {
        const double pn = ((2 * k + 1) * u * p - k * pm) / (k + 1);
        pm = p;
        p = pn;
    }
    return p * std::sqrt(double(2 * degree + 1));
}

/// n-node Gauss rule for the family's probability measure, via Golub-Welsch
/// on the Jacobi matrix of the orthonormal recurrence. Exact for polynomials
/// of degree <= 2n-1; weights sum to 1.
inline std::pair<Eigen::VectorXd, Eigen::VectorXd>
quadrature_rule(const DistributionFamily& fam, int n_nodes) {
    if (n_nodes < 1) throw ConfigError("quadrature_rule: need n_nodes >= 1");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n_nodes);
    Eigen::VectorXd off(n_nodes > 1 ? n_nodes - 1 : 0);
    for (int k = 1; k < n_nodes; ++k) {
        if (fam.kind == FamilyKind::StandardNormal) {
            off[k - 1] = std::sqrt(double(k));
        } else {
            off[k - 1] = fam.half_width * k / std::sqrt(4.0 * k * k - 1.0);
        }
    }
    if (n_nodes == 1) {
        Eigen::VectorXd x(1), w(1);
        x[0] = 0.0;
        w[0] = 1.0;
        return {x, w};
    }
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n_nodes, n_nodes);
    for (int k = 0; k + 1 < n_nodes; ++k) {
        J(k, k + 1) = off[k];
        J(k + 1, k) = off[k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw NumericalRejection("quadrature_rule: eigensolver failed");
    Eigen::VectorXd nodes = es.eigenvalues();
    Eigen::VectorXd weights(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        const double v0 = es.eigenvectors()(0, i);
        weights[i] = v0 * v0;
    }
    return {nodes, weights};
}

/// Tensor-product orthonormal basis p_alpha(x) = prod_i p_{alpha_i}(x_i)
/// over independent families, indexed by a total-degree IndexSet.
class PolynomialBasis {
public:
    PolynomialBasis(std::vector<DistributionFamily> families, IndexSet iset)
        : families_(std::move(families)), iset_(std::move(iset)) {
        if (static_cast<int>(families_.size()) != iset_.L())
            throw ConfigError("PolynomialBasis: family count must equal L");
    }

    const std::vector<DistributionFamily>& families() const {
        return families_;
    }
    const IndexSet& index_set() const { return iset_; }
    int L() const { return iset_.L(); }

    double eval(const MultiIndex& alpha, const std::vector<double>& x) const {
        double v = 1.0;
        for (int i = 0; i < iset_.L(); ++i)
            v *= eval_1d(families_[static_cast<size_t>(i)], alpha[i],
                         x[static_cast<size_t>(i)]);
        return v;
    }

private:
    std::vector<DistributionFamily> families_;
    IndexSet iset_;
};

/// Galerkin multiplication tensor M_{alpha beta gamma delta} =
/// <p_alpha p_beta p_gamma p_delta> for |alpha|,|beta| <= K and
/// |gamma|,|delta| <= N (orthonormal basis, so the <p_delta^2> denominator
/// is 1 and the tensor is fully symmetric).
///
/// Entries factorize over dimensions for independent inputs; each dimension
/// contributes a 1-D quadruple-product table computed with a (K+N+1)-node
/// Gauss rule, which integrates the degree-(2K+2N) integrand exactly.
class GalerkinTensor {
public:
    static GalerkinTensor build(const PolynomialBasis& basis, int K, int N) {
        if (K < 0 || N < 0)
            throw ConfigError("GalerkinTensor: K and N must be >= 0");
        GalerkinTensor t;
        t.K_ = K;
        t.N_ = N;
        t.L_ = basis.L();
        t.families_ = basis.families();
        t.kset_ = IndexSet::build(t.L_, K);
        t.nset_ = IndexSet::build(t.L_, N);
        const int nk = t.kset_.size(), nn = t.nset_.size();
        t.vals_.assign(static_cast<size_t>(nk) * nk * nn * nn, 0.0);

        std::vector<Eigen::MatrixXd> table = dim_tables(t.families_, K, N);

        // Each fully symmetric orbit is computed once and broadcast to the
        // stored (alpha,beta,gamma,delta) slots it covers.
        std::map<std::vector<int>, double> orbit;
        const int D = std::max(K, N) + 1;
        for (int a = 0; a < nk; ++a)
            for (int b = 0; b < nk; ++b)
                for (int g = 0; g < nn; ++g)
                    for (int d = 0; d < nn; ++d) {
                        std::vector<int> key = orbit_key(
                            t.kset_[a], t.kset_[b], t.nset_[g], t.nset_[d]);
                        auto it = orbit.find(key);
                        double v;
                        if (it != orbit.end()) {
                            v = it->second;
                        } else {
                            v = 1.0;
                            for (int i = 0; i < t.L_; ++i) {
                                const auto& T = table[static_cast<size_t>(i)];
                                v *= T(t.kset_[a][i] * D + t.kset_[b][i],
                                       t.nset_[g][i] * D + t.nset_[d][i]);
                            }
                            orbit.emplace(std::move(key), v);
                        }
                        t.vals_[t.flat(a, b, g, d)] = v;
                    }
        return t;
    }

    int K() const { return K_; }
    int N() const { return N_; }
    int L() const { return L_; }
    const IndexSet& kset() const { return kset_; }
    const IndexSet& nset() const { return nset_; }
    const std::vector<DistributionFamily>& families() const {
        return families_;
    }
    const std::vector<double>& values() const { return vals_; }

    /// Entry by flat positions: a,b index the K-set, g,d the N-set.
    double operator()(int a, int b, int g, int d) const {
        return vals_[flat(a, b, g, d)];
    }

private:
    size_t flat(int a, int b, int g, int d) const {
        const size_t nk = static_cast<size_t>(kset_.size());
        const size_t nn = static_cast<size_t>(nset_.size());
        return ((static_cast<size_t>(a) * nk + static_cast<size_t>(b)) * nn +
                static_cast<size_t>(g)) *
                   nn +
               static_cast<size_t>(d);
    }

    // 1-D tables T_i[(a,b),(c,d)] = E[p_a p_b p_c p_d] for a,b <= K, c,d <= N.
    static std::vector<Eigen::MatrixXd>
    dim_tables(const std::vector<DistributionFamily>& fams, int K, int N) {
        const int D = std::max(K, N) + 1;
        const int q = K + N + 1;
        std::vector<Eigen::MatrixXd> out;
        for (const auto& fam : fams) {
            auto [x, w] = quadrature_rule(fam, q);
            Eigen::MatrixXd P(D, q);
            for (int d = 0; d < D; ++d)
                for (int j = 0; j < q; ++j) P(d, j) = eval_1d(fam, d, x[j]);
            Eigen::MatrixXd T(D * D, D * D);
            for (int a = 0; a < D; ++a)
                for (int b = 0; b < D; ++b)
                    for (int c = 0; c < D; ++c)
                        for (int d = 0; d < D; ++d) {
                            double s = 0.0;
                            for (int j = 0; j < q; ++j)
                                s += w[j] * P(a, j) * P(b, j) * P(c, j) *
                                     P(d, j);
                            T(a * D + b, c * D + d) = s;
                        }
            out.push_back(std::move(T));
        }
        return out;
    }

    // Canonical key of the orbit of (alpha,beta,gamma,delta) under argument
    // permutation: sorted concatenation of the four entry vectors.
    static std::vector<int> orbit_key(const MultiIndex& a, const MultiIndex& b,
                                      const MultiIndex& g,
                                      const MultiIndex& d) {
        std::vector<std::vector<int>> q = {a.entries, b.entries, g.entries,
                                           d.entries};
        std::sort(q.begin(), q.end());
        std::vector<int> key;
        for (const auto& v : q) key.insert(key.end(), v.begin(), v.end());
        return key;
    }

    int K_ = 0, N_ = 0, L_ = 0;
    std::vector<DistributionFamily> families_;
    IndexSet kset_{IndexSet::build(1, 0)};
    IndexSet nset_{IndexSet::build(1, 0)};
    std::vector<double> vals_;
};

}  // namespace sgbs
