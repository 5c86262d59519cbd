// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "sgbs/errors.hpp"

namespace sgbs {

/// Multi-index alpha in N_0^L; alpha[i] is the polynomial degree in
/// dimension i.
struct MultiIndex {
    std::vector<int> entries;

    int total_degree() const {
        return std::accumulate(entries.begin(), entries.end(), 0);
    }
    int size() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries[static_cast<size_t>(i)]; }
    bool operator==(const MultiIndex& o) const { return entries == o.entries; }
};

/// Total-degree index set {alpha : |alpha| <= N} with the position bijection
/// phi used to vectorize the stochastic Galerkin system.
///
/// Ordering is graded: nondecreasing total degree, ties broken
/// lexicographically with the leading dimension most significant, so for
/// L=2 the degree-1 block is (1,0),(0,1) and degree-N ends at (0,N).
class IndexSet {
public:
    static IndexSet build(int L, int N) {
        if (L < 1) throw ConfigError("IndexSet: dimension L must be >= 1");
        if (N < 0) throw ConfigError("IndexSet: max degree N must be >= 0");
        IndexSet s;
        s.L_ = L;
        s.N_ = N;
        std::vector<int> cur(static_cast<size_t>(L), 0);
        enumerate(s.indices_, cur, 0, N);
        std::sort(s.indices_.begin(), s.indices_.end(),
                  [](const MultiIndex& a, const MultiIndex& b) {
                      const int da = a.total_degree(), db = b.total_degree();
                      if (da != db) return da < db;
                      return a.entries > b.entries;
                  });
        for (size_t k = 0; k < s.indices_.size(); ++k)
            s.pos_[s.indices_[k].entries] = static_cast<int>(k);
        return s;
    }

    int L() const { return L_; }
    int N() const { return N_; }
    int size() const { return static_cast<int>(indices_.size()); }
    const MultiIndex& operator[](int k) const {
        return indices_[static_cast<size_t>(k)];
    }
    const std::vector<MultiIndex>& indices() const { return indices_; }

    /// Inverse of phi; rejects indices outside the set.
    int position_of(const MultiIndex& d) const {
        auto it = pos_.find(d.entries);
        if (it == pos_.end())
            throw ConfigError("IndexSet: multi-index not in the set");
        return it->second;
    }

    bool contains(const MultiIndex& d) const {
        return pos_.count(d.entries) > 0;
    }

    static std::int64_t binomial(int n, int k) {
        if (k < 0 || k > n) return 0;
        std::int64_t r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }

private:
    static void enumerate(std::vector<MultiIndex>& out, std::vector<int>& cur,
                          int dim, int budget) {
        if (dim == static_cast<int>(cur.size())) {
            out.push_back(MultiIndex{cur});
            return;
        }
        for (int d = 0; d <= budget; ++d) {
            cur[static_cast<size_t>(dim)] = d;
            enumerate(out, cur, dim + 1, budget - d);
        }
        cur[static_cast<size_t>(dim)] = 0;
    }

    int L_ = 0;
    int N_ = 0;
    std::vector<MultiIndex> indices_;
    std::map<std::vector<int>, int> pos_;
};

}  // namespace sgbs
