#pragma once

#include <map>
#include <set>
#include <vector>

#include "skewkit/diagram.hpp"

namespace testing_helpers {

using namespace skewkit;

inline SkewDiagram S(const Partition& lam, const Partition& mu = {}) { return make_skew(lam, mu); }

inline std::vector<Partition> partitions_of(int n, int max_part) {
    std::vector<Partition> out;
    if (n == 0) return {{}};
    for (int k = std::min(n, max_part); k >= 1; --k)
        for (auto& rest : partitions_of(n - k, k)) {
            Partition p{k};
            p.insert(p.end(), rest.begin(), rest.end());
            out.push_back(p);
        }
    return out;
}

inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m)
        for (auto& p : partitions_of(m, m)) out.push_back(p);
    return out;
}

// All (λ, μ) with μ ⊆ λ and |λ/μ| = n, λ inside a box large enough for any
// connected n-cell diagram; kept when connected, deduplicated by canonical form.
inline std::set<SkewDiagram> connected_by_pairs(int n) {
    std::set<SkewDiagram> out;
    for (int big = n; big <= n * (n + 1) / 2; ++big)
        for (auto& lam : partitions_of(big, n))
            if (static_cast<int>(lam.size()) <= n)
                for (auto& mu : partitions_of(big - n, n)) {
                    if (!contains(lam, mu)) continue;
                    auto d = make_skew(lam, mu);
                    if (is_connected(d)) out.insert(d);
                }
    return out;
}

}  // namespace testing_helpers
