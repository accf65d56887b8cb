#pragma once

#include <functional>
#include <vector>

#include "monocat/morphism_cat.hpp"

namespace monocat::oracles {

// Indecomposable monomorphisms between sums of Jordan blocks, by running
// over every map between every pair of Jordan-type modules. Independent of
// the extension-closure enumerator.
inline std::vector<MorphObj> brute_S(const AlgebraPtr& alg, std::size_t n, std::size_t bound) {
    std::vector<std::vector<std::size_t>> parts;  // partitions with parts <= n
    std::function<void(std::vector<std::size_t>&, std::size_t, std::size_t)> rec =
        [&](std::vector<std::size_t>& cur, std::size_t maxpart, std::size_t left) {
            parts.push_back(cur);
            for (std::size_t k = std::min(maxpart, left); k >= 1; --k) {
                cur.push_back(k);
                rec(cur, k, left - k);
                cur.pop_back();
            }
        };
    std::vector<std::size_t> cur;
    rec(cur, n, bound);
    auto module_of = [&](const std::vector<std::size_t>& p) {
        std::vector<Module> ms;
        for (auto k : p) ms.push_back(jordan_block(alg, k));
        return direct_sum(ms, alg).sum;
    };
    std::vector<MorphObj> found;
    for (const auto& pa : parts)
        for (const auto& pb : parts) {
            Module a = module_of(pa), b = module_of(pb);
            if (b.is_zero() || a.total_dim() > b.total_dim() || a.total_dim() + b.total_dim() > bound) continue;
            HomSpace hs(a, b);
            for (const auto& c : all_vectors(hs.dim(), alg->p(), true)) {
                ModMap f = hs.combination(c);
                if (!f.is_injective()) continue;
                MorphObj x(f);
                if (!is_indecomposable_morph(x)) continue;
                if (find_isomorphic_morph(found, x) == static_cast<std::size_t>(-1)) found.push_back(x);
            }
        }
    return found;
}

}  // namespace monocat::oracles
