#include "monocat/decompose.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "monocat/errors.hpp"
#include "monocat/homology.hpp"

namespace monocat {

AlgebraOps endomorphism_ops(const HomSpace& end) {
    AlgebraOps ops;
    ops.p = end.source().p();
    ops.dim = end.dim();
    auto space = std::make_shared<HomSpace>(end);
    ops.one = *space->coordinates(ModMap::identity(end.source()));
    ops.multiply = [space](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
        auto c = space->coordinates(space->combination(x) * space->combination(y));
        if (!c) throw PreconditionError("endomorphisms not closed under composition");
        return *c;
    };
    ops.represent = [space](const std::vector<Scalar>& x) { return space->combination(x).total(); };
    return ops;
}

namespace {

// Exhaustive search for a nontrivial idempotent; only for tiny End.
std::optional<std::vector<Scalar>> find_idempotent(const AlgebraOps& ops) {
    for (const auto& e : all_vectors(ops.dim, ops.p, false)) {
        if (e == ops.one) continue;
        if (ops.multiply(e, e) == e) return e;
    }
    return std::nullopt;
}

constexpr std::size_t kExhaustiveEndDim = 6;

// Empty optional: End(m) is local. Otherwise an element that is neither
// nilpotent nor invertible.
std::optional<std::vector<Scalar>> splitting_element(const Module& m, const HomSpace& end) {
    AlgebraOps ops = endomorphism_ops(end);
    LocalAnalysis la = analyze_local(ops);
    if (la.verdict == LocalAnalysis::Verdict::Local) return std::nullopt;
    if (la.verdict == LocalAnalysis::Verdict::Split) return la.splitter;
    if (end.dim() <= kExhaustiveEndDim) {
        // A finite-dimensional algebra without nontrivial idempotents is local.
        return find_idempotent(ops);
    }
    throw InconclusiveError("could not decide whether End of a module with " + m.describe() + " is local");
}

void split_into(const Module& m, const ModMap& inc, const ModMap& proj, std::vector<Summand>& out) {
    if (m.is_zero()) return;
    Budget::check("decompose");
    HomSpace end(m, m);
    auto u = splitting_element(m, end);
    if (!u) {
        out.push_back({m, inc, proj});
        return;
    }
    ModMap f = end.combination(*u);
    std::vector<Mat> powered;
    for (const auto& b : f.blocks()) powered.push_back(matrix_power(b, m.total_dim()));
    ModMap fn = ModMap::unchecked(m, m, powered);
    Submodule im = image(fn), ker = kernel(fn);
    if (im.module.is_zero() || ker.module.is_zero())
        throw PreconditionError("Fitting decomposition produced a trivial summand");
    std::vector<Mat> pi, pk;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        const std::size_t a = im.module.dim(v), n = m.dim(v);
        Mat t = hstack({im.inclusion.block(v), ker.inclusion.block(v)});
        Mat tinv = n ? *inverse(t) : Mat(0, 0, m.p());
        pi.push_back(tinv.block(0, 0, a, n));
        pk.push_back(tinv.block(a, 0, n - a, n));
    }
    ModMap proj_im = ModMap::unchecked(m, im.module, pi);
    ModMap proj_ker = ModMap::unchecked(m, ker.module, pk);
    split_into(im.module, inc * im.inclusion, proj_im * proj, out);
    split_into(ker.module, inc * ker.inclusion, proj_ker * proj, out);
}

}  // namespace

bool is_indecomposable(const Module& m) {
    if (m.is_zero()) return false;
    return !splitting_element(m, HomSpace(m, m)).has_value();
}

Decomposition decompose(const Module& m) {
    Decomposition d;
    ModMap id = ModMap::identity(m);
    split_into(m, id, id, d.summands);
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
        const Module& s = d.summands[i].module;
        bool placed = false;
        for (auto& c : d.classes)
            if (indecomposable_isomorphism(c.representative, s)) {
                c.members.push_back(i);
                placed = true;
                break;
            }
        if (!placed) d.classes.push_back({s, {i}});
    }
    return d;
}

std::optional<ModMap> indecomposable_isomorphism(const Module& m, const Module& n) {
    if (m.algebra() != n.algebra() || m.dims() != n.dims()) return std::nullopt;
    if (m == n) return ModMap::identity(m);
    auto fs = hom_space(m, n);
    for (const auto& f : fs)
        if (f.is_iso()) return f;
    auto gs = hom_space(n, m);
    // End(m) local: some g*f is invertible iff not all of them lie in the radical.
    for (const auto& f : fs)
        for (const auto& g : gs)
            if ((g * f).is_iso()) return f;
    return std::nullopt;
}

std::optional<ModMap> isomorphism(const Module& m, const Module& n) {
    if (m.algebra() != n.algebra() || m.dims() != n.dims()) return std::nullopt;
    if (m == n) return ModMap::identity(m);
    HomSpace hs(m, n);
    if (hs.dim() == 0) return m.is_zero() ? std::optional<ModMap>(ModMap::zero(m, n)) : std::nullopt;
    std::mt19937_64 rng(0x150);
    std::uniform_int_distribution<Scalar> dist(0, m.p() - 1);
    for (int trial = 0; trial < 16; ++trial) {
        std::vector<Scalar> c(hs.dim());
        for (auto& x : c) x = dist(rng);
        ModMap f = hs.combination(c);
        if (f.is_iso()) return f;
    }
    double space = 1;
    for (std::size_t i = 0; i < hs.dim(); ++i) space *= m.p();
    if (space <= 4096) {
        for (const auto& c : all_vectors(hs.dim(), m.p(), false)) {
            ModMap f = hs.combination(c);
            if (f.is_iso()) return f;
        }
        return std::nullopt;
    }
    // Match Krull-Schmidt decompositions summand by summand.
    Decomposition dm = decompose(m), dn = decompose(n);
    if (dm.summands.size() != dn.summands.size()) return std::nullopt;
    std::vector<bool> used(dn.summands.size(), false);
    ModMap witness = ModMap::zero(m, n);
    for (const auto& s : dm.summands) {
        bool found = false;
        for (std::size_t j = 0; j < dn.summands.size() && !found; ++j) {
            if (used[j]) continue;
            auto iso = indecomposable_isomorphism(s.module, dn.summands[j].module);
            if (!iso) continue;
            used[j] = true;
            found = true;
            witness = witness + dn.summands[j].inclusion * *iso * s.projection;
        }
        if (!found) return std::nullopt;
    }
    return witness;
}

std::size_t find_isomorphic(const std::vector<Module>& list, const Module& m) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i].dims() == m.dims() && indecomposable_isomorphism(list[i], m)) return i;
    return static_cast<std::size_t>(-1);
}

void sort_modules(std::vector<Module>& ms) {
    std::stable_sort(ms.begin(), ms.end(), [](const Module& a, const Module& b) {
        if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
        return a.dims() < b.dims();
    });
}

namespace {

// Canonical bases (reduced echelon rows) of all m-dimensional subspaces of F_p^d.
std::vector<std::vector<std::vector<Scalar>>> subspaces(std::size_t d, std::size_t m, Scalar p) {
    std::vector<std::vector<std::vector<Scalar>>> out;
    auto vecs = all_vectors(d, p, false);
    std::vector<std::size_t> idx(m);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == m) {
            std::vector<std::vector<long long>> rows;
            for (auto i : idx) rows.emplace_back(vecs[i].begin(), vecs[i].end());
            Mat a = Mat::from_rows(rows, p, d);
            Rref r = rref(a);
            if (r.rank != m || r.reduced != a) return;
            std::vector<std::vector<Scalar>> basis;
            for (auto i : idx) basis.push_back(vecs[i]);
            out.push_back(basis);
            return;
        }
        for (std::size_t i = start; i < vecs.size(); ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    if (m == 0) return {{}};
    rec(0, 0);
    return out;
}

}  // namespace

std::vector<Module> extension_closure(const ClosureSpec& spec) {
    const Scalar p = spec.algebra->p();
    std::vector<Module> known;
    auto absorb = [&](const Module& x) {
        bool added = false;
        if (x.is_zero()) return false;
        for (const auto& s : decompose(x).summands) {
            if (s.module.total_dim() > spec.bound) continue;
            if (find_isomorphic(known, s.module) != static_cast<std::size_t>(-1)) continue;
            known.push_back(s.module);
            added = true;
        }
        return added;
    };
    for (const auto& b : spec.bottoms) absorb(b);
    for (const auto& s : spec.seeds) absorb(s);

    std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<ExtSpace>> exts;
    auto ext = [&](std::size_t b, std::size_t k) -> const ExtSpace& {
        auto key = std::make_pair(b, k);
        auto it = exts.find(key);
        if (it == exts.end())
            it = exts.emplace(key, std::make_shared<ExtSpace>(known[k], spec.bottoms[b])).first;
        return *it->second;
    };
    std::set<std::pair<std::size_t, std::vector<std::size_t>>> done;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t b = 0; b < spec.bottoms.size(); ++b) {
            const Module& bottom = spec.bottoms[b];
            if (bottom.total_dim() >= spec.bound) continue;
            const std::size_t room = spec.bound - bottom.total_dim();
            // Multisets as multiplicity vectors over the current known list.
            const std::size_t nk = known.size();
            std::vector<std::size_t> mult(nk, 0);
            std::vector<std::vector<std::size_t>> multisets;
            std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t used) {
                if (k == nk) {
                    if (used > 0) multisets.push_back(mult);
                    return;
                }
                rec(k + 1, used);
                const std::size_t d = known[k].total_dim();
                const std::size_t cap = ext(b, k).dim();
                for (std::size_t m = 1; m <= cap && used + m * d <= room; ++m) {
                    mult[k] = m;
                    rec(k + 1, used + m * d);
                }
                mult[k] = 0;
            };
            rec(0, 0);
            for (const auto& ms : multisets) {
                if (!done.insert({b, ms}).second) continue;
                Budget::check("extension closure");
                // Choices per group: a canonical basis of a subspace of Ext^1(Z_k, S).
                std::vector<std::size_t> groups;
                std::vector<std::vector<std::vector<std::vector<Scalar>>>> choices;
                for (std::size_t k = 0; k < ms.size(); ++k) {
                    if (!ms[k]) continue;
                    groups.push_back(k);
                    choices.push_back(subspaces(ext(b, k).dim(), ms[k], p));
                }
                std::vector<std::size_t> pick(groups.size(), 0);
                while (true) {
                    std::vector<ModMap> inflations;
                    std::vector<Module> middles;
                    for (std::size_t g = 0; g < groups.size(); ++g)
                        for (const auto& c : choices[g][pick[g]]) {
                            Extension e = ext(b, groups[g]).extension(c);
                            inflations.push_back(e.inflation);
                            middles.push_back(e.middle());
                        }
                    // Push the sum of the component sequences out along the codiagonal.
                    std::vector<Module> copies(inflations.size(), bottom);
                    DirectSum src = direct_sum(copies, spec.algebra);
                    DirectSum mid = direct_sum(middles, spec.algebra);
                    ModMap sum_inf = ModMap::zero(src.sum, mid.sum);
                    ModMap codiag = ModMap::zero(src.sum, bottom);
                    for (std::size_t i = 0; i < inflations.size(); ++i) {
                        sum_inf = sum_inf + mid.injections[i] * inflations[i] * src.projections[i];
                        codiag = codiag + src.projections[i];
                    }
                    Module e = pushout(sum_inf, codiag).object;
                    if (!spec.accept || spec.accept(e))
                        if (absorb(e)) changed = true;
                    std::size_t g = 0;
                    while (g < groups.size() && ++pick[g] == choices[g].size()) pick[g++] = 0;
                    if (g == groups.size()) break;
                }
            }
        }
    }
    sort_modules(known);
    return known;
}

std::vector<Module> enumerate_indecomposables(const AlgebraPtr& alg, std::size_t bound) {
    if (auto n = alg->nilpotent_loop_order()) {
        std::vector<Module> out;
        for (std::size_t k = 1; k <= std::min(*n, bound); ++k) out.push_back(jordan_block(alg, k));
        return out;
    }
    ClosureSpec spec;
    spec.algebra = alg;
    for (std::size_t v = 0; v < alg->num_vertices(); ++v) spec.bottoms.push_back(simple_module(alg, v));
    spec.bound = bound;
    return extension_closure(spec);
}

std::vector<Module> enumerate_indecomposables_exhaustive(const AlgebraPtr& alg, std::size_t bound,
                                                         std::size_t max_entries) {
    const std::size_t nv = alg->num_vertices();
    const Scalar p = alg->p();
    std::vector<Module> found;
    std::vector<std::size_t> dims(nv, 0);
    // Dimension vectors in lexicographic order.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t total) {
        if (v == nv) {
            if (total == 0) return;
            std::size_t entries = 0;
            for (std::size_t a = 0; a < alg->num_arrows(); ++a)
                entries += dims[alg->arrow(a).target] * dims[alg->arrow(a).source];
            if (entries > max_entries) {
                std::string dv;
                for (auto d : dims) dv += (dv.empty() ? "" : ",") + std::to_string(d);
                throw BudgetExceeded("exhaustive enumeration too large at dimension vector (" + dv + ")");
            }
            for (const auto& code : all_vectors(entries, p, true)) {
                Budget::check("exhaustive enumeration");
                std::vector<Mat> action;
                std::size_t off = 0;
                for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
                    std::size_t r = dims[alg->arrow(a).target], c = dims[alg->arrow(a).source];
                    action.emplace_back(r, c, p, std::vector<Scalar>(code.begin() + off, code.begin() + off + r * c));
                    off += r * c;
                }
                Module m = Module::unchecked(alg, dims, action);
                try {
                    m.validate();
                } catch (const InputError&) {
                    continue;
                }
                if (!is_indecomposable(m)) continue;
                if (find_isomorphic(found, m) == static_cast<std::size_t>(-1)) found.push_back(m);
            }
            return;
        }
        for (std::size_t d = 0; total + d <= bound; ++d) {
            dims[v] = d;
            rec(v + 1, total + d);
        }
        dims[v] = 0;
    };
    rec(0, 0);
    sort_modules(found);
    return found;
}

}  // namespace monocat
