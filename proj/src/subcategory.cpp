#include "monocat/subcategory.hpp"

#include <random>

#include "monocat/decompose.hpp"
#include "monocat/errors.hpp"

namespace monocat {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);
constexpr double kExhaustiveLimit = 4096;

double space_size(std::size_t dim, Scalar p) {
    double s = 1;
    for (std::size_t i = 0; i < dim; ++i) s *= p;
    return s;
}

}  // namespace

Subcat::Subcat(AlgebraPtr alg, const std::vector<Module>& generators) : alg_(std::move(alg)) {
    for (const auto& g : generators) {
        if (g.algebra() != alg_) throw InputError("generator over a different algebra");
        if (!is_indecomposable(g)) throw InputError("generator " + g.describe() + " is not indecomposable");
        if (find_isomorphic(gens_, g) != npos) throw InputError("generators must be pairwise non-isomorphic");
        gens_.push_back(g);
    }
}

Subcat Subcat::all(const AlgebraPtr& alg, std::size_t bound) {
    Subcat x(alg, enumerate_indecomposables(alg, bound));
    x.whole_ = true;
    return x;
}

std::size_t Subcat::index_of(const Module& m) const { return find_isomorphic(gens_, m); }

bool Subcat::contains(const Module& m) const {
    if (m.is_zero()) return true;
    for (const auto& c : decompose(m).classes)
        if (index_of(c.representative) == npos) return false;
    return true;
}

namespace {

// Does some nonzero class of Ext^1(z, x) have its middle term in the subcategory?
bool has_internal_extension(const Subcat& sub, const Module& z, const Module& x) {
    ExtSpace e(z, x);
    if (e.dim() == 0) return false;
    if (sub.is_whole_category()) return true;
    if (space_size(e.dim(), z.p()) > kExhaustiveLimit)
        throw InconclusiveError("Ext^1 too large to enumerate classes");
    for (const auto& c : all_vectors(e.dim(), z.p(), false))
        if (sub.contains(e.extension(c).middle())) return true;
    return false;
}

}  // namespace

const std::vector<std::size_t>& Subcat::injective_indices() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->injectives) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            bool inj = true;
            for (const auto& g : gens_)
                if (inj && has_internal_extension(*this, g, gens_[i])) inj = false;
            if (inj) out.push_back(i);
        }
        cache_->injectives = out;
    }
    return *cache_->injectives;
}

const std::vector<std::size_t>& Subcat::projective_indices() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->projectives) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            bool proj = true;
            for (const auto& g : gens_)
                if (proj && has_internal_extension(*this, gens_[i], g)) proj = false;
            if (proj) out.push_back(i);
        }
        cache_->projectives = out;
    }
    return *cache_->projectives;
}

namespace {

bool summands_among(const Subcat& x, const Module& m, const std::vector<std::size_t>& allowed) {
    if (m.is_zero()) return true;
    for (const auto& c : decompose(m).classes) {
        auto i = x.index_of(c.representative);
        if (i == npos) return false;
        bool ok = false;
        for (auto a : allowed) ok = ok || a == i;
        if (!ok) return false;
    }
    return true;
}

}  // namespace

bool Subcat::is_x_injective(const Module& m) const { return summands_among(*this, m, injective_indices()); }

bool Subcat::is_x_projective(const Module& m) const { return summands_among(*this, m, projective_indices()); }

std::vector<ExtClass> ext1_middle_terms(const Module& z, const Module& x) {
    ExtSpace e(z, x);
    if (space_size(e.dim(), z.p()) > kExhaustiveLimit) throw InconclusiveError("Ext^1 too large to enumerate");
    std::vector<ExtClass> out;
    for (const auto& c : all_vectors(e.dim(), z.p(), true)) out.push_back({c, e.extension(c)});
    return out;
}

namespace {

// Multisets of generator indices with total dimension in [1, bound].
void multisets(const Subcat& x, std::size_t bound, std::size_t start, std::vector<std::size_t>& cur,
               std::size_t used, std::vector<std::vector<std::size_t>>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t i = start; i < x.size(); ++i) {
        std::size_t d = x.generators()[i].total_dim();
        if (used + d > bound) continue;
        cur.push_back(i);
        multisets(x, bound, i, cur, used + d, out);
        cur.pop_back();
    }
}

Module sum_of(const Subcat& x, const std::vector<std::size_t>& idx) {
    std::vector<Module> parts;
    for (auto i : idx) parts.push_back(x.generators()[i]);
    return direct_sum(parts, x.algebra()).sum;
}

}  // namespace

ResolvingReport validate_resolving(const Subcat& x, std::size_t dim_bound) {
    ResolvingReport r;
    const auto& alg = x.algebra();
    for (const auto& p : indecomposable_projectives(alg))
        if (!x.contains(p)) {
            r.contains_projectives = {false, "projective " + p.describe() + " is not in the subcategory", p};
            break;
        }
    for (std::size_t i = 0; i < x.size() && r.closed_under_extensions.pass; ++i)
        for (std::size_t j = 0; j < x.size() && r.closed_under_extensions.pass; ++j)
            for (const auto& c : ext1_middle_terms(x.generators()[i], x.generators()[j])) {
                Budget::check("extension closure check");
                if (!x.contains(c.sequence.middle())) {
                    r.closed_under_extensions = {false, "middle term of an extension is not in the subcategory",
                                                 c.sequence.middle()};
                    break;
                }
            }
    std::vector<std::vector<std::size_t>> sums;
    std::vector<std::size_t> cur;
    multisets(x, dim_bound, 0, cur, 0, sums);
    std::mt19937_64 rng(0xe51);
    for (const auto& top : sums) {
        if (!r.closed_under_epi_kernels.pass) break;
        Module x1 = sum_of(x, top);
        for (const auto& src : sums) {
            Module x0 = sum_of(x, src);
            if (x0.total_dim() < x1.total_dim()) continue;
            HomSpace hs(x0, x1);
            std::vector<std::vector<Scalar>> coeffs;
            if (space_size(hs.dim(), x.algebra()->p()) <= kExhaustiveLimit) {
                coeffs = all_vectors(hs.dim(), x.algebra()->p(), false);
            } else {
                r.bounded_only = true;
                std::uniform_int_distribution<Scalar> d(0, x.algebra()->p() - 1);
                for (int t = 0; t < 256; ++t) {
                    std::vector<Scalar> c(hs.dim());
                    for (auto& v : c) v = d(rng);
                    coeffs.push_back(c);
                }
            }
            for (const auto& c : coeffs) {
                Budget::check("epi kernel check");
                ModMap f = hs.combination(c);
                if (!f.is_surjective()) continue;
                Module k = kernel(f).module;
                if (!x.contains(k)) {
                    r.closed_under_epi_kernels = {false, "kernel of an epimorphism is not in the subcategory", k};
                    break;
                }
            }
            if (!r.closed_under_epi_kernels.pass) break;
        }
    }
    r.closed_under_summands = {true, "add-closed by construction", std::nullopt};
    return r;
}

ModMap right_approximation(const Subcat& x, const Module& m) {
    std::vector<Module> parts;
    std::vector<ModMap> maps;
    for (const auto& g : x.generators())
        for (const auto& h : hom_space(g, m)) {
            parts.push_back(g);
            maps.push_back(h);
        }
    DirectSum ds = direct_sum(parts, x.algebra());
    ModMap f = ModMap::zero(ds.sum, m);
    for (std::size_t k = 0; k < maps.size(); ++k) f = f + maps[k] * ds.projections[k];
    return f;
}

ModMap left_approximation(const Subcat& x, const Module& m) {
    std::vector<Module> parts;
    std::vector<ModMap> maps;
    for (const auto& g : x.generators())
        for (const auto& h : hom_space(m, g)) {
            parts.push_back(g);
            maps.push_back(h);
        }
    DirectSum ds = direct_sum(parts, x.algebra());
    ModMap f = ModMap::zero(m, ds.sum);
    for (std::size_t k = 0; k < maps.size(); ++k) f = f + ds.injections[k] * maps[k];
    return f;
}

namespace {

bool spans(const HomSpace& target, const std::vector<ModMap>& maps) {
    Mat cols(target.dim(), maps.size(), target.source().p());
    for (std::size_t j = 0; j < maps.size(); ++j) {
        auto c = target.coordinates(maps[j]);
        if (!c) throw PreconditionError("composite is not a module map");
        for (std::size_t i = 0; i < target.dim(); ++i) cols(i, j) = (*c)[i];
    }
    return rank(cols) == target.dim();
}

}  // namespace

bool is_right_approximation(const Subcat& x, const ModMap& f) {
    for (const auto& g : x.generators()) {
        std::vector<ModMap> comps;
        for (const auto& h : hom_space(g, f.source())) comps.push_back(f * h);
        if (!spans(HomSpace(g, f.target()), comps)) return false;
    }
    return true;
}

bool is_left_approximation(const Subcat& x, const ModMap& f) {
    for (const auto& g : x.generators()) {
        std::vector<ModMap> comps;
        for (const auto& h : hom_space(f.target(), g)) comps.push_back(h * f);
        if (!spans(HomSpace(f.source(), g), comps)) return false;
    }
    return true;
}

std::optional<Extension> x_injective_inflation(const Subcat& x, const Module& m) {
    std::vector<Module> parts;
    std::vector<ModMap> maps;
    for (auto i : x.injective_indices())
        for (const auto& h : hom_space(m, x.generators()[i])) {
            parts.push_back(x.generators()[i]);
            maps.push_back(h);
        }
    DirectSum ds = direct_sum(parts, x.algebra());
    ModMap f = ModMap::zero(m, ds.sum);
    for (std::size_t k = 0; k < maps.size(); ++k) f = f + ds.injections[k] * maps[k];
    if (!f.is_injective()) return std::nullopt;
    QuotientModule q = cokernel(f);
    if (!x.contains(q.module)) return std::nullopt;
    return Extension{f, q.projection};
}

std::optional<Extension> x_projective_deflation(const Subcat& x, const Module& m) {
    std::vector<Module> parts;
    std::vector<ModMap> maps;
    for (auto i : x.projective_indices())
        for (const auto& h : hom_space(x.generators()[i], m)) {
            parts.push_back(x.generators()[i]);
            maps.push_back(h);
        }
    DirectSum ds = direct_sum(parts, x.algebra());
    ModMap f = ModMap::zero(ds.sum, m);
    for (std::size_t k = 0; k < maps.size(); ++k) f = f + maps[k] * ds.projections[k];
    if (!f.is_surjective()) return std::nullopt;
    Submodule k = kernel(f);
    if (!x.contains(k.module)) return std::nullopt;
    return Extension{k.inclusion, f};
}

const CheckResult& Subcat::enough_injectives() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->enough) return *cache_->enough;
    }
    CheckResult r = verify_enough_injectives(*this);  // takes the lock itself
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->enough) cache_->enough = std::move(r);
    return *cache_->enough;
}

CheckResult verify_enough_injectives(const Subcat& x) {
    for (const auto& g : x.generators())
        if (!x_injective_inflation(x, g))
            return {false, "no conflation into an X-injective found for " + g.describe(), g};
    return {true, "every generator embeds into an X-injective with cokernel in X", std::nullopt};
}

}  // namespace monocat
