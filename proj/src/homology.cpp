#include "monocat/homology.hpp"

#include "monocat/errors.hpp"

namespace monocat {

HomQuotient::HomQuotient(HomSpace space, const std::vector<ModMap>& generators) : space_(std::move(space)) {
    const std::size_t n = space_.dim();
    const Scalar p = space_.source().p();
    Mat gens(n, generators.size(), p);
    for (std::size_t j = 0; j < generators.size(); ++j) {
        auto c = space_.coordinates(generators[j]);
        if (!c) throw PreconditionError("quotient generator is not a module map");
        for (std::size_t i = 0; i < n; ++i) gens(i, j) = (*c)[i];
    }
    Mat img = image_basis(gens);
    sub_dim_ = img.cols();
    auto comp = complement_indices(img, n);
    Mat full(n, n, p);
    full.set_block(0, 0, img);
    for (std::size_t j = 0; j < comp.size(); ++j) {
        full(comp[j], sub_dim_ + j) = 1;
        std::vector<Scalar> e(n, 0);
        e[comp[j]] = 1;
        reps_.push_back(space_.combination(e));
    }
    solver_ = std::make_shared<SpanSolver>(full);
}

ModMap HomQuotient::combination(const std::vector<Scalar>& coeffs) const {
    ModMap out = ModMap::zero(space_.source(), space_.target());
    for (std::size_t i = 0; i < reps_.size() && i < coeffs.size(); ++i)
        if (coeffs[i]) out = out + reps_[i].scaled(coeffs[i]);
    return out;
}

std::vector<Scalar> HomQuotient::coordinates(const ModMap& f) const {
    auto c = space_.coordinates(f);
    if (!c) throw PreconditionError("not a module map between the expected modules");
    auto s = solver_->solve(*c);
    return std::vector<Scalar>(s->begin() + static_cast<std::ptrdiff_t>(sub_dim_), s->end());
}

bool HomQuotient::in_subspace(const ModMap& f) const {
    for (auto x : coordinates(f))
        if (x) return false;
    return true;
}

ProjectiveCover projective_cover(const Module& m) {
    const auto& alg = m.algebra();
    Submodule rad = radical(m);
    std::vector<Module> parts;
    std::vector<ModMap> maps;
    ProjectiveCover pc;
    std::vector<std::optional<Module>> proj(alg->num_vertices());
    for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
        auto comp = complement_indices(rad.inclusion.block(v), m.dim(v));
        for (auto c : comp) {
            if (!proj[v]) proj[v] = projective_module(alg, v);
            const Module& pv = *proj[v];
            std::vector<Mat> blocks;
            for (std::size_t w = 0; w < alg->num_vertices(); ++w) {
                const auto& bs = alg->basis_between(v, w);
                Mat b(m.dim(w), bs.size(), m.p());
                for (std::size_t j = 0; j < bs.size(); ++j) {
                    Mat act = m.element_action(bs[j]);
                    for (std::size_t i = 0; i < m.dim(w); ++i) b(i, j) = act(i, c);
                }
                blocks.push_back(b);
            }
            parts.push_back(pv);
            maps.push_back(ModMap::unchecked(pv, m, std::move(blocks)));
            pc.tops.push_back(v);
        }
    }
    DirectSum ds = direct_sum(parts, alg);
    pc.cover = ds.sum;
    pc.projection = ModMap::zero(ds.sum, m);
    for (std::size_t k = 0; k < maps.size(); ++k) pc.projection = pc.projection + maps[k] * ds.projections[k];
    return pc;
}

Syzygy syzygy(const Module& m) {
    Syzygy s;
    s.cover = projective_cover(m);
    Submodule k = kernel(s.cover.projection);
    s.module = k.module;
    s.inclusion = k.inclusion;
    return s;
}

InjectiveEnvelope injective_envelope(const Module& m) {
    ProjectiveCover pc = projective_cover(dual_module(m));
    ModMap d = dual_map(pc.projection);
    InjectiveEnvelope env;
    env.envelope = d.target();
    env.inclusion = ModMap::unchecked(m, env.envelope, d.blocks());
    env.socles = pc.tops;
    return env;
}

bool is_projective(const Module& m) { return projective_cover(m).cover.total_dim() == m.total_dim(); }

bool is_injective(const Module& m) { return injective_envelope(m).envelope.total_dim() == m.total_dim(); }

namespace {

std::optional<ModMap> solve_in_hom(const std::vector<ModMap>& basis, const std::vector<ModMap>& images,
                                   const ModMap& g) {
    auto target = g.flat();
    Mat a(target.size(), images.size(), g.source().p());
    for (std::size_t j = 0; j < images.size(); ++j) {
        auto f = images[j].flat();
        for (std::size_t i = 0; i < f.size(); ++i) a(i, j) = f[i];
    }
    auto s = solve_linear(a, Mat::column(target, g.source().p()));
    if (!s) return std::nullopt;
    if (basis.empty()) return std::nullopt;
    ModMap h = ModMap::zero(basis.front().source(), basis.front().target());
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (s->particular(j, 0)) h = h + basis[j].scaled(s->particular(j, 0));
    return h;
}

}  // namespace

std::optional<ModMap> factor_through_right(const ModMap& g, const ModMap& p) {
    if (g.is_zero()) return ModMap::zero(g.source(), p.source());
    auto basis = hom_space(g.source(), p.source());
    std::vector<ModMap> images;
    for (const auto& h : basis) images.push_back(p * h);
    return solve_in_hom(basis, images, g);
}

std::optional<ModMap> factor_through_left(const ModMap& g, const ModMap& i) {
    if (g.is_zero()) return ModMap::zero(i.target(), g.target());
    auto basis = hom_space(i.target(), g.target());
    std::vector<ModMap> images;
    for (const auto& h : basis) images.push_back(h * i);
    return solve_in_hom(basis, images, g);
}

ModMap descend(const ModMap& q, const ModMap& g) {
    std::vector<Mat> blocks;
    for (std::size_t v = 0; v < q.blocks().size(); ++v) {
        auto s = solve_linear(q.block(v).transpose(), g.block(v).transpose());
        if (!s) throw PreconditionError("map does not vanish on the kernel of the quotient");
        blocks.push_back(s->particular.transpose());
    }
    return ModMap::unchecked(q.target(), g.target(), std::move(blocks));
}

ModMap through_mono(const ModMap& i, const ModMap& g) {
    std::vector<Mat> blocks;
    for (std::size_t v = 0; v < i.blocks().size(); ++v) {
        auto s = solve_linear(i.block(v), g.block(v));
        if (!s) throw PreconditionError("map does not land in the image of the monomorphism");
        blocks.push_back(s->particular);
    }
    return ModMap::unchecked(g.source(), i.source(), std::move(blocks));
}

bool is_split_mono(const ModMap& i) {
    if (!i.is_injective()) return false;
    return factor_through_left(ModMap::identity(i.source()), i).has_value();
}

bool is_split_epi(const ModMap& p) {
    if (!p.is_surjective()) return false;
    return factor_through_right(ModMap::identity(p.target()), p).has_value();
}

Pushout pushout(const ModMap& f, const ModMap& g) {
    Pushout po;
    po.sum = direct_sum({f.target(), g.target()});
    ModMap m = po.sum.injections[0] * f - po.sum.injections[1] * g;
    QuotientModule q = cokernel(m);
    po.object = q.module;
    po.quotient_map = q.projection;
    po.from_b = q.projection * po.sum.injections[0];
    po.from_c = q.projection * po.sum.injections[1];
    return po;
}

Pullback pullback(const ModMap& f, const ModMap& g) {
    Pullback pb;
    pb.sum = direct_sum({f.source(), g.source()});
    ModMap m = f * pb.sum.projections[0] - g * pb.sum.projections[1];
    Submodule k = kernel(m);
    pb.object = k.module;
    pb.inclusion = k.inclusion;
    pb.to_b = pb.sum.projections[0] * k.inclusion;
    pb.to_c = pb.sum.projections[1] * k.inclusion;
    return pb;
}

namespace {

std::vector<ModMap> precomposed_generators(const Syzygy& s, const Module& x) {
    std::vector<ModMap> out;
    for (const auto& h : hom_space(s.cover.cover, x)) out.push_back(h * s.inclusion);
    return out;
}

}  // namespace

ExtSpace::ExtSpace(const Module& z, const Module& x)
    : z_(z), x_(x), omega_(syzygy(z)),
      quotient_(HomSpace(omega_.module, x), precomposed_generators(omega_, x)) {}

Extension ExtSpace::extension_from(const ModMap& h) const {
    Pushout po = pushout(omega_.inclusion, h);
    ModMap top = omega_.cover.projection * po.sum.projections[0];
    Extension e;
    e.inflation = po.from_c;
    e.deflation = descend(po.quotient_map, top);
    return e;
}

Extension ExtSpace::extension(const std::vector<Scalar>& coeffs) const {
    return extension_from(quotient_.combination(coeffs));
}

std::vector<Scalar> ExtSpace::class_of(const ModMap& i, const ModMap& p) const {
    auto lift = factor_through_right(omega_.cover.projection, p);
    if (!lift) throw PreconditionError("sequence end map is not an epimorphism");
    ModMap h = through_mono(i, *lift * omega_.inclusion);
    return quotient_.coordinates(h);
}

std::size_t ext1_dim(const Module& z, const Module& x) { return ExtSpace(z, x).dim(); }

HomQuotient stable_hom_space(const Module& m, const Module& n) {
    ProjectiveCover pc = projective_cover(n);
    std::vector<ModMap> gens;
    for (const auto& h : hom_space(m, pc.cover)) gens.push_back(pc.projection * h);
    return HomQuotient(HomSpace(m, n), gens);
}

HomQuotient costable_hom_space(const Module& m, const Module& n) {
    InjectiveEnvelope env = injective_envelope(m);
    std::vector<ModMap> gens;
    for (const auto& h : hom_space(env.envelope, n)) gens.push_back(h * env.inclusion);
    return HomQuotient(HomSpace(m, n), gens);
}

std::vector<std::vector<Scalar>> all_vectors(std::size_t length, Scalar p, bool include_zero) {
    std::vector<std::vector<Scalar>> out;
    std::vector<Scalar> v(length, 0);
    while (true) {
        bool zero = true;
        for (auto x : v) zero = zero && x == 0;
        if (include_zero || !zero) out.push_back(v);
        std::size_t k = 0;
        while (k < length && ++v[k] == p) v[k++] = 0;
        if (k == length) break;
    }
    return out;
}

}  // namespace monocat
