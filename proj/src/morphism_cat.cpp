#include "monocat/morphism_cat.hpp"

#include <random>

#include "monocat/errors.hpp"

namespace monocat {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

MorphObj::MorphObj(const ModMap& f) : f_(f) {
    const auto& base = f.source().algebra();
    if (f.target().algebra() != base) throw PreconditionError("morphism between modules over different algebras");
    auto t = base->t2();
    const std::size_t n = base->num_vertices(), m = base->num_arrows();
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < n; ++v) dims.push_back(a().dim(v));
    for (std::size_t v = 0; v < n; ++v) dims.push_back(b().dim(v));
    std::vector<Mat> action;
    for (std::size_t i = 0; i < m; ++i) action.push_back(a().action(i));
    for (std::size_t i = 0; i < m; ++i) action.push_back(b().action(i));
    for (std::size_t v = 0; v < n; ++v) action.push_back(f.block(v));
    t2_ = Module::unchecked(t, dims, std::move(action));
}

MorphObj MorphObj::from_t2(const Module& m) {
    const auto& base = m.algebra()->t2_base();
    if (!base) throw PreconditionError("module is not over a T_2 algebra");
    const std::size_t n = base->num_vertices(), k = base->num_arrows();
    std::vector<std::size_t> da(m.dims().begin(), m.dims().begin() + n), db(m.dims().begin() + n, m.dims().end());
    std::vector<Mat> aa(m.actions().begin(), m.actions().begin() + k);
    std::vector<Mat> ab(m.actions().begin() + k, m.actions().begin() + 2 * k);
    std::vector<Mat> fb(m.actions().begin() + 2 * k, m.actions().end());
    MorphObj x;
    x.f_ = ModMap::unchecked(Module::unchecked(base, da, aa), Module::unchecked(base, db, ab), fb);
    x.t2_ = m;
    return x;
}

std::string MorphObj::describe() const { return "(" + a().describe() + " -> " + b().describe() + ")"; }

MorphMap MorphMap::unchecked(MorphObj source, MorphObj target, ModMap phi1, ModMap phi2) {
    MorphMap m;
    m.src_ = std::move(source);
    m.tgt_ = std::move(target);
    m.phi1_ = std::move(phi1);
    m.phi2_ = std::move(phi2);
    return m;
}

MorphMap::MorphMap(MorphObj source, MorphObj target, ModMap phi1, ModMap phi2)
    : src_(std::move(source)), tgt_(std::move(target)), phi1_(std::move(phi1)), phi2_(std::move(phi2)) {
    if (!phi1_.source().same_shape(src_.a()) || !phi1_.target().same_shape(tgt_.a()) ||
        !phi2_.source().same_shape(src_.b()) || !phi2_.target().same_shape(tgt_.b()))
        throw InputError("morphism components have the wrong shape");
    if (phi2_ * src_.f() != tgt_.f() * phi1_) throw InputError("morphism square does not commute");
}

MorphMap MorphMap::from_t2(const MorphObj& source, const MorphObj& target, const ModMap& m) {
    const std::size_t n = source.base()->num_vertices();
    std::vector<Mat> b1(m.blocks().begin(), m.blocks().begin() + n), b2(m.blocks().begin() + n, m.blocks().end());
    return unchecked(source, target, ModMap::unchecked(source.a(), target.a(), b1),
                     ModMap::unchecked(source.b(), target.b(), b2));
}

MorphMap MorphMap::identity(const MorphObj& x) {
    return unchecked(x, x, ModMap::identity(x.a()), ModMap::identity(x.b()));
}

MorphMap MorphMap::zero(const MorphObj& x, const MorphObj& y) {
    return unchecked(x, y, ModMap::zero(x.a(), y.a()), ModMap::zero(x.b(), y.b()));
}

ModMap MorphMap::to_t2() const {
    std::vector<Mat> blocks = phi1_.blocks();
    blocks.insert(blocks.end(), phi2_.blocks().begin(), phi2_.blocks().end());
    return ModMap::unchecked(src_.t2(), tgt_.t2(), std::move(blocks));
}

MorphMap MorphMap::operator+(const MorphMap& o) const {
    return unchecked(src_, tgt_, phi1_ + o.phi1_, phi2_ + o.phi2_);
}

MorphMap MorphMap::scaled(Scalar s) const { return unchecked(src_, tgt_, phi1_.scaled(s), phi2_.scaled(s)); }

MorphMap operator*(const MorphMap& g, const MorphMap& f) {
    return MorphMap::unchecked(f.source(), g.target(), g.phi1() * f.phi1(), g.phi2() * f.phi2());
}

std::vector<MorphMap> morph_hom_space(const MorphObj& x, const MorphObj& y) {
    std::vector<MorphMap> out;
    for (const auto& h : hom_space(x.t2(), y.t2())) out.push_back(MorphMap::from_t2(x, y, h));
    return out;
}

MorphObj zero_to(const Module& m) { return MorphObj(ModMap::zero(Module::zero(m.algebra()), m)); }

MorphObj identity_obj(const Module& m) { return MorphObj(ModMap::identity(m)); }

MorphObj zero_from(const Module& m) { return MorphObj(ModMap::zero(m, Module::zero(m.algebra()))); }

QuotientModule coker_module(const MorphObj& x) { return cokernel(x.f()); }

bool is_object_of_S(const MorphObj& x, const Subcat& sub) {
    if (!x.is_mono()) return false;
    return sub.contains(x.a()) && sub.contains(x.b()) && sub.contains(coker_module(x).module);
}

MorphObj cok_functor(const MorphObj& x) {
    if (!x.is_mono()) throw PreconditionError("Cok functor needs a monomorphism");
    return MorphObj(coker_module(x).projection);
}

MorphMap cok_functor(const MorphMap& m) {
    MorphObj cx = cok_functor(m.source()), cy = cok_functor(m.target());
    ModMap induced = descend(cx.f(), cy.f() * m.phi2());
    return MorphMap::unchecked(cx, cy, m.phi2(), induced);
}

MorphObj ker_functor(const MorphObj& y) {
    if (!y.is_epi()) throw PreconditionError("Ker functor needs an epimorphism");
    return MorphObj(kernel(y.f()).inclusion);
}

MorphMap ker_functor(const MorphMap& m) {
    MorphObj kx = ker_functor(m.source()), ky = ker_functor(m.target());
    ModMap induced = through_mono(ky.f(), m.phi1() * kx.f());
    return MorphMap::unchecked(kx, ky, induced, m.phi1());
}

std::vector<MorphSummand> decompose_morph(const MorphObj& x) {
    std::vector<MorphSummand> out;
    for (const auto& c : decompose(x.t2()).classes)
        out.push_back({MorphObj::from_t2(c.representative), c.multiplicity()});
    return out;
}

bool is_indecomposable_morph(const MorphObj& x) { return is_indecomposable(x.t2()); }

std::optional<MorphMap> morph_isomorphism(const MorphObj& x, const MorphObj& y) {
    auto iso = isomorphism(x.t2(), y.t2());
    if (!iso) return std::nullopt;
    return MorphMap::from_t2(x, y, *iso);
}

std::size_t find_isomorphic_morph(const std::vector<MorphObj>& list, const MorphObj& x) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i].t2().dims() == x.t2().dims() && indecomposable_isomorphism(list[i].t2(), x.t2())) return i;
    return npos;
}

namespace {

// Basis of {h in End(M) : h * f = 0} (left) or {h : f * h = 0} (right).
std::vector<ModMap> annihilator(const HomSpace& end, const ModMap& f, bool left) {
    std::vector<std::vector<Scalar>> images;
    for (const auto& e : end.basis()) images.push_back(left ? (e * f).flat() : (f * e).flat());
    const std::size_t rows = images.empty() ? 0 : images.front().size();
    Mat a(rows, end.dim(), end.source().p());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) a(i, j) = images[j][i];
    Mat k = rows ? kernel_basis(a) : Mat::identity(end.dim(), end.source().p());
    std::vector<ModMap> out;
    for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(end.combination(k.col_vector(c)));
    return out;
}

// A one-sided ideal is nil iff nilpotent; test by powers of its span.
bool ideal_is_nilpotent(const HomSpace& end, const std::vector<ModMap>& ideal, bool left) {
    std::vector<ModMap> cur = ideal;
    std::size_t dim = cur.size();
    for (std::size_t step = 0; step <= end.dim() + 1; ++step) {
        if (cur.empty()) return true;
        RowSpace span(end.dim(), end.source().p());
        std::vector<ModMap> next;
        for (const auto& x : cur)
            for (const auto& y : ideal) {
                ModMap prod = left ? x * y : y * x;
                auto c = end.coordinates(prod);
                if (span.insert(*c)) next.push_back(prod);
            }
        if (next.size() == dim) return false;
        cur = std::move(next);
        dim = cur.size();
    }
    return cur.empty();
}

bool is_nilpotent_map(const ModMap& x) {
    for (const auto& b : x.blocks())
        if (!matrix_power(b, b.rows() + 1).is_zero()) return false;
    return true;
}

}  // namespace

bool is_left_minimal(const ModMap& f) {
    HomSpace end(f.target(), f.target());
    return ideal_is_nilpotent(end, annihilator(end, f, true), true);
}

bool is_right_minimal(const ModMap& f) {
    HomSpace end(f.source(), f.source());
    return ideal_is_nilpotent(end, annihilator(end, f, false), false);
}

LeftMinimalSplit split_left_minimal(const ModMap& f0) {
    ModMap f = f0;
    ModMap inc = ModMap::identity(f0.target()), proj = inc;
    std::vector<ModMap> rest_inc, rest_proj;
    std::vector<Module> rest_parts;
    std::mt19937_64 rng(0x1eff);
    while (true) {
        Budget::check("left minimal split");
        const Module target = f.target();
        HomSpace end(target, target);
        auto ann = annihilator(end, f, true);
        if (ideal_is_nilpotent(end, ann, true)) break;
        // A non-nilpotent x with x f = 0: Fitting splits off im(x^N), which f misses.
        std::optional<ModMap> x;
        for (const auto& a : ann)
            if (!is_nilpotent_map(a)) {
                x = a;
                break;
            }
        std::uniform_int_distribution<Scalar> dist(0, target.p() - 1);
        for (int t = 0; t < 256 && !x; ++t) {
            ModMap c = ModMap::zero(target, target);
            for (const auto& a : ann) c = c + a.scaled(dist(rng));
            if (!is_nilpotent_map(c)) x = c;
        }
        if (!x) throw InconclusiveError("no non-nilpotent annihilating endomorphism found");
        std::vector<Mat> powered;
        for (const auto& b : x->blocks()) powered.push_back(matrix_power(b, target.total_dim()));
        ModMap xn = ModMap::unchecked(target, target, powered);
        Submodule im = image(xn), ker = kernel(xn);
        std::vector<Mat> pi, pk;
        for (std::size_t v = 0; v < target.num_vertices(); ++v) {
            const std::size_t a = im.module.dim(v), n = target.dim(v);
            Mat t = hstack({im.inclusion.block(v), ker.inclusion.block(v)});
            Mat tinv = n ? *inverse(t) : Mat(0, 0, target.p());
            pi.push_back(tinv.block(0, 0, a, n));
            pk.push_back(tinv.block(a, 0, n - a, n));
        }
        rest_parts.push_back(im.module);
        rest_inc.push_back(inc * im.inclusion);
        rest_proj.push_back(ModMap::unchecked(target, im.module, pi) * proj);
        f = through_mono(ker.inclusion, f);
        inc = inc * ker.inclusion;
        proj = ModMap::unchecked(target, ker.module, pk) * proj;
    }
    LeftMinimalSplit s;
    s.minimal = MorphObj(f);
    s.include_minimal = inc;
    s.project_minimal = proj;
    DirectSum ds = direct_sum(rest_parts, f0.source().algebra());
    s.rest = ds.sum;
    s.include_rest = ModMap::zero(ds.sum, f0.target());
    s.project_rest = ModMap::zero(f0.target(), ds.sum);
    for (std::size_t k = 0; k < rest_parts.size(); ++k) {
        s.include_rest = s.include_rest + rest_inc[k] * ds.projections[k];
        s.project_rest = s.project_rest + ds.injections[k] * rest_proj[k];
    }
    return s;
}

std::vector<MorphObj> enumerate_S_indecomposables(const Subcat& sub, std::size_t bound) {
    const auto& base = sub.algebra();
    ClosureSpec spec;
    spec.algebra = base->t2();
    spec.bound = bound;
    for (std::size_t v = 0; v < base->num_vertices(); ++v)
        spec.bottoms.push_back(identity_obj(simple_module(base, v)).t2());
    for (const auto& m : enumerate_indecomposables(base, bound)) spec.seeds.push_back(zero_to(m).t2());
    spec.accept = [](const Module& e) { return MorphObj::from_t2(e).is_mono(); };
    std::vector<MorphObj> out;
    for (const auto& m : extension_closure(spec)) {
        MorphObj x = MorphObj::from_t2(m);
        if (is_object_of_S(x, sub)) out.push_back(x);
    }
    return out;
}

}  // namespace monocat
