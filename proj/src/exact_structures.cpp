#include "monocat/exact_structures.hpp"

#include <algorithm>
#include <cctype>

#include "monocat/errors.hpp"

namespace monocat {

namespace {

constexpr double kClassLimit = 4096;
// Hom spaces up to this many elements are run through completely in the axiom checks.
constexpr double kMapLimit = 64;

double count_of(std::size_t dim, Scalar p) {
    double s = 1;
    for (std::size_t i = 0; i < dim; ++i) s *= p;
    return s;
}

bool commutes(const MorphMap& m) { return m.phi2() * m.source().f() == m.target().f() * m.phi1(); }

bool rows_split(const Conflation& c) {
    return is_split_ses(c.i.phi1(), c.p.phi1()) && is_split_ses(c.i.phi2(), c.p.phi2());
}

// 0 -> Cok f -> Cok h -> Cok g -> 0, exact by the snake lemma.
bool cokernel_row_splits(const Conflation& c) {
    return is_split_ses(cok_functor(c.i).phi2(), cok_functor(c.p).phi2());
}

bool all_zero(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

[[noreturn]] void no_enough_injectives(const Subcat& sub) {
    throw PreconditionError("enough injectives not verified for X: " + sub.enough_injectives().detail);
}

void require_enough_injectives(const Subcat& sub) {
    if (!sub.enough_injectives().pass) no_enough_injectives(sub);
}

// Left minimal version of the coevaluation into X-injectives; the discarded
// summand I_2 is X-injective and Cok stays in X as a summand of the old one.
Extension x_inflation(const Subcat& sub, const Module& m) {
    auto e = x_injective_inflation(sub, m);
    if (!e) no_enough_injectives(sub);
    ModMap mm = split_left_minimal(e->inflation).minimal.f();
    return Extension{mm, cokernel(mm).projection};
}

// Every class of Ext^1_{T_2}(y, x) with middle term in S, with kind verdicts.
struct RawClass {
    std::vector<Scalar> coords;
    Conflation conflation;
    bool member[3];
};

std::vector<RawClass> classes_between(const MorphObj& x, const MorphObj& y, const Subcat& sub) {
    ExtSpace e(y.t2(), x.t2());
    if (count_of(e.dim(), x.base()->p()) > kClassLimit)
        throw BudgetExceeded("inconclusive-at-bound: Ext^1 between " + y.describe() + " and " + x.describe() +
                             " has too many classes");
    std::vector<RawClass> out;
    for (const auto& c : all_vectors(e.dim(), x.base()->p(), true)) {
        Budget::check("conflation enumeration");
        Extension ext = e.extension(c);
        MorphObj mid = MorphObj::from_t2(ext.middle());
        if (!is_object_of_S(mid, sub)) continue;
        Conflation conf{MorphMap::from_t2(x, mid, ext.inflation), MorphMap::from_t2(mid, y, ext.deflation)};
        RawClass r{c, conf, {true, false, false}};
        r.member[1] = rows_split(conf);
        r.member[2] = r.member[1] && cokernel_row_splits(conf);
        out.push_back(std::move(r));
    }
    return out;
}

bool indecomposable_projective(StructureKind kind, const MorphObj& s, const Subcat& sub) {
    const bool iso = s.f().is_iso(), from_zero = s.a().is_zero();
    switch (kind) {
        case StructureKind::Canonical:
            return (iso || from_zero) && is_projective(s.b());
        case StructureKind::CW:
            return (iso && sub.contains(s.a())) || (from_zero && sub.contains(s.b()));
        case StructureKind::SCW: {
            if ((iso && sub.contains(s.a())) || (from_zero && sub.contains(s.b()))) return true;
            if (!s.is_mono()) return false;
            Module c = coker_module(s).module;
            if (c.is_zero() || !sub.contains(c) || !is_indecomposable(c)) return false;
            return morph_isomorphic(s, MorphObj(syzygy(c).inclusion));
        }
    }
    return false;
}

bool indecomposable_injective(StructureKind kind, const MorphObj& s, const Subcat& sub) {
    const bool iso = s.f().is_iso(), from_zero = s.a().is_zero();
    switch (kind) {
        case StructureKind::Canonical:
            return (iso || from_zero) && sub.is_x_injective(s.b());
        case StructureKind::CW:
            if (iso) return sub.contains(s.a());
            if (from_zero) return sub.is_x_injective(s.b());
            return sub.is_x_injective(s.b()) && is_left_minimal(s.f());
        case StructureKind::SCW:
            if (iso) return sub.contains(s.a());
            if (from_zero) return sub.contains(s.b());
            return sub.is_x_injective(s.b()) && is_left_minimal(s.f());
    }
    return false;
}

template <class Pred>
bool on_summands(const MorphObj& x, const Subcat& sub, Pred pred) {
    if (x.is_zero()) return true;
    if (!is_object_of_S(x, sub)) throw PreconditionError(x.describe() + " is not an object of S_X");
    for (const auto& s : decompose_morph(x))
        if (!pred(s.object)) return false;
    return true;
}

}  // namespace

std::string to_string(StructureKind k) {
    switch (k) {
        case StructureKind::Canonical: return "canonical";
        case StructureKind::CW: return "cw";
        case StructureKind::SCW: return "scw";
    }
    return "?";
}

StructureKind parse_kind(const std::string& s) {
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "canonical") return StructureKind::Canonical;
    if (t == "cw") return StructureKind::CW;
    if (t == "scw") return StructureKind::SCW;
    throw InputError("unknown exact structure '" + s + "' (expected canonical, cw or scw)");
}

// Empty when 0 -> X -i-> Z -p-> Y -> 0 is exact, else where it fails.
std::optional<std::string> short_exact_defect(const ModMap& i, const ModMap& p) {
    if (!i.target().same_shape(p.source())) return "maps are not composable";
    if (!(p * i).is_zero()) return "p i is not zero";
    for (std::size_t v = 0; v < i.source().num_vertices(); ++v) {
        const std::size_t x = i.source().dim(v), z = i.target().dim(v), y = p.target().dim(v);
        const std::string at = " at vertex " + std::to_string(v);
        if (rank(i.block(v)) != x) return "first map not injective" + at;
        if (rank(p.block(v)) != y) return "second map not surjective" + at;
        if (z != x + y) return "not exact in the middle" + at;
    }
    return std::nullopt;
}

void validate_conflation(const Conflation& c) {
    if (!commutes(c.i)) throw PreconditionError("malformed conflation: inflation square does not commute");
    if (!commutes(c.p)) throw PreconditionError("malformed conflation: deflation square does not commute");
    if (auto d = short_exact_defect(c.i.phi1(), c.p.phi1()))
        throw PreconditionError("malformed conflation, first component: " + *d);
    if (auto d = short_exact_defect(c.i.phi2(), c.p.phi2()))
        throw PreconditionError("malformed conflation, second component: " + *d);
}

Conflation make_conflation(MorphMap i, MorphMap p) {
    Conflation c{std::move(i), std::move(p)};
    validate_conflation(c);
    return c;
}

bool is_split_ses(const ModMap& i, const ModMap& p) {
    if (auto d = short_exact_defect(i, p)) throw PreconditionError("not a short exact sequence: " + *d);
    return is_split_mono(i);
}

bool is_conflation(StructureKind kind, const Conflation& c, const Subcat& sub) {
    validate_conflation(c);
    if (!is_object_of_S(c.start(), sub) || !is_object_of_S(c.middle(), sub) || !is_object_of_S(c.end(), sub))
        return false;
    if (kind == StructureKind::Canonical) return true;
    if (!rows_split(c)) return false;
    return kind == StructureKind::CW || cokernel_row_splits(c);
}

Conflation conflation_from_deflation(const MorphMap& p) {
    Submodule k = kernel(p.to_t2());
    MorphObj ko = MorphObj::from_t2(k.module);
    return make_conflation(MorphMap::from_t2(ko, p.source(), k.inclusion), p);
}

Conflation conflation_from_inflation(const MorphMap& i) {
    QuotientModule q = cokernel(i.to_t2());
    MorphObj co = MorphObj::from_t2(q.module);
    return make_conflation(i, MorphMap::from_t2(i.target(), co, q.projection));
}

std::vector<Conflation> enumerate_conflations(StructureKind kind, const MorphObj& x, const MorphObj& y,
                                              const Subcat& sub) {
    std::vector<Conflation> out;
    for (auto& r : classes_between(x, y, sub))
        if (r.member[static_cast<int>(kind)]) out.push_back(std::move(r.conflation));
    return out;
}

ConflationCatalog conflation_catalog(const Subcat& sub, const std::vector<MorphObj>& universe) {
    ConflationCatalog cat;
    cat.universe = universe;
    for (std::size_t s = 0; s < universe.size(); ++s)
        for (std::size_t e = 0; e < universe.size(); ++e)
            for (auto& r : classes_between(universe[s], universe[e], sub))
                cat.entries.push_back(
                    {s, e, std::move(r.coords), std::move(r.conflation), {r.member[0], r.member[1], r.member[2]}});
    return cat;
}

bool classify_projective(StructureKind kind, const MorphObj& x, const Subcat& sub) {
    return on_summands(x, sub, [&](const MorphObj& s) { return indecomposable_projective(kind, s, sub); });
}

bool classify_injective(StructureKind kind, const MorphObj& x, const Subcat& sub) {
    require_enough_injectives(sub);
    return on_summands(x, sub, [&](const MorphObj& s) { return indecomposable_injective(kind, s, sub); });
}

bool brute_force_projective(StructureKind kind, const MorphObj& x, const ConflationCatalog& cat) {
    if (x.is_zero()) return true;
    for (const auto& e : cat.entries) {
        // Split classes always admit lifts.
        if (!e.in(kind) || all_zero(e.coords)) continue;
        Budget::check("projectivity oracle");
        ModMap p = e.conflation.p.to_t2();
        for (const auto& g : hom_space(x.t2(), e.conflation.end().t2()))
            if (!factor_through_right(g, p)) return false;
    }
    return true;
}

bool brute_force_injective(StructureKind kind, const MorphObj& x, const ConflationCatalog& cat) {
    if (x.is_zero()) return true;
    for (const auto& e : cat.entries) {
        if (!e.in(kind) || all_zero(e.coords)) continue;
        Budget::check("injectivity oracle");
        ModMap i = e.conflation.i.to_t2();
        for (const auto& g : hom_space(e.conflation.start().t2(), x.t2()))
            if (!factor_through_left(g, i)) return false;
    }
    return true;
}

Conflation standard_projective_deflation(StructureKind kind, const MorphObj& x, const Subcat& sub) {
    if (!is_object_of_S(x, sub)) throw PreconditionError(x.describe() + " is not an object of S_X");
    const auto& base = x.base();
    const Module& a = x.a();
    const Module& b = x.b();
    const ModMap& f = x.f();
    QuotientModule cq = coker_module(x);
    switch (kind) {
        case StructureKind::Canonical: {
            // Horseshoe: (P_A = P_A) + (0 -> P_C) onto (A -> B).
            ProjectiveCover pa = projective_cover(a), pc = projective_cover(cq.module);
            auto l = factor_through_right(pc.projection, cq.projection);
            if (!l) throw PreconditionError("projective cover does not lift");
            DirectSum bot = direct_sum({pa.cover, pc.cover}, base);
            MorphObj mid(bot.injections[0]);
            ModMap phi2 = f * pa.projection * bot.projections[0] + *l * bot.projections[1];
            return conflation_from_deflation(MorphMap(mid, x, pa.projection, phi2));
        }
        case StructureKind::CW: {
            // (A = A) + (0 -> B) onto (A -> B), kernel (0 -> A).
            DirectSum bot = direct_sum({a, b}, base);
            MorphObj mid(bot.injections[0]);
            ModMap phi2 = f * bot.projections[0] + bot.projections[1];
            return conflation_from_deflation(MorphMap(mid, x, ModMap::identity(a), phi2));
        }
        case StructureKind::SCW: {
            // (Omega C -> P_C) + (0 -> B) + (A = A) onto (A -> B); the rows
            // and the cokernel row C + B -> C all split.
            Syzygy om = syzygy(cq.module);
            auto l = factor_through_right(om.cover.projection, cq.projection);
            if (!l) throw PreconditionError("projective cover does not lift");
            ModMap u = through_mono(f, *l * om.inclusion);
            DirectSum top = direct_sum({om.module, a}, base);
            DirectSum bot = direct_sum({om.cover.cover, b, a}, base);
            ModMap fm = matrix_map(top, bot, {{om.inclusion, ModMap()}, {ModMap(), ModMap()}, {ModMap(), ModMap::identity(a)}});
            MorphObj mid(fm);
            ModMap phi1 = u * top.projections[0] + top.projections[1];
            ModMap phi2 = *l * bot.projections[0] + bot.projections[1] + f * bot.projections[2];
            return conflation_from_deflation(MorphMap(mid, x, phi1, phi2));
        }
    }
    throw PreconditionError("unknown structure");
}

Conflation standard_injective_inflation(StructureKind kind, const MorphObj& x, const Subcat& sub) {
    if (!is_object_of_S(x, sub)) throw PreconditionError(x.describe() + " is not an object of S_X");
    require_enough_injectives(sub);
    const auto& base = x.base();
    const Module& a = x.a();
    const Module& b = x.b();
    const ModMap& f = x.f();
    QuotientModule cq = coker_module(x);
    switch (kind) {
        case StructureKind::Canonical: {
            // (A -> B) into (I_A = I_A) + (0 -> I_C).
            Extension ea = x_inflation(sub, a), ec = x_inflation(sub, cq.module);
            auto ext = factor_through_left(ea.inflation, f);
            if (!ext) throw PreconditionError("X-injective inflation does not extend along f");
            DirectSum bot = direct_sum({ea.middle(), ec.middle()}, base);
            MorphObj mid(bot.injections[0]);
            ModMap phi2 = bot.injections[0] * *ext + bot.injections[1] * ec.inflation * cq.projection;
            return conflation_from_inflation(MorphMap(x, mid, ea.inflation, phi2));
        }
        case StructureKind::CW: {
            // m: B -> I; middle (A + B --diag(m f, 1)--> I + B).
            Extension eb = x_inflation(sub, b);
            const ModMap& m = eb.inflation;
            DirectSum top = direct_sum({a, b}, base);
            DirectSum bot = direct_sum({eb.middle(), b}, base);
            ModMap fm = matrix_map(top, bot, {{m * f, ModMap()}, {ModMap(), ModMap::identity(b)}});
            MorphObj mid(fm);
            ModMap phi1 = top.injections[0] + top.injections[1] * f;
            ModMap phi2 = bot.injections[0] * m + bot.injections[1];
            return conflation_from_inflation(MorphMap(x, mid, phi1, phi2));
        }
        case StructureKind::SCW: {
            // Into (A -> I_A) + (0 -> C) + (B = B); the cokernel row C -> L_A + C splits.
            Extension ea = x_inflation(sub, a);
            auto ext = factor_through_left(ea.inflation, f);
            if (!ext) throw PreconditionError("X-injective inflation does not extend along f");
            DirectSum top = direct_sum({a, b}, base);
            DirectSum bot = direct_sum({ea.middle(), cq.module, b}, base);
            ModMap fm = matrix_map(top, bot,
                                   {{ea.inflation, ModMap()}, {ModMap(), ModMap()}, {ModMap(), ModMap::identity(b)}});
            MorphObj mid(fm);
            ModMap phi1 = top.injections[0] + top.injections[1] * f;
            ModMap phi2 = bot.injections[0] * *ext + bot.injections[1] * cq.projection + bot.injections[2];
            return conflation_from_inflation(MorphMap(x, mid, phi1, phi2));
        }
    }
    throw PreconditionError("unknown structure");
}

// By Schanuel's lemma the syzygy is unique up to projective summands, so the
// number of steps until a kernel becomes projective is the dimension.
DimensionResult projective_dimension(StructureKind kind, const MorphObj& x, const Subcat& sub, std::size_t cap) {
    MorphObj cur = x;
    for (std::size_t n = 0;; ++n) {
        if (classify_projective(kind, cur, sub)) return {n, false};
        if (n == cap) return {cap, true};
        cur = standard_projective_deflation(kind, cur, sub).start();
    }
}

DimensionResult injective_dimension(StructureKind kind, const MorphObj& x, const Subcat& sub, std::size_t cap) {
    MorphObj cur = x;
    for (std::size_t n = 0;; ++n) {
        if (classify_injective(kind, cur, sub)) return {n, false};
        if (n == cap) return {cap, true};
        cur = standard_injective_inflation(kind, cur, sub).end();
    }
}

namespace {

std::vector<ModMap> maps_to_try(const Module& m, const Module& n, bool& sampled) {
    HomSpace hs(m, n);
    if (count_of(hs.dim(), m.p()) <= kMapLimit) {
        std::vector<ModMap> out;
        for (const auto& c : all_vectors(hs.dim(), m.p(), false)) out.push_back(hs.combination(c));
        return out;
    }
    // Beyond the limit: the basis and all sums of two basis elements.
    sampled = true;
    std::vector<ModMap> out = hs.basis();
    for (std::size_t i = 0; i < hs.dim(); ++i)
        for (std::size_t j = i + 1; j < hs.dim(); ++j) out.push_back(hs[i] + hs[j]);
    return out;
}

void record(AxiomCheck& check, StructureKind kind, const Conflation& c, const Subcat& sub, const std::string& what) {
    ++check.instances;
    if (!check.pass) return;
    if (!is_conflation(kind, c, sub)) {
        check.pass = false;
        check.detail = what;
        check.witness = c;
    }
}

MorphObj zero_object(const AlgebraPtr& base) { return zero_to(Module::zero(base)); }

}  // namespace

AxiomReport check_axioms(StructureKind kind, const Subcat& sub, const ConflationCatalog& cat) {
    AxiomReport r{kind, {}, false};
    auto named = [](const char* n) {
        AxiomCheck c;
        c.axiom = n;
        return c;
    };
    AxiomCheck e0 = named("E0"), e0op = named("E0op"), e1 = named("E1"), e1op = named("E1op"), e2 = named("E2"),
               e2op = named("E2op");
    const auto& base = sub.algebra();
    MorphObj zero = zero_object(base);
    for (const auto& u : cat.universe) {
        Conflation id_defl = make_conflation(MorphMap::zero(zero, u), MorphMap::identity(u));
        record(e0, kind, id_defl, sub, "identity of " + u.describe() + " is not a deflation");
        Conflation id_infl = make_conflation(MorphMap::identity(u), MorphMap::zero(u, zero));
        record(e0op, kind, id_infl, sub, "identity of " + u.describe() + " is not an inflation");
    }
    for (const auto& e : cat.entries) {
        if (!e.in(kind)) continue;
        const Conflation& c = e.conflation;
        for (const auto& u : cat.universe) {
            Budget::check("axiom check");
            // E1: a deflation onto the middle term, followed by p.
            for (const auto& c1 : enumerate_conflations(kind, u, c.middle(), sub))
                record(e1, kind, conflation_from_deflation(c.p * c1.p), sub,
                       "composite of deflations is not a deflation");
            // E1op: i followed by an inflation out of the middle term.
            for (const auto& c2 : enumerate_conflations(kind, c.middle(), u, sub))
                record(e1op, kind, conflation_from_inflation(c2.i * c.i), sub,
                       "composite of inflations is not an inflation");
            // E2: push out along X -> U.
            for (const auto& phi : maps_to_try(c.start().t2(), u.t2(), r.sampled)) {
                Pushout po = pushout(c.i.to_t2(), phi);
                MorphObj obj = MorphObj::from_t2(po.object);
                ModMap defl = descend(po.quotient_map, c.p.to_t2() * po.sum.projections[0]);
                Conflation pushed = make_conflation(MorphMap::from_t2(u, obj, po.from_c), MorphMap::from_t2(obj, c.end(), defl));
                record(e2, kind, pushed, sub, "pushout along a morphism leaves the class");
            }
            // E2op: pull back along U -> Y.
            for (const auto& psi : maps_to_try(u.t2(), c.end().t2(), r.sampled)) {
                Pullback pb = pullback(c.p.to_t2(), psi);
                MorphObj obj = MorphObj::from_t2(pb.object);
                ModMap infl = through_mono(pb.inclusion, pb.sum.injections[0] * c.i.to_t2());
                Conflation pulled = make_conflation(MorphMap::from_t2(c.start(), obj, infl), MorphMap::from_t2(obj, u, pb.to_c));
                record(e2op, kind, pulled, sub, "pullback along a morphism leaves the class");
            }
        }
    }
    r.checks = {e0, e0op, e1, e1op, e2, e2op};
    return r;
}

}  // namespace monocat
