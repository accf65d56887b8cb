#include "monocat/ar_theory.hpp"

#include "monocat/errors.hpp"

namespace monocat {

namespace {

std::vector<Module> t2_modules(const std::vector<MorphObj>& xs) {
    std::vector<Module> out;
    for (const auto& x : xs) out.push_back(x.t2());
    return out;
}

// A basis of rad End(y); throws if End(y) is not local.
std::vector<ModMap> endo_radical(const Module& y) {
    HomSpace end(y, y);
    auto la = analyze_local(endomorphism_ops(end));
    if (la.verdict == LocalAnalysis::Verdict::Split) throw PreconditionError("end term is not endo-local");
    if (la.verdict == LocalAnalysis::Verdict::Unknown) throw InconclusiveError("could not decide locality");
    std::vector<ModMap> out;
    for (const auto& r : la.radical) out.push_back(end.combination(r));
    return out;
}

bool endo_local(const Module& m) { return !m.is_zero() && is_indecomposable(m); }

}  // namespace

std::vector<ModMap> radical_maps(const Module& u, const Module& y) {
    if (u.total_dim() != y.total_dim() || !u.same_shape(y)) return hom_space(u, y);
    auto iso = indecomposable_isomorphism(u, y);
    if (!iso) return hom_space(u, y);
    std::vector<ModMap> out;
    for (const auto& r : endo_radical(y)) out.push_back(r * *iso);
    return out;
}

bool is_right_almost_split(const ModMap& p, const std::vector<Module>& universe) {
    const Module& y = p.target();
    if (!endo_local(y)) throw PreconditionError("right almost split test needs an endo-local target");
    if (factor_through_right(ModMap::identity(y), p)) return false;
    for (const auto& u : universe)
        for (const auto& g : radical_maps(u, y))
            if (!factor_through_right(g, p)) return false;
    return true;
}

bool is_left_almost_split(const ModMap& i, const std::vector<Module>& universe) {
    const Module& x = i.source();
    if (!endo_local(x)) throw PreconditionError("left almost split test needs an endo-local source");
    if (factor_through_left(ModMap::identity(x), i)) return false;
    for (const auto& u : universe)
        for (const auto& g : radical_maps(x, u))
            if (!factor_through_left(g, i)) return false;
    return true;
}

bool is_right_almost_split(const MorphMap& p, const std::vector<MorphObj>& universe) {
    return is_right_almost_split(p.to_t2(), t2_modules(universe));
}

bool is_left_almost_split(const MorphMap& i, const std::vector<MorphObj>& universe) {
    return is_left_almost_split(i.to_t2(), t2_modules(universe));
}

bool is_almost_split(const ArCandidate& c, const std::vector<MorphObj>& universe) {
    const auto& conf = c.conflation;
    if (!endo_local(conf.start().t2()) || !endo_local(conf.end().t2())) return false;
    const auto mods = t2_modules(universe);
    return is_right_almost_split(conf.p.to_t2(), mods) && is_left_almost_split(conf.i.to_t2(), mods);
}

ArSearch find_ar_conflation_ending_at(const MorphObj& y, StructureKind kind, const Subcat& sub,
                                      const std::vector<MorphObj>& universe) {
    if (!is_indecomposable_morph(y)) throw PreconditionError("almost split search needs an indecomposable end term");
    if (classify_projective(kind, y, sub))
        throw PreconditionError(y.describe() + " is projective in the " + to_string(kind) + " structure");
    ArSearch s;
    bool have = false;
    const auto mods = t2_modules(universe);
    for (const auto& x : universe) {
        for (const auto& c : enumerate_conflations(kind, x, y, sub)) {
            Budget::check("almost split search");
            ++s.candidates;
            if (is_split_ses(c.i.to_t2(), c.p.to_t2())) continue;
            if (!is_left_almost_split(c.i.to_t2(), mods) || !is_right_almost_split(c.p.to_t2(), mods)) continue;
            ++s.passing;
            if (!have) {
                s.found = {c, kind};
                have = true;
            } else if (!morph_isomorphic(c.middle(), s.found.conflation.middle()) ||
                       !morph_isomorphic(c.start(), s.found.conflation.start())) {
                throw InconclusiveError("two almost split conflations ending at " + y.describe() +
                                        " have different terms");
            }
        }
    }
    if (!have) throw InconclusiveError("inconclusive-at-bound: no almost split conflation ends at " + y.describe());
    return s;
}

std::optional<Extension> find_ar_sequence(const Module& m, const std::vector<Module>& universe,
                                          const std::function<bool(const Module&)>& middle_ok) {
    if (!endo_local(m)) throw PreconditionError("almost split search needs an indecomposable end term");
    for (const auto& x : universe) {
        ExtSpace ext(m, x);
        for (const auto& c : all_vectors(ext.dim(), m.p(), false)) {
            Budget::check("almost split search");
            auto e = ext.extension(c);
            if (middle_ok && !middle_ok(e.middle())) continue;
            if (is_left_almost_split(e.inflation, universe) && is_right_almost_split(e.deflation, universe))
                return e;
        }
    }
    return std::nullopt;
}

std::optional<Extension> find_module_ar_sequence(const Module& m, const Subcat& sub) {
    auto in_x = [&sub](const Module& e) { return sub.is_whole_category() || sub.contains(e); };
    return find_ar_sequence(m, sub.generators(), in_x);
}

Module sigma_x(const Module& m, const Subcat& sub) {
    std::vector<Module> parts;
    if (!m.is_zero())
        for (const auto& s : decompose(m).summands) {
            if (sub.is_x_projective(s.module)) continue;
            auto e = find_module_ar_sequence(s.module, sub);
            if (!e) throw InconclusiveError("no almost split sequence in X ends at " + s.module.describe());
            parts.push_back(e->inflation.source());
        }
    return direct_sum(parts, m.algebra()).sum;
}

Module strip_summands(const Module& m, const std::function<bool(const Module&)>& drop) {
    std::vector<Module> keep;
    if (!m.is_zero())
        for (const auto& s : decompose(m).summands)
            if (!drop(s.module)) keep.push_back(s.module);
    return direct_sum(keep, m.algebra()).sum;
}

MorphObj strip_summands(const MorphObj& x, const std::function<bool(const MorphObj&)>& drop) {
    std::vector<Module> keep;
    for (const auto& s : decompose_morph(x))
        if (!drop(s.object))
            for (std::size_t k = 0; k < s.multiplicity; ++k) keep.push_back(s.object.t2());
    return MorphObj::from_t2(direct_sum(keep, x.t2().algebra()).sum);
}

Module dtr(const Module& m) {
    const auto& alg = m.algebra();
    const auto op = alg->opposite();
    const Scalar p = m.p();
    // Minimal presentation P1 -d-> P0 -> M -> 0.
    const auto c0 = projective_cover(m);
    const auto omega = kernel(c0.projection);
    if (omega.module.is_zero()) return Module::zero(alg);
    const auto c1 = projective_cover(omega.module);
    const ModMap d = omega.inclusion * c1.projection;

    // Summand k of a cover starts at these offsets within each vertex space.
    auto starts = [&](const std::vector<std::size_t>& tops) {
        std::vector<std::vector<std::size_t>> off(tops.size(), std::vector<std::size_t>(alg->num_vertices(), 0));
        std::vector<std::size_t> run(alg->num_vertices(), 0);
        for (std::size_t k = 0; k < tops.size(); ++k)
            for (std::size_t w = 0; w < alg->num_vertices(); ++w) {
                off[k][w] = run[w];
                run[w] += alg->basis_between(tops[k], w).size();
            }
        return off;
    };
    const auto off0 = starts(c0.tops), off1 = starts(c1.tops);
    auto position = [&](std::size_t v, std::size_t global) {
        const auto& b = alg->basis_between(v, v);
        for (std::size_t k = 0; k < b.size(); ++k)
            if (b[k] == global) return k;
        throw PreconditionError("idempotent missing from its corner");
    };

    // Hom(d, A): Hom(P0, A) -> Hom(P1, A), i.e. sum of e_w A^op -> sum of e_v A^op.
    std::vector<Module> src, dst;
    for (auto w : c0.tops) src.push_back(projective_module(op, w));
    for (auto v : c1.tops) dst.push_back(projective_module(op, v));
    const auto s_sum = direct_sum(src, op), d_sum = direct_sum(dst, op);
    std::vector<std::vector<ModMap>> grid(dst.size(), std::vector<ModMap>(src.size()));
    for (std::size_t i = 0; i < c1.tops.size(); ++i) {
        const std::size_t v = c1.tops[i];
        const std::size_t gen = off1[i][v] + position(v, alg->idempotent(v));
        for (std::size_t j = 0; j < c0.tops.size(); ++j) {
            const std::size_t w = c0.tops[j];
            // x in e_w A e_v: the image of e_v under the component P(v) -> P(w).
            std::vector<Scalar> x(alg->dimension(), 0);
            const auto& bw = alg->basis_between(w, v);
            for (std::size_t k = 0; k < bw.size(); ++k) x[bw[k]] = d.block(v)(off0[j][v] + k, gen);
            // e_w A^op -> e_v A^op sending e_w to x, then multiplying on the right.
            std::vector<Mat> blocks;
            for (std::size_t u = 0; u < op->num_vertices(); ++u) {
                const auto& from = op->basis_between(w, u);
                const auto& to = op->basis_between(v, u);
                Mat b(to.size(), from.size(), p);
                for (std::size_t c = 0; c < from.size(); ++c) {
                    std::vector<Scalar> e(op->dimension(), 0);
                    e[from[c]] = 1;
                    auto y = op->multiply(x, e);
                    for (std::size_t r = 0; r < to.size(); ++r) b(r, c) = y[to[r]];
                }
                blocks.push_back(std::move(b));
            }
            grid[i][j] = ModMap(src[j], dst[i], std::move(blocks));
        }
    }
    const ModMap dt = matrix_map(s_sum, d_sum, grid);
    return dual_module(cokernel(dt).module);
}

CorollaryReport check_e1_e2_corollary(const MorphObj& x, const Subcat& sub, const std::vector<MorphObj>& universe) {
    CorollaryReport r;
    r.translate = find_ar_conflation_ending_at(x, StructureKind::Canonical, sub, universe).found.conflation.start();
    r.sigma_x2 = sigma_x(x.b(), sub);
    r.sigma_cok = sigma_x(coker_module(x).module, sub);
    auto inj = [&sub](const Module& m) { return sub.is_x_injective(m); };
    auto costable_iso = [&](const Module& a, const Module& b) {
        return is_isomorphic(strip_summands(a, inj), strip_summands(b, inj));
    };
    r.e1 = costable_iso(r.translate.a(), r.sigma_x2);
    r.e2 = costable_iso(r.translate.b(), r.sigma_cok);
    if (!r.e1) r.detail = "e1 of the translate " + r.translate.describe() + " differs from sigma X_2";
    if (!r.e2) r.detail += std::string(r.detail.empty() ? "" : "; ") + "e2 of the translate differs from sigma Cok f";
    return r;
}

TranslateAgreement check_translate_agreement(const MorphObj& y, const Subcat& sub,
                                             const std::vector<MorphObj>& universe) {
    if (classify_projective(StructureKind::SCW, y, sub))
        throw PreconditionError(y.describe() + " is SCW-projective");
    TranslateAgreement t;
    for (auto kind : kAllKinds) {
        auto s = find_ar_conflation_ending_at(y, kind, sub, universe).found.conflation.start();
        t.starts.push_back(
            strip_summands(s, [&](const MorphObj& o) { return classify_injective(kind, o, sub); }));
    }
    t.pass = morph_isomorphic(t.starts[0], t.starts[1]) && morph_isomorphic(t.starts[0], t.starts[2]);
    if (!t.pass) t.detail = "translates of " + y.describe() + " differ across structures";
    return t;
}

}  // namespace monocat
