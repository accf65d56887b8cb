#include "monocat/functor_cat.hpp"

#include <algorithm>

#include "monocat/errors.hpp"

namespace monocat {

StableAuslander::StableAuslander(const Subcat& sub) : sub_(sub) {
    for (std::size_t k = 0; k < sub.size(); ++k)
        if (!is_projective(sub.generators()[k])) {
            objects_.push_back(sub.generators()[k]);
            gen_index_.push_back(k);
        }
    const std::size_t r = objects_.size();
    const Scalar p = sub.algebra()->p();
    lifts_.assign(r, std::vector<std::vector<ModMap>>(r));
    change_.assign(r, std::vector<Mat>(r));
    quotients_.reserve(r);
    for (std::size_t s = 0; s < r; ++s) {
        std::vector<HomQuotient> row;
        for (std::size_t t = 0; t < r; ++t) row.push_back(stable_hom_space(objects_[t], objects_[s]));
        quotients_.push_back(std::move(row));
    }
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = 0; t < r; ++t) {
            const auto& q = quotients_[s][t];
            const std::size_t d = q.dim();
            if (s != t) {
                lifts_[s][t] = q.representatives();
                change_[s][t] = Mat::identity(d, p);
                continue;
            }
            // The identity class goes first so that it can serve as e_s.
            const auto id = ModMap::identity(objects_[s]);
            RowSpace span(d, p);
            std::vector<std::vector<Scalar>> cols{q.coordinates(id)};
            span.insert(cols[0]);
            lifts_[s][s].push_back(id);
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<Scalar> e(d, 0);
                e[k] = 1;
                if (!span.insert(e)) continue;
                cols.push_back(e);
                lifts_[s][s].push_back(q.representatives()[k]);
            }
            Mat basis(d, d, p);
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t k = 0; k < d; ++k) basis(k, c) = cols[c][k];
            change_[s][s] = *inverse(basis);
        }

    HomTable table;
    table.p = p;
    for (std::size_t s = 0; s < r; ++s) {
        table.objects.push_back("X" + std::to_string(gen_index_[s]));
        table.identity.push_back(0);
        std::vector<std::size_t> dims;
        for (std::size_t t = 0; t < r; ++t) dims.push_back(lifts_[s][t].size());
        table.dims.push_back(std::move(dims));
    }
    table.compose = [this](std::size_t s, std::size_t m, std::size_t t, std::size_t i, std::size_t j) {
        return coordinates(s, t, lifts_[s][m][i] * lifts_[m][t][j]);
    };
    gamma_ = Algebra::from_hom_table(table, "Gamma(" + sub.algebra()->name() + ")");
}

std::vector<Scalar> StableAuslander::coordinates(std::size_t s, std::size_t t, const ModMap& g) const {
    const auto q = quotients_[s][t].coordinates(g);
    const Mat c = change_[s][t] * Mat::column(q, gamma_ ? gamma_->p() : sub_.algebra()->p());
    return c.col_vector(0);
}

ModMap StableAuslander::lift_element(std::size_t s, std::size_t t, const std::vector<Scalar>& global) const {
    const auto& idx = gamma_->basis_between(s, t);
    ModMap out = ModMap::zero(objects_[t], objects_[s]);
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (global[idx[k]]) out = out + lifts_[s][t][k].scaled(global[idx[k]]);
    for (std::size_t g = 0; g < global.size(); ++g)
        if (global[g] && std::find(idx.begin(), idx.end(), g) == idx.end())
            throw PreconditionError("element does not lie in the requested block");
    return out;
}

std::vector<ModMap> StableAuslander::null_maps(std::size_t s, std::size_t t) const {
    const auto cover = projective_cover(objects_[s]);
    std::vector<ModMap> out;
    for (const auto& h : hom_space(objects_[t], cover.cover)) out.push_back(cover.projection * h);
    return out;
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// A functor coker((-, B) -> (-, C)) with the quotient at each vertex.
struct FunctorData {
    ModMap q;
    std::vector<HomQuotient> spaces;
    Module module;
};

std::vector<Scalar> dense_element(const Algebra& a, std::size_t arrow) {
    std::vector<Scalar> v(a.dimension(), 0);
    for (const auto& [k, c] : a.arrow_element(arrow)) v[k] = c;
    return v;
}

FunctorData functor_data(const ModMap& q, const StableAuslander& g) {
    if (!q.is_surjective()) throw PreconditionError("cokernel functor needs an epimorphism");
    FunctorData d{q, {}, {}};
    const auto& gamma = g.gamma();
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::vector<ModMap> gens;
        for (const auto& h : hom_space(g.object(v), q.source())) gens.push_back(q * h);
        d.spaces.emplace_back(HomSpace(g.object(v), q.target()), gens);
        dims.push_back(d.spaces.back().dim());
    }
    std::vector<Mat> action;
    for (std::size_t a = 0; a < gamma->num_arrows(); ++a) {
        const std::size_t s = gamma->arrow(a).source, r = gamma->arrow(a).target;
        const ModMap u = g.lift_element(s, r, dense_element(*gamma, a));
        Mat m(dims[r], dims[s], gamma->p());
        for (std::size_t j = 0; j < dims[s]; ++j) {
            auto col = d.spaces[r].coordinates(d.spaces[s].representatives()[j] * u);
            for (std::size_t i = 0; i < dims[r]; ++i) m(i, j) = col[i];
        }
        action.push_back(std::move(m));
    }
    d.module = Module(gamma, dims, std::move(action));
    return d;
}

ModMap functor_map(const FunctorData& a, const FunctorData& b, const ModMap& c) {
    const Scalar p = a.module.algebra()->p();
    std::vector<Mat> blocks;
    for (std::size_t v = 0; v < a.spaces.size(); ++v) {
        Mat m(b.spaces[v].dim(), a.spaces[v].dim(), p);
        for (std::size_t j = 0; j < a.spaces[v].dim(); ++j) {
            auto col = b.spaces[v].coordinates(c * a.spaces[v].representatives()[j]);
            for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
        }
        blocks.push_back(std::move(m));
    }
    return ModMap(a.module, b.module, std::move(blocks));
}

FunctorData psi_data(const MorphObj& x, const StableAuslander& g) {
    return functor_data(coker_module(x).projection, g);
}

ModMap psi_map(const FunctorData& a, const FunctorData& b, const MorphMap& m) {
    const ModMap c = descend(a.q, b.q * m.phi2());
    return functor_map(a, b, c);
}

std::vector<Scalar> flat_of(const MorphMap& m) {
    auto v = m.phi1().flat();
    auto w = m.phi2().flat();
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

// Kernel objects of Psi: (X = X) and (0 -> X) for the generators.
std::vector<MorphObj> psi_kernel_objects(const Subcat& sub) {
    std::vector<MorphObj> out;
    for (const auto& x : sub.generators()) {
        out.push_back(identity_obj(x));
        out.push_back(zero_to(x));
    }
    return out;
}

std::size_t span_dim(const std::vector<std::vector<Scalar>>& vs, std::size_t width, Scalar p) {
    RowSpace span(width, p);
    for (const auto& v : vs) span.insert(v);
    return span.dimension();
}

// Maps x -> y factoring through some object of the list.
std::vector<MorphMap> maps_through(const MorphObj& x, const MorphObj& y, const std::vector<MorphObj>& via) {
    std::vector<MorphMap> out;
    for (const auto& t : via) {
        auto in = morph_hom_space(x, t);
        if (in.empty()) continue;
        auto outs = morph_hom_space(t, y);
        for (const auto& b : outs)
            for (const auto& a : in) out.push_back(b * a);
    }
    return out;
}

std::string name_of(const MorphObj& x) { return x.describe(); }

}  // namespace

Module cokernel_functor(const ModMap& q, const StableAuslander& g) { return functor_data(q, g).module; }

ModMap cokernel_functor_map(const ModMap& q, const ModMap& q2, const ModMap& c, const StableAuslander& g) {
    return functor_map(functor_data(q, g), functor_data(q2, g), c);
}

Module psi_object(const MorphObj& x, const StableAuslander& g) { return psi_data(x, g).module; }

ModMap psi_morphism(const MorphMap& m, const StableAuslander& g) {
    return psi_map(psi_data(m.source(), g), psi_data(m.target(), g), m);
}

bool psi_action_well_defined(const MorphObj& x, const StableAuslander& g) {
    const auto d = psi_data(x, g);
    for (std::size_t s = 0; s < g.num_vertices(); ++s)
        for (std::size_t r = 0; r < g.num_vertices(); ++r)
            for (const auto& n : g.null_maps(s, r))
                for (const auto& rep : d.spaces[s].representatives())
                    if (!d.spaces[r].in_subspace(rep * n)) return false;
    return true;
}

Module ext1_injective_functor(const Module& x, const StableAuslander& g) {
    auto e = x_injective_inflation(g.subcat(), x);
    if (!e) throw PreconditionError("no X-injective inflation for " + x.describe());
    return cokernel_functor(e->deflation, g);
}

PsiReport verify_psi_properties(const StableAuslander& g, const ConflationCatalog& cat, std::size_t gamma_bound) {
    PsiReport rep;
    rep.exactness.name = "exact on SCW conflations";
    rep.canonical_failure.name = "not exact on some Canonical conflation";
    rep.density.name = "dense";
    rep.fullness.name = "full";
    rep.objectivity.name = "objective";
    const auto& sub = g.subcat();
    const Scalar p = sub.algebra()->p();

    bool canonical_candidates = false;
    for (const auto& e : cat.entries) {
        const bool scw = e.in(StructureKind::SCW);
        if (!scw && !e.in(StructureKind::Canonical)) continue;
        const auto a = psi_data(e.conflation.start(), g), b = psi_data(e.conflation.middle(), g),
                   c = psi_data(e.conflation.end(), g);
        const auto defect = short_exact_defect(psi_map(a, b, e.conflation.i), psi_map(b, c, e.conflation.p));
        if (scw) {
            ++rep.exactness.instances;
            if (defect && rep.exactness.pass) {
                rep.exactness.pass = false;
                rep.exactness.detail = "image of SCW conflation with middle " + name_of(e.conflation.middle()) +
                                       " is not exact: " + *defect;
            }
        } else {
            canonical_candidates = true;
            ++rep.canonical_failure.instances;
            if (defect && rep.canonical_failure.detail.empty())
                rep.canonical_failure.detail = "middle " + name_of(e.conflation.middle()) + ": " + *defect;
        }
    }
    if (!canonical_candidates)
        rep.canonical_failure.detail = "vacuous: every Canonical conflation in the catalog is SCW";
    else if (rep.canonical_failure.detail.empty()) {
        rep.canonical_failure.pass = false;
        rep.canonical_failure.detail = "all Canonical conflations map to exact sequences";
    }

    std::vector<FunctorData> psis;
    for (const auto& x : cat.universe) psis.push_back(psi_data(x, g));

    std::vector<Module> gamma_ind;
    if (g.num_vertices() > 0) gamma_ind = enumerate_indecomposables(g.gamma(), gamma_bound);
    rep.density.instances = gamma_ind.size();
    for (const auto& m : gamma_ind) {
        bool hit = false;
        for (const auto& d : psis)
            if (d.module.total_dim() == m.total_dim() && is_isomorphic(d.module, m)) {
                hit = true;
                break;
            }
        if (hit)
            ++rep.density_hits;
        else if (rep.density.pass) {
            rep.density.pass = false;
            rep.density.detail = "no preimage in the universe for " + m.describe();
        }
    }
    if (rep.density.pass)
        rep.density.detail = std::to_string(rep.density_hits) + " of " + std::to_string(gamma_ind.size()) +
                             " indecomposable Gamma-modules reached";

    const auto kernel_objs = psi_kernel_objects(sub);
    for (std::size_t i = 0; i < cat.universe.size(); ++i)
        for (std::size_t j = 0; j < cat.universe.size(); ++j) {
            const auto& x = cat.universe[i];
            const auto& y = cat.universe[j];
            const auto homs = morph_hom_space(x, y);
            const HomSpace target(psis[i].module, psis[j].module);
            // Coordinates of Psi on the basis of Hom(x, y), one column per basis map.
            Mat images(target.dim(), homs.size(), p);
            for (std::size_t k = 0; k < homs.size(); ++k) {
                auto c = target.coordinates(psi_map(psis[i], psis[j], homs[k]));
                for (std::size_t r = 0; r < c->size(); ++r) images(r, k) = (*c)[r];
            }
            const std::size_t rk = rank(images);
            ++rep.fullness.instances;
            if (rk != target.dim() && rep.fullness.pass) {
                rep.fullness.pass = false;
                rep.fullness.detail = "Hom(" + name_of(x) + ", " + name_of(y) + ") misses " +
                                      std::to_string(target.dim() - rk) + " dimensions";
            }
            // Kernel of Psi versus maps through the kernel objects.
            ++rep.objectivity.instances;
            const std::size_t ker = homs.size() - rk;
            std::vector<std::vector<Scalar>> through;
            bool inside = true;
            for (const auto& m : maps_through(x, y, kernel_objs)) {
                through.push_back(flat_of(m));
                if (!psi_map(psis[i], psis[j], m).is_zero()) inside = false;
            }
            const std::size_t width = homs.empty() ? 0 : flat_of(homs[0]).size();
            const std::size_t tdim = homs.empty() ? 0 : span_dim(through, width, p);
            if ((!inside || tdim != ker) && rep.objectivity.pass) {
                rep.objectivity.pass = false;
                rep.objectivity.detail = "Hom(" + name_of(x) + ", " + name_of(y) + "): kernel of Psi has dim " +
                                         std::to_string(ker) + ", maps through kernel objects span " +
                                         std::to_string(tdim) + (inside ? "" : " and are not all killed");
            }
        }
    return rep;
}

StableEquivalenceReport stable_equivalence_check(const StableAuslander& g, const std::vector<MorphObj>& universe,
                                                 std::size_t gamma_bound) {
    StableEquivalenceReport rep;
    rep.bijection.name = "non-projective indecomposables correspond";
    rep.hom_dimensions.name = "stable Hom dimensions agree";
    const auto& sub = g.subcat();
    const Scalar p = sub.algebra()->p();

    std::vector<MorphObj> stable, projs;
    for (const auto& x : universe) (classify_projective(StructureKind::SCW, x, sub) ? projs : stable).push_back(x);
    rep.stable_objects = stable.size();
    std::vector<Module> images;
    for (const auto& x : stable) {
        auto m = psi_object(x, g);
        ++rep.bijection.instances;
        if (rep.bijection.pass && (m.is_zero() || !is_indecomposable(m) || is_projective(m))) {
            rep.bijection.pass = false;
            rep.bijection.detail = "Psi of " + name_of(x) + " is not an indecomposable non-projective";
        }
        if (rep.bijection.pass && find_isomorphic(images, m) != npos) {
            rep.bijection.pass = false;
            rep.bijection.detail = "Psi identifies " + name_of(x) + " with an earlier object";
        }
        images.push_back(m);
    }
    if (g.num_vertices() > 0)
        for (const auto& m : enumerate_indecomposables(g.gamma(), gamma_bound)) {
            if (is_projective(m)) continue;
            if (rep.bijection.pass && find_isomorphic(images, m) == npos) {
                rep.bijection.pass = false;
                rep.bijection.detail = "non-projective " + m.describe() + " has no preimage";
            }
        }

    const std::size_t n = stable.size();
    rep.s_table.assign(n, std::vector<std::size_t>(n, 0));
    rep.gamma_table.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto homs = morph_hom_space(stable[i], stable[j]);
            std::size_t through = 0;
            if (!homs.empty()) {
                std::vector<std::vector<Scalar>> flats;
                for (const auto& m : maps_through(stable[i], stable[j], projs)) flats.push_back(flat_of(m));
                through = span_dim(flats, flat_of(homs[0]).size(), p);
            }
            rep.s_table[i][j] = homs.size() - through;
            rep.gamma_table[i][j] = stable_hom_space(images[i], images[j]).dim();
            ++rep.hom_dimensions.instances;
            if (rep.s_table[i][j] != rep.gamma_table[i][j] && rep.hom_dimensions.pass) {
                rep.hom_dimensions.pass = false;
                rep.hom_dimensions.detail = "between " + name_of(stable[i]) + " and " + name_of(stable[j]) + ": " +
                                            std::to_string(rep.s_table[i][j]) + " vs " +
                                            std::to_string(rep.gamma_table[i][j]);
            }
        }
    return rep;
}

Preimage psi_preimage(const Module& m, const StableAuslander& g, const std::vector<MorphObj>& universe) {
    const auto& alg = g.subcat().algebra();
    std::vector<Module> parts;
    if (!m.is_zero()) {
        std::vector<Module> psis;
        for (const auto& x : universe) psis.push_back(psi_object(x, g));
        for (const auto& s : decompose(m).summands) {
            std::size_t k = 0;
            while (k < universe.size() && !(psis[k].total_dim() == s.module.total_dim() &&
                                            is_isomorphic(psis[k], s.module)))
                ++k;
            if (k == universe.size())
                throw InconclusiveError("no preimage in the enumerated universe for " + s.module.describe());
            parts.push_back(universe[k].t2());
        }
    }
    const MorphObj obj = parts.empty() ? zero_to(Module::zero(alg)) : MorphObj::from_t2(direct_sum(parts).sum);
    const auto psi = psi_object(obj, g);
    auto iso = isomorphism(psi, m);
    if (!iso) throw InconclusiveError("assembled preimage is not isomorphic to " + m.describe());
    return {obj, *iso};
}

std::vector<Conflation> horseshoe_lift(const std::vector<GammaExtension>& pieces, const StableAuslander& g,
                                       const std::vector<MorphObj>& universe) {
    std::vector<std::pair<Module, Preimage>> chosen;
    auto preimage = [&](const Module& m) -> const Preimage& {
        for (const auto& [k, v] : chosen)
            if (k == m) return v;
        chosen.emplace_back(m, psi_preimage(m, g, universe));
        return chosen.back().second;
    };
    std::vector<Conflation> out;
    for (const auto& piece : pieces) {
        if (auto d = short_exact_defect(piece.i, piece.p)) throw PreconditionError("not a short exact sequence: " + *d);
        const Preimage a = preimage(piece.i.source());
        const Preimage y = preimage(piece.p.target());
        const auto da = psi_data(a.object, g), dy = psi_data(y.object, g);
        const ExtSpace ext(dy.module, da.module);
        const auto target = ext.class_of(piece.i * a.iso, y.iso.inverse().value() * piece.p);
        bool found = false;
        for (const auto& c : enumerate_conflations(StructureKind::SCW, a.object, y.object, g.subcat())) {
            const auto dz = psi_data(c.middle(), g);
            if (ext.class_of(psi_map(da, dz, c.i), psi_map(dz, dy, c.p)) == target) {
                out.push_back(c);
                found = true;
                break;
            }
        }
        // Unreachable by the horseshoe construction, which lifts every class between fixed preimages.
        if (!found) throw InconclusiveError("no SCW conflation lifts the extension");
    }
    return out;
}

}  // namespace monocat
