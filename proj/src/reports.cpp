#include "monocat/reports.hpp"

#include <algorithm>
#include <fstream>

#include "monocat/ar_theory.hpp"
#include "monocat/errors.hpp"
#include "monocat/functor_cat.hpp"

namespace monocat {

const std::vector<std::string> kSuites{"axioms", "classify", "psi", "counting", "hereditary", "frobenius", "ar"};

namespace {

class Claims {
public:
    Json& mark(const std::string& name, const std::string& status, const std::string& detail) {
        Json c{{"name", name}, {"status", status}};
        if (!detail.empty()) c["detail"] = detail;
        list_.push_back(std::move(c));
        return list_.back();
    }
    Json& add(const std::string& name, bool pass, const std::string& detail) {
        return mark(name, pass ? "pass" : "fail", detail);
    }
    // Runs one check; an inconclusive search becomes an inconclusive claim.
    template <class F>
    void check(const std::string& name, F&& f) {
        try {
            f();
        } catch (const InconclusiveError& e) {
            mark(name, "inconclusive", e.what());
        }
    }
    ExitStatus status() const {
        bool inconclusive = false;
        for (const auto& c : list_) {
            if (c["status"] == "fail") return ExitStatus::Fail;
            if (c["status"] == "inconclusive") inconclusive = true;
        }
        return inconclusive ? ExitStatus::Inconclusive : ExitStatus::Pass;
    }
    Json summary() const {
        std::size_t pass = 0, fail = 0, inc = 0, skip = 0;
        for (const auto& c : list_) {
            const auto s = c["status"].get<std::string>();
            pass += s == "pass";
            fail += s == "fail";
            inc += s == "inconclusive";
            skip += s == "skipped";
        }
        return Json{{"claims", list_.size()}, {"passed", pass}, {"failed", fail}, {"inconclusive", inc},
                    {"skipped", skip}};
    }
    const Json& list() const { return list_; }

private:
    Json list_ = Json::array();
};

const char* status_name(ExitStatus s) {
    switch (s) {
        case ExitStatus::Pass: return "pass";
        case ExitStatus::Fail: return "fail";
        case ExitStatus::Inconclusive: return "inconclusive";
        case ExitStatus::InputError: return "input-error";
    }
    return "?";
}

Json config_json(const RunConfig& c) {
    Json kinds = Json::array();
    for (auto k : c.kinds) kinds.push_back(to_string(k));
    return Json{{"algebra", c.algebra}, {"subcat", c.subcat}, {"p", c.p}, {"bound", c.bound}, {"kinds", kinds}};
}

// Comma-separated files; each holds one module, a list of modules or {"modules": [...]}.
std::vector<Module> read_generators(const std::string& spec, const AlgebraPtr& alg) {
    std::vector<Module> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const auto comma = std::min(spec.find(',', start), spec.size());
        const std::string path = spec.substr(start, comma - start);
        start = comma + 1;
        if (path.empty()) continue;
        std::ifstream in(path);
        if (!in) throw InputError("cannot open subcategory file '" + path + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw InputError("malformed subcategory file '" + path + "': " + e.what());
        }
        if (j.is_object() && j.contains("modules")) j = j.at("modules");
        if (j.is_object()) j = Json::array({j});
        if (!j.is_array()) throw InputError("subcategory file '" + path + "' must hold modules");
        for (const auto& m : j) out.push_back(module_from_json(m, alg));
    }
    if (out.empty()) throw InputError("--subcat lists no modules");
    return out;
}

std::string obj_name(std::size_t k, const MorphObj& x) { return "#" + std::to_string(k) + " " + x.describe(); }

bool wants(const RunConfig& c, StructureKind k) {
    for (auto x : c.kinds)
        if (x == k) return true;
    return false;
}

Json objects_json(const Context& ctx) {
    Json out = Json::array();
    for (std::size_t k = 0; k < ctx.universe.size(); ++k)
        out.push_back(Json{{"index", k},
                           {"describe", ctx.universe[k].describe()},
                           {"object", morph_to_json(ctx.universe[k], ctx.config.algebra)}});
    return out;
}

Report finish(const std::string& command, const std::string& suite, const Context& ctx, const Claims& claims,
              Json extra = Json::object(), bool with_objects = true) {
    Report r;
    r.status = claims.status();
    r.json = Json{{"command", command}, {"suite", suite}, {"config", config_json(ctx.config)},
                  {"status", status_name(r.status)}, {"summary", claims.summary()}};
    for (auto it = extra.begin(); it != extra.end(); ++it) r.json[it.key()] = it.value();
    r.json["claims"] = claims.list();
    if (with_objects) r.json["objects"] = objects_json(ctx);
    return r;
}

Json replay_object(const char* check, const Context& ctx, const MorphObj& x, std::optional<StructureKind> kind,
                   const char* side = nullptr) {
    Json j{{"check", check}};
    if (kind) j["kind"] = to_string(*kind);
    if (side) j["side"] = side;
    j["object"] = morph_to_json(x, ctx.config.algebra);
    return j;
}

// ---- suites ----

Report suite_axioms(const Context& ctx) {
    Claims claims;
    const auto cat = conflation_catalog(ctx.sub, ctx.universe);
    Json sampled = Json::object();
    for (auto kind : ctx.config.kinds) {
        const auto rep = check_axioms(kind, ctx.sub, cat);
        sampled[to_string(kind)] = rep.sampled;
        for (const auto& c : rep.checks) {
            auto& claim = claims.add(to_string(kind) + "/" + c.axiom, c.pass, c.detail);
            claim["instances"] = c.instances;
            if (c.witness)
                claim["replay"] = Json{{"check", "conflation"},
                                       {"kind", to_string(kind)},
                                       {"conflation", conflation_to_json(*c.witness, ctx.config.algebra)}};
        }
    }
    return finish("verify", "axioms", ctx, claims, Json{{"catalog_entries", cat.entries.size()}, {"sampled", sampled}});
}

Report suite_classify(const Context& ctx) {
    Claims claims;
    const auto cat = conflation_catalog(ctx.sub, ctx.universe);
    for (auto kind : ctx.config.kinds)
        for (std::size_t k = 0; k < ctx.universe.size(); ++k) {
            const auto& x = ctx.universe[k];
            const std::string base = to_string(kind) + "/" + obj_name(k, x);
            claims.check(base + "/projective", [&] {
                const bool a = classify_projective(kind, x, ctx.sub), b = brute_force_projective(kind, x, cat);
                auto& c = claims.add(base + "/projective", a == b,
                                     a == b ? "" : "closed form and lifting oracle disagree");
                c["verdict"] = a;
                if (a != b) c["replay"] = replay_object("classify", ctx, x, kind, "projective");
            });
            claims.check(base + "/injective", [&] {
                if (!ctx.sub.enough_injectives().pass) {
                    claims.mark(base + "/injective", "skipped", "enough injectives not verified for X");
                    return;
                }
                const bool a = classify_injective(kind, x, ctx.sub), b = brute_force_injective(kind, x, cat);
                auto& c = claims.add(base + "/injective", a == b,
                                     a == b ? "" : "closed form and lifting oracle disagree");
                c["verdict"] = a;
                if (a != b) c["replay"] = replay_object("classify", ctx, x, kind, "injective");
            });
        }
    return finish("verify", "classify", ctx, claims);
}

std::size_t gamma_bound(const StableAuslander& g) { return g.gamma()->dimension() + 2; }

Json table_json(const std::vector<std::vector<std::size_t>>& t) { return Json(t); }

Report suite_psi(const Context& ctx) {
    Claims claims;
    const StableAuslander g(ctx.sub);
    const auto cat = conflation_catalog(ctx.sub, ctx.universe);
    const auto rep = verify_psi_properties(g, cat, gamma_bound(g));
    for (const auto* c : {&rep.exactness, &rep.canonical_failure, &rep.density, &rep.fullness, &rep.objectivity})
        claims.add(c->name, c->pass, c->detail)["instances"] = c->instances;
    Json extra{{"gamma", algebra_to_json(*g.gamma())}, {"gamma_dimension", g.gamma()->dimension()},
               {"density_hits", rep.density_hits}};
    // The stable equivalence needs X Frobenius.
    const bool frobenius = ctx.sub.projective_indices() == ctx.sub.injective_indices();
    if (frobenius) {
        const auto se = stable_equivalence_check(g, ctx.universe, gamma_bound(g));
        claims.add(se.bijection.name, se.bijection.pass, se.bijection.detail)["instances"] = se.bijection.instances;
        claims.add(se.hom_dimensions.name, se.hom_dimensions.pass, se.hom_dimensions.detail)["instances"] =
            se.hom_dimensions.instances;
        extra["stable_hom_table_s"] = table_json(se.s_table);
        extra["stable_hom_table_gamma"] = table_json(se.gamma_table);
    } else {
        claims.mark("stable equivalence", "skipped", "X is not Frobenius");
    }
    return finish("verify", "psi", ctx, claims, extra);
}

Report suite_counting(const Context& ctx) {
    Claims claims;
    const StableAuslander g(ctx.sub);
    std::size_t gamma_ind = 0;
    if (g.num_vertices() > 0) gamma_ind = enumerate_indecomposables(g.gamma(), gamma_bound(g)).size();
    const std::size_t s = ctx.universe.size(), x = ctx.sub.size();
    claims.add("|ind S| = |ind mod Gamma| + 2 |ind X|", s == gamma_ind + 2 * x,
               std::to_string(s) + " = " + std::to_string(gamma_ind) + " + 2*" + std::to_string(x));
    return finish("verify", "counting", ctx, claims,
                  Json{{"ind_S", s}, {"ind_gamma", gamma_ind}, {"ind_X", x},
                       {"gamma_dimension", g.gamma()->dimension()}});
}

Report suite_hereditary(const Context& ctx) {
    Claims claims;
    constexpr std::size_t cap = 4;
    for (std::size_t k = 0; k < ctx.universe.size(); ++k) {
        const auto& x = ctx.universe[k];
        claims.check("cw/" + obj_name(k, x), [&] {
            const auto pd = projective_dimension(StructureKind::CW, x, ctx.sub, cap);
            const auto id = injective_dimension(StructureKind::CW, x, ctx.sub, cap);
            const bool ok = !pd.capped && !id.capped && pd.value <= 1 && id.value <= 1;
            auto& c = claims.add("cw/" + obj_name(k, x), ok, ok ? "" : "pd or id exceeds 1");
            c["pd"] = pd.capped ? Json(">=" + std::to_string(cap)) : Json(pd.value);
            c["id"] = id.capped ? Json(">=" + std::to_string(cap)) : Json(id.value);
            if (!ok) c["replay"] = replay_object("dimension", ctx, x, StructureKind::CW);
        });
    }
    return finish("verify", "hereditary", ctx, claims);
}

Report suite_frobenius(const Context& ctx) {
    Claims claims;
    const bool x_frob = ctx.sub.projective_indices() == ctx.sub.injective_indices();
    Json sets = Json::object();
    for (auto kind : {StructureKind::Canonical, StructureKind::CW, StructureKind::SCW}) {
        if (!wants(ctx.config, kind)) continue;
        std::vector<std::size_t> proj, inj;
        for (std::size_t k = 0; k < ctx.universe.size(); ++k) {
            if (classify_projective(kind, ctx.universe[k], ctx.sub)) proj.push_back(k);
            if (classify_injective(kind, ctx.universe[k], ctx.sub)) inj.push_back(k);
        }
        const bool equal = proj == inj;
        sets[to_string(kind)] = Json{{"projective", proj}, {"injective", inj}, {"frobenius", equal}};
        const std::string detail = equal ? "" : "projective and injective sets differ";
        if (kind == StructureKind::Canonical)
            claims.add("canonical Frobenius iff X Frobenius", equal == x_frob, equal == x_frob ? "" : detail);
        else if (kind == StructureKind::SCW)
            x_frob ? (void)claims.add("scw Frobenius when X is", equal, detail)
                   : (void)claims.mark("scw Frobenius when X is", "skipped", "X is not Frobenius");
    }
    return finish("verify", "frobenius", ctx, claims, Json{{"x_frobenius", x_frob}, {"sets", sets}});
}

Report suite_ar(const Context& ctx) {
    Claims claims;
    Json found = Json::array();
    for (auto kind : ctx.config.kinds)
        for (std::size_t k = 0; k < ctx.universe.size(); ++k) {
            const auto& y = ctx.universe[k];
            if (classify_projective(kind, y, ctx.sub)) continue;
            const std::string name = to_string(kind) + "/almost split ending at " + obj_name(k, y);
            claims.check(name, [&] {
                const auto r = find_ar_conflation_ending_at(y, kind, ctx.sub, ctx.universe);
                const bool ok = is_almost_split(r.found, ctx.universe);
                auto& c = claims.add(name, ok, ok ? "" : "search result not certified");
                c["candidates"] = r.candidates;
                c["conflation"] = conflation_to_json(r.found.conflation, ctx.config.algebra);
                if (!ok) c["replay"] = replay_object("almost_split", ctx, y, kind);
            });
        }
    const bool all_kinds = ctx.config.kinds.size() == 3;
    for (std::size_t k = 0; k < ctx.universe.size() && all_kinds; ++k) {
        const auto& y = ctx.universe[k];
        if (classify_projective(StructureKind::SCW, y, ctx.sub)) continue;
        const std::string name = "translates agree at " + obj_name(k, y);
        claims.check(name, [&] {
            const auto t = check_translate_agreement(y, ctx.sub, ctx.universe);
            claims.add(name, t.pass, t.detail);
        });
    }
    if (wants(ctx.config, StructureKind::Canonical))
        for (std::size_t k = 0; k < ctx.universe.size(); ++k) {
            const auto& x = ctx.universe[k];
            if (classify_projective(StructureKind::Canonical, x, ctx.sub)) continue;
            const std::string name = "e1/e2 of the translate of " + obj_name(k, x);
            claims.check(name, [&] {
                const auto r = check_e1_e2_corollary(x, ctx.sub, ctx.universe);
                auto& c = claims.add(name, r.pass(), r.detail);
                c["e1"] = r.e1;
                c["e2"] = r.e2;
                if (!r.pass()) c["replay"] = replay_object("corollary", ctx, x, std::nullopt);
            });
        }
    return finish("verify", "ar", ctx, claims);
}

}  // namespace

Context Context::load(const RunConfig& c) {
    if (c.bound == 0) throw InputError("bound must be positive");
    if (c.kinds.empty()) throw InputError("no structure selected");
    AlgebraPtr alg = algebra_from_spec(c.algebra, c.p);
    Subcat sub = c.subcat == "all" ? Subcat::all(alg, c.bound) : Subcat(alg, read_generators(c.subcat, alg));
    auto universe = enumerate_S_indecomposables(sub, c.bound);
    return Context{c, alg, sub, std::move(universe)};
}

Report cmd_enumerate(const RunConfig& config, const std::string& what) {
    const Context ctx = Context::load(config);
    Json items = Json::array();
    Json extra = Json::object();
    if (what == "modules") {
        for (const auto& m : ctx.sub.generators()) items.push_back(module_to_json(m, config.algebra));
    } else if (what == "s") {
        for (const auto& x : ctx.universe)
            items.push_back(Json{{"describe", x.describe()}, {"object", morph_to_json(x, config.algebra)}});
    } else if (what == "gamma") {
        const StableAuslander g(ctx.sub);
        extra["gamma"] = algebra_to_json(*g.gamma());
        extra["gamma_bound"] = gamma_bound(g);
        if (g.num_vertices() > 0)
            for (const auto& m : enumerate_indecomposables(g.gamma(), gamma_bound(g)))
                items.push_back(module_to_json(m, "gamma"));
    } else {
        throw InputError("unknown listing '" + what + "' (modules, s, gamma)");
    }
    Report r;
    r.json = Json{{"command", "enumerate"}, {"objects", what}, {"config", config_json(config)},
                  {"count", items.size()}};
    for (auto it = extra.begin(); it != extra.end(); ++it) r.json[it.key()] = it.value();
    r.json["items"] = items;
    return r;
}

Report cmd_verify(const RunConfig& config, const std::string& suite) {
    if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
        throw InputError("unknown suite '" + suite + "'");
    const Context ctx = Context::load(config);
    Claims pre;
    if (!ctx.sub.is_whole_category()) {
        // The suites assume X resolving; a user list is checked up to the bound first.
        const auto r = validate_resolving(ctx.sub, config.bound);
        const std::pair<const char*, const CheckResult*> checks[] = {
            {"contains projectives", &r.contains_projectives},
            {"closed under extensions", &r.closed_under_extensions},
            {"closed under kernels of epimorphisms", &r.closed_under_epi_kernels},
            {"closed under summands", &r.closed_under_summands}};
        for (const auto& [name, c] : checks) {
            auto& claim = pre.add(std::string("X resolving: ") + name, c->pass, c->detail);
            if (c->witness) claim["witness"] = module_to_json(*c->witness, config.algebra);
        }
        if (!r.resolving()) return finish("verify", suite, ctx, pre);
    }
    Report out = suite == "axioms"       ? suite_axioms(ctx)
                 : suite == "classify"   ? suite_classify(ctx)
                 : suite == "psi"        ? suite_psi(ctx)
                 : suite == "counting"   ? suite_counting(ctx)
                 : suite == "hereditary" ? suite_hereditary(ctx)
                 : suite == "frobenius"  ? suite_frobenius(ctx)
                                         : suite_ar(ctx);
    if (!pre.list().empty()) out.json["resolving"] = pre.list();
    return out;
}

Report cmd_replay(const RunConfig& config, const Json& payload) {
    const Context ctx = Context::load(config);
    Claims claims;
    std::string check;
    std::optional<StructureKind> kind;
    try {
        check = payload.at("check").get<std::string>();
        if (payload.contains("kind")) kind = parse_kind(payload.at("kind").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed replay payload: ") + e.what());
    }
    auto need_kind = [&] {
        if (!kind) throw InputError("replay payload needs a kind");
        return *kind;
    };
    auto object = [&] {
        if (!payload.contains("object")) throw InputError("replay payload needs an object");
        return morph_from_json(payload.at("object"), ctx.algebra);
    };
    claims.check(check, [&] {
        if (check == "conflation") {
            const auto c = conflation_from_json(payload.at("conflation"), ctx.algebra);
            claims.add("conflation membership", is_conflation(need_kind(), c, ctx.sub), "");
        } else if (check == "classify") {
            const auto x = object();
            const auto cat = conflation_catalog(ctx.sub, ctx.universe);
            const bool inj = payload.value("side", "projective") == "injective";
            const bool a = inj ? classify_injective(need_kind(), x, ctx.sub) : classify_projective(need_kind(), x, ctx.sub);
            const bool b = inj ? brute_force_injective(need_kind(), x, cat) : brute_force_projective(need_kind(), x, cat);
            claims.add("closed form equals oracle", a == b, "");
        } else if (check == "almost_split") {
            const auto r = find_ar_conflation_ending_at(object(), need_kind(), ctx.sub, ctx.universe);
            claims.add("almost split", is_almost_split(r.found, ctx.universe), "");
        } else if (check == "corollary") {
            const auto r = check_e1_e2_corollary(object(), ctx.sub, ctx.universe);
            claims.add("e1/e2 corollary", r.pass(), r.detail);
        } else if (check == "dimension") {
            const auto x = object();
            const auto pd = projective_dimension(need_kind(), x, ctx.sub, 4);
            const auto id = injective_dimension(need_kind(), x, ctx.sub, 4);
            claims.add("pd and id at most 1", !pd.capped && !id.capped && pd.value <= 1 && id.value <= 1, "");
        } else {
            throw InputError("unknown replay check '" + check + "'");
        }
    });
    return finish("replay", check, ctx, claims, Json::object(), false);
}

Report guarded_report(const std::string& command, const std::function<Report()>& f) {
    auto error = [&](ExitStatus s, const std::string& msg) {
        Report r;
        r.status = s;
        r.json = Json{{"command", command}, {"status", status_name(s)}, {"error", msg}};
        return r;
    };
    try {
        return f();
    } catch (const InconclusiveError& e) {
        return error(ExitStatus::Inconclusive, e.what());
    } catch (const InputError& e) {
        return error(ExitStatus::InputError, e.what());
    } catch (const PreconditionError& e) {
        return error(ExitStatus::InputError, e.what());
    }
}

}  // namespace monocat
