#include "monocat/serialize.hpp"

#include <fstream>

#include "monocat/errors.hpp"

namespace monocat {

namespace {

// Any nlohmann type or range error is an input problem.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed ") + what + ": " + e.what());
    }
}

Json path_to_json(const QuiverPresentation& q, const PathTerm& t) {
    Json labels = Json::array();
    for (auto a : t.arrows) labels.push_back(q.arrows[a].label);
    Json term = Json::array({t.coeff, labels});
    if (t.arrows.empty()) term.push_back(q.vertices[t.vertex]);
    return term;
}

PathTerm path_from_json(const QuiverPresentation& q, const Json& j) {
    if (!j.is_array() || j.size() < 2 || !j[1].is_array()) throw InputError("relation term must be [coeff, [labels]]");
    PathTerm t;
    const long long c = j[0].get<long long>();
    t.coeff = fp_reduce(c, q.p);
    for (const auto& l : j[1]) t.arrows.push_back(q.arrow_index(l.get<std::string>()));
    if (t.arrows.empty()) {
        if (j.size() < 3) throw InputError("trivial path term needs a vertex name");
        t.vertex = q.vertex_index(j[2].get<std::string>());
    }
    return t;
}

bool is_term(const Json& j) { return j.is_array() && j.size() >= 2 && j[0].is_number() && j[1].is_array(); }

Json blocks_to_json(const ModMap& f) {
    Json out = Json::array();
    for (const auto& b : f.blocks()) out.push_back(matrix_to_json(b));
    return out;
}

ModMap blocks_from_json(const Json& j, const Module& src, const Module& tgt) {
    if (!j.is_array() || j.size() != src.num_vertices()) throw InputError("map needs one block per vertex");
    std::vector<Mat> blocks;
    for (std::size_t v = 0; v < src.num_vertices(); ++v)
        blocks.push_back(matrix_from_json(j[v], tgt.dim(v), src.dim(v), src.p()));
    return ModMap(src, tgt, std::move(blocks));
}

Json morph_map_to_json(const MorphMap& m) {
    return Json{{"phi1", blocks_to_json(m.phi1())}, {"phi2", blocks_to_json(m.phi2())}};
}

MorphMap morph_map_from_json(const Json& j, const MorphObj& s, const MorphObj& t) {
    return MorphMap(s, t, blocks_from_json(j.at("phi1"), s.a(), t.a()), blocks_from_json(j.at("phi2"), s.b(), t.b()));
}

}  // namespace

Json algebra_to_json(const Algebra& alg) {
    const auto& q = alg.presentation();
    Json arrows = Json::array(), rels = Json::array();
    for (const auto& a : q.arrows) arrows.push_back(Json::array({a.source, a.target, a.label}));
    for (const auto& r : q.relations) {
        Json terms = Json::array();
        for (const auto& t : r.terms) terms.push_back(path_to_json(q, t));
        rels.push_back(terms);
    }
    return Json{{"vertices", q.vertices}, {"arrows", arrows}, {"relations", rels}, {"p", q.p}};
}

AlgebraPtr algebra_from_json(const Json& j, const std::string& name) {
    QuiverPresentation q = guarded("algebra", [&] {
        QuiverPresentation q;
        q.p = j.contains("p") ? j.at("p").get<Scalar>() : 2;
        q.vertices = j.at("vertices").get<std::vector<std::string>>();
        for (const auto& a : j.at("arrows")) {
            if (!a.is_array() || a.size() != 3) throw InputError("arrow must be [src, tgt, \"label\"]");
            auto endpoint = [&](const Json& e) {
                return e.is_string() ? q.vertex_index(e.get<std::string>()) : e.get<std::size_t>();
            };
            q.arrows.push_back({endpoint(a[0]), endpoint(a[1]), a[2].get<std::string>()});
        }
        return q;
    });
    guarded("relations", [&] {
        if (!j.contains("relations")) return 0;
        for (const auto& r : j.at("relations")) {
            Relation rel;
            if (is_term(r))
                rel.terms.push_back(path_from_json(q, r));
            else
                for (const auto& t : r) rel.terms.push_back(path_from_json(q, t));
            if (rel.terms.empty()) throw InputError("empty relation");
            const auto& t0 = rel.terms.front();
            rel.source = t0.arrows.empty() ? t0.vertex : q.arrows[t0.arrows.front()].source;
            rel.target = t0.arrows.empty() ? t0.vertex : q.arrows[t0.arrows.back()].target;
            q.relations.push_back(std::move(rel));
        }
        return 0;
    });
    return algebra_from_presentation(q, name);
}

AlgebraPtr algebra_from_spec(const std::string& spec, Scalar p) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        std::size_t n = 0;
        try {
            n = std::stoul(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("bad builder parameter in '" + spec + "'");
        }
        if (n == 0) throw InputError("builder parameter must be positive in '" + spec + "'");
        if (kind == "loop") return build_nilpotent_loop(n, p);
        if (kind == "linear") return build_linear_quiver(n, p);
        if (kind == "preprojective") return build_preprojective(n, p);
        throw InputError("unknown algebra builder '" + kind + "'");
    }
    std::ifstream in(spec);
    if (!in) throw InputError("cannot open algebra file '" + spec + "'");
    Json j = guarded("algebra file", [&] { return Json::parse(in); });
    if (!j.contains("p")) j["p"] = p;
    return algebra_from_json(j, spec);
}

Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

Mat matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, Scalar p) {
    return guarded("matrix", [&] {
        Mat m(rows, cols, p);
        if (!j.is_array() || j.size() != rows) throw InputError("matrix has the wrong number of rows");
        for (std::size_t r = 0; r < rows; ++r) {
            if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix has the wrong number of columns");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = fp_reduce(j[r][c].get<long long>(), p);
        }
        return m;
    });
}

Json module_to_json(const Module& m, const std::string& algebra_id) {
    Json action = Json::object();
    const auto& alg = *m.algebra();
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) action[alg.arrow(a).label] = matrix_to_json(m.action(a));
    return Json{{"algebra", algebra_id}, {"dims", m.dims()}, {"action", action}};
}

Module module_from_json(const Json& j, const AlgebraPtr& alg) {
    return guarded("module", [&] {
        auto dims = j.at("dims").get<std::vector<std::size_t>>();
        if (dims.size() != alg->num_vertices()) throw InputError("module has the wrong number of dimensions");
        std::vector<Mat> action;
        const auto& acts = j.at("action");
        for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
            const auto& ar = alg->arrow(a);
            const std::size_t rows = dims[ar.target], cols = dims[ar.source];
            if (acts.contains(ar.label))
                action.push_back(matrix_from_json(acts.at(ar.label), rows, cols, alg->p()));
            else
                action.emplace_back(rows, cols, alg->p());
        }
        return Module(alg, dims, std::move(action));
    });
}

Json morph_to_json(const MorphObj& x, const std::string& algebra_id) {
    return Json{{"a", module_to_json(x.a(), algebra_id)},
                {"b", module_to_json(x.b(), algebra_id)},
                {"f", blocks_to_json(x.f())}};
}

MorphObj morph_from_json(const Json& j, const AlgebraPtr& base) {
    return guarded("object", [&] {
        auto a = module_from_json(j.at("a"), base);
        auto b = module_from_json(j.at("b"), base);
        return MorphObj(blocks_from_json(j.at("f"), a, b));
    });
}

Json conflation_to_json(const Conflation& c, const std::string& algebra_id) {
    return Json{{"start", morph_to_json(c.start(), algebra_id)},
                {"middle", morph_to_json(c.middle(), algebra_id)},
                {"end", morph_to_json(c.end(), algebra_id)},
                {"i", morph_map_to_json(c.i)},
                {"p", morph_map_to_json(c.p)}};
}

Conflation conflation_from_json(const Json& j, const AlgebraPtr& base) {
    return guarded("conflation", [&] {
        auto s = morph_from_json(j.at("start"), base);
        auto m = morph_from_json(j.at("middle"), base);
        auto e = morph_from_json(j.at("end"), base);
        return make_conflation(morph_map_from_json(j.at("i"), s, m), morph_map_from_json(j.at("p"), m, e));
    });
}

}  // namespace monocat
