#include "monocat/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "monocat/errors.hpp"
#include "monocat/local.hpp"

namespace monocat {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t path_source(const QuiverPresentation& q, const PathTerm& t) {
    return t.arrows.empty() ? t.vertex : q.arrows[t.arrows.front()].source;
}
std::size_t path_target(const QuiverPresentation& q, const PathTerm& t) {
    return t.arrows.empty() ? t.vertex : q.arrows[t.arrows.back()].target;
}

std::string path_label(const QuiverPresentation& q, const std::vector<std::size_t>& arrows,
                       std::size_t vertex) {
    if (arrows.empty()) return "e_" + q.vertices[vertex];
    std::string s;
    for (std::size_t i = 0; i < arrows.size(); ++i) s += (i ? "*" : "") + q.arrows[arrows[i]].label;
    return s;
}

}  // namespace

std::size_t QuiverPresentation::arrow_index(const std::string& label) const {
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].label == label) return a;
    throw InputError("unknown arrow label '" + label + "'");
}

std::size_t QuiverPresentation::vertex_index(const std::string& name) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v] == name) return v;
    throw InputError("unknown vertex '" + name + "'");
}

void QuiverPresentation::validate() const {
    if (!is_prime(p) || p >= (1u << 16))
        throw InputError("field characteristic must be a prime below 65536, got " +
                         std::to_string(p));
    if (vertices.empty()) throw InputError("quiver has no vertices");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const auto& a = arrows[i];
        if (a.source >= vertices.size() || a.target >= vertices.size())
            throw InputError("arrow '" + a.label + "' has an endpoint out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (arrows[j].label == a.label) throw InputError("duplicate arrow label '" + a.label + "'");
    }
    for (const auto& r : relations) {
        if (r.terms.empty()) throw InputError("empty relation");
        for (const auto& t : r.terms) {
            for (auto a : t.arrows)
                if (a >= arrows.size()) throw InputError("relation uses an unknown arrow");
            for (std::size_t k = 1; k < t.arrows.size(); ++k)
                if (arrows[t.arrows[k - 1]].target != arrows[t.arrows[k]].source)
                    throw InputError("relation path is not composable");
            if (path_source(*this, t) != r.source || path_target(*this, t) != r.target)
                throw InputError("relation terms have different endpoints");
        }
    }
}

void Algebra::index_basis() {
    const std::size_t n = num_vertices();
    between_.assign(n * n, {});
    idempotents_.assign(n, npos);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto& b = basis_[i];
        between_[b.source * n + b.target].push_back(i);
    }
}

std::vector<Scalar> Algebra::multiply(const std::vector<Scalar>& x,
                                      const std::vector<Scalar>& y) const {
    const Scalar p = this->p();
    std::vector<Scalar> r(dimension(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (!y[j]) continue;
            Scalar c = fp_mul(x[i], y[j], p);
            for (const auto& [k, v] : product(i, j)) r[k] = fp_add(r[k], fp_mul(c, v, p), p);
        }
    }
    return r;
}

void Algebra::check_structure() const {
    const std::size_t d = dimension();
    const Scalar p = this->p();
    std::vector<Scalar> one(d, 0);
    for (std::size_t v = 0; v < num_vertices(); ++v) one[idempotent(v)] = 1;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Scalar> x(d, 0);
        x[i] = 1;
        if (multiply(one, x) != x || multiply(x, one) != x)
            throw InputError("unit law fails for basis element " + basis_[i].label);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (basis_[i].target != basis_[j].source) {
                if (!product(i, j).empty())
                    throw InputError("non-composable basis elements have a nonzero product");
                continue;
            }
            for (std::size_t k = 0; k < d; ++k) {
                if (basis_[j].target != basis_[k].source) continue;
                std::vector<Scalar> ij(d, 0), jk(d, 0);
                for (auto [a, v] : product(i, j)) ij[a] = v;
                for (auto [a, v] : product(j, k)) jk[a] = v;
                std::vector<Scalar> left(d, 0), right(d, 0);
                for (std::size_t a = 0; a < d; ++a) {
                    if (ij[a])
                        for (auto [c, v] : product(a, k)) left[c] = fp_add(left[c], fp_mul(ij[a], v, p), p);
                    if (jk[a])
                        for (auto [c, v] : product(i, a)) right[c] = fp_add(right[c], fp_mul(jk[a], v, p), p);
                }
                if (left != right)
                    throw InputError("composition is not associative on (" + basis_[i].label + ", " +
                                     basis_[j].label + ", " + basis_[k].label + ")");
            }
        }
}

namespace {

// Builds the algebra data from a homogeneous presentation.
struct PresentationBuilder {
    const QuiverPresentation& q;
    std::size_t max_length;

    struct Degree {
        std::vector<std::vector<std::size_t>> paths;
        std::map<std::vector<std::size_t>, std::size_t> index;
        std::vector<std::size_t> basis_index;  // npos if not a standard monomial
    };
    std::vector<Degree> degrees;
    std::vector<RowSpace> ideals;

    std::vector<Scalar> reduce(std::size_t d, std::size_t path) const {
        std::vector<Scalar> v(degrees[d].paths.size(), 0);
        v[path] = 1;
        return ideals[d].reduce(std::move(v));
    }
};

}  // namespace

std::shared_ptr<const Algebra> Algebra::from_presentation(QuiverPresentation pres, std::string name,
                                                          std::size_t max_length) {
    pres.validate();
    const QuiverPresentation& q = pres;
    const Scalar p = q.p;
    for (const auto& r : q.relations) {
        std::size_t len = r.terms.front().arrows.size();
        for (const auto& t : r.terms)
            if (t.arrows.size() != len)
                throw InputError("relations must be homogeneous in path length");
        if (len < 2) throw InputError("relations must lie in paths of length at least 2");
    }
    std::shared_ptr<Algebra> alg(new Algebra());
    alg->name_ = std::move(name);
    alg->homogeneous_ = true;

    PresentationBuilder b{q, max_length, {}, {}};
    // Trivial paths are the first basis elements; degree d >= 1 holds arrow sequences.
    std::vector<std::vector<std::size_t>> cur;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) cur.push_back({a});

    std::vector<Algebra::BasisElement> basis;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        Algebra::BasisElement e;
        e.source = e.target = v;
        e.label = path_label(q, {}, v);
        e.expression = {PathTerm{1, {}, v}};
        basis.push_back(e);
    }
    b.degrees.push_back({});  // placeholder for degree 0
    b.ideals.emplace_back(0, p);

    std::size_t loewy = 1;
    for (std::size_t d = 1; !cur.empty(); ++d) {
        if (d > max_length)
            throw InputError("algebra is not finite dimensional within path length " +
                             std::to_string(max_length));
        PresentationBuilder::Degree deg;
        deg.paths = cur;
        for (std::size_t i = 0; i < cur.size(); ++i) deg.index[cur[i]] = i;
        RowSpace ideal(cur.size(), p);
        for (const auto& r : q.relations) {
            if (r.terms.front().arrows.size() != d) continue;
            std::vector<Scalar> v(cur.size(), 0);
            for (const auto& t : r.terms) {
                auto idx = deg.index.at(t.arrows);
                v[idx] = fp_add(v[idx], t.coeff % p, p);
            }
            ideal.insert(v);
        }
        if (d >= 2) {
            const auto& prev = b.degrees[d - 1];
            for (const auto& w : b.ideals[d - 1].generators()) {
                for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                    std::vector<Scalar> right(cur.size(), 0), left(cur.size(), 0);
                    bool any_r = false, any_l = false;
                    for (std::size_t k = 0; k < w.size(); ++k) {
                        if (!w[k]) continue;
                        const auto& path = prev.paths[k];
                        if (q.arrows[path.back()].target == q.arrows[a].source) {
                            auto ext = path;
                            ext.push_back(a);
                            right[deg.index.at(ext)] = w[k];
                            any_r = true;
                        }
                        if (q.arrows[a].target == q.arrows[path.front()].source) {
                            std::vector<std::size_t> ext{a};
                            ext.insert(ext.end(), path.begin(), path.end());
                            left[deg.index.at(ext)] = w[k];
                            any_l = true;
                        }
                    }
                    if (any_r) ideal.insert(right);
                    if (any_l) ideal.insert(left);
                }
            }
        }
        if (ideal.dimension() == cur.size()) {
            b.degrees.push_back(std::move(deg));
            b.ideals.push_back(std::move(ideal));
            break;
        }
        // Standard monomials are the non-lead positions of the reduced ideal.
        deg.basis_index.assign(cur.size(), npos);
        for (auto i : ideal.free_positions()) {
            deg.basis_index[i] = basis.size();
            Algebra::BasisElement be;
            be.source = q.arrows[cur[i].front()].source;
            be.target = q.arrows[cur[i].back()].target;
            be.label = path_label(q, cur[i], 0);
            be.expression = {PathTerm{1, cur[i], be.source}};
            basis.push_back(be);
        }
        loewy = d + 1;
        b.degrees.push_back(std::move(deg));
        b.ideals.push_back(std::move(ideal));
        std::vector<std::vector<std::size_t>> next;
        for (const auto& path : cur)
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[path.back()].target == q.arrows[a].source) {
                    auto ext = path;
                    ext.push_back(a);
                    next.push_back(ext);
                }
        cur = std::move(next);
    }

    alg->pres_ = std::move(pres);
    alg->basis_ = std::move(basis);
    alg->loewy_length_ = loewy;
    alg->index_basis();
    const auto& qq = alg->pres_;
    for (std::size_t v = 0; v < qq.vertices.size(); ++v) alg->idempotents_[v] = v;

    // Degree and path index of each basis element.
    const std::size_t dim = alg->basis_.size();
    std::vector<std::pair<std::size_t, std::size_t>> where(dim, {0, npos});
    for (std::size_t d = 1; d < b.degrees.size(); ++d)
        for (std::size_t i = 0; i < b.degrees[d].basis_index.size(); ++i)
            if (b.degrees[d].basis_index[i] != npos) where[b.degrees[d].basis_index[i]] = {d, i};

    alg->products_.assign(dim * dim, {});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& bi = alg->basis_[i];
            const auto& bj = alg->basis_[j];
            if (bi.target != bj.source) continue;
            auto& out = alg->products_[i * dim + j];
            if (where[i].second == npos) {
                out.push_back({j, 1});
                continue;
            }
            if (where[j].second == npos) {
                out.push_back({i, 1});
                continue;
            }
            std::size_t d = where[i].first + where[j].first;
            if (d >= b.degrees.size() || b.degrees[d].basis_index.empty()) continue;
            auto path = b.degrees[where[i].first].paths[where[i].second];
            const auto& tail = b.degrees[where[j].first].paths[where[j].second];
            path.insert(path.end(), tail.begin(), tail.end());
            auto rem = b.reduce(d, b.degrees[d].index.at(path));
            for (std::size_t k = 0; k < rem.size(); ++k)
                if (rem[k]) out.push_back({b.degrees[d].basis_index[k], rem[k]});
        }
    alg->arrow_elements_.assign(qq.arrows.size(), {});
    for (std::size_t a = 0; a < qq.arrows.size(); ++a)
        alg->arrow_elements_[a] = {{b.degrees[1].basis_index.empty()
                                        ? npos
                                        : b.degrees[1].basis_index[a],
                                    1}};
    for (const auto& ae : alg->arrow_elements_)
        if (ae.front().first == npos)
            throw InputError("an arrow lies in the ideal of relations");
    return alg;
}

namespace {

std::vector<std::size_t> global_block(const HomTable& t, std::size_t s, std::size_t r,
                                      const std::vector<std::size_t>& offsets) {
    std::vector<std::size_t> v(t.dims[s][r]);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = offsets[s * t.objects.size() + r] + i;
    return v;
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::from_hom_table(const HomTable& t, std::string name) {
    const std::size_t n = t.objects.size();
    const Scalar p = t.p;
    if (!is_prime(p) || p >= (1u << 16)) throw InputError("bad field characteristic");
    if (t.dims.size() != n || t.identity.size() != n) throw InputError("hom table shape mismatch");
    std::shared_ptr<Algebra> alg(new Algebra());
    alg->name_ = std::move(name);
    alg->pres_.p = p;
    alg->pres_.vertices = t.objects;

    std::vector<std::size_t> offsets(n * n);
    std::size_t dim = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (t.dims[s].size() != n) throw InputError("hom table shape mismatch");
        for (std::size_t r = 0; r < n; ++r) {
            offsets[s * n + r] = dim;
            for (std::size_t i = 0; i < t.dims[s][r]; ++i) {
                Algebra::BasisElement be;
                be.source = s;
                be.target = r;
                be.label = t.objects[s] + "->" + t.objects[r] + "#" + std::to_string(i);
                alg->basis_.push_back(be);
            }
            dim += t.dims[s][r];
        }
        if (t.identity[s] >= t.dims[s][s]) throw InputError("identity index out of range");
    }
    alg->index_basis();
    for (std::size_t s = 0; s < n; ++s) alg->idempotents_[s] = offsets[s * n + s] + t.identity[s];
    alg->products_.assign(dim * dim, {});
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t i = 0; i < t.dims[s][m]; ++i)
                    for (std::size_t j = 0; j < t.dims[m][r]; ++j) {
                        auto c = t.compose(s, m, r, i, j);
                        if (c.size() != t.dims[s][r]) throw InputError("composition has wrong length");
                        auto& out = alg->products_[(offsets[s * n + m] + i) * dim + offsets[m * n + r] + j];
                        for (std::size_t k = 0; k < c.size(); ++k)
                            if (c[k] % p) out.push_back({offsets[s * n + r] + k, c[k] % p});
                    }
    alg->check_structure();

    // Radical: off-diagonal blocks plus the radical of each local corner.
    std::vector<std::vector<Scalar>> rad;
    auto unit_vec = [&](std::size_t k) {
        std::vector<Scalar> v(dim, 0);
        v[k] = 1;
        return v;
    };
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r) {
            if (s == r) {
                auto idx = global_block(t, s, s, offsets);
                AlgebraOps ops;
                ops.p = p;
                ops.dim = idx.size();
                ops.one.assign(idx.size(), 0);
                ops.one[t.identity[s]] = 1;
                auto embed = [&, idx](const std::vector<Scalar>& x) {
                    std::vector<Scalar> g(dim, 0);
                    for (std::size_t k = 0; k < idx.size(); ++k) g[idx[k]] = x[k];
                    return g;
                };
                auto restrict_ = [idx](const std::vector<Scalar>& g) {
                    std::vector<Scalar> x(idx.size());
                    for (std::size_t k = 0; k < idx.size(); ++k) x[k] = g[idx[k]];
                    return x;
                };
                const Algebra* a = alg.get();
                ops.multiply = [a, embed, restrict_](const std::vector<Scalar>& x,
                                                     const std::vector<Scalar>& y) {
                    return restrict_(a->multiply(embed(x), embed(y)));
                };
                ops.represent = [&ops, p](const std::vector<Scalar>& x) {
                    Mat m(ops.dim, ops.dim, p);
                    for (std::size_t c = 0; c < ops.dim; ++c) {
                        std::vector<Scalar> e(ops.dim, 0);
                        e[c] = 1;
                        auto col = ops.multiply(x, e);
                        for (std::size_t r2 = 0; r2 < ops.dim; ++r2) m(r2, c) = col[r2];
                    }
                    return m;
                };
                auto la = analyze_local(ops);
                if (la.verdict == LocalAnalysis::Verdict::Split)
                    throw InputError("endomorphisms of object '" + t.objects[s] +
                                     "' are not local; the table is not basic");
                if (la.verdict == LocalAnalysis::Verdict::Unknown)
                    throw InconclusiveError("could not decide locality of object '" + t.objects[s] + "'");
                for (const auto& g : la.radical) rad.push_back(embed(g));
            } else {
                for (auto k : global_block(t, s, r, offsets)) rad.push_back(unit_vec(k));
            }
        }
    auto block_of = [&](const std::vector<Scalar>& v) -> std::pair<std::size_t, std::size_t> {
        for (std::size_t k = 0; k < dim; ++k)
            if (v[k]) return {alg->basis_[k].source, alg->basis_[k].target};
        return {npos, npos};
    };

    // Powers of the radical, to get rad^2 and the Loewy length.
    std::vector<std::vector<std::vector<Scalar>>> powers{rad};
    while (!powers.back().empty()) {
        RowSpace next(dim, p);
        for (const auto& x : powers.back())
            for (const auto& y : rad) next.insert(alg->multiply(x, y));
        if (next.dimension() >= powers.back().size() && powers.size() > 1)
            throw InputError("radical is not nilpotent");
        powers.push_back(next.generators());
        if (powers.size() > dim + 2) throw InputError("radical is not nilpotent");
    }
    // powers[k] spans rad^{k+1} and the last entry is zero.
    alg->loewy_length_ = powers.size();

    // Arrows: a complement of rad^2 in rad, block by block.
    std::vector<std::vector<Scalar>> arrow_vecs;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r) {
            RowSpace span(dim, p);
            for (const auto& v : powers.size() > 1 ? powers[1] : std::vector<std::vector<Scalar>>{})
                if (block_of(v) == std::make_pair(s, r)) span.insert(v);
            for (const auto& v : rad) {
                if (block_of(v) != std::make_pair(s, r)) continue;
                if (span.insert(v)) {
                    Arrow a;
                    a.source = s;
                    a.target = r;
                    a.label = "g" + std::to_string(alg->pres_.arrows.size());
                    alg->pres_.arrows.push_back(a);
                    arrow_vecs.push_back(v);
                }
            }
        }
    for (const auto& v : arrow_vecs) {
        Algebra::Sparse sp;
        for (std::size_t k = 0; k < dim; ++k)
            if (v[k]) sp.push_back({k, v[k]});
        alg->arrow_elements_.push_back(sp);
    }

    // Enumerate paths up to the Loewy length and their values.
    const auto& q = alg->pres_;
    struct PathVal {
        PathTerm path;
        std::vector<Scalar> value;
    };
    std::vector<PathVal> paths;
    for (std::size_t v = 0; v < n; ++v) {
        PathVal pv;
        pv.path = PathTerm{1, {}, v};
        pv.value = unit_vec(alg->idempotents_[v]);
        paths.push_back(pv);
    }
    std::vector<std::size_t> frontier;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        paths.push_back({PathTerm{1, {a}, q.arrows[a].source}, arrow_vecs[a]});
        frontier.push_back(paths.size() - 1);
    }
    for (std::size_t len = 2; len <= alg->loewy_length_ && !frontier.empty(); ++len) {
        std::vector<std::size_t> next;
        for (auto idx : frontier)
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[paths[idx].path.arrows.back()].target != q.arrows[a].source) continue;
                PathVal pv;
                pv.path = paths[idx].path;
                pv.path.arrows.push_back(a);
                pv.value = alg->multiply(paths[idx].value, arrow_vecs[a]);
                paths.push_back(std::move(pv));
                next.push_back(paths.size() - 1);
            }
        frontier = std::move(next);
    }
    // Per block: express basis elements and extract relations.
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<std::size_t> pidx;
            for (std::size_t k = 0; k < paths.size(); ++k)
                if (path_source(q, paths[k].path) == s && path_target(q, paths[k].path) == r)
                    pidx.push_back(k);
            auto gb = global_block(t, s, r, offsets);
            if (pidx.empty()) {
                if (!gb.empty()) throw InputError("arrows do not generate the algebra");
                continue;
            }
            Mat m(gb.size(), pidx.size(), p);
            for (std::size_t c = 0; c < pidx.size(); ++c)
                for (std::size_t k = 0; k < gb.size(); ++k) m(k, c) = paths[pidx[c]].value[gb[k]];
            if (!gb.empty()) {
                auto sol = solve_linear(m, Mat::identity(gb.size(), p));
                if (!sol) throw InputError("arrows do not generate the algebra");
                for (std::size_t k = 0; k < gb.size(); ++k) {
                    auto& expr = alg->basis_[gb[k]].expression;
                    for (std::size_t c = 0; c < pidx.size(); ++c)
                        if (sol->particular(c, k)) {
                            PathTerm term = paths[pidx[c]].path;
                            term.coeff = sol->particular(c, k);
                            expr.push_back(term);
                        }
                }
            }
            Mat ker = gb.empty() ? Mat::identity(pidx.size(), p) : kernel_basis(m);
            for (std::size_t c = 0; c < ker.cols(); ++c) {
                Relation rel;
                rel.source = s;
                rel.target = r;
                for (std::size_t k = 0; k < pidx.size(); ++k)
                    if (ker(k, c)) {
                        PathTerm term = paths[pidx[k]].path;
                        term.coeff = ker(k, c);
                        rel.terms.push_back(term);
                    }
                alg->pres_.relations.push_back(rel);
            }
        }
    // An empty table is the zero algebra, which a user presentation may not be.
    if (n > 0) alg->pres_.validate();
    return alg;
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto back = opposite_back_.lock()) return back;
    if (opposite_) return opposite_;
    std::shared_ptr<Algebra> op(new Algebra());
    op->name_ = name_ + "^op";
    op->homogeneous_ = homogeneous_;
    op->loewy_length_ = loewy_length_;
    op->loop_order_ = loop_order_;
    op->pres_.p = pres_.p;
    op->pres_.vertices = pres_.vertices;
    for (const auto& a : pres_.arrows) op->pres_.arrows.push_back({a.target, a.source, a.label});
    auto reverse_term = [&](PathTerm t) {
        if (!t.arrows.empty()) {
            std::reverse(t.arrows.begin(), t.arrows.end());
            t.vertex = pres_.arrows[t.arrows.front()].target;
        }
        return t;
    };
    for (const auto& r : pres_.relations) {
        Relation rr{r.target, r.source, {}};
        for (const auto& t : r.terms) rr.terms.push_back(reverse_term(t));
        op->pres_.relations.push_back(rr);
    }
    for (const auto& b : basis_) {
        BasisElement e{b.target, b.source, b.label, {}};
        for (const auto& t : b.expression) e.expression.push_back(reverse_term(t));
        op->basis_.push_back(e);
    }
    op->index_basis();
    op->idempotents_ = idempotents_;
    const std::size_t d = dimension();
    op->products_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) op->products_[i * d + j] = products_[j * d + i];
    op->arrow_elements_ = arrow_elements_;
    op->opposite_back_ = std::const_pointer_cast<Algebra>(shared_from_this());
    opposite_ = op;
    return op;
}

std::shared_ptr<const Algebra> Algebra::t2() const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (t2_) return t2_;
    }
    auto built = build_t2(shared_from_this());
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!t2_) t2_ = built;
    return t2_;
}

AlgebraPtr build_nilpotent_loop(std::size_t n, Scalar p) {
    if (n == 0) throw InputError("nilpotent loop order must be positive");
    QuiverPresentation q;
    q.p = p;
    q.vertices = {"1"};
    if (n >= 2) {
        q.arrows = {{0, 0, "x"}};
        q.relations = {Relation{0, 0, {PathTerm{1, std::vector<std::size_t>(n, 0), 0}}}};
    }
    auto base = Algebra::from_presentation(q, "nilpotent_loop(" + std::to_string(n) + ")");
    auto alg = std::const_pointer_cast<Algebra>(base);
    alg->loop_order_ = n;
    return alg;
}

AlgebraPtr build_t2(const AlgebraPtr& a) {
    if (!a->homogeneous_) throw PreconditionError("T_2 needs an algebra with a homogeneous presentation");
    const auto& q = a->presentation();
    const std::size_t n = q.vertices.size(), m = q.arrows.size();
    QuiverPresentation t;
    t.p = q.p;
    for (const auto& v : q.vertices) t.vertices.push_back(v + "@1");
    for (const auto& v : q.vertices) t.vertices.push_back(v + "@2");
    for (const auto& ar : q.arrows) t.arrows.push_back({ar.source, ar.target, ar.label + "@1"});
    for (const auto& ar : q.arrows) t.arrows.push_back({n + ar.source, n + ar.target, ar.label + "@2"});
    for (std::size_t v = 0; v < n; ++v) t.arrows.push_back({v, n + v, "c_" + q.vertices[v]});
    for (const auto& r : q.relations)
        for (std::size_t copy = 0; copy < 2; ++copy) {
            Relation rr{r.source + copy * n, r.target + copy * n, {}};
            for (const auto& term : r.terms) {
                PathTerm pt = term;
                for (auto& x : pt.arrows) x += copy * m;
                pt.vertex += copy * n;
                rr.terms.push_back(pt);
            }
            t.relations.push_back(rr);
        }
    // a@1 then c_target equals c_source then a@2.
    for (std::size_t i = 0; i < m; ++i) {
        const auto& ar = q.arrows[i];
        Relation rr{ar.source, n + ar.target, {}};
        rr.terms.push_back(PathTerm{1, {i, 2 * m + ar.target}, ar.source});
        rr.terms.push_back(PathTerm{fp_neg(1, q.p), {2 * m + ar.source, m + i}, ar.source});
        t.relations.push_back(rr);
    }
    auto built = std::const_pointer_cast<Algebra>(Algebra::from_presentation(t, "T2(" + a->name() + ")"));
    built->t2_base_ = a;
    return built;
}

AlgebraPtr build_preprojective(std::size_t m, Scalar p) {
    if (m == 0) throw InputError("preprojective algebra needs at least one vertex");
    QuiverPresentation q;
    q.p = p;
    for (std::size_t i = 1; i <= m; ++i) q.vertices.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < m; ++i) {
        q.arrows.push_back({i, i + 1, "a" + std::to_string(i + 1)});
        q.arrows.push_back({i + 1, i, "b" + std::to_string(i + 1)});
    }
    // Mesh relation at vertex i: a_i b_i - b_{i-1} a_{i-1}.
    for (std::size_t i = 0; i < m && m > 1; ++i) {
        Relation r{i, i, {}};
        if (i + 1 < m) r.terms.push_back(PathTerm{1, {2 * i, 2 * i + 1}, i});
        if (i > 0) r.terms.push_back(PathTerm{fp_neg(1, p), {2 * (i - 1) + 1, 2 * (i - 1)}, i});
        q.relations.push_back(r);
    }
    return Algebra::from_presentation(q, "preprojective(" + std::to_string(m) + ")");
}

AlgebraPtr build_linear_quiver(std::size_t m, Scalar p) {
    if (m == 0) throw InputError("linear quiver needs at least one vertex");
    QuiverPresentation q;
    q.p = p;
    for (std::size_t i = 1; i <= m; ++i) q.vertices.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < m; ++i) q.arrows.push_back({i, i + 1, "a" + std::to_string(i + 1)});
    return Algebra::from_presentation(q, "linear(" + std::to_string(m) + ")");
}

AlgebraPtr algebra_from_presentation(const QuiverPresentation& pres, const std::string& name) {
    return Algebra::from_presentation(pres, name);
}

}  // namespace monocat
