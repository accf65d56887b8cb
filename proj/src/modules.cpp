#include "monocat/modules.hpp"

#include <sstream>

#include "monocat/errors.hpp"

namespace monocat {

std::shared_ptr<const Module::Data> Module::make(AlgebraPtr alg, std::vector<std::size_t> dims,
                                                 std::vector<Mat> action) {
    if (!alg) throw InputError("module without an algebra");
    if (dims.size() != alg->num_vertices())
        throw InputError("module has " + std::to_string(dims.size()) + " dimensions but the algebra has " +
                         std::to_string(alg->num_vertices()) + " vertices");
    if (action.size() != alg->num_arrows())
        throw InputError("module needs one matrix per arrow");
    for (std::size_t a = 0; a < action.size(); ++a) {
        const auto& ar = alg->arrow(a);
        const Mat& m = action[a];
        if (m.rows() != dims[ar.target] || m.cols() != dims[ar.source] || m.p() != alg->p())
            throw InputError("action matrix of arrow '" + ar.label + "' has the wrong shape");
    }
    auto d = std::make_shared<Data>();
    d->alg = std::move(alg);
    d->dims = std::move(dims);
    d->offsets.resize(d->dims.size());
    for (std::size_t v = 0; v < d->dims.size(); ++v) {
        d->offsets[v] = d->total;
        d->total += d->dims[v];
    }
    d->action = std::move(action);
    return d;
}

Module::Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> action)
    : d_(make(std::move(alg), std::move(dims), std::move(action))) {
    validate();
}

Module Module::unchecked(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> action) {
    Module m;
    m.d_ = make(std::move(alg), std::move(dims), std::move(action));
    return m;
}

Module Module::zero(const AlgebraPtr& alg) {
    std::vector<Mat> action;
    for (std::size_t a = 0; a < alg->num_arrows(); ++a) action.emplace_back(0, 0, alg->p());
    return unchecked(alg, std::vector<std::size_t>(alg->num_vertices(), 0), std::move(action));
}

Mat Module::path_action(const PathTerm& path) const {
    const auto& q = algebra()->presentation();
    if (path.arrows.empty()) return Mat::identity(dim(path.vertex), p());
    Mat m = action(path.arrows.front());
    for (std::size_t k = 1; k < path.arrows.size(); ++k) m = action(path.arrows[k]) * m;
    (void)q;
    return m;
}

Mat Module::element_action(std::size_t basis_index) const {
    const auto& b = algebra()->basis(basis_index);
    Mat m(dim(b.target), dim(b.source), p());
    for (const auto& term : b.expression) m = m + path_action(term).scaled(term.coeff);
    return m;
}

void Module::validate() const {
    const auto& q = algebra()->presentation();
    for (std::size_t r = 0; r < q.relations.size(); ++r) {
        const auto& rel = q.relations[r];
        Mat sum(dim(rel.target), dim(rel.source), p());
        for (const auto& t : rel.terms) sum = sum + path_action(t).scaled(t.coeff);
        if (!sum.is_zero()) {
            std::string desc;
            for (const auto& t : rel.terms) {
                desc += desc.empty() ? "" : " + ";
                desc += std::to_string(t.coeff) + "*";
                for (std::size_t k = 0; k < t.arrows.size(); ++k)
                    desc += (k ? "." : "") + q.arrows[t.arrows[k]].label;
            }
            throw InputError("representation violates relation " + std::to_string(r) + " (" + desc + ")");
        }
    }
}

bool Module::same_shape(const Module& o) const {
    return algebra() == o.algebra() && dims() == o.dims();
}

bool Module::operator==(const Module& o) const {
    if (d_ == o.d_) return true;
    return same_shape(o) && actions() == o.actions();
}

std::string Module::describe() const {
    std::ostringstream os;
    os << "dims(";
    for (std::size_t v = 0; v < dims().size(); ++v) os << (v ? "," : "") << dims()[v];
    os << ")";
    return os.str();
}

ModMap ModMap::unchecked(Module source, Module target, std::vector<Mat> blocks) {
    ModMap f;
    f.src_ = std::move(source);
    f.tgt_ = std::move(target);
    f.blocks_ = std::move(blocks);
    return f;
}

ModMap::ModMap(Module source, Module target, std::vector<Mat> blocks)
    : src_(std::move(source)), tgt_(std::move(target)), blocks_(std::move(blocks)) {
    if (src_.algebra() != tgt_.algebra()) throw PreconditionError("map between modules over different algebras");
    const std::size_t n = src_.num_vertices();
    if (blocks_.size() != n) throw InputError("map needs one block per vertex");
    for (std::size_t v = 0; v < n; ++v)
        if (blocks_[v].rows() != tgt_.dim(v) || blocks_[v].cols() != src_.dim(v))
            throw InputError("map block at vertex " + std::to_string(v) + " has the wrong shape");
    const auto& alg = src_.algebra();
    for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
        const auto& ar = alg->arrow(a);
        if (blocks_[ar.target] * src_.action(a) != tgt_.action(a) * blocks_[ar.source])
            throw InputError("map does not commute with arrow '" + ar.label + "'");
    }
}

ModMap ModMap::zero(const Module& source, const Module& target) {
    std::vector<Mat> blocks;
    for (std::size_t v = 0; v < source.num_vertices(); ++v)
        blocks.emplace_back(target.dim(v), source.dim(v), source.p());
    return unchecked(source, target, std::move(blocks));
}

ModMap ModMap::identity(const Module& m) {
    std::vector<Mat> blocks;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) blocks.push_back(Mat::identity(m.dim(v), m.p()));
    return unchecked(m, m, std::move(blocks));
}

ModMap ModMap::from_flat(const Module& source, const Module& target, const std::vector<Scalar>& flat) {
    std::vector<Mat> blocks;
    std::size_t off = 0;
    for (std::size_t v = 0; v < source.num_vertices(); ++v) {
        std::size_t sz = target.dim(v) * source.dim(v);
        if (off + sz > flat.size()) throw PreconditionError("flat map vector too short");
        blocks.emplace_back(target.dim(v), source.dim(v), source.p(),
                            std::vector<Scalar>(flat.begin() + off, flat.begin() + off + sz));
        off += sz;
    }
    return unchecked(source, target, std::move(blocks));
}

std::vector<Scalar> ModMap::flat() const {
    std::vector<Scalar> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.data().begin(), b.data().end());
    return out;
}

Mat ModMap::total() const {
    Mat m(tgt_.total_dim(), src_.total_dim(), src_.p());
    for (std::size_t v = 0; v < blocks_.size(); ++v) m.set_block(tgt_.offset(v), src_.offset(v), blocks_[v]);
    return m;
}

bool ModMap::is_zero() const {
    for (const auto& b : blocks_)
        if (!b.is_zero()) return false;
    return true;
}

bool ModMap::is_injective() const {
    for (const auto& b : blocks_)
        if (rank(b) != b.cols()) return false;
    return true;
}

bool ModMap::is_surjective() const {
    for (const auto& b : blocks_)
        if (rank(b) != b.rows()) return false;
    return true;
}

bool ModMap::is_iso() const {
    for (const auto& b : blocks_)
        if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
    return true;
}

std::optional<ModMap> ModMap::inverse() const {
    std::vector<Mat> inv;
    for (const auto& b : blocks_) {
        auto i = monocat::inverse(b);
        if (!i) return std::nullopt;
        inv.push_back(*i);
    }
    return unchecked(tgt_, src_, std::move(inv));
}

static void check_parallel(const ModMap& a, const ModMap& b) {
    if (!a.source().same_shape(b.source()) || !a.target().same_shape(b.target()))
        throw PreconditionError("adding maps with different sources or targets");
}

ModMap ModMap::operator+(const ModMap& o) const {
    check_parallel(*this, o);
    std::vector<Mat> blocks;
    for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] + o.blocks_[v]);
    return unchecked(src_, tgt_, std::move(blocks));
}

ModMap ModMap::operator-() const {
    std::vector<Mat> blocks;
    for (const auto& b : blocks_) blocks.push_back(-b);
    return unchecked(src_, tgt_, std::move(blocks));
}

ModMap ModMap::operator-(const ModMap& o) const { return *this + (-o); }

ModMap ModMap::scaled(Scalar s) const {
    std::vector<Mat> blocks;
    for (const auto& b : blocks_) blocks.push_back(b.scaled(s));
    return unchecked(src_, tgt_, std::move(blocks));
}

ModMap operator*(const ModMap& g, const ModMap& f) {
    if (!f.target().same_shape(g.source()))
        throw PreconditionError("composing maps whose middle modules differ");
    std::vector<Mat> blocks;
    for (std::size_t v = 0; v < f.blocks().size(); ++v) blocks.push_back(g.block(v) * f.block(v));
    return ModMap::unchecked(f.source(), g.target(), std::move(blocks));
}

std::size_t hom_unknowns(const Module& m, const Module& n) {
    std::size_t u = 0;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) u += m.dim(v) * n.dim(v);
    return u;
}

std::vector<ModMap> hom_space(const Module& m, const Module& n) {
    if (m.algebra() != n.algebra()) throw PreconditionError("hom between modules over different algebras");
    const auto& alg = m.algebra();
    const Scalar p = m.p();
    const std::size_t nv = m.num_vertices();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
    const std::size_t unknowns = off[nv];
    if (unknowns == 0) return {};
    std::size_t eqs = 0;
    for (std::size_t a = 0; a < alg->num_arrows(); ++a)
        eqs += n.dim(alg->arrow(a).target) * m.dim(alg->arrow(a).source);
    Mat sys(eqs, unknowns, p);
    std::size_t row = 0;
    for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
        const std::size_t s = alg->arrow(a).source, t = alg->arrow(a).target;
        const Mat& ma = m.action(a);  // m_t x m_s
        const Mat& na = n.action(a);  // n_t x n_s
        // (B_t M_a - N_a B_s)[i][j] = 0 with B_v entry (i, k) at off[v] + i * m_v + k.
        for (std::size_t i = 0; i < n.dim(t); ++i)
            for (std::size_t j = 0; j < m.dim(s); ++j, ++row) {
                for (std::size_t k = 0; k < m.dim(t); ++k)
                    if (ma(k, j)) {
                        auto& c = sys(row, off[t] + i * m.dim(t) + k);
                        c = fp_add(c, ma(k, j), p);
                    }
                for (std::size_t k = 0; k < n.dim(s); ++k)
                    if (na(i, k)) {
                        auto& c = sys(row, off[s] + k * m.dim(s) + j);
                        c = fp_sub(c, na(i, k), p);
                    }
            }
    }
    Mat ker = eqs ? kernel_basis(sys) : Mat::identity(unknowns, p);
    std::vector<ModMap> basis;
    for (std::size_t c = 0; c < ker.cols(); ++c) basis.push_back(ModMap::from_flat(m, n, ker.col_vector(c)));
    return basis;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).size(); }

HomSpace::HomSpace(const Module& m, const Module& n) : m_(m), n_(n), basis_(hom_space(m, n)) {
    const std::size_t u = hom_unknowns(m, n);
    Mat cols(u, basis_.size(), m.p());
    for (std::size_t c = 0; c < basis_.size(); ++c) {
        auto f = basis_[c].flat();
        for (std::size_t r = 0; r < u; ++r) cols(r, c) = f[r];
    }
    solver_ = std::make_shared<SpanSolver>(cols);
}

std::optional<std::vector<Scalar>> HomSpace::coordinates(const ModMap& f) const {
    return solver_->solve(f.flat());
}

ModMap HomSpace::combination(const std::vector<Scalar>& coeffs) const {
    ModMap out = ModMap::zero(m_, n_);
    for (std::size_t i = 0; i < basis_.size() && i < coeffs.size(); ++i)
        if (coeffs[i]) out = out + basis_[i].scaled(coeffs[i]);
    return out;
}

namespace {

// A left inverse of a full-column-rank matrix.
Mat left_inverse(const Mat& b) {
    const Scalar p = b.p();
    if (b.cols() == 0) return Mat(0, b.rows(), p);
    Rref r = rref(b.transpose());
    if (r.rank != b.cols()) throw PreconditionError("basis columns are not independent");
    Mat sq = b.select_rows(r.pivots);
    Mat inv = *inverse(sq);
    Mat sel(b.cols(), b.rows(), p);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) sel(i, r.pivots[i]) = 1;
    return inv * sel;
}

}  // namespace

Submodule submodule(const Module& m, const std::vector<Mat>& bases) {
    const auto& alg = m.algebra();
    const std::size_t nv = m.num_vertices();
    if (bases.size() != nv) throw PreconditionError("submodule needs one basis per vertex");
    std::vector<Mat> lefts;
    std::vector<std::size_t> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        lefts.push_back(left_inverse(bases[v]));
        dims[v] = bases[v].cols();
    }
    std::vector<Mat> action;
    for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
        const auto& ar = alg->arrow(a);
        Mat image = m.action(a) * bases[ar.source];
        Mat x = lefts[ar.target] * image;
        if (bases[ar.target] * x != image) throw PreconditionError("subspace is not a submodule");
        action.push_back(x);
    }
    Module sub = Module::unchecked(alg, dims, std::move(action));
    return {sub, ModMap::unchecked(sub, m, bases)};
}

QuotientModule quotient(const Module& m, const std::vector<Mat>& bases) {
    const auto& alg = m.algebra();
    const Scalar p = m.p();
    const std::size_t nv = m.num_vertices();
    std::vector<Mat> proj(nv), sect(nv);
    std::vector<std::size_t> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const std::size_t n = m.dim(v);
        auto comp = complement_indices(bases[v], n);
        Mat e(n, comp.size(), p);
        for (std::size_t j = 0; j < comp.size(); ++j) e(comp[j], j) = 1;
        sect[v] = e;
        dims[v] = comp.size();
        if (n == 0) {
            proj[v] = Mat(0, 0, p);
            continue;
        }
        Mat t = hstack({bases[v], e});
        Mat tinv = *inverse(t);
        proj[v] = tinv.block(bases[v].cols(), 0, comp.size(), n);
    }
    std::vector<Mat> action;
    for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
        const auto& ar = alg->arrow(a);
        if (!(proj[ar.target] * m.action(a) * bases[ar.source]).is_zero())
            throw PreconditionError("subspace is not a submodule");
        action.push_back(proj[ar.target] * m.action(a) * sect[ar.source]);
    }
    Module q = Module::unchecked(alg, dims, std::move(action));
    return {q, ModMap::unchecked(m, q, proj)};
}

Submodule kernel(const ModMap& f) {
    std::vector<Mat> bases;
    for (const auto& b : f.blocks()) bases.push_back(kernel_basis(b));
    return submodule(f.source(), bases);
}

QuotientModule cokernel(const ModMap& f) {
    std::vector<Mat> bases;
    for (const auto& b : f.blocks()) bases.push_back(image_basis(b));
    return quotient(f.target(), bases);
}

Submodule image(const ModMap& f) {
    std::vector<Mat> bases;
    for (const auto& b : f.blocks()) bases.push_back(image_basis(b));
    return submodule(f.target(), bases);
}

DirectSum direct_sum(const std::vector<Module>& parts, const AlgebraPtr& alg) {
    const Scalar p = alg->p();
    const std::size_t nv = alg->num_vertices();
    for (const auto& m : parts)
        if (m.algebra() != alg) throw PreconditionError("direct sum of modules over different algebras");
    std::vector<std::size_t> dims(nv, 0);
    for (const auto& m : parts)
        for (std::size_t v = 0; v < nv; ++v) dims[v] += m.dim(v);
    std::vector<Mat> action;
    for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
        const auto& ar = alg->arrow(a);
        Mat x(dims[ar.target], dims[ar.source], p);
        std::size_t ro = 0, co = 0;
        for (const auto& m : parts) {
            x.set_block(ro, co, m.action(a));
            ro += m.dim(ar.target);
            co += m.dim(ar.source);
        }
        action.push_back(x);
    }
    DirectSum ds;
    ds.sum = Module::unchecked(alg, dims, std::move(action));
    std::vector<std::size_t> off(nv, 0);
    for (const auto& m : parts) {
        std::vector<Mat> inj, pr;
        for (std::size_t v = 0; v < nv; ++v) {
            Mat i(dims[v], m.dim(v), p), q(m.dim(v), dims[v], p);
            for (std::size_t k = 0; k < m.dim(v); ++k) {
                i(off[v] + k, k) = 1;
                q(k, off[v] + k) = 1;
            }
            inj.push_back(i);
            pr.push_back(q);
            off[v] += m.dim(v);
        }
        ds.injections.push_back(ModMap::unchecked(m, ds.sum, std::move(inj)));
        ds.projections.push_back(ModMap::unchecked(ds.sum, m, std::move(pr)));
    }
    return ds;
}

DirectSum direct_sum(const std::vector<Module>& parts) {
    if (parts.empty()) throw PreconditionError("direct sum of an empty list needs an algebra");
    return direct_sum(parts, parts.front().algebra());
}

ModMap matrix_map(const DirectSum& sources, const DirectSum& targets,
                  const std::vector<std::vector<ModMap>>& grid) {
    ModMap out = ModMap::zero(sources.sum, targets.sum);
    if (grid.size() != targets.injections.size())
        throw PreconditionError("matrix_map grid has the wrong number of rows");
    for (std::size_t r = 0; r < grid.size(); ++r) {
        if (grid[r].size() != sources.projections.size())
            throw PreconditionError("matrix_map grid has the wrong number of columns");
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            const ModMap& g = grid[r][c];
            if (!g.source().valid()) continue;
            out = out + targets.injections[r] * g * sources.projections[c];
        }
    }
    return out;
}

Module simple_module(const AlgebraPtr& alg, std::size_t v) {
    std::vector<std::size_t> dims(alg->num_vertices(), 0);
    dims[v] = 1;
    std::vector<Mat> action;
    for (std::size_t a = 0; a < alg->num_arrows(); ++a)
        action.emplace_back(dims[alg->arrow(a).target], dims[alg->arrow(a).source], alg->p());
    return Module::unchecked(alg, dims, std::move(action));
}

Module projective_module(const AlgebraPtr& alg, std::size_t v) {
    const std::size_t nv = alg->num_vertices();
    const Scalar p = alg->p();
    std::vector<std::size_t> dims(nv);
    for (std::size_t w = 0; w < nv; ++w) dims[w] = alg->basis_between(v, w).size();
    std::vector<Mat> action;
    for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
        const auto& ar = alg->arrow(a);
        const auto& from = alg->basis_between(v, ar.source);
        const auto& to = alg->basis_between(v, ar.target);
        Mat m(to.size(), from.size(), p);
        std::vector<Scalar> arrow_vec(alg->dimension(), 0);
        for (auto [k, c] : alg->arrow_element(a)) arrow_vec[k] = c;
        for (std::size_t j = 0; j < from.size(); ++j) {
            std::vector<Scalar> x(alg->dimension(), 0);
            x[from[j]] = 1;
            auto y = alg->multiply(x, arrow_vec);
            for (std::size_t i = 0; i < to.size(); ++i) m(i, j) = y[to[i]];
        }
        action.push_back(m);
    }
    return Module::unchecked(alg, dims, std::move(action));
}

Module injective_module(const AlgebraPtr& alg, std::size_t v) {
    return dual_module(projective_module(alg->opposite(), v));
}

std::vector<Module> indecomposable_projectives(const AlgebraPtr& alg) {
    std::vector<Module> out;
    for (std::size_t v = 0; v < alg->num_vertices(); ++v) out.push_back(projective_module(alg, v));
    return out;
}

std::vector<Module> indecomposable_injectives(const AlgebraPtr& alg) {
    std::vector<Module> out;
    for (std::size_t v = 0; v < alg->num_vertices(); ++v) out.push_back(injective_module(alg, v));
    return out;
}

Module regular_module(const AlgebraPtr& alg) {
    return direct_sum(indecomposable_projectives(alg), alg).sum;
}

Module jordan_block(const AlgebraPtr& alg, std::size_t k) {
    auto n = alg->nilpotent_loop_order();
    if (!n) throw PreconditionError("Jordan blocks need a nilpotent loop algebra");
    if (k == 0 || k > *n) throw PreconditionError("Jordan block size out of range");
    std::vector<Mat> action;
    if (alg->num_arrows() == 1) {
        Mat x(k, k, alg->p());
        for (std::size_t i = 0; i + 1 < k; ++i) x(i + 1, i) = 1;
        action.push_back(x);
    }
    return Module(alg, {k}, std::move(action));
}

Module dual_module(const Module& m) {
    auto op = m.algebra()->opposite();
    std::vector<Mat> action;
    for (std::size_t a = 0; a < op->num_arrows(); ++a) action.push_back(m.action(a).transpose());
    return Module::unchecked(op, m.dims(), std::move(action));
}

ModMap dual_map(const ModMap& f) {
    std::vector<Mat> blocks;
    for (const auto& b : f.blocks()) blocks.push_back(b.transpose());
    return ModMap::unchecked(dual_module(f.target()), dual_module(f.source()), std::move(blocks));
}

Submodule radical(const Module& m) {
    const auto& alg = m.algebra();
    const std::size_t nv = m.num_vertices();
    std::vector<std::vector<Mat>> parts(nv);
    for (std::size_t a = 0; a < alg->num_arrows(); ++a) parts[alg->arrow(a).target].push_back(m.action(a));
    std::vector<Mat> bases;
    for (std::size_t v = 0; v < nv; ++v) {
        if (parts[v].empty()) {
            bases.emplace_back(m.dim(v), 0, m.p());
            continue;
        }
        bases.push_back(image_basis(hstack(parts[v])));
    }
    return submodule(m, bases);
}

}  // namespace monocat
