#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monocat/algebra.hpp"
#include "monocat/linalg.hpp"

namespace monocat {

// A finite-dimensional right module, i.e. a representation of the quiver
// satisfying the relations. Cheap to copy (shared immutable data).
class Module {
public:
    Module() = default;
    Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> action);
    // Skips the relation check; for internally constructed modules.
    static Module unchecked(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> action);
    static Module zero(const AlgebraPtr& alg);

    const AlgebraPtr& algebra() const { return d_->alg; }
    Scalar p() const { return d_->alg->p(); }
    const std::vector<std::size_t>& dims() const { return d_->dims; }
    std::size_t dim(std::size_t v) const { return d_->dims[v]; }
    std::size_t offset(std::size_t v) const { return d_->offsets[v]; }
    std::size_t total_dim() const { return d_->total; }
    std::size_t num_vertices() const { return d_->dims.size(); }
    const Mat& action(std::size_t arrow) const { return d_->action[arrow]; }
    const std::vector<Mat>& actions() const { return d_->action; }
    bool is_zero() const { return d_->total == 0; }
    bool valid() const { return static_cast<bool>(d_); }

    // Matrix of a path or basis element: from the source vertex space to the target one.
    Mat path_action(const PathTerm& path) const;
    Mat element_action(std::size_t basis_index) const;

    // Shapes and relations; throws InputError naming the failing relation.
    void validate() const;
    bool same_shape(const Module& o) const;
    bool operator==(const Module& o) const;
    std::string describe() const;

private:
    struct Data {
        AlgebraPtr alg;
        std::vector<std::size_t> dims;
        std::vector<std::size_t> offsets;
        std::size_t total = 0;
        std::vector<Mat> action;
    };
    std::shared_ptr<const Data> d_;
    static std::shared_ptr<const Data> make(AlgebraPtr alg, std::vector<std::size_t> dims,
                                            std::vector<Mat> action);
};

// A module homomorphism given by one matrix per vertex.
class ModMap {
public:
    ModMap() = default;
    // Checks shapes and the intertwining relations.
    ModMap(Module source, Module target, std::vector<Mat> blocks);
    static ModMap unchecked(Module source, Module target, std::vector<Mat> blocks);
    static ModMap zero(const Module& source, const Module& target);
    static ModMap identity(const Module& m);
    // From concatenated row-major block entries.
    static ModMap from_flat(const Module& source, const Module& target, const std::vector<Scalar>& flat);

    const Module& source() const { return src_; }
    const Module& target() const { return tgt_; }
    const Mat& block(std::size_t v) const { return blocks_[v]; }
    const std::vector<Mat>& blocks() const { return blocks_; }
    std::vector<Scalar> flat() const;
    // Block-diagonal matrix on the total spaces.
    Mat total() const;

    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_iso() const;
    std::optional<ModMap> inverse() const;

    ModMap operator+(const ModMap& o) const;
    ModMap operator-(const ModMap& o) const;
    ModMap operator-() const;
    ModMap scaled(Scalar s) const;
    bool operator==(const ModMap& o) const { return blocks_ == o.blocks_; }

private:
    Module src_, tgt_;
    std::vector<Mat> blocks_;
};

// g * f is g after f.
ModMap operator*(const ModMap& g, const ModMap& f);

// Number of unknowns in a ModMap between modules of the given shapes.
std::size_t hom_unknowns(const Module& m, const Module& n);

// A basis of Hom(m, n) together with a coordinate solver.
class HomSpace {
public:
    HomSpace(const Module& m, const Module& n);
    const Module& source() const { return m_; }
    const Module& target() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<ModMap>& basis() const { return basis_; }
    const ModMap& operator[](std::size_t i) const { return basis_[i]; }
    std::optional<std::vector<Scalar>> coordinates(const ModMap& f) const;
    ModMap combination(const std::vector<Scalar>& coeffs) const;

private:
    Module m_, n_;
    std::vector<ModMap> basis_;
    std::shared_ptr<SpanSolver> solver_;
};

std::vector<ModMap> hom_space(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

struct Submodule {
    Module module;
    ModMap inclusion;
};
struct QuotientModule {
    Module module;
    ModMap projection;
};

// Submodule spanned at each vertex by the given columns (assumed independent
// and invariant; invariance is checked).
Submodule submodule(const Module& m, const std::vector<Mat>& bases);
// Quotient by the submodule spanned by the given columns (checked invariant).
QuotientModule quotient(const Module& m, const std::vector<Mat>& bases);

Submodule kernel(const ModMap& f);
QuotientModule cokernel(const ModMap& f);
Submodule image(const ModMap& f);

struct DirectSum {
    Module sum;
    std::vector<ModMap> injections;
    std::vector<ModMap> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts, const AlgebraPtr& alg);
DirectSum direct_sum(const std::vector<Module>& parts);

// A map between direct sums given by a grid of component maps grid[row][col]:
// sources[col] -> targets[row]. Missing entries (invalid maps) mean zero.
ModMap matrix_map(const DirectSum& sources, const DirectSum& targets,
                  const std::vector<std::vector<ModMap>>& grid);

Module simple_module(const AlgebraPtr& alg, std::size_t v);
// P(v) = e_v A.
Module projective_module(const AlgebraPtr& alg, std::size_t v);
// I(v) = D(A e_v).
Module injective_module(const AlgebraPtr& alg, std::size_t v);
std::vector<Module> indecomposable_projectives(const AlgebraPtr& alg);
std::vector<Module> indecomposable_injectives(const AlgebraPtr& alg);
// The regular module A_A.
Module regular_module(const AlgebraPtr& alg);
// Jordan block J_k over k[x]/(x^n): x shifts the basis down.
Module jordan_block(const AlgebraPtr& alg, std::size_t k);

// D M = Hom_k(M, k), a module over the opposite algebra.
Module dual_module(const Module& m);
// D f : D N -> D M.
ModMap dual_map(const ModMap& f);

// Top and radical: rad M = sum of images of arrows.
Submodule radical(const Module& m);

}  // namespace monocat
