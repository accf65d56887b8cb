#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "monocat/homology.hpp"

namespace monocat {

struct CheckResult {
    bool pass = true;
    std::string detail;
    std::optional<Module> witness;
};

// add(G_1, ..., G_r) for pairwise non-isomorphic indecomposables G_i.
class Subcat {
public:
    Subcat(AlgebraPtr alg, const std::vector<Module>& generators);
    // mod A itself, from the enumerated indecomposables up to the bound.
    static Subcat all(const AlgebraPtr& alg, std::size_t bound);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Module>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_whole_category() const { return whole_; }

    // Index of the generator isomorphic to the indecomposable m, or npos.
    std::size_t index_of(const Module& m) const;
    bool contains(const Module& m) const;

    // Indecomposable X-injectives / X-projectives among the generators:
    // Ext^1 classes with all terms in X vanish against every generator.
    const std::vector<std::size_t>& injective_indices() const;
    const std::vector<std::size_t>& projective_indices() const;
    bool is_x_injective(const Module& m) const;
    bool is_x_projective(const Module& m) const;
    // verify_enough_injectives, computed once.
    const CheckResult& enough_injectives() const;

private:
    AlgebraPtr alg_;
    std::vector<Module> gens_;
    bool whole_ = false;
    struct Cache {
        std::mutex mu;
        std::optional<std::vector<std::size_t>> injectives, projectives;
        std::optional<CheckResult> enough;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct ResolvingReport {
    CheckResult contains_projectives;
    CheckResult closed_under_extensions;
    CheckResult closed_under_epi_kernels;
    CheckResult closed_under_summands;
    bool bounded_only = false;
    bool resolving() const {
        return contains_projectives.pass && closed_under_extensions.pass && closed_under_epi_kernels.pass &&
               closed_under_summands.pass;
    }
};

ResolvingReport validate_resolving(const Subcat& x, std::size_t dim_bound);

struct ExtClass {
    std::vector<Scalar> coords;
    Extension sequence;
};
// One sequence per class of Ext^1(z, x); the zero class is the split one.
std::vector<ExtClass> ext1_middle_terms(const Module& z, const Module& x);

// Evaluation map: sum over generators G of G^{dim Hom(G, M)} -> M.
ModMap right_approximation(const Subcat& x, const Module& m);
// Coevaluation map: M -> sum over generators G of G^{dim Hom(M, G)}.
ModMap left_approximation(const Subcat& x, const Module& m);
// Hom(G, f) onto for every generator G.
bool is_right_approximation(const Subcat& x, const ModMap& f);
bool is_left_approximation(const Subcat& x, const ModMap& f);

// A conflation 0 -> M -> I -> L -> 0 with I in add(X-injectives) and L in X,
// built from the coevaluation map into the X-injectives. Empty when that map
// is not a monomorphism with cokernel in X.
std::optional<Extension> x_injective_inflation(const Subcat& x, const Module& m);
// Dually 0 -> K -> P -> M -> 0 with P in add(X-projectives) and K in X.
std::optional<Extension> x_projective_deflation(const Subcat& x, const Module& m);

// Every generator admits x_injective_inflation.
CheckResult verify_enough_injectives(const Subcat& x);

}  // namespace monocat
