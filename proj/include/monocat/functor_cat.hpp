#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocat/exact_structures.hpp"

namespace monocat {

// Gamma = stable endomorphism algebra of the sum of the non-projective
// generators X_0, ..., X_{r-1} of X. The block e_s Gamma e_t is the stable
// Hom(X_t, X_s) and the product uv is the composite u o v, so right
// Gamma-modules are contravariant functors on the stable category.
class StableAuslander {
public:
    explicit StableAuslander(const Subcat& sub);

    const AlgebraPtr& gamma() const { return gamma_; }
    const Subcat& subcat() const { return sub_; }
    std::size_t num_vertices() const { return objects_.size(); }
    const Module& object(std::size_t v) const { return objects_[v]; }
    std::size_t generator_index(std::size_t v) const { return gen_index_[v]; }
    // Representative X_t -> X_s of the k-th basis element of block (s, t).
    const ModMap& lift(std::size_t s, std::size_t t, std::size_t k) const { return lifts_[s][t][k]; }
    std::size_t block_dim(std::size_t s, std::size_t t) const { return lifts_[s][t].size(); }
    // Coordinates of the stable class of g: X_t -> X_s in the block basis.
    std::vector<Scalar> coordinates(std::size_t s, std::size_t t, const ModMap& g) const;
    // A representative of an element of Gamma lying in block (s, t).
    ModMap lift_element(std::size_t s, std::size_t t, const std::vector<Scalar>& global) const;
    // Maps X_t -> X_s through projectives, spanning the kernel of the stable projection.
    std::vector<ModMap> null_maps(std::size_t s, std::size_t t) const;

private:
    Subcat sub_;
    std::vector<Module> objects_;
    std::vector<std::size_t> gen_index_;
    std::vector<std::vector<std::vector<ModMap>>> lifts_;
    std::vector<std::vector<HomQuotient>> quotients_;
    std::vector<std::vector<Mat>> change_;  // quotient coordinates -> block coordinates
    AlgebraPtr gamma_;
};

// The functor coker(Hom(-, B) -> Hom(-, C)) on the stable category, for an
// epimorphism q: B -> C between modules of X, as a Gamma-module.
Module cokernel_functor(const ModMap& q, const StableAuslander& g);
// The induced map for a commutative square q' b = c q.
ModMap cokernel_functor_map(const ModMap& q, const ModMap& q2, const ModMap& c, const StableAuslander& g);

// Psi(A -f-> B) = coker((-, B) -> (-, Cok f)).
Module psi_object(const MorphObj& x, const StableAuslander& g);
ModMap psi_morphism(const MorphMap& m, const StableAuslander& g);

// Does the Gamma-action of psi_object(x) vanish on every map through projectives?
bool psi_action_well_defined(const MorphObj& x, const StableAuslander& g);

// Ext^1(-, X)|_X from 0 -> X -> I -> L -> 0 with I X-injective.
Module ext1_injective_functor(const Module& x, const StableAuslander& g);

struct PropertyCheck {
    std::string name;
    bool pass = true;
    std::size_t instances = 0;
    std::string detail;
};

struct PsiReport {
    PropertyCheck exactness;           // SCW conflations go to short exact sequences
    PropertyCheck canonical_failure;   // some Canonical conflation does not
    PropertyCheck density;
    PropertyCheck fullness;
    PropertyCheck objectivity;
    std::size_t density_hits = 0;      // indecomposable Gamma-modules reached
    bool all_pass() const {
        return exactness.pass && canonical_failure.pass && density.pass && fullness.pass && objectivity.pass;
    }
};
// gamma_bound limits the enumeration of indecomposable Gamma-modules.
PsiReport verify_psi_properties(const StableAuslander& g, const ConflationCatalog& cat, std::size_t gamma_bound);

struct StableEquivalenceReport {
    PropertyCheck bijection;
    PropertyCheck hom_dimensions;
    std::size_t stable_objects = 0;  // non-SCW-projective S-indecomposables
    std::vector<std::vector<std::size_t>> s_table, gamma_table;
    bool all_pass() const { return bijection.pass && hom_dimensions.pass; }
};
StableEquivalenceReport stable_equivalence_check(const StableAuslander& g, const std::vector<MorphObj>& universe,
                                                 std::size_t gamma_bound);

// An object of S with Psi isomorphic to m, assembled from the universe, and the isomorphism Psi(obj) -> m.
struct Preimage {
    MorphObj object;
    ModMap iso;
};
Preimage psi_preimage(const Module& m, const StableAuslander& g, const std::vector<MorphObj>& universe);

// 0 -> K -i-> F -p-> L -> 0 in mod Gamma.
struct GammaExtension {
    ModMap i, p;
};
// SCW conflations, one per piece, whose Psi-images are isomorphic to the
// pieces as extensions. Terms that are equal modules across pieces get the
// same preimage, so consecutive pieces splice.
std::vector<Conflation> horseshoe_lift(const std::vector<GammaExtension>& pieces, const StableAuslander& g,
                                       const std::vector<MorphObj>& universe);

}  // namespace monocat
