#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocat/morphism_cat.hpp"

namespace monocat {

enum class StructureKind { Canonical, CW, SCW };
inline constexpr StructureKind kAllKinds[] = {StructureKind::Canonical, StructureKind::CW, StructureKind::SCW};
std::string to_string(StructureKind k);
// "canonical", "cw", "scw" (case-insensitive); throws InputError otherwise.
StructureKind parse_kind(const std::string& s);

// 0 -> X -i-> Z -p-> Y -> 0 in H(Lambda).
struct Conflation {
    MorphMap i;
    MorphMap p;
    const MorphObj& start() const { return i.source(); }
    const MorphObj& middle() const { return i.target(); }
    const MorphObj& end() const { return p.target(); }
};

// Checks p i = 0 and exactness of both component rows at every vertex;
// throws PreconditionError naming the first defect.
// Empty when 0 -> X -i-> Z -p-> Y -> 0 is exact, else where it fails.
std::optional<std::string> short_exact_defect(const ModMap& i, const ModMap& p);

Conflation make_conflation(MorphMap i, MorphMap p);
void validate_conflation(const Conflation& c);

// Some r with r i = 1. Throws PreconditionError when (i, p) is not short exact.
bool is_split_ses(const ModMap& i, const ModMap& p);

// Membership in E (all terms in S_X), E^cw (both component rows split) or
// E^scw (also the induced row of cokernels splits).
bool is_conflation(StructureKind kind, const Conflation& c, const Subcat& sub);

// Completions of a deflation / inflation in H(Lambda) by its kernel / cokernel.
Conflation conflation_from_deflation(const MorphMap& p);
Conflation conflation_from_inflation(const MorphMap& i);

// One conflation per class of Ext^1_{T_2}(y, x) whose middle term lies in S_X
// and which belongs to the given kind. The zero class comes first.
std::vector<Conflation> enumerate_conflations(StructureKind kind, const MorphObj& x, const MorphObj& y,
                                              const Subcat& sub);

// All classes between members of a universe of indecomposables, with the
// verdict for each kind precomputed.
struct CatalogEntry {
    std::size_t start, end;  // indices into the universe
    std::vector<Scalar> coords;
    Conflation conflation;
    bool member[3];  // indexed by StructureKind
    bool in(StructureKind k) const { return member[static_cast<int>(k)]; }
};
struct ConflationCatalog {
    std::vector<MorphObj> universe;
    std::vector<CatalogEntry> entries;
};
ConflationCatalog conflation_catalog(const Subcat& sub, const std::vector<MorphObj>& universe);

// Closed forms for indecomposable projectives / injectives of each kind;
// decomposable x is tested summand by summand.
bool classify_projective(StructureKind kind, const MorphObj& x, const Subcat& sub);
// Throws PreconditionError("enough injectives not verified for X") when X
// fails verify_enough_injectives.
bool classify_injective(StructureKind kind, const MorphObj& x, const Subcat& sub);

// Lifting oracles over the catalog: every map x -> W lifts through every
// deflation onto W (resp. extends along every inflation out of W). Only as
// strong as the catalog is complete.
bool brute_force_projective(StructureKind kind, const MorphObj& x, const ConflationCatalog& cat);
bool brute_force_injective(StructureKind kind, const MorphObj& x, const ConflationCatalog& cat);

// A conflation of the kind ending at x with kind-projective middle term.
Conflation standard_projective_deflation(StructureKind kind, const MorphObj& x, const Subcat& sub);
// A conflation of the kind starting at x with kind-injective middle term.
Conflation standard_injective_inflation(StructureKind kind, const MorphObj& x, const Subcat& sub);

struct DimensionResult {
    std::size_t value = 0;
    bool capped = false;  // value == cap and still not resolved
};
DimensionResult projective_dimension(StructureKind kind, const MorphObj& x, const Subcat& sub, std::size_t cap);
DimensionResult injective_dimension(StructureKind kind, const MorphObj& x, const Subcat& sub, std::size_t cap);

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::size_t instances = 0;
    std::string detail;
    std::optional<Conflation> witness;
};
struct AxiomReport {
    StructureKind kind;
    std::vector<AxiomCheck> checks;
    bool sampled = false;  // some hom spaces were too large to run through exhaustively
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};
// E0, E0op, E1, E1op, E2, E2op on the catalog.
AxiomReport check_axioms(StructureKind kind, const Subcat& sub, const ConflationCatalog& cat);

}  // namespace monocat
