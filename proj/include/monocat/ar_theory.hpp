#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monocat/exact_structures.hpp"

namespace monocat {

// Almost split maps. The universe must list every indecomposable that can
// map into (resp. out of) the end term; maps of S are maps of T_2-modules,
// so the module versions serve both levels. End terms must be endo-local.
bool is_right_almost_split(const ModMap& p, const std::vector<Module>& universe);
bool is_left_almost_split(const ModMap& i, const std::vector<Module>& universe);
bool is_right_almost_split(const MorphMap& p, const std::vector<MorphObj>& universe);
bool is_left_almost_split(const MorphMap& i, const std::vector<MorphObj>& universe);

// Non-isomorphisms u -> y between indecomposables: rad(u, y).
std::vector<ModMap> radical_maps(const Module& u, const Module& y);

struct ArCandidate {
    Conflation conflation;
    StructureKind kind = StructureKind::Canonical;
};

// Endo-local end terms, left almost split inflation, right almost split deflation.
bool is_almost_split(const ArCandidate& c, const std::vector<MorphObj>& universe);

struct ArSearch {
    ArCandidate found;
    std::size_t candidates = 0;  // conflation classes tested
    std::size_t passing = 0;     // classes certified almost split, all with isomorphic middles
};
// Searches the conflation classes from each universe object to y. Throws
// PreconditionError if y is decomposable or kind-projective, and
// InconclusiveError if nothing within the universe is almost split.
ArSearch find_ar_conflation_ending_at(const MorphObj& y, StructureKind kind, const Subcat& sub,
                                      const std::vector<MorphObj>& universe);

// An almost split sequence ending at the indecomposable m among extensions
// with start in the universe and middle accepted by the filter.
std::optional<Extension> find_ar_sequence(const Module& m, const std::vector<Module>& universe,
                                          const std::function<bool(const Module&)>& middle_ok);
// The same in the exact category X, whose indecomposables are the generators.
std::optional<Extension> find_module_ar_sequence(const Module& m, const Subcat& sub);

// sigma_X M: the translates of the non-X-projective summands of M.
Module sigma_x(const Module& m, const Subcat& sub);

// M without the summands satisfying drop.
Module strip_summands(const Module& m, const std::function<bool(const Module&)>& drop);
MorphObj strip_summands(const MorphObj& x, const std::function<bool(const MorphObj&)>& drop);

// D Tr M from a minimal projective presentation; zero on projectives.
Module dtr(const Module& m);

struct CorollaryReport {
    bool e1 = false, e2 = false;
    MorphObj translate;            // start of the almost split conflation ending at x
    Module sigma_x2, sigma_cok;    // sigma_X of X_2 and of Cok f
    std::string detail;
    bool pass() const { return e1 && e2; }
};
// e^1 of the translate against sigma_X X_2 and e^2 against sigma_X Cok f,
// compared after removing X-injective summands.
CorollaryReport check_e1_e2_corollary(const MorphObj& x, const Subcat& sub, const std::vector<MorphObj>& universe);

struct TranslateAgreement {
    bool pass = false;
    std::vector<MorphObj> starts;  // per kind, kind-injective summands removed
    std::string detail;
};
// For y not SCW-projective, the translates under the three structures agree.
TranslateAgreement check_translate_agreement(const MorphObj& y, const Subcat& sub,
                                             const std::vector<MorphObj>& universe);

}  // namespace monocat
