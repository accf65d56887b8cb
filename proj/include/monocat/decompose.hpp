#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "monocat/local.hpp"
#include "monocat/modules.hpp"

namespace monocat {

// End(M) as an abstract algebra in the coordinates of a HomSpace basis.
AlgebraOps endomorphism_ops(const HomSpace& end);

// Certified: the endomorphism ring is local. The zero module is not indecomposable.
// Throws InconclusiveError if locality can be neither proved nor refuted.
bool is_indecomposable(const Module& m);

struct Summand {
    Module module;
    ModMap inclusion;   // summand -> M
    ModMap projection;  // M -> summand
};

struct IsoClass {
    Module representative;
    std::vector<std::size_t> members;  // indices into Decomposition::summands
    std::size_t multiplicity() const { return members.size(); }
};

struct Decomposition {
    std::vector<Summand> summands;  // indecomposable, sum of inclusion*projection = id
    std::vector<IsoClass> classes;
};

// Krull-Schmidt decomposition by Fitting splitting of non-local endomorphism rings.
Decomposition decompose(const Module& m);

// Isomorphism between indecomposables: some composite g*f of basis maps is invertible.
std::optional<ModMap> indecomposable_isomorphism(const Module& m, const Module& n);

// General isomorphism test with witness; falls back on comparing decompositions.
std::optional<ModMap> isomorphism(const Module& m, const Module& n);
inline bool is_isomorphic(const Module& m, const Module& n) { return isomorphism(m, n).has_value(); }

// Index of the first entry of `list` isomorphic to the indecomposable m, or npos.
std::size_t find_isomorphic(const std::vector<Module>& list, const Module& m);

// Extension closure: starting from seeds, repeatedly form extensions
// 0 -> S -> E -> Z_1 + ... + Z_r -> 0 with S a bottom and Z_i known
// indecomposables, keeping middles that pass the filter, and collecting their
// indecomposable summands of total dimension at most the bound.
struct ClosureSpec {
    AlgebraPtr algebra;
    std::vector<Module> bottoms;
    std::vector<Module> seeds;
    std::function<bool(const Module&)> accept;  // optional filter on middles
    std::size_t bound = 0;
};
std::vector<Module> extension_closure(const ClosureSpec& spec);

// All indecomposables of total dimension at most bound, up to isomorphism.
// Nilpotent loop algebras use Jordan blocks directly.
std::vector<Module> enumerate_indecomposables(const AlgebraPtr& alg, std::size_t bound);

// Brute force: every action tuple for every dimension vector, filtered by
// relations and indecomposability, deduplicated. Only for tiny cases.
std::vector<Module> enumerate_indecomposables_exhaustive(const AlgebraPtr& alg, std::size_t bound,
                                                         std::size_t max_entries = 20);

// Deterministic ordering: by total dimension, then dimension vector.
void sort_modules(std::vector<Module>& ms);

}  // namespace monocat
