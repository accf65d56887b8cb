#pragma once

#include <string>

#include "json.hpp"
#include "monocat/exact_structures.hpp"

namespace monocat {

using Json = nlohmann::ordered_json;

// {"vertices": [...], "arrows": [[src, tgt, "label"], ...],
//  "relations": [[[coeff, ["a", "b", ...]], ...], ...], "p": prime}
// Each relation is a list of terms; a bare [coeff, [labels]] is read as a
// one-term relation.
Json algebra_to_json(const Algebra& alg);
AlgebraPtr algebra_from_json(const Json& j, const std::string& name);

// "loop:N", "linear:M", "preprojective:M", or a path to an algebra file.
AlgebraPtr algebra_from_spec(const std::string& spec, Scalar p);

// {"algebra": id, "dims": [...], "action": {"label": [[...], ...]}}
Json module_to_json(const Module& m, const std::string& algebra_id);
Module module_from_json(const Json& j, const AlgebraPtr& alg);

Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, Scalar p);

// {"a": module, "b": module, "f": [block per vertex]}
Json morph_to_json(const MorphObj& x, const std::string& algebra_id);
MorphObj morph_from_json(const Json& j, const AlgebraPtr& base);

// {"start", "middle", "end": objects, "i", "p": {"phi1": blocks, "phi2": blocks}}
Json conflation_to_json(const Conflation& c, const std::string& algebra_id);
Conflation conflation_from_json(const Json& j, const AlgebraPtr& base);

}  // namespace monocat
