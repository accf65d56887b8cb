#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "monocat/linalg.hpp"

namespace monocat {

// A finite-dimensional unital algebra given by coordinates, a product, and a
// faithful matrix representation (used for minimal polynomials).
struct AlgebraOps {
    Scalar p = 2;
    std::size_t dim = 0;
    std::vector<Scalar> one;
    std::function<std::vector<Scalar>(const std::vector<Scalar>&, const std::vector<Scalar>&)>
        multiply;
    std::function<Mat(const std::vector<Scalar>&)> represent;
};

struct LocalAnalysis {
    enum class Verdict { Local, Split, Unknown };
    Verdict verdict = Verdict::Unknown;
    // For Split: an element that is neither nilpotent nor invertible.
    std::vector<Scalar> splitter;
    // For Local: a basis of the Jacobson radical, one vector per element.
    std::vector<std::vector<Scalar>> radical;
};

// Decide whether the algebra is local. A Local verdict is certified: the
// radical candidate is a nilpotent two-sided ideal with a field as quotient.
// A Split verdict comes with an explicit witness. Unknown only when the
// randomized search for a witness runs out of trials.
LocalAnalysis analyze_local(const AlgebraOps& e, std::size_t random_trials = 96,
                            std::uint64_t seed = 0x5eed);

// Evaluate a polynomial at an algebra element.
std::vector<Scalar> eval_in_algebra(const AlgebraOps& e, const std::vector<Scalar>& poly,
                                    const std::vector<Scalar>& x);

}  // namespace monocat
