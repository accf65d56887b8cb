#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocat/decompose.hpp"
#include "monocat/subcategory.hpp"

namespace monocat {

// An object (A -f-> B) of the morphism category, kept together with its
// realization as a module over T_2(Lambda): vertex v@1 carries A_v, v@2
// carries B_v, and the arrow c_v acts by f_v.
class MorphObj {
public:
    MorphObj() = default;
    explicit MorphObj(const ModMap& f);
    static MorphObj from_t2(const Module& m);

    const Module& a() const { return f_.source(); }
    const Module& b() const { return f_.target(); }
    const ModMap& f() const { return f_; }
    const Module& t2() const { return t2_; }
    const AlgebraPtr& base() const { return f_.source().algebra(); }
    std::size_t total_dim() const { return t2_.total_dim(); }
    bool is_zero() const { return t2_.is_zero(); }
    bool is_mono() const { return f_.is_injective(); }
    bool is_epi() const { return f_.is_surjective(); }
    std::string describe() const;

private:
    ModMap f_;
    Module t2_;
};

// (phi1, phi2): (A -f-> B) -> (C -g-> D) with phi2 f = g phi1.
class MorphMap {
public:
    MorphMap() = default;
    MorphMap(MorphObj source, MorphObj target, ModMap phi1, ModMap phi2);
    static MorphMap unchecked(MorphObj source, MorphObj target, ModMap phi1, ModMap phi2);
    static MorphMap from_t2(const MorphObj& source, const MorphObj& target, const ModMap& m);
    static MorphMap identity(const MorphObj& x);
    static MorphMap zero(const MorphObj& x, const MorphObj& y);

    const MorphObj& source() const { return src_; }
    const MorphObj& target() const { return tgt_; }
    const ModMap& phi1() const { return phi1_; }
    const ModMap& phi2() const { return phi2_; }
    ModMap to_t2() const;
    bool is_zero() const { return phi1_.is_zero() && phi2_.is_zero(); }
    MorphMap operator+(const MorphMap& o) const;
    MorphMap scaled(Scalar s) const;

private:
    MorphObj src_, tgt_;
    ModMap phi1_, phi2_;
};

MorphMap operator*(const MorphMap& g, const MorphMap& f);

std::vector<MorphMap> morph_hom_space(const MorphObj& x, const MorphObj& y);

// Simple constructions.
MorphObj zero_to(const Module& m);   // (0 -> M)
MorphObj identity_obj(const Module& m);  // (M = M)
MorphObj zero_from(const Module& m);  // (M -> 0)

// Cok f.
QuotientModule coker_module(const MorphObj& x);

// Monomorphism with A, B and Cok f in the subcategory.
bool is_object_of_S(const MorphObj& x, const Subcat& sub);

// (A -f-> B) with f mono goes to (B -> Cok f); on maps, the induced map.
MorphObj cok_functor(const MorphObj& x);
MorphMap cok_functor(const MorphMap& m);
// (B -g-> C) with g epi goes to (Ker g -> B).
MorphObj ker_functor(const MorphObj& y);
MorphMap ker_functor(const MorphMap& m);

struct MorphSummand {
    MorphObj object;
    std::size_t multiplicity;
};
std::vector<MorphSummand> decompose_morph(const MorphObj& x);
bool is_indecomposable_morph(const MorphObj& x);
std::optional<MorphMap> morph_isomorphism(const MorphObj& x, const MorphObj& y);
inline bool morph_isomorphic(const MorphObj& x, const MorphObj& y) { return morph_isomorphism(x, y).has_value(); }
std::size_t find_isomorphic_morph(const std::vector<MorphObj>& list, const MorphObj& x);

// Every g in End(target) with g f = f is invertible.
bool is_left_minimal(const ModMap& f);
bool is_right_minimal(const ModMap& f);

struct LeftMinimalSplit {
    MorphObj minimal;        // (X -> I_1), left minimal
    Module rest;             // I_2, with (X -> I_2) zero
    ModMap include_minimal;  // I_1 -> I
    ModMap include_rest;     // I_2 -> I
    ModMap project_minimal;  // I -> I_1
    ModMap project_rest;     // I -> I_2
};
LeftMinimalSplit split_left_minimal(const ModMap& f);

// Indecomposables of S_X(Lambda) with dim A + dim B at most bound.
std::vector<MorphObj> enumerate_S_indecomposables(const Subcat& sub, std::size_t bound);

}  // namespace monocat
