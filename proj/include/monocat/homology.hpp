#pragma once

#include <optional>
#include <vector>

#include "monocat/modules.hpp"

namespace monocat {

// Hom(M, N) modulo the subspace spanned by some maps.
class HomQuotient {
public:
    HomQuotient(HomSpace space, const std::vector<ModMap>& generators);
    const HomSpace& space() const { return space_; }
    std::size_t dim() const { return reps_.size(); }
    std::size_t sub_dim() const { return sub_dim_; }
    // Maps whose classes form a basis of the quotient.
    const std::vector<ModMap>& representatives() const { return reps_; }
    ModMap combination(const std::vector<Scalar>& coeffs) const;
    // Quotient coordinates of f; throws PreconditionError if f is not a map M -> N.
    std::vector<Scalar> coordinates(const ModMap& f) const;
    bool in_subspace(const ModMap& f) const;

private:
    HomSpace space_;
    std::size_t sub_dim_ = 0;
    std::vector<ModMap> reps_;
    std::shared_ptr<SpanSolver> solver_;  // over [subspace | complement]
};

struct ProjectiveCover {
    Module cover;
    ModMap projection;
    std::vector<std::size_t> tops;  // vertex of each indecomposable summand, in order
};
ProjectiveCover projective_cover(const Module& m);

struct Syzygy {
    Module module;
    ModMap inclusion;  // into cover.cover
    ProjectiveCover cover;
};
Syzygy syzygy(const Module& m);

struct InjectiveEnvelope {
    Module envelope;
    ModMap inclusion;
    std::vector<std::size_t> socles;
};
InjectiveEnvelope injective_envelope(const Module& m);

bool is_projective(const Module& m);
bool is_injective(const Module& m);

// h with p * h = g, if one exists.
std::optional<ModMap> factor_through_right(const ModMap& g, const ModMap& p);
// h with h * i = g, if one exists.
std::optional<ModMap> factor_through_left(const ModMap& g, const ModMap& i);
// For an epi q: M -> Q and g: M -> N vanishing on ker q, the map u with u * q = g.
ModMap descend(const ModMap& q, const ModMap& g);
// For a mono i: K -> M and g: T -> M landing in im i, the map u with i * u = g.
ModMap through_mono(const ModMap& i, const ModMap& g);

bool is_split_mono(const ModMap& i);
bool is_split_epi(const ModMap& p);

struct Pushout {
    Module object;
    ModMap from_b;  // B -> object
    ModMap from_c;  // C -> object
    DirectSum sum;  // B + C
    ModMap quotient_map;  // B + C -> object
};
// Pushout of B <-f- A -g-> C.
Pushout pushout(const ModMap& f, const ModMap& g);

struct Pullback {
    Module object;
    ModMap to_b;
    ModMap to_c;
    DirectSum sum;
    ModMap inclusion;  // object -> B + C
};
// Pullback of B -f-> D <-g- C.
Pullback pullback(const ModMap& f, const ModMap& g);

struct Extension {
    ModMap inflation;  // X -> E
    ModMap deflation;  // E -> Z
    const Module& middle() const { return inflation.target(); }
};

// Ext^1(Z, X) = coker(Hom(P_Z, X) -> Hom(Omega Z, X)).
class ExtSpace {
public:
    ExtSpace(const Module& z, const Module& x);
    const Module& end() const { return z_; }
    const Module& start() const { return x_; }
    const Syzygy& syzygy_data() const { return omega_; }
    std::size_t dim() const { return quotient_.dim(); }
    const HomQuotient& quotient() const { return quotient_; }
    // The short exact sequence of the class with the given coordinates.
    Extension extension(const std::vector<Scalar>& coeffs) const;
    // Class of the sequence 0 -> X -i-> E -p-> Z -> 0.
    std::vector<Scalar> class_of(const ModMap& i, const ModMap& p) const;
    // The sequence obtained by pushing out the cover sequence along h: Omega Z -> X.
    Extension extension_from(const ModMap& h) const;

private:
    Module z_, x_;
    Syzygy omega_;
    HomQuotient quotient_;
};

std::size_t ext1_dim(const Module& z, const Module& x);

// Hom(M, N) modulo maps through projectives (those through P_N -> N).
HomQuotient stable_hom_space(const Module& m, const Module& n);
// Hom(M, N) modulo maps through injectives (those through M -> I_M).
HomQuotient costable_hom_space(const Module& m, const Module& n);

// Every nonzero p-ary vector of the given length (for exhaustive searches).
std::vector<std::vector<Scalar>> all_vectors(std::size_t length, Scalar p, bool include_zero);

}  // namespace monocat
