#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "monocat/linalg.hpp"

namespace monocat {

struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    std::string label;
};

// A linear combination term: coefficient times a path, arrows listed in the
// order they are traversed. An empty arrow list is the trivial path at
// `vertex`.
struct PathTerm {
    Scalar coeff = 1;
    std::vector<std::size_t> arrows;
    std::size_t vertex = 0;
};

struct Relation {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<PathTerm> terms;
};

struct QuiverPresentation {
    Scalar p = 2;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    std::size_t arrow_index(const std::string& label) const;
    std::size_t vertex_index(const std::string& name) const;
    // Checks indices, relation endpoints, and that p is a supported prime.
    void validate() const;
};

// Morphism data for building an algebra from a category: for each ordered pair
// (s, t) a basis of "paths" from s to t, identities on the diagonal, and the
// structure constants of concatenation (s -> t) then (t -> r).
struct HomTable {
    Scalar p = 2;
    std::vector<std::string> objects;
    std::vector<std::vector<std::size_t>> dims;  // dims[s][t]
    std::vector<std::size_t> identity;           // index of e_s within block (s, s)
    // compose(s, t, r, i, j): coordinates in block (s, r) of i-th (s,t) times j-th (t,r).
    std::function<std::vector<Scalar>(std::size_t, std::size_t, std::size_t, std::size_t,
                                      std::size_t)>
        compose;
};

// Basic finite-dimensional algebra kQ/I, given by a basis of elements each
// living in some e_s A e_t, structure constants, and a quiver presentation.
// Right modules are representations; the matrix of a path is the product of
// arrow matrices in reverse traversal order.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    struct BasisElement {
        std::size_t source = 0;
        std::size_t target = 0;
        std::string label;
        // The element written as a combination of paths in the quiver.
        std::vector<PathTerm> expression;
    };
    using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

    // Relations must be homogeneous with respect to path length.
    static std::shared_ptr<const Algebra> from_presentation(QuiverPresentation pres,
                                                            std::string name,
                                                            std::size_t max_length = 64);
    static std::shared_ptr<const Algebra> from_hom_table(const HomTable& table, std::string name);

    const std::string& name() const { return name_; }
    Scalar p() const { return pres_.p; }
    const QuiverPresentation& presentation() const { return pres_; }
    std::size_t num_vertices() const { return pres_.vertices.size(); }
    std::size_t num_arrows() const { return pres_.arrows.size(); }
    const Arrow& arrow(std::size_t a) const { return pres_.arrows[a]; }
    std::size_t dimension() const { return basis_.size(); }
    const BasisElement& basis(std::size_t i) const { return basis_[i]; }
    // Indices of basis elements in e_s A e_t.
    const std::vector<std::size_t>& basis_between(std::size_t s, std::size_t t) const {
        return between_[s * num_vertices() + t];
    }
    std::size_t idempotent(std::size_t v) const { return idempotents_[v]; }
    const Sparse& product(std::size_t i, std::size_t j) const {
        return products_[i * dimension() + j];
    }
    const Sparse& arrow_element(std::size_t a) const { return arrow_elements_[a]; }
    std::size_t loewy_length() const { return loewy_length_; }

    // Dense product of two elements in basis coordinates.
    std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

    // Set when built by build_nilpotent_loop.
    std::optional<std::size_t> nilpotent_loop_order() const { return loop_order_; }
    // Set on T_2 algebras: the algebra it was built from.
    std::shared_ptr<const Algebra> t2_base() const { return t2_base_.lock(); }

    // The opposite algebra, cached.
    std::shared_ptr<const Algebra> opposite() const;
    // T_2(this), cached. Requires a homogeneous presentation.
    std::shared_ptr<const Algebra> t2() const;

    // Associativity and unit checks on the structure constants.
    void check_structure() const;

private:
    friend std::shared_ptr<const Algebra> build_nilpotent_loop(std::size_t, Scalar);
    friend std::shared_ptr<const Algebra> build_t2(const std::shared_ptr<const Algebra>&);

    Algebra() = default;
    void index_basis();

    std::string name_;
    QuiverPresentation pres_;
    bool homogeneous_ = false;
    std::vector<BasisElement> basis_;
    std::vector<std::vector<std::size_t>> between_;
    std::vector<std::size_t> idempotents_;
    std::vector<Sparse> products_;
    std::vector<Sparse> arrow_elements_;
    std::size_t loewy_length_ = 0;
    std::optional<std::size_t> loop_order_;
    std::weak_ptr<const Algebra> t2_base_;

    mutable std::mutex cache_mutex_;
    mutable std::shared_ptr<const Algebra> opposite_;
    mutable std::weak_ptr<const Algebra> opposite_back_;
    mutable std::shared_ptr<const Algebra> t2_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// k[x]/(x^n).
AlgebraPtr build_nilpotent_loop(std::size_t n, Scalar p = 2);
// T_2(a): the quiver Q x A_2 with the relations of `a` on both copies and
// commutativity squares. Vertex v of copy 1 is v, of copy 2 is n + v.
AlgebraPtr build_t2(const AlgebraPtr& a);
// Preprojective algebra of type A_m.
AlgebraPtr build_preprojective(std::size_t m, Scalar p = 2);
// Path algebra of a linearly oriented A_m with no relations.
AlgebraPtr build_linear_quiver(std::size_t m, Scalar p = 2);

AlgebraPtr algebra_from_presentation(const QuiverPresentation& pres, const std::string& name);

}  // namespace monocat
