#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "monocat/algebra.hpp"
#include "monocat/errors.hpp"

using namespace monocat;

namespace {

using Path = std::vector<std::size_t>;

std::vector<Path> all_paths(const QuiverPresentation& q, std::size_t len) {
    std::vector<Path> out;
    if (len == 0) return out;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) out.push_back({a});
    for (std::size_t l = 1; l < len; ++l) {
        std::vector<Path> next;
        for (const auto& p : out)
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[p.back()].target == q.arrows[a].source) {
                    auto e = p;
                    e.push_back(a);
                    next.push_back(e);
                }
        out = next;
    }
    return out;
}

// Dimension of kQ/I counted directly: in each degree, the span of all
// u * r * v over relations r and paths u, v (including trivial ones).
std::size_t naive_dimension(const QuiverPresentation& q, std::size_t max_len) {
    std::size_t total = q.vertices.size();
    for (std::size_t d = 1; d <= max_len; ++d) {
        auto paths = all_paths(q, d);
        if (paths.empty()) break;
        std::map<Path, std::size_t> index;
        for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
        RowSpace ideal(paths.size(), q.p);
        for (const auto& r : q.relations) {
            std::size_t rl = r.terms.front().arrows.size();
            if (rl > d) continue;
            for (std::size_t ul = 0; ul + rl <= d; ++ul) {
                std::size_t vl = d - rl - ul;
                std::vector<Path> us = ul ? all_paths(q, ul) : std::vector<Path>{{}};
                std::vector<Path> vs = vl ? all_paths(q, vl) : std::vector<Path>{{}};
                for (const auto& u : us) {
                    if (!u.empty() && q.arrows[u.back()].target != r.source) continue;
                    for (const auto& v : vs) {
                        if (!v.empty() && q.arrows[v.front()].source != r.target) continue;
                        std::vector<Scalar> vec(paths.size(), 0);
                        for (const auto& t : r.terms) {
                            Path full = u;
                            full.insert(full.end(), t.arrows.begin(), t.arrows.end());
                            full.insert(full.end(), v.begin(), v.end());
                            auto& slot = vec[index.at(full)];
                            slot = fp_add(slot, t.coeff % q.p, q.p);
                        }
                        ideal.insert(vec);
                    }
                }
            }
        }
        total += paths.size() - ideal.dimension();
    }
    return total;
}

}  // namespace

TEST_CASE("nilpotent loop algebras") {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto a = build_nilpotent_loop(n);
        CHECK(a->dimension() == n);
        CHECK(a->num_vertices() == 1);
        CHECK(a->loewy_length() == n);
        CHECK(a->nilpotent_loop_order() == n);
        a->check_structure();
    }
    auto l3 = build_nilpotent_loop(3, 3);
    CHECK(l3->p() == 3);
    // x * x = x^2 and x * x^2 = 0.
    auto x = l3->arrow_element(0).front().first;
    const auto& xx = l3->product(x, x);
    REQUIRE(xx.size() == 1);
    CHECK(l3->product(x, xx.front().first).empty());
}

TEST_CASE("T2 has three times the dimension") {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto a = build_nilpotent_loop(n);
        auto t = a->t2();
        CHECK(t->dimension() == 3 * n);
        CHECK(t->num_vertices() == 2);
        CHECK(t->t2_base() == a);
        CHECK(a->t2() == t);
        t->check_structure();
        CHECK(naive_dimension(t->presentation(), 3 * n + 2) == t->dimension());
    }
}

TEST_CASE("preprojective algebras of type A") {
    CHECK(build_preprojective(1)->dimension() == 1);
    for (std::size_t m = 2; m <= 4; ++m) {
        auto pi = build_preprojective(m);
        pi->check_structure();
        CHECK(pi->dimension() == naive_dimension(pi->presentation(), 3 * m));
        CHECK(pi->loewy_length() == m);
    }
    CHECK(build_preprojective(2)->dimension() == 4);
    CHECK(build_preprojective(3)->dimension() == 10);
    CHECK(build_preprojective(3, 3)->dimension() == naive_dimension(build_preprojective(3, 3)->presentation(), 9));
}

TEST_CASE("opposite algebra") {
    auto a = build_linear_quiver(3);
    auto op = a->opposite();
    CHECK(op->dimension() == a->dimension());
    CHECK(op->opposite() == a);
    CHECK(a->opposite() == op);
    op->check_structure();
    for (std::size_t i = 0; i < a->dimension(); ++i) {
        CHECK(op->basis(i).source == a->basis(i).target);
        for (std::size_t j = 0; j < a->dimension(); ++j) CHECK(op->product(i, j) == a->product(j, i));
    }
}

TEST_CASE("input validation") {
    QuiverPresentation q;
    q.p = 4;
    q.vertices = {"1"};
    CHECK_THROWS_AS(q.validate(), InputError);
    q.p = 2;
    q.arrows = {{0, 0, "x"}};
    q.relations = {Relation{0, 0, {PathTerm{1, {0, 0}, 0}, PathTerm{1, {0, 0, 0}, 0}}}};
    CHECK_THROWS_AS(Algebra::from_presentation(q, "bad"), InputError);
    q.relations.clear();
    CHECK_THROWS_AS(Algebra::from_presentation(q, "infinite", 10), InputError);
}

namespace {

// Hom table of an algebra built from its own structure constants.
HomTable table_of(const AlgebraPtr& a) {
    HomTable t;
    t.p = a->p();
    t.objects = a->presentation().vertices;
    const std::size_t n = a->num_vertices();
    t.dims.assign(n, std::vector<std::size_t>(n));
    t.identity.assign(n, 0);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r) {
            t.dims[s][r] = a->basis_between(s, r).size();
            if (s == r) {
                const auto& bl = a->basis_between(s, s);
                for (std::size_t i = 0; i < bl.size(); ++i)
                    if (bl[i] == a->idempotent(s)) t.identity[s] = i;
            }
        }
    t.compose = [a](std::size_t s, std::size_t m, std::size_t r, std::size_t i, std::size_t j) {
        auto x = a->basis_between(s, m)[i];
        auto y = a->basis_between(m, r)[j];
        const auto& target = a->basis_between(s, r);
        std::vector<Scalar> out(target.size(), 0);
        for (auto [k, v] : a->product(x, y))
            for (std::size_t z = 0; z < target.size(); ++z)
                if (target[z] == k) out[z] = v;
        return out;
    };
    return t;
}

}  // namespace

TEST_CASE("algebra from a hom table recovers the quiver") {
    for (auto a : {build_preprojective(2), build_preprojective(3), build_nilpotent_loop(3),
                   build_linear_quiver(3), build_nilpotent_loop(2)->t2()}) {
        auto b = Algebra::from_hom_table(table_of(a), "copy");
        CHECK(b->dimension() == a->dimension());
        CHECK(b->num_arrows() == a->num_arrows());
        CHECK(b->loewy_length() == a->loewy_length());
        // Every basis expression evaluates back to the basis element.
        for (std::size_t i = 0; i < b->dimension(); ++i) {
            std::vector<Scalar> sum(b->dimension(), 0);
            for (const auto& term : b->basis(i).expression) {
                std::vector<Scalar> v(b->dimension(), 0);
                v[b->idempotent(term.vertex)] = 1;
                for (auto ar : term.arrows) {
                    std::vector<Scalar> w(b->dimension(), 0);
                    for (auto [k, c] : b->arrow_element(ar)) w[k] = c;
                    v = b->multiply(v, w);
                }
                for (std::size_t k = 0; k < v.size(); ++k)
                    sum[k] = fp_add(sum[k], fp_mul(v[k], term.coeff, b->p()), b->p());
            }
            std::vector<Scalar> e(b->dimension(), 0);
            e[i] = 1;
            CHECK(sum == e);
        }
    }
}

TEST_CASE("hom table validation reports the violating triple") {
    auto a = build_nilpotent_loop(3);
    HomTable t = table_of(a);
    auto good = t.compose;
    // Make x * x^2 = x while x^2 * x stays 0.
    t.compose = [good](std::size_t s, std::size_t m, std::size_t r, std::size_t i, std::size_t j) {
        if (i == 1 && j == 2) return std::vector<Scalar>{0, 1, 0};
        return good(s, m, r, i, j);
    };
    try {
        Algebra::from_hom_table(t, "broken");
        FAIL("expected an exception");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("associative") != std::string::npos);
    }
}
