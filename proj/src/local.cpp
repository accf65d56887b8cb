#include "monocat/local.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "monocat/errors.hpp"
#include "monocat/poly.hpp"

namespace monocat {

namespace {

bool all_zero(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

std::vector<Scalar> axpy(const std::vector<Scalar>& x, Scalar a, const std::vector<Scalar>& y,
                         Scalar p) {
    std::vector<Scalar> r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fp_add(r[i], fp_mul(a, y[i], p), p);
    return r;
}

RowSpace ideal_closure(const AlgebraOps& e, const std::vector<std::vector<Scalar>>& gens) {
    RowSpace j(e.dim, e.p);
    std::vector<std::vector<Scalar>> queue;
    for (const auto& g : gens)
        if (j.insert(g)) queue.push_back(g);
    std::vector<Scalar> unit(e.dim, 0);
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        for (std::size_t b = 0; b < e.dim; ++b) {
            std::fill(unit.begin(), unit.end(), 0);
            unit[b] = 1;
            for (auto w : {e.multiply(unit, v), e.multiply(v, unit)}) {
                if (j.insert(w)) queue.push_back(std::move(w));
            }
        }
    }
    return j;
}

bool is_nilpotent_ideal(const AlgebraOps& e, const RowSpace& j) {
    std::vector<std::vector<Scalar>> power = j.generators();
    const auto& base = j.generators();
    std::size_t last = power.size();
    while (!power.empty()) {
        RowSpace next(e.dim, e.p);
        for (const auto& x : power)
            for (const auto& y : base) next.insert(e.multiply(x, y));
        if (next.dimension() >= last) return false;
        last = next.dimension();
        power = next.generators();
    }
    return true;
}

// Quotient coordinates: the remainder modulo J restricted to non-lead positions.
struct Quotient {
    const RowSpace* j;
    std::vector<std::size_t> free;
    std::vector<Scalar> coords(const std::vector<Scalar>& v) const {
        auto r = j->reduce(v);
        std::vector<Scalar> c(free.size());
        for (std::size_t i = 0; i < free.size(); ++i) c[i] = r[free[i]];
        return c;
    }
};

Quotient make_quotient(const RowSpace& j, std::size_t dim) {
    (void)dim;
    return Quotient{&j, j.free_positions()};
}

// Returns true if E/J is certified to be a field.
bool quotient_is_field(const AlgebraOps& e, const RowSpace& j, std::mt19937_64& rng) {
    const std::size_t d = e.dim - j.dimension();
    if (d == 0) return false;
    if (d == 1) return true;
    Quotient q = make_quotient(j, e.dim);
    auto basis_vec = [&](std::size_t idx) {
        std::vector<Scalar> v(e.dim, 0);
        v[q.free[idx]] = 1;
        return v;
    };
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            auto u = basis_vec(a), v = basis_vec(b);
            auto uv = e.multiply(u, v), vu = e.multiply(v, u);
            std::vector<Scalar> diff(e.dim);
            for (std::size_t i = 0; i < e.dim; ++i) diff[i] = fp_sub(uv[i], vu[i], e.p);
            if (!j.contains(diff)) return false;
        }
    std::uniform_int_distribution<Scalar> dist(0, e.p - 1);
    for (std::size_t trial = 0; trial < 4 * d + 16; ++trial) {
        std::vector<Scalar> x(e.dim, 0);
        if (trial < d) {
            x = basis_vec(trial);
        } else {
            for (std::size_t i = 0; i < d; ++i) x[q.free[i]] = dist(rng);
        }
        Mat rep(d, d, e.p);
        for (std::size_t c = 0; c < d; ++c) {
            auto col = q.coords(e.multiply(x, basis_vec(c)));
            for (std::size_t r = 0; r < d; ++r) rep(r, c) = col[r];
        }
        Poly mp = minimal_polynomial(rep);
        if (poly_degree(mp) == static_cast<int>(d) && is_irreducible(mp, e.p)) return true;
    }
    return false;
}

}  // namespace

std::vector<Scalar> eval_in_algebra(const AlgebraOps& e, const std::vector<Scalar>& poly,
                                    const std::vector<Scalar>& x) {
    std::vector<Scalar> r(e.dim, 0);
    for (std::size_t k = poly.size(); k-- > 0;) {
        r = e.multiply(r, x);
        r = axpy(r, poly[k], e.one, e.p);
    }
    return r;
}

LocalAnalysis analyze_local(const AlgebraOps& e, std::size_t random_trials, std::uint64_t seed) {
    LocalAnalysis out;
    if (e.dim == 0) throw PreconditionError("locality of the zero algebra");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Scalar> dist(0, e.p - 1);
    std::vector<std::vector<Scalar>> nil_gens;

    auto consider = [&](const std::vector<Scalar>& x) -> bool {
        Poly mp = minimal_polynomial(e.represent(x));
        if (distinct_irreducible_factors(mp, e.p) >= 2) {
            auto h = splitting_polynomial(mp, e.p);
            out.verdict = LocalAnalysis::Verdict::Split;
            out.splitter = eval_in_algebra(e, *h, x);
            return true;
        }
        auto z = eval_in_algebra(e, primary_root(mp, e.p), x);
        if (!all_zero(z)) nil_gens.push_back(std::move(z));
        return false;
    };
    auto random_element = [&]() {
        std::vector<Scalar> x(e.dim);
        for (auto& c : x) c = dist(rng);
        return x;
    };

    for (std::size_t b = 0; b < e.dim; ++b) {
        std::vector<Scalar> x(e.dim, 0);
        x[b] = 1;
        if (consider(x)) return out;
    }
    std::size_t closed_upto = static_cast<std::size_t>(-1);
    for (std::size_t round = 0; round <= random_trials; ++round) {
        if (closed_upto == nil_gens.size()) {
            if (round == random_trials) break;
            if (consider(random_element())) return out;
            continue;
        }
        closed_upto = nil_gens.size();
        RowSpace j = ideal_closure(e, nil_gens);
        if (is_nilpotent_ideal(e, j) && quotient_is_field(e, j, rng)) {
            out.verdict = LocalAnalysis::Verdict::Local;
            out.radical = j.generators();
            return out;
        }
        if (round == random_trials) break;
        if (consider(random_element())) return out;
    }
    out.verdict = LocalAnalysis::Verdict::Unknown;
    return out;
}

}  // namespace monocat
