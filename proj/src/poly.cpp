#include "monocat/poly.hpp"

#include <algorithm>

#include "monocat/errors.hpp"

namespace monocat {

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b, Scalar p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = fp_add(r[i], b[i], p);
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b, Scalar p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = fp_sub(r[i], b[i], p);
    poly_trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, Scalar p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = fp_add(r[i + j], fp_mul(a[i], b[j], p), p);
    poly_trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, Scalar p) {
    if (b.empty()) throw PreconditionError("polynomial division by zero");
    Poly r = a;
    poly_trim(r);
    if (r.size() < b.size()) return {{}, r};
    Poly q(r.size() - b.size() + 1, 0);
    Scalar lead_inv = fp_inv(b.back(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
        Scalar c = fp_mul(r[k + b.size() - 1], lead_inv, p);
        q[k] = c;
        if (!c) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = fp_sub(r[k + j], fp_mul(c, b[j], p), p);
    }
    poly_trim(q);
    poly_trim(r);
    return {q, r};
}

Poly poly_mod(const Poly& a, const Poly& b, Scalar p) { return poly_divmod(a, b, p).second; }

Poly poly_monic(const Poly& f, Scalar p) {
    if (f.empty()) return f;
    Scalar inv = fp_inv(f.back(), p);
    Poly r = f;
    for (auto& c : r) c = fp_mul(c, inv, p);
    return r;
}

Poly poly_gcd(Poly a, Poly b, Scalar p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a, p);
}

Poly poly_derivative(const Poly& f, Scalar p) {
    if (f.size() <= 1) return {};
    Poly d(f.size() - 1, 0);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = fp_mul(f[i], static_cast<Scalar>(i % p), p);
    poly_trim(d);
    return d;
}

Poly poly_powmod(const Poly& base, unsigned long long e, const Poly& m, Scalar p) {
    Poly result = poly_mod(Poly{1}, m, p);
    Poly b = poly_mod(base, m, p);
    while (e) {
        if (e & 1) result = poly_mod(poly_mul(result, b, p), m, p);
        e >>= 1;
        if (e) b = poly_mod(poly_mul(b, b, p), m, p);
    }
    return result;
}

Mat poly_eval(const Poly& f, const Mat& a) {
    const std::size_t n = a.rows();
    Mat r(n, n, a.p());
    for (std::size_t k = f.size(); k-- > 0;) {
        r = r * a;
        for (std::size_t i = 0; i < n; ++i) r(i, i) = fp_add(r(i, i), f[k], a.p());
    }
    return r;
}

Poly minimal_polynomial(const Mat& a) {
    if (a.rows() != a.cols()) throw PreconditionError("minimal polynomial of non-square matrix");
    const Scalar p = a.p();
    const std::size_t n = a.rows();
    if (n == 0) return {1};
    // Find the first power of a that depends on the lower ones. Track the
    // combination of powers each echelon row came from.
    const std::size_t w = n * n;
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::size_t> leads;
    std::vector<Poly> combos;
    Mat power = Mat::identity(n, p);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Scalar> v = power.data();
        Poly combo(k + 1, 0);
        combo[k] = 1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Scalar f = v[leads[i]];
            if (!f) continue;
            for (std::size_t j = 0; j < w; ++j)
                if (rows[i][j]) v[j] = fp_sub(v[j], fp_mul(f, rows[i][j], p), p);
            Poly scaled = combos[i];
            for (auto& c : scaled) c = fp_mul(c, f, p);
            combo = poly_sub(combo, scaled, p);
        }
        std::size_t lead = w;
        for (std::size_t j = 0; j < w; ++j)
            if (v[j]) {
                lead = j;
                break;
            }
        if (lead == w) return poly_monic(combo, p);
        Scalar inv = fp_inv(v[lead], p);
        for (auto& x : v) x = fp_mul(x, inv, p);
        for (auto& c : combo) c = fp_mul(c, inv, p);
        rows.push_back(std::move(v));
        leads.push_back(lead);
        combos.push_back(std::move(combo));
        power = power * a;
    }
    throw PreconditionError("minimal polynomial exceeded matrix size");
}

// Matrix of Frobenius minus identity on F_p[x]/(m), on the monomial basis.
static Mat frobenius_minus_identity(const Poly& m, Scalar p) {
    const std::size_t d = static_cast<std::size_t>(poly_degree(m));
    Mat q(d, d, p);
    Poly xp = poly_powmod(Poly{0, 1}, p, m, p);
    Poly cur = poly_mod(Poly{1}, m, p);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < cur.size(); ++i) q(i, j) = cur[i];
        q(j, j) = fp_sub(q(j, j), 1, p);
        cur = poly_mod(poly_mul(cur, xp, p), m, p);
    }
    return q;
}

std::size_t distinct_irreducible_factors(const Poly& m, Scalar p) {
    if (poly_degree(m) < 1) return 0;
    return kernel_basis(frobenius_minus_identity(m, p)).cols();
}

bool is_irreducible(const Poly& f, Scalar p) {
    if (poly_degree(f) < 1) return false;
    if (poly_degree(f) == 1) return true;
    Poly d = poly_derivative(f, p);
    if (d.empty()) return false;
    if (poly_degree(poly_gcd(f, d, p)) > 0) return false;
    return distinct_irreducible_factors(f, p) == 1;
}

Poly primary_root(const Poly& m, Scalar p) {
    Poly f = poly_monic(m, p);
    while (poly_degree(f) > 0) {
        Poly d = poly_derivative(f, p);
        if (d.empty()) {
            // f(x) = h(x^p) = h(x)^p over F_p.
            Poly h;
            for (std::size_t i = 0; i < f.size(); i += p) h.push_back(f[i]);
            f = h;
            continue;
        }
        Poly g = poly_divmod(f, poly_gcd(f, d, p), p).first;
        return poly_monic(g, p);
    }
    throw PreconditionError("primary_root of a constant");
}

std::optional<Poly> splitting_polynomial(const Poly& m, Scalar p) {
    Mat q = frobenius_minus_identity(m, p);
    Mat ker = kernel_basis(q);
    if (ker.cols() < 2) return std::nullopt;
    // Pick a non-constant fixed element h; it is congruent to a constant c_i
    // modulo each primary component, not all equal.
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        Poly h = ker.col_vector(j);
        poly_trim(h);
        if (poly_degree(h) < 1) continue;
        for (Scalar c = 0; c < p; ++c) {
            Poly hc = poly_sub(h, Poly{c}, p);
            Poly g = poly_gcd(hc, m, p);
            if (poly_degree(g) > 0 && poly_degree(g) < poly_degree(m)) return hc;
        }
    }
    throw InconclusiveError("no splitting polynomial found despite several factors");
}

}  // namespace monocat
