#pragma once

// Squarefree decomposition, distinct-degree / equal-degree factorization,
// root finding, and irreducibility machinery for Poly.
//
// Equal-degree splitting is randomized (Cantor-Zassenhaus; the norm map for
// odd q, the absolute trace for q = 2^k) but seeded, and the returned factor
// lists are sorted canonically, so output is deterministic given the seed.

#include <cstdint>
#include <random>
#include <vector>

#include "covers/error.hpp"
#include "covers/ffield.hpp"

namespace covers {

// x^{q^e} mod f
inline Poly frobenius_power_x(const Poly& f, std::uint32_t e) {
    Poly acc = Poly::x(f.field()) % f;
    std::uint64_t q = f.field().q();
    for (std::uint32_t i = 0; i < e; ++i) acc = pow_mod(acc, q, f);
    return acc;
}

inline bool is_irreducible(const Poly& f_in) {
    Poly f = f_in.monic();
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Field& F = f.field();
    if (frobenius_power_x(f, static_cast<std::uint32_t>(d)) != Poly::x(F) % f) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool prime_l = true;
        for (int t = 2; t * t <= l; ++t)
            if (l % t == 0) { prime_l = false; break; }
        if (!prime_l) continue;
        Poly diff = frobenius_power_x(f, static_cast<std::uint32_t>(d / l)) - Poly::x(F);
        if (poly_gcd(diff, f).degree() != 0) return false;
    }
    return true;
}

namespace detail {

// f with zero derivative is g(x^p); coefficient p-th roots are c^{p^{k-1}}
inline Poly pth_root(const Poly& f) {
    const Field& F = f.field();
    std::uint32_t p = F.p();
    std::uint64_t root_exp = 1;
    for (std::uint32_t i = 1; i < F.k(); ++i) root_exp *= p;
    std::vector<Field::Elem> out;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i % p == 0) {
            out.push_back(F.pow(f.coeffs()[i], root_exp));
        } else if (!F.is_zero(f.coeffs()[i])) {
            throw Error("pth_root applied to a polynomial that is not a p-th power");
        }
    }
    return Poly(F, std::move(out));
}

inline void squarefree_rec(const Poly& f, int outer_mult,
                           std::vector<std::pair<Poly, int>>& out) {
    const Field& F = f.field();
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_rec(pth_root(f), outer_mult * static_cast<int>(F.p()), out);
        return;
    }
    Poly c = poly_gcd(f, d);
    Poly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * outer_mult);
        w = y;
        c = c / y;
        ++i;
    }
    // leftover: all exponents divisible by p, so c is a p-th power and the
    // zero-derivative branch applies the factor p
    if (c.degree() > 0)
        squarefree_rec(c.monic(), outer_mult, out);
}

} // namespace detail

// pairwise-coprime squarefree monic factors with multiplicities; their
// product with exponents and the leading coefficient reproduces the input
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a) {
    if (a.is_zero()) throw Error("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (a.degree() == 0) return out;
    detail::squarefree_rec(a.monic(), 1, out);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return x.first < y.first;
    });
    return out;
}

namespace detail {

inline Poly random_poly_below(const Field& F, int deg_bound, std::mt19937_64& rng) {
    std::vector<Field::Elem> cs;
    std::uniform_int_distribution<std::uint32_t> dist(0, F.p() - 1);
    for (int i = 0; i < deg_bound; ++i) {
        Field::Elem e(F.k());
        for (std::uint32_t j = 0; j < F.k(); ++j) e[j] = dist(rng);
        cs.push_back(std::move(e));
    }
    return Poly(F, std::move(cs));
}

inline void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng,
                               std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Field& F = f.field();
    const std::uint64_t q = F.q();
    while (true) {
        Poly r = random_poly_below(F, f.degree(), rng);
        if (r.degree() < 1) continue;
        Poly g = Poly::zero(F);
        if (F.p() == 2) {
            // absolute trace over F_2 of r in each residue field
            std::uint32_t steps = F.k() * static_cast<std::uint32_t>(d);
            Poly t = r % f;
            Poly trace = t;
            for (std::uint32_t i = 1; i < steps; ++i) {
                t = (t * t) % f;
                trace = trace + t;
            }
            g = poly_gcd(trace, f);
        } else {
            // norm from F_{q^d} down to F_q, then an Euler-criterion power
            Poly t = r % f;
            Poly norm = t;
            for (int i = 1; i < d; ++i) {
                t = pow_mod(t, q, f);
                norm = (norm * t) % f;
            }
            Poly s = pow_mod(norm, (q - 1) / 2, f);
            g = poly_gcd(s - Poly::one(F), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

} // namespace detail

struct Factorization {
    Field::Elem lead;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity
};

inline Factorization factor(const Poly& a, std::uint64_t seed = 1729) {
    if (a.is_zero() || a.degree() < 1)
        throw Error("factor expects a polynomial of degree >= 1");
    const Field& F = a.field();
    Factorization res;
    res.lead = a.lead();
    std::mt19937_64 rng(seed);
    for (const auto& [sf, mult] : squarefree_decomposition(a)) {
        // distinct-degree pass
        Poly g = sf;
        Poly h = Poly::x(F) % g;
        int d = 0;
        std::vector<std::pair<Poly, int>> blocks;
        while (g.degree() > 0) {
            ++d;
            if (2 * d > g.degree()) {
                blocks.emplace_back(g, g.degree());
                break;
            }
            h = pow_mod(h, F.q(), g);
            Poly gd = poly_gcd(h - Poly::x(F), g);
            if (gd.degree() > 0) {
                blocks.emplace_back(gd, d);
                g = g / gd;
                h = h % g;
            }
        }
        for (const auto& [block, deg] : blocks) {
            std::vector<Poly> irr;
            detail::equal_degree_split(block, deg, rng, irr);
            for (auto& f : irr) res.factors.emplace_back(std::move(f), mult);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& x, const auto& y) {
        if (!(x.first == y.first)) return x.first < y.first;
        return x.second < y.second;
    });
    return res;
}

// multiply a factorization back together (used by round-trip checks)
inline Poly factorization_product(const Factorization& fz, const Field& F) {
    Poly prod = Poly::constant(F, fz.lead);
    for (const auto& [f, m] : fz.factors)
        for (int i = 0; i < m; ++i) prod = prod * f;
    return prod;
}

// ---------------------------------------------------------------------------
// Roots. A root in the degree-k0 extension of the coefficient field is
// described by its minimal polynomial over that field plus a conjugate index.

struct Root {
    Poly min_poly;        // monic irreducible over the input's field
    int conjugate_index;  // 0 .. deg(min_poly)-1
    int multiplicity;
};

inline std::vector<Root> roots_with_multiplicity(const Poly& a, int ext_degree,
                                                 std::uint64_t seed = 1729) {
    if (a.is_zero()) throw Error("roots of the zero polynomial");
    std::vector<Root> out;
    if (a.degree() < 1) return out;
    for (const auto& [f, m] : factor(a, seed).factors) {
        if (ext_degree % f.degree() != 0) continue;
        for (int j = 0; j < f.degree(); ++j)
            out.push_back(Root{f, j, m});
    }
    return out;
}

// ---------------------------------------------------------------------------

// random monic irreducible of degree k over F_p, deterministic given seed
inline Poly irreducible_poly(std::uint32_t p, std::uint32_t k, std::uint64_t seed) {
    Field F = Field::prime(p);
    if (k == 0) throw ParseError("irreducible degree must be >= 1");
    if (k == 1) return Poly::x(F);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    while (true) {
        std::vector<Field::Elem> cs;
        for (std::uint32_t i = 0; i < k; ++i) cs.push_back(F.from_int(dist(rng)));
        cs.push_back(F.one());
        Poly cand(F, std::move(cs));
        if (is_irreducible(cand)) return cand;
    }
}

// ---------------------------------------------------------------------------
// Minimal polynomial over F_p of an element of an extension field.

inline Poly min_poly_over_prime(const Field& E, const Field::Elem& c) {
    const std::uint32_t p = E.p();
    const std::uint32_t m = E.k();
    Field base = Field::prime(p);
    std::vector<Field::Elem> powers{E.one()};
    for (std::uint32_t j = 1; j <= m; ++j) powers.push_back(E.mul(powers.back(), c));
    for (std::uint32_t d = 1; d <= m; ++d) {
        // solve sum_j x_j c^j = c^d over F_p by Gaussian elimination
        std::vector<std::vector<std::uint32_t>> M(m, std::vector<std::uint32_t>(d + 1, 0));
        for (std::uint32_t row = 0; row < m; ++row) {
            for (std::uint32_t col = 0; col < d; ++col) M[row][col] = powers[col][row];
            M[row][d] = powers[d][row];
        }
        std::uint32_t rank = 0;
        std::vector<int> pivot_col(m, -1);
        for (std::uint32_t col = 0; col < d && rank < m; ++col) {
            std::uint32_t sel = rank;
            while (sel < m && M[sel][col] == 0) ++sel;
            if (sel == m) continue;
            std::swap(M[rank], M[sel]);
            std::uint32_t inv = fpx::inv_mod(M[rank][col], p);
            for (auto& v : M[rank]) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p);
            for (std::uint32_t r2 = 0; r2 < m; ++r2) {
                if (r2 == rank || M[r2][col] == 0) continue;
                std::uint64_t f = M[r2][col];
                for (std::uint32_t cc = 0; cc <= d; ++cc)
                    M[r2][cc] = static_cast<std::uint32_t>(
                        (M[r2][cc] + (p - static_cast<std::uint32_t>(f * M[rank][cc] % p))) % p);
            }
            pivot_col[rank] = static_cast<int>(col);
            ++rank;
        }
        bool solvable = true;
        for (std::uint32_t row = rank; row < m; ++row)
            if (M[row][d] != 0) { solvable = false; break; }
        if (!solvable) continue;
        std::vector<std::uint32_t> x(d, 0);
        for (std::uint32_t r2 = 0; r2 < rank; ++r2)
            if (pivot_col[r2] >= 0) x[static_cast<size_t>(pivot_col[r2])] = M[r2][d];
        std::vector<Field::Elem> cs;
        for (std::uint32_t j = 0; j < d; ++j)
            cs.push_back(base.from_int(-static_cast<long long>(x[j])));
        cs.push_back(base.one());
        return Poly(base, std::move(cs));
    }
    throw Error("minimal polynomial search failed");  // unreachable
}

} // namespace covers
