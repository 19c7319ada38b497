#pragma once

// Ramification analysis of rational maps P/Q over finite prime fields.
//
// Branch points are places: a finite branch value is recorded once per
// conjugacy class via its minimal polynomial over the base field, with the
// shared fiber; the place at infinity is handled by explicit degree-drop
// bookkeeping. Fibers are read off squarefree decompositions, so no root is
// ever approximated.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "covers/error.hpp"
#include "covers/factor.hpp"
#include "covers/ffield.hpp"
#include "covers/intpoly.hpp"
#include "covers/perm.hpp"

namespace covers {

struct RationalMap {
    Field field;
    Poly num, den;
    int degree = 0;

    static RationalMap make(Poly P, Poly Q) {
        if (P.field() != Q.field())
            throw FieldMismatch("numerator and denominator live in different fields");
        if (Q.is_zero()) throw ParseError("zero denominator");
        if (P.is_zero()) throw ParseError("zero numerator");
        if (poly_gcd(P, Q).degree() != 0)
            throw ParseError("numerator and denominator must be coprime");
        RationalMap f;
        f.field = P.field();
        f.degree = std::max(P.degree(), Q.degree());
        if (f.degree < 1) throw ParseError("rational map must be nonconstant");
        f.num = std::move(P);
        f.den = std::move(Q);
        return f;
    }

    // cancel a common factor instead of rejecting it
    static RationalMap reduced(const Poly& P, const Poly& Q) {
        if (P.is_zero() || Q.is_zero()) throw ParseError("zero numerator or denominator");
        Poly g = poly_gcd(P, Q);
        if (g.degree() == 0) return make(P, Q);
        return make(P / g, Q / g);
    }

    std::string to_string() const {
        std::string s = "num = " + num.to_string() + "; den = " + den.to_string() +
                        "; over GF(" + std::to_string(field.p());
        if (field.k() > 1) s += "^" + std::to_string(field.k());
        s += ")";
        return s;
    }
};

struct BranchPoint {
    bool at_infinity = false;
    Poly place;              // minimal polynomial over the base field (finite case)
    int conj_count = 1;      // number of conjugate branch values sharing this entry
    std::vector<int> fiber;  // ramification indices, descending, summing to n

    std::string value_display() const {
        if (at_infinity) return "inf";
        if (place.degree() == 1) {
            const Field& F = place.field();
            return F.to_string(F.neg(place.coeff(0)));
        }
        return "root of " + place.to_string();
    }
};

struct RamificationProfile {
    RationalMap map;
    bool separable = false;
    std::vector<BranchPoint> branch_points;
    bool tame = false;
    long long rh_defect = 0;

    std::vector<CycleType> type_vector() const {
        std::vector<CycleType> out;
        for (const auto& b : branch_points) out.emplace_back(map.degree, b.fiber);
        return out;
    }
};

namespace detail {

// fiber multiset of T = P - cQ (or of Q for the infinite fiber): one entry of
// size m per root of each squarefree factor of multiplicity m, plus the
// degree-drop part
inline std::vector<int> fiber_of(const Poly& T, int n) {
    std::vector<int> fiber;
    if (T.degree() >= 1)
        for (const auto& [g, m] : squarefree_decomposition(T))
            for (int i = 0; i < g.degree(); ++i) fiber.push_back(m);
    int drop = n - std::max(T.degree(), 0);
    if (drop > 0) fiber.push_back(drop);
    std::sort(fiber.begin(), fiber.end(), std::greater<int>());
    return fiber;
}

// one root of an irreducible prime-field polynomial inside the canonical
// extension of matching degree
inline std::pair<Field, Field::Elem> any_root(const Poly& irred) {
    const Field& F = irred.field();
    if (irred.degree() == 1)
        return {F, F.neg(irred.coeff(0))};
    Field E = Field::extension(F.p(), static_cast<std::uint32_t>(irred.degree()));
    Poly lifted = lift_to(irred, E);
    auto fz = factor(lifted);
    for (const auto& [f, m] : fz.factors)
        if (f.degree() == 1) return {E, E.neg(f.coeff(0))};
    throw Error("irreducible polynomial failed to split in its own splitting field");
}

} // namespace detail

inline RamificationProfile branch_analysis(const RationalMap& f) {
    if (f.field.k() != 1)
        throw FieldMismatch("branch analysis labels places over a prime base field; "
                            "construct the map over GF(p)");
    RamificationProfile prof;
    prof.map = f;
    const Field& F = f.field;
    const int n = f.degree;
    const Poly& P = f.num;
    const Poly& Q = f.den;

    Poly W = P.derivative() * Q - P * Q.derivative();
    if (W.is_zero()) {
        prof.separable = false;
        prof.tame = false;
        return prof;
    }
    prof.separable = true;

    // candidate finite branch values, one place per conjugacy class
    std::vector<Poly> places;
    auto add_place = [&](const Poly& mu) {
        for (const auto& seen : places)
            if (seen == mu) return;
        places.push_back(mu);
    };

    if (W.degree() >= 1) {
        for (const auto& [h, mult] : factor(W).factors) {
            auto [E, alpha] = detail::any_root(h);
            Poly Pl = E.k() == 1 ? P : lift_to(P, E);
            Poly Ql = E.k() == 1 ? Q : lift_to(Q, E);
            Field::Elem qv = Ql.eval(alpha);
            if (E.is_zero(qv)) continue;  // critical point over infinity; read from Q below
            Field::Elem c = E.mul(Pl.eval(alpha), E.inv(qv));
            add_place(E.k() == 1 ? Poly(F, {E.neg(c), F.one()}) : min_poly_over_prime(E, c));
        }
    }

    // the image of x = infinity, when it is a finite ramified value
    if (P.degree() <= Q.degree()) {
        Field::Elem cinf = P.degree() == Q.degree()
                               ? F.mul(P.lead(), F.inv(Q.lead()))
                               : F.zero();
        Poly T = P - Q.scaled(cinf);
        if (n - T.degree() >= 2) add_place(Poly(F, {F.neg(cinf), F.one()}));
    }

    for (const auto& mu : places) {
        auto [E, c] = detail::any_root(mu);
        Poly Pl = E.k() == 1 ? P : lift_to(P, E);
        Poly Ql = E.k() == 1 ? Q : lift_to(Q, E);
        Poly T = Pl - Ql.scaled(c);
        BranchPoint bp;
        bp.place = mu;
        bp.conj_count = mu.degree();
        bp.fiber = detail::fiber_of(T, n);
        bool ramified = false;
        for (int e : bp.fiber)
            if (e >= 2) ramified = true;
        if (ramified) prof.branch_points.push_back(std::move(bp));
    }

    // the fiber over infinity: roots of Q plus the degree drop
    {
        BranchPoint bp;
        bp.at_infinity = true;
        bp.fiber = detail::fiber_of(Q, n);
        bool ramified = false;
        for (int e : bp.fiber)
            if (e >= 2) ramified = true;
        if (ramified) prof.branch_points.push_back(std::move(bp));
    }

    // display order: rational values ascending, then higher places, then inf
    std::sort(prof.branch_points.begin(), prof.branch_points.end(),
              [&](const BranchPoint& a, const BranchPoint& b) {
                  if (a.at_infinity != b.at_infinity) return b.at_infinity;
                  if (a.place.degree() != b.place.degree()) return a.place.degree() < b.place.degree();
                  if (a.place.degree() == 1) {
                      std::uint32_t va = F.neg(a.place.coeff(0))[0];
                      std::uint32_t vb = F.neg(b.place.coeff(0))[0];
                      return va < vb;
                  }
                  return a.place < b.place;
              });

    long long total_index = 0;
    bool all_prime_to_p = true;
    for (const auto& bp : prof.branch_points) {
        long long local = 0;
        for (int e : bp.fiber) {
            local += e - 1;
            if (e % static_cast<int>(F.p()) == 0) all_prime_to_p = false;
        }
        total_index += static_cast<long long>(bp.conj_count) * local;
    }
    prof.rh_defect = total_index - (2LL * n - 2);
    prof.tame = prof.separable && all_prime_to_p && prof.rh_defect == 0;
    return prof;
}

// ---------------------------------------------------------------------------
// Degeneration of a displayed cover at a characteristic.

enum class Degeneration { Tame, Wild, Inseparable };

struct DegenerationReport {
    Degeneration kind = Degeneration::Tame;
    std::vector<std::string> wild_points;
    std::string note;
};

inline const char* degeneration_name(Degeneration d) {
    switch (d) {
        case Degeneration::Tame: return "Tame";
        case Degeneration::Wild: return "Wild";
        default: return "Inseparable";
    }
}

inline DegenerationReport degeneration_report(const IntPoly& num, const IntPoly& den, std::uint32_t p) {
    Field F = Field::prime(p);
    Poly P = reduce_mod(num, F);
    Poly Q = reduce_mod(den, F);
    if (P.is_zero() || Q.is_zero())
        throw ParseError("the displayed cover collapses entirely at p = " + std::to_string(p));
    DegenerationReport rep;
    Poly g = poly_gcd(P, Q);
    if (g.degree() == 0) {
        RationalMap f = RationalMap::make(P, Q);
        RamificationProfile prof = branch_analysis(f);
        if (!prof.separable) {
            rep.kind = Degeneration::Inseparable;
            rep.note = "P'Q - PQ' vanishes identically";
            return rep;
        }
        if (prof.tame) {
            rep.kind = Degeneration::Tame;
            return rep;
        }
        rep.kind = Degeneration::Wild;
        for (const auto& bp : prof.branch_points)
            for (int e : bp.fiber)
                if (e % static_cast<int>(p) == 0)
                    rep.wild_points.push_back("over " + bp.value_display() + " (e=" + std::to_string(e) + ")");
        if (rep.wild_points.empty())
            rep.note = "Riemann-Hurwitz defect " + std::to_string(prof.rh_defect);
        return rep;
    }
    // the model itself degenerates: numerator and denominator collide mod p.
    // Read the indices that became divisible by p off the cancelled model's
    // fibers over 0 and infinity.
    rep.kind = Degeneration::Wild;
    rep.note = "model degenerates: common factor " + g.to_string();
    Poly Pr = P / g, Qr = Q / g;
    auto collect = [&](const Poly& T, const char* where) {
        if (T.degree() < 1) return;
        for (const auto& [sf, m] : squarefree_decomposition(T))
            if (m % static_cast<int>(p) == 0)
                for (const auto& [irr, mm] : factor(sf).factors) {
                    (void)mm;
                    rep.wild_points.push_back(std::string("over ") + where + " at x with " +
                                              irr.to_string() + " = 0 (e=" + std::to_string(m) + ")");
                }
    };
    collect(Pr, "0");
    collect(Qr, "inf");
    return rep;
}

// true iff f - c = R/S as rational functions, i.e. P*S = (R + c*S)*Q
inline bool verify_identity(const RationalMap& f, const Field::Elem& c, const Poly& R, const Poly& S) {
    if (S.is_zero()) throw ParseError("identity denominator S must be nonzero");
    return f.num * S == (R + S.scaled(c)) * f.den;
}

// ---------------------------------------------------------------------------
// The Hasse polynomial Phi(lambda) = sum binom((p-1)/2, i)^2 lambda^i.
// A nonzero value certifies ordinarity of the lambda-Legendre curve.

inline Poly hasse_phi_poly(std::uint32_t p) {
    if (p == 2 || !Field::is_prime(p)) throw ParseError("hasse_phi needs an odd prime");
    Field F = Field::prime(p);
    std::uint32_t m = (p - 1) / 2;
    std::vector<Field::Elem> cs;
    std::uint64_t binom = 1;  // C(m, i) mod p via the multiplicative recurrence
    for (std::uint32_t i = 0; i <= m; ++i) {
        cs.push_back(F.from_int(static_cast<long long>(binom * binom % p)));
        if (i < m)
            binom = binom % p * ((m - i) % p) % p * fpx::inv_mod(i + 1, p) % p;
    }
    return Poly(F, std::move(cs));
}

inline Field::Elem hasse_phi(const Field& F, const Field::Elem& lambda) {
    if (F.p() == 2) throw ParseError("hasse_phi needs an odd prime");
    if (F.is_zero(lambda) || lambda == F.one())
        throw BadLambda("lambda must avoid 0 and 1");
    Poly phi = hasse_phi_poly(F.p());
    Field::Elem acc = F.zero();
    for (size_t i = phi.coeffs().size(); i-- > 0;)
        acc = F.add(F.mul(acc, lambda), F.from_int(phi.coeffs()[i][0]));
    return acc;
}

// ---------------------------------------------------------------------------
// Text formats.

struct ParsedMapText {
    IntPoly num, den;
    std::uint32_t p = 0, k = 1;
};

// "num = x^3*(x-2); den = 1-2*x; over GF(7)"
inline ParsedMapText parse_rational_map_text(const std::string& text) {
    auto find_part = [&](const std::string& key) -> std::string {
        size_t at = text.find(key);
        if (at == std::string::npos) throw ParseError("missing '" + key + "' in map text");
        size_t start = at + key.size();
        size_t end = text.find(';', start);
        return text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    };
    ParsedMapText out;
    out.num = parse_int_poly(find_part("num ="));
    out.den = parse_int_poly(find_part("den ="));
    std::string over = find_part("over GF(");
    size_t close = over.find(')');
    if (close == std::string::npos) throw ParseError("missing ')' after GF( in map text");
    std::string inside = over.substr(0, close);
    size_t caret = inside.find('^');
    if (caret == std::string::npos) {
        std::uint64_t q = std::stoull(inside);
        std::uint32_t p = 2;
        while (q % p != 0) ++p;
        std::uint32_t k = 0;
        std::uint64_t qq = q;
        while (qq > 1) {
            if (qq % p != 0) throw ParseError("GF size must be a prime power");
            qq /= p;
            ++k;
        }
        out.p = p;
        out.k = k;
    } else {
        out.p = static_cast<std::uint32_t>(std::stoul(inside.substr(0, caret)));
        out.k = static_cast<std::uint32_t>(std::stoul(inside.substr(caret + 1)));
    }
    if (!Field::is_prime(out.p)) throw ParseError("GF characteristic must be prime");
    return out;
}

// "x^3*(x-2) / (1-2*x)"; a missing '/' means denominator 1
inline std::pair<IntPoly, IntPoly> parse_inline_map(const std::string& text) {
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        else if (text[i] == ')') --depth;
        else if (text[i] == '/' && depth == 0)
            return {parse_int_poly(text.substr(0, i)), parse_int_poly(text.substr(i + 1))};
    }
    return {parse_int_poly(text), IntPoly{1}};
}

inline std::string profile_to_text(const RamificationProfile& prof) {
    std::string s = prof.map.to_string() + "\n";
    s += "degree " + std::to_string(prof.map.degree) + "\n";
    if (!prof.separable) {
        s += "inseparable (W = 0)\n";
        return s;
    }
    for (const auto& bp : prof.branch_points) {
        CycleType t(prof.map.degree, bp.fiber);
        s += "branch " + bp.value_display();
        if (bp.conj_count > 1) s += " (+" + std::to_string(bp.conj_count - 1) + " conjugates)";
        s += ": fiber " + t.display_full() + "  type " + t.display() + "\n";
    }
    std::vector<CycleType> tv = prof.type_vector();
    s += "type vector ";
    s += "(";
    for (size_t i = 0; i < tv.size(); ++i) {
        if (i) s += ",";
        s += tv[i].display();
    }
    s += ")\n";
    s += "tame: " + std::string(prof.tame ? "yes" : "no") +
         "  rh_defect: " + std::to_string(prof.rh_defect) + "\n";
    return s;
}

} // namespace covers
