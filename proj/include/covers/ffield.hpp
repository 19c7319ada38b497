#pragma once

// Exact arithmetic in F_p and F_{p^k} and dense univariate polynomials.
//
// Field elements are coefficient vectors in the modulus basis (length k,
// constant term first). The extension modulus is verified irreducible at
// construction. Polynomials are canonical: no trailing zero coefficients,
// the zero polynomial has an empty coefficient list.

#include <cstdint>
#include <string>
#include <vector>

#include "covers/error.hpp"

namespace covers {

namespace fpx {  // minimal F_p[x] helpers used to certify extension moduli

using Vec = std::vector<std::uint32_t>;

inline void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Vec mul(const Vec& a, const Vec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Vec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>(
                (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(c);
    return c;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // Fermat; p prime, a != 0
    std::uint64_t r = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline Vec mod(Vec a, const Vec& m, std::uint32_t p) {
    trim(a);
    if (m.empty()) throw Error("division by zero polynomial");
    std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = c * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

inline Vec gcd(Vec a, Vec b, std::uint32_t p) {
    trim(a); trim(b);
    while (!b.empty()) {
        Vec r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint32_t li = inv_mod(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * li % p);
    }
    return a;
}

// x^(p^e) mod m
inline Vec frob_power_of_x(const Vec& m, std::uint32_t p, std::uint32_t e) {
    Vec x{0, 1};
    Vec acc = mod(x, m, p);
    for (std::uint32_t step = 0; step < e; ++step) {
        // acc := acc^p mod m by square-and-multiply on the exponent p
        Vec r{1};
        Vec base = acc;
        std::uint32_t ee = p;
        while (ee) {
            if (ee & 1) r = mod(mul(r, base, p), m, p);
            base = mod(mul(base, base, p), m, p);
            ee >>= 1;
        }
        acc = std::move(r);
    }
    return acc;
}

inline bool is_irreducible(const Vec& f, std::uint32_t p) {
    Vec m = f;
    trim(m);
    if (m.size() < 2) return false;
    std::uint32_t d = static_cast<std::uint32_t>(m.size() - 1);
    Vec xqd = frob_power_of_x(m, p, d);
    Vec x = mod(Vec{0, 1}, m, p);
    if (xqd != x) return false;
    for (std::uint32_t l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool prime_l = true;
        for (std::uint32_t t = 2; t * t <= l; ++t)
            if (l % t == 0) { prime_l = false; break; }
        if (!prime_l) continue;
        Vec xe = frob_power_of_x(m, p, d / l);
        // gcd(x^(p^(d/l)) - x, f) must be 1
        Vec diff = xe;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        trim(diff);
        Vec g = gcd(m, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace fpx

// ---------------------------------------------------------------------------

class Field {
public:
    using Elem = std::vector<std::uint32_t>;

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static Field prime(std::uint32_t p) {
        check_prime(p);
        Field f;
        f.p_ = p;
        f.k_ = 1;
        f.modulus_ = {0, 1};  // the placeholder x
        return f;
    }

    // canonical extension: lexicographically least monic irreducible modulus
    static Field extension(std::uint32_t p, std::uint32_t k) {
        check_prime(p);
        if (k == 0) throw ParseError("extension degree must be >= 1");
        if (k == 1) return prime(p);
        fpx::Vec mod(k + 1, 0);
        mod[k] = 1;
        // iterate the lower coefficients as base-p digits
        while (true) {
            if (fpx::is_irreducible(mod, p)) break;
            size_t i = 0;
            while (i < k && mod[i] + 1 == p) mod[i++] = 0;
            if (i == k) throw Error("no irreducible modulus found");  // cannot happen
            ++mod[i];
        }
        Field f;
        f.p_ = p;
        f.k_ = k;
        f.modulus_ = std::move(mod);
        return f;
    }

    static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
        check_prime(p);
        fpx::trim(modulus);
        if (modulus.size() < 2) throw ParseError("modulus must be nonconstant");
        if (modulus.back() != 1) throw ParseError("modulus must be monic");
        if (modulus.size() > 2 && !fpx::is_irreducible(modulus, p))
            throw ParseError("modulus is not irreducible");
        Field f;
        f.p_ = p;
        f.k_ = static_cast<std::uint32_t>(modulus.size() - 1);
        f.modulus_ = std::move(modulus);
        return f;
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint64_t q() const {
        std::uint64_t v = 1;
        for (std::uint32_t i = 0; i < k_; ++i) v = checked_mul_q(v, p_);
        return v;
    }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Elem zero() const { return Elem(k_, 0); }
    Elem one() const {
        Elem e(k_, 0);
        e[0] = 1;
        return e;
    }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        Elem e(k_, 0);
        e[0] = static_cast<std::uint32_t>(r);
        return e;
    }
    // the class of x in F_p[x]/(modulus); only meaningful for k >= 2
    Elem gen() const {
        Elem e(k_, 0);
        if (k_ >= 2) e[1] = 1;
        else e[0] = 0;
        return e;
    }

    bool is_zero(const Elem& a) const {
        for (auto c : a)
            if (c) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem c(k_);
        for (std::uint32_t i = 0; i < k_; ++i) c[i] = (a[i] + b[i]) % p_;
        return c;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem c(k_);
        for (std::uint32_t i = 0; i < k_; ++i) c[i] = (a[i] + p_ - b[i]) % p_;
        return c;
    }
    Elem neg(const Elem& a) const { return sub(zero(), a); }

    Elem mul(const Elem& a, const Elem& b) const {
        if (k_ == 1) {
            Elem c(1);
            c[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p_);
            return c;
        }
        fpx::Vec prod(2 * k_ - 1, 0);
        for (std::uint32_t i = 0; i < k_; ++i)
            for (std::uint32_t j = 0; j < k_; ++j)
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
        fpx::Vec red = fpx::mod(std::move(prod), modulus_, p_);
        red.resize(k_, 0);
        return red;
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw Error("inverse of zero field element");
        return pow(a, q() - 2);
    }

    Elem frobenius(const Elem& a) const { return pow(a, p_); }

    std::string to_string(const Elem& a) const {
        if (k_ == 1) return std::to_string(a[0]);
        std::string s;
        for (std::uint32_t i = k_; i-- > 0;) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += std::to_string(a[i]);
            } else {
                if (a[i] != 1) s += std::to_string(a[i]) + "*";
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    static void check_prime(std::uint32_t p) {
        if (!is_prime(p)) throw ParseError("field characteristic " + std::to_string(p) + " is not prime");
    }
    static std::uint64_t checked_mul_q(std::uint64_t a, std::uint64_t b) {
        if (b != 0 && a > UINT64_MAX / b) throw Error("field size exceeds 64 bits");
        return a * b;
    }

    std::uint32_t p_ = 2, k_ = 1;
    std::vector<std::uint32_t> modulus_;
};

// ---------------------------------------------------------------------------

class Poly {
public:
    Poly() = default;
    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, std::vector<Field::Elem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, const Field::Elem& c) { return Poly(f, {c}); }
    static Poly one(const Field& f) { return constant(f, f.one()); }
    static Poly x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
    static Poly from_ints(const Field& f, const std::vector<long long>& cs) {
        std::vector<Field::Elem> v;
        v.reserve(cs.size());
        for (long long c : cs) v.push_back(f.from_int(c));
        return Poly(f, std::move(v));
    }

    const Field& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Field::Elem>& coeffs() const { return c_; }

    Field::Elem coeff(size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Field::Elem lead() const { return c_.empty() ? field_.zero() : c_.back(); }

    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // canonical order used to sort factor lists: degree, then coefficients
    bool operator<(const Poly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (size_t i = c_.size(); i-- > 0;)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

    Poly operator+(const Poly& o) const {
        check_field(o);
        std::vector<Field::Elem> v(std::max(c_.size(), o.c_.size()), field_.zero());
        for (size_t i = 0; i < v.size(); ++i) v[i] = field_.add(coeff(i), o.coeff(i));
        return Poly(field_, std::move(v));
    }
    Poly operator-(const Poly& o) const {
        check_field(o);
        std::vector<Field::Elem> v(std::max(c_.size(), o.c_.size()), field_.zero());
        for (size_t i = 0; i < v.size(); ++i) v[i] = field_.sub(coeff(i), o.coeff(i));
        return Poly(field_, std::move(v));
    }
    Poly operator*(const Poly& o) const {
        check_field(o);
        if (is_zero() || o.is_zero()) return Poly(field_);
        std::vector<Field::Elem> v(c_.size() + o.c_.size() - 1, field_.zero());
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
        return Poly(field_, std::move(v));
    }
    Poly scaled(const Field::Elem& s) const {
        std::vector<Field::Elem> v = c_;
        for (auto& e : v) e = field_.mul(e, s);
        return Poly(field_, std::move(v));
    }

    // quotient and remainder; divisor must be nonzero
    std::pair<Poly, Poly> divmod(const Poly& b) const {
        check_field(b);
        if (b.is_zero()) throw Error("polynomial division by zero");
        Poly rem = *this;
        std::vector<Field::Elem> q(
            degree() >= b.degree() ? static_cast<size_t>(degree() - b.degree() + 1) : 0,
            field_.zero());
        Field::Elem lead_inv = field_.inv(b.lead());
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            size_t shift = static_cast<size_t>(rem.degree() - b.degree());
            Field::Elem c = field_.mul(rem.lead(), lead_inv);
            q[shift] = c;
            std::vector<Field::Elem> sub(shift, field_.zero());
            for (const auto& bc : b.c_) sub.push_back(field_.mul(bc, c));
            rem = rem - Poly(field_, std::move(sub));
        }
        return {Poly(field_, std::move(q)), rem};
    }
    Poly operator/(const Poly& b) const { return divmod(b).first; }
    Poly operator%(const Poly& b) const { return divmod(b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(lead()));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(field_);
        std::vector<Field::Elem> v;
        v.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            v.push_back(field_.mul(c_[i], field_.from_int(static_cast<long long>(i))));
        return Poly(field_, std::move(v));
    }

    Field::Elem eval(const Field::Elem& x0) const {
        Field::Elem acc = field_.zero();
        for (size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x0), c_[i]);
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (field_.is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            std::string cs = field_.to_string(c_[i]);
            bool unit = (cs == "1");
            if (i == 0) {
                s += cs;
            } else {
                if (!unit) {
                    bool simple = cs.find(' ') == std::string::npos;
                    s += simple ? cs : "(" + cs + ")";
                    s += "*";
                }
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }
    std::string to_string_with_field() const {
        std::string s = to_string() + " over GF(" + std::to_string(field_.p());
        if (field_.k() > 1) s += "^" + std::to_string(field_.k());
        s += ")";
        return s;
    }

private:
    void check_field(const Poly& o) const {
        if (field_ != o.field_)
            throw FieldMismatch("polynomial operands live in different fields");
    }
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    Field field_;
    std::vector<Field::Elem> c_;
};

inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.field() != b.field())
        throw FieldMismatch("gcd operands live in different fields");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

// a^e mod m with small exponent
inline Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& m) {
    Poly r = Poly::one(a.field());
    Poly base = a % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

// lift a polynomial over F_p (k = 1 viewpoint) coefficientwise into an
// extension of the same characteristic
inline Poly lift_to(const Poly& a, const Field& ext) {
    if (a.field().p() != ext.p())
        throw FieldMismatch("cannot lift across characteristics");
    if (a.field().k() != 1)
        throw FieldMismatch("lift_to expects a prime-field polynomial");
    std::vector<Field::Elem> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) v.push_back(ext.from_int(c[0]));
    return Poly(ext, std::move(v));
}

} // namespace covers
