#pragma once

// Integer-coefficient polynomials and a small expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := '(' expr ')' | 'x' | uint
// The displayed covers are stored this way so one formula can be reduced at
// many characteristics.

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "covers/error.hpp"
#include "covers/ffield.hpp"

namespace covers {

using IntPoly = std::vector<long long>;  // constant term first, trimmed

inline void ip_trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline IntPoly ip_add(IntPoly a, const IntPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    ip_trim(a);
    return a;
}

inline IntPoly ip_neg(IntPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

inline IntPoly ip_sub(IntPoly a, const IntPoly& b) { return ip_add(std::move(a), ip_neg(b)); }

inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    ip_trim(c);
    return c;
}

inline IntPoly ip_pow(IntPoly a, unsigned e) {
    IntPoly r{1};
    while (e) {
        if (e & 1) r = ip_mul(r, a);
        a = ip_mul(a, a);
        e >>= 1;
    }
    return r;
}

inline Poly reduce_mod(const IntPoly& a, const Field& F) {
    std::vector<Field::Elem> cs;
    cs.reserve(a.size());
    for (long long c : a) cs.push_back(F.from_int(c));
    return Poly(F, std::move(cs));
}

inline std::string ip_to_string(const IntPoly& a) {
    if (a.empty()) return "0";
    std::string s;
    for (size_t i = a.size(); i-- > 0;) {
        long long c = a[i];
        if (c == 0) continue;
        if (!s.empty()) {
            s += c > 0 ? " + " : " - ";
            c = c > 0 ? c : -c;
        } else if (c < 0) {
            s += "-";
            c = -c;
        }
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

namespace detail {

struct IntPolyParser {
    const std::string& text;
    size_t pos = 0;

    explicit IntPolyParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in '" + text + "'");
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoll(text.substr(start, pos - start));
    }

    IntPoly atom() {
        skip_ws();
        if (eat('(')) {
            IntPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
            ++pos;
            return IntPoly{0, 1};
        }
        return IntPoly{integer()};
    }

    IntPoly factor() {
        IntPoly a = atom();
        if (eat('^')) {
            long long e = integer();
            if (e < 0 || e > 64) fail("exponent out of range");
            a = ip_pow(a, static_cast<unsigned>(e));
        }
        return a;
    }

    IntPoly term() {
        IntPoly a = factor();
        while (eat('*')) a = ip_mul(a, factor());
        return a;
    }

    IntPoly expr() {
        bool neg = eat('-');
        IntPoly a = term();
        if (neg) a = ip_neg(std::move(a));
        while (true) {
            if (eat('+')) a = ip_add(std::move(a), term());
            else if (eat('-')) a = ip_sub(std::move(a), term());
            else break;
        }
        return a;
    }
};

} // namespace detail

inline IntPoly parse_int_poly(const std::string& text) {
    detail::IntPolyParser p(text);
    IntPoly a = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return a;
}

} // namespace covers
