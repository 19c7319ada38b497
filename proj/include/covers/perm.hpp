#pragma once

// Exact permutations of {1..n} and their cycle types.
//
// Composition convention: compose(a, b) applies a first, then b, so a
// branch-cycle tuple (g1, ..., gr) multiplies left-to-right and
// "product one" means g1 g2 ... gr = id read in listed order.
// Points are 1-based in all text formats and cycle constructors;
// internal storage is a 0-based image table.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "covers/error.hpp"

namespace covers {

class Perm {
public:
    Perm() = default;

    static Perm identity(int n) {
        check_degree(n);
        Perm p;
        p.img_.resize(static_cast<size_t>(n));
        std::iota(p.img_.begin(), p.img_.end(), 0);
        return p;
    }

    // images[i] = image of point i, 0-based on both sides
    static Perm from_images(std::vector<int> images) {
        check_degree(static_cast<int>(images.size()));
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<size_t>(v)])
                throw ParseError("image table is not a bijection of {1..n}");
            seen[static_cast<size_t>(v)] = 1;
        }
        Perm p;
        p.img_ = std::move(images);
        return p;
    }

    // cycles given with 1-based points, applied left to right
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Perm p = identity(n);
        for (const auto& c : cycles) {
            Perm step = identity(n);
            for (size_t i = 0; i < c.size(); ++i) {
                int a = c[i], b = c[(i + 1) % c.size()];
                if (a < 1 || a > n || b < 1 || b > n)
                    throw ParseError("cycle point out of range 1..n");
                if (step.img_[static_cast<size_t>(a - 1)] != a - 1)
                    throw ParseError("point repeated inside a cycle");
                step.img_[static_cast<size_t>(a - 1)] = b - 1;
            }
            p = p * step;
        }
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }

    // 0-based application
    int apply(int i) const { return img_[static_cast<size_t>(i)]; }
    // 1-based application
    int apply1(int p) const { return img_[static_cast<size_t>(p - 1)] + 1; }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[static_cast<size_t>(i)] != i) return false;
        return true;
    }

    // this first, then rhs
    Perm operator*(const Perm& rhs) const {
        if (degree() != rhs.degree())
            throw DegreeMismatch("cannot compose permutations of degree " +
                                 std::to_string(degree()) + " and " + std::to_string(rhs.degree()));
        Perm r;
        r.img_.resize(img_.size());
        for (size_t i = 0; i < img_.size(); ++i)
            r.img_[i] = rhs.img_[static_cast<size_t>(img_[i])];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (size_t i = 0; i < img_.size(); ++i)
            r.img_[static_cast<size_t>(img_[i])] = static_cast<int>(i);
        return r;
    }

    // conjugate by s: s^-1 * this * s  (maps the cycle structure through s)
    Perm conjugated_by(const Perm& s) const {
        if (degree() != s.degree()) throw DegreeMismatch("conjugation degree mismatch");
        Perm r;
        r.img_.resize(img_.size());
        for (size_t i = 0; i < img_.size(); ++i)
            r.img_[static_cast<size_t>(s.img_[i])] = s.img_[static_cast<size_t>(img_[i])];
        return r;
    }

    bool is_even() const {
        int transpositions = 0;
        std::vector<char> seen(img_.size(), 0);
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (size_t j = i; !seen[j]; j = static_cast<size_t>(img_[j])) {
                seen[j] = 1;
                ++len;
            }
            transpositions += len - 1;
        }
        return transpositions % 2 == 0;
    }

    // disjoint cycles, 0-based points, each starting at its least point,
    // sorted by least point; fixed points omitted
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(img_.size(), 0);
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i)) continue;
            std::vector<int> c;
            for (size_t j = i; !seen[j]; j = static_cast<size_t>(img_[j])) {
                seen[j] = 1;
                c.push_back(static_cast<int>(j));
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    int max_moved_point1() const {  // 0 when identity
        for (int i = degree() - 1; i >= 0; --i)
            if (img_[static_cast<size_t>(i)] != i) return i + 1;
        return 0;
    }

    std::uint64_t element_order() const {
        std::uint64_t ord = 1;
        std::vector<char> seen(img_.size(), 0);
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0;
            for (size_t j = i; !seen[j]; j = static_cast<size_t>(img_[j])) {
                seen[j] = 1;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const {
        if (img_.size() != o.img_.size()) return img_.size() < o.img_.size();
        return img_ < o.img_;
    }

private:
    static void check_degree(int n) {
        if (n < 1) throw ParseError("permutation degree must be positive");
        if (n > 64) throw ParseError("permutation degree above supported limit 64");
    }

    std::vector<int> img_;
};

// ---------------------------------------------------------------------------
// CycleType: multiset of cycle lengths (fixed points included), descending.

class CycleType {
public:
    CycleType() = default;

    CycleType(int degree, std::vector<int> parts) : n_(degree), parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        long long sum = 0;
        for (int p : parts_) {
            if (p < 1) throw ParseError("cycle type parts must be >= 1");
            sum += p;
        }
        if (sum != n_) throw ParseError("cycle type parts must sum to the degree");
    }

    explicit CycleType(const Perm& p) {
        n_ = p.degree();
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            int len = 0;
            for (int j = i; !seen[static_cast<size_t>(j)]; j = p.apply(j)) {
                seen[static_cast<size_t>(j)] = 1;
                ++len;
            }
            parts_.push_back(len);
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    int degree() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }

    bool is_identity_type() const { return parts_.empty() || parts_.front() == 1; }

    // parity of any permutation with this type
    bool is_even() const { return (n_ - static_cast<int>(parts_.size())) % 2 == 0; }

    // sum of (len - 1): the ramification index contribution
    int index() const { return n_ - static_cast<int>(parts_.size()); }

    // paper's display: fixed points suppressed, hyphen-joined ("2-2", "3");
    // identity type renders as "1"
    std::string display() const {
        std::string s;
        for (int p : parts_) {
            if (p == 1) break;
            if (!s.empty()) s += '-';
            s += std::to_string(p);
        }
        return s.empty() ? std::string("1") : s;
    }

    std::string display_full() const {
        std::string s;
        for (int p : parts_) {
            if (!s.empty()) s += '-';
            s += std::to_string(p);
        }
        return s;
    }

    // token like "2-2" or "3" or "5", padded with fixed points up to degree
    static CycleType parse(const std::string& token, int degree) {
        std::vector<int> parts;
        long long sum = 0;
        size_t i = 0;
        while (i < token.size()) {
            size_t j = i;
            while (j < token.size() && std::isdigit(static_cast<unsigned char>(token[j]))) ++j;
            if (j == i) throw ParseError("bad cycle-type token '" + token + "'");
            int v = std::stoi(token.substr(i, j - i));
            parts.push_back(v);
            sum += v;
            i = j;
            if (i < token.size()) {
                if (token[i] != '-') throw ParseError("bad cycle-type token '" + token + "'");
                ++i;
                if (i == token.size()) throw ParseError("bad cycle-type token '" + token + "'");
            }
        }
        if (sum > degree)
            throw ParseError("cycle-type token '" + token + "' exceeds degree " + std::to_string(degree));
        while (sum < degree) {
            parts.push_back(1);
            ++sum;
        }
        return CycleType(degree, std::move(parts));
    }

    bool operator==(const CycleType& o) const { return n_ == o.n_ && parts_ == o.parts_; }
    bool operator!=(const CycleType& o) const { return !(*this == o); }
    bool operator<(const CycleType& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return parts_ < o.parts_;  // descending-parts vectors compare lexicographically
    }

private:
    int n_ = 0;
    std::vector<int> parts_;
};

// ---------------------------------------------------------------------------
// Cycle-notation text format.
//
// Output: disjoint cycles, 1-based, each starting at its least point,
// cycles ordered by least point; the identity prints as "()" and a degree
// annotation "@n" is appended whenever the degree is not recoverable from
// the largest moved point.
// Input: whitespace-insensitive; cycles need not be disjoint (they are
// multiplied left to right); "@n" is accepted anywhere at the end.

inline std::string print_perm(const Perm& p) {
    auto cyc = p.cycles();
    std::string s;
    for (const auto& c : cyc) {
        s += '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i] + 1);
        }
        s += ')';
    }
    if (s.empty()) s = "()";
    if (p.max_moved_point1() != p.degree()) s += "@" + std::to_string(p.degree());
    return s;
}

inline Perm parse_perm(const std::string& text) {
    std::vector<std::vector<int>> cycles;
    int max_point = 0;
    int annotated = 0;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw ParseError("expected a point number at position " + std::to_string(i) +
                                     " in '" + text + "'");
        int v = std::stoi(text.substr(i, j - i));
        i = j;
        return v;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] == '(') {
            ++i;
            std::vector<int> c;
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;  // "()" = identity factor
            } else {
                while (true) {
                    int v = read_int();
                    if (v < 1) throw ParseError("points are 1-based in '" + text + "'");
                    c.push_back(v);
                    max_point = std::max(max_point, v);
                    skip_ws();
                    if (i < text.size() && text[i] == ',') { ++i; continue; }
                    if (i < text.size() && text[i] == ')') { ++i; break; }
                    throw ParseError("expected ',' or ')' at position " + std::to_string(i) +
                                     " in '" + text + "'");
                }
                if (c.size() >= 2) cycles.push_back(std::move(c));
            }
        } else if (text[i] == '@') {
            ++i;
            annotated = read_int();
            skip_ws();
            if (i != text.size())
                throw ParseError("degree annotation must end the permutation in '" + text + "'");
            break;
        } else {
            throw ParseError("unexpected character '" + std::string(1, text[i]) +
                             "' at position " + std::to_string(i) + " in '" + text + "'");
        }
        skip_ws();
    }
    if (annotated > 0 && annotated < max_point)
        throw ParseError("degree annotation @" + std::to_string(annotated) +
                         " is below the largest point " + std::to_string(max_point));
    int degree = annotated > 0 ? annotated : std::max(max_point, 1);
    return Perm::from_cycles(degree, cycles);
}

// semicolon-separated list of permutations; all are padded to a common degree
inline std::vector<Perm> parse_perm_list(const std::string& text) {
    std::vector<Perm> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(';', start);
        std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        bool blank = true;
        for (char ch : piece)
            if (!std::isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
        if (!blank) out.push_back(parse_perm(piece));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (out.empty()) throw ParseError("no permutations in '" + text + "'");
    int degree = 0;
    for (const auto& p : out) degree = std::max(degree, p.degree());
    for (auto& p : out)
        if (p.degree() < degree) {
            std::vector<int> images(static_cast<size_t>(degree));
            std::iota(images.begin(), images.end(), 0);
            for (int i = 0; i < p.degree(); ++i) images[static_cast<size_t>(i)] = p.apply(i);
            p = Perm::from_images(std::move(images));
        }
    return out;
}

inline std::string print_perm_list(const std::vector<Perm>& gens) {
    std::string s;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += "; ";
        s += print_perm(gens[i]);
    }
    return s;
}

} // namespace covers
