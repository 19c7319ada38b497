#pragma once

// The cover registry: named branch-cycle tuples and displayed rational maps,
// the census-backed witnesses, and the three-patch construction of the
// degree-6 (2-2)^5 datum with monodromy of order 60.
//
// The registry also exists as a structured-text file; the embedded constant
// below is the source of truth and the bundled file must match it byte for
// byte (a test enforces this).

#include <map>
#include <string>
#include <vector>

#include "covers/census.hpp"
#include "covers/error.hpp"
#include "covers/hurwitz.hpp"
#include "covers/intpoly.hpp"
#include "covers/perm.hpp"

namespace covers::registry {

inline constexpr const char* kRegistryText =
    "# cover registry: named branch-cycle tuples and displayed rational maps\n"
    "# tuple <name> | constraint: <p rule> | anchor: <source ref> | <cycles>\n"
    "# map <name> | anchor: <source ref> | <num>; <den>\n"
    "tuple a6_five_tuple | constraint: p!=2 | anchor: sec3.1 | (1,2)(3,4); (3,6)(4,5); (2,6)(3,4); (2,6)(3,5); (1,2)(4,6)\n"
    "tuple d5_triple | constraint: p!=2,5 | anchor: sec3.1 | (1,2)(3,4); (1,5)(2,3); (1,5,2,4,3)\n"
    "tuple base3_cyclic | constraint: p!=3 | anchor: sec3.1 | (1,2,3); (1,3,2)\n"
    "tuple base4_triple3 | constraint: p!=2,3 | anchor: sec3.1 | (1,2,3); (1,3,4); (1,4,2)\n"
    "tuple base7_patch | constraint: p!=2 | anchor: sec3.1 | (1,2)(6,7); (3,6)(4,7); (3,7)(4,6); (1,5)(2,3); (1,5)(2,3); (1,2)(3,4)\n"
    "map cover_333 | anchor: sec3.1 | x^3*(x-2); 1-2*x\n"
    "map cover_533 | anchor: sec3.1 | x^3*(x^3+x^2+1); x+1\n"
    "map f2 | anchor: sec3.1 | x^5*(x+1); x-1\n";

struct NamedTuple {
    std::string name;
    std::string constraint;  // "p!=2,5" or "any"
    std::string anchor;
    std::vector<Perm> perms;
};

struct DisplayedCover {
    std::string name;
    std::string anchor;
    IntPoly num, den;
};

struct ParsedRegistry {
    std::vector<NamedTuple> tuples;
    std::vector<DisplayedCover> covers;
};

inline ParsedRegistry parse_registry_text(const std::string& text) {
    ParsedRegistry out;
    size_t pos = 0;
    auto next_field = [](const std::string& line, size_t& at) {
        size_t bar = line.find('|', at);
        std::string piece = line.substr(at, bar == std::string::npos ? std::string::npos : bar - at);
        at = bar == std::string::npos ? line.size() : bar + 1;
        size_t b = piece.find_first_not_of(" \t");
        size_t e = piece.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : piece.substr(b, e - b + 1);
    };
    auto strip_key = [](std::string field, const std::string& key) {
        if (field.rfind(key, 0) != 0)
            throw ParseError("registry field '" + field + "' must start with '" + key + "'");
        field = field.substr(key.size());
        size_t b = field.find_first_not_of(" \t");
        return b == std::string::npos ? std::string() : field.substr(b);
    };
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? text.size() : eol + 1;
        if (line.empty() || line[0] == '#') continue;
        size_t at = 0;
        std::string head = next_field(line, at);
        size_t sp = head.find(' ');
        if (sp == std::string::npos) throw ParseError("bad registry line: " + line);
        std::string kind = head.substr(0, sp), name = head.substr(sp + 1);
        if (kind == "tuple") {
            NamedTuple t;
            t.name = name;
            t.constraint = strip_key(next_field(line, at), "constraint:");
            t.anchor = strip_key(next_field(line, at), "anchor:");
            t.perms = parse_perm_list(next_field(line, at));
            out.tuples.push_back(std::move(t));
        } else if (kind == "map") {
            DisplayedCover c;
            c.name = name;
            c.anchor = strip_key(next_field(line, at), "anchor:");
            std::string polys = next_field(line, at);
            size_t semi = polys.find(';');
            if (semi == std::string::npos) throw ParseError("map line needs 'num; den': " + line);
            c.num = parse_int_poly(polys.substr(0, semi));
            c.den = parse_int_poly(polys.substr(semi + 1));
            out.covers.push_back(std::move(c));
        } else {
            throw ParseError("unknown registry entry kind '" + kind + "'");
        }
    }
    return out;
}

inline const ParsedRegistry& bundled() {
    static const ParsedRegistry reg = parse_registry_text(kRegistryText);
    return reg;
}

inline const NamedTuple& named_tuple(const std::string& name) {
    for (const auto& t : bundled().tuples)
        if (t.name == name) return t;
    throw UnknownClaim("no registry tuple named '" + name + "'");
}

inline const DisplayedCover& displayed_cover(const std::string& name) {
    for (const auto& c : bundled().covers)
        if (c.name == name) return c;
    throw UnknownClaim("no registry cover named '" + name + "'");
}

inline bool constraint_allows(const std::string& constraint, int p) {
    if (p == 0 || constraint == "any") return true;
    if (constraint.rfind("p!=", 0) != 0) throw ParseError("bad constraint '" + constraint + "'");
    size_t at = 3;
    while (at < constraint.size()) {
        size_t comma = constraint.find(',', at);
        int bad = std::stoi(constraint.substr(at, comma == std::string::npos ? std::string::npos : comma - at));
        if (p == bad) return false;
        at = comma == std::string::npos ? constraint.size() : comma + 1;
    }
    return true;
}

// build a named tuple as a cover datum at characteristic p
inline CoverDatum datum(const std::string& name, int p) {
    const NamedTuple& t = named_tuple(name);
    if (!constraint_allows(t.constraint, p))
        throw WildFlavor("registry datum '" + name + "' is not available at p = " + std::to_string(p));
    return new_datum(p, t.perms, {"base existence anchored at " + t.anchor});
}

// ---------------------------------------------------------------------------
// Census-backed witnesses (cached; the search is characteristic-free).

namespace detail {

inline std::vector<Perm> census_witness(int degree, const std::vector<std::string>& tokens,
                                        const std::string& group_name) {
    std::vector<CycleType> types;
    for (const auto& tok : tokens) types.push_back(CycleType::parse(tok, degree));
    SearchSpec spec(degree, std::move(types), Ambient::Alternating, true);
    CensusResult res = enumerate_tuples(spec);
    auto it = res.buckets.find(group_name);
    if (it == res.buckets.end())
        throw Error("census found no " + group_name + " witness for the requested type");
    if (!verify_census_witness(res, group_name))
        throw Error("census witness failed re-verification");
    return it->second.witness;
}

} // namespace detail

// a degree-6 (5,2-2,5) tuple with monodromy of order 60
inline CoverDatum witness_5_22_5(int p) {
    static const std::vector<Perm> tuple =
        detail::census_witness(6, {"5", "2-2", "5"}, "PSL2(5)");
    return new_datum(p, tuple, {"census witness for type (5,2-2,5), group PSL2(5)"});
}

// a degree-6 (3,3-3,5) tuple with monodromy A6
inline CoverDatum witness_533(int p) {
    static const std::vector<Perm> tuple =
        detail::census_witness(6, {"3", "3-3", "5"}, "A6");
    return new_datum(p, tuple, {"census witness for type (3,3-3,5), group A6"});
}

// ---------------------------------------------------------------------------
// The three-patch construction: dihedral triple + (5,2-2,5) witness +
// dihedral triple, glued along the 5-cycles, yields a degree-6 genus-0
// (2-2)^5 datum whose group has order 60.

inline CoverDatum three_patch(int p) {
    CoverDatum f1 = datum("d5_triple", p);
    CoverDatum f2 = witness_5_22_5(p);
    CoverDatum first = glue_at(f1, 2, f2, 0);
    CoverDatum f3 = datum("d5_triple", p);
    CoverDatum out = glue_at(first, 3, f3, 2);
    if (out.degree != 6 || out.genus != 0 || out.branch_count() != 5 || out.group.order() != 60)
        throw Error("three-patch construction failed its own contract");
    for (const auto& t : out.type_vector)
        if (t != CycleType::parse("2-2", 6))
            throw Error("three-patch type vector is not (2-2)^5");
    return out;
}

// ---------------------------------------------------------------------------
// Candidate groups used by the discrimination claims.

inline GroupHandle psl25_handle() {
    return GroupHandle::generate({Perm::from_cycles(6, {{1, 2, 3, 4, 5}}),
                                  Perm::from_cycles(6, {{1, 6}, {2, 5}})});
}

inline GroupHandle a6_handle() { return natural_alternating(6); }

} // namespace covers::registry
