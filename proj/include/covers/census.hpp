#pragma once

// Exhaustive censuses of product-one generating tuples with prescribed cycle
// types, overgroup-lattice search, and enumeration of ramification types
// allowed by Riemann-Hurwitz for tame genus-0 covers.
//
// Tuple normalization: g1 is pinned to one class representative; g2..g_{r-1}
// range over their full classes; g_r is forced as the inverse of the partial
// product and accepted iff its type matches. Every tuple with g1 anywhere in
// its class is simultaneous-conjugate to exactly class_size(t1) pinned ones,
// so pinned counts times class_size(t1) reproduce the unnormalized census.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "covers/error.hpp"
#include "covers/group.hpp"
#include "covers/perm.hpp"

namespace covers {

enum class Ambient { Alternating, Symmetric };

inline std::string ambient_name(Ambient a, int n) {
    return (a == Ambient::Alternating ? "A" : "S") + std::to_string(n);
}

// ---------------------------------------------------------------------------
// Conjugacy classes in S_n by cycle type.

inline std::uint64_t class_size(const CycleType& t) {
    std::uint64_t denom = 1;
    std::map<int, int> mult;
    for (int part : t.parts()) {
        denom = checked_mul(denom, static_cast<std::uint64_t>(part));
        ++mult[part];
    }
    for (auto [part, m] : mult)
        denom = checked_mul(denom, factorial_u64(m));
    return factorial_u64(t.degree()) / denom;
}

// cycles filled with consecutive points, longest parts first
inline Perm class_representative(const CycleType& t) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int part : t.parts()) {
        std::vector<int> c;
        for (int i = 0; i < part; ++i) c.push_back(next++);
        if (c.size() >= 2) cycles.push_back(std::move(c));
    }
    return Perm::from_cycles(t.degree(), cycles);
}

namespace detail {

inline void class_elements_rec(int n, std::map<int, int>& remaining, std::vector<int>& img,
                               std::vector<char>& used, int placed, std::vector<Perm>& out) {
    if (placed == n) {
        out.push_back(Perm::from_images(img));
        return;
    }
    int anchor = 0;
    while (used[static_cast<size_t>(anchor)]) ++anchor;
    for (auto& [len, cnt] : remaining) {
        if (cnt == 0) continue;
        --cnt;
        used[static_cast<size_t>(anchor)] = 1;
        // choose the remaining len-1 cycle points in every order
        std::vector<int> cyc{anchor};
        std::function<void()> extend = [&] {
            if (static_cast<int>(cyc.size()) == len) {
                for (size_t i = 0; i < cyc.size(); ++i)
                    img[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
                class_elements_rec(n, remaining, img, used, placed + len, out);
                return;
            }
            for (int p = anchor + 1; p < n; ++p) {
                if (used[static_cast<size_t>(p)]) continue;
                used[static_cast<size_t>(p)] = 1;
                cyc.push_back(p);
                extend();
                cyc.pop_back();
                used[static_cast<size_t>(p)] = 0;
            }
        };
        extend();
        used[static_cast<size_t>(anchor)] = 0;
        ++cnt;
    }
}

} // namespace detail

// all permutations of S_n with the given cycle type, deterministic order
inline std::vector<Perm> class_elements(const CycleType& t) {
    int n = t.degree();
    std::map<int, int> remaining;
    for (int part : t.parts()) ++remaining[part];
    std::vector<int> img(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::vector<Perm> out;
    detail::class_elements_rec(n, remaining, img, used, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Tuple census.

struct SearchSpec {
    int degree = 0;
    std::vector<CycleType> types;  // length r >= 1, none the identity type
    Ambient ambient = Ambient::Alternating;
    bool require_transitive = false;

    SearchSpec(int n, std::vector<CycleType> ts, Ambient amb, bool transitive)
        : degree(n), types(std::move(ts)), ambient(amb), require_transitive(transitive) {
        if (types.empty()) throw ParseError("census spec needs at least one type");
        for (const auto& t : types) {
            if (t.degree() != degree)
                throw ParseError("census type degree does not match the spec degree");
            if (t.is_identity_type())
                throw ParseError("census types must be nonidentity");
            if (ambient == Ambient::Alternating && !t.is_even())
                throw VacuousSpec("odd cycle type '" + t.display() +
                                  "' under alternating ambient makes the census vacuous");
        }
    }
};

struct CensusBucket {
    std::uint64_t count = 0;          // tuples with g1 pinned to the class representative
    std::vector<Perm> witness;        // first tuple encountered
};

struct CensusResult {
    std::optional<SearchSpec> spec;
    std::map<std::string, CensusBucket> buckets;  // by group name
    std::uint64_t total_raw = 0;       // type+product matches before the transitivity filter
    std::uint64_t normalization_factor = 0;  // class size of type 1

    bool has_group(const std::string& name) const { return buckets.count(name) != 0; }
};

inline CensusResult enumerate_tuples(const SearchSpec& spec, std::uint64_t budget = 1'000'000'000ULL) {
    const int r = static_cast<int>(spec.types.size());
    if (r < 2) throw ParseError("census enumeration needs at least two types");

    std::uint64_t work = 1;
    bool overflow = false;
    for (int i = 0; i + 1 < r; ++i) {
        std::uint64_t cs = class_size(spec.types[static_cast<size_t>(i)]);
        if (cs != 0 && work > UINT64_MAX / cs) { overflow = true; break; }
        work *= cs;
    }
    if (overflow || work > budget)
        throw Infeasible("census work estimate exceeds budget " + std::to_string(budget));

    CensusResult res;
    res.spec = spec;
    res.normalization_factor = class_size(spec.types.front());

    const Perm g1 = class_representative(spec.types.front());
    std::vector<std::vector<Perm>> middle;
    for (int i = 1; i + 1 < r; ++i)
        middle.push_back(class_elements(spec.types[static_cast<size_t>(i)]));
    const CycleType& last_type = spec.types.back();

    std::vector<Perm> tuple(static_cast<size_t>(r), g1);
    std::function<void(size_t, const Perm&)> rec = [&](size_t slot, const Perm& prefix) {
        if (slot + 1 == static_cast<size_t>(r)) {
            Perm g_last = prefix.inverse();
            if (CycleType(g_last) != last_type) return;
            tuple.back() = g_last;
            ++res.total_raw;
            if (spec.require_transitive &&
                GroupHandle::orbit_partition(tuple, spec.degree).size() != 1)
                return;
            auto name = identify(GroupHandle::generate(tuple));
            auto& bucket = res.buckets[name];
            if (bucket.count == 0) bucket.witness = tuple;
            ++bucket.count;
            return;
        }
        for (const auto& g : middle[slot - 1]) {
            tuple[slot] = g;
            rec(slot + 1, prefix * g);
        }
    };
    rec(1, g1);
    return res;
}

// re-derive everything a bucket asserts about its witness
inline bool verify_census_witness(const CensusResult& res, const std::string& group_name) {
    auto it = res.buckets.find(group_name);
    if (it == res.buckets.end() || !res.spec) return false;
    const auto& w = it->second.witness;
    const auto& spec = *res.spec;
    if (w.size() != spec.types.size()) return false;
    Perm prod = Perm::identity(spec.degree);
    for (size_t i = 0; i < w.size(); ++i) {
        if (CycleType(w[i]) != spec.types[i]) return false;
        prod = prod * w[i];
    }
    if (!prod.is_identity()) return false;
    if (spec.require_transitive && GroupHandle::orbit_partition(w, spec.degree).size() != 1)
        return false;
    return identify(GroupHandle::generate(w)) == group_name;
}

inline std::string census_to_text(const CensusResult& res) {
    std::string s;
    if (res.spec) {
        const auto& spec = *res.spec;
        s += "census degree " + std::to_string(spec.degree) + " types (";
        for (size_t i = 0; i < spec.types.size(); ++i) {
            if (i) s += ",";
            s += spec.types[i].display();
        }
        s += ") ambient " + ambient_name(spec.ambient, spec.degree);
        s += spec.require_transitive ? " transitive\n" : "\n";
    }
    s += "raw product-one tuples (g1 pinned): " + std::to_string(res.total_raw) + "\n";
    s += "normalization factor (class size of type 1): " +
         std::to_string(res.normalization_factor) + "\n";
    for (const auto& [name, bucket] : res.buckets) {
        s += name + ": " + std::to_string(bucket.count) + "  witness ";
        s += print_perm_list(bucket.witness);
        s += "\n";
    }
    if (res.buckets.empty()) s += "(no tuples)\n";
    return s;
}

// ---------------------------------------------------------------------------
// Overgroup lattice.
//
// Breadth-first closure under single-generator extensions <H, x>. Every
// overgroup L of G is reached: any x in L \ H extends H inside L, and a
// strictly increasing chain of such extensions terminates at L. Extensions
// depend only on the right coset Hx, so x runs over coset representatives.

namespace detail {

inline std::string perm_key(const Perm& p) {
    std::string k;
    k.reserve(p.images().size());
    for (int v : p.images()) k.push_back(static_cast<char>(v));
    return k;
}

inline bool groups_equal(const GroupHandle& a, const GroupHandle& b) {
    if (a.order() != b.order()) return false;
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    return true;
}

} // namespace detail

inline std::vector<GroupHandle> overgroup_lattice(
    const GroupHandle& G, const GroupHandle& ambient,
    const std::function<bool(const GroupHandle&)>& filter = nullptr,
    std::uint64_t bound = 1'000'000ULL) {
    if (G.degree() != ambient.degree())
        throw DegreeMismatch("lattice arguments must share a degree");
    for (const auto& g : G.generators())
        if (!ambient.contains(g))
            throw ParseError("lattice base group is not contained in the ambient group");
    if (ambient.order() > bound)
        throw BoundExceeded("ambient order " + std::to_string(ambient.order()) +
                            " exceeds lattice bound " + std::to_string(bound));

    const auto ambient_elems = ambient.elements(bound);
    std::vector<GroupHandle> discovered{G};
    for (size_t qi = 0; qi < discovered.size(); ++qi) {
        const GroupHandle H = discovered[qi];
        if (H.order() == ambient.order()) continue;
        std::unordered_set<std::string> seen_coset;
        std::vector<Perm> h_elems = H.elements(bound);
        for (const auto& x : ambient_elems) {
            if (seen_coset.count(detail::perm_key(x))) continue;
            for (const auto& h : h_elems) seen_coset.insert(detail::perm_key(h * x));
            if (H.contains(x)) continue;
            std::vector<Perm> gens = H.generators();
            gens.push_back(x);
            GroupHandle K = GroupHandle::generate(gens);
            bool known = false;
            for (const auto& seen : discovered)
                if (detail::groups_equal(K, seen)) { known = true; break; }
            if (!known) discovered.push_back(std::move(K));
        }
    }
    std::sort(discovered.begin(), discovered.end(),
              [](const GroupHandle& a, const GroupHandle& b) { return a.order() < b.order(); });
    if (!filter) return discovered;
    std::vector<GroupHandle> out;
    for (auto& H : discovered)
        if (filter(H)) out.push_back(std::move(H));
    return out;
}

// ---------------------------------------------------------------------------
// Ramification types allowed by Riemann-Hurwitz for a tame degree-n cover of
// the line by the line: multisets of nonidentity types, every cycle length
// prime to p, with total index 2n-2. Alternating ambient restricts to even
// types. p = 0 imposes no divisibility constraint.

namespace detail {

inline void partitions_rec(int n, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

inline std::vector<std::vector<int>> integer_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

inline std::vector<std::vector<CycleType>> possible_tame_types(int n, int p,
                                                               Ambient ambient = Ambient::Alternating) {
    if (n < 2) throw ParseError("tame-type enumeration needs degree >= 2");
    std::vector<CycleType> usable;
    for (auto& parts : integer_partitions(n)) {
        CycleType t(n, parts);
        if (t.is_identity_type()) continue;
        if (ambient == Ambient::Alternating && !t.is_even()) continue;
        if (p > 0) {
            bool tame = true;
            for (int part : t.parts())
                if (part % p == 0) { tame = false; break; }
            if (!tame) continue;
        }
        usable.push_back(std::move(t));
    }
    std::sort(usable.begin(), usable.end());
    const int target = 2 * n - 2;
    std::vector<std::vector<CycleType>> out;
    std::vector<CycleType> cur;
    std::function<void(size_t, int)> rec = [&](size_t from, int remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (size_t i = from; i < usable.size(); ++i) {
            int idx = usable[i].index();
            if (idx > remaining) continue;
            cur.push_back(usable[i]);
            rec(i, remaining - idx);
            cur.pop_back();
        }
    };
    rec(0, target);
    for (auto& vec : out)
        std::sort(vec.begin(), vec.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

inline std::string type_vector_display(const std::vector<CycleType>& types) {
    // "(3)^8" for a constant vector, otherwise runs compress to t^k
    bool constant = !types.empty();
    for (const auto& t : types)
        if (t != types.front()) { constant = false; break; }
    if (constant && types.size() >= 2)
        return "(" + types.front().display() + ")^" + std::to_string(types.size());
    std::string s = "(";
    size_t i = 0;
    bool first = true;
    while (i < types.size()) {
        size_t j = i;
        while (j < types.size() && types[j] == types[i]) ++j;
        if (!first) s += ",";
        first = false;
        s += types[i].display();
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    s += ")";
    return s;
}

} // namespace covers
