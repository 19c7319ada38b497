#pragma once

// Branch-cycle data (Hurwitz data) and the patching calculus: gluing two
// covers along matched inertia elements, the two induction steps, and
// special-fiber descriptions.
//
// A CoverDatum is a product-one, jointly transitive tuple of permutations
// with its Riemann-Hurwitz genus, type vector, certified group, and tameness
// at the stated characteristic. The geometric content (existence of the
// corresponding covers, deformation of admissible covers) is an axiom of the
// calculus; everything combinatorial is recomputed and certified.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covers/census.hpp"
#include "covers/error.hpp"
#include "covers/ffield.hpp"
#include "covers/group.hpp"
#include "covers/perm.hpp"

namespace covers {

struct CoverDatum {
    int characteristic = 0;  // 0 or a prime
    int degree = 0;
    std::vector<Perm> tuple;
    int genus = 0;
    std::vector<CycleType> type_vector;
    GroupHandle group;
    bool tame = false;
    std::vector<std::string> genericity_notes;

    int branch_count() const { return static_cast<int>(tuple.size()); }
};

inline CoverDatum new_datum(int p, std::vector<Perm> perms,
                            std::vector<std::string> notes = {}) {
    if (p != 0 && !Field::is_prime(static_cast<std::uint32_t>(p)))
        throw ParseError("characteristic must be 0 or prime");
    if (perms.empty()) throw ParseError("a cover datum needs a nonempty tuple");
    const int n = perms.front().degree();
    Perm prod = Perm::identity(n);
    for (const auto& g : perms) prod = prod * g;
    if (!prod.is_identity())
        throw ProductNotOne("tuple product is " + print_perm(prod) + ", not the identity");
    if (GroupHandle::orbit_partition(perms, n).size() != 1)
        throw NotTransitive("tuple does not act transitively");

    CoverDatum d;
    d.characteristic = p;
    d.degree = n;
    d.tuple = std::move(perms);
    d.genericity_notes = std::move(notes);
    long long total_index = 0;
    bool tame = true;
    for (const auto& g : d.tuple) {
        CycleType t(g);
        total_index += t.index();
        if (p > 0)
            for (int part : t.parts())
                if (part > 1 && part % p == 0) tame = false;
        d.type_vector.push_back(std::move(t));
    }
    // 2g - 2 = -2n + sum of (len - 1)
    long long twice_genus = total_index - 2LL * n + 2;
    if (twice_genus % 2 != 0)
        throw Error("Riemann-Hurwitz parity violated (impossible for product-one tuples)");
    if (twice_genus < 0)
        throw Error("negative Riemann-Hurwitz genus (impossible for transitive product-one tuples)");
    d.genus = static_cast<int>(twice_genus / 2);
    d.tame = tame;
    d.group = GroupHandle::generate(d.tuple);
    return d;
}

// relabel a permutation of degree n into degree N along a 1-based injection
inline Perm relabel_perm(const Perm& g, const std::vector<int>& inj, int N) {
    if (static_cast<int>(inj.size()) != g.degree())
        throw ParseError("relabeling must cover every point of its side");
    std::vector<char> hit(static_cast<size_t>(N), 0);
    for (int v : inj) {
        if (v < 1 || v > N || hit[static_cast<size_t>(v - 1)])
            throw ParseError("relabeling is not an injection into {1..N}");
        hit[static_cast<size_t>(v - 1)] = 1;
    }
    std::vector<int> img(static_cast<size_t>(N));
    std::iota(img.begin(), img.end(), 0);
    for (int x = 1; x <= g.degree(); ++x)
        img[static_cast<size_t>(inj[static_cast<size_t>(x - 1)] - 1)] =
            inj[static_cast<size_t>(g.apply1(x) - 1)] - 1;
    return Perm::from_images(std::move(img));
}

inline std::vector<int> identity_relabel(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

struct GlueSpec {
    CoverDatum left, right;
    std::optional<size_t> left_marked, right_marked;  // indices into the tuples
    std::vector<int> relabel_left, relabel_right;     // 1-based injections
    int total_degree = 0;                             // N

    // order of the matched inertia element; 1 when unmarked
    std::uint64_t matched_order() const {
        if (!left_marked) return 1;
        return left.tuple[*left_marked].element_order();
    }
};

namespace detail {

inline void validate_glue(const GlueSpec& spec) {
    if (spec.left_marked.has_value() != spec.right_marked.has_value())
        throw ParseError("either both sides are marked or neither is");
    if (spec.left.characteristic != spec.right.characteristic)
        throw CharacteristicMismatch("glue requires equal characteristics");
    if (spec.left.characteristic > 0 && (!spec.left.tame || !spec.right.tame))
        throw WildFlavor("glue requires tame inputs");
    if (spec.left_marked && *spec.left_marked >= spec.left.tuple.size())
        throw ParseError("left mark out of range");
    if (spec.right_marked && *spec.right_marked >= spec.right.tuple.size())
        throw ParseError("right mark out of range");
    if (spec.left_marked) {
        Perm ml = relabel_perm(spec.left.tuple[*spec.left_marked], spec.relabel_left,
                               spec.total_degree);
        Perm mr = relabel_perm(spec.right.tuple[*spec.right_marked], spec.relabel_right,
                               spec.total_degree);
        if (ml != mr.inverse())
            throw MarkedNotInverse("relabeled marked elements are not mutually inverse: " +
                                   print_perm(ml) + " vs " + print_perm(mr));
    }
    std::vector<Perm> all;
    for (const auto& g : spec.left.tuple)
        all.push_back(relabel_perm(g, spec.relabel_left, spec.total_degree));
    for (const auto& g : spec.right.tuple)
        all.push_back(relabel_perm(g, spec.relabel_right, spec.total_degree));
    if (GroupHandle::orbit_partition(all, spec.total_degree).size() != 1)
        throw NotJointlyTransitive("the relabeled sides do not act jointly transitively");
}

// rotate so the marked entry sits at the requested end, then drop it;
// rotation preserves the product-one property
inline std::vector<Perm> side_without_mark(const std::vector<Perm>& tuple, size_t mark,
                                           bool mark_goes_last) {
    std::vector<Perm> out;
    size_t r = tuple.size();
    size_t start = mark_goes_last ? (mark + 1) % r : mark;
    for (size_t i = 0; i < r; ++i) out.push_back(tuple[(start + i) % r]);
    if (mark_goes_last) out.pop_back();
    else out.erase(out.begin());
    return out;
}

} // namespace detail

inline CoverDatum glue(const GlueSpec& spec) {
    detail::validate_glue(spec);
    const int N = spec.total_degree;
    std::vector<Perm> tuple;
    std::vector<Perm> left_part, right_part;
    if (spec.left_marked) {
        for (const auto& g : detail::side_without_mark(spec.left.tuple, *spec.left_marked, true))
            left_part.push_back(relabel_perm(g, spec.relabel_left, N));
        for (const auto& g : detail::side_without_mark(spec.right.tuple, *spec.right_marked, false))
            right_part.push_back(relabel_perm(g, spec.relabel_right, N));
        // partial products must be m^-1 and m, the matched element
        Perm m = relabel_perm(spec.left.tuple[*spec.left_marked], spec.relabel_left, N);
        Perm pl = Perm::identity(N), pr = Perm::identity(N);
        for (const auto& g : left_part) pl = pl * g;
        for (const auto& g : right_part) pr = pr * g;
        if (pl != m.inverse() || pr != m || !(pl * pr).is_identity())
            throw Error("glue partial-product identity failed");
    } else {
        for (const auto& g : spec.left.tuple)
            left_part.push_back(relabel_perm(g, spec.relabel_left, N));
        for (const auto& g : spec.right.tuple)
            right_part.push_back(relabel_perm(g, spec.relabel_right, N));
    }
    tuple = left_part;
    tuple.insert(tuple.end(), right_part.begin(), right_part.end());

    std::vector<std::string> notes = spec.left.genericity_notes;
    notes.insert(notes.end(), spec.right.genericity_notes.begin(),
                 spec.right.genericity_notes.end());
    notes.push_back("glued along a matched inertia element of order " +
                    std::to_string(spec.matched_order()) +
                    " (deformation of admissible covers)");
    CoverDatum out = new_datum(spec.left.characteristic, std::move(tuple), std::move(notes));
    int expected_r = spec.left.branch_count() + spec.right.branch_count() -
                     (spec.left_marked ? 2 : 0);
    if (out.branch_count() != expected_r)
        throw Error("glue branch count mismatch");
    return out;
}

// lexicographically least injection phi with relabel(marked, phi) == target;
// exists iff the nontrivial cycles match and enough fixed points remain
inline std::vector<int> align_marked(const Perm& marked, const Perm& target, int N) {
    const int n = marked.degree();
    std::vector<int> phi(static_cast<size_t>(n), 0);
    std::vector<char> used(static_cast<size_t>(N), 0);

    std::function<bool(int)> place = [&](int x) -> bool {
        while (x <= n && phi[static_cast<size_t>(x - 1)] != 0) ++x;
        if (x > n) return true;
        for (int y = 1; y <= N; ++y) {
            if (used[static_cast<size_t>(y - 1)]) continue;
            // walking the cycle of x through phi must follow the cycle of y
            std::vector<std::pair<int, int>> assigned;
            bool ok = true;
            int cx = x, cy = y;
            do {
                if (phi[static_cast<size_t>(cx - 1)] != 0 || used[static_cast<size_t>(cy - 1)]) {
                    ok = false;
                    break;
                }
                phi[static_cast<size_t>(cx - 1)] = cy;
                used[static_cast<size_t>(cy - 1)] = 1;
                assigned.emplace_back(cx, cy);
                cx = marked.apply1(cx);
                cy = target.apply1(cy);
            } while (cx != x);
            if (ok && cy != y) ok = false;  // cycle lengths differ
            if (ok && place(x + 1)) return true;
            for (auto [ax, ay] : assigned) {
                phi[static_cast<size_t>(ax - 1)] = 0;
                used[static_cast<size_t>(ay - 1)] = 0;
            }
        }
        return false;
    };
    if (!place(1))
        throw MarkedNotInverse("no relabeling aligns the marked elements (cycle types differ)");
    return phi;
}

// spec with the bigger side relabeled identically and the smaller side
// aligned so the marks become mutually inverse
inline GlueSpec make_glue_spec(const CoverDatum& left, size_t left_mark, const CoverDatum& right,
                               size_t right_mark) {
    GlueSpec spec;
    spec.left = left;
    spec.right = right;
    spec.left_marked = left_mark;
    spec.right_marked = right_mark;
    spec.total_degree = std::max(left.degree, right.degree);
    if (left.degree == spec.total_degree) {
        spec.relabel_left = identity_relabel(left.degree);
        Perm target = left.tuple[left_mark].inverse();
        spec.relabel_right = align_marked(right.tuple[right_mark], target, spec.total_degree);
    } else {
        spec.relabel_right = identity_relabel(right.degree);
        Perm target = right.tuple[right_mark].inverse();
        spec.relabel_left = align_marked(left.tuple[left_mark], target, spec.total_degree);
    }
    return spec;
}

inline CoverDatum glue_at(const CoverDatum& left, size_t left_mark, const CoverDatum& right,
                          size_t right_mark) {
    return glue(make_glue_spec(left, left_mark, right, right_mark));
}

// ---------------------------------------------------------------------------
// Induction steps. Both extend the tuple by a fixed pair supported partly on
// fresh points; everything derived is recomputed from scratch by new_datum.

enum class StepFlavor { C3, C2pair };

inline const char* flavor_name(StepFlavor f) { return f == StepFlavor::C3 ? "C3" : "C2pair"; }

namespace detail {

inline Perm extend_degree(const Perm& g, int N) {
    std::vector<int> img(static_cast<size_t>(N));
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < g.degree(); ++i) img[static_cast<size_t>(i)] = g.apply(i);
    return Perm::from_images(std::move(img));
}

inline void check_step_pre(const CoverDatum& d, StepFlavor flavor) {
    if (d.characteristic == 3 && flavor == StepFlavor::C3)
        throw WildFlavor("the 3-cycle flavor is wild in characteristic 3");
    if (d.characteristic == 2 && flavor == StepFlavor::C2pair)
        throw WildFlavor("the involution flavor is wild in characteristic 2");
    if (d.characteristic > 0 && !d.tame)
        throw WildFlavor("induction steps require a tame input");
    if (d.degree < 3) throw ParseError("induction steps need degree >= 3");
}

} // namespace detail

// appended pair for step A on a degree-n datum: two fresh points
inline std::pair<Perm, Perm> step_A_pair(int n, StepFlavor flavor) {
    int N = n + 2;
    if (flavor == StepFlavor::C3) {
        Perm s = Perm::from_cycles(N, {{n, n + 1, n + 2}});
        return {s, s.inverse()};
    }
    Perm s = Perm::from_cycles(N, {{n - 1, n + 1}, {n, n + 2}});
    return {s, s};
}

// appended pair for step B: one fresh point
inline std::pair<Perm, Perm> step_B_pair(int n, StepFlavor flavor) {
    int N = n + 1;
    if (flavor == StepFlavor::C3) {
        Perm s = Perm::from_cycles(N, {{n - 1, n, n + 1}});
        return {s, s.inverse()};
    }
    Perm s = Perm::from_cycles(N, {{1, 2}, {n, n + 1}});
    return {s, s};
}

inline CoverDatum step_A(const CoverDatum& d, StepFlavor flavor) {
    detail::check_step_pre(d, flavor);
    const int N = d.degree + 2;
    auto [s1, s2] = step_A_pair(d.degree, flavor);
    std::vector<Perm> tuple;
    for (const auto& g : d.tuple) tuple.push_back(detail::extend_degree(g, N));
    tuple.push_back(s1);
    tuple.push_back(s2);
    auto notes = d.genericity_notes;
    notes.push_back(std::string("step A (") + flavor_name(flavor) +
                    "): degree +2, unmarked glue with a 2-branch-point cover");
    CoverDatum out = new_datum(d.characteristic, std::move(tuple), std::move(notes));
    if (out.genus != d.genus) throw Error("step A changed the genus");
    if (out.branch_count() != d.branch_count() + 2) throw Error("step A branch count mismatch");
    if (is_natural_alternating(d.group) && !is_natural_alternating(out.group))
        throw Error("step A failed to lift the alternating group");
    return out;
}

inline CoverDatum step_B(const CoverDatum& d, StepFlavor flavor) {
    detail::check_step_pre(d, flavor);
    if (d.genus >= 2 && d.branch_count() <= 3 * d.genus)
        throw GenericityPreconditionViolated(
            "step B with g >= 2 requires r > 3g (r = " + std::to_string(d.branch_count()) +
            ", g = " + std::to_string(d.genus) + ")");
    const int N = d.degree + 1;
    auto [s1, s2] = step_B_pair(d.degree, flavor);
    std::vector<Perm> tuple;
    for (const auto& g : d.tuple) tuple.push_back(detail::extend_degree(g, N));
    tuple.push_back(s1);
    tuple.push_back(s2);
    auto notes = d.genericity_notes;
    notes.push_back(std::string("step B (") + flavor_name(flavor) +
                    "): degree +1, genus +1; two-pointed genericity via " +
                    (d.genus <= 1 ? "double transitivity (g <= 1)" : "r > 3g generic branch points"));
    CoverDatum out = new_datum(d.characteristic, std::move(tuple), std::move(notes));
    if (out.genus != d.genus + 1) throw Error("step B did not raise the genus by one");
    if (out.branch_count() != d.branch_count() + 2) throw Error("step B branch count mismatch");
    if (d.degree >= 4 && is_natural_alternating(d.group) && !is_natural_alternating(out.group))
        throw Error("step B failed to lift the alternating group");
    return out;
}

// ---------------------------------------------------------------------------
// Special fibers: one component per orbit of each side's action, with the
// genus of the restricted branch data.

struct FiberComponent {
    std::vector<int> orbit;  // 1-based points
    int genus = 0;
    std::vector<CycleType> restricted_types;
    bool trivial_sheet() const { return orbit.size() == 1; }
};

struct SpecialFiberReport {
    std::vector<FiberComponent> left, right;
    int nodes = 0;            // cycles of the matched element on {1..N}
    std::uint64_t matched_order = 1;
};

namespace detail {

inline std::vector<FiberComponent> side_components(const std::vector<Perm>& tuple_N, int N) {
    std::vector<FiberComponent> out;
    for (const auto& orbit0 : GroupHandle::orbit_partition(tuple_N, N)) {
        FiberComponent comp;
        for (int x : orbit0) comp.orbit.push_back(x + 1);
        // restrict each tuple entry to the orbit and recompute RH there
        std::vector<int> pos(static_cast<size_t>(N), -1);
        for (size_t i = 0; i < orbit0.size(); ++i) pos[static_cast<size_t>(orbit0[i])] = static_cast<int>(i);
        long long total_index = 0;
        Perm prod = Perm::identity(static_cast<int>(orbit0.size()));
        for (const auto& g : tuple_N) {
            std::vector<int> img(orbit0.size());
            for (size_t i = 0; i < orbit0.size(); ++i)
                img[i] = pos[static_cast<size_t>(g.apply(orbit0[i]))];
            Perm restricted = Perm::from_images(std::move(img));
            prod = prod * restricted;
            CycleType t(restricted);
            total_index += t.index();
            comp.restricted_types.push_back(std::move(t));
        }
        if (!prod.is_identity()) throw Error("restricted tuple lost the product-one property");
        long long twice_genus = total_index - 2LL * static_cast<long long>(orbit0.size()) + 2;
        if (twice_genus % 2 != 0 || twice_genus < 0)
            throw Error("component genus is not a nonnegative integer");
        comp.genus = static_cast<int>(twice_genus / 2);
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace detail

inline SpecialFiberReport special_fiber(const GlueSpec& spec) {
    detail::validate_glue(spec);
    const int N = spec.total_degree;
    std::vector<Perm> left_N, right_N;
    for (const auto& g : spec.left.tuple) left_N.push_back(relabel_perm(g, spec.relabel_left, N));
    for (const auto& g : spec.right.tuple) right_N.push_back(relabel_perm(g, spec.relabel_right, N));
    SpecialFiberReport rep;
    rep.left = detail::side_components(left_N, N);
    rep.right = detail::side_components(right_N, N);
    Perm matched = spec.left_marked
                       ? relabel_perm(spec.left.tuple[*spec.left_marked], spec.relabel_left, N)
                       : Perm::identity(N);
    rep.matched_order = matched.element_order();
    rep.nodes = N - CycleType(matched).index();  // number of cycles incl. fixed points
    return rep;
}

// view an induction step as an unmarked glue and describe its special fiber
inline SpecialFiberReport special_fiber_of_step(const CoverDatum& d, char step, StepFlavor flavor) {
    detail::check_step_pre(d, flavor);
    const int N = d.degree + (step == 'A' ? 2 : 1);
    auto [s1, s2] = step == 'A' ? step_A_pair(d.degree, flavor) : step_B_pair(d.degree, flavor);
    std::vector<Perm> left_N, right_N{s1, s2};
    for (const auto& g : d.tuple) left_N.push_back(detail::extend_degree(g, N));
    SpecialFiberReport rep;
    rep.left = detail::side_components(left_N, N);
    rep.right = detail::side_components(right_N, N);
    rep.matched_order = 1;
    rep.nodes = N;
    return rep;
}

// tree-like degeneration sanity check for unmarked glues: the generic-fiber
// genus equals sum of component genera + nodes - (components - 1)
inline bool fiber_additivity_holds(const SpecialFiberReport& rep, const CoverDatum& glued) {
    if (rep.matched_order != 1) return true;  // only stated for n0 = 1
    long long genera = 0;
    long long components = 0;
    for (const auto& c : rep.left) { genera += c.genus; ++components; }
    for (const auto& c : rep.right) { genera += c.genus; ++components; }
    return genera + rep.nodes - (components - 1) == glued.genus;
}

// ---------------------------------------------------------------------------
// Text rendering.

inline std::string datum_summary(const CoverDatum& d) {
    return "p=" + std::to_string(d.characteristic) + " degree=" + std::to_string(d.degree) +
           " genus=" + std::to_string(d.genus) + " r=" + std::to_string(d.branch_count()) +
           " type " + type_vector_display(d.type_vector) + " group " + identify(d.group) +
           " (order " + std::to_string(d.group.order()) + ")" + (d.tame ? " tame" : " wild");
}

inline std::string datum_to_text(const CoverDatum& d) {
    std::string s = datum_summary(d) + "\n";
    s += "tuple: " + print_perm_list(d.tuple) + "\n";
    for (const auto& note : d.genericity_notes) s += "note: " + note + "\n";
    return s;
}

} // namespace covers
