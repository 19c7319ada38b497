#pragma once

// The main-theorem planner: pick the applicable case for (p, g, n), build the
// genus-0 base datum, apply step A until the degree reaches n - g, then
// step B g times, re-verifying every assertion along the way. Parameters in
// the open-case tables return NotCovered with an open-case pointer.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "covers/hurwitz.hpp"
#include "covers/registry.hpp"

namespace covers {

enum class Variant { Auto, A, B, C, D };

inline const char* variant_letter(Variant v) {
    switch (v) {
        case Variant::A: return "a";
        case Variant::B: return "b";
        case Variant::C: return "c";
        case Variant::D: return "d";
        default: return "auto";
    }
}

struct TraceStep {
    std::string op;      // "base", "step_A", "step_B"
    std::string detail;  // base name or flavor
    CoverDatum datum;
};

struct TraceCheck {
    std::string assertion;
    bool pass = true;
};

struct DerivationTrace {
    int p = 0, target_genus = 0, target_degree = 0;
    std::string variant;
    std::vector<TraceStep> steps;
    std::vector<TraceCheck> checks;

    const CoverDatum& final_datum() const { return steps.back().datum; }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct NotCovered {
    bool open_case = false;  // true iff (p,g,n) sits in the stated open tables
    std::string pointer;
};

struct PlanResult {
    std::optional<DerivationTrace> trace;
    std::optional<NotCovered> not_covered;
};

// ---------------------------------------------------------------------------
// Case hypotheses.

inline bool applies_a(int p, int g, int n) {
    return p != 2 && p != 3 && n >= std::max(g + 3, 2 * g + 1);
}

inline bool applies_b(int p, int g, int n, std::string* sub = nullptr) {
    if (p >= 7 && n >= std::max(g + 6, 2 * g + 1)) {
        if (sub) *sub = "b(i)";
        return true;
    }
    if (p == 3 && n >= std::max({7, g + 6, 2 * g + 1})) {
        if (sub) *sub = "b(ii)";
        return true;
    }
    if (p == 5 && n >= std::max(g + 7, 2 * g + 1) && (n + g) % 2 == 1) {
        if (sub) *sub = "b(iii)";
        return true;
    }
    return false;
}

inline bool applies_c(int p, int g, int n) {
    return p == 2 && n >= std::max(g + 3, 2 * g + 1) && (n + g) % 2 == 1;
}

inline bool applies_d(int p, int g, int n) {
    return p == 2 && n >= std::max(g + 6, 2 * g + 3) && (n + g) % 2 == 0;
}

// the stated open tables: characteristic 2 and 3 only
inline std::optional<std::string> open_case_pointer(int p, int g, int n) {
    if (p == 3) {
        static const std::vector<std::pair<int, int>> open3 = {
            {1, 5}, {1, 6}, {2, 5}, {2, 6}, {2, 7}, {3, 7}, {3, 8}, {4, 9}};
        for (auto [og, on] : open3)
            if (g == og && n == on)
                return "open case (characteristic 3): (g,n) = (" + std::to_string(g) + "," +
                       std::to_string(n) + ") is in the stated open list";
        if (g == 0 && n == 6)
            return "open case (characteristic 3): degree 6 on the line is open";
    }
    if (p == 2) {
        if (g == 1 && n == 5)
            return "open case (characteristic 2): (g,n) = (1,5), the genus-one degree-5 problem";
        if (g >= 3 && g % 2 == 1 && n == 2 * g + 1)
            return "open case (characteristic 2): odd g >= 3 with n = 2g+1";
        if (g >= 2 && g % 2 == 0 && n == 2 * g + 2)
            return "open case (characteristic 2): even g >= 2 with n = 2g+2";
    }
    return std::nullopt;
}

// known nonexistence below the bounds, for friendlier pointers
inline std::optional<std::string> nonexistence_pointer(int p, int g, int n) {
    if (p == 3 && g == 0 && n <= 5)
        return "no tame alternating function of degree <= 5 exists on the line in characteristic 3";
    if (p == 2 && g == 0 && n == 4)
        return "no tame degree-4 alternating function exists in characteristic 2";
    if (p != 2 && p != 3 && n < std::max(g + 3, 2 * g + 1))
        return "below the optimal bound n >= max(g+3, 2g+1): the generic curve admits none";
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace detail {

inline CycleType type3(int n) { return CycleType::parse("3", n); }
inline CycleType type22(int n) { return CycleType::parse("2-2", n); }

inline bool final_type_matches(const CoverDatum& d, Variant v) {
    const int n = d.degree;
    if (v == Variant::A || v == Variant::C) {
        for (const auto& t : d.type_vector)
            if (t != type3(n)) return false;
        return true;
    }
    if (v == Variant::B) {
        for (const auto& t : d.type_vector)
            if (t != type22(n)) return false;
        return true;
    }
    // d: one 5, one 3-3, the rest 3
    int fives = 0, threes3 = 0, threes = 0;
    for (const auto& t : d.type_vector) {
        if (t == CycleType::parse("5", n)) ++fives;
        else if (t == CycleType::parse("3-3", n)) ++threes3;
        else if (t == type3(n)) ++threes;
        else return false;
    }
    return fives == 1 && threes3 == 1 && threes == d.branch_count() - 2;
}

} // namespace detail

inline PlanResult plan_theorem(int p, int g, int n, Variant want = Variant::Auto) {
    if (g < 0 || n < 3 || p < 0 || (p != 0 && !Field::is_prime(static_cast<std::uint32_t>(p))))
        throw ParseError("plan_theorem needs p in {0, primes}, g >= 0, n >= 3");

    Variant v = want;
    std::string sub;
    if (v == Variant::Auto) {
        if (p != 2 && p != 3) v = applies_a(p, g, n) ? Variant::A
                                   : (applies_b(p, g, n, &sub) ? Variant::B : Variant::Auto);
        else if (p == 3) v = applies_b(p, g, n, &sub) ? Variant::B : Variant::Auto;
        else v = applies_c(p, g, n) ? Variant::C : (applies_d(p, g, n) ? Variant::D : Variant::Auto);
    } else {
        bool ok = (v == Variant::A && applies_a(p, g, n)) ||
                  (v == Variant::B && applies_b(p, g, n, &sub)) ||
                  (v == Variant::C && applies_c(p, g, n)) ||
                  (v == Variant::D && applies_d(p, g, n));
        if (!ok) v = Variant::Auto;
    }
    if (v == Variant::Auto) {
        PlanResult res;
        NotCovered nc;
        if (auto open = open_case_pointer(p, g, n)) {
            nc.open_case = true;
            nc.pointer = *open;
        } else if (want == Variant::B && p == 5 && (n + g) % 2 == 0) {
            nc.pointer = "open remark (characteristic 5): pure double-transposition type with n+g even";
        } else if (auto none = nonexistence_pointer(p, g, n)) {
            nc.pointer = *none;
        } else {
            nc.pointer = "hypotheses of every stated case fail for (p,g,n) = (" +
                         std::to_string(p) + "," + std::to_string(g) + "," + std::to_string(n) + ")";
        }
        res.not_covered = nc;
        return res;
    }

    DerivationTrace trace;
    trace.p = p;
    trace.target_genus = g;
    trace.target_degree = n;
    trace.variant = v == Variant::B ? sub : variant_letter(v);
    auto check = [&](const std::string& what, bool pass) {
        trace.checks.push_back({what, pass});
    };
    check("variant " + trace.variant + " hypotheses hold for (p,g,n)", true);

    const int base_degree = n - g;
    StepFlavor flavor = v == Variant::B ? StepFlavor::C2pair : StepFlavor::C3;
    CoverDatum d;
    std::string base_name;
    if (v == Variant::A || v == Variant::C) {
        base_name = base_degree % 2 == 1 ? "base3_cyclic" : "base4_triple3";
        d = registry::datum(base_name, p);
    } else if (v == Variant::B) {
        if (p == 3)
            d = base_degree % 2 == 0 ? (base_name = "three_patch", registry::three_patch(p))
                                     : (base_name = "base7_patch", registry::datum("base7_patch", p));
        else
            d = base_degree % 2 == 0 ? (base_name = "a6_five_tuple", registry::datum("a6_five_tuple", p))
                                     : (base_name = "base7_patch", registry::datum("base7_patch", p));
    } else {
        base_name = "witness_533";
        d = registry::witness_533(p);
    }
    trace.steps.push_back({"base", base_name, d});
    check("base is a genus-0 tame datum of degree " + std::to_string(d.degree),
          d.genus == 0 && (p == 0 || d.tame));

    while (d.degree < base_degree) {
        CoverDatum next = step_A(d, flavor);
        check("step A keeps genus " + std::to_string(d.genus) + " and adds two branch points",
              next.genus == d.genus && next.branch_count() == d.branch_count() + 2);
        d = std::move(next);
        trace.steps.push_back({"step_A", flavor_name(flavor), d});
    }
    for (int i = 0; i < g; ++i) {
        int before_r = d.branch_count();
        check("two-pointed genericity: g <= 1 or r > 3g (g = " + std::to_string(d.genus) +
                  ", r = " + std::to_string(before_r) + ")",
              d.genus <= 1 || before_r > 3 * d.genus);
        CoverDatum next = step_B(d, flavor);
        check("step B raises the genus to " + std::to_string(next.genus) +
                  " and adds two branch points",
              next.genus == d.genus + 1 && next.branch_count() == before_r + 2);
        d = std::move(next);
        trace.steps.push_back({"step_B", flavor_name(flavor), d});
    }

    const int expected_r = v == Variant::D ? g + n - 3 : g + n - 1;
    check("final degree is n = " + std::to_string(n), d.degree == n);
    check("final genus is g = " + std::to_string(g), d.genus == g);
    check("final branch count is r = " + std::to_string(expected_r),
          d.branch_count() == expected_r);
    check("final ramification type matches case " + trace.variant,
          detail::final_type_matches(d, v));
    check("final group is the alternating group A" + std::to_string(n) +
              " (order certified " + std::to_string(d.group.order()) + ")",
          is_natural_alternating(d.group) && d.group.is_transitive());
    check("final datum is tame at p = " + std::to_string(p), p == 0 || d.tame);

    PlanResult res;
    res.trace = std::move(trace);
    return res;
}

// ---------------------------------------------------------------------------

inline std::string trace_to_text(const DerivationTrace& trace) {
    std::string s = "derivation for p=" + std::to_string(trace.p) +
                    " g=" + std::to_string(trace.target_genus) +
                    " n=" + std::to_string(trace.target_degree) + " via case " + trace.variant + "\n";
    for (const auto& step : trace.steps)
        s += "  " + step.op + "[" + step.detail + "]: " + datum_summary(step.datum) + "\n";
    for (const auto& c : trace.checks)
        s += std::string("  [") + (c.pass ? "ok" : "FAIL") + "] " + c.assertion + "\n";
    const CoverDatum& f = trace.final_datum();
    s += "final: r=" + std::to_string(f.branch_count()) + ", type " +
         type_vector_display(f.type_vector) + ", group " + identify(f.group) + "\n";
    return s;
}

inline std::string plan_result_to_text(const PlanResult& res) {
    if (res.trace) return trace_to_text(*res.trace);
    return std::string(res.not_covered->open_case ? "NOT COVERED (open case): "
                                                  : "NOT COVERED: ") +
           res.not_covered->pointer + "\n";
}

} // namespace covers
