#include <catch2/catch_amalgamated.hpp>

#include "covers/registry.hpp"
#include "covers/theorem.hpp"

using namespace covers;

namespace {

CoverDatum a6_datum(int p) { return registry::datum("a6_five_tuple", p); }

} // namespace

TEST_CASE("datum construction and derived fields") {
    auto d = a6_datum(0);
    CHECK(d.degree == 6);
    CHECK(d.genus == 0);
    CHECK(d.branch_count() == 5);
    CHECK(d.group.order() == 360);
    for (const auto& t : d.type_vector) CHECK(t.display() == "2-2");

    auto w = registry::witness_533(2);
    CHECK(w.genus == 0);
    CHECK(w.tame);
    CHECK(identify(w.group) == "A6");

    auto wild = new_datum(3, {Perm::from_cycles(4, {{1, 2, 3}}), Perm::from_cycles(4, {{1, 3, 4}}),
                              Perm::from_cycles(4, {{1, 4, 2}})});
    CHECK_FALSE(wild.tame);  // 3 divides the cycle length

    CHECK_THROWS_AS(new_datum(0, {Perm::from_cycles(3, {{1, 2, 3}}), Perm::from_cycles(3, {{1, 2, 3}})}),
                    ProductNotOne);
    CHECK_THROWS_AS(new_datum(0, {Perm::from_cycles(4, {{1, 2}}), Perm::from_cycles(4, {{1, 2}})}),
                    NotTransitive);
}

TEST_CASE("registry data re-verifies") {
    auto parsed = registry::parse_registry_text(registry::kRegistryText);
    CHECK(parsed.tuples.size() == 5);
    CHECK(parsed.covers.size() == 3);

    auto d5 = registry::datum("d5_triple", 3);
    CHECK(d5.group.order() == 10);
    CHECK(identify(d5.group) == "D5");
    CHECK(d5.genus == 0);

    auto b7 = registry::datum("base7_patch", 3);
    CHECK(b7.degree == 7);
    CHECK(b7.genus == 0);
    CHECK(b7.branch_count() == 6);
    CHECK(b7.group.order() == 2520);
    CHECK(identify(b7.group) == "A7");
    for (const auto& t : b7.type_vector) CHECK(t.display() == "2-2");

    CHECK_THROWS_AS(registry::datum("d5_triple", 5), WildFlavor);
    CHECK_THROWS_AS(registry::datum("nonsense", 0), UnknownClaim);

    CHECK(registry::psl25_handle().order() == 60);
}

TEST_CASE("three-patch glue reproduces the order-60 datum") {
    auto patched = registry::three_patch(3);
    CHECK(patched.degree == 6);
    CHECK(patched.genus == 0);
    CHECK(patched.branch_count() == 5);
    CHECK(patched.group.order() == 60);
    CHECK(identify(patched.group) == "PSL2(5)");
    for (const auto& t : patched.type_vector) CHECK(t.display() == "2-2");
    CHECK(patched.tame);
}

TEST_CASE("marked glue validation") {
    auto d5 = registry::datum("d5_triple", 3);
    // marks with different cycle types can never align
    CHECK_THROWS_AS(glue_at(d5, 0, registry::witness_5_22_5(3), 0), MarkedNotInverse);

    // characteristics must agree
    auto w3 = registry::witness_5_22_5(3);
    GlueSpec bad = make_glue_spec(d5, 2, w3, 0);
    bad.right = registry::witness_5_22_5(7);
    CHECK_THROWS_AS(glue(bad), CharacteristicMismatch);

    // a non-inverse mark is rejected even when the types match
    GlueSpec spec = make_glue_spec(d5, 2, w3, 0);
    std::swap(spec.relabel_right[0], spec.relabel_right[1]);  // break the alignment
    CHECK_THROWS_AS(glue(spec), MarkedNotInverse);

    // the lexicographically least alignment is produced
    GlueSpec again = make_glue_spec(d5, 2, w3, 0);
    Perm target = w3.tuple[0].inverse();
    std::vector<int> best;
    std::vector<int> inj(5);
    std::function<void(size_t, std::vector<int>&, std::vector<bool>&)> enumerate =
        [&](size_t at, std::vector<int>& cur, std::vector<bool>& used) {
            if (at == 5) {
                if (relabel_perm(d5.tuple[2], cur, 6) == target && (best.empty() || cur < best))
                    best = cur;
                return;
            }
            for (int y = 1; y <= 6; ++y) {
                if (used[static_cast<size_t>(y)]) continue;
                used[static_cast<size_t>(y)] = true;
                cur.push_back(y);
                enumerate(at + 1, cur, used);
                cur.pop_back();
                used[static_cast<size_t>(y)] = false;
            }
        };
    std::vector<int> cur;
    std::vector<bool> used(7, false);
    enumerate(0, cur, used);
    CHECK(again.relabel_left == best);
}

TEST_CASE("unmarked glue specializes to step A") {
    auto base = registry::datum("base3_cyclic", 0);
    GlueSpec spec;
    spec.left = base;
    spec.right = new_datum(0, {Perm::from_cycles(3, {{1, 2, 3}}), Perm::from_cycles(3, {{1, 3, 2}})});
    spec.total_degree = 5;
    spec.relabel_left = {1, 2, 3};
    spec.relabel_right = {3, 4, 5};
    auto glued = glue(spec);
    auto stepped = step_A(base, StepFlavor::C3);
    CHECK(glued.tuple == stepped.tuple);
    CHECK(glued.genus == stepped.genus);

    spec.relabel_right = {4, 5, 6};
    spec.total_degree = 6;
    spec.relabel_left = {1, 2, 3};
    CHECK_THROWS_AS(glue(spec), NotJointlyTransitive);
}

TEST_CASE("step A") {
    auto a4 = registry::datum("base4_triple3", 0);
    auto up = step_A(a4, StepFlavor::C3);
    CHECK(up.degree == 6);
    CHECK(up.genus == 0);
    CHECK(up.branch_count() == 5);
    CHECK(identify(up.group) == "A6");
    for (const auto& t : up.type_vector) CHECK(t.display() == "3");

    // the degree-8 lift of the patched datum: transitive overgroup of the
    // order-60 group inside A8
    auto patched = registry::three_patch(3);
    auto lifted = step_A(patched, StepFlavor::C2pair);
    CHECK(lifted.degree == 8);
    CHECK(lifted.genus == 0);
    CHECK(lifted.branch_count() == 7);
    CHECK(lifted.group.order() == 20160);
    CHECK(identify(lifted.group) == "A8");
    for (const auto& t : lifted.type_vector) CHECK(t.display() == "2-2");

    CHECK_THROWS_AS(step_A(registry::datum("base3_cyclic", 2), StepFlavor::C2pair), WildFlavor);
    auto base3_at3 = new_datum(3, {Perm::from_cycles(3, {{1, 2, 3}}), Perm::from_cycles(3, {{1, 3, 2}})});
    CHECK_THROWS_AS(step_A(base3_at3, StepFlavor::C3), WildFlavor);
}

TEST_CASE("step B") {
    // (3,3,3,3) of degree 5 and genus 0, then one step B
    auto d5types3 = step_A(registry::datum("base3_cyclic", 0), StepFlavor::C3);
    auto up = step_B(d5types3, StepFlavor::C3);
    CHECK(up.degree == 6);
    CHECK(up.genus == 1);
    CHECK(up.branch_count() == 6);
    CHECK(identify(up.group) == "A6");
    for (const auto& t : up.type_vector) CHECK(t.display() == "3");

    auto patched = registry::three_patch(3);
    auto lifted = step_B(patched, StepFlavor::C2pair);
    CHECK(lifted.degree == 7);
    CHECK(lifted.genus == 1);
    CHECK(lifted.branch_count() == 7);
    CHECK(lifted.group.order() == 2520);
    CHECK(identify(lifted.group) == "A7");
    for (const auto& t : lifted.type_vector) CHECK(t.display() == "2-2");

    // drive the genus to 2 with r = 6 = 3g and watch the side condition fire
    auto g1 = step_B(registry::datum("base3_cyclic", 0), StepFlavor::C3);
    auto g2 = step_B(g1, StepFlavor::C3);
    CHECK(g2.genus == 2);
    CHECK(g2.branch_count() == 6);
    CHECK_THROWS_AS(step_B(g2, StepFlavor::C3), GenericityPreconditionViolated);
}

TEST_CASE("special fibers") {
    // step B with the involution pair: two 2-point orbits on the right side
    auto patched = registry::three_patch(3);
    auto repB = special_fiber_of_step(patched, 'B', StepFlavor::C2pair);
    int two_orbits = 0;
    for (const auto& c : repB.right)
        if (c.orbit.size() == 2) {
            ++two_orbits;
            CHECK(c.genus == 0);
        }
    CHECK(two_orbits == 2);
    CHECK(repB.nodes == 7);
    CHECK(fiber_additivity_holds(repB, step_B(patched, StepFlavor::C2pair)));

    // step A with the 3-cycle pair: one triple cover plus trivial sheets
    auto base = registry::datum("base4_triple3", 0);
    auto repA = special_fiber_of_step(base, 'A', StepFlavor::C3);
    int triples = 0, sheets = 0;
    for (const auto& c : repA.right) {
        if (c.orbit.size() == 3) {
            ++triples;
            CHECK(c.genus == 0);
        } else if (c.trivial_sheet()) {
            ++sheets;
        }
    }
    CHECK(triples == 1);
    CHECK(sheets == 3);  // n - 1 fixed points
    CHECK(fiber_additivity_holds(repA, step_A(base, StepFlavor::C3)));

    // left side of a glue: one nontrivial component (the input is transitive)
    auto spec = make_glue_spec(registry::datum("d5_triple", 3), 2, registry::witness_5_22_5(3), 0);
    auto rep = special_fiber(spec);
    int nontrivial_left = 0;
    for (const auto& c : rep.left)
        if (!c.trivial_sheet()) ++nontrivial_left;
    CHECK(nontrivial_left == 1);
    CHECK(rep.matched_order == 5);

    // additivity across every step instance of a short derivation
    auto d = registry::datum("base3_cyclic", 0);
    for (int i = 0; i < 2; ++i) {
        CHECK(fiber_additivity_holds(special_fiber_of_step(d, 'A', StepFlavor::C3),
                                     step_A(d, StepFlavor::C3)));
        d = step_A(d, StepFlavor::C3);
    }
    CHECK(fiber_additivity_holds(special_fiber_of_step(d, 'B', StepFlavor::C3),
                                 step_B(d, StepFlavor::C3)));
}

TEST_CASE("planner traces") {
    {
        auto res = plan_theorem(5, 2, 7);
        REQUIRE(res.trace);
        CHECK(res.trace->all_pass());
        const auto& f = res.trace->final_datum();
        CHECK(f.branch_count() == 8);
        CHECK(identify(f.group) == "A7");
        CHECK(type_vector_display(f.type_vector) == "(3)^8");
        CHECK(trace_to_text(*res.trace).find("r=8, type (3)^8, group A7") != std::string::npos);
    }
    {
        auto res = plan_theorem(2, 1, 6);
        REQUIRE(res.trace);
        CHECK(res.trace->variant == "c");
        CHECK(res.trace->all_pass());
        CHECK(res.trace->final_datum().branch_count() == 6);
        CHECK(type_vector_display(res.trace->final_datum().type_vector) == "(3)^6");
    }
    {
        auto res = plan_theorem(3, 1, 7);  // the special characteristic-3 route
        REQUIRE(res.trace);
        CHECK(res.trace->variant == "b(ii)");
        CHECK(res.trace->all_pass());
        CHECK(res.trace->steps.front().detail == "three_patch");
        CHECK(identify(res.trace->final_datum().group) == "A7");
        CHECK(type_vector_display(res.trace->final_datum().type_vector) == "(2-2)^7");
    }
    {
        auto res = plan_theorem(3, 0, 8);
        REQUIRE(res.trace);
        CHECK(res.trace->all_pass());
        CHECK(identify(res.trace->final_datum().group) == "A8");
        CHECK(res.trace->final_datum().branch_count() == 7);
    }
    {
        auto res = plan_theorem(2, 0, 6);  // d: n+g even
        REQUIRE(res.trace);
        CHECK(res.trace->variant == "d");
        CHECK(res.trace->all_pass());
        CHECK(res.trace->final_datum().branch_count() == 3);
    }
    {
        auto res = plan_theorem(7, 1, 7, Variant::B);
        REQUIRE(res.trace);
        CHECK(res.trace->variant == "b(i)");
        CHECK(res.trace->all_pass());
        CHECK(type_vector_display(res.trace->final_datum().type_vector) == "(2-2)^7");
    }
    {
        auto res = plan_theorem(5, 0, 7, Variant::B);
        REQUIRE(res.trace);
        CHECK(res.trace->variant == "b(iii)");
        CHECK(res.trace->all_pass());
        CHECK(res.trace->final_datum().branch_count() == 6);
    }
}

TEST_CASE("planner open cases and refusals") {
    auto open = plan_theorem(3, 1, 5);
    REQUIRE(open.not_covered);
    CHECK(open.not_covered->open_case);

    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 6}, {2, 5}, {2, 6}, {2, 7}, {3, 7}, {3, 8}, {4, 9}, {0, 6}}) {
        auto res = plan_theorem(3, g, n);
        REQUIRE(res.not_covered);
        CHECK(res.not_covered->open_case);
    }
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 5}, {2, 6}, {3, 7}, {4, 10}}) {
        auto res = plan_theorem(2, g, n);
        REQUIRE(res.not_covered);
        CHECK(res.not_covered->open_case);
    }

    auto below = plan_theorem(5, 3, 6);  // n < 2g+1
    REQUIRE(below.not_covered);
    CHECK_FALSE(below.not_covered->open_case);

    auto none24 = plan_theorem(2, 0, 4);
    REQUIRE(none24.not_covered);
    CHECK_FALSE(none24.not_covered->open_case);
    CHECK(none24.not_covered->pointer.find("degree-4") != std::string::npos);

    auto p5even = plan_theorem(5, 0, 6, Variant::B);
    REQUIRE(p5even.not_covered);
    CHECK_FALSE(p5even.not_covered->open_case);

    CHECK_THROWS_AS(plan_theorem(4, 0, 5), ParseError);
}
