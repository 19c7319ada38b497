#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "covers/frobenius.hpp"
#include "covers/intpoly.hpp"

using namespace covers;

namespace {

RationalMap map_at(const char* num, const char* den, std::uint32_t p) {
    Field F = Field::prime(p);
    return RationalMap::make(reduce_mod(parse_int_poly(num), F), reduce_mod(parse_int_poly(den), F));
}

GroupHandle psl25() {
    return GroupHandle::generate({Perm::from_cycles(6, {{1, 2, 3, 4, 5}}),
                                  Perm::from_cycles(6, {{1, 6}, {2, 5}})});
}

std::set<std::string> observed_types(const SampleReport& rep) {
    std::set<std::string> out;
    for (const auto& [t, c] : rep.histogram) out.insert(t.display_full());
    return out;
}

} // namespace

TEST_CASE("kummer covers sample cyclic types") {
    // x^4 over F_5: 4 divides q-1, so Frobenius classes come from C_4 acting
    // on the roots; the only degree patterns are 1^4, 2^2 and 4
    auto rep = sample(map_at("x^4", "1", 5), 1, 400, 11);
    std::set<std::string> allowed{"1-1-1-1", "2-2", "4"};
    for (const auto& t : observed_types(rep)) CHECK(allowed.count(t) == 1);
    CHECK(observed_types(rep).size() == 3);  // all three appear in 400 draws

    // x^3 over F_7: C_3, patterns 1^3 and 3
    auto rep3 = sample(map_at("x^3", "1", 7), 1, 200, 11);
    std::set<std::string> allowed3{"1-1-1", "3"};
    for (const auto& t : observed_types(rep3)) CHECK(allowed3.count(t) == 1);
}

TEST_CASE("report bookkeeping and reproducibility") {
    auto f = map_at("x^5*(x+1)", "x-1", 3);
    auto rep = sample(f, 4, 500, 42);
    CHECK(rep.observations == 500);
    std::uint64_t total = rep.rejected;
    for (const auto& [t, c] : rep.histogram) total += c;
    CHECK(total == rep.total_draws);

    auto rep2 = sample(f, 4, 500, 42);
    CHECK(rep2.histogram == rep.histogram);
    CHECK(rep2.rejected == rep.rejected);

    auto rep3 = sample(f, 4, 500, 43);
    CHECK(rep3.histogram != rep.histogram);  // astronomically unlikely to tie

    CHECK_THROWS_AS(sample(map_at("x^4", "1", 2), 2, 10, 1), InseparableMap);
}

TEST_CASE("extending a run preserves its prefix") {
    auto f = map_at("x^5*(x+1)", "x-1", 3);
    auto small = sample(f, 4, 200, 7);
    auto large = sample(f, 4, 700, 7);
    for (const auto& [t, c] : small.histogram) CHECK(large.histogram.at(t) >= c);
}

TEST_CASE("type distributions") {
    auto psl = type_distribution(psl25());
    CHECK(psl.order == 60);
    CHECK(psl.counts.at(CycleType(6, {1, 1, 1, 1, 1, 1})) == 1);
    CHECK(psl.counts.at(CycleType(6, {2, 2, 1, 1})) == 15);
    CHECK(psl.counts.at(CycleType(6, {3, 3})) == 20);
    CHECK(psl.counts.at(CycleType(6, {5, 1})) == 24);
    CHECK(psl.counts.size() == 4);

    auto a6 = type_distribution(natural_alternating(6));
    CHECK(a6.counts.at(CycleType(6, {3, 1, 1, 1})) == 40);
    CHECK(a6.order == 360);

    auto c5 = type_distribution(GroupHandle::generate({Perm::from_cycles(5, {{1, 2, 3, 4, 5}})}));
    CHECK(c5.counts.at(CycleType(5, {1, 1, 1, 1, 1})) == 1);
    CHECK(c5.counts.at(CycleType(5, {5})) == 4);
}

TEST_CASE("discrimination of the degree-6 char-3 cover") {
    auto f = map_at("x^5*(x+1)", "x-1", 3);
    auto rep = sample(f, 4, 2000, 1729);

    // every observed type lies in the PSL_2(5) support set
    std::set<std::string> psl_set{"1-1-1-1-1-1", "2-2-1-1", "3-3", "5-1"};
    for (const auto& t : observed_types(rep)) CHECK(psl_set.count(t) == 1);

    auto verdict = discriminate(rep, {type_distribution(psl25()),
                                      type_distribution(natural_alternating(6))});
    CHECK(verdict.favored == "PSL2(5)");
    const CandidateVerdict* a6v = nullptr;
    for (const auto& v : verdict.candidates)
        if (v.name == "A6") a6v = &v;
    REQUIRE(a6v != nullptr);
    CHECK_FALSE(a6v->excluded);  // a supergroup is never hard-excluded
    bool found_3111 = false;
    for (const auto& b : a6v->absent_support) {
        if (b.type == CycleType(6, {3, 1, 1, 1})) {
            found_3111 = true;
            CHECK(b.expression == "(1 - 40/360)^2000");
            CHECK(b.log10_probability < -100.0);
        }
    }
    CHECK(found_3111);
}

TEST_CASE("char-2 cover leaves the PSL type set") {
    auto f = map_at("x^3*(x^3+x^2+1)", "x+1", 2);
    auto rep = sample(f, 6, 500, 1729);
    std::set<std::string> psl_set{"1-1-1-1-1-1", "2-2-1-1", "3-3", "5-1"};
    bool outside = false;
    for (const auto& t : observed_types(rep))
        if (psl_set.count(t) == 0) outside = true;
    CHECK(outside);

    // hard exclusion: the A6 sample kills the PSL candidate
    auto verdict = discriminate(rep, {type_distribution(psl25()),
                                      type_distribution(natural_alternating(6))});
    const CandidateVerdict* pslv = nullptr;
    for (const auto& v : verdict.candidates)
        if (v.name == "PSL2(5)") pslv = &v;
    REQUIRE(pslv != nullptr);
    CHECK(pslv->excluded);
}

TEST_CASE("support soundness for the registry covers") {
    struct Entry {
        const char *num, *den;
        std::uint32_t p, k;
        GroupHandle group;
    };
    std::vector<Entry> entries;
    entries.push_back({"x^3*(x-2)", "1-2*x", 7, 2, natural_alternating(4)});
    entries.push_back({"x^3*(x^3+x^2+1)", "x+1", 2, 4, natural_alternating(6)});
    entries.push_back({"x^5*(x+1)", "x-1", 3, 4, psl25()});
    for (const auto& e : entries) {
        auto rep = sample(map_at(e.num, e.den, e.p), e.k, 500, 99);
        auto model = type_distribution(e.group);
        for (const auto& [t, c] : rep.histogram) {
            (void)c;
            CHECK(model.supports(t));
        }
    }
}

TEST_CASE("exclusion monotonicity and error paths") {
    auto f = map_at("x^3*(x^3+x^2+1)", "x+1", 2);
    auto small = sample(f, 6, 150, 5);
    auto large = sample(f, 6, 600, 5);
    auto cands = std::vector<CandidateModel>{type_distribution(psl25()),
                                             type_distribution(natural_alternating(6))};
    auto vs = discriminate(small, cands);
    auto vl = discriminate(large, cands);
    for (size_t i = 0; i < vs.candidates.size(); ++i)
        if (vs.candidates[i].excluded) CHECK(vl.candidates[i].excluded);

    // all candidates excluded
    auto c5 = type_distribution(GroupHandle::generate({Perm::from_cycles(6, {{1, 2, 3, 4, 5, 6}})}));
    auto v4ish = type_distribution(GroupHandle::generate(
        {Perm::from_cycles(6, {{1, 2}, {3, 4}}), Perm::from_cycles(6, {{3, 4}, {5, 6}})}));
    CHECK_THROWS_AS(discriminate(large, {c5, v4ish}), NoSurvivingCandidate);
    CHECK_THROWS_AS(discriminate(large, {c5}), ParseError);
}
