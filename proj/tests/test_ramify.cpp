#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "covers/census.hpp"
#include "covers/ramify.hpp"

using namespace covers;

namespace {

// the three displayed covers
const IntPoly k333_num = parse_int_poly("x^3*(x-2)");
const IntPoly k333_den = parse_int_poly("1-2*x");
const IntPoly k533_num = parse_int_poly("x^3*(x^3+x^2+1)");
const IntPoly k533_den = parse_int_poly("x+1");
const IntPoly kf2_num = parse_int_poly("x^5*(x+1)");
const IntPoly kf2_den = parse_int_poly("x-1");

RationalMap map_at(const IntPoly& num, const IntPoly& den, std::uint32_t p) {
    Field F = Field::prime(p);
    return RationalMap::make(reduce_mod(num, F), reduce_mod(den, F));
}

std::vector<std::vector<int>> fibers_of(const RamificationProfile& prof) {
    std::vector<std::vector<int>> out;
    for (const auto& bp : prof.branch_points) out.push_back(bp.fiber);
    return out;
}

std::vector<std::string> values_of(const RamificationProfile& prof) {
    std::vector<std::string> out;
    for (const auto& bp : prof.branch_points) out.push_back(bp.value_display());
    return out;
}

} // namespace

TEST_CASE("triple-point cover at good characteristics") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        auto prof = branch_analysis(map_at(k333_num, k333_den, p));
        CHECK(prof.separable);
        CHECK(prof.tame);
        CHECK(prof.rh_defect == 0);
        CHECK(values_of(prof) == std::vector<std::string>{"0", "1", "inf"});
        CHECK(fibers_of(prof) == std::vector<std::vector<int>>{{3, 1}, {3, 1}, {3, 1}});
    }
}

TEST_CASE("degree-6 char-2 cover") {
    auto prof = branch_analysis(map_at(k533_num, k533_den, 2));
    CHECK(prof.tame);
    CHECK(values_of(prof) == std::vector<std::string>{"0", "1", "inf"});
    CHECK(fibers_of(prof) == std::vector<std::vector<int>>{{3, 1, 1, 1}, {3, 3}, {5, 1}});
    std::vector<std::string> suppressed;
    for (const auto& t : prof.type_vector()) suppressed.push_back(t.display());
    CHECK(suppressed == std::vector<std::string>{"3", "3-3", "5"});
}

TEST_CASE("degree-6 char-3 cover") {
    auto prof = branch_analysis(map_at(kf2_num, kf2_den, 3));
    CHECK(prof.tame);
    CHECK(values_of(prof) == std::vector<std::string>{"0", "1", "inf"});
    CHECK(fibers_of(prof) == std::vector<std::vector<int>>{{5, 1}, {2, 2, 1, 1}, {5, 1}});
}

TEST_CASE("degeneration reports") {
    auto at2 = degeneration_report(k333_num, k333_den, 2);
    CHECK(at2.kind == Degeneration::Inseparable);

    auto at3 = degeneration_report(k333_num, k333_den, 3);
    CHECK(at3.kind == Degeneration::Wild);
    REQUIRE_FALSE(at3.wild_points.empty());
    CHECK(at3.wild_points.front().find("e=3") != std::string::npos);

    CHECK(degeneration_report(k533_num, k533_den, 2).kind == Degeneration::Tame);
    CHECK(degeneration_report(kf2_num, kf2_den, 3).kind == Degeneration::Tame);
    CHECK(degeneration_report(k333_num, k333_den, 7).kind == Degeneration::Tame);
}

TEST_CASE("displayed double expressions") {
    {
        Field F = Field::prime(2);
        auto f = map_at(k533_num, k533_den, 2);
        Poly R = reduce_mod(parse_int_poly("(x^2+x+1)^3"), F);
        Poly S = reduce_mod(parse_int_poly("x+1"), F);
        CHECK(verify_identity(f, F.one(), R, S));
        // the identity pins the fiber over 1: multiplicities of R
        auto prof = branch_analysis(f);
        CHECK(prof.branch_points[1].fiber == detail::fiber_of(R, 6));
    }
    {
        Field F = Field::prime(3);
        auto f = map_at(kf2_num, kf2_den, 3);
        Poly R = reduce_mod(parse_int_poly("(x^2-x-1)^2*(x^2+1)"), F);
        Poly S = reduce_mod(parse_int_poly("x-1"), F);
        CHECK(verify_identity(f, F.one(), R, S));
        auto prof = branch_analysis(f);
        CHECK(prof.branch_points[1].fiber == detail::fiber_of(R, 6));
    }
    {
        Field F = Field::prime(7);
        auto f = map_at(k333_num, k333_den, 7);
        Poly R = reduce_mod(parse_int_poly("(x-1)^3*(x+1)"), F);
        Poly S = reduce_mod(parse_int_poly("1-2*x"), F);
        CHECK(verify_identity(f, F.one(), R, S));
        CHECK(verify_identity(f, F.zero(), f.num, f.den));
        CHECK_FALSE(verify_identity(f, F.from_int(2), R, S));
        CHECK_THROWS_AS(verify_identity(f, F.one(), R, Poly::zero(F)), ParseError);
    }
}

TEST_CASE("hasse polynomial") {
    CHECK(hasse_phi_poly(3) == Poly::from_ints(Field::prime(3), {1, 1}));
    CHECK(hasse_phi_poly(5) == Poly::from_ints(Field::prime(5), {1, 4, 1}));
    CHECK(hasse_phi_poly(7) == Poly::from_ints(Field::prime(7), {1, 2, 2, 1}));

    Field f3 = Field::prime(3);
    CHECK(f3.is_zero(hasse_phi(f3, f3.from_int(2))));  // supersingular lambda
    CHECK_THROWS_AS(hasse_phi(f3, f3.zero()), BadLambda);
    CHECK_THROWS_AS(hasse_phi(f3, f3.one()), BadLambda);

    Field f5 = Field::prime(5);
    CHECK(f5.to_string(hasse_phi(f5, f5.from_int(2))) == "3");

    // at p = 3 every ordinary lambda lives in an extension
    Field f9 = Field::extension(3, 2);
    CHECK_FALSE(f9.is_zero(hasse_phi(f9, f9.gen())));
}

TEST_CASE("random map invariants") {
    std::mt19937_64 rng(404);
    std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};
    int done = 0;
    while (done < 200) {
        Field F = Field::prime(primes[rng() % primes.size()]);
        auto rand_poly = [&](int maxdeg) {
            std::vector<Field::Elem> cs;
            int d = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
            for (int i = 0; i <= d; ++i) cs.push_back(F.from_int(static_cast<long long>(rng() % F.p())));
            return Poly(F, std::move(cs));
        };
        Poly P = rand_poly(6), Q = rand_poly(6);
        if (P.is_zero() || Q.is_zero()) continue;
        if (std::max(P.degree(), Q.degree()) - poly_gcd(P, Q).degree() < 1) continue;
        RationalMap f = RationalMap::reduced(P, Q);
        auto prof = branch_analysis(f);
        ++done;
        if (!prof.separable) {
            CHECK_FALSE(prof.tame);
            continue;
        }
        bool any_wild_index = false;
        for (const auto& bp : prof.branch_points) {
            long long sum = 0;
            bool ramified = false;
            for (int e : bp.fiber) {
                sum += e;
                ramified |= e >= 2;
                any_wild_index |= e % static_cast<int>(F.p()) == 0;
            }
            CHECK(sum == f.degree);   // every fiber multiset sums to n
            CHECK(ramified);          // listed branch points are ramified
        }
        if (prof.tame) CHECK(prof.rh_defect == 0);
        if (any_wild_index) CHECK_FALSE(prof.tame);
        if (prof.rh_defect != 0) CHECK_FALSE(prof.tame);
    }
}

TEST_CASE("tame registry covers appear in the tame-type census") {
    struct Entry { const IntPoly* num; const IntPoly* den; std::uint32_t p; };
    for (const auto& [num, den, p] : {Entry{&k333_num, &k333_den, 7},
                                      Entry{&k533_num, &k533_den, 2},
                                      Entry{&kf2_num, &kf2_den, 3}}) {
        auto prof = branch_analysis(map_at(*num, *den, p));
        REQUIRE(prof.tame);
        std::vector<CycleType> tv = prof.type_vector();
        std::sort(tv.begin(), tv.end());
        auto all = possible_tame_types(prof.map.degree, static_cast<int>(p));
        CHECK(std::find(all.begin(), all.end(), tv) != all.end());
    }
}

TEST_CASE("map text formats") {
    auto parsed = parse_rational_map_text("num = x^3*(x-2); den = 1-2*x; over GF(7)");
    CHECK(parsed.p == 7);
    CHECK(parsed.k == 1);
    CHECK(parsed.num == k333_num);

    auto parsed81 = parse_rational_map_text("num = x; den = 1; over GF(81)");
    CHECK(parsed81.p == 3);
    CHECK(parsed81.k == 4);

    auto [n2, d2] = parse_inline_map("x^5*(x+1) / (x-1)");
    CHECK(n2 == kf2_num);
    CHECK(d2 == IntPoly{-1, 1});

    auto f = map_at(k333_num, k333_den, 7);
    auto reparsed = parse_rational_map_text(f.to_string());
    Field F = Field::prime(7);
    CHECK(reduce_mod(reparsed.num, F) == f.num);
    CHECK(reduce_mod(reparsed.den, F) == f.den);

    CHECK_THROWS_AS(parse_rational_map_text("num = x; den = 1"), ParseError);
    CHECK_THROWS_AS(parse_int_poly("x++1"), ParseError);
    CHECK_THROWS_AS(parse_rational_map_text("num = x; den = 1; over GF(12)"), ParseError);
}
