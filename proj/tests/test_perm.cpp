#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "covers/perm.hpp"

using namespace covers;

namespace {

Perm random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm::from_images(std::move(img));
}

} // namespace

TEST_CASE("composition is left to right") {
    Perm a = Perm::from_cycles(4, {{1, 2, 3}});
    Perm b = Perm::from_cycles(4, {{1, 2, 4}});
    CHECK(Perm::identity(4) * a == a);
    CHECK(a * Perm::identity(4) == a);
    CHECK(a * b == Perm::from_cycles(4, {{1, 4}, {2, 3}}));
    CHECK(a * a.inverse() == Perm::identity(4));
    CHECK_THROWS_AS(a * Perm::identity(5), DegreeMismatch);
}

TEST_CASE("cycle types") {
    CHECK(CycleType(Perm::from_cycles(4, {{1, 2, 3}})) == CycleType(4, {3, 1}));
    CHECK(CycleType(Perm::from_cycles(4, {{1, 3}, {2, 4}})) == CycleType(4, {2, 2}));
    CHECK(CycleType(Perm::from_cycles(5, {{1, 5, 2, 4, 3}})) == CycleType(5, {5}));

    CHECK(CycleType(5, {2, 2, 1}).display() == "2-2");
    CHECK(CycleType(4, {3, 1}).display() == "3");
    CHECK(CycleType(4, {1, 1, 1, 1}).display() == "1");
    CHECK(CycleType(6, {3, 3}).display_full() == "3-3");

    CHECK(CycleType::parse("2-2", 5) == CycleType(5, {2, 2, 1}));
    CHECK(CycleType::parse("5", 6) == CycleType(6, {5, 1}));
    CHECK_THROWS_AS(CycleType::parse("7", 5), ParseError);

    CHECK(CycleType(5, {2, 2, 1}).is_even());
    CHECK_FALSE(CycleType(4, {2, 1, 1}).is_even());
    CHECK(CycleType(4, {3, 1}).index() == 2);
}

TEST_CASE("conjugation and parity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Perm a = random_perm(n, rng), b = random_perm(n, rng);
        // type of ab equals type of ba (they are conjugate)
        CHECK(CycleType(a * b) == CycleType(b * a));
        CHECK((a * b).is_even() == (a.is_even() == b.is_even()));
        CHECK(a.conjugated_by(b) == b.inverse() * a * b);
    }
}

TEST_CASE("cycle notation round trip") {
    CHECK(print_perm(Perm::identity(5)) == "()@5");
    CHECK(print_perm(Perm::from_cycles(4, {{1, 2}, {3, 4}})) == "(1,2)(3,4)");
    CHECK(print_perm(Perm::from_cycles(6, {{1, 2}, {3, 4}})) == "(1,2)(3,4)@6");
    CHECK(parse_perm("( 1 , 2 ) ( 3 , 4 )") == Perm::from_cycles(4, {{1, 2}, {3, 4}}));
    CHECK(parse_perm("()@3") == Perm::identity(3));
    // non-disjoint input composes left to right
    CHECK(parse_perm("(1,2)(2,3)") == Perm::from_cycles(3, {{1, 3, 2}}));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        Perm p = random_perm(n, rng);
        CHECK(parse_perm(print_perm(p)) == p);
    }

    CHECK_THROWS_AS(parse_perm("(1,2"), ParseError);
    CHECK_THROWS_AS(parse_perm("(1,,2)"), ParseError);
    CHECK_THROWS_AS(parse_perm("(1,2)@1"), ParseError);
    CHECK_THROWS_AS(parse_perm("(0,1)"), ParseError);
}

TEST_CASE("perm lists") {
    auto gens = parse_perm_list("(1,2)(3,4); (3,6)(4,5)");
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].degree() == 6);  // padded to the common degree
    CHECK(gens[0] == Perm::from_cycles(6, {{1, 2}, {3, 4}}));
    CHECK(parse_perm_list(print_perm_list(gens)) == gens);
}

TEST_CASE("element order") {
    CHECK(Perm::from_cycles(6, {{1, 2, 3}, {4, 5}}).element_order() == 6);
    CHECK(Perm::identity(4).element_order() == 1);
}
