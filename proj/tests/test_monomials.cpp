#include <catch2/catch.hpp>

#include "helpers.hpp"

using namespace cellres;
using testutil::mono;

TEST_CASE("lcm is componentwise max") {
    auto S = testutil::ringXYZW();
    CHECK(lcm(mono("x*y", S), mono("y*z", S)) == mono("x*y*z", S));
    CHECK(lcm(mono("x^2*y", S), mono("z^4*w", S)) == mono("x^2*y*z^4*w", S));
    CHECK(lcm(mono("x*y", S), Monomial::one(S)) == mono("x*y", S));
    // the edge label of the triangle in the minimal complex
    CHECK(lcm(mono("x^2*y", S), mono("x*y*z", S)) == mono("x^2*y*z", S));
    CHECK_THROWS_AS(lcm(mono("x", testutil::ringXYZ()), mono("x*y", S)), DomainError);
}

TEST_CASE("divisibility") {
    auto S = testutil::ringXYZW();
    CHECK(divides(mono("y*w", S), mono("x^2*y*w", S)));
    CHECK_FALSE(divides(mono("z^4*w", S), mono("x*y*z", S)));
    CHECK(divides(mono("y*w", S), mono("y*z^4*w", S)));
    CHECK(divides(Monomial::one(S), mono("z^4*w", S)));
}

TEST_CASE("quotient is exact division") {
    auto S = testutil::ringXYZW();
    CHECK(quotient(mono("x^2*y*z", S), mono("x*y", S)) == mono("x*z", S));
    CHECK_THROWS_AS(quotient(mono("x*y", S), mono("z", S)), DomainError);
}

TEST_CASE("minimalize drops divisible generators and sorts canonically") {
    auto S = testutil::ringXYZW();
    auto I = minimalize({mono("x*y", S), mono("x^2*y", S)});
    REQUIRE(I.numGenerators() == 1);
    CHECK(I.generators()[0] == mono("x*y", S));

    auto paperI = testutil::idealI(S);
    CHECK(paperI.numGenerators() == 4);

    auto single = minimalize({mono("x^2*y", S)});
    CHECK(single.numGenerators() == 1);

    // idempotent
    auto again = minimalize(paperI.generators());
    CHECK(again.generators() == paperI.generators());

    CHECK_THROWS_AS(minimalize({}), DomainError);
}

TEST_CASE("lcm lattice matches subset enumeration") {
    auto S = testutil::ringXYZW();

    SECTION("4-cycle ideal has a 9 element lattice") {
        auto gens = testutil::idealCycle(S).generators();
        auto lattice = lcmLattice(gens);
        REQUIRE(lattice.size() == 9);
        std::set<Monomial, MonomialLess> expected;
        for (const auto& m : testutil::subsetLcmsBruteForce(gens)) expected.insert(m);
        std::set<Monomial, MonomialLess> got(lattice.begin(), lattice.end());
        CHECK(got == expected);
    }

    SECTION("paper ideal: lattice equals the distinct subset lcms") {
        auto gens = testutil::idealI(S).generators();
        auto brute = testutil::subsetLcmsBruteForce(gens);
        std::set<Monomial, MonomialLess> distinct(brute.begin(), brute.end());
        REQUIRE(brute.size() == 15);
        // x*y*z^4*w and x^2*y*z^4*w each arise from several subsets, which is
        // exactly why the Scarf complex of this ideal is smaller than Taylor
        CHECK(distinct.size() == 11);
        auto lattice = lcmLattice(gens);
        CHECK(std::set<Monomial, MonomialLess>(lattice.begin(), lattice.end()) == distinct);
    }

    SECTION("singleton") {
        auto lattice = lcmLattice({mono("x", S)});
        REQUIRE(lattice.size() == 1);
        CHECK(lattice[0] == mono("x", S));
    }
}

TEST_CASE("monomial parser") {
    auto S = testutil::ringXYZW();
    CHECK(mono("x^2*y", S).exponents() == std::vector<Integer>{2, 1, 0, 0});
    CHECK(mono("1", S).exponents() == std::vector<Integer>{0, 0, 0, 0});
    CHECK(mono("z^4*w", S).exponents() == std::vector<Integer>{0, 0, 4, 1});
    CHECK(mono("x*x", S) == mono("x^2", S));
    CHECK(mono(" x * y ^ 2 ", S) == mono("x*y^2", S));

    CHECK_THROWS_AS(mono("q", S), ParseError);
    CHECK_THROWS_AS(mono("x^0", S), ParseError);
    CHECK_THROWS_AS(mono("x^-1", S), ParseError);
    CHECK_THROWS_AS(mono("x**y", S), ParseError);
    CHECK_THROWS_AS(mono("x*", S), ParseError);
    CHECK_THROWS_AS(mono("", S), ParseError);
    CHECK_THROWS_AS(mono("1*x", S), ParseError);
}

TEST_CASE("render and parse round trip") {
    auto S = testutil::ringXYZW();
    CHECK(mono("x^2*y", S).str() == "x^2*y");
    CHECK(Monomial::one(S).str() == "1");
    RandomSource rnd(20240811);
    for (int i = 0; i < 200; ++i) {
        Monomial m = randomMonomial(rnd, S, 9);
        CHECK(parseMonomial(m.str(), S) == m);
    }
}

TEST_CASE("lcm/divides algebra", "[property]") {
    auto S = testutil::ringXYZ();
    RandomSource rnd(7);
    for (int i = 0; i < 100; ++i) {
        Monomial a = randomMonomial(rnd, S, 4);
        Monomial b = randomMonomial(rnd, S, 4);
        Monomial c = randomMonomial(rnd, S, 4);
        CHECK(lcm(a, b) == lcm(b, a));
        CHECK(lcm(a, a) == a);
        CHECK(lcm(lcm(a, b), c) == lcm(a, lcm(b, c)));
        CHECK(divides(a, lcm(a, b)));
        if (divides(a, b) && divides(b, a)) CHECK(a == b);
        if (divides(a, b) && divides(b, c)) CHECK(divides(a, c));
    }
}

TEST_CASE("divisors of a degree are determined by their join", "[property]") {
    auto S = testutil::ringXYZ();
    RandomSource rnd(11);
    for (int i = 0; i < 100; ++i) {
        std::vector<Monomial> gens;
        size_t q = 2 + rnd.below(4);
        for (size_t g = 0; g < q; ++g) gens.push_back(randomMonomial(rnd, S, 4));
        Monomial b = randomMonomial(rnd, S, 6);
        std::vector<Monomial> dividing;
        for (const auto& g : gens)
            if (divides(g, b)) dividing.push_back(g);
        if (dividing.empty()) continue;
        Monomial bStar = lcmOf(dividing);
        for (const auto& g : gens) CHECK(divides(g, b) == divides(g, bStar));
        auto lattice = lcmLattice(gens);
        CHECK(std::count(lattice.begin(), lattice.end(), bStar) == 1);
        CHECK(lattice.size() <= (1u << q));
    }
}
