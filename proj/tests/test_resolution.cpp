#include <catch2/catch.hpp>

#include "helpers.hpp"

using namespace cellres;
using testutil::mono;

TEST_CASE("isResolution on the worked examples") {
    auto S = testutil::ringXYZW();

    SECTION("Taylor complex resolves") {
        CHECK(isResolution(taylorComplex(testutil::idealI(S))).isResolution);
    }

    SECTION("scarf2 fails with the expected witness") {
        auto rc = isResolution(scarfComplex(testutil::idealCycle(S)));
        REQUIRE_FALSE(rc.isResolution);
        REQUIRE(rc.witness);
        CHECK(rc.witness->multidegree == mono("x*y*z*w", S));
        CHECK(rc.witness->homologicalDegree == 1);
        CHECK(rc.witness->rank == 1);
    }

    SECTION("a single labeled vertex is acyclic") {
        CellComplex X = buildComplex(S, {newVertex(mono("x^2*y", S), "v")});
        CHECK(isResolution(X).isResolution);
    }

    SECTION("void complex is rejected") {
        CHECK_THROWS_AS(isResolution(buildComplex(S, {})), DomainError);
    }
}

TEST_CASE("isMinimal") {
    auto S = testutil::ringXYZW();
    CHECK_FALSE(isMinimal(taylorComplex(testutil::idealI(S))));
    CHECK(isMinimal(testutil::buildDelta(S)));
    CHECK(isMinimal(hullComplex(testutil::idealI2(testutil::ringXYZ()))));
}

TEST_CASE("Betti tables") {
    auto S = testutil::ringXYZW();

    SECTION("the minimal complex") {
        BettiTable t = bettiTable(testutil::buildDelta(S));
        CHECK(t.totals == std::map<int, long>{{0, 1}, {1, 4}, {2, 4}, {3, 1}});
        CHECK(t.entries.at(0).at(Monomial::one(S)) == 1);
        CHECK(t.entries.at(1).at(mono("y*w", S)) == 1);
        CHECK(t.entries.at(3).at(mono("x^2*y*z*w", S)) == 1);
    }

    SECTION("one generator is a Koszul complex on it") {
        CellComplex X = buildComplex(S, {newVertex(mono("z^4*w", S), "v")});
        BettiTable t = bettiTable(X);
        CHECK(t.totals == std::map<int, long>{{0, 1}, {1, 1}});
        CHECK(t.entries.at(1).at(mono("z^4*w", S)) == 1);
    }

    SECTION("unshifted table indexes by cell dimension") {
        BettiTable t = bettiTable(testutil::buildDelta(S), false);
        CHECK(t.totals == std::map<int, long>{{0, 4}, {1, 4}, {2, 1}});
        CHECK(t.entries.count(0) == 1);
    }

    SECTION("rejects non-resolutions and non-minimal complexes") {
        CHECK_THROWS_WITH(bettiTable(scarfComplex(testutil::idealCycle(S))),
                          Catch::Contains("not a resolution"));
        CHECK_THROWS_WITH(bettiTable(taylorComplex(testutil::idealI(S))),
                          Catch::Contains("not minimal"));
    }
}

TEST_CASE("Taylor complexes always resolve", "[property]") {
    RandomSource rnd(6021);
    auto R3 = testutil::ringXYZ();
    auto R4 = testutil::ringXYZW();
    for (int trial = 0; trial < 20; ++trial) {
        const RingPtr& R = (trial % 2 == 0) ? R3 : R4;
        MonomialIdeal I = randomIdeal(rnd, R, 2 + rnd.below(5), 4);
        CHECK(isResolution(taylorComplex(I)).isResolution);
    }
}

TEST_CASE("Scarf complexes of generic ideals resolve minimally", "[property]") {
    RandomSource rnd(9001);
    auto R = testutil::ringXYZ();
    for (int trial = 0; trial < 10; ++trial) {
        MonomialIdeal I = randomGenericIdeal(rnd, R, 3 + rnd.below(3), 18);
        CellComplex sc = scarfComplex(I);
        CHECK(isResolution(sc).isResolution);
        CHECK(isMinimal(sc));
    }
}

TEST_CASE("minimal resolutions have Betti totals matching the f-vector", "[property]") {
    auto S = testutil::ringXYZW();
    auto R = testutil::ringXYZ();
    std::vector<CellComplex> minimalOnes{testutil::buildDelta(S),
                                         hullComplex(testutil::idealI2(R)),
                                         scarfComplex(testutil::idealI(S))};
    for (const auto& X : minimalOnes) {
        REQUIRE(isResolution(X).isResolution);
        REQUIRE(isMinimal(X));
        BettiTable t = bettiTable(X);
        auto f = X.fVector();
        REQUIRE(t.totals.size() == f.size() + 1);
        CHECK(t.totals.at(0) == 1);
        long alternating = 0;
        for (const auto& [d, count] : t.totals) {
            if (d > 0) CHECK(count == f[static_cast<size_t>(d - 1)]);
            alternating += (d % 2 == 0 ? 1 : -1) * count;
        }
        CHECK(alternating == 0);
    }
}

TEST_CASE("isResolution is insensitive to relabel-with-same-labels and cell order",
          "[property]") {
    auto S = testutil::ringXYZW();
    for (const MonomialIdeal& I : {testutil::idealI(S), testutil::idealCycle(S)}) {
        CellComplex X = scarfComplex(I);
        std::map<std::string, Monomial> sameLabels;
        for (int i : X.cellsOfDim(0)) sameLabels.emplace(X.cell(i).id, X.cell(i).label);
        CellComplex Y = relabelCellComplex(X, sameLabels);
        CHECK(isResolution(Y).isResolution == isResolution(X).isResolution);

        // feeding the cells back in reversed order lands in the same complex
        std::vector<RawCell> raw = X.toRaw();
        std::reverse(raw.begin(), raw.end());
        CellComplex Z = CellComplex::fromRaw(S, raw, true);
        CHECK(complexToJson(Z) == complexToJson(X));
        CHECK(isResolution(Z).isResolution == isResolution(X).isResolution);
    }
}
