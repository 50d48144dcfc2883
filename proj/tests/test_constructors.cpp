#include <catch2/catch.hpp>

#include "helpers.hpp"

using namespace cellres;
using testutil::mono;

TEST_CASE("Taylor complex") {
    auto S = testutil::ringXYZW();
    auto I = testutil::idealI(S);

    SECTION("running example") {
        CellComplex T = taylorComplex(I);
        CHECK(T.fVector() == std::vector<long>{4, 6, 4, 1});
        std::map<int, long> expected{{-1, 1}, {0, 4}, {1, 6}, {2, 4}, {3, 1}};
        CHECK(chainComplex(T).ranks() == expected);
        CHECK(validate(T).empty());
    }

    SECTION("single generator") {
        CellComplex T = taylorComplex(minimalize({mono("x^2*y", S)}));
        CHECK(T.fVector() == std::vector<long>{1});
        CHECK(T.cell(0).label == mono("x^2*y", S));
    }

    SECTION("4-cycle generators give the full 3-simplex with top label xyzw") {
        CellComplex T = taylorComplex(testutil::idealCycle(S));
        CHECK(T.fVector() == std::vector<long>{4, 6, 4, 1});
        int top = T.cellsOfDim(3).at(0);
        Monomial brute = lcmOf(testutil::idealCycle(S).generators());
        CHECK(T.cell(top).label == brute);
        CHECK(T.cell(top).label == mono("x*y*z*w", S));
    }

    SECTION("f-vector is binomial and the simplex is contractible", "[property]") {
        RandomSource rnd(31);
        auto R = testutil::ringXYZ();
        for (int trial = 0; trial < 10; ++trial) {
            MonomialIdeal I2 = randomIdeal(rnd, R, 2 + rnd.below(4), 4);
            CellComplex T = taylorComplex(I2);
            size_t q = I2.numGenerators();
            auto f = T.fVector();
            REQUIRE(f.size() == q);
            long binom = static_cast<long>(q);
            for (size_t k = 0; k < q; ++k) {
                CHECK(f[k] == binom);
                binom = binom * static_cast<long>(q - k - 1) / static_cast<long>(k + 2);
            }
            auto ranks = reducedHomologyRanksOverField(T, rationals());
            for (const auto& [d, r] : ranks) {
                (void)d;
                CHECK(r == 0);
            }
        }
    }
}

TEST_CASE("Scarf complex") {
    auto S = testutil::ringXYZW();

    SECTION("running example is the minimal complex shape") {
        CellComplex sc = scarfComplex(testutil::idealI(S));
        CHECK(sc.fVector() == std::vector<long>{4, 4, 1});
        // the unique 2-cell carries the label of the triangle
        int f = sc.cellsOfDim(2).at(0);
        CHECK(sc.cell(f).label == mono("x^2*y*z*w", S));
    }

    SECTION("4-cycle: the two diagonals share their lcm and drop out") {
        CellComplex sc = scarfComplex(testutil::idealCycle(S));
        CHECK(sc.fVector() == std::vector<long>{4, 4});
    }

    SECTION("single generator") {
        CellComplex sc = scarfComplex(minimalize({mono("z^4*w", S)}));
        CHECK(sc.fVector() == std::vector<long>{1});
    }

    SECTION("subcomplex of Taylor with matching labels and signs", "[property]") {
        RandomSource rnd(47);
        auto R = testutil::ringXYZ();
        for (int trial = 0; trial < 15; ++trial) {
            MonomialIdeal I = randomIdeal(rnd, R, 2 + rnd.below(4), 5);
            CellComplex T = taylorComplex(I);
            CellComplex sc = scarfComplex(I);
            REQUIRE(sc.size() <= T.size());
            std::set<Monomial, MonomialLess> scarfLabels;
            for (const auto& c : sc.cells()) {
                int inTaylor = T.indexOf(c.id);
                REQUIRE(inTaylor >= 0);
                CHECK(T.cell(inTaylor).label == c.label);
                CHECK(T.cell(inTaylor).dim == c.dim);
                // attaching degrees agree entrywise
                for (const auto& [t, deg] : c.boundary) {
                    const std::string& targetId = sc.cell(t).id;
                    bool found = false;
                    for (const auto& [tt, tdeg] : T.cell(inTaylor).boundary)
                        if (T.cell(tt).id == targetId) {
                            found = true;
                            CHECK(tdeg == deg);
                        }
                    CHECK(found);
                }
                CHECK(scarfLabels.insert(c.label).second);  // labels pairwise distinct
            }
            CHECK(isMinimal(sc));
            CHECK(validate(sc).empty());
        }
    }
}

TEST_CASE("sphere complex") {
    auto Q0 = makeRing({});

    SECTION("dimension two") {
        CellComplex S2 = sphereComplex(Q0, 2);
        auto h = coefficientHomology(S2, Coefficients::overField(rationals()));
        CHECK(h.fieldRanks.at(2) == 1);
        CHECK(h.fieldRanks.at(0) == 0);
        CHECK(h.fieldRanks.at(-1) == 0);
        // no recorded incidences at all
        auto m = facePoset(S2);
        CHECK(m == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
    }

    SECTION("the circle is a loop with a zero attaching degree") {
        CellComplex S1 = sphereComplex(Q0, 1);
        CHECK(validate(S1).empty());
        auto h = coefficientHomology(S1, Coefficients::overField(rationals()));
        CHECK(h.fieldRanks.at(1) == 1);
        CHECK(h.fieldRanks.at(0) == 0);
    }

    CHECK_THROWS_AS(sphereComplex(Q0, 0), DomainError);
}

TEST_CASE("real projective space complex") {
    auto Q0 = makeRing({});
    auto F2 = makeRing({}, primeField(2));

    SECTION("over F2 every positive degree carries rank one") {
        auto h = coefficientHomology(rpnComplex(F2, 3), Coefficients::overField(primeField(2)));
        CHECK(h.fieldRanks.at(0) == 0);
        CHECK(h.fieldRanks.at(1) == 1);
        CHECK(h.fieldRanks.at(2) == 1);
        CHECK(h.fieldRanks.at(3) == 1);
    }

    SECTION("over Q the middle degrees vanish") {
        auto h = coefficientHomology(rpnComplex(Q0, 2), Coefficients::overField(rationals()));
        CHECK(h.fieldRanks.at(1) == 0);
        CHECK(h.fieldRanks.at(2) == 0);
    }

    SECTION("integral homology") {
        auto h = coefficientHomology(rpnComplex(Q0, 3), Coefficients::integers(), false);
        CHECK(h.integers.at(0).freeRank == 1);
        REQUIRE(h.integers.at(1).torsion.size() == 1);
        CHECK(h.integers.at(1).torsion[0] == 2);
        CHECK(h.integers.at(1).freeRank == 0);
        CHECK(h.integers.count(2) == 0);
        CHECK(h.integers.at(3).freeRank == 1);
    }

    SECTION("face poset is the full chain") {
        auto m = facePoset(rpnComplex(Q0, 3));
        REQUIRE(m.size() == 4);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) CHECK(m[i][j] == (i <= j ? 1 : 0));
    }

    CHECK_THROWS_AS(rpnComplex(Q0, 0), DomainError);
}

TEST_CASE("torus complex") {
    auto Q0 = makeRing({});

    SECTION("three-torus homology") {
        auto h = coefficientHomology(torusComplex(Q0, 3), Coefficients::overField(rationals()));
        CHECK(h.fieldRanks.at(0) == 0);
        CHECK(h.fieldRanks.at(1) == 3);
        CHECK(h.fieldRanks.at(2) == 3);
        CHECK(h.fieldRanks.at(3) == 1);
    }

    SECTION("circle") {
        CellComplex T1 = torusComplex(Q0, 1);
        CHECK(T1.fVector() == std::vector<long>{1, 1});
        auto h = coefficientHomology(T1, Coefficients::overField(rationals()));
        CHECK(h.fieldRanks.at(1) == 1);
    }

    SECTION("f-vector is the binomial row") {
        for (int n = 1; n <= 5; ++n) {
            auto f = torusComplex(Q0, n).fVector();
            long binom = 1;
            for (int k = 0; k <= n; ++k) {
                CHECK(f[static_cast<size_t>(k)] == binom);
                binom = binom * (n - k) / (k + 1);
            }
        }
    }

    CHECK_THROWS_AS(torusComplex(Q0, 0), DomainError);
}

TEST_CASE("every constructor validates and obeys the 1-cell rule", "[property]") {
    auto Q0 = makeRing({});
    auto S = testutil::ringXYZW();
    std::vector<CellComplex> produced;
    produced.push_back(taylorComplex(testutil::idealI(S)));
    produced.push_back(scarfComplex(testutil::idealI(S)));
    produced.push_back(scarfComplex(testutil::idealCycle(S)));
    produced.push_back(sphereComplex(Q0, 1));
    produced.push_back(sphereComplex(Q0, 3));
    produced.push_back(rpnComplex(Q0, 4));
    produced.push_back(torusComplex(Q0, 3));
    for (const auto& X : produced) {
        CHECK(validate(X).empty());
        for (const auto& c : X.cells()) {
            if (c.dim != 1) continue;
            int nonzero = 0;
            for (const auto& [t, deg] : c.boundary) {
                (void)t;
                if (deg != 0) {
                    ++nonzero;
                    CHECK((deg == 1 || deg == -1));
                }
            }
            CHECK((nonzero == 0 || nonzero == 2));
        }
    }
}
