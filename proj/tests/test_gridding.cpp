#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "geomgrid/gridding.hpp"
#include "oracles.hpp"

using namespace geomgrid;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}

TEST_CASE("one-row two-column griddings of 132") {
    GridMatrix m = GridMatrix::parse("1 1");
    auto gs = all_griddings(P("132"), m);
    REQUIRE(gs.size() == 1);
    CHECK(gs[0].col_cuts == std::vector<int>{0, 2, 3});
    CHECK(gs[0].column_of_position(1) == 1);
    CHECK(gs[0].column_of_position(3) == 2);
    CHECK(gs[0].str() == "132 | 2 | ");
}

TEST_CASE("a descent does not fit one increasing cell") {
    CHECK(all_griddings(P("21"), GridMatrix::parse("1")).empty());
    auto gs = all_griddings(P(""), GridMatrix::parse("1 1"));
    REQUIRE(gs.size() == 1);
    CHECK(gs[0].col_cuts == std::vector<int>{0, 0, 0});
}

TEST_CASE("gridding counts match the cell-assignment oracle") {
    std::vector<GridMatrix> mats = {
        GridMatrix::parse("1"),      GridMatrix::parse("1 1"),   GridMatrix::parse("-1 1"),
        GridMatrix::parse("1\n-1"),  GridMatrix::parse("0 1\n1 0"),
        GridMatrix::parse("-1 1\n1 -1"), GridMatrix::parse("1 1\n1 1"),
    };
    for (const auto& m : mats)
        for (int n = 0; n <= 5; ++n)
            for (const auto& p : all_permutations(n)) {
                long long want = oracles::count_griddings_by_assignment(p, m);
                long long got = static_cast<long long>(all_griddings(p, m).size());
                if (want != got) {
                    CAPTURE(p.str());
                    CAPTURE(m.str());
                    REQUIRE(want == got);
                }
            }
    CHECK(true);
}

TEST_CASE("griddings arrive in lexicographic cut order") {
    GridMatrix m = GridMatrix::parse("1 1");
    auto gs = all_griddings(P("123"), m);
    REQUIRE(gs.size() == 4);  // cut after 0, 1, 2 or 3
    for (size_t i = 1; i < gs.size(); ++i)
        CHECK(gs[i - 1].col_cuts < gs[i].col_cuts);
}

TEST_CASE("gridding order compares column then row counts") {
    GridMatrix m = GridMatrix::parse("1 1");
    auto gs = all_griddings(P("123"), m);
    // more entries in column 1 comes earlier in the order
    GriddedPermutation all_left = gs.back();  // cuts 0,3,3
    REQUIRE(all_left.column_count(1) == 3);
    GriddedPermutation all_right = gs.front();  // cuts 0,0,3
    REQUIRE(all_right.column_count(1) == 0);
    auto w = compare_griddings(all_left, all_right);
    CHECK(w.order == GriddingOrderWitness::Order::Less);
    CHECK(w.kind == GriddingOrderWitness::Kind::Column);
    CHECK(w.index == 1);

    auto e = compare_griddings(all_left, all_left);
    CHECK(e.order == GriddingOrderWitness::Order::Equal);

    CHECK_THROWS_AS(compare_griddings(all_left, GriddedPermutation::trivial(P("123"))),
                    std::invalid_argument);
}

TEST_CASE("row witness when column counts agree") {
    GridMatrix m = GridMatrix::parse("1\n1");  // one column, two rows
    auto gs = all_griddings(P("12"), m);
    REQUIRE(gs.size() == 3);  // row cut at 0, 1, 2
    auto w = compare_griddings(gs[2], gs[0]);  // row cut 2 vs 0
    CHECK(w.order == GriddingOrderWitness::Order::Less);
    CHECK(w.kind == GriddingOrderWitness::Kind::Row);
    CHECK(w.index == 1);
}
