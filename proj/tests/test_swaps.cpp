#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace cnest;

TEST_CASE("swap_map worked examples") {
    SECTION("the non-crossing partition of [9] maps to its non-nesting partner") {
        REQUIRE(swap_map(fixtures::nc9()) == fixtures::nn9());
    }

    SECTION("C_5 non-nesting partition maps onto the non-crossing one") {
        auto img = swap_map(fixtures::c5_nonnesting());
        REQUIRE(img == fixtures::c5_noncrossing());
        REQUIRE(crossing_number(img) == 0);
        REQUIRE(nesting_number(img) == 2);
    }

    SECTION("all singletons map to themselves") {
        SetPartition p(Ctype::C, 3, {{1}, {2}, {3}, {-1}, {-2}, {-3}});
        REQUIRE(swap_map(p) == p);
        SetPartition a(Ctype::A, 3, {{1}, {2}, {3}});
        REQUIRE(swap_map(a) == a);
    }

    SECTION("wrong type is rejected") {
        REQUIRE_THROWS(swap_map(fixtures::b5_three_nestings()));
        REQUIRE_THROWS(swap_map_B(fixtures::c5_nonnesting()));
    }
}

TEST_CASE("swap_map exchanges the statistics exhaustively") {
    for (Ctype t : {Ctype::A, Ctype::C}) {
        int n = t == Ctype::A ? 5 : 3;
        for_each_partition(t, n, [&](const SetPartition& p) {
            SetPartition q = swap_map(p);
            REQUIRE(openers(q) == openers(p));
            REQUIRE(closers(q) == closers(p));
            REQUIRE(crossing_number(q) == nesting_number(p));
            REQUIRE(nesting_number(q) == crossing_number(p));
        });
    }
}

TEST_CASE("zero block rewiring") {
    auto out = zero_block_transform({Arc{3, 0}, Arc{1, -2}});
    REQUIRE(out == std::vector<Arc>{Arc{1, -2}, Arc{3, -3}});

    REQUIRE(zero_block_transform({Arc{1, 0}}) == std::vector<Arc>{Arc{1, -1}});

    SECTION("no zero arc means identity") {
        std::vector<Arc> in{Arc{1, -3}, Arc{2, -2}};
        REQUIRE(zero_block_transform(in) == in);
    }

    SECTION("precondition violations are rejected") {
        REQUIRE_THROWS(zero_block_transform({Arc{1, 0}, Arc{2, 0}}));
        REQUIRE_THROWS(zero_block_transform({Arc{1, 0}, Arc{3, -2}}));
        REQUIRE_THROWS(zero_block_transform({Arc{1, 0}, Arc{2, -3}, Arc{2, -3}}));
    }
}

TEST_CASE("swap_map_B worked examples") {
    SECTION("rank one zero block is fixed") {
        SetPartition p(Ctype::B, 1, {{1, -1}});
        REQUIRE(swap_map_B(p) == p);
        SetPartition q(Ctype::B, 1, {{1}, {-1}});
        REQUIRE(swap_map_B(q) == q);
    }

    SECTION("three nestings map to three crossings on the B_5 fixture") {
        auto p = fixtures::b5_three_nestings();
        REQUIRE(nesting_number(p) == 3);
        auto img = swap_map_B(p);
        REQUIRE(crossing_number(img) == 3);
        REQUIRE(openers(img) == std::vector<int>{1, 2, 3, 4, 5});
        REQUIRE(closers(img) == std::vector<int>{2, 4});
    }
}

TEST_CASE("swap_map_B maps nestings to crossings exhaustively") {
    for (int n = 1; n <= 3; ++n) {
        std::set<SetPartition> images;
        for_each_partition(Ctype::B, n, [&](const SetPartition& p) {
            SetPartition q = swap_map_B(p);
            REQUIRE(openers(q) == openers(p));
            REQUIRE(closers(q) == closers(p));
            REQUIRE(crossing_number(q) == nesting_number(p));
            REQUIRE(images.insert(q).second);
        });
    }
}

TEST_CASE("non-crossing constructors") {
    SECTION("type A reproduces the fixture") {
        auto got = nc_from_config(Ctype::A, {1, 2, 3, 5, 7}, {4, 5, 6, 7, 9}, 9);
        REQUIRE(got.size() == 1);
        REQUIRE(got[0] == fixtures::nc9());
    }
    SECTION("type C") {
        auto got = nc_from_config(Ctype::C, {1, 2, 3, 4, 5}, {2, 4}, 5);
        REQUIRE(got.size() == 1);
        REQUIRE(got[0] == fixtures::c5_noncrossing());
        REQUIRE(is_noncrossing(got[0]));
    }
    SECTION("type D two-fold fiber") {
        auto got = nc_from_config(Ctype::D, {1, 2, 3}, {3}, 3);
        REQUIRE(got.size() == 2);
        REQUIRE(swap_extreme(got[0]) == got[1]);
        std::vector<SetPartition> expected{
            SetPartition(Ctype::D, 3, {{-1, 2, 3}, {1, -2, -3}}),
            SetPartition(Ctype::D, 3, {{1, 3, -2}, {2, -1, -3}})};
        std::sort(expected.begin(), expected.end());
        REQUIRE(got == expected);
    }
    SECTION("type D infeasible fiber is empty") {
        REQUIRE(nc_from_config(Ctype::D, {1, 2}, {2}, 3).empty());
        REQUIRE(nn_from_config(Ctype::D, {1, 2}, {2}, 3).empty());
    }
    SECTION("invalid configurations are rejected") {
        REQUIRE_THROWS(nc_from_config(Ctype::C, {3}, {3}, 3));
        REQUIRE_THROWS(nn_from_config(Ctype::A, {1, 2}, {2}, 3));
    }
}

TEST_CASE("non-nesting constructors") {
    SECTION("type B with only openers builds the zero block pattern") {
        auto got = nn_from_config(Ctype::B, {1, 2, 3}, {}, 3);
        REQUIRE(got.size() == 1);
        REQUIRE(got[0] == SetPartition(Ctype::B, 3, {{1, -1}, {2, -3}, {3, -2}}));
        REQUIRE(is_nonnesting(got[0]));
    }
    SECTION("type C reproduces the non-nesting fixture") {
        auto got = nn_from_config(Ctype::C, {1, 2, 3, 4, 5}, {2, 4}, 5);
        REQUIRE(got.size() == 1);
        REQUIRE(got[0] == fixtures::c5_nonnesting());
    }
    SECTION("type A reproduces the non-nesting fixture") {
        auto got = nn_from_config(Ctype::A, {1, 2, 3, 5, 7}, {4, 5, 6, 7, 9}, 9);
        REQUIRE(got.size() == 1);
        REQUIRE(got[0] == fixtures::nn9());
    }
}

TEST_CASE("fibers carry exactly one non-crossing and one non-nesting partition") {
    for (Ctype t : {Ctype::A, Ctype::B, Ctype::C}) {
        int n = 3;
        auto rep = verify_unique_ncnn(t, n, 6);
        INFO(rep.summary());
        REQUIRE(rep.pass());
    }
}

TEST_CASE("restriction of the swap to non-crossing inputs") {
    // on non-crossing partitions the swap also exchanges the maximal
    // cardinalities together with the pair counts
    for_each_partition(Ctype::A, 6, [&](const SetPartition& p) {
        if (!is_noncrossing(p)) return;
        SetPartition q = swap_map(p);
        REQUIRE(is_nonnesting(q));
        REQUIRE(crossing_number(q) == nesting_number(p));
        REQUIRE(max_crossing_card(q) == max_nesting_card(p));
    });
}

TEST_CASE("type D fiber structure at rank three") {
    auto rep = verify_d_fibers(3, 6);
    INFO(rep.summary());
    REQUIRE(rep.pass());
}
