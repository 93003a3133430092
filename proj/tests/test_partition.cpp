#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace cnest;

namespace {

// Independent enumeration oracle: insert the pairs (k, -k) one at a time,
// tracking only the multiset structure needed for counting.
long long count_signed_partitions(Ctype type, int n) {
    // state: (number of non-zero block pairs {B, -B}, zero block size category)
    // zero block category: 0 = absent, 1 = single pair, 2 = larger
    std::map<std::pair<int, int>, long long> state{{{0, 0}, 1}};
    for (int k = 1; k <= n; ++k) {
        std::map<std::pair<int, int>, long long> next;
        for (const auto& [key, ways] : state) {
            auto [pairs, zero] = key;
            // both singletons
            next[{pairs + 1, zero}] += ways;  // {k} and {-k} form a new block pair
            // k joins an existing block B (and -k joins -B): 2*pairs choices
            if (pairs > 0) next[{pairs, zero}] += ways * 2 * pairs;
            // k and -k both join the zero block
            if (zero > 0) next[{pairs, 2}] += ways;
            // k and -k form a new zero block
            if (zero == 0) next[{pairs, 1}] += ways;
        }
        state = next;
    }
    long long total = 0;
    for (const auto& [key, ways] : state) {
        if (type == Ctype::D && key.second == 1) continue;  // zero pair forbidden
        total += ways;
    }
    return total;
}

}  // namespace

TEST_CASE("partitions validate and canonicalize") {
    auto p = fixtures::nc9();
    REQUIRE(p.blocks() == std::vector<std::vector<int>>{{1, 7, 9}, {2, 5, 6}, {3, 4}, {8}});

    auto c = SetPartition(Ctype::C, 5, {{3, -5}, {5, -3}, {1, 2, 4, -1, -2, -4}});
    REQUIRE(c.blocks()[0] == std::vector<int>{1, 2, 4, -4, -2, -1});
    REQUIRE(c.zero_block().has_value());
    REQUIRE(c.blocks()[*c.zero_block()] == std::vector<int>{1, 2, 4, -4, -2, -1});

    SECTION("error cases name the violated rule") {
        REQUIRE_THROWS_WITH(SetPartition(Ctype::D, 2, {{1, -1}, {2}, {-2}}),
                            Catch::Matchers::ContainsSubstring("zero block is single pair"));
        REQUIRE_THROWS_WITH(SetPartition(Ctype::C, 2, {{1, 2}, {-1}, {-2}, {2}}),
                            Catch::Matchers::ContainsSubstring("overlap"));
        REQUIRE_THROWS_WITH(SetPartition(Ctype::C, 2, {{1, 2}, {-1, 2}}),
                            Catch::Matchers::ContainsSubstring("overlap"));
        REQUIRE_THROWS_WITH(SetPartition(Ctype::C, 2, {{1, -2}, {2}, {-1}}),
                            Catch::Matchers::ContainsSubstring("symmetry"));
        REQUIRE_THROWS_WITH(SetPartition(Ctype::B, 2, {{1, -1}, {2, -2}}),
                            Catch::Matchers::ContainsSubstring("zero block"));
        REQUIRE_THROWS_WITH(SetPartition(Ctype::A, 3, {{1, 2}}),
                            Catch::Matchers::ContainsSubstring("cover"));
    }
}

TEST_CASE("arcs join consecutive elements in the nesting order") {
    SECTION("type C: both diagrams carry the same arcs") {
        auto p = fixtures::c5_nonnesting();
        std::vector<Arc> expected{{1, 2}, {2, 4},  {3, -5},  {4, -4},
                                  {5, -3}, {-4, -2}, {-2, -1}};
        auto got = arcs(p, Order::nesting);
        REQUIRE(got.size() == expected.size());
        for (const Arc& a : expected)
            REQUIRE(std::find(got.begin(), got.end(), a) != got.end());
        auto cross = arcs(p, Order::crossing);
        REQUIRE(std::vector<Arc>(cross.begin(), cross.end()) ==
                std::vector<Arc>(got.begin(), got.end()));
    }

    SECTION("type B nesting diagrams splice 0 into the zero block") {
        auto p = fixtures::b5_three_nestings();
        auto nest = arcs(p, Order::nesting);
        REQUIRE(std::find(nest.begin(), nest.end(), Arc{4, 0}) != nest.end());
        REQUIRE(std::find(nest.begin(), nest.end(), Arc{0, -4}) != nest.end());
        REQUIRE(std::find(nest.begin(), nest.end(), Arc{4, -4}) == nest.end());
        auto cross = arcs(p, Order::crossing);
        REQUIRE(std::find(cross.begin(), cross.end(), Arc{4, -4}) != cross.end());
        for (const Arc& a : cross) REQUIRE(a.opener != 0);
    }

    SECTION("crossing arcs of a B partition with a zero pair") {
        auto p = fixtures::b5_three_crossings();
        auto cross = arcs(p, Order::crossing);
        for (Arc a : std::vector<Arc>{{3, -3}, {2, 4}, {4, -5}, {5, -4}, {-4, -2}})
            REQUIRE(std::find(cross.begin(), cross.end(), a) != cross.end());
    }

    SECTION("all singletons have no arcs") {
        SetPartition p(Ctype::C, 2, {{1}, {2}, {-1}, {-2}});
        REQUIRE(arcs(p, Order::nesting).empty());
        REQUIRE(arcs(p, Order::crossing).empty());
    }

    SECTION("arc sets are closed under negation") {
        for_each_partition(Ctype::B, 3, [&](const SetPartition& p) {
            for (Order kind : {Order::nesting, Order::crossing}) {
                auto as = arcs(p, kind);
                for (const Arc& a : as)
                    REQUIRE(std::find(as.begin(), as.end(), negate(a)) != as.end());
            }
        });
    }
}

TEST_CASE("openers and closers") {
    REQUIRE(openers(fixtures::nc9()) == std::vector<int>{1, 2, 3, 5, 7});
    REQUIRE(closers(fixtures::nc9()) == std::vector<int>{4, 5, 6, 7, 9});
    REQUIRE(openers(fixtures::c5_nonnesting()) == std::vector<int>{1, 2, 3, 4, 5});
    REQUIRE(closers(fixtures::c5_nonnesting()) == std::vector<int>{2, 4});
    REQUIRE(openers(fixtures::b5_three_crossings()) == std::vector<int>{1, 2, 3, 4, 5});
    REQUIRE(closers(fixtures::b5_three_crossings()) == std::vector<int>{2, 4});

    SetPartition singles(Ctype::A, 3, {{1}, {2}, {3}});
    REQUIRE(openers(singles).empty());
    REQUIRE(closers(singles).empty());

    SECTION("every partition's opener/closer pair is a configuration") {
        for (Ctype t : {Ctype::A, Ctype::B, Ctype::C, Ctype::D})
            for_each_partition(t, 3, [&](const SetPartition& p) {
                REQUIRE(is_config(openers(p), closers(p), t, 3));
            });
    }
}

TEST_CASE("opener-closer configurations") {
    REQUIRE(is_config({1, 2, 3, 5, 7}, {4, 5, 6, 7, 9}, Ctype::A, 9));
    REQUIRE_FALSE(is_config({3}, {3}, Ctype::C, 3));
    REQUIRE(is_config({1, 2, 3, 4, 5}, {2, 4}, Ctype::C, 5));
    // type A also demands equal sizes
    REQUIRE_FALSE(is_config({1, 2}, {2}, Ctype::A, 2));
    REQUIRE(is_config({1, 2}, {2}, Ctype::C, 2));
}

TEST_CASE("swap_extreme exchanges n and -n") {
    REQUIRE(swap_extreme(fixtures::d5_nc_one()) == fixtures::d5_nc_two());
    REQUIRE(swap_extreme(fixtures::d5_nn_one()) == fixtures::d5_nn_two());

    SECTION("involution on all D_3 partitions") {
        for_each_partition(Ctype::D, 3, [&](const SetPartition& p) {
            REQUIRE(swap_extreme(swap_extreme(p)) == p);
        });
    }

    SECTION("partition without the extremes in any non-singleton block is fixed") {
        SetPartition p(Ctype::D, 3, {{1, 2}, {-1, -2}, {3}, {-3}});
        REQUIRE(swap_extreme(p) == p);
    }
}

TEST_CASE("enumeration counts and determinism") {
    REQUIRE(enumerate_partitions(Ctype::A, 3).size() == 5);   // Bell number
    REQUIRE(enumerate_partitions(Ctype::A, 4).size() == 15);

    auto c1 = enumerate_partitions(Ctype::C, 1);
    REQUIRE(c1.size() == 2);
    REQUIRE(std::find(c1.begin(), c1.end(), SetPartition(Ctype::C, 1, {{1}, {-1}})) != c1.end());
    REQUIRE(std::find(c1.begin(), c1.end(), SetPartition(Ctype::C, 1, {{1, -1}})) != c1.end());

    auto d2 = enumerate_partitions(Ctype::D, 2);
    REQUIRE(d2.size() == 4);

    SECTION("stable order across runs") {
        auto one = enumerate_partitions(Ctype::B, 3);
        auto two = enumerate_partitions(Ctype::B, 3);
        REQUIRE(one == two);
    }

    SECTION("counts match an independent recursive count") {
        for (Ctype t : {Ctype::B, Ctype::C, Ctype::D})
            for (int n = 1; n <= 4; ++n) {
                if (t == Ctype::D && n == 1) continue;
                REQUIRE((long long)enumerate_partitions(t, n).size() ==
                        count_signed_partitions(t, n));
            }
    }

    SECTION("enumeration refuses ranks above the cap") {
        REQUIRE_THROWS_WITH(enumerate_partitions(Ctype::A, 7),
                            Catch::Matchers::ContainsSubstring("cap exceeded"));
        REQUIRE_NOTHROW(enumerate_partitions(Ctype::A, 7, 7));
    }

    SECTION("negating every block fixes the partition") {
        for_each_partition(Ctype::C, 3, [&](const SetPartition& p) {
            std::vector<std::vector<int>> neg;
            for (const auto& b : p.blocks()) {
                std::vector<int> nb;
                for (int e : b) nb.push_back(-e);
                neg.push_back(nb);
            }
            REQUIRE(SetPartition(Ctype::C, 3, neg) == p);
        });
    }
}
