#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace cnest;

namespace {

bool has_pair(const std::vector<std::pair<Arc, Arc>>& pairs, Arc a, Arc b) {
    for (const auto& pr : pairs)
        if ((pr.first == a && pr.second == b) || (pr.first == b && pr.second == a)) return true;
    return false;
}

}  // namespace

TEST_CASE("crossing pairs with the type B exclusions") {
    auto p = fixtures::b5_three_crossings();
    auto pairs = crossing_pairs(p);
    REQUIRE(pairs.size() == 3);
    REQUIRE(has_pair(pairs, Arc{3, -3}, Arc{2, 4}));
    REQUIRE(has_pair(pairs, Arc{3, -3}, Arc{4, -5}));
    REQUIRE(has_pair(pairs, Arc{3, -3}, Arc{-4, -2}));
    // (5,-4) is a mirror arc, so its pair with (3,-3) is excluded
    REQUIRE_FALSE(has_pair(pairs, Arc{3, -3}, Arc{5, -4}));
    REQUIRE(is_mirror_arc(Arc{5, -4}));
    REQUIRE_FALSE(is_mirror_arc(Arc{3, -3}));

    SECTION("one crossing on a plain partition of [8]") {
        REQUIRE(crossing_pairs(fixtures::a8_one_crossing_six_nestings()).size() == 1);
    }

    SECTION("two crossings in the C_5 non-nesting partition") {
        auto q = fixtures::c5_nonnesting();
        auto qp = crossing_pairs(q);
        REQUIRE(qp.size() == 2);
        REQUIRE(has_pair(qp, Arc{2, 4}, Arc{3, -5}));
        REQUIRE(has_pair(qp, Arc{5, -3}, Arc{-4, -2}));
        REQUIRE(nesting_pairs(q).empty());
    }
}

TEST_CASE("nesting pairs with the type B exclusions") {
    auto p = fixtures::b5_three_nestings();
    auto pairs = nesting_pairs(p);
    REQUIRE(pairs.size() == 3);
    REQUIRE(has_pair(pairs, Arc{2, -5}, Arc{3, 4}));
    REQUIRE(has_pair(pairs, Arc{2, -5}, Arc{4, 0}));
    REQUIRE(has_pair(pairs, Arc{5, -2}, Arc{-4, -3}));
    // (5,-2) is a mirror arc and (0,-4) opens at 0, so the pair is excluded
    REQUIRE_FALSE(has_pair(pairs, Arc{5, -2}, Arc{0, -4}));
    REQUIRE(is_mirror_arc(Arc{0, -4}));
    REQUIRE_FALSE(is_mirror_arc(Arc{4, 0}));

    SECTION("six nestings on a plain partition of [8]") {
        REQUIRE(nesting_pairs(fixtures::a8_one_crossing_six_nestings()).size() == 6);
    }

    SECTION("four nestings in the non-crossing partition of [9]") {
        REQUIRE(nesting_pairs(fixtures::nc9()).size() == 4);
        REQUIRE(crossing_pairs(fixtures::nc9()).empty());
    }

    SECTION("all singletons") {
        SetPartition p2(Ctype::B, 2, {{1}, {2}, {-1}, {-2}});
        REQUIRE(nesting_pairs(p2).empty());
        REQUIRE(crossing_pairs(p2).empty());
    }
}

TEST_CASE("per-arc crossing counts") {
    REQUIRE(arc_crossing_count(fixtures::c5_noncrossing(), Arc{1, 2}) == 0);
    REQUIRE(arc_crossing_count(fixtures::nn9(), Arc{2, 5}) == 2);
    REQUIRE_THROWS_WITH(arc_crossing_count(fixtures::nn9(), Arc{1, 5}),
                        Catch::Matchers::ContainsSubstring("arc not in partition"));
    REQUIRE_THROWS(arc_crossing_count(fixtures::c5_nonnesting(), Arc{3, -5}));
}

TEST_CASE("maximal crossing and nesting cardinalities") {
    REQUIRE(max_crossing_card(fixtures::nn9()) == 3);
    REQUIRE(max_nesting_card(fixtures::nc9()) == 3);

    SetPartition c4(Ctype::C, 4, {{1, 4}, {-1, -4}, {2, -3}, {3, -2}});
    REQUIRE(crossing_number(c4) == 4);
    REQUIRE(max_crossing_card(c4) == 2);

    SetPartition singles(Ctype::C, 2, {{1}, {2}, {-1}, {-2}});
    REQUIRE(max_crossing_card(singles) == 0);
    REQUIRE(max_nesting_card(singles) == 0);

    SetPartition onearc(Ctype::A, 2, {{1, 2}});
    REQUIRE(max_crossing_card(onearc) == 1);
    REQUIRE(max_nesting_card(onearc) == 1);
}

TEST_CASE("non-crossing and non-nesting predicates") {
    REQUIRE(is_noncrossing(fixtures::nc9()));
    REQUIRE_FALSE(is_nonnesting(fixtures::nc9()));
    REQUIRE(is_nonnesting(fixtures::nn9()));
    REQUIRE(is_nonnesting(fixtures::c5_nonnesting()));
    REQUIRE(is_noncrossing(fixtures::c5_noncrossing()));

    SECTION("type D special conditions") {
        REQUIRE(is_noncrossing(fixtures::d5_nc_one()));
        REQUIRE(is_noncrossing(fixtures::d5_nc_two()));
        REQUIRE(is_nonnesting(fixtures::d5_nn_one()));
        REQUIRE(is_nonnesting(fixtures::d5_nn_two()));
        // a zero block without the extreme element fails both predicates
        SetPartition bad(Ctype::D, 5,
                         {{1, 2, -1, -2}, {3}, {-3}, {4}, {-4}, {5}, {-5}});
        REQUIRE_FALSE(is_noncrossing(bad));
        REQUIRE_FALSE(is_nonnesting(bad));
    }
}

TEST_CASE("pair statistic properties at small rank") {
    SECTION("type C: central arcs cross exactly when they nest") {
        for_each_partition(Ctype::C, 3, [&](const SetPartition& p) {
            auto cp = crossing_pairs(p);
            auto np = nesting_pairs(p);
            auto central = [](const Arc& a) { return a.opener > 0 && a.closer < 0; };
            auto count_central = [&](const std::vector<std::pair<Arc, Arc>>& pairs) {
                std::size_t c = 0;
                for (const auto& pr : pairs)
                    if (central(pr.first) && central(pr.second)) ++c;
                return c;
            };
            REQUIRE(count_central(cp) == count_central(np));
        });
    }

    SECTION("negating a pair yields a pair") {
        for_each_partition(Ctype::B, 3, [&](const SetPartition& p) {
            for (bool crossing : {true, false}) {
                auto pairs = crossing ? crossing_pairs(p) : nesting_pairs(p);
                for (const auto& pr : pairs)
                    REQUIRE(has_pair(pairs, negate(pr.first), negate(pr.second)));
            }
        });
    }

    SECTION("crossing/nesting pair sets are disjoint for A and C") {
        for (Ctype t : {Ctype::A, Ctype::C})
            for_each_partition(t, t == Ctype::A ? 5 : 3, [&](const SetPartition& p) {
                auto cp = crossing_pairs(p);
                for (const auto& pr : nesting_pairs(p))
                    REQUIRE_FALSE(has_pair(cp, pr.first, pr.second));
            });
    }

    SECTION("a maximum mutually-crossing set never needs both sign patterns") {
        for_each_partition(Ctype::C, 4, [&](const SetPartition& p) {
            auto as = arcs(p, Order::crossing);
            auto pairs = crossing_pairs(p);
            int best = max_crossing_card(p);
            // exact search restricted to arc sets avoiding one sign pattern
            auto clique_without = [&](auto excluded) {
                std::vector<Arc> keep;
                for (const Arc& a : as)
                    if (!excluded(a)) keep.push_back(a);
                int top = keep.empty() ? 0 : 1;
                const int m = (int)keep.size();
                for (int mask = 0; mask < (1 << m); ++mask) {
                    std::vector<int> sel;
                    for (int i = 0; i < m; ++i)
                        if (mask & (1 << i)) sel.push_back(i);
                    bool ok = true;
                    for (std::size_t i = 0; i < sel.size() && ok; ++i)
                        for (std::size_t j = i + 1; j < sel.size() && ok; ++j)
                            ok = has_pair(pairs, keep[sel[i]], keep[sel[j]]);
                    if (ok) top = std::max(top, (int)sel.size());
                }
                return top;
            };
            if (as.empty()) return;
            int no_pp = clique_without([](const Arc& a) { return a.opener > 0 && a.closer > 0; });
            int no_nn = clique_without([](const Arc& a) { return a.opener < 0 && a.closer < 0; });
            REQUIRE(std::max(no_pp, no_nn) == best);
        });
    }

    SECTION("type D predicates are invariant under swapping the extremes") {
        for_each_partition(Ctype::D, 4, [&](const SetPartition& p) {
            SetPartition q = swap_extreme(p);
            REQUIRE(is_noncrossing(p) == is_noncrossing(q));
            REQUIRE(is_nonnesting(p) == is_nonnesting(q));
        });
    }
}

TEST_CASE("statistics records") {
    auto row = stats_csv_row(fixtures::nc9(), 7);
    REQUIRE(row == "A,9,7,0,4,1,3,1 2 3 5 7,4 5 6 7 9");
}
