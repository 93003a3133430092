#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace cnest;

namespace {

std::vector<IntegerPartition> shapes(const std::string& semicolons) {
    std::vector<IntegerPartition> out;
    std::size_t pos = 0;
    while (pos <= semicolons.size()) {
        std::size_t next = semicolons.find(';', pos);
        if (next == std::string::npos) next = semicolons.size();
        std::string tok = semicolons.substr(pos, next - pos);
        out.push_back(tok.empty() || tok == "-" ? IntegerPartition{} : shape_from_string(tok));
        pos = next + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("polyomino geometry") {
    Polyomino nest{Order::nesting, 5};
    REQUIRE(nest.rows() == 9);
    REQUIRE(nest.row_label(0) == 2);
    REQUIRE(nest.row_label(3) == 5);
    REQUIRE(nest.row_label(4) == -5);
    REQUIRE(nest.row_label(8) == -1);
    REQUIRE(nest.exists(1, 0));
    REQUIRE_FALSE(nest.exists(2, 0));
    REQUIRE(nest.on_diagonal(3, nest.row_index(-3)));
    REQUIRE(nest.mirror(1, nest.row_index(-3)) == std::make_pair(3, nest.row_index(-1)));

    Polyomino cross{Order::crossing, 5};
    REQUIRE(cross.row_label(4) == -1);
    REQUIRE(cross.row_label(8) == -5);
    REQUIRE(cross.mirror(4, cross.row_index(-2)) == std::make_pair(2, cross.row_index(-4)));
}

TEST_CASE("partition to filling and back") {
    SECTION("nesting encoding of the hook-chain fixture") {
        Filling f = partition_to_filling(fixtures::c5_growth_source(), Order::nesting);
        REQUIRE(f.is_partition_filling());
        REQUIRE(f.at_arc(1, -3) == 1);
        REQUIRE(f.at_arc(2, 4) == 1);
        REQUIRE(f.at_arc(4, 5) == 1);
        REQUIRE(f.at_arc(3, -1) == 1);
        REQUIRE(f.total() == 4);
        REQUIRE(filling_to_partition(f) == fixtures::c5_growth_source());
    }
    SECTION("crossing encoding of its growth image") {
        Filling f = partition_to_filling(fixtures::c5_growth_image(), Order::crossing);
        REQUIRE(f.at_arc(1, 4) == 1);
        REQUIRE(f.at_arc(3, 5) == 1);
        REQUIRE(f.at_arc(4, -2) == 1);
        REQUIRE(f.at_arc(2, -4) == 1);
        REQUIRE(f.total() == 4);
        REQUIRE(filling_to_partition(f) == fixtures::c5_growth_image());
    }
    SECTION("all singletons give the zero filling") {
        SetPartition p(Ctype::C, 3, {{1}, {2}, {3}, {-1}, {-2}, {-3}});
        Filling f = partition_to_filling(p, Order::nesting);
        REQUIRE(f.total() == 0);
        REQUIRE(filling_to_partition(f) == p);
    }
    SECTION("violating fillings are rejected") {
        Filling f(Order::nesting, 2);
        f.set(1, f.poly().row_index(-2), 1);  // mirror cell missing
        REQUIRE_THROWS(filling_to_partition(f));
    }
}

TEST_CASE("border labels of the two rank-five fixtures") {
    const auto expected_a = shapes("1;1;2;2;2,1;1,1;2,1;1,1;1,1");
    const auto expected_b = shapes("1;1;1,1;1,1;2,1;2;2,1;2;2");

    Filling fa = partition_to_filling(fixtures::c5_growth_source(), Order::nesting);
    Filling fb = partition_to_filling(fixtures::c5_growth_image(), Order::crossing);

    REQUIRE(greene_labels(fa).staircase == expected_a);
    REQUIRE(greene_labels(fb).staircase == expected_b);
    REQUIRE(forward_growth(fa).staircase == expected_a);
    REQUIRE(forward_growth(fb).staircase == expected_b);

    SECTION("the two label lists are conjugate entrywise") {
        for (std::size_t i = 0; i < expected_a.size(); ++i)
            REQUIRE(conjugate(expected_a[i]) == expected_b[i]);
    }

    SECTION("the all-zero filling has empty labels") {
        Filling z(Order::nesting, 3);
        for (const auto& lam : forward_growth(z).staircase) REQUIRE(lam.empty());
        for (const auto& lam : greene_labels(z).staircase) REQUIRE(lam.empty());
    }
}

TEST_CASE("backward growth inverts forward growth") {
    SECTION("on the rank-five fixtures") {
        for (auto [p, kind] :
             {std::make_pair(fixtures::c5_growth_source(), Order::nesting),
              std::make_pair(fixtures::c5_growth_image(), Order::crossing)}) {
            Filling f = partition_to_filling(p, kind);
            BorderLabels b = forward_growth(f);
            REQUIRE(backward_growth(b.staircase, kind, 5) == f);
        }
    }
    SECTION("empty labels yield the zero filling") {
        std::vector<IntegerPartition> empty(5);
        REQUIRE(backward_growth(empty, Order::nesting, 3).total() == 0);
    }
    SECTION("exhaustive on all C_3 partitions, both kinds") {
        for_each_partition(Ctype::C, 3, [&](const SetPartition& p) {
            for (Order kind : {Order::nesting, Order::crossing}) {
                Filling f = partition_to_filling(p, kind);
                REQUIRE(backward_growth(forward_growth(f).staircase, kind, 3) == f);
            }
        });
    }
    SECTION("corrupt labels are rejected") {
        REQUIRE_THROWS(backward_growth(shapes("1;1;3"), Order::nesting, 2));
        REQUIRE_THROWS(backward_growth(shapes("2;1;1"), Order::nesting, 2));
    }
}

TEST_CASE("growth oracle agreement at rank two") {
    for_each_partition(Ctype::C, 2, [&](const SetPartition& p) {
        for (Order kind : {Order::nesting, Order::crossing}) {
            Filling f = partition_to_filling(p, kind);
            REQUIRE(forward_growth(f) == greene_labels(f));
        }
    });
}

TEST_CASE("maxswap_map") {
    SECTION("the rank-five fixture pair") {
        REQUIRE(maxswap_map(fixtures::c5_growth_source()) == fixtures::c5_growth_image());
    }
    SECTION("the crossing-heavy C_4 example maps to its nesting partner") {
        SetPartition p(Ctype::C, 4, {{1, 4}, {-1, -4}, {2, -3}, {3, -2}});
        SetPartition q(Ctype::C, 4, {{1, -3}, {3, -1}, {2, 4}, {-2, -4}});
        REQUIRE(maxswap_map(p) == q);
    }
    SECTION("all singletons are fixed") {
        SetPartition p(Ctype::C, 2, {{1}, {2}, {-1}, {-2}});
        REQUIRE(maxswap_map(p) == p);
    }
    SECTION("cardinalities swap exhaustively at rank three") {
        for_each_partition(Ctype::C, 3, [&](const SetPartition& p) {
            SetPartition q = maxswap_map(p);
            REQUIRE(openers(q) == openers(p));
            REQUIRE(closers(q) == closers(p));
            REQUIRE(max_crossing_card(q) == max_nesting_card(p));
            REQUIRE(max_nesting_card(q) == max_crossing_card(p));
        });
    }
}

TEST_CASE("semistandard growth") {
    SECTION("restriction to partition fillings agrees with the plain rules") {
        for_each_partition(Ctype::C, 3, [&](const SetPartition& p) {
            for (Order kind : {Order::nesting, Order::crossing}) {
                Filling f = partition_to_filling(p, kind);
                REQUIRE(semistandard_forward(f) == forward_growth(f));
            }
        });
    }

    SECTION("a single cell with entry two spans a horizontal strip") {
        Filling f(Order::nesting, 1);
        f.set(1, 0, 2);
        auto b = semistandard_forward(f);
        REQUIRE(b.staircase == std::vector<IntegerPartition>{{2}});
        REQUIRE(semistandard_backward(b) == f);

        Filling g(Order::crossing, 1);
        g.set(1, 0, 2);
        auto bg = semistandard_forward(g);
        REQUIRE(bg.staircase == std::vector<IntegerPartition>{{1, 1}});
        REQUIRE(semistandard_backward(bg) == g);
    }

    SECTION("strip conditions hold along the border") {
        std::mt19937 rng(7);
        for (int s = 0; s < 50; ++s) {
            Order kind = (s % 2) ? Order::crossing : Order::nesting;
            Filling f = detail::random_arbitrary_filling(kind, 3, 3, rng);
            BorderLabels b = semistandard_forward(f);
            auto strip_ok = [&](const IntegerPartition& small, const IntegerPartition& big) {
                return kind == Order::nesting ? is_horizontal_strip(small, big)
                                              : is_vertical_strip(small, big);
            };
            REQUIRE(strip_ok({}, b.staircase[0]));
            for (std::size_t i = 0; i + 1 < b.staircase.size(); ++i) {
                const auto &a = b.staircase[i], &c = b.staircase[i + 1];
                REQUIRE((i % 2 == 0 ? strip_ok(c, a) : strip_ok(a, c)));
            }
            for (std::size_t i = 0; i + 1 < b.right_edge.size(); ++i)
                REQUIRE(strip_ok(b.right_edge[i], b.right_edge[i + 1]));
        }
    }

    SECTION("round trip on random fillings") {
        std::mt19937 rng(99);
        for (int s = 0; s < 200; ++s) {
            Order kind = (s % 2) ? Order::crossing : Order::nesting;
            int n = 1 + (s % 4);
            Filling f = detail::random_arbitrary_filling(kind, n, 4, rng);
            BorderLabels b = semistandard_forward(f);
            REQUIRE(semistandard_backward(b) == f);
        }
    }
}
