#pragma once

#include "cnest/cnest.hpp"

// Shared fixture partitions used across the suites, named by their shape.
namespace fixtures {

using cnest::Ctype;
using cnest::SetPartition;

// non-crossing partition of [9] with openers {1,2,3,5,7}, closers {4,5,6,7,9}
inline SetPartition nc9() {
    return SetPartition(Ctype::A, 9, {{1, 7, 9}, {2, 5, 6}, {3, 4}, {8}});
}

// the non-nesting partition in the same opener/closer fiber
inline SetPartition nn9() {
    return SetPartition(Ctype::A, 9, {{1, 4}, {2, 5, 7, 9}, {3, 6}});
}

// C_5 non-nesting partition with openers {1..5}, closers {2,4}
inline SetPartition c5_nonnesting() {
    return SetPartition(Ctype::C, 5, {{1, 2, 4, -1, -2, -4}, {3, -5}, {5, -3}});
}

// its non-crossing partner in the same fiber
inline SetPartition c5_noncrossing() {
    return SetPartition(Ctype::C, 5, {{1, 2, -5}, {5, -2, -1}, {3, 4, -3, -4}});
}

// B_5 partition with three nestings (zero block {3,4,-3,-4})
inline SetPartition b5_three_nestings() {
    return SetPartition(Ctype::B, 5, {{1, 2, -5}, {-1, -2, 5}, {3, 4, -3, -4}});
}

// B_5 partition with three crossings (zero block {3,-3})
inline SetPartition b5_three_crossings() {
    return SetPartition(Ctype::B, 5, {{1, 2, 4, -5}, {-1, -2, -4, 5}, {3, -3}});
}

// the two non-crossing D_5 partitions in the fiber op {1,2,3,4,5}, cl {5}
inline SetPartition d5_nc_one() {
    return SetPartition(Ctype::D, 5, {{1, -4}, {4, -1}, {2, 5, -3}, {3, -2, -5}});
}
inline SetPartition d5_nc_two() {
    return SetPartition(Ctype::D, 5, {{1, -4}, {4, -1}, {2, -5, -3}, {3, 5, -2}});
}

// the two non-nesting D_5 partitions in the fiber op {1,2,3,4,5}, cl {5}
inline SetPartition d5_nn_one() {
    return SetPartition(Ctype::D, 5, {{1, -5, -2}, {2, 5, -1}, {3, -4}, {4, -3}});
}
inline SetPartition d5_nn_two() {
    return SetPartition(Ctype::D, 5, {{1, 5, -2}, {2, -5, -1}, {3, -4}, {4, -3}});
}

// one crossing, six nestings
inline SetPartition a8_one_crossing_six_nestings() {
    return SetPartition(Ctype::A, 8, {{1, 7}, {2, 8}, {3, 4, 5, 6}});
}

// the four partitions of [8] with six crossings and one nesting
inline std::vector<SetPartition> a8_six_crossings_one_nesting() {
    return {SetPartition(Ctype::A, 8, {{1, 4, 6}, {2, 5, 8}, {3, 7}}),
            SetPartition(Ctype::A, 8, {{1, 4, 7}, {3, 5, 8}, {2, 6}}),
            SetPartition(Ctype::A, 8, {{1, 4, 8}, {2, 5, 7}, {3, 6}}),
            SetPartition(Ctype::A, 8, {{1, 5, 8}, {2, 4, 7}, {3, 6}})};
}

// C_5 pair exchanged by the growth-diagram map
inline SetPartition c5_growth_source() {
    return SetPartition(Ctype::C, 5, {{1, -3}, {3, -1}, {2, 4, 5}, {-2, -4, -5}});
}
inline SetPartition c5_growth_image() {
    return SetPartition(Ctype::C, 5, {{1, 4, -2}, {2, -4, -1}, {3, 5}, {-3, -5}});
}

}  // namespace fixtures
