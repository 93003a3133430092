#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

/// Signed set partitions of the classical reflection groups and the two arc
/// diagrams attached to them.
///
/// Ground set conventions: type A lives on {1..n}; types B, C and D live on
/// {±1..±n}.  Two linear orders on the ground set matter throughout:
///
///   nesting order:   1 < 2 < ... < n < -n < ... < -2 < -1
///   crossing order:  1 < 2 < ... < n < -1 < -2 < ... < -n
///
/// Type B nesting diagrams additionally insert the synthetic element 0
/// between n and -n.  0 is never stored in a block; it only appears as a
/// diagram position.
namespace cnest {

enum class Ctype { A, B, C, D };

enum class Order { nesting, crossing };

inline const char* to_string(Ctype t) {
    switch (t) {
        case Ctype::A: return "A";
        case Ctype::B: return "B";
        case Ctype::C: return "C";
        case Ctype::D: return "D";
    }
    return "?";
}

inline Ctype ctype_from_string(const std::string& s) {
    if (s == "A") return Ctype::A;
    if (s == "B") return Ctype::B;
    if (s == "C") return Ctype::C;
    if (s == "D") return Ctype::D;
    throw std::invalid_argument("unknown partition type: " + s);
}

inline bool is_signed_type(Ctype t) { return t != Ctype::A; }

/// Position of element `e` in the nesting order, 0-based.
/// For signed types the element 0 is accepted and sits between n and -n
/// (positions: k-1 for k, n for 0, 2n-k+1 for -k when 0 is admitted).
/// Without 0 the negative block shifts down by one; `with_zero` selects
/// which scale is meant.  Type A admits positives only.
inline int nesting_pos(Ctype t, int n, int e, bool with_zero = false) {
    if (t == Ctype::A) {
        if (e < 1 || e > n) throw std::invalid_argument("element outside ground set [n]");
        return e - 1;
    }
    if (e == 0) {
        if (!with_zero) throw std::invalid_argument("element 0 is only a diagram position");
        return n;
    }
    if (e < -n || e > n) throw std::invalid_argument("element outside ground set [-n, n]");
    if (e > 0) return e - 1;
    return (with_zero ? 2 * n + 1 + e : 2 * n + e);  // e negative
}

/// Position of element `e` in the crossing order, 0-based.  0 never occurs
/// in crossing diagrams.
inline int crossing_pos(Ctype t, int n, int e) {
    if (t == Ctype::A) {
        if (e < 1 || e > n) throw std::invalid_argument("element outside ground set [n]");
        return e - 1;
    }
    if (e == 0 || e < -n || e > n) throw std::invalid_argument("element outside ground set [-n, n]");
    return e > 0 ? e - 1 : n - e - 1;
}

/// One arc of a diagram: opener precedes closer in the order given by `tag`.
/// Arcs always join consecutive elements of a block in the *nesting* order;
/// the tag only records in which diagram the arc is currently placed.
struct Arc {
    int opener = 0;
    int closer = 0;
    Order tag = Order::nesting;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.opener == b.opener && a.closer == b.closer;
    }
    friend bool operator<(const Arc& a, const Arc& b) {
        return a.opener != b.opener ? a.opener < b.opener : a.closer < b.closer;
    }
};

inline Arc negate(const Arc& a) { return Arc{-a.closer, -a.opener, a.tag}; }

inline std::string to_string(const Arc& a) {
    return "(" + std::to_string(a.opener) + "," + std::to_string(a.closer) + ")";
}

}  // namespace cnest
