#pragma once

#include <sstream>

#include "cnest/partition.hpp"

namespace cnest {

/// Staircase polyomino attached to rank n: columns 1..n of heights
/// 2n-1, 2n-2, ..., n.  Rows are labelled top to bottom by the ground set
/// elements after 1 in the respective order:
///   nesting kind:   2, ..., n, -n, ..., -1
///   crossing kind:  2, ..., n, -1, ..., -n
/// The cell in column i and row j stands for the arc (i, j); it exists
/// exactly when i precedes j in the kind's order.  The bottom n x n square
/// carries the diagram symmetry: the anti-diagonal for the nesting kind and
/// the main diagonal for the crossing kind, with cells (i, -i) on it.
struct Polyomino {
    Order kind = Order::nesting;
    int n = 0;

    int rows() const { return 2 * n - 1; }

    /// Ground set element labelling row index y (0-based from the top).
    int row_label(int y) const {
        if (y < n - 1) return y + 2;
        return kind == Order::nesting ? -(2 * n - 1 - y) : -(y - n + 2);
    }

    /// Row index of element j, or -1 when j labels no row.
    int row_index(int j) const {
        for (int y = 0; y < rows(); ++y)
            if (row_label(y) == j) return y;
        return -1;
    }

    bool exists(int col, int y) const {
        return col >= 1 && col <= n && y >= col - 1 && y < rows();
    }

    /// Mirror cell across the square's symmetry diagonal; identity outside
    /// the square.  The cell of arc (i, j) maps to the cell of (-j, -i).
    std::pair<int, int> mirror(int col, int y) const {
        int j = row_label(y);
        if (j > 0) return {col, y};
        return {-j, row_index(-col)};
    }

    bool on_diagonal(int col, int y) const { return row_label(y) == -col; }

    /// Cell weakly above the square diagonal (the fan region of the nesting
    /// kind): everything outside the square plus square cells (i, j) with
    /// |j| >= i.
    bool in_fan_region(int col, int y) const {
        int j = row_label(y);
        return j > 0 || -j >= col;
    }

    friend bool operator==(const Polyomino& a, const Polyomino& b) {
        return a.kind == b.kind && a.n == b.n;
    }
};

/// Non-negative integer filling of a staircase polyomino.
class Filling {
  public:
    Filling(Order kind, int n) : poly_{kind, n}, v_((std::size_t)n * (2 * n - 1), 0) {}

    const Polyomino& poly() const { return poly_; }
    Order kind() const { return poly_.kind; }
    int n() const { return poly_.n; }

    int at(int col, int y) const { return poly_.exists(col, y) ? v_[idx(col, y)] : 0; }
    void set(int col, int y, int value) {
        if (!poly_.exists(col, y)) throw std::invalid_argument("cell outside polyomino");
        if (value < 0) throw std::invalid_argument("entries must be non-negative");
        v_[idx(col, y)] = value;
    }

    int at_arc(int opener, int closer) const {
        int y = poly_.row_index(closer);
        return y < 0 ? 0 : at(opener, y);
    }

    int total() const {
        int s = 0;
        for (int c = 1; c <= poly_.n; ++c)
            for (int y = c - 1; y < poly_.rows(); ++y) s += at(c, y);
        return s;
    }

    int nonzero_count() const {
        int s = 0;
        for (int c = 1; c <= poly_.n; ++c)
            for (int y = c - 1; y < poly_.rows(); ++y) s += at(c, y) > 0 ? 1 : 0;
        return s;
    }

    /// Conditions for encoding a set partition: a 0-1 filling with at most
    /// one entry per row and per column, square part symmetric under the
    /// kind's diagonal, at most one entry on the diagonal.
    bool is_partition_filling() const {
        const int n = poly_.n;
        std::vector<int> colsum(n + 1, 0), rowsum(poly_.rows(), 0);
        int diag = 0;
        for (int c = 1; c <= n; ++c) {
            for (int y = c - 1; y < poly_.rows(); ++y) {
                int e = at(c, y);
                if (e > 1) return false;
                colsum[c] += e;
                rowsum[y] += e;
                if (e && poly_.on_diagonal(c, y)) ++diag;
                if (e && poly_.row_label(y) < 0) {
                    auto [mc, my] = poly_.mirror(c, y);
                    if (at(mc, my) != e) return false;
                }
            }
        }
        if (diag > 1) return false;
        for (int c = 1; c <= n; ++c)
            if (colsum[c] > 1) return false;
        for (int y = 0; y < poly_.rows(); ++y)
            if (rowsum[y] > 1) return false;
        return true;
    }

    friend bool operator==(const Filling& a, const Filling& b) {
        return a.poly_ == b.poly_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Filling& a, const Filling& b) { return !(a == b); }
    friend bool operator<(const Filling& a, const Filling& b) {
        if (!(a.poly_ == b.poly_)) return a.poly_.n < b.poly_.n;
        return a.v_ < b.v_;
    }

    /// Text format: "kind n" header, then one "col,row,entry" line per
    /// non-zero cell, rows given by their ground set label.
    std::string to_text() const {
        std::ostringstream os;
        os << (poly_.kind == Order::nesting ? "nesting" : "crossing") << ' ' << poly_.n << '\n';
        for (int c = 1; c <= poly_.n; ++c)
            for (int y = c - 1; y < poly_.rows(); ++y)
                if (at(c, y)) os << c << ',' << poly_.row_label(y) << ',' << at(c, y) << '\n';
        return os.str();
    }

    static Filling from_text(const std::string& text) {
        std::istringstream is(text);
        std::string kind;
        int n = 0;
        if (!(is >> kind >> n)) throw std::invalid_argument("filling header must be 'kind n'");
        Order k;
        if (kind == "nesting")
            k = Order::nesting;
        else if (kind == "crossing")
            k = Order::crossing;
        else
            throw std::invalid_argument("unknown polyomino kind: " + kind);
        Filling f(k, n);
        std::string line;
        std::getline(is, line);
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            int col, row, e;
            char c1, c2;
            std::istringstream ls(line);
            if (!(ls >> col >> c1 >> row >> c2 >> e) || c1 != ',' || c2 != ',')
                throw std::invalid_argument("bad cell line: " + line);
            int y = f.poly().row_index(row);
            if (y < 0) throw std::invalid_argument("no such row: " + std::to_string(row));
            f.set(col, y, e);
        }
        return f;
    }

  private:
    std::size_t idx(int col, int y) const {
        return (std::size_t)(col - 1) * poly_.rows() + y;
    }

    Polyomino poly_;
    std::vector<int> v_;
};

/// Encode a type C partition: a one in the cell of every arc with positive
/// opener.
inline Filling partition_to_filling(const SetPartition& p, Order kind) {
    if (p.ctype() != Ctype::C)
        throw std::invalid_argument("polyomino encodings are defined for type C");
    Filling f(kind, p.rank());
    for (const Arc& a : arcs(p, kind)) {
        if (a.opener <= 0) continue;
        int y = f.poly().row_index(a.closer);
        if (y < 0) throw std::runtime_error("arc outside polyomino");
        f.set(a.opener, y, 1);
    }
    return f;
}

inline SetPartition filling_to_partition(const Filling& f) {
    if (!f.is_partition_filling())
        throw std::invalid_argument("filling violates the set partition conditions");
    std::vector<Arc> as;
    for (int c = 1; c <= f.n(); ++c) {
        for (int y = c - 1; y < f.poly().rows(); ++y) {
            if (!f.at(c, y)) continue;
            as.push_back(Arc{c, f.poly().row_label(y)});
            as.push_back(negate(as.back()));
        }
    }
    return detail::assemble(Ctype::C, f.n(), as);
}

}  // namespace cnest
