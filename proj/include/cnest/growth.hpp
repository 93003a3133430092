#pragma once

#include "cnest/polyomino.hpp"
#include "cnest/young.hpp"

namespace cnest {

/// Shapes labelling the top-right corners along the border of the upper half
/// of a polyomino (staircase, read top to bottom, 2n-1 entries) together
/// with the labels down the right edge of the bottom square (right_edge,
/// stored in growth direction: empty shape first, full corner label last).
/// For fillings that encode set partitions the right edge is redundant; for
/// arbitrary fillings it carries the remaining information.
struct BorderLabels {
    Order kind = Order::nesting;
    int n = 0;
    std::vector<IntegerPartition> staircase;
    std::vector<IntegerPartition> right_edge;

    friend bool operator==(const BorderLabels& a, const BorderLabels& b) {
        return a.kind == b.kind && a.n == b.n && a.staircase == b.staircase &&
               a.right_edge == b.right_edge;
    }
};

namespace detail {

/// Forward local rule on 0-1 entries.  Corners: mu top-left, rho bottom-left,
/// nu bottom-right; returns the top-right label.
inline IntegerPartition grow01(const IntegerPartition& mu, const IntegerPartition& rho,
                               const IntegerPartition& nu, int e) {
    if (e == 1) {
        if (mu != rho || nu != rho)
            throw std::invalid_argument("entry 1 requires equal corner labels");
        IntegerPartition lam = mu;
        if (lam.empty())
            lam.push_back(1);
        else
            lam[0]++;
        return lam;
    }
    if (rho == mu) return nu;
    if (rho == nu) return mu;
    if (mu != nu) return componentwise_max(mu, nu);
    int i = box_row(rho, mu);
    return add_box(mu, i + 1);
}

/// Backward local rule: from mu (top-left), lam (top-right) and nu
/// (bottom-right) recover rho (bottom-left) and the entry.
inline std::pair<IntegerPartition, int> shrink01(const IntegerPartition& mu,
                                                 const IntegerPartition& lam,
                                                 const IntegerPartition& nu) {
    if (lam == mu) return {nu, 0};
    if (lam == nu) return {mu, 0};
    if (mu != nu) return {componentwise_min(mu, nu), 0};
    int i = box_row(mu, lam);
    if (i == 0) return {mu, 1};
    return {remove_box(mu, i - 1), 0};
}

}  // namespace detail

/// Border labels computed cell by cell with the forward local rules; defined
/// for fillings that encode set partitions (0-1, one entry per row and per
/// column).
inline BorderLabels forward_growth(const Filling& f) {
    if (!f.is_partition_filling())
        throw std::invalid_argument("forward growth rules need a set partition filling");
    const int n = f.n();
    const int rows = 2 * n - 1;
    std::vector<std::vector<IntegerPartition>> L(n + 1,
                                                 std::vector<IntegerPartition>(rows + 1));
    for (int c = 1; c <= n; ++c)
        for (int y = rows - 1; y >= c - 1; --y)
            L[c][y] = detail::grow01(L[c - 1][y], L[c - 1][y + 1], L[c][y + 1], f.at(c, y));

    BorderLabels b{f.kind(), n, {}, {}};
    for (int k = 1; k <= n; ++k) {
        b.staircase.push_back(L[k][k - 1]);
        if (k < n) b.staircase.push_back(L[k][k]);
    }
    for (int i = 0; i <= n; ++i) b.right_edge.push_back(L[n][rows - i]);
    return b;
}

/// The same labels computed from the definition: for every border corner,
/// the shape whose first k parts sum to the largest total size of a union of
/// k north-east chains in the rectangular region left of and below the
/// corner.  Deliberately brute force; serves as the oracle for the local
/// rules.
inline BorderLabels greene_labels(const Filling& f) {
    if (!f.is_partition_filling())
        throw std::invalid_argument("greene labels need a set partition filling");
    const int n = f.n();
    const int rows = 2 * n - 1;

    auto corner_label = [&](int x, int y) -> IntegerPartition {
        std::vector<std::pair<int, int>> ones;  // (col, row index)
        for (int c = 1; c <= std::min(x, n); ++c)
            for (int yy = std::max(y, c - 1); yy < rows; ++yy)
                if (f.at(c, yy)) ones.emplace_back(c, yy);
        const int m = (int)ones.size();
        // a_k = largest subset splitting into at most k north-east chains;
        // by Dilworth that is the largest subset whose longest strictly
        // south-east chain has length at most k.
        std::vector<int> a(m + 1, 0);
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> sel;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) sel.push_back(i);
            // longest SE chain within the subset
            int longest = 0;
            std::vector<int> dp(sel.size(), 1);
            for (std::size_t i = 0; i < sel.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    bool se = ones[sel[j]].first < ones[sel[i]].first &&
                              ones[sel[j]].second < ones[sel[i]].second;
                    bool se2 = ones[sel[i]].first < ones[sel[j]].first &&
                               ones[sel[i]].second < ones[sel[j]].second;
                    if (se || se2) dp[i] = std::max(dp[i], dp[j] + 1);
                }
                longest = std::max(longest, dp[i]);
            }
            for (int k = std::max(longest, 1); k <= m; ++k)
                a[k] = std::max(a[k], (int)sel.size());
        }
        IntegerPartition lam;
        for (int k = 1; k <= m; ++k)
            if (a[k] - a[k - 1] > 0) lam.push_back(a[k] - a[k - 1]);
        return lam;
    };

    BorderLabels b{f.kind(), n, {}, {}};
    for (int k = 1; k <= n; ++k) {
        b.staircase.push_back(corner_label(k, k - 1));
        if (k < n) b.staircase.push_back(corner_label(k, k));
    }
    for (int i = 0; i <= n; ++i) b.right_edge.push_back(corner_label(n, rows - i));
    return b;
}

namespace detail {

inline void check_vacillating(const std::vector<IntegerPartition>& sc, Order kind) {
    const int len = (int)sc.size();
    if (len % 2 == 0 || len < 1) throw std::invalid_argument("staircase length must be 2n-1");
    if (weight(sc[0]) > 1) throw std::invalid_argument("not vacillating: first label too large");
    for (int i = 0; i + 1 < len; ++i) {
        const IntegerPartition &a = sc[i], &b = sc[i + 1];
        const IntegerPartition& big = (i % 2 == 0) ? a : b;   // odd index shrinks, even grows
        const IntegerPartition& small = (i % 2 == 0) ? b : a;
        if (!contains_shape(big, small) || weight(big) - weight(small) > 1)
            throw std::invalid_argument("not vacillating: step is not a single box");
    }
    const IntegerPartition& last = sc.back();
    const IntegerPartition test = (kind == Order::nesting) ? conjugate(last) : last;
    int odd = 0;
    for (int v : test) odd += v % 2;
    if (odd > 1) throw std::invalid_argument("parity violation in the bottom label");
}

}  // namespace detail

/// Reconstruct the unique set partition filling with the given staircase
/// labels.  The upper rows are recovered by the backward local rules; the
/// square's right edge repeats the computed top edge for the nesting kind
/// and carries the evacuated top chain for the crossing kind; the square is
/// then recovered backwards as well.  Corrupt label sequences surface as
/// exceptions (edge labels not empty, symmetry broken, rules inconsistent).
inline Filling backward_growth(const std::vector<IntegerPartition>& staircase, Order kind,
                               int n) {
    detail::check_vacillating(staircase, kind);
    if ((int)staircase.size() != 2 * n - 1)
        throw std::invalid_argument("staircase length must be 2n-1");
    const int rows = 2 * n - 1;
    auto sc = [&](int i) -> const IntegerPartition& { return staircase[i - 1]; };  // 1-based

    Filling f(kind, n);
    // labels on the lattice line below the row being processed
    std::vector<IntegerPartition> cur;  // index x = 0..size-1
    cur.push_back({});                  // corner (0,0)
    cur.push_back(sc(1));               // corner (1,0)
    std::vector<IntegerPartition> below;
    for (int y = 0; y <= n - 2; ++y) {
        below.assign(y + 3, IntegerPartition{});
        below[y + 2] = sc(2 * (y + 2) - 1);
        below[y + 1] = sc(2 * (y + 1));
        for (int c = y + 1; c >= 1; --c) {
            auto [rho, e] = detail::shrink01(cur[c - 1], cur[c], below[c]);
            if (detail::grow01(cur[c - 1], rho, below[c], e) != cur[c])
                throw std::invalid_argument("labels do not come from a filling");
            below[c - 1] = rho;
            f.set(c, y, e);
        }
        if (!below[0].empty())
            throw std::invalid_argument("left edge label not empty: corrupt labels");
        cur = below;
    }

    // top edge of the square, x = 0..n
    std::vector<IntegerPartition> top = cur;
    if ((int)top.size() != n + 1) throw std::runtime_error("top edge size mismatch");
    if (top[n] != sc(2 * n - 1)) throw std::invalid_argument("corner label mismatch");

    std::vector<IntegerPartition> right =
        (kind == Order::nesting) ? top : evacuate(top);
    if (right.back() != top.back())
        throw std::invalid_argument("evacuated chain changes the final shape");

    cur = top;
    for (int y = n - 1; y <= 2 * n - 2; ++y) {
        below.assign(n + 1, IntegerPartition{});
        below[n] = right[2 * n - 2 - y];
        for (int c = n; c >= 1; --c) {
            auto [rho, e] = detail::shrink01(cur[c - 1], cur[c], below[c]);
            if (detail::grow01(cur[c - 1], rho, below[c], e) != cur[c])
                throw std::invalid_argument("labels do not come from a filling");
            below[c - 1] = rho;
            f.set(c, y, e);
        }
        if (!below[0].empty())
            throw std::invalid_argument("left edge label not empty: corrupt labels");
        cur = below;
    }
    for (const auto& lbl : cur)
        if (!lbl.empty())
            throw std::invalid_argument("bottom edge label not empty: corrupt labels");
    if (!f.is_partition_filling())
        throw std::invalid_argument("recovered filling breaks the symmetry conditions");
    (void)rows;
    return f;
}

/// Statistic-interchanging map on type C partitions: encode in the nesting
/// polyomino, compute the border labels, conjugate every staircase label and
/// rebuild through the crossing polyomino.  Openers and closers are
/// preserved; the cardinalities of the maximal crossing and the maximal
/// nesting are exchanged.  The map is a bijection but not an involution.
inline SetPartition maxswap_map(const SetPartition& p) {
    if (p.ctype() != Ctype::C) throw std::invalid_argument("maxswap_map requires type C");
    const Filling f = partition_to_filling(p, Order::nesting);
    const BorderLabels b = forward_growth(f);
    std::vector<IntegerPartition> conj;
    for (const auto& lam : b.staircase) conj.push_back(conjugate(lam));
    const Filling g = backward_growth(conj, Order::crossing, p.rank());
    return filling_to_partition(g);
}

// ---------------------------------------------------------------------------
// Growth for arbitrary fillings, via standardization: entries blow up into a
// refined 0-1 grid (one subrow per unit of a row, one subcolumn per unit of
// a column), the 0-1 rules run on the refined grid, and the coarse border is
// read off at the bundle boundaries.  The nesting kind arranges the units of
// a cell, of a row and of a column so that they chain north-east (border
// steps become horizontal strips); the crossing kind arranges them south-east
// (border steps become vertical strips).
// ---------------------------------------------------------------------------

namespace detail {

struct Refinement {
    int n = 0;
    Order kind = Order::nesting;
    std::vector<int> colw;     // 1..n, >= 1
    std::vector<int> rowh;     // row index 0..2n-2, >= 1
    std::vector<int> colbase;  // colbase[c] = total width of columns <= c
    std::vector<int> rowbase;  // rowbase[y] = total height of rows < y
    int W = 0, H = 0;
    std::vector<int> col_of;   // refined column X (1-based) -> coarse column
    std::vector<int> row_of;   // refined row zr (0-based) -> coarse row index

    void build(int n_, Order kind_, const std::vector<int>& colsum,
               const std::vector<int>& rowsum) {
        n = n_;
        kind = kind_;
        colw.assign(n + 1, 1);
        rowh.assign(2 * n - 1, 1);
        for (int c = 1; c <= n; ++c) colw[c] = std::max(1, colsum[c]);
        for (int y = 0; y < 2 * n - 1; ++y) rowh[y] = std::max(1, rowsum[y]);
        colbase.assign(n + 1, 0);
        for (int c = 1; c <= n; ++c) colbase[c] = colbase[c - 1] + colw[c];
        rowbase.assign(2 * n, 0);
        for (int y = 0; y < 2 * n - 1; ++y) rowbase[y + 1] = rowbase[y] + rowh[y];
        W = colbase[n];
        H = rowbase[2 * n - 1];
        col_of.assign(W + 1, 0);
        for (int c = 1; c <= n; ++c)
            for (int x = colbase[c - 1] + 1; x <= colbase[c]; ++x) col_of[x] = c;
        row_of.assign(H, 0);
        for (int y = 0; y < 2 * n - 1; ++y)
            for (int z = rowbase[y]; z < rowbase[y + 1]; ++z) row_of[z] = y;
    }

    int topz(int refined_col) const { return rowbase[col_of[refined_col] - 1]; }
};

/// Place one refined unit per multiplicity of every cell.  Returns the set
/// of refined (X, zr) positions.
inline std::set<std::pair<int, int>> standardize(const Filling& f, const Refinement& R) {
    const int n = f.n();
    struct Unit {
        int col, y, copy;
    };
    std::set<std::pair<int, int>> cells;
    std::map<std::pair<int, int>, std::pair<int, int>> place;  // (col,y,copy)->... per unit
    // subcolumn offsets
    std::vector<std::map<std::pair<int, int>, int>> xoff(n + 1);
    for (int c = 1; c <= n; ++c) {
        std::vector<Unit> units;
        for (int y = c - 1; y < 2 * n - 1; ++y)
            for (int k = 0; k < f.at(c, y); ++k) units.push_back({c, y, k});
        std::sort(units.begin(), units.end(), [&](const Unit& a, const Unit& b) {
            if (a.y != b.y) return R.kind == Order::nesting ? a.y > b.y : a.y < b.y;
            return a.copy < b.copy;
        });
        for (std::size_t i = 0; i < units.size(); ++i)
            xoff[c][{units[i].y, units[i].copy}] = (int)i;
    }
    // subrow offsets
    std::vector<std::map<std::pair<int, int>, int>> zoff(2 * n - 1);
    for (int y = 0; y < 2 * n - 1; ++y) {
        std::vector<Unit> units;
        for (int c = 1; c <= std::min(n, y + 1); ++c)
            for (int k = 0; k < f.at(c, y); ++k) units.push_back({c, y, k});
        std::sort(units.begin(), units.end(), [&](const Unit& a, const Unit& b) {
            if (a.col != b.col) return a.col < b.col;
            return a.copy < b.copy;
        });
        for (std::size_t i = 0; i < units.size(); ++i) {
            int off = (R.kind == Order::nesting) ? (int)(units.size() - 1 - i) : (int)i;
            zoff[y][{units[i].col, units[i].copy}] = off;
        }
    }
    for (int c = 1; c <= n; ++c)
        for (int y = c - 1; y < 2 * n - 1; ++y)
            for (int k = 0; k < f.at(c, y); ++k) {
                int X = R.colbase[c - 1] + 1 + xoff[c].at({y, k});
                int Z = R.rowbase[y] + zoff[y].at({c, k});
                cells.insert({X, Z});
            }
    return cells;
}

/// Box-by-box canonical refinement of one strip step.  `grow` steps add the
/// strip boxes left to right (nesting) or top to bottom (crossing); shrink
/// steps remove them in the opposite order.
inline std::vector<IntegerPartition> interpolate_strip(const IntegerPartition& from,
                                                       const IntegerPartition& to, int substeps,
                                                       Order kind, bool grow) {
    const IntegerPartition& small = grow ? from : to;
    const IntegerPartition& big = grow ? to : from;
    if (!(kind == Order::nesting ? is_horizontal_strip(small, big)
                                 : is_vertical_strip(small, big)))
        throw std::invalid_argument("border step is not a strip of the right kind");
    std::vector<std::pair<int, int>> boxes;  // (row, col), 0-based
    for (std::size_t i = 0; i < big.size(); ++i)
        for (int col = part(small, i); col < big[i]; ++col) boxes.emplace_back((int)i, col);
    if (kind == Order::nesting)
        std::sort(boxes.begin(), boxes.end(),
                  [](auto a, auto b) { return a.second < b.second; });
    else
        std::sort(boxes.begin(), boxes.end(), [](auto a, auto b) { return a.first < b.first; });
    if ((int)boxes.size() > substeps)
        throw std::invalid_argument("strip larger than the step width");
    std::vector<IntegerPartition> out{small};
    IntegerPartition cur = small;
    for (auto [r, cco] : boxes) {
        if ((int)cur.size() <= r) cur.resize(r + 1, 0);
        cur[r]++;
        if (!is_partition_shape(cur))
            throw std::invalid_argument("strip boxes do not stack into partitions");
        out.push_back(cur);
    }
    while ((int)out.size() < substeps + 1) out.push_back(out.back());
    if (!grow) std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Border labels of an arbitrary filling.  Consecutive staircase labels (and
/// right edge labels) differ by horizontal strips for the nesting kind and
/// vertical strips for the crossing kind; on set partition fillings the
/// result coincides with forward_growth.
inline BorderLabels semistandard_forward(const Filling& f) {
    const int n = f.n();
    std::vector<int> colsum(n + 1, 0), rowsum(2 * n - 1, 0);
    for (int c = 1; c <= n; ++c)
        for (int y = c - 1; y < 2 * n - 1; ++y) {
            colsum[c] += f.at(c, y);
            rowsum[y] += f.at(c, y);
        }
    detail::Refinement R;
    R.build(n, f.kind(), colsum, rowsum);
    const auto units = detail::standardize(f, R);

    std::vector<std::vector<IntegerPartition>> L(R.W + 1,
                                                 std::vector<IntegerPartition>(R.H + 1));
    for (int X = 1; X <= R.W; ++X)
        for (int Z = R.H - 1; Z >= R.topz(X); --Z)
            L[X][Z] = detail::grow01(L[X - 1][Z], L[X - 1][Z + 1], L[X][Z + 1],
                                     units.count({X, Z}) ? 1 : 0);

    BorderLabels b{f.kind(), n, {}, {}};
    for (int k = 1; k <= n; ++k) {
        b.staircase.push_back(L[R.colbase[k]][R.rowbase[k - 1]]);
        if (k < n) b.staircase.push_back(L[R.colbase[k]][R.rowbase[k]]);
    }
    for (int i = 0; i <= n; ++i) b.right_edge.push_back(L[R.W][R.rowbase[2 * n - 1 - i]]);
    return b;
}

/// Inverse of semistandard_forward.  Demands strip-chain borders of the
/// right kind; corrupt inputs surface as exceptions.
inline Filling semistandard_backward(const BorderLabels& b) {
    const int n = b.n;
    const Order kind = b.kind;
    if ((int)b.staircase.size() != 2 * n - 1 || (int)b.right_edge.size() != n + 1)
        throw std::invalid_argument("border label sizes must be 2n-1 and n+1");
    if (!b.right_edge.front().empty() || b.right_edge.back() != b.staircase.back())
        throw std::invalid_argument("right edge must run from the empty shape to the corner");

    auto sc = [&](int i) -> const IntegerPartition& {
        static const IntegerPartition empty{};
        return i == 0 ? empty : b.staircase[i - 1];
    };
    std::vector<int> colsum(n + 1, 0), rowsum(2 * n - 1, 0);
    for (int c = 1; c <= n; ++c) colsum[c] = weight(sc(2 * c - 1)) - weight(sc(2 * c - 2));
    for (int y = 0; y <= n - 2; ++y)
        rowsum[y] = weight(sc(2 * y + 1)) - weight(sc(2 * y + 2));
    for (int y = n - 1; y <= 2 * n - 2; ++y)
        rowsum[y] = weight(b.right_edge[2 * n - 1 - y]) - weight(b.right_edge[2 * n - 2 - y]);
    for (int c = 1; c <= n; ++c)
        if (colsum[c] < 0) throw std::invalid_argument("shrinking column step");
    for (int y = 0; y < 2 * n - 1; ++y)
        if (rowsum[y] < 0) throw std::invalid_argument("growing row step");

    detail::Refinement R;
    R.build(n, kind, colsum, rowsum);

    // refined labels along the border
    std::vector<std::vector<IntegerPartition>> hrun(n + 1), vrun(2 * n - 1);
    for (int c = 1; c <= n; ++c)
        hrun[c] = detail::interpolate_strip(sc(2 * c - 2), sc(2 * c - 1), R.colw[c], kind, true);
    for (int y = 0; y <= n - 2; ++y)
        vrun[y] =
            detail::interpolate_strip(sc(2 * y + 1), sc(2 * y + 2), R.rowh[y], kind, false);
    for (int y = n - 1; y <= 2 * n - 2; ++y)
        vrun[y] = detail::interpolate_strip(b.right_edge[2 * n - 1 - y],
                                            b.right_edge[2 * n - 2 - y], R.rowh[y], kind, false);

    Filling f(kind, n);
    std::vector<IntegerPartition> cur = hrun[1];  // lattice line at the very top
    for (int y = 0; y < 2 * n - 1; ++y) {
        const int cmax = std::min(n, y + 1);
        if (y > 0 && cmax > std::min(n, y)) {
            // a new column starts at this row: extend with its top run
            if (hrun[cmax].front() != cur.back())
                throw std::invalid_argument("border labels disagree at a corner");
            for (std::size_t i = 1; i < hrun[cmax].size(); ++i) cur.push_back(hrun[cmax][i]);
        }
        const int Xmax = R.colbase[cmax];
        if ((int)cur.size() != Xmax + 1) throw std::runtime_error("border bookkeeping error");
        for (int zr = R.rowbase[y]; zr < R.rowbase[y + 1]; ++zr) {
            std::vector<IntegerPartition> next(Xmax + 1);
            next[Xmax] = vrun[y][zr - R.rowbase[y] + 1];
            for (int X = Xmax; X >= 1; --X) {
                auto [rho, e] = detail::shrink01(cur[X - 1], cur[X], next[X]);
                if (detail::grow01(cur[X - 1], rho, next[X], e) != cur[X])
                    throw std::invalid_argument("labels do not come from a filling");
                next[X - 1] = rho;
                if (e) f.set(R.col_of[X], y, f.at(R.col_of[X], y) + 1);
            }
            if (!next[0].empty())
                throw std::invalid_argument("left edge label not empty: corrupt labels");
            cur = next;
        }
    }
    for (const auto& lbl : cur)
        if (!lbl.empty())
            throw std::invalid_argument("bottom edge label not empty: corrupt labels");
    return f;
}

}  // namespace cnest
