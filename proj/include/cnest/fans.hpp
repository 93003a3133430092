#pragma once

#include <atomic>
#include <thread>

#include "cnest/growth.hpp"
#include "cnest/statistics.hpp"

namespace cnest {

// ---------------------------------------------------------------------------
// Chain statistics on fillings.
//
// North-east chains live in nesting polyominoes: successive cells strictly
// to the right and strictly above.  South-east chains live in crossing
// polyominoes: strictly right and strictly below, with the additional
// demand that the bounding rectangle of the chain lies inside the polyomino
// (equivalently, the chain fits under one of the staircase corners).
// ---------------------------------------------------------------------------

namespace detail {

struct CellGrid {
    std::vector<std::pair<int, int>> cells;  // (col, y), sorted by (col, y)
    std::vector<int> id;                     // col * rows + y -> index or -1

    void build(const Polyomino& poly, bool fan_region_only) {
        cells.clear();
        id.assign((std::size_t)(poly.n + 1) * poly.rows(), -1);
        for (int c = 1; c <= poly.n; ++c)
            for (int y = c - 1; y < poly.rows(); ++y) {
                if (fan_region_only && !poly.in_fan_region(c, y)) continue;
                id[(std::size_t)c * poly.rows() + y] = (int)cells.size();
                cells.emplace_back(c, y);
            }
    }
    int index(const Polyomino& poly, int c, int y) const {
        return id[(std::size_t)c * poly.rows() + y];
    }
};

/// Longest chain of a weighted filling, weak or strict, by dynamic
/// programming over the cells of one rectangular region.
template <typename InRegion>
int longest_chain_weighted(const std::vector<std::pair<int, int>>& cells,
                           const std::vector<int>& w, bool northeast, bool strict,
                           InRegion in_region) {
    int best = 0;
    std::vector<int> f(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!w[i] || !in_region(cells[i])) continue;
        f[i] = w[i];
        for (std::size_t j = 0; j < i; ++j) {
            if (!w[j] || !in_region(cells[j]) || !f[j]) continue;
            auto [cj, yj] = cells[j];
            auto [ci, yi] = cells[i];
            bool ok;
            if (northeast)
                ok = strict ? (cj < ci && yj > yi) : (cj <= ci && yj >= yi);
            else
                ok = strict ? (cj < ci && yj < yi) : (cj <= ci && yj <= yi);
            if (ok) f[i] = std::max(f[i], f[j] + w[i]);
        }
        best = std::max(best, f[i]);
    }
    return best;
}

}  // namespace detail

enum class ChainWeight { support, weighted };

/// Length of a longest north-east chain (nesting polyominoes).  With
/// ChainWeight::weighted, entries count with multiplicity and ties in a row
/// or column may join the chain; with ChainWeight::support, cells count once
/// and the chain is strictly increasing.
inline int longest_ne_chain(const Filling& f, ChainWeight mode = ChainWeight::support) {
    detail::CellGrid g;
    g.build(f.poly(), false);
    std::vector<int> w;
    for (auto [c, y] : g.cells)
        w.push_back(mode == ChainWeight::support ? (f.at(c, y) > 0 ? 1 : 0) : f.at(c, y));
    // the topmost-right cell of a north-east chain witnesses the bounding
    // rectangle, so no extra containment test is needed
    return detail::longest_chain_weighted(g.cells, w, true, mode == ChainWeight::support,
                                          [](std::pair<int, int>) { return true; });
}

/// Length of a longest south-east chain whose bounding rectangle lies inside
/// the polyomino (crossing polyominoes).
inline int longest_se_chain(const Filling& f, ChainWeight mode = ChainWeight::support) {
    detail::CellGrid g;
    g.build(f.poly(), false);
    std::vector<int> w;
    for (auto [c, y] : g.cells)
        w.push_back(mode == ChainWeight::support ? (f.at(c, y) > 0 ? 1 : 0) : f.at(c, y));
    int best = 0;
    for (int t = 1; t <= f.n(); ++t) {
        best = std::max(best, detail::longest_chain_weighted(
                                  g.cells, w, false, mode == ChainWeight::support,
                                  [&](std::pair<int, int> cell) {
                                      return cell.first <= t && cell.second >= t - 1;
                                  }));
    }
    return best;
}

inline int chain_statistic(const Filling& f, ChainWeight mode = ChainWeight::support) {
    return f.kind() == Order::nesting ? longest_ne_chain(f, mode) : longest_se_chain(f, mode);
}

// ---------------------------------------------------------------------------
// Symmetric diagonal sets of the 2n-gon.
// ---------------------------------------------------------------------------

/// Set of diagonals {i,j} of the 2n-gon with vertices labelled clockwise
/// 1, ..., n, -1, ..., -n, closed under 180-degree rotation ({i,j} present
/// iff {-i,-j} present).  Two diagonals cross exactly when their endpoints
/// interleave strictly in the crossing order; a diagonal and its negative
/// are distinct objects and need not cross together.
class DiagonalSet {
  public:
    DiagonalSet(int n, const std::vector<std::pair<int, int>>& diagonals) : n_(n) {
        for (auto [a, b] : diagonals) {
            add(a, b);
            add(-a, -b);
        }
    }

    int rank() const { return n_; }
    const std::set<std::pair<int, int>>& diagonals() const { return set_; }
    bool contains(int a, int b) const { return set_.count(key(a, b)) > 0; }

    bool crosses(std::pair<int, int> d1, std::pair<int, int> d2) const {
        auto p1 = key(d1.first, d1.second), p2 = key(d2.first, d2.second);
        auto pos = [&](int e) { return crossing_pos(Ctype::C, n_, e); };
        int a = pos(p1.first), b = pos(p1.second), c = pos(p2.first), d = pos(p2.second);
        return (a < c && c < b && b < d) || (c < a && a < d && d < b);
    }

    /// Largest set of mutually crossing diagonals.  A mutually crossing set
    /// never mixes all-positive with all-negative diagonals, so it can be
    /// reflected onto diagonals with positive smaller endpoint, where mutual
    /// crossing is a south-east chain with the rectangle condition.
    int max_crossing() const { return longest_se_chain(to_filling()); }

    /// Encode as a 0-1 filling of the crossing polyomino (one per diagonal
    /// whose first endpoint in crossing order is positive); the square part
    /// is symmetric under the main diagonal.
    Filling to_filling() const {
        Filling f(Order::crossing, n_);
        for (auto [a, b] : set_) {
            if (a <= 0) continue;
            f.set(a, f.poly().row_index(b), 1);
        }
        return f;
    }

    static DiagonalSet from_filling(const Filling& f);

  private:
    std::pair<int, int> key(int a, int b) const {
        int pa = crossing_pos(Ctype::C, n_, a), pb = crossing_pos(Ctype::C, n_, b);
        if (pa == pb) throw std::invalid_argument("degenerate diagonal");
        return pa < pb ? std::make_pair(a, b) : std::make_pair(b, a);
    }
    void add(int a, int b) { set_.insert(key(a, b)); }

    int n_;
    std::set<std::pair<int, int>> set_;
};

inline DiagonalSet DiagonalSet::from_filling(const Filling& f) {
    if (f.kind() != Order::crossing)
        throw std::invalid_argument("diagonal sets encode as crossing polyomino fillings");
    std::vector<std::pair<int, int>> ds;
    for (int c = 1; c <= f.n(); ++c)
        for (int y = c - 1; y < f.poly().rows(); ++y)
            if (f.at(c, y)) ds.emplace_back(c, f.poly().row_label(y));
    return DiagonalSet(f.n(), ds);
}

// ---------------------------------------------------------------------------
// Fans of non-intersecting paths in the nesting polyomino.
// ---------------------------------------------------------------------------

/// k pairwise disjoint paths: path t starts in the top box of column t,
/// takes unit south or east steps staying weakly above the square diagonal,
/// and ends on a diagonal box.
struct DyckFan {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> paths;  // cells (col, y)

    int k() const { return (int)paths.size(); }

    void validate() const {
        Polyomino poly{Order::nesting, n};
        std::set<std::pair<int, int>> used;
        for (int t = 1; t <= (int)paths.size(); ++t) {
            const auto& path = paths[t - 1];
            if (path.empty() || path.front() != std::make_pair(t, t - 1))
                throw std::invalid_argument("path must start in the top box of its column");
            for (std::size_t i = 0; i < path.size(); ++i) {
                auto [c, y] = path[i];
                if (!poly.exists(c, y) || !poly.in_fan_region(c, y))
                    throw std::invalid_argument("path leaves the region above the diagonal");
                if (!used.insert(path[i]).second)
                    throw std::invalid_argument("paths are not disjoint");
                if (i + 1 < path.size()) {
                    auto [c2, y2] = path[i + 1];
                    if (!((c2 == c && y2 == y + 1) || (c2 == c + 1 && y2 == y)))
                        throw std::invalid_argument("steps must go south or east");
                    if (poly.on_diagonal(c, y))
                        throw std::invalid_argument("path continues past the diagonal");
                }
            }
            if (!poly.on_diagonal(path.back().first, path.back().second))
                throw std::invalid_argument("path must end on the diagonal");
        }
    }
};

/// The filling with ones exactly in the boxes entered by the paths.
inline Filling fan_to_filling(const DyckFan& fan) {
    fan.validate();
    Filling f(Order::nesting, fan.n);
    for (const auto& path : fan.paths)
        for (auto [c, y] : path) f.set(c, y, 1);
    return f;
}

/// Recover the fan whose paths cover exactly the cells of the filling.
/// Fails when the filling is not the image of a fan.
inline DyckFan filling_to_fan(const Filling& f) {
    if (f.kind() != Order::nesting)
        throw std::invalid_argument("fans live in nesting polyominoes");
    const Polyomino& poly = f.poly();
    std::set<std::pair<int, int>> remaining;
    int k = 0;
    for (int c = 1; c <= f.n(); ++c)
        for (int y = c - 1; y < poly.rows(); ++y) {
            if (!f.at(c, y)) continue;
            if (f.at(c, y) != 1 || !poly.in_fan_region(c, y))
                throw std::invalid_argument("filling is not maximal");
            remaining.insert({c, y});
            if (poly.on_diagonal(c, y)) ++k;
        }

    DyckFan fan{f.n(), {}};
    std::function<bool(int)> solve = [&](int t) -> bool {
        if (t > k) return remaining.empty();
        std::vector<std::pair<int, int>> path;
        std::function<bool(int, int)> walk = [&](int c, int y) -> bool {
            if (!remaining.count({c, y})) return false;
            remaining.erase({c, y});
            path.push_back({c, y});
            if (poly.on_diagonal(c, y)) {
                fan.paths.push_back(path);
                if (solve(t + 1)) return true;
                fan.paths.pop_back();
            } else {
                if (walk(c, y + 1)) return true;
                if (walk(c + 1, y)) return true;
            }
            path.pop_back();
            remaining.insert({c, y});
            return false;
        };
        return walk(t, t - 1);
    };
    if (!solve(1)) throw std::invalid_argument("filling is not maximal");
    fan.validate();
    return fan;
}

// ---------------------------------------------------------------------------
// Maximality and exhaustive counts.
// ---------------------------------------------------------------------------

/// A 0-1 filling is maximal at k when its chain statistic equals k and
/// turning any available zero into a one lengthens the longest chain.  For
/// the nesting kind the available boxes are those weakly above the square
/// diagonal (where the fans live); for the crossing kind the filling must be
/// symmetric and a box counts as available together with its mirror image,
/// matching the addition of one diagonal to a symmetric diagonal set.
inline bool is_maximal_filling(const Filling& f, Order kind, int k);

namespace detail {

struct SweepTables {
    Polyomino poly;
    CellGrid grid;
    std::vector<std::uint64_t> pred;            // strict chain predecessors (no region)
    std::vector<std::uint64_t> succ;
    std::vector<std::uint64_t> region;          // crossing kind: region masks per corner
    std::vector<int> mirror_of;                 // index of mirror cell
    std::uint64_t forced = 0;                   // cells in no 2-chain
    std::vector<std::uint64_t> orbits;          // free orbits (not forced)

    void build(Order kind, int n) {
        poly = Polyomino{kind, n};
        grid.build(poly, kind == Order::nesting);
        const int m = (int)grid.cells.size();
        if (m > 63) throw std::invalid_argument("cap exceeded: rank too large for this sweep");
        pred.assign(m, 0);
        succ.assign(m, 0);
        mirror_of.assign(m, -1);
        for (int i = 0; i < m; ++i) {
            auto [ci, yi] = grid.cells[i];
            auto [mc, my] = poly.mirror(ci, yi);
            mirror_of[i] = (poly.row_label(yi) < 0) ? grid.index(poly, mc, my) : i;
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                auto [cj, yj] = grid.cells[j];
                bool before;
                if (kind == Order::nesting)
                    before = cj < ci && yj > yi;  // j strictly left and below i
                else
                    before = cj < ci && yj < yi && poly.exists(ci, yj);  // rectangle condition
                if (before) {
                    pred[i] |= 1ull << j;
                    succ[j] |= 1ull << i;
                }
            }
        }
        if (kind == Order::crossing) {
            region.assign(n + 1, 0);
            for (int t = 1; t <= n; ++t)
                for (int i = 0; i < m; ++i)
                    if (grid.cells[i].first <= t && grid.cells[i].second >= t - 1)
                        region[t] |= 1ull << i;
        }
        for (int i = 0; i < m; ++i)
            if (!pred[i] && !succ[i]) forced |= 1ull << i;
        // crossing sweeps range over symmetric fillings, so the unit of
        // choice is a mirror orbit; nesting sweeps choose cells one by one
        std::set<std::uint64_t> fr;
        for (int i = 0; i < m; ++i) {
            std::uint64_t orb = 1ull << i;
            if (kind == Order::crossing && mirror_of[i] >= 0) orb |= 1ull << mirror_of[i];
            if (!(orb & forced)) fr.insert(orb);
        }
        orbits.assign(fr.begin(), fr.end());
    }

    /// Longest chain within `filled` plus, per cell, the longest chain
    /// through that cell (counting it) when it were added.
    void chains(std::uint64_t filled, std::vector<int>& down, std::vector<int>& up,
                std::uint64_t mask = ~0ull) const {
        const int m = (int)grid.cells.size();
        for (int i = 0; i < m; ++i) {
            down[i] = 0;
            if (!(mask & (1ull << i))) continue;
            std::uint64_t p = pred[i] & filled & mask;
            while (p) {
                int j = __builtin_ctzll(p);
                p &= p - 1;
                down[i] = std::max(down[i], down[j]);
            }
            down[i] += 1;  // counting cell i itself (whether filled or probed)
        }
        for (int i = m - 1; i >= 0; --i) {
            up[i] = 0;
            if (!(mask & (1ull << i))) continue;
            std::uint64_t s = succ[i] & filled & mask;
            while (s) {
                int j = __builtin_ctzll(s);
                s &= s - 1;
                up[i] = std::max(up[i], up[j]);
            }
            up[i] += 1;
        }
    }
};

inline std::pair<int, bool> classify(const SweepTables& T, std::uint64_t filled, bool symmetric,
                                     std::vector<int>& down, std::vector<int>& up,
                                     std::vector<int>& through) {
    const int m = (int)T.grid.cells.size();
    const bool crossing = T.poly.kind == Order::crossing;
    std::fill(through.begin(), through.end(), 0);
    int stat = 0;
    if (!crossing) {
        T.chains(filled, down, up);
        for (int i = 0; i < m; ++i) {
            through[i] = down[i] + up[i] - 1;
            if (filled & (1ull << i)) stat = std::max(stat, through[i]);
        }
    } else {
        for (std::size_t t = 1; t < T.region.size(); ++t) {
            T.chains(filled, down, up, T.region[t]);
            for (int i = 0; i < m; ++i) {
                if (!(T.region[t] & (1ull << i))) continue;
                through[i] = std::max(through[i], down[i] + up[i] - 1);
                if (filled & (1ull << i)) stat = std::max(stat, down[i] + up[i] - 1);
            }
        }
    }
    bool maximal = true;
    for (int i = 0; i < m && maximal; ++i) {
        if (filled & (1ull << i)) continue;
        int best = through[i];
        if (symmetric && T.mirror_of[i] >= 0 && !(filled & (1ull << T.mirror_of[i])))
            best = std::max(best, through[T.mirror_of[i]]);
        if (best <= stat) maximal = false;
    }
    return {stat, maximal};
}

}  // namespace detail

inline bool is_maximal_filling(const Filling& f, Order kind, int k) {
    if (f.kind() != kind) throw std::invalid_argument("filling kind mismatch");
    detail::SweepTables T;
    T.build(kind, f.n());
    std::uint64_t filled = 0;
    for (int c = 1; c <= f.n(); ++c)
        for (int y = c - 1; y < f.poly().rows(); ++y) {
            if (!f.at(c, y)) continue;
            if (f.at(c, y) > 1) return false;
            int i = T.grid.index(f.poly(), c, y);
            if (i < 0) return false;  // outside the fan region
            filled |= 1ull << i;
        }
    if (kind == Order::crossing) {
        // the square part must mirror onto itself
        for (int i = 0; i < (int)T.grid.cells.size(); ++i) {
            bool a = filled & (1ull << i), b = filled & (1ull << T.mirror_of[i]);
            if (a != b) return false;
        }
    }
    std::vector<int> down(T.grid.cells.size()), up(T.grid.cells.size()),
        through(T.grid.cells.size());
    auto [stat, maximal] = detail::classify(T, filled, kind == Order::crossing, down, up,
                                            through);
    return stat == k && maximal;
}

/// Counts of maximal fillings by chain statistic, via a sweep over all
/// fillings of the free cell orbits (cells that can never sit in a 2-chain
/// are present in every maximal filling and are fixed up front).
inline std::vector<long long> maximal_filling_counts(Order kind, int n, int jobs = 1,
                                                     int cap = 5) {
    if (n > cap) throw std::invalid_argument("cap exceeded: rank above filling sweep cap");
    detail::SweepTables T;
    T.build(kind, n);
    const int f = (int)T.orbits.size();
    const bool symmetric = kind == Order::crossing;
    const long long total = 1ll << f;
    jobs = std::max(1, jobs);

    std::vector<std::vector<long long>> acc(jobs, std::vector<long long>(n + 2, 0));
    std::atomic<long long> next_block{0};
    const long long block = std::max<long long>(1, total / (jobs * 64));
    auto worker = [&](int w) {
        std::vector<int> down(T.grid.cells.size()), up(T.grid.cells.size()),
            through(T.grid.cells.size());
        for (;;) {
            long long b = next_block.fetch_add(1);
            long long lo = b * block, hi = std::min(total, lo + block);
            if (lo >= total) break;
            for (long long sel = lo; sel < hi; ++sel) {
                std::uint64_t filled = T.forced;
                // orbits are added whole, so symmetric sweeps stay symmetric
                for (int i = 0; i < f; ++i)
                    if (sel & (1ll << i)) filled |= T.orbits[i];
                auto [stat, maximal] = detail::classify(T, filled, symmetric, down, up, through);
                if (maximal && stat <= n + 1) acc[w][stat] += 1;
            }
        }
    };
    std::vector<std::thread> threads;
    for (int w = 1; w < jobs; ++w) threads.emplace_back(worker, w);
    worker(0);
    for (auto& t : threads) t.join();
    std::vector<long long> counts(n + 2, 0);
    for (const auto& a : acc)
        for (std::size_t i = 0; i < a.size(); ++i) counts[i] += a[i];
    return counts;
}

inline long long count_k_triangulations(int n, int k, int jobs = 1, int cap = 5) {
    auto c = maximal_filling_counts(Order::crossing, n, jobs, cap);
    return (k >= 0 && k < (int)c.size()) ? c[k] : 0;
}

inline long long count_maximal_nesting_fillings(int n, int k, int jobs = 1, int cap = 5) {
    auto c = maximal_filling_counts(Order::nesting, n, jobs, cap);
    return (k >= 0 && k < (int)c.size()) ? c[k] : 0;
}

/// Fans counted by direct path enumeration.
inline long long count_symmetric_fans(int n, int k, int cap = 6) {
    if (n > cap) throw std::invalid_argument("cap exceeded: rank above fan enumeration cap");
    if (k < 0 || k > n) return 0;
    Polyomino poly{Order::nesting, n};
    std::set<std::pair<int, int>> used;
    std::function<long long(int)> count_from = [&](int t) -> long long {
        if (t > k) return 1;
        long long total = 0;
        std::function<long long(int, int)> walk = [&](int c, int y) -> long long {
            if (!poly.exists(c, y) || !poly.in_fan_region(c, y) || used.count({c, y})) return 0;
            used.insert({c, y});
            long long sum = 0;
            if (poly.on_diagonal(c, y)) {
                sum = count_from(t + 1);
            } else {
                sum += walk(c, y + 1);
                sum += walk(c + 1, y);
            }
            used.erase({c, y});
            return sum;
        };
        total = walk(t, t - 1);
        return total;
    };
    return count_from(1);
}

/// Number of fillings with entry sum m, l non-zero entries and chain
/// statistic k.  The chain statistic of a filling with multiplicities is
/// taken on its support, so replacing the ones of a 0-1 filling by arbitrary
/// positive entries never changes it.
inline long long nml_count(Order kind, int n, int k, int m, int l,
                           ChainWeight mode = ChainWeight::support, int cap = 3) {
    if (n > cap) throw std::invalid_argument("cap exceeded: rank above nml cap");
    if (l < 0 || l > m) return 0;
    detail::CellGrid g;
    g.build(Polyomino{kind, n}, false);
    const int cells = (int)g.cells.size();
    if (l > cells) return 0;

    // compositions of m into l positive parts
    auto binom = [](int a, int b) {
        long long r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };

    long long total = 0;
    std::vector<int> support;
    std::function<void(int)> rec_support = [&](int start) {
        if ((int)support.size() == l) {
            Filling f(kind, n);
            for (int idx : support) f.set(g.cells[idx].first, g.cells[idx].second, 1);
            if (mode == ChainWeight::support) {
                if (chain_statistic(f, ChainWeight::support) == k) total += binom(m - 1, l - 1);
                return;
            }
            // weighted statistic: distribute the multiplicities explicitly
            std::vector<int> parts(l, 1);
            int rest = m - l;
            std::function<void(int, int)> rec_parts = [&](int pos, int left) {
                if (pos == l) {
                    if (left) return;
                    for (int i = 0; i < l; ++i)
                        f.set(g.cells[support[i]].first, g.cells[support[i]].second, parts[i]);
                    if (chain_statistic(f, ChainWeight::weighted) == k) total += 1;
                    return;
                }
                for (int add = 0; add <= left; ++add) {
                    parts[pos] = 1 + add;
                    rec_parts(pos + 1, left - add);
                }
            };
            rec_parts(0, rest);
            return;
        }
        for (int idx = start; idx < cells; ++idx) {
            support.push_back(idx);
            rec_support(idx + 1);
            support.pop_back();
        }
    };
    rec_support(0);
    return total;
}

}  // namespace cnest
