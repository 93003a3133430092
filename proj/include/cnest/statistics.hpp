#pragma once

#include <cstdint>
#include <map>

#include "cnest/partition.hpp"

namespace cnest {

/// Which arcs enter a pair statistic.  The theorems hold both over all arcs
/// and restricted to arcs with positive opener; both scopes are exposed.
enum class PairScope { all_arcs, positive_openers };

namespace detail {

inline bool shares_endpoint(const Arc& a, const Arc& b) {
    return a.opener == b.opener || a.opener == b.closer || a.closer == b.opener ||
           a.closer == b.closer;
}

/// Chord endpoints of an arc as sorted positions in the given order.  Arcs
/// with negative opener run backwards in the crossing order, so sorting is
/// required before interleaving tests.
inline std::pair<int, int> chord(const Arc& a, Ctype t, int n, Order ord) {
    int x, y;
    if (ord == Order::crossing) {
        x = crossing_pos(t, n, a.opener);
        y = crossing_pos(t, n, a.closer);
    } else {
        x = nesting_pos(t, n, a.opener, t == Ctype::B);
        y = nesting_pos(t, n, a.closer, t == Ctype::B);
    }
    return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
}

inline bool interleaves(std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

inline bool contains_chord(std::pair<int, int> outer, std::pair<int, int> inner) {
    return outer.first < inner.first && inner.second < outer.second;
}

/// Arc runs from a positive opener (or 0) to a negative closer (or 0).
inline bool central_class(const Arc& a) { return a.opener >= 0 && a.closer <= 0; }

}  // namespace detail

/// Mirror arcs of type B diagrams: positive opener whose closer is strictly
/// smaller in absolute value, plus arcs opening at 0.  Arcs closing at 0 are
/// not mirror.  Pairs of central-class arcs containing a mirror arc are
/// excluded from the type B crossing and nesting statistics.
inline bool is_mirror_arc(const Arc& a) {
    if (a.opener == 0) return true;
    if (a.closer == 0) return false;
    return a.opener > 0 && a.closer < 0 && -a.closer < a.opener;
}

namespace detail {

inline bool b_excluded(const Arc& a, const Arc& b) {
    return central_class(a) && central_class(b) && (is_mirror_arc(a) || is_mirror_arc(b));
}

inline std::vector<Arc> scoped_arcs(const SetPartition& p, Order kind, PairScope scope) {
    std::vector<Arc> all = arcs(p, kind);
    if (scope == PairScope::all_arcs) return all;
    std::vector<Arc> out;
    for (const Arc& a : all)
        if (a.opener > 0) out.push_back(a);
    return out;
}

}  // namespace detail

/// Unordered pairs of arcs that cross in the crossing diagram (type B minus
/// the mirror-pair exclusions).
inline std::vector<std::pair<Arc, Arc>> crossing_pairs(const SetPartition& p,
                                                       PairScope scope = PairScope::all_arcs) {
    const auto as = detail::scoped_arcs(p, Order::crossing, scope);
    std::vector<std::pair<Arc, Arc>> out;
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            if (detail::shares_endpoint(as[i], as[j])) continue;
            auto ci = detail::chord(as[i], p.ctype(), p.rank(), Order::crossing);
            auto cj = detail::chord(as[j], p.ctype(), p.rank(), Order::crossing);
            if (!detail::interleaves(ci, cj)) continue;
            if (p.ctype() == Ctype::B && detail::b_excluded(as[i], as[j])) continue;
            out.emplace_back(as[i], as[j]);
        }
    }
    return out;
}

/// Unordered pairs of arcs nested one inside the other in the nesting diagram
/// (type B minus the mirror-pair exclusions).
inline std::vector<std::pair<Arc, Arc>> nesting_pairs(const SetPartition& p,
                                                      PairScope scope = PairScope::all_arcs) {
    const auto as = detail::scoped_arcs(p, Order::nesting, scope);
    std::vector<std::pair<Arc, Arc>> out;
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            if (detail::shares_endpoint(as[i], as[j])) continue;
            auto ci = detail::chord(as[i], p.ctype(), p.rank(), Order::nesting);
            auto cj = detail::chord(as[j], p.ctype(), p.rank(), Order::nesting);
            if (!detail::contains_chord(ci, cj) && !detail::contains_chord(cj, ci)) continue;
            if (p.ctype() == Ctype::B && detail::b_excluded(as[i], as[j])) continue;
            out.emplace_back(as[i], as[j]);
        }
    }
    return out;
}

inline std::size_t crossing_number(const SetPartition& p, PairScope scope = PairScope::all_arcs) {
    return crossing_pairs(p, scope).size();
}

inline std::size_t nesting_number(const SetPartition& p, PairScope scope = PairScope::all_arcs) {
    return nesting_pairs(p, scope).size();
}

/// Number of arcs crossing the given arc.  The arc must belong to the
/// partition's crossing diagram and must have a positive closer.
inline std::size_t arc_crossing_count(const SetPartition& p, const Arc& arc) {
    if (arc.closer <= 0)
        throw std::invalid_argument("arc_crossing_count requires a positive closer");
    const auto as = arcs(p, Order::crossing);
    if (std::find(as.begin(), as.end(), arc) == as.end())
        throw std::invalid_argument("arc not in partition");
    std::size_t c = 0;
    for (const auto& pr : crossing_pairs(p))
        if (pr.first == arc || pr.second == arc) ++c;
    return c;
}

namespace detail {

/// Exact maximum clique on <= 64 vertices, branch and bound.
inline int max_clique(const std::vector<std::uint64_t>& adj) {
    const int n = (int)adj.size();
    int best = 0;
    std::function<void(std::uint64_t, int)> rec = [&](std::uint64_t cand, int size) {
        if (size + __builtin_popcountll(cand) <= best) return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        int v = __builtin_ctzll(cand);
        // branch: take v
        rec(cand & adj[v], size + 1);
        // branch: skip v
        rec(cand & ~(1ull << v), size);
    };
    rec(n == 64 ? ~0ull : ((1ull << n) - 1), 0);
    return best;
}

inline int max_pair_clique(const SetPartition& p, Order kind) {
    const auto as = arcs(p, kind);
    if (as.empty()) return 0;
    const auto pairs = kind == Order::crossing ? crossing_pairs(p) : nesting_pairs(p);
    std::vector<std::uint64_t> adj(as.size(), 0);
    auto index = [&](const Arc& a) {
        return (std::size_t)(std::find(as.begin(), as.end(), a) - as.begin());
    };
    for (const auto& pr : pairs) {
        std::size_t i = index(pr.first), j = index(pr.second);
        adj[i] |= 1ull << j;
        adj[j] |= 1ull << i;
    }
    return std::max(1, max_clique(adj));
}

}  // namespace detail

/// Cardinality of a largest set of mutually crossing arcs; 0 when the
/// partition has no arcs, 1 when no two arcs cross.
inline int max_crossing_card(const SetPartition& p) {
    return detail::max_pair_clique(p, Order::crossing);
}

inline int max_nesting_card(const SetPartition& p) {
    return detail::max_pair_clique(p, Order::nesting);
}

namespace detail {

inline bool touches(const Arc& a, int e) { return a.opener == e || a.closer == e; }

/// The ordered list of arcs with positive opener below n and negative closer
/// above -n, used by the type D crossing and nesting conditions.
inline std::vector<Arc> d_central_arcs(const std::vector<Arc>& as, int n) {
    std::vector<Arc> m;
    for (const Arc& a : as)
        if (a.opener > 0 && a.opener < n && a.closer < 0 && -a.closer < n) m.push_back(a);
    std::sort(m.begin(), m.end());
    return m;
}

inline bool d_noncrossing(const SetPartition& p) {
    const int n = p.rank();
    const auto as = arcs(p, Order::crossing);
    for (const Arc& a : as)
        if (a.opener == -a.closer && a.opener != n) return false;
    const auto m = d_central_arcs(as, n);
    const int k = (int)m.size();
    auto m_index = [&](const Arc& a) {
        auto it = std::find(m.begin(), m.end(), a);
        return it == m.end() ? -1 : (int)(it - m.begin()) + 1;
    };
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            const Arc &a = as[i], &b = as[j];
            bool x = !shares_endpoint(a, b) &&
                     interleaves(chord(a, p.ctype(), n, Order::crossing),
                                 chord(b, p.ctype(), n, Order::crossing));
            if ((touches(a, n) && touches(b, -n)) || (touches(b, n) && touches(a, -n)))
                continue;  // arcs through n and -n may cross
            int la = m_index(a), lb = m_index(b);
            const Arc* special = nullptr;
            int l = -1;
            if (la >= 0 && (touches(b, n) || touches(b, -n))) special = &b, l = la;
            if (lb >= 0 && (touches(a, n) || touches(a, -n))) special = &a, l = lb;
            if (special) {
                bool must = (touches(*special, n) && 2 * l > k) ||
                            (touches(*special, -n) && 2 * l <= k);
                if (must != x) return false;
            } else if (x) {
                return false;
            }
        }
    }
    return true;
}

inline bool d_nonnesting(const SetPartition& p) {
    const int n = p.rank();
    const auto as = arcs(p, Order::nesting);
    for (const Arc& a : as)
        if (a.opener == -a.closer && a.opener != n) return false;
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            const Arc &a = as[i], &b = as[j];
            auto ca = chord(a, p.ctype(), n, Order::nesting);
            auto cb = chord(b, p.ctype(), n, Order::nesting);
            bool nested = !shares_endpoint(a, b) &&
                          (contains_chord(ca, cb) || contains_chord(cb, ca));
            if (!nested) continue;
            // arcs (i,-n) and (j,n) with positive openers below n may nest
            auto shape_ii = [&](const Arc& u, const Arc& v) {
                return u.closer == -n && u.opener > 0 && u.opener < n && v.closer == n &&
                       v.opener > 0 && v.opener < n;
            };
            if (shape_ii(a, b) || shape_ii(b, a)) continue;
            // arcs (i,-j) and (n,-n) may nest when some arc (k,n) with
            // k < min(i,j) witnesses them
            auto shape_iii = [&](const Arc& u, const Arc& v) {
                if (!(v.opener == n && v.closer == -n)) return false;
                if (!(u.opener > 0 && u.opener < n && u.closer < 0 && -u.closer < n)) return false;
                int bound = std::min(u.opener, -u.closer);
                for (const Arc& w : as)
                    if (w.closer == n && w.opener > 0 && w.opener < bound) return true;
                return false;
            };
            if (shape_iii(a, b) || shape_iii(b, a)) continue;
            return false;
        }
    }
    return true;
}

}  // namespace detail

inline bool is_noncrossing(const SetPartition& p) {
    if (p.ctype() == Ctype::D) return detail::d_noncrossing(p);
    return crossing_pairs(p).empty();
}

inline bool is_nonnesting(const SetPartition& p) {
    if (p.ctype() == Ctype::D) return detail::d_nonnesting(p);
    return nesting_pairs(p).empty();
}

/// Pair statistics of one partition, as emitted by the stats commands.
struct PairStatistics {
    std::size_t crossings = 0;
    std::size_t nestings = 0;
    int maxcross = 0;
    int maxnest = 0;
    std::vector<int> op;
    std::vector<int> cl;
};

inline PairStatistics pair_statistics(const SetPartition& p) {
    PairStatistics s;
    s.crossings = crossing_number(p);
    s.nestings = nesting_number(p);
    s.maxcross = max_crossing_card(p);
    s.maxnest = max_nesting_card(p);
    s.op = openers(p);
    s.cl = closers(p);
    return s;
}

inline std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

/// CSV row: type, n, partition-id, crossings, nestings, maxcross, maxnest, op, cl
inline std::string stats_csv_row(const SetPartition& p, std::size_t id) {
    const PairStatistics s = pair_statistics(p);
    std::ostringstream os;
    os << to_string(p.ctype()) << ',' << p.rank() << ',' << id << ',' << s.crossings << ','
       << s.nestings << ',' << s.maxcross << ',' << s.maxnest << ',' << join_ints(s.op) << ','
       << join_ints(s.cl);
    return os.str();
}

}  // namespace cnest
