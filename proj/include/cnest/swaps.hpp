#pragma once

#include "cnest/statistics.hpp"

namespace cnest {

namespace detail {

/// First phase of the opener/closer matching: walk the positive closers in
/// increasing order and connect each to an active opener below it.  `pick`
/// receives the sorted candidates and chooses one.
struct MatchResult {
    std::vector<Arc> arcs;
    std::vector<int> remaining;  // active openers left over, ascending
};

template <typename Pick>
MatchResult match_closers(std::vector<int> openers_in, const std::vector<int>& closers_in,
                          Pick pick) {
    std::sort(openers_in.begin(), openers_in.end());
    std::vector<int> cl = closers_in;
    std::sort(cl.begin(), cl.end());
    MatchResult r;
    std::vector<int> active = openers_in;
    for (int j : cl) {
        std::vector<int> cands;
        for (int o : active)
            if (o < j) cands.push_back(o);
        if (cands.empty()) throw std::invalid_argument("not an opener-closer configuration");
        int o = pick(cands, j);
        active.erase(std::find(active.begin(), active.end(), o));
        r.arcs.push_back(Arc{o, j});
    }
    r.remaining = active;
    return r;
}

/// Mirror-symmetric matching of the leftover openers o_1 < ... < o_k by arcs
/// (o_i, -o_{k+1-i}); the middle opener, if any, is paired with its own
/// negative.  This is the unique central matching that is simultaneously
/// non-crossing and non-nesting.
inline std::vector<Arc> reversal_matching(const std::vector<int>& act) {
    std::vector<Arc> out;
    const int k = (int)act.size();
    for (int i = 0; i < k; ++i) out.push_back(Arc{act[i], -act[k - 1 - i]});
    return out;
}

inline std::vector<Arc> with_negatives(const std::vector<Arc>& as) {
    std::vector<Arc> out = as;
    for (const Arc& a : as) {
        Arc na = negate(a);
        if (std::find(out.begin(), out.end(), na) == out.end()) out.push_back(na);
    }
    return out;
}

}  // namespace detail

/// Statistic-interchanging map for types A and C: openers and closers are
/// preserved while the number of crossings and the number of nestings swap.
///
/// Every positive closer j, taken in increasing order, is reconnected to the
/// (c+1)-st smallest active opener below it, where c is the number of arcs
/// crossing the arc of the input that closes at j.  The new arc is then
/// nested by exactly c arcs.  Negative arcs follow by symmetry, and the
/// leftover openers are matched centrally through the permutation defined by
/// the input's positive-to-negative arcs.
inline SetPartition swap_map(const SetPartition& p) {
    if (p.ctype() != Ctype::A && p.ctype() != Ctype::C)
        throw std::invalid_argument("swap_map requires type A or C");
    const int n = p.rank();

    const auto cross_arcs = arcs(p, Order::crossing);
    std::map<int, std::size_t> cross_count;  // closer -> #arcs crossing its arc
    for (const Arc& a : cross_arcs)
        if (a.closer > 0) cross_count[a.closer] = 0;
    for (const auto& pr : crossing_pairs(p)) {
        for (const Arc* a : {&pr.first, &pr.second})
            if (a->closer > 0) ++cross_count[a->closer];
    }

    auto matched = detail::match_closers(openers(p), closers(p),
                                         [&](const std::vector<int>& cands, int j) {
                                             std::size_t c = cross_count.at(j);
                                             if (c >= cands.size())
                                                 throw std::runtime_error("matching underflow");
                                             return cands[c];
                                         });

    std::vector<Arc> out = detail::with_negatives(matched.arcs);
    if (p.ctype() == Ctype::C) {
        std::vector<Arc> central;
        for (const Arc& a : cross_arcs)
            if (a.opener > 0 && a.closer < 0) central.push_back(a);
        std::sort(central.begin(), central.end());
        const int k = (int)central.size();
        if (k != (int)matched.remaining.size()) throw std::runtime_error("central size mismatch");
        std::vector<int> op_list;
        for (const Arc& a : central) op_list.push_back(a.opener);
        for (int m = 0; m < k; ++m) {
            int target = -central[m].closer;
            int s = (int)(std::find(op_list.begin(), op_list.end(), target) - op_list.begin());
            out.push_back(Arc{matched.remaining[m], -matched.remaining[s]});
        }
    }
    return detail::assemble(p.ctype(), n, out);
}

/// Rewiring of the arcs of a central structure whose first arc closes at the
/// diagram position 0: arcs (o_1,0),(o_2,c_2),...,(o_m,c_m) with o_i <= |c_i|
/// for i > 1 and |c_2| > ... > |c_m| become
///   (o_i, c_{i+1})  for i < j,
///   (o_j, -o_j)     for the minimal j with o_j > |c_{j+1}| (j = m if none),
///   (o_i, c_i)      for i > j.
/// The number of nestings among arcs with o < |c| is preserved, and no arc
/// touches 0 afterwards.  Inputs without a 0-closer are returned unchanged.
inline std::vector<Arc> zero_block_transform(const std::vector<Arc>& input) {
    std::vector<Arc> zero, rest;
    for (const Arc& a : input) (a.closer == 0 ? zero : rest).push_back(a);
    if (zero.empty()) return input;
    if (zero.size() > 1) throw std::invalid_argument("more than one arc closing at 0");
    std::sort(rest.begin(), rest.end(),
              [](const Arc& a, const Arc& b) { return -a.closer > -b.closer; });
    std::vector<Arc> seq;
    seq.push_back(zero[0]);
    seq.insert(seq.end(), rest.begin(), rest.end());
    const int m = (int)seq.size();
    for (int i = 1; i < m; ++i) {
        if (seq[i].closer >= 0 || seq[i].opener <= 0 || seq[i].opener > -seq[i].closer)
            throw std::invalid_argument("central arcs must satisfy o <= |c|");
        if (i >= 2 && -seq[i - 1].closer <= -seq[i].closer)
            throw std::invalid_argument("central closers must be strictly ordered");
    }
    int j = m;  // 1-based
    for (int i = 1; i < m; ++i) {
        if (seq[i - 1].opener > -seq[i].closer) {
            j = i;
            break;
        }
    }
    std::vector<Arc> out;
    for (int i = 1; i <= m; ++i) {
        if (i < j)
            out.push_back(Arc{seq[i - 1].opener, seq[i].closer});
        else if (i == j)
            out.push_back(Arc{seq[i - 1].opener, -seq[i - 1].opener});
        else
            out.push_back(seq[i - 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Type B analogue: maps the number of nestings to the number of crossings,
/// preserving openers and closers.  Positive closers are rewired exactly as
/// in swap_map; the central structure (leftover openers, zero block and the
/// arcs into the negatives) is relabelled to a standard ground set, rewired
/// by zero_block_transform and relabelled onto the leftover openers.
inline SetPartition swap_map_B(const SetPartition& p) {
    if (p.ctype() != Ctype::B) throw std::invalid_argument("swap_map_B requires type B");
    const int n = p.rank();

    std::map<int, std::size_t> cross_count;
    for (const Arc& a : arcs(p, Order::crossing))
        if (a.closer > 0) cross_count[a.closer] = 0;
    for (const auto& pr : crossing_pairs(p))
        for (const Arc* a : {&pr.first, &pr.second})
            if (a->closer > 0) ++cross_count[a->closer];

    auto matched = detail::match_closers(openers(p), closers(p),
                                         [&](const std::vector<int>& cands, int j) {
                                             std::size_t c = cross_count.at(j);
                                             if (c >= cands.size())
                                                 throw std::runtime_error("matching underflow");
                                             return cands[c];
                                         });
    std::vector<Arc> out = detail::with_negatives(matched.arcs);

    // central structure of the input, one representative arc per mirror pair
    std::vector<Arc> uppers;
    std::set<int> central_elems;
    for (const Arc& a : arcs(p, Order::nesting)) {
        if (a.opener > 0 && a.closer == 0) {
            uppers.push_back(a);
            central_elems.insert(a.opener);
        } else if (a.opener > 0 && a.closer < 0) {
            central_elems.insert(a.opener);
            central_elems.insert(-a.closer);
            if (a.opener < -a.closer) uppers.push_back(a);
        }
    }
    std::vector<int> v(central_elems.begin(), central_elems.end());
    auto rank_of = [&](int e) {
        return (int)(std::lower_bound(v.begin(), v.end(), e) - v.begin()) + 1;
    };
    std::vector<Arc> relabelled;
    for (const Arc& a : uppers)
        relabelled.push_back(Arc{rank_of(a.opener), a.closer == 0 ? 0 : -rank_of(-a.closer)});

    const auto transformed = zero_block_transform(relabelled);

    const std::vector<int>& q = matched.remaining;
    if (q.size() != v.size()) throw std::runtime_error("central size mismatch");
    for (const Arc& a : transformed) {
        Arc img{q[a.opener - 1], -q[-a.closer - 1]};
        out.push_back(img);
        Arc na = negate(img);
        if (std::find(out.begin(), out.end(), na) == out.end()) out.push_back(na);
    }
    return detail::assemble(Ctype::B, n, out);
}

namespace detail {

inline int pick_largest(const std::vector<int>& cands, int) { return cands.back(); }
inline int pick_smallest(const std::vector<int>& cands, int) { return cands.front(); }

inline void require_config(const std::vector<int>& O, const std::vector<int>& C, Ctype t, int n) {
    if (!is_config(O, C, t, n)) throw std::invalid_argument("not an opener-closer configuration");
}

inline bool contains(const std::vector<int>& v, int e) {
    return std::find(v.begin(), v.end(), e) != v.end();
}

}  // namespace detail

/// All non-crossing partitions with the given openers and closers: exactly
/// one for types A, B and C.  For type D the result is empty when
/// |O| - |C| is odd and n is not both opener and closer, has two elements
/// (exchanged by swap_extreme) when |O| - |C| is even and n is both, and is
/// a singleton otherwise.
inline std::vector<SetPartition> nc_from_config(Ctype type, std::vector<int> O,
                                                std::vector<int> C, int n) {
    detail::require_config(O, C, type, n);
    std::sort(O.begin(), O.end());
    std::sort(C.begin(), C.end());

    if (type == Ctype::A) {
        auto m = detail::match_closers(O, C, detail::pick_largest);
        return {detail::assemble(type, n, m.arcs)};
    }
    if (type == Ctype::B || type == Ctype::C) {
        auto m = detail::match_closers(O, C, detail::pick_largest);
        std::vector<Arc> out = detail::with_negatives(m.arcs);
        for (const Arc& a : detail::reversal_matching(m.remaining)) out.push_back(a);
        return {detail::assemble(type, n, out)};
    }

    // type D
    const int diff = (int)O.size() - (int)C.size();
    const bool n_open = detail::contains(O, n), n_close = detail::contains(C, n);
    if (diff % 2 != 0 && !(n_open && n_close)) return {};

    auto finish = [&](std::vector<Arc> out, const std::vector<int>& rest) {
        for (const Arc& a : detail::reversal_matching(rest)) out.push_back(a);
        return detail::assemble(type, n, out);
    };

    if (diff == 0) {
        auto m = detail::match_closers(O, C, detail::pick_largest);
        return {finish(detail::with_negatives(m.arcs), m.remaining)};
    }

    std::vector<int> c_rest = C;
    if (n_close) c_rest.erase(std::find(c_rest.begin(), c_rest.end(), n));
    auto m = detail::match_closers(O, c_rest, detail::pick_largest);
    std::vector<Arc> base = detail::with_negatives(m.arcs);
    std::vector<int> act = m.remaining;  // ascending; may contain n

    if (diff % 2 != 0) {
        // zero block through the median leftover opener, n and -n
        std::vector<int> below(act.begin(), act.end() - 1);  // act.back() == n
        int med = below[below.size() / 2];
        base.push_back(Arc{med, n});
        base.push_back(Arc{-n, -med});
        base.push_back(Arc{n, -n});
        below.erase(std::find(below.begin(), below.end(), med));
        return {finish(std::move(base), below)};
    }

    if (!n_close) return {finish(std::move(base), act)};

    if (!n_open) {
        int med = act[act.size() / 2];
        base.push_back(Arc{med, n});
        base.push_back(Arc{-n, -med});
        act.erase(std::find(act.begin(), act.end(), med));
        return {finish(std::move(base), act)};
    }

    // n both opener and closer: two middle choices, swapped by swap_extreme
    std::vector<int> below(act.begin(), act.end() - 1);
    int lo = below[below.size() / 2 - 1], hi = below[below.size() / 2];
    std::vector<Arc> arcs1 = base;
    arcs1.push_back(Arc{lo, n});
    arcs1.push_back(Arc{-n, -lo});
    arcs1.push_back(Arc{n, -hi});
    arcs1.push_back(Arc{hi, -n});
    std::vector<int> rest = below;
    rest.erase(std::find(rest.begin(), rest.end(), lo));
    rest.erase(std::find(rest.begin(), rest.end(), hi));
    SetPartition one = finish(std::move(arcs1), rest);
    SetPartition two = swap_extreme(one);
    std::vector<SetPartition> res{one, two};
    std::sort(res.begin(), res.end());
    res.erase(std::unique(res.begin(), res.end()), res.end());
    return res;
}

/// Non-nesting companions of nc_from_config, with the same cardinality rules.
inline std::vector<SetPartition> nn_from_config(Ctype type, std::vector<int> O,
                                                std::vector<int> C, int n) {
    detail::require_config(O, C, type, n);
    std::sort(O.begin(), O.end());
    std::sort(C.begin(), C.end());

    if (type == Ctype::A) {
        auto m = detail::match_closers(O, C, detail::pick_smallest);
        return {detail::assemble(type, n, m.arcs)};
    }
    if (type == Ctype::C) {
        auto m = detail::match_closers(O, C, detail::pick_smallest);
        std::vector<Arc> out = detail::with_negatives(m.arcs);
        for (const Arc& a : detail::reversal_matching(m.remaining)) out.push_back(a);
        return {detail::assemble(type, n, out)};
    }
    if (type == Ctype::B) {
        auto m = detail::match_closers(O, C, detail::pick_smallest);
        std::vector<Arc> out = detail::with_negatives(m.arcs);
        const std::vector<int>& act = m.remaining;
        const int k = (int)act.size();
        if (k % 2 == 0) {
            for (const Arc& a : detail::reversal_matching(act)) out.push_back(a);
        } else {
            // zero block on the smallest leftover opener; the rest shift by one
            out.push_back(Arc{act[0], -act[0]});
            for (int i = 1; i < k; ++i) out.push_back(Arc{act[i], -act[k - i]});
        }
        return {detail::assemble(type, n, out)};
    }

    // type D
    const int diff = (int)O.size() - (int)C.size();
    const bool n_open = detail::contains(O, n), n_close = detail::contains(C, n);
    if (diff % 2 != 0 && !(n_open && n_close)) return {};

    auto m = detail::match_closers(O, C, detail::pick_smallest);
    std::vector<Arc> out = detail::with_negatives(m.arcs);
    std::vector<int> act = m.remaining;

    if (diff % 2 != 0) {
        out.push_back(Arc{n, -n});
        act.erase(std::find(act.begin(), act.end(), n));
        for (const Arc& a : detail::reversal_matching(act)) out.push_back(a);
        return {detail::assemble(type, n, out)};
    }

    for (const Arc& a : detail::reversal_matching(act)) out.push_back(a);
    SetPartition one = detail::assemble(type, n, out);
    if (!(n_open && n_close)) return {one};
    SetPartition two = swap_extreme(one);
    std::vector<SetPartition> res{one, two};
    std::sort(res.begin(), res.end());
    res.erase(std::unique(res.begin(), res.end()), res.end());
    return res;
}

}  // namespace cnest
