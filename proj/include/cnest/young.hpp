#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cnest {

/// Weakly decreasing positive parts; trailing zeros are never stored.
using IntegerPartition = std::vector<int>;

inline void normalize(IntegerPartition& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_partition_shape(const IntegerPartition& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) return false;
    return p.empty() || p.back() > 0;
}

inline int part(const IntegerPartition& p, std::size_t row) {
    return row < p.size() ? p[row] : 0;
}

inline int weight(const IntegerPartition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

inline IntegerPartition conjugate(const IntegerPartition& p) {
    IntegerPartition c;
    if (p.empty()) return c;
    c.resize(p[0], 0);
    for (int col = 0; col < p[0]; ++col)
        for (int v : p) c[col] += (v > col) ? 1 : 0;
    return c;
}

inline bool contains_shape(const IntegerPartition& outer, const IntegerPartition& inner) {
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (part(outer, i) < inner[i]) return false;
    return true;
}

/// lam/mu is a horizontal strip: at most one box per column.
inline bool is_horizontal_strip(const IntegerPartition& mu, const IntegerPartition& lam) {
    if (!contains_shape(lam, mu)) return false;
    for (std::size_t i = 0; i + 1 < lam.size() + 1; ++i)
        if (part(lam, i + 1) > part(mu, i)) return false;
    return true;
}

/// lam/mu is a vertical strip: at most one box per row.
inline bool is_vertical_strip(const IntegerPartition& mu, const IntegerPartition& lam) {
    if (!contains_shape(lam, mu)) return false;
    for (std::size_t i = 0; i < lam.size(); ++i)
        if (part(lam, i) - part(mu, i) > 1) return false;
    return true;
}

/// mu and lam are equal or differ by exactly one box.
inline bool is_box_step(const IntegerPartition& mu, const IntegerPartition& lam) {
    const IntegerPartition *lo = &mu, *hi = &lam;
    if (weight(mu) > weight(lam)) std::swap(lo, hi);
    return contains_shape(*hi, *lo) && weight(*hi) - weight(*lo) <= 1;
}

inline IntegerPartition componentwise_max(const IntegerPartition& a, const IntegerPartition& b) {
    IntegerPartition r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(part(a, i), part(b, i));
    return r;
}

inline IntegerPartition componentwise_min(const IntegerPartition& a, const IntegerPartition& b) {
    IntegerPartition r(std::min(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(part(a, i), part(b, i));
    normalize(r);
    return r;
}

/// Row of the unique box of hi/lo, for shapes differing by one box.
inline int box_row(const IntegerPartition& lo, const IntegerPartition& hi) {
    for (std::size_t i = 0; i < hi.size(); ++i)
        if (part(hi, i) != part(lo, i)) return (int)i;
    throw std::invalid_argument("shapes do not differ");
}

inline IntegerPartition add_box(IntegerPartition p, int row) {
    if ((int)p.size() <= row) p.resize(row + 1, 0);
    p[row]++;
    if (!is_partition_shape(p)) throw std::invalid_argument("box not addable at this row");
    return p;
}

inline IntegerPartition remove_box(IntegerPartition p, int row) {
    if (row >= (int)p.size() || p[row] == 0)
        throw std::invalid_argument("box not removable at this row");
    p[row]--;
    normalize(p);
    if (!is_partition_shape(p)) throw std::invalid_argument("box not removable at this row");
    return p;
}

/// "2,1" with "" for the empty shape; sequences of shapes join with ';'.
inline std::string shape_to_string(const IntegerPartition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

inline IntegerPartition shape_from_string(const std::string& s) {
    IntegerPartition p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        p.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (!is_partition_shape(p)) throw std::invalid_argument("not a partition: " + s);
    return p;
}

inline std::string chain_to_string(const std::vector<IntegerPartition>& chain) {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) s += ';';
        s += shape_to_string(chain[i]);
    }
    return s;
}

namespace detail {

/// Jeu-de-taquin local rule on a growth triangle: given a < b < c with
/// single-box covers, the slid shape is the unique partition between a and c
/// other than b, or b itself when there is no other.
inline IntegerPartition jdt_slide(const IntegerPartition& a, const IntegerPartition& b,
                                  const IntegerPartition& c) {
    std::vector<IntegerPartition> mids;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (part(c, i) == part(a, i)) continue;
        IntegerPartition cand = a;
        if ((int)cand.size() <= (int)i) cand.resize(i + 1, 0);
        cand[i]++;
        if (is_partition_shape(cand) && contains_shape(c, cand)) mids.push_back(cand);
    }
    if (mids.size() == 1) return mids[0];
    for (auto& m : mids)
        if (m != b) return m;
    return b;
}

/// One promotion step on a strict chain from the empty shape: removes the
/// first box and slides the rest inward.
inline std::vector<IntegerPartition> delta_chain(const std::vector<IntegerPartition>& chain) {
    const std::size_t len = chain.size();
    std::vector<IntegerPartition> out;
    out.push_back({});
    for (std::size_t j = 1; j + 1 < len; ++j)
        out.push_back(jdt_slide(out.back(), chain[j], chain[j + 1]));
    return out;
}

}  // namespace detail

/// Schuetzenberger evacuation on a chain of shapes growing from the empty
/// partition by single boxes, with stationary steps permitted.  Stationary
/// steps are stripped, the strict core is evacuated through the promotion
/// triangle, and the stationary steps reappear at the time-reversed
/// positions.  The result has the same length and the same final shape;
/// applying the map twice gives the identity.
inline std::vector<IntegerPartition> evacuate(const std::vector<IntegerPartition>& chain) {
    if (chain.empty() || !chain.front().empty())
        throw std::invalid_argument("evacuation chain must start at the empty shape");
    std::vector<bool> stationary;  // per step
    std::vector<IntegerPartition> core{chain.front()};
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!is_box_step(chain[i - 1], chain[i]) || weight(chain[i]) < weight(chain[i - 1]))
            throw std::invalid_argument("not a growing box chain");
        bool stat = chain[i] == chain[i - 1];
        stationary.push_back(stat);
        if (!stat) core.push_back(chain[i]);
    }

    const std::size_t m = core.size() - 1;
    std::vector<IntegerPartition> evac(m + 1);
    std::vector<IntegerPartition> cur = core;
    for (std::size_t j = m; j + 1 > 0; --j) {
        evac[j] = cur.back();
        cur = detail::delta_chain(cur);
        if (j == 0) break;
    }

    std::vector<IntegerPartition> out{evac[0]};
    std::size_t next = 1;
    for (std::size_t s = 0; s < stationary.size(); ++s) {
        // stationary steps at time-reversed positions
        if (stationary[stationary.size() - 1 - s])
            out.push_back(out.back());
        else
            out.push_back(evac[next++]);
    }
    return out;
}

}  // namespace cnest
