#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "cnest/core.hpp"

namespace cnest {

/// A set partition of the ground set of a classical type, kept in canonical
/// form: block elements sorted by nesting position, blocks sorted by the
/// nesting position of their minimum.  Canonical form makes partitions
/// comparable by value, which is how all bijections here are verified.
class SetPartition {
  public:
    SetPartition(Ctype type, int rank, std::vector<std::vector<int>> blocks)
        : type_(type), rank_(rank), blocks_(std::move(blocks)) {
        validate_and_canonicalize();
    }

    Ctype ctype() const { return type_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// Index of the self-negative block, if present.
    std::optional<std::size_t> zero_block() const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (is_self_negative(blocks_[i])) return i;
        }
        return std::nullopt;
    }

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.type_ == b.type_ && a.rank_ == b.rank_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        if (a.type_ != b.type_) return a.type_ < b.type_;
        if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
        return a.blocks_ < b.blocks_;
    }

    /// Canonical one-line record, e.g.
    /// {"type":"C","n":5,"blocks":[[1,2,4,-4,-2,-1],[3,-5],[5,-3]]}
    /// Emission is byte-stable: parsing and re-emitting reproduces the string.
    std::string to_json() const {
        std::ostringstream os;
        os << "{\"type\":\"" << to_string(type_) << "\",\"n\":" << rank_ << ",\"blocks\":[";
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) os << ',';
            os << '[';
            for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
                if (j) os << ',';
                os << blocks_[i][j];
            }
            os << ']';
        }
        os << "]}";
        return os.str();
    }

    static SetPartition from_json(const std::string& text);

  private:
    static bool is_self_negative(const std::vector<int>& b) {
        std::set<int> s(b.begin(), b.end());
        for (int e : b)
            if (!s.count(-e)) return false;
        return true;
    }

    void validate_and_canonicalize() {
        if (rank_ < 1) throw std::invalid_argument("rank must be at least 1");
        const bool sgn = is_signed_type(type_);

        std::set<int> seen;
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("blocks must be non-empty");
            for (int e : b) {
                if (e == 0) throw std::invalid_argument("0 is not a ground set element");
                if (!sgn && e < 0)
                    throw std::invalid_argument("type A ground set is positive");
                if (e < -rank_ || e > rank_)
                    throw std::invalid_argument("element outside ground set");
                if (!seen.insert(e).second)
                    throw std::invalid_argument("blocks overlap: element repeated");
            }
        }
        const std::size_t want = sgn ? 2u * rank_ : (std::size_t)rank_;
        if (seen.size() != want)
            throw std::invalid_argument("blocks do not cover the ground set");

        if (sgn) {
            std::set<std::vector<int>> keyset;
            for (auto b : blocks_) {
                std::sort(b.begin(), b.end());
                keyset.insert(b);
            }
            int zero_blocks = 0;
            for (auto b : blocks_) {
                std::vector<int> nb;
                for (int e : b) nb.push_back(-e);
                std::sort(nb.begin(), nb.end());
                if (!keyset.count(nb))
                    throw std::invalid_argument("symmetry violation: negated block missing");
                std::sort(b.begin(), b.end());
                if (nb == b) ++zero_blocks;
            }
            if (zero_blocks > 1)
                throw std::invalid_argument("more than one zero block");
            if (type_ == Ctype::D && zero_blocks == 1) {
                for (const auto& b : blocks_) {
                    if (b.size() == 2 && is_self_negative(b))
                        throw std::invalid_argument("zero block is single pair");
                }
            }
        }

        auto pos = [&](int e) { return nesting_pos(type_, rank_, e); };
        for (auto& b : blocks_)
            std::sort(b.begin(), b.end(), [&](int x, int y) { return pos(x) < pos(y); });
        std::sort(blocks_.begin(), blocks_.end(),
                  [&](const auto& x, const auto& y) { return pos(x[0]) < pos(y[0]); });
    }

    Ctype type_;
    int rank_;
    std::vector<std::vector<int>> blocks_;
};

inline SetPartition make_partition(Ctype type, int rank, std::vector<std::vector<int>> blocks) {
    return SetPartition(type, rank, std::move(blocks));
}

/// Arcs of the diagram of the given kind.  Every block contributes the pairs
/// of elements consecutive in the nesting order.  In type B nesting diagrams
/// the zero block is augmented by the position 0 between its largest positive
/// element and that element's negative; crossing diagrams never contain 0.
inline std::vector<Arc> arcs(const SetPartition& p, Order kind) {
    std::vector<Arc> out;
    const bool splice_zero = (p.ctype() == Ctype::B && kind == Order::nesting);
    for (const auto& block : p.blocks()) {
        std::vector<int> chain = block;  // already in nesting order
        if (splice_zero) {
            std::set<int> s(block.begin(), block.end());
            bool selfneg = true;
            for (int e : block)
                if (!s.count(-e)) { selfneg = false; break; }
            if (selfneg) {
                chain.clear();
                for (int e : block)
                    if (e > 0) chain.push_back(e);
                chain.push_back(0);
                for (int e : block)
                    if (e < 0) chain.push_back(e);
            }
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            out.push_back(Arc{chain[i], chain[i + 1], kind});
    }
    std::sort(out.begin(), out.end(), [&](const Arc& a, const Arc& b) {
        auto key = [&](int e) { return nesting_pos(p.ctype(), p.rank(), e, true); };
        if (key(a.opener) != key(b.opener)) return key(a.opener) < key(b.opener);
        return key(a.closer) < key(b.closer);
    });
    return out;
}

/// Openers: non-maximal block elements; for signed types only the positive
/// ones, with respect to the nesting order.  0 is neither opener nor closer.
inline std::vector<int> openers(const SetPartition& p) {
    std::vector<int> out;
    for (const auto& b : p.blocks())
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (!is_signed_type(p.ctype()) || b[i] > 0) out.push_back(b[i]);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> closers(const SetPartition& p) {
    std::vector<int> out;
    for (const auto& b : p.blocks())
        for (std::size_t i = 1; i < b.size(); ++i)
            if (!is_signed_type(p.ctype()) || b[i] > 0) out.push_back(b[i]);
    std::sort(out.begin(), out.end());
    return out;
}

/// Opener-closer configuration test: |O ∩ [k]| >= |C ∩ [k+1]| for all
/// 0 <= k < n, and additionally |O| = |C| in type A.
inline bool is_config(const std::vector<int>& openers_in, const std::vector<int>& closers_in,
                      Ctype type, int n) {
    std::set<int> O(openers_in.begin(), openers_in.end());
    std::set<int> C(closers_in.begin(), closers_in.end());
    for (int e : O)
        if (e < 1 || e > n) return false;
    for (int e : C)
        if (e < 1 || e > n) return false;
    if (type == Ctype::A && O.size() != C.size()) return false;
    int o = 0, c = 0;
    for (int k = 0; k < n; ++k) {
        o += O.count(k) ? 1 : 0;        // |O ∩ [k]|
        c += C.count(k + 1) ? 1 : 0;    // |C ∩ [k+1]|
        if (o < c) return false;
    }
    return true;
}

/// Exchange n and -n in every block (type D only).
inline SetPartition swap_extreme(const SetPartition& p) {
    if (p.ctype() != Ctype::D) throw std::invalid_argument("swap_extreme requires type D");
    const int n = p.rank();
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks()) {
        std::vector<int> nb;
        for (int e : b) nb.push_back(e == n ? -n : e == -n ? n : e);
        blocks.push_back(std::move(nb));
    }
    return SetPartition(p.ctype(), n, std::move(blocks));
}

namespace detail {

/// Build a partition from a collection of arcs (pairs of elements in one
/// block); elements not touched by any arc become singletons.
inline SetPartition assemble(Ctype type, int n, const std::vector<Arc>& as) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int e = 1; e <= n; ++e) {
        parent[e] = e;
        if (is_signed_type(type)) parent[-e] = -e;
    }
    for (const Arc& a : as) {
        int ra = find(a.opener), rb = find(a.closer);
        if (ra != rb) parent[ra] = rb;
    }
    std::map<int, std::vector<int>> comp;
    for (auto& [e, _] : parent) comp[find(e)].push_back(e);
    std::vector<std::vector<int>> blocks;
    for (auto& [_, b] : comp) blocks.push_back(b);
    return SetPartition(type, n, std::move(blocks));
}

/// Visit every set partition of m items (as restricted-growth strings) in
/// lexicographic order.
inline void for_each_rgs(int m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> rgs(m, 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == m) {
            fn(rgs);
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    if (m == 0) {
        fn(rgs);
        return;
    }
    rec(0, -1);
}

}  // namespace detail

/// All valid partitions of the given type and rank, in a deterministic order.
/// Generation walks restricted-growth strings over the nesting-ordered ground
/// set and keeps the strings whose partition satisfies the type's symmetry
/// and zero-block rules.
inline void for_each_partition(Ctype type, int n, const std::function<void(const SetPartition&)>& fn,
                               int cap = 6) {
    if (n > cap) throw std::invalid_argument("cap exceeded: rank above enumeration cap");
    if (n < 1) throw std::invalid_argument("rank must be at least 1");

    std::vector<int> ground;
    if (type == Ctype::A) {
        for (int e = 1; e <= n; ++e) ground.push_back(e);
    } else {
        for (int e = 1; e <= n; ++e) ground.push_back(e);
        for (int e = n; e >= 1; --e) ground.push_back(-e);
    }

    detail::for_each_rgs((int)ground.size(), [&](const std::vector<int>& rgs) {
        int nblocks = 0;
        for (int v : rgs) nblocks = std::max(nblocks, v + 1);
        std::vector<std::vector<int>> blocks(nblocks);
        for (std::size_t i = 0; i < rgs.size(); ++i) blocks[rgs[i]].push_back(ground[i]);
        if (is_signed_type(type)) {
            // cheap symmetry pre-checks before constructing
            std::set<std::vector<int>> keys;
            for (auto b : blocks) {
                std::sort(b.begin(), b.end());
                keys.insert(b);
            }
            int zero = 0;
            bool ok = true;
            for (auto b : blocks) {
                std::vector<int> nb;
                for (int e : b) nb.push_back(-e);
                std::sort(nb.begin(), nb.end());
                std::sort(b.begin(), b.end());
                if (!keys.count(nb)) { ok = false; break; }
                if (nb == b) {
                    ++zero;
                    if (type == Ctype::D && b.size() == 2) { ok = false; break; }
                }
            }
            if (!ok || zero > 1) return;
        }
        fn(SetPartition(type, n, std::move(blocks)));
    });
}

inline std::vector<SetPartition> enumerate_partitions(Ctype type, int n, int cap = 6) {
    std::vector<SetPartition> out;
    for_each_partition(type, n, [&](const SetPartition& p) { out.push_back(p); }, cap);
    return out;
}

}  // namespace cnest
