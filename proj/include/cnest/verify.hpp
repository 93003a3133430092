#pragma once

#include <chrono>
#include <random>

#include "cnest/fans.hpp"
#include "cnest/swaps.hpp"

namespace cnest {

/// Outcome of one exhaustive suite.  Failures carry the offending input in
/// the partition record format for direct replay; summary() is byte-stable
/// across runs with identical caps.
struct VerificationReport {
    std::string suite;
    Ctype type = Ctype::A;
    int n = 0;
    long long cases = 0;
    struct Failure {
        std::string input, expected, actual;
    };
    std::vector<Failure> failures;
    std::vector<std::string> notes;
    double ms = 0;

    bool pass() const { return failures.empty(); }

    std::string summary() const {
        std::ostringstream os;
        os << suite << " type=" << to_string(type) << " n=" << n << " cases=" << cases << ' '
           << (pass() ? "PASS" : "FAIL");
        for (const auto& f : failures)
            os << "\n  failure: input=" << f.input << " expected=" << f.expected
               << " actual=" << f.actual;
        for (const auto& note : notes) os << "\n  note: " << note;
        return os.str();
    }
};

namespace detail {

struct SuiteTimer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

inline void fail(VerificationReport& r, const std::string& input, const std::string& expected,
                 const std::string& actual) {
    if (r.failures.size() < 32) r.failures.push_back({input, expected, actual});
}

inline std::string fiber_key(const SetPartition& p) {
    return "op={" + join_ints(openers(p), ",") + "} cl={" + join_ints(closers(p), ",") + "}";
}

inline std::vector<std::pair<std::vector<int>, std::vector<int>>> all_configs(Ctype t, int n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (int om = 0; om < (1 << n); ++om) {
        std::vector<int> O;
        for (int e = 1; e <= n; ++e)
            if (om & (1 << (e - 1))) O.push_back(e);
        for (int cm = 0; cm < (1 << n); ++cm) {
            std::vector<int> C;
            for (int e = 1; e <= n; ++e)
                if (cm & (1 << (e - 1))) C.push_back(e);
            if (is_config(O, C, t, n)) out.emplace_back(O, C);
        }
    }
    return out;
}

}  // namespace detail

/// Statistic interchange for types A and C: openers/closers preserved,
/// (crossings, nestings) exchanged (in type C also when restricted to arcs
/// with positive opener), and the map is injective.
inline VerificationReport verify_swap(Ctype type, int n, int cap) {
    detail::SuiteTimer timer;
    VerificationReport r{type == Ctype::A ? "swap-A" : "swap-C", type, n};
    std::set<SetPartition> images;
    for_each_partition(type, n, [&](const SetPartition& p) {
        ++r.cases;
        SetPartition q = swap_map(p);
        if (openers(q) != openers(p) || closers(q) != closers(p))
            detail::fail(r, p.to_json(), detail::fiber_key(p), detail::fiber_key(q));
        auto scopes = type == Ctype::C
                          ? std::vector<PairScope>{PairScope::all_arcs, PairScope::positive_openers}
                          : std::vector<PairScope>{PairScope::all_arcs};
        for (PairScope sc : scopes) {
            std::size_t pc = crossing_number(p, sc), pn = nesting_number(p, sc);
            std::size_t qc = crossing_number(q, sc), qn = nesting_number(q, sc);
            if (qc != pn || qn != pc)
                detail::fail(r, p.to_json(),
                             "(cr,ne)=(" + std::to_string(pn) + "," + std::to_string(pc) + ")",
                             "(cr,ne)=(" + std::to_string(qc) + "," + std::to_string(qn) + ")");
        }
        if (!images.insert(q).second)
            detail::fail(r, p.to_json(), "injective image", "duplicate " + q.to_json());
    }, cap);
    r.ms = timer.elapsed_ms();
    return r;
}

/// Type B interchange: the nesting number of the input equals the crossing
/// number of the image, openers/closers preserved, injective.
inline VerificationReport verify_swap_B(int n, int cap) {
    detail::SuiteTimer timer;
    VerificationReport r{"swap-B", Ctype::B, n};
    std::set<SetPartition> images;
    for_each_partition(Ctype::B, n, [&](const SetPartition& p) {
        ++r.cases;
        SetPartition q = swap_map_B(p);
        if (openers(q) != openers(p) || closers(q) != closers(p))
            detail::fail(r, p.to_json(), detail::fiber_key(p), detail::fiber_key(q));
        std::size_t pn = nesting_number(p), qc = crossing_number(q);
        if (pn != qc)
            detail::fail(r, p.to_json(), "crossings=" + std::to_string(pn),
                         "crossings=" + std::to_string(qc));
        if (!images.insert(q).second)
            detail::fail(r, p.to_json(), "injective image", "duplicate " + q.to_json());
    }, cap);
    r.ms = timer.elapsed_ms();
    return r;
}

/// Fiber structure for types A, B, C: every opener-closer configuration
/// carries exactly one non-crossing and one non-nesting partition, the
/// constructors reproduce them, and (A, C) the swap map sends one to the
/// other.
inline VerificationReport verify_unique_ncnn(Ctype type, int n, int cap) {
    detail::SuiteTimer timer;
    VerificationReport r{"unique-ncnn", type, n};
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<SetPartition>> nc, nn;
    for_each_partition(type, n, [&](const SetPartition& p) {
        ++r.cases;
        auto key = std::make_pair(openers(p), closers(p));
        if (is_noncrossing(p)) nc[key].push_back(p);
        if (is_nonnesting(p)) nn[key].push_back(p);
    }, cap);
    for (const auto& [O, C] : detail::all_configs(type, n)) {
        auto key = std::make_pair(O, C);
        std::string keystr = "op={" + join_ints(O, ",") + "} cl={" + join_ints(C, ",") + "}";
        if (nc[key].size() != 1)
            detail::fail(r, keystr, "one non-crossing partition",
                         std::to_string(nc[key].size()) + " found");
        if (nn[key].size() != 1)
            detail::fail(r, keystr, "one non-nesting partition",
                         std::to_string(nn[key].size()) + " found");
        auto built_nc = nc_from_config(type, O, C, n);
        auto built_nn = nn_from_config(type, O, C, n);
        if (nc[key].size() == 1 && (built_nc.size() != 1 || !(built_nc[0] == nc[key][0])))
            detail::fail(r, keystr, nc[key][0].to_json(),
                         built_nc.empty() ? "none" : built_nc[0].to_json());
        if (nn[key].size() == 1 && (built_nn.size() != 1 || !(built_nn[0] == nn[key][0])))
            detail::fail(r, keystr, nn[key][0].to_json(),
                         built_nn.empty() ? "none" : built_nn[0].to_json());
        if (type != Ctype::B && nc[key].size() == 1 && nn[key].size() == 1) {
            SetPartition img = swap_map(nc[key][0]);
            if (!(img == nn[key][0]))
                detail::fail(r, keystr, nn[key][0].to_json(), img.to_json());
        }
    }
    r.ms = timer.elapsed_ms();
    return r;
}

/// Type D fibers: existence and multiplicity of non-crossing / non-nesting
/// partitions per configuration follow the parity rule, the constructors
/// reproduce the enumerated sets, two-element fibers are swapped by
/// swap_extreme, both predicates are invariant under swap_extreme, and the
/// totals match the independent product-formula count.
inline VerificationReport verify_d_fibers(int n, int cap) {
    detail::SuiteTimer timer;
    VerificationReport r{"d-fibers", Ctype::D, n};
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<SetPartition>> nc, nn;
    long long nc_total = 0, nn_total = 0;
    for_each_partition(Ctype::D, n, [&](const SetPartition& p) {
        ++r.cases;
        auto key = std::make_pair(openers(p), closers(p));
        bool pnc = is_noncrossing(p), pnn = is_nonnesting(p);
        SetPartition q = swap_extreme(p);
        if (pnc != is_noncrossing(q) || pnn != is_nonnesting(q))
            detail::fail(r, p.to_json(), "predicates stable under extreme swap", "changed");
        if (!(swap_extreme(q) == p))
            detail::fail(r, p.to_json(), "extreme swap involutive", "not involutive");
        if (pnc) {
            nc[key].push_back(p);
            ++nc_total;
        }
        if (pnn) {
            nn[key].push_back(p);
            ++nn_total;
        }
    }, cap);

    auto binom = [](long long a, long long b) {
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    long long expected_total = binom(2 * n, n) - binom(2 * n - 2, n - 1);
    if (nc_total != expected_total)
        detail::fail(r, "total non-crossing", std::to_string(expected_total),
                     std::to_string(nc_total));
    if (nn_total != expected_total)
        detail::fail(r, "total non-nesting", std::to_string(expected_total),
                     std::to_string(nn_total));

    for (const auto& [O, C] : detail::all_configs(Ctype::D, n)) {
        auto key = std::make_pair(O, C);
        std::string keystr = "op={" + join_ints(O, ",") + "} cl={" + join_ints(C, ",") + "}";
        bool n_both = std::count(O.begin(), O.end(), n) && std::count(C.begin(), C.end(), n);
        bool even = ((int)O.size() - (int)C.size()) % 2 == 0;
        std::size_t expect = !even && !n_both ? 0 : (even && n_both ? 2 : 1);
        for (auto* fibers : {&nc, &nn}) {
            auto& fib = (*fibers)[key];
            std::sort(fib.begin(), fib.end());
            if (fib.size() != expect)
                detail::fail(r, keystr, std::to_string(expect) + " partitions",
                             std::to_string(fib.size()) + " found");
            if (fib.size() == 2 && !(swap_extreme(fib[0]) == fib[1]))
                detail::fail(r, keystr, "pair exchanged by extreme swap", "not exchanged");
        }
        auto built_nc = nc_from_config(Ctype::D, O, C, n);
        auto built_nn = nn_from_config(Ctype::D, O, C, n);
        if (built_nc != nc[key])
            detail::fail(r, keystr + " non-crossing", std::to_string(nc[key].size()) + " enumerated",
                         std::to_string(built_nc.size()) + " constructed or mismatch");
        if (built_nn != nn[key])
            detail::fail(r, keystr + " non-nesting", std::to_string(nn[key].size()) + " enumerated",
                         std::to_string(built_nn.size()) + " constructed or mismatch");
    }
    r.ms = timer.elapsed_ms();
    return r;
}

/// Growth-diagram map on type C: openers/closers preserved, maximal crossing
/// and maximal nesting cardinalities exchanged, injective.  Records a
/// witness that the map is not an involution when one exists at this rank.
inline VerificationReport verify_maxswap(int n, int cap) {
    detail::SuiteTimer timer;
    VerificationReport r{"maxswap", Ctype::C, n};
    std::set<SetPartition> images;
    std::string witness;
    std::string stat_witness;
    for_each_partition(Ctype::C, n, [&](const SetPartition& p) {
        ++r.cases;
        SetPartition q = maxswap_map(p);
        if (openers(q) != openers(p) || closers(q) != closers(p))
            detail::fail(r, p.to_json(), detail::fiber_key(p), detail::fiber_key(q));
        if (max_crossing_card(q) != max_nesting_card(p) ||
            max_nesting_card(q) != max_crossing_card(p))
            detail::fail(r, p.to_json(),
                         "(mc,mn)=(" + std::to_string(max_nesting_card(p)) + "," +
                             std::to_string(max_crossing_card(p)) + ")",
                         "(mc,mn)=(" + std::to_string(max_crossing_card(q)) + "," +
                             std::to_string(max_nesting_card(q)) + ")");
        if (!images.insert(q).second)
            detail::fail(r, p.to_json(), "injective image", "duplicate " + q.to_json());
        if (witness.empty() && !(maxswap_map(q) == p)) witness = p.to_json();
        if (stat_witness.empty() &&
            (crossing_number(q) != nesting_number(p) || nesting_number(q) != crossing_number(p)))
            stat_witness = p.to_json();
    }, cap);
    r.notes.push_back(witness.empty() ? "no non-involution witness at this rank"
                                      : "not an involution, witness " + witness);
    r.notes.push_back(stat_witness.empty()
                          ? "crossing/nesting numbers exchanged at this rank"
                          : "does not exchange crossing/nesting numbers, witness " + stat_witness);
    r.ms = timer.elapsed_ms();
    return r;
}

/// Backward growth inverts forward growth on every partition filling of both
/// kinds; for n <= 3 the vacillating-plus-parity label sequences are exactly
/// the border sequences of fillings, in bijection.
inline VerificationReport verify_growth_roundtrip(int n, int cap) {
    detail::SuiteTimer timer;
    VerificationReport r{"growth-roundtrip", Ctype::C, n};
    long long fillings = 0;
    std::set<std::string> label_strings[2];
    for_each_partition(Ctype::C, n, [&](const SetPartition& p) {
        for (Order kind : {Order::nesting, Order::crossing}) {
            ++r.cases;
            ++fillings;
            Filling f = partition_to_filling(p, kind);
            BorderLabels b = forward_growth(f);
            label_strings[kind == Order::crossing].insert(chain_to_string(b.staircase));
            try {
                Filling g = backward_growth(b.staircase, kind, n);
                if (!(g == f)) detail::fail(r, p.to_json(), "round trip identity", "differs");
                SetPartition back = filling_to_partition(g);
                if (!(back == p))
                    detail::fail(r, p.to_json(), "partition round trip", back.to_json());
            } catch (const std::exception& e) {
                detail::fail(r, p.to_json(), "backward growth succeeds", e.what());
            }
        }
    }, cap);
    fillings /= 2;

    if (n <= 3) {
        // enumerate all vacillating sequences with the parity condition and
        // compare fibers against the fillings
        for (Order kind : {Order::nesting, Order::crossing}) {
            long long ok = 0;
            std::vector<IntegerPartition> seq;
            std::function<void(int)> rec = [&](int i) {
                if (i == 2 * n - 1) {
                    try {
                        detail::check_vacillating(seq, kind);
                    } catch (const std::exception&) {
                        return;
                    }
                    ++r.cases;
                    try {
                        Filling f = backward_growth(seq, kind, n);
                        BorderLabels b = forward_growth(f);
                        if (b.staircase != seq)
                            detail::fail(r, chain_to_string(seq), "labels reproduce", "differ");
                        ++ok;
                    } catch (const std::exception& e) {
                        detail::fail(r, chain_to_string(seq), "a filling exists", e.what());
                    }
                    return;
                }
                // grow-or-equal / shrink-or-equal alternation
                const IntegerPartition prev = seq.empty() ? IntegerPartition{} : seq.back();
                std::vector<IntegerPartition> nexts{prev};
                if (i % 2 == 0) {
                    for (int row = 0; row <= (int)prev.size(); ++row) {
                        try {
                            nexts.push_back(add_box(prev, row));
                        } catch (const std::exception&) {
                        }
                    }
                } else {
                    for (int row = 0; row < (int)prev.size(); ++row) {
                        try {
                            nexts.push_back(remove_box(prev, row));
                        } catch (const std::exception&) {
                        }
                    }
                }
                for (auto& q : nexts) {
                    seq.push_back(q);
                    rec(i + 1);
                    seq.pop_back();
                }
            };
            rec(0);
            if (ok != fillings)
                detail::fail(r, "label sequence count",
                             std::to_string(fillings) + " fillings",
                             std::to_string(ok) + " valid sequences");
            if ((long long)label_strings[kind == Order::crossing].size() != fillings)
                detail::fail(r, "distinct label sequences", std::to_string(fillings),
                             std::to_string(label_strings[kind == Order::crossing].size()));
        }
    }
    r.ms = timer.elapsed_ms();
    return r;
}

namespace detail {

/// Pseudo-random partition filling: shuffle the cells and keep each that
/// stays within the set partition conditions.
inline Filling random_partition_filling(Order kind, int n, std::mt19937& rng) {
    Filling f(kind, n);
    CellGrid g;
    g.build(Polyomino{kind, n}, false);
    std::vector<int> order((int)g.cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int idx : order) {
        auto [c, y] = g.cells[idx];
        f.set(c, y, 1);
        bool keep = f.is_partition_filling();
        if (keep && f.poly().row_label(y) < 0) {
            auto [mc, my] = f.poly().mirror(c, y);
            f.set(mc, my, 1);
            keep = f.is_partition_filling();
            if (!keep) f.set(mc, my, 0);
        }
        if (!keep) f.set(c, y, 0);
    }
    return f;
}

inline Filling random_arbitrary_filling(Order kind, int n, int max_entry, std::mt19937& rng) {
    Filling f(kind, n);
    std::uniform_int_distribution<int> d(0, max_entry);
    std::uniform_int_distribution<int> keep(0, 2);
    for (int c = 1; c <= n; ++c)
        for (int y = c - 1; y < 2 * n - 1; ++y)
            if (keep(rng) == 0) f.set(c, y, d(rng));
    return f;
}

}  // namespace detail

/// Local growth rules against the brute-force chain labels: exhaustive over
/// all partition fillings for n <= 3, randomized otherwise.
inline VerificationReport verify_greene_oracle(int n, int cap, int samples = 10000) {
    detail::SuiteTimer timer;
    VerificationReport r{"greene-oracle", Ctype::C, n};
    auto check = [&](const Filling& f, const std::string& what) {
        ++r.cases;
        BorderLabels lhs = forward_growth(f), rhs = greene_labels(f);
        if (!(lhs == rhs))
            detail::fail(r, what, chain_to_string(rhs.staircase), chain_to_string(lhs.staircase));
    };
    if (n <= 3) {
        for_each_partition(Ctype::C, n, [&](const SetPartition& p) {
            for (Order kind : {Order::nesting, Order::crossing})
                check(partition_to_filling(p, kind), p.to_json());
        }, cap);
    } else {
        std::mt19937 rng(20240811u + n);
        for (int s = 0; s < samples; ++s) {
            Order kind = (s % 2) ? Order::crossing : Order::nesting;
            Filling f = detail::random_partition_filling(kind, n, rng);
            check(f, "random filling " + std::to_string(s));
        }
    }
    r.ms = timer.elapsed_ms();
    return r;
}

/// Chain lengths in the polyomino encodings against the clique statistics.
inline VerificationReport verify_lemma_chains(int n, int cap) {
    detail::SuiteTimer timer;
    VerificationReport r{"lemma-chains", Ctype::C, n};
    for_each_partition(Ctype::C, n, [&](const SetPartition& p) {
        ++r.cases;
        int ne = longest_ne_chain(partition_to_filling(p, Order::nesting));
        int se = longest_se_chain(partition_to_filling(p, Order::crossing));
        int mn = max_nesting_card(p), mc = max_crossing_card(p);
        int arcs_n = (int)arcs(p, Order::nesting).size();
        if (ne != (arcs_n ? mn : 0))
            detail::fail(r, p.to_json(), "ne-chain=" + std::to_string(mn),
                         "ne-chain=" + std::to_string(ne));
        if (se != (arcs_n ? mc : 0))
            detail::fail(r, p.to_json(), "se-chain=" + std::to_string(mc),
                         "se-chain=" + std::to_string(se));
    }, cap);
    r.ms = timer.elapsed_ms();
    return r;
}

/// Triangulation, fan and maximal-filling counts agree for every chain
/// statistic; fan/filling round trips are exact; diagonal crossings agree
/// with the partition statistics; and a pair of diagonals witnesses that
/// negating one side may create a crossing.
inline VerificationReport verify_fans_triangulations(int n, int cap, int jobs = 1) {
    detail::SuiteTimer timer;
    VerificationReport r{"fans-triangulations", Ctype::C, n};
    auto tri = maximal_filling_counts(Order::crossing, n, jobs, cap);
    auto fill = maximal_filling_counts(Order::nesting, n, jobs, cap);
    for (int k = 0; k <= n; ++k) {
        ++r.cases;
        long long fans = count_symmetric_fans(n, k, std::max(cap, 6));
        if (tri[k] != fans || fill[k] != fans)
            detail::fail(r, "k=" + std::to_string(k), "equal counts",
                         std::to_string(tri[k]) + " triangulations, " + std::to_string(fans) +
                             " fans, " + std::to_string(fill[k]) + " maximal fillings");
    }

    // round trips over all fans with few paths
    std::function<void(DyckFan&, int)> visit = [&](DyckFan& fan, int kk) {
        Filling f = fan_to_filling(fan);
        ++r.cases;
        DyckFan back = filling_to_fan(f);
        if (!(back.paths == fan.paths))
            detail::fail(r, f.to_text(), "fan round trip identity", "differs");
        if (!is_maximal_filling(f, Order::nesting, kk))
            detail::fail(r, f.to_text(), "fan image maximal at k=" + std::to_string(kk), "not");
    };
    for (int k = 1; k <= std::min(n, 3); ++k) {
        Polyomino poly{Order::nesting, n};
        std::set<std::pair<int, int>> used;
        DyckFan fan{n, {}};
        std::vector<std::pair<int, int>> path;
        std::function<void(int)> next_path = [&](int t) {
            if (t > k) {
                visit(fan, k);
                return;
            }
            std::function<void(int, int)> walk = [&](int c, int y) {
                if (!poly.exists(c, y) || !poly.in_fan_region(c, y) || used.count({c, y}))
                    return;
                used.insert({c, y});
                path.push_back({c, y});
                if (poly.on_diagonal(c, y)) {
                    fan.paths.push_back(path);
                    std::vector<std::pair<int, int>> saved;
                    saved.swap(path);
                    next_path(t + 1);
                    path.swap(saved);
                    fan.paths.pop_back();
                } else {
                    walk(c, y + 1);
                    walk(c + 1, y);
                }
                path.pop_back();
                used.erase({c, y});
            };
            walk(t, t - 1);
        };
        next_path(1);
    }

    // diagonal crossings agree with the partition crossing relation
    if (n <= 3) {
        for_each_partition(Ctype::C, n, [&](const SetPartition& p) {
            ++r.cases;
            std::vector<std::pair<int, int>> ds;
            for (const Arc& a : arcs(p, Order::crossing)) ds.emplace_back(a.opener, a.closer);
            DiagonalSet dset(n, ds);
            if (dset.max_crossing() != ((int)ds.size() ? max_crossing_card(p) : 0))
                detail::fail(r, p.to_json(), "diagonal crossing agrees", "differs");
        }, cap);
    }

    // a diagonal pair that does not cross although one negated partner does
    bool found = false;
    std::string witness;
    std::vector<int> verts;
    for (int e = 1; e <= n; ++e) verts.push_back(e);
    for (int e = 1; e <= n; ++e) verts.push_back(-e);
    for (int a : verts)
        for (int b : verts)
            for (int c : verts)
                for (int d : verts) {
                    if (a == b || c == d || found) continue;
                    try {
                        DiagonalSet s(n, {{a, b}});
                        if (!s.crosses({a, b}, {c, d}) && s.crosses({a, b}, {-c, -d}) &&
                            std::set<int>{a, b, c, d}.size() +
                                    std::set<int>{a, b, -c, -d}.size() ==
                                8) {
                            found = true;
                            witness = "{" + std::to_string(a) + "," + std::to_string(b) +
                                      "} vs {" + std::to_string(c) + "," + std::to_string(d) + "}";
                        }
                    } catch (const std::exception&) {
                    }
                }
    r.notes.push_back(found ? "negation-sensitive crossing witness: " + witness
                            : "no negation-sensitive crossing pair at this rank");
    if (n >= 3 && !found)
        detail::fail(r, "negation witness", "exists for rank >= 3", "none found");
    r.ms = timer.elapsed_ms();
    return r;
}

/// Counting identity between the two polyomino kinds for arbitrary fillings,
/// by entry sum, support size and chain statistic; plus entry-sum
/// preservation and round trips of the semistandard growth.
inline VerificationReport verify_nml(int n, int cap, int max_sum = 4) {
    detail::SuiteTimer timer;
    VerificationReport r{"nml", Ctype::C, n};
    for (int m = 1; m <= max_sum; ++m) {
        for (int l = 1; l <= m; ++l) {
            for (int k = 0; k <= 2 * n; ++k) {
                ++r.cases;
                long long N = nml_count(Order::nesting, n, k, m, l, ChainWeight::support, cap);
                long long C = nml_count(Order::crossing, n, k, m, l, ChainWeight::support, cap);
                if (N != C)
                    detail::fail(r,
                                 "m=" + std::to_string(m) + " l=" + std::to_string(l) +
                                     " k=" + std::to_string(k),
                                 "N=" + std::to_string(N), "C=" + std::to_string(C));
            }
        }
    }

    std::mt19937 rng(911u + n);
    for (int s = 0; s < 200; ++s) {
        Order kind = (s % 2) ? Order::crossing : Order::nesting;
        Filling f = detail::random_arbitrary_filling(kind, n, 3, rng);
        ++r.cases;
        BorderLabels b = semistandard_forward(f);
        long long boxes = weight(b.staircase[0]);
        for (int c = 2; c <= n; ++c)
            boxes += weight(b.staircase[2 * c - 2]) - weight(b.staircase[2 * c - 3]);
        if (boxes != f.total())
            detail::fail(r, f.to_text(), "sum " + std::to_string(f.total()),
                         "boxes " + std::to_string(boxes));
        try {
            Filling g = semistandard_backward(b);
            if (!(g == f)) detail::fail(r, f.to_text(), "semistandard round trip", "differs");
        } catch (const std::exception& e) {
            detail::fail(r, f.to_text(), "semistandard backward succeeds", e.what());
        }
    }
    r.ms = timer.elapsed_ms();
    return r;
}

inline VerificationReport verify_suite(const std::string& name, Ctype type, int n, int cap = 6,
                                       int jobs = 1) {
    if (name == "swap-A") return verify_swap(Ctype::A, n, cap);
    if (name == "swap-C") return verify_swap(Ctype::C, n, cap);
    if (name == "swap-B") return verify_swap_B(n, cap);
    if (name == "unique-ncnn") return verify_unique_ncnn(type, n, cap);
    if (name == "d-fibers") return verify_d_fibers(n, cap);
    if (name == "maxswap") return verify_maxswap(n, cap);
    if (name == "growth-roundtrip") return verify_growth_roundtrip(n, cap);
    if (name == "greene-oracle") return verify_greene_oracle(n, cap);
    if (name == "lemma-chains") return verify_lemma_chains(n, cap);
    if (name == "fans-triangulations")
        return verify_fans_triangulations(n, std::max(cap, 5), jobs);
    if (name == "nml") return verify_nml(n, std::min(cap, 3));
    throw std::invalid_argument("unknown suite: " + name);
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "swap-A",       "swap-C",           "swap-B",       "unique-ncnn",
        "d-fibers",     "maxswap",          "growth-roundtrip", "greene-oracle",
        "lemma-chains", "fans-triangulations", "nml"};
    return names;
}

/// Distribution of the pair statistics over the opener-closer fibers.
struct FiberTable {
    Ctype type;
    int n;
    struct Row {
        std::vector<int> op, cl;
        long long count = 0;
        std::map<std::array<int, 4>, long long> dist;  // (cr, ne, maxcross, maxnest)
    };
    std::vector<Row> rows;
    long long total = 0;

    std::string to_csv() const {
        std::ostringstream os;
        os << "type,n,op,cl,count,distribution\n";
        for (const auto& row : rows) {
            os << to_string(type) << ',' << n << ',' << join_ints(row.op) << ','
               << join_ints(row.cl) << ',' << row.count << ',';
            bool first = true;
            for (const auto& [key, c] : row.dist) {
                if (!first) os << ';';
                first = false;
                os << key[0] << ':' << key[1] << ':' << key[2] << ':' << key[3] << '=' << c;
            }
            os << '\n';
        }
        return os.str();
    }
};

inline FiberTable distribution_table(Ctype type, int n, int cap = 6) {
    FiberTable t{type, n, {}, 0};
    std::map<std::pair<std::vector<int>, std::vector<int>>, FiberTable::Row> rows;
    for_each_partition(type, n, [&](const SetPartition& p) {
        PairStatistics s = pair_statistics(p);
        auto& row = rows[{s.op, s.cl}];
        row.op = s.op;
        row.cl = s.cl;
        row.count++;
        row.dist[{(int)s.crossings, (int)s.nestings, s.maxcross, s.maxnest}]++;
        t.total++;
    }, cap);
    for (auto& [_, row] : rows) t.rows.push_back(row);
    return t;
}

}  // namespace cnest
