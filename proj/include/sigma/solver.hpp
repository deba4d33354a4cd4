#ifndef SIGMA_SOLVER_HPP
#define SIGMA_SOLVER_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "sigma/core.hpp"
#include "sigma/orient.hpp"

// Complete decision procedure for "does this partition admit a transitive
// sigma_n-orientation".
//
// Search space reduction: sigma-orbits of edges are chains of forced
// orientation equalities, broken only at label-(k-1) positions where a
// reversal is permitted.  One boolean variable per maximal arc between
// consecutive label-(k-1) positions.  Transitivity of a tournament is
// equivalent to having no directed triangle, which becomes one ternary
// clause pair per vertex triple.  A chronological-backtracking DPLL with
// unit propagation decides the instance.

namespace sigma {

struct too_large_error : error { using error::error; };

enum class SolveStatus { sat, unsat, budget_exceeded };

struct SolveStats {
    long long nodes = 0;   // decisions explored
    double millis = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::unsat;
    std::optional<VertexOrdering> witness;
    SolveStats stats;
};

struct Budget {
    long long max_nodes = 100'000'000;
    double max_seconds = 60.0;
};

namespace detail {

// Per-edge orientation literal: oriented(u,v) = assign[var] XOR xb,
// for the unordered edge {u,v} with u < v, meaning "points from u to v".
struct EdgeLit {
    int var = -1;
    int xb = 0;
};

struct OrientationCnf {
    int n = 0;
    int nvars = 0;
    std::vector<EdgeLit> edge;                  // indexed by edge id
    std::vector<std::vector<int>> clauses;      // literals 2*var+sign, true iff assign[var]^sign
    bool trivially_unsat = false;

    int edge_id(int u, int v) const { return u * n + v; } // u < v

    bool oriented_uv(int u, int v, const std::vector<int>& assign) const {
        const EdgeLit& e = edge[static_cast<size_t>(edge_id(u, v))];
        return (assign[static_cast<size_t>(e.var)] ^ e.xb) != 0;
    }
};

inline OrientationCnf build_cnf(const PartitionLabeling& p) {
    const int n = p.n();
    const int k = p.k();
    OrientationCnf cnf;
    cnf.n = n;
    cnf.edge.assign(static_cast<size_t>(n) * static_cast<size_t>(n), EdgeLit{});

    // s-bit per orbit position: 0 = edge {i, i+d} points from i to i+d.
    // sigma maps position i to i+1; a non-(k-1) label forbids reversal,
    // chaining s_{i+1} = s_i.  The diameter orbit (d = n/2) wraps onto
    // itself with flipped representative, adding one XOR 1 twist.
    for (int d = 1; d <= n / 2; ++d) {
        bool diameter = (2 * d == n);
        int len = diameter ? n / 2 : n;
        std::vector<int> freepos;
        for (int i = 0; i < len; ++i)
            if (mod(p.ext(d) + i, k) == k - 1) freepos.push_back(i);
        if (freepos.empty()) {
            // Only possible on the diameter orbit; the wrap twist then
            // forces a reversal of a non-(k-1) edge.
            cnf.trivially_unsat = true;
            return cnf;
        }
        int r = static_cast<int>(freepos.size());
        for (int a = 0; a < r; ++a) {
            int var = cnf.nvars++;
            int start = mod(freepos[static_cast<size_t>(a)] + 1, len);
            int stop = freepos[static_cast<size_t>((a + 1) % r)]; // inclusive
            int offset = 0;
            int pos = start;
            while (true) {
                // record s_pos = var ^ offset for edge {pos, pos+d}
                int u = pos % n, v = (pos + d) % n;
                int lo = std::min(u, v), hi = std::max(u, v);
                // oriented(lo,hi): rep arrow is u -> v; flip when u > v.
                int flip = (u > v) ? 1 : 0;
                EdgeLit& e = cnf.edge[static_cast<size_t>(cnf.edge_id(lo, hi))];
                e.var = var;
                e.xb = offset ^ flip ^ 1; // oriented(lo,hi) iff s==0 when flip==0
                if (pos == stop) break;
                if (diameter && pos == len - 1) offset ^= 1;
                pos = (pos + 1) % len;
            }
        }
    }

    // Forbid both directed triangles on every triple u < v < w.
    std::set<std::vector<int>> seen;
    auto add_clause = [&](std::array<int, 3> lits) {
        std::vector<int> cl;
        for (int l : lits) {
            bool taut = false, dup = false;
            for (int q : cl) {
                if (q == l) dup = true;
                if (q == (l ^ 1)) taut = true;
            }
            if (taut) return;
            if (!dup) cl.push_back(l);
        }
        std::sort(cl.begin(), cl.end());
        if (seen.insert(cl).second) cnf.clauses.push_back(std::move(cl));
    };
    // Literal 2*var + s is true iff assign[var] ^ s == 1; oriented(u,v)
    // equals assign ^ xb, so its positive literal carries sign xb.
    auto lit_for = [&](int u, int v, bool positive) {
        const EdgeLit& e = cnf.edge[static_cast<size_t>(cnf.edge_id(u, v))];
        int s = e.xb ^ (positive ? 0 : 1);
        return 2 * e.var + s;
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                // cycle u->v->w->u:  b(u,v) & b(v,w) & !b(u,w)
                add_clause({lit_for(u, v, false), lit_for(v, w, false), lit_for(u, w, true)});
                // cycle u->w->v->u: !b(u,v) & !b(v,w) & b(u,w)
                add_clause({lit_for(u, v, true), lit_for(v, w, true), lit_for(u, w, false)});
            }
    return cnf;
}

// Recovers the vertex ordering from a satisfying orientation: in a
// transitive tournament out-degrees are n-1, n-2, ..., 0.
inline VertexOrdering ordering_from_model(const OrientationCnf& cnf, const std::vector<int>& assign) {
    const int n = cnf.n;
    std::vector<int> outdeg(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            ++outdeg[static_cast<size_t>(cnf.oriented_uv(u, v, assign) ? u : v)];
    std::vector<int> tau(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        int d = outdeg[static_cast<size_t>(v)];
        tau[static_cast<size_t>(n - 1 - d)] = v;
    }
    return VertexOrdering{std::move(tau)};
}

// DPLL with unit propagation over occurrence lists.  Deterministic:
// lowest unassigned variable first, value 0 first.  on_model returns
// false to stop the search (solve) or true to keep enumerating.
template <class OnModel>
inline SolveStatus dpll_search(const OrientationCnf& cnf, const Budget& budget, SolveStats& stats,
                               OnModel on_model) {
    const int nv = cnf.nvars;
    const auto& clauses = cnf.clauses;
    const int nc = static_cast<int>(clauses.size());

    std::vector<std::vector<int>> occ(static_cast<size_t>(2 * nv)); // clauses containing literal
    for (int ci = 0; ci < nc; ++ci)
        for (int l : clauses[static_cast<size_t>(ci)]) occ[static_cast<size_t>(l)].push_back(ci);

    std::vector<int> assign(static_cast<size_t>(nv), -1);
    std::vector<int> trail;
    trail.reserve(static_cast<size_t>(nv));
    struct Frame {
        int var;
        int trail_mark;
        bool flipped;
    };
    std::vector<Frame> stack;

    auto started = std::chrono::steady_clock::now();
    auto out_of_budget = [&]() {
        if (stats.nodes > budget.max_nodes) return true;
        if ((stats.nodes & 1023) == 0) {
            double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            if (sec > budget.max_seconds) return true;
        }
        return false;
    };

    // Sets var=val, propagates units; returns false on conflict.
    auto propagate = [&](int var, int val) -> bool {
        size_t head = trail.size();
        assign[static_cast<size_t>(var)] = val;
        trail.push_back(var);
        while (head < trail.size()) {
            int v = trail[head++];
            int falsified = 2 * v + assign[static_cast<size_t>(v)]; // lit with sign==val is false: value=assign^sign=0
            for (int ci : occ[static_cast<size_t>(falsified)]) {
                const auto& cl = clauses[static_cast<size_t>(ci)];
                int unassigned = -1;
                bool satisfied = false;
                int free_count = 0;
                for (int l : cl) {
                    int lv = l >> 1, ls = l & 1;
                    int a = assign[static_cast<size_t>(lv)];
                    if (a == -1) {
                        ++free_count;
                        unassigned = l;
                    } else if ((a ^ ls) == 1) {
                        satisfied = true;
                        break;
                    }
                }
                if (satisfied) continue;
                if (free_count == 0) return false;
                if (free_count == 1) {
                    int lv = unassigned >> 1, ls = unassigned & 1;
                    assign[static_cast<size_t>(lv)] = ls ^ 1; // make literal true
                    trail.push_back(lv);
                }
            }
        }
        return true;
    };

    auto undo_to = [&](int mark) {
        while (static_cast<int>(trail.size()) > mark) {
            assign[static_cast<size_t>(trail.back())] = -1;
            trail.pop_back();
        }
    };

    auto pick_var = [&]() {
        for (int v = 0; v < nv; ++v)
            if (assign[static_cast<size_t>(v)] == -1) return v;
        return -1;
    };

    bool budget_hit = false;
    bool sat_seen = false;

    // Seed: empty-clause check.
    for (const auto& cl : clauses)
        if (cl.empty()) return SolveStatus::unsat;

    bool conflict = false;
    while (true) {
        if (!conflict) {
            int v = pick_var();
            if (v == -1) {
                sat_seen = true;
                if (!on_model(assign)) return SolveStatus::sat;
                conflict = true; // keep enumerating
            } else {
                ++stats.nodes;
                if (out_of_budget()) {
                    budget_hit = true;
                    break;
                }
                stack.push_back({v, static_cast<int>(trail.size()), false});
                conflict = !propagate(v, 0);
            }
        } else {
            // backtrack chronologically
            bool advanced = false;
            while (!stack.empty()) {
                Frame f = stack.back();
                stack.pop_back();
                undo_to(f.trail_mark);
                if (!f.flipped) {
                    ++stats.nodes;
                    if (out_of_budget()) {
                        budget_hit = true;
                        break;
                    }
                    stack.push_back({f.var, f.trail_mark, true});
                    conflict = !propagate(f.var, 1);
                    advanced = true;
                    break;
                }
            }
            if (budget_hit) break;
            if (!advanced) break; // exhausted
        }
    }
    if (budget_hit) return SolveStatus::budget_exceeded;
    return sat_seen ? SolveStatus::sat : SolveStatus::unsat;
}

} // namespace detail

// Decide whether s admits a transitive sigma_n-orientation.  Complete
// within budget; every Sat witness is re-verified with reversal_report.
inline SolveOutcome solve(const DefiningSequence& s, const Budget& budget = {}) {
    auto t0 = std::chrono::steady_clock::now();
    PartitionLabeling p(s);
    detail::OrientationCnf cnf = detail::build_cnf(p);
    SolveOutcome out;
    if (cnf.trivially_unsat) {
        out.status = SolveStatus::unsat;
        out.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return out;
    }
    std::optional<VertexOrdering> witness;
    out.status = detail::dpll_search(cnf, budget, out.stats, [&](const std::vector<int>& assign) {
        witness = detail::ordering_from_model(cnf, assign);
        return false;
    });
    if (out.status == SolveStatus::sat) {
        if (!witness || !reversal_report(p, *witness).accepted)
            throw error("solver produced an invalid witness (internal)");
        out.witness = std::move(witness);
    }
    out.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

// All accepted orderings, up to cap (cap <= 0 means unbounded).  When the
// enumeration is exhaustive the solution set is closed under adding k to
// every vertex (the sigma^k automorphism); asserted.
inline std::vector<VertexOrdering> enumerate_orientations(const DefiningSequence& s, int cap = 0,
                                                          const Budget& budget = {}) {
    PartitionLabeling p(s);
    detail::OrientationCnf cnf = detail::build_cnf(p);
    std::vector<VertexOrdering> found;
    if (cnf.trivially_unsat) return found;
    SolveStats stats;
    bool capped = false;
    SolveStatus st = detail::dpll_search(cnf, budget, stats, [&](const std::vector<int>& assign) {
        VertexOrdering o = detail::ordering_from_model(cnf, assign);
        if (!reversal_report(p, o).accepted) throw error("solver produced an invalid witness (internal)");
        found.push_back(std::move(o));
        if (cap > 0 && static_cast<int>(found.size()) >= cap) {
            capped = true;
            return false;
        }
        return true;
    });
    if (!capped && st != SolveStatus::budget_exceeded) {
        // closure under tau -> tau + k (mod n)
        const int n = s.n();
        std::set<std::vector<int>> all;
        for (const auto& o : found) all.insert(o.tau);
        for (const auto& o : found) {
            std::vector<int> sh(o.tau);
            for (int& v : sh) v = (v + s.k()) % n;
            if (!all.count(sh)) throw error("solution set not closed under sigma^k (internal)");
        }
    }
    return found;
}

namespace detail {

// Early-exit acceptance check against a dense label table.
inline bool accepts_fast(int n, int k, const std::vector<int>& label, const std::vector<int>& pos) {
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool fwd = pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)];
            bool img = pos[static_cast<size_t>((u + 1) % n)] < pos[static_cast<size_t>((v + 1) % n)];
            if (fwd != img && label[static_cast<size_t>(u * n + v)] != k - 1) return false;
        }
    return true;
}

inline std::vector<int> label_table(const PartitionLabeling& p) {
    const int n = p.n();
    std::vector<int> label(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) label[static_cast<size_t>(u * n + v)] = p.edge_label(u, v);
    return label;
}

} // namespace detail

// Naive factorial-enumeration oracle, independent of the DPLL path.
inline SolveOutcome oracle_solve(const DefiningSequence& s) {
    if (s.n() > 9) throw too_large_error("oracle enumerates n! orderings; n <= 9 required");
    auto t0 = std::chrono::steady_clock::now();
    PartitionLabeling p(s);
    const int n = s.n();
    std::vector<int> label = detail::label_table(p);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> pos(static_cast<size_t>(n));
    SolveOutcome out;
    do {
        ++out.stats.nodes;
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
        if (detail::accepts_fast(n, s.k(), label, pos)) {
            out.status = SolveStatus::sat;
            out.witness = VertexOrdering{perm};
            if (!reversal_report(p, *out.witness).accepted) throw error("oracle check mismatch (internal)");
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

// All accepted orderings by brute force; test-grade, n <= 9.
inline std::vector<VertexOrdering> oracle_enumerate(const DefiningSequence& s) {
    if (s.n() > 9) throw too_large_error("oracle enumerates n! orderings; n <= 9 required");
    PartitionLabeling p(s);
    const int n = s.n();
    std::vector<int> label = detail::label_table(p);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> pos(static_cast<size_t>(n));
    std::vector<VertexOrdering> found;
    do {
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
        if (detail::accepts_fast(n, s.k(), label, pos)) found.push_back(VertexOrdering{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

} // namespace sigma

#endif
