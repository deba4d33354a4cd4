#ifndef SIGMA_BLOWUP_HPP
#define SIGMA_BLOWUP_HPP

#include <map>
#include <optional>
#include <vector>

#include "sigma/core.hpp"
#include "sigma/orient.hpp"
#include "sigma/solver.hpp"

// Blow-ups: sigma_n-k-partitions whose defining sequence replicates a base
// sigma_m-k-partition's extended sequence at every index not divisible by
// m, with free labels at the multiples of m.  Includes the orientation
// lifter that turns an accepted base ordering into an accepted ordering of
// any blow-up, and a detector.

namespace sigma {

struct bad_multiple_error : error { using error::error; };
struct missing_free_value_error : error { using error::error; };
struct spurious_free_value_error : error { using error::error; };
struct not_a_blow_up_error : error { using error::error; };
struct base_order_rejected_error : error { using error::error; };

struct BlowUpWitness {
    int m;
    DefiningSequence base;
    std::map<int, int> free;       // index divisible by m -> label
    bool base_standard = false;
    std::optional<SolveStatus> base_solvable; // set when solvability was checked
};

// a_i = ext_base(i mod m) for m not dividing i; a_i = free(i) otherwise.
inline DefiningSequence blow_up_sequence(const DefiningSequence& base, int n,
                                         const std::map<int, int>& free) {
    const int m = base.n();
    const int k = base.k();
    if (n < m || n % m != 0) throw bad_multiple_error("n must be a multiple of m");
    PartitionLabeling bl(base);
    std::vector<int> a(static_cast<size_t>(n / 2));
    std::map<int, int> pending = free;
    for (int i = 1; i <= n / 2; ++i) {
        if (i % m == 0) {
            auto it = pending.find(i);
            if (it == pending.end())
                throw missing_free_value_error("no free value for index " + std::to_string(i));
            if (it->second < 0 || it->second >= k)
                throw alphabet_error("free value at index " + std::to_string(i) + " outside {0..k-1}");
            a[static_cast<size_t>(i - 1)] = it->second;
            pending.erase(it);
        } else {
            a[static_cast<size_t>(i - 1)] = bl.ext(i % m);
        }
    }
    if (!pending.empty())
        throw spurious_free_value_error("free value at index " + std::to_string(pending.begin()->first) +
                                        " which is not a multiple of m in range");
    return {k, n, std::move(a)};
}

inline bool is_blow_up_of(const DefiningSequence& target, const DefiningSequence& base) {
    if (target.k() != base.k()) return false;
    const int m = base.n(), n = target.n();
    if (n % m != 0) return false;
    PartitionLabeling bl(base);
    for (int i = 1; i <= n / 2; ++i)
        if (i % m != 0 && target.a(i) != bl.ext(i % m)) return false;
    return true;
}

// Lifts an accepted ordering of the base to an accepted ordering of the
// blow-up.  Vertices of the target split into groups H_i = {jm+i : j in
// [d]}, d = n/m; tau' concatenates the groups in base order, each ordered
// internally by a schedule tau_i over [d] built in two swap phases from
// the seed 0,1,d-1,2,d-2,...  Reproduces published orderings exactly.
inline VertexOrdering lift_orientation(const DefiningSequence& base, const VertexOrdering& base_order,
                                       const DefiningSequence& target) {
    const int m = base.n();
    const int k = base.k();
    const int n = target.n();
    const int d = n / m;
    if (!is_blow_up_of(target, base)) throw not_a_blow_up_error("target is not a blow-up of base");
    PartitionLabeling base_lab(base);
    if (!reversal_report(base_lab, base_order).accepted)
        throw base_order_rejected_error("base ordering is not an accepted orientation");
    PartitionLabeling lab(target);

    // seed: 0,1,d-1,2,d-2,...
    std::vector<int> seed;
    seed.push_back(0);
    for (int j = 1, hi = d - 1; static_cast<int>(seed.size()) < d;) {
        seed.push_back(j++);
        if (static_cast<int>(seed.size()) < d) seed.push_back(hi--);
    }

    auto swap_adjacent = [](std::vector<int>& t, int x, int y) {
        // x and y are adjacent in t; exchange them
        for (size_t q = 0; q + 1 < t.size(); ++q) {
            if ((t[q] == x && t[q + 1] == y) || (t[q] == y && t[q + 1] == x)) {
                std::swap(t[q], t[q + 1]);
                return;
            }
        }
        throw error("swap pair not adjacent (internal)");
    };

    std::vector<std::vector<int>> inner(static_cast<size_t>(2 * k + 1));
    inner[0] = seed;
    // phase one: for 0 <= i < k swap (j, d-j) when the inner edge
    // {jm+i, (d-j)m+i} has label k-1; each pair swaps for exactly one i.
    std::vector<int> swaps1(static_cast<size_t>(d), 0);
    for (int i = 0; i < k; ++i) {
        inner[static_cast<size_t>(i + 1)] = inner[static_cast<size_t>(i)];
        for (int j = 1; 2 * j < d; ++j) {
            if (lab.edge_label(static_cast<long long>(j) * m + i, static_cast<long long>(d - j) * m + i) == k - 1) {
                swap_adjacent(inner[static_cast<size_t>(i + 1)], j, d - j);
                ++swaps1[static_cast<size_t>(j)];
            }
        }
    }
    for (int j = 1; 2 * j < d; ++j)
        if (swaps1[static_cast<size_t>(j)] != 1)
            throw error("phase-one pair (" + std::to_string(j) + "," + std::to_string(d - j) +
                        ") swapped " + std::to_string(swaps1[static_cast<size_t>(j)]) + " times (internal)");
    // phase two: for k <= i < 2k swap (j, d-j-1) on label k-1.
    std::vector<int> swaps2(static_cast<size_t>(d), 0);
    for (int i = k; i < 2 * k; ++i) {
        inner[static_cast<size_t>(i + 1)] = inner[static_cast<size_t>(i)];
        for (int j = 0; 2 * j < d - 1; ++j) {
            if (lab.edge_label(static_cast<long long>(j) * m + i, static_cast<long long>(d - j - 1) * m + i) == k - 1) {
                swap_adjacent(inner[static_cast<size_t>(i + 1)], j, d - j - 1);
                ++swaps2[static_cast<size_t>(j)];
            }
        }
    }
    for (int j = 0; 2 * j < d - 1; ++j)
        if (swaps2[static_cast<size_t>(j)] != 1)
            throw error("phase-two pair (" + std::to_string(j) + "," + std::to_string(d - j - 1) +
                        ") swapped " + std::to_string(swaps2[static_cast<size_t>(j)]) + " times (internal)");

    auto schedule = [&](int i) -> const std::vector<int>& {
        return i <= 2 * k ? inner[static_cast<size_t>(i)] : inner[static_cast<size_t>(2 * k)];
    };

    // Wrap condition on inner edges of H_{m-1}: if A precedes B in
    // tau_{m-1} but (B+1) mod d precedes (A+1) mod d in tau_0, the edge
    // {Am+m-1, Bm+m-1} must carry label k-1.
    {
        const std::vector<int>& last = schedule(m - 1);
        std::vector<int> pos_last(static_cast<size_t>(d)), pos_seed(static_cast<size_t>(d));
        for (int q = 0; q < d; ++q) {
            pos_last[static_cast<size_t>(last[static_cast<size_t>(q)])] = q;
            pos_seed[static_cast<size_t>(seed[static_cast<size_t>(q)])] = q;
        }
        for (int A = 0; A < d; ++A)
            for (int B = 0; B < d; ++B) {
                if (A == B) continue;
                if (pos_last[static_cast<size_t>(A)] < pos_last[static_cast<size_t>(B)] &&
                    pos_seed[static_cast<size_t>((B + 1) % d)] < pos_seed[static_cast<size_t>((A + 1) % d)]) {
                    if (lab.edge_label(static_cast<long long>(A) * m + m - 1,
                                       static_cast<long long>(B) * m + m - 1) != k - 1)
                        throw error("wrap condition violated on H_{m-1} (internal)");
                }
            }
    }

    std::vector<int> tau;
    tau.reserve(static_cast<size_t>(n));
    for (int idx = 0; idx < m; ++idx) {
        int i = base_order.tau[static_cast<size_t>(idx)];
        for (int q = 0; q < d; ++q) tau.push_back(schedule(i)[static_cast<size_t>(q)] * m + i);
    }
    VertexOrdering out{std::move(tau)};
    if (!reversal_report(lab, out).accepted) throw error("lifted ordering rejected (internal)");
    return out;
}

// Reports, for every proper divisor m of n valid for k, whether s matches
// a blow-up of the base read off its first floor(m/2) entries.  Structural
// match only; base solvability is a flag, not a requirement.
inline std::vector<BlowUpWitness> detect_blow_up(const DefiningSequence& s, bool check_solvable = true,
                                                 const Budget& budget = {}) {
    const int n = s.n();
    const int k = s.k();
    std::vector<BlowUpWitness> out;
    for (int m = k; m < n; ++m) {
        if (n % m != 0 || m % k != 0) continue;
        if (k % 2 == 0 && m % (2 * k) != 0) continue;
        std::vector<int> b(s.labels().begin(), s.labels().begin() + m / 2);
        DefiningSequence base(k, m, std::move(b));
        if (!is_blow_up_of(s, base)) continue;
        BlowUpWitness w{m, base, {}, standard_condition(base), std::nullopt};
        for (int i = m; i <= n / 2; i += m) w.free[i] = s.a(i);
        if (check_solvable) w.base_solvable = solve(base, budget).status;
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace sigma

#endif
