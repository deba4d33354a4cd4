#ifndef SIGMA_ANALYSIS_HPP
#define SIGMA_ANALYSIS_HPP

#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sigma/blowup.hpp"
#include "sigma/core.hpp"
#include "sigma/orient.hpp"
#include "sigma/solver.hpp"

// Necessary-condition predicates, the exhaustive sweep harness, and the
// odd-n conjecture experiments.

namespace sigma {

struct space_too_large_error : error { using error::error; };

struct PredicateResult {
    bool pass = true;
    int fail_index = 0; // violating index when !pass
};

// After normalizing to a_1 = 0: as long as no label k-1 has appeared among
// a_1..a_i, the next entry may exceed a_i by at most one (plain integer
// comparison).  A failure certifies Unsat.
inline PredicateResult necessary_prefix(const DefiningSequence& s) {
    DefiningSequence t = s.normalized();
    const int k = t.k();
    for (int i = 1; i < t.half(); ++i) {
        if (t.a(i) == k - 1) break; // hypothesis a_j != k-1 for j <= i fails from here on
        if (t.a(i + 1) > t.a(i) + 1) return {false, i};
    }
    return {true, 0};
}

// Every jump at index i needs, among the indices before it, either one
// halt and at least k-1 steps or one step and at least k-1 halts.
inline PredicateResult necessary_jump(const DefiningSequence& s) {
    std::vector<Step> steps = classify_steps(s);
    const int k = s.k();
    int halts = 0, stps = 0;
    for (size_t q = 0; q < steps.size(); ++q) {
        if (steps[q] == Step::jump) {
            bool ok = (halts >= 1 && stps >= k - 1) || (stps >= 1 && halts >= k - 1);
            if (!ok) return {false, static_cast<int>(q) + 1};
        } else if (steps[q] == Step::halt) {
            ++halts;
        } else {
            ++stps;
        }
    }
    return {true, 0};
}

// n >= 2k and n != 3k are necessary for any transitive sigma_n-orientation.
inline bool size_filter(const DefiningSequence& s) {
    return s.n() >= 2 * s.k() && s.n() != 3 * s.k();
}

inline bool necessary_pass(const DefiningSequence& s) {
    return size_filter(s) && necessary_prefix(s).pass && necessary_jump(s).pass;
}

struct SweepRecord {
    DefiningSequence seq;
    bool standard = false;
    int blowup_witnesses = 0;
    bool prefix_pass = true;
    bool jump_pass = true;
    bool size_pass = true;
    SolveStatus status = SolveStatus::unsat;
    std::string witness_digest; // tau joined by '-', empty when no witness
};

struct SweepOptions {
    Budget budget;
    int jobs = 1;
    long long max_space = 1'000'000; // cap on k^(floor(n/2)-1)
};

// The i-th normalized sequence (a_1 = 0, remaining entries base-k digits,
// a_2 least significant).
inline DefiningSequence normalized_sequence(int k, int n, long long index) {
    std::vector<int> a(static_cast<size_t>(n / 2), 0);
    for (size_t q = 1; q < a.size(); ++q) {
        a[q] = static_cast<int>(index % k);
        index /= k;
    }
    return {k, n, std::move(a)};
}

inline long long normalized_count(int k, int n) {
    long long cnt = 1;
    for (int q = 1; q < n / 2; ++q) cnt *= k;
    return cnt;
}

inline long long normalized_index(const DefiningSequence& s) {
    long long idx = 0;
    for (int i = s.half(); i >= 2; --i) idx = idx * s.k() + s.a(i);
    return idx;
}

inline std::string digest(const VertexOrdering& o) {
    std::string out;
    for (size_t i = 0; i < o.tau.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(o.tau[i]);
    }
    return out;
}

// One record per normalized sequence.  Cross-checks between columns are
// enforced: standard implies Sat, a failed necessary predicate implies
// Unsat, and dual sequences must agree in status.
inline std::vector<SweepRecord> sweep(int k, int n, const SweepOptions& opts = {}) {
    long long total = normalized_count(k, n);
    if (total > opts.max_space)
        throw space_too_large_error("sweep space " + std::to_string(total) + " exceeds limit");
    std::vector<std::optional<SweepRecord>> slots(static_cast<size_t>(total));

    auto work = [&](long long lo, long long hi) {
        for (long long idx = lo; idx < hi; ++idx) {
            DefiningSequence s = normalized_sequence(k, n, idx);
            SweepRecord rec{s};
            rec.standard = standard_condition(s);
            rec.blowup_witnesses = static_cast<int>(detect_blow_up(s, false).size());
            rec.prefix_pass = necessary_prefix(s).pass;
            rec.jump_pass = necessary_jump(s).pass;
            rec.size_pass = size_filter(s);
            SolveOutcome oc = solve(s, opts.budget);
            rec.status = oc.status;
            if (oc.witness) rec.witness_digest = digest(*oc.witness);
            slots[static_cast<size_t>(idx)] = std::move(rec);
        }
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || total < 2) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        long long chunk = (total + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            long long lo = t * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<SweepRecord> out;
    out.reserve(static_cast<size_t>(total));
    for (auto& s : slots) out.push_back(std::move(*s));

    for (const SweepRecord& rec : out) {
        if (rec.standard && rec.status != SolveStatus::sat)
            throw error("sweep inconsistency: standard sequence not Sat");
        bool nec = rec.prefix_pass && rec.jump_pass && rec.size_pass;
        if (!nec && rec.status == SolveStatus::sat)
            throw error("sweep inconsistency: Sat sequence fails a necessary condition");
        long long didx = normalized_index(rec.seq.dual());
        const SweepRecord& drec = out[static_cast<size_t>(didx)];
        if (rec.status != SolveStatus::budget_exceeded && drec.status != SolveStatus::budget_exceeded &&
            rec.status != drec.status)
            throw error("sweep inconsistency: dual sequences disagree in status");
    }
    return out;
}

struct ConjectureReport {
    int k = 0;
    std::vector<int> n_values;
    long long unsat = 0;
    long long budget_exceeded = 0;
    long long sat = 0;
    std::vector<DefiningSequence> counterexamples; // any entry is a conjecture counterexample
};

// Runs solve over every normalized sequence for each odd n.  Any Sat is a
// counterexample to the odd-n conjecture; its witness is re-verified before
// being reported.
inline ConjectureReport conjecture_scan(int k, const std::vector<int>& odd_ns, const Budget& budget = {},
                                        int jobs = 1) {
    ConjectureReport rep;
    rep.k = k;
    rep.n_values = odd_ns;
    for (int n : odd_ns) {
        if (n % 2 == 0) throw error("conjecture scan expects odd n");
        if (n % k != 0) throw divisibility_error("no sigma_n-k-partition exists: k does not divide n");
        long long total = normalized_count(k, n);
        std::vector<SolveStatus> statuses(static_cast<size_t>(total));
        auto work = [&](long long lo, long long hi) {
            for (long long idx = lo; idx < hi; ++idx) {
                DefiningSequence s = normalized_sequence(k, n, idx);
                SolveOutcome oc = solve(s, budget);
                if (oc.status == SolveStatus::sat) {
                    PartitionLabeling p(s);
                    if (!oc.witness || !reversal_report(p, *oc.witness).accepted)
                        throw error("unverifiable Sat witness in conjecture scan");
                }
                statuses[static_cast<size_t>(idx)] = oc.status;
            }
        };
        jobs = std::max(1, jobs);
        if (jobs == 1 || total < 2) {
            work(0, total);
        } else {
            std::vector<std::thread> pool;
            long long chunk = (total + jobs - 1) / jobs;
            for (int t = 0; t < jobs; ++t) {
                long long lo = t * chunk, hi = std::min(total, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(work, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        for (long long idx = 0; idx < total; ++idx) {
            switch (statuses[static_cast<size_t>(idx)]) {
            case SolveStatus::unsat: ++rep.unsat; break;
            case SolveStatus::budget_exceeded: ++rep.budget_exceeded; break;
            case SolveStatus::sat:
                ++rep.sat;
                rep.counterexamples.push_back(normalized_sequence(k, n, idx));
                break;
            }
        }
    }
    return rep;
}

} // namespace sigma

#endif
