#ifndef SIGMA_ORIENT_HPP
#define SIGMA_ORIENT_HPP

#include <optional>
#include <vector>

#include "sigma/core.hpp"

// Vertex orderings (= transitive tournaments), the reversal checker,
// bitonicity, and the constructive standard orientation.

namespace sigma {

struct size_mismatch_error : error { using error::error; };
struct too_small_error : error { using error::error; };
struct internal_contradiction_error : error { using error::error; };

// A permutation tau(1)..tau(n) of {0..n-1}.  Edges of the induced
// transitive tournament point toward the later vertex.
struct VertexOrdering {
    std::vector<int> tau;

    int size() const { return static_cast<int>(tau.size()); }

    // positions()[v] = i-1 where tau(i) = v.
    std::vector<int> positions() const {
        std::vector<int> pos(tau.size(), -1);
        for (size_t i = 0; i < tau.size(); ++i) {
            int v = tau[i];
            if (v < 0 || v >= static_cast<int>(tau.size()) || pos[static_cast<size_t>(v)] != -1)
                throw error("ordering is not a permutation of 0..n-1");
            pos[static_cast<size_t>(v)] = static_cast<int>(i);
        }
        return pos;
    }

    bool operator==(const VertexOrdering& o) const { return tau == o.tau; }
    bool operator!=(const VertexOrdering& o) const { return !(*this == o); }
};

struct ReversedEdge {
    int u, v;   // u < v as integers
    int label;
};

struct OrientationReport {
    std::vector<ReversedEdge> reversed;
    bool accepted = false;
    std::optional<std::pair<int, int>> first_violation;
};

// Lists every edge whose orientation sigma_n reverses; accepts iff all of
// them carry label k-1.
inline OrientationReport reversal_report(const PartitionLabeling& p, const VertexOrdering& o) {
    const int n = p.n();
    if (o.size() != n) throw size_mismatch_error("ordering size != n of partition");
    std::vector<int> pos = o.positions();
    OrientationReport rep;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool fwd = pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)];
            bool img = pos[static_cast<size_t>((u + 1) % n)] < pos[static_cast<size_t>((v + 1) % n)];
            if (fwd != img) {
                int lab = p.edge_label(u, v);
                rep.reversed.push_back({u, v, lab});
                if (lab != p.k() - 1 && !rep.first_violation)
                    rep.first_violation = std::make_pair(u, v);
            }
        }
    }
    rep.accepted = !rep.first_violation.has_value();
    return rep;
}

struct BitonicCheck {
    bool bitonic = false;
    std::optional<int> local_min;
    std::optional<int> local_max;
    std::vector<int> minima;
    std::vector<int> maxima;
};

// j is a local minimum if it precedes both cyclic neighbours j-1 and j+1,
// a local maximum if both precede it.  Bitonic = exactly one of each.
inline BitonicCheck is_bitonic(const VertexOrdering& o) {
    const int n = o.size();
    if (n < 3) throw too_small_error("bitonicity needs n >= 3");
    std::vector<int> pos = o.positions();
    BitonicCheck res;
    for (int j = 0; j < n; ++j) {
        int pj = pos[static_cast<size_t>(j)];
        int pl = pos[static_cast<size_t>((j + n - 1) % n)];
        int pr = pos[static_cast<size_t>((j + 1) % n)];
        if (pj < pl && pj < pr) res.minima.push_back(j);
        if (pj > pl && pj > pr) res.maxima.push_back(j);
    }
    res.bitonic = res.minima.size() == 1 && res.maxima.size() == 1;
    if (res.minima.size() == 1) res.local_min = res.minima[0];
    if (res.maxima.size() == 1) res.local_max = res.maxima[0];
    return res;
}

// A standard orientation exists iff 2k | n and the sequence never jumps.
inline bool standard_condition(const DefiningSequence& s) {
    return s.n() % (2 * s.k()) == 0 && !has_jump(s);
}

// Builds the bitonic witness ordering when the standard condition holds.
// Works on the normalized sequence (a_1 = 0): tau(1) = 0, the placed
// prefix is always a cyclic arc {j+1..j+i}, and the label of the edge
// {j, j+i+1} decides which end the next vertex extends; label 0 extends
// left, label k-1 extends right, anything else cannot occur.
inline std::optional<VertexOrdering> standard_orientation(const DefiningSequence& s) {
    if (!standard_condition(s)) return std::nullopt;
    const int n = s.n();
    const int k = s.k();
    const int c = s.a(1);
    PartitionLabeling lab(s.shifted(c));

    std::vector<int> tau;
    tau.reserve(static_cast<size_t>(n));
    tau.push_back(0);
    int j = n - 1; // prefix arc is {j+1, ..., j+i}
    for (int i = 1; i < n - 1; ++i) {
        int l = lab.edge_label(j, j + i + 1);
        if (l == 0) {
            tau.push_back(j);
            j = mod(j - 1, n);
        } else if (l == k - 1) {
            tau.push_back(mod(j + i + 1, n));
        } else {
            throw internal_contradiction_error(
                "construction met label " + std::to_string(l) + " at step " + std::to_string(i));
        }
    }
    tau.push_back(j); // j = j+n is the single vertex left
    // Pull the witness back to the original labeling (vertices v -> v-c).
    for (int& v : tau) v = mod(v - c, n);
    return VertexOrdering{std::move(tau)};
}

} // namespace sigma

#endif
