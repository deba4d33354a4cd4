#ifndef SIGMA_CONSTRUCTIONS_HPP
#define SIGMA_CONSTRUCTIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sigma/core.hpp"
#include "sigma/orient.hpp"

// Hamiltonian path/cycle decompositions of transitive tournaments, and
// composition of per-cycle solutions for permutations with several cycles.

namespace sigma {

struct odd_n_error : error { using error::error; };
struct even_n_error : error { using error::error; };
struct block_rejected_error : error { using error::error; };
struct multiple_fixed_points_error : error { using error::error; };

struct OrientedEdge {
    int from, to;
    bool operator==(const OrientedEdge& o) const { return from == o.from && to == o.to; }
};

// parts partition the edges of K_n; every oriented edge agrees with
// global_order; parts are pairwise isomorphic digraphs.
struct OrientedDecomposition {
    int n = 0;
    std::vector<std::vector<OrientedEdge>> parts;
    VertexOrdering global_order;
};

namespace detail {

// Splits labeled edges into parts oriented consistently with the order.
inline std::vector<std::vector<OrientedEdge>> parts_from_labeling(const PartitionLabeling& p,
                                                                  const VertexOrdering& order) {
    std::vector<int> pos = order.positions();
    std::vector<std::vector<OrientedEdge>> parts(static_cast<size_t>(p.k()));
    const int n = p.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            OrientedEdge e = pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)]
                                 ? OrientedEdge{u, v}
                                 : OrientedEdge{v, u};
            parts[static_cast<size_t>(p.edge_label(u, v))].push_back(e);
        }
    return parts;
}

} // namespace detail

// The zig-zag path 0,1,n-1,2,n-2,... and its sigma-images decompose K_n
// (n even) into n/2 Hamiltonian paths; defining sequence a_i = floor(i/2).
// The standard orientation makes every path alternating.
inline std::pair<DefiningSequence, OrientedDecomposition> walecki_paths(int n) {
    if (n % 2 != 0) throw odd_n_error("walecki paths need even n");
    if (n < 4) throw odd_n_error("walecki paths need n >= 4");
    std::vector<int> a(static_cast<size_t>(n / 2));
    for (int i = 1; i <= n / 2; ++i) a[static_cast<size_t>(i - 1)] = i / 2;
    DefiningSequence s(n / 2, n, std::move(a));
    std::optional<VertexOrdering> order = standard_orientation(s);
    if (!order) throw error("walecki sequence has no standard orientation (internal)");
    PartitionLabeling p(s);
    OrientedDecomposition dec{n, detail::parts_from_labeling(p, *order), *order};
    return {std::move(s), std::move(dec)};
}

// Endpoints of the d-th Walecki path: d and n/2 + d (mod n).
inline std::pair<int, int> walecki_endpoints(int n, int d) {
    return {mod(d, n), mod(n / 2 + d, n)};
}

// Decomposes T_n (n odd) into (n-1)/2 isomorphically oriented Hamiltonian
// cycles: take the path decomposition of K_{n-1}, join the apex vertex
// n-1 to both endpoints of each path, and orient all apex edges away from
// the apex, which goes first in the global order.
inline OrientedDecomposition hamiltonian_cycles(int n) {
    if (n % 2 == 0) throw even_n_error("hamiltonian cycles need odd n");
    if (n < 3) throw even_n_error("hamiltonian cycles need n >= 3");
    const int apex = n - 1;

    std::vector<std::vector<OrientedEdge>> parts;
    std::vector<int> tau;
    if (n == 3) {
        parts = {{OrientedEdge{0, 1}}};
        tau = {0, 1};
    } else {
        auto [seq, dec] = walecki_paths(n - 1);
        parts = std::move(dec.parts);
        tau = std::move(dec.global_order.tau);
    }
    for (size_t d = 0; d < parts.size(); ++d) {
        auto [e0, e1] = n == 3 ? std::pair<int, int>{0, 1} : walecki_endpoints(n - 1, static_cast<int>(d));
        parts[d].push_back({apex, e0});
        parts[d].push_back({apex, e1});
    }
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    order.push_back(apex);
    order.insert(order.end(), tau.begin(), tau.end());
    return {n, std::move(parts), VertexOrdering{std::move(order)}};
}

// One cycle of a non-cyclic permutation: a solved partition with an
// accepted ordering, or a fixed point (ordering of size 1, no partition).
struct CycleBlock {
    std::optional<DefiningSequence> part;
    VertexOrdering order;

    bool fixed_point() const { return order.size() == 1; }
};

// Glues per-cycle solutions: blocks get disjoint vertex ranges in order,
// intra-block edges follow the block orderings, and every cross edge
// points toward the higher-indexed block, so the composed permutation
// never reverses a cross edge.  Cross edges are labeled by the local
// coordinate in the lower non-fixed-point block, which keeps labels
// covariant under the composed permutation.
inline OrientedDecomposition compose_cycle_solutions(const std::vector<CycleBlock>& blocks) {
    if (blocks.empty()) throw block_rejected_error("no blocks");
    int fixed = 0, k = 0;
    for (const CycleBlock& b : blocks) {
        if (b.fixed_point()) {
            if (b.part) throw block_rejected_error("fixed point block carries a partition");
            ++fixed;
            continue;
        }
        if (!b.part) throw block_rejected_error("non-trivial block without a partition");
        if (b.part->n() != b.order.size()) throw size_mismatch_error("block ordering size != block n");
        if (k == 0)
            k = b.part->k();
        else if (b.part->k() != k)
            throw block_rejected_error("blocks do not share the part count k");
        if (!reversal_report(PartitionLabeling(*b.part), b.order).accepted)
            throw block_rejected_error("block ordering rejected by reversal check");
    }
    if (fixed > 1) throw multiple_fixed_points_error("at most one fixed point allowed");
    if (k == 0) throw block_rejected_error("all blocks are fixed points");

    std::vector<int> offset(blocks.size(), 0);
    int n = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        offset[b] = n;
        n += blocks[b].order.size();
    }

    std::vector<std::vector<OrientedEdge>> parts(static_cast<size_t>(k));
    std::vector<int> tau;
    tau.reserve(static_cast<size_t>(n));
    for (size_t b = 0; b < blocks.size(); ++b) {
        for (int v : blocks[b].order.tau) tau.push_back(offset[b] + v);
        if (!blocks[b].fixed_point()) {
            PartitionLabeling p(*blocks[b].part);
            std::vector<int> pos = blocks[b].order.positions();
            int nb = blocks[b].order.size();
            for (int u = 0; u < nb; ++u)
                for (int v = u + 1; v < nb; ++v) {
                    OrientedEdge e = pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)]
                                         ? OrientedEdge{offset[b] + u, offset[b] + v}
                                         : OrientedEdge{offset[b] + v, offset[b] + u};
                    parts[static_cast<size_t>(p.edge_label(u, v))].push_back(e);
                }
        }
        // cross edges toward every higher-indexed block
        for (size_t c = b + 1; c < blocks.size(); ++c)
            for (int x = 0; x < blocks[b].order.size(); ++x)
                for (int y = 0; y < blocks[c].order.size(); ++y) {
                    int label = blocks[b].fixed_point() ? mod(y, k) : mod(x, k);
                    parts[static_cast<size_t>(label)].push_back({offset[b] + x, offset[c] + y});
                }
    }
    return {n, std::move(parts), VertexOrdering{std::move(tau)}};
}

// The composed permutation of a block list: rotates inside each block.
inline int composed_permutation(const std::vector<CycleBlock>& blocks, int v) {
    int off = 0;
    for (const CycleBlock& b : blocks) {
        int nb = b.order.size();
        if (v < off + nb) return off + (v - off + 1) % nb;
        off += nb;
    }
    throw error("vertex outside composed range");
}

} // namespace sigma

#endif
