#pragma once

// H-join (generalized composition) structure: decompose a graph into
// complete parts over a partition, and rebuild a graph from a skeleton with
// part sizes. Decomposition is the bridge from super graphs to the quotient
// matrix.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgs/graph.hpp"

namespace sgs {

struct HJoinError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Δ[K_{n_1}, ..., K_{n_k}]: skeleton Δ, ordered part sizes, and the vertex
// sets realizing each part. Parts are ordered by ascending representative
// (least member) index.
struct HJoinDecomposition {
    Graph skeleton;
    std::vector<int> part_sizes;
    std::vector<std::vector<int>> part_members;

    int part_count() const { return static_cast<int>(part_sizes.size()); }
    int total_vertices() const {
        return std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    }
};

// Split `graph` into complete parts along `partition`. Every block must be a
// clique and adjacency between two blocks must be all-or-nothing; both hold
// by construction when graph = super_graph(·, partition).
inline HJoinDecomposition hjoin_decompose(const Graph& graph,
                                          const EquivalencePartition& partition) {
    int n = graph.vertex_count();
    if (partition.element_count() != n)
        throw std::invalid_argument("hjoin_decompose: partition does not cover the vertex set");
    int k = partition.block_count();
    for (int b = 0; b < k; ++b) {
        const auto& block = partition.blocks[b];
        for (size_t x = 0; x < block.size(); ++x)
            for (size_t y = x + 1; y < block.size(); ++y)
                if (!graph.edge(block[x], block[y]))
                    throw HJoinError("not an H-join over this partition: block " +
                                     std::to_string(b) + " is not a clique");
    }
    Graph skel(k);
    for (int b = 0; b < k; ++b)
        for (int c = b + 1; c < k; ++c) {
            const auto& bb = partition.blocks[b];
            const auto& cc = partition.blocks[c];
            long edges = 0;
            for (int x : bb)
                for (int y : cc) edges += graph.edge(x, y) ? 1 : 0;
            if (edges != 0 && edges != static_cast<long>(bb.size()) * static_cast<long>(cc.size()))
                throw HJoinError("not an H-join over this partition: blocks " + std::to_string(b) +
                                 " and " + std::to_string(c) + " are partially adjacent");
            if (edges != 0) skel.add_edge(b, c);
        }
    HJoinDecomposition d;
    d.skeleton = std::move(skel);
    d.part_sizes = partition.block_sizes();
    d.part_members = partition.blocks;
    if (!graph.labels.empty()) {
        d.skeleton.labels.resize(k);
        for (int b = 0; b < k; ++b)
            d.skeleton.labels[b] = vertex_label(graph, partition.blocks[b].front());
    }
    return d;
}

// Inverse direction: blow each skeleton vertex i up into a K_{sizes[i]},
// joining parts whose skeleton vertices are adjacent. Vertices are numbered
// part by part in skeleton order.
inline Graph hjoin_compose(const Graph& skeleton, const std::vector<int>& part_sizes) {
    int k = skeleton.vertex_count();
    if (static_cast<int>(part_sizes.size()) != k)
        throw std::invalid_argument("hjoin_compose: one size per skeleton vertex required");
    for (int s : part_sizes)
        if (s < 1) throw std::invalid_argument("hjoin_compose: part sizes must be positive");
    std::vector<int> offset(k + 1, 0);
    for (int i = 0; i < k; ++i) offset[i + 1] = offset[i] + part_sizes[i];
    Graph g(offset[k]);
    for (int i = 0; i < k; ++i)
        for (int x = offset[i]; x < offset[i + 1]; ++x)
            for (int y = x + 1; y < offset[i + 1]; ++y) g.add_edge(x, y);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (!skeleton.edge(i, j)) continue;
            for (int x = offset[i]; x < offset[i + 1]; ++x)
                for (int y = offset[j]; y < offset[j + 1]; ++y) g.add_edge(x, y);
        }
    return g;
}

// The relabeling that hjoin_compose(decomp.skeleton, decomp.part_sizes)
// applies to the original vertices: old vertex -> composed vertex.
inline std::vector<int> composition_relabeling(const HJoinDecomposition& d) {
    std::vector<int> map(d.total_vertices(), -1);
    int next = 0;
    for (const auto& part : d.part_members)
        for (int v : part) map[v] = next++;
    return map;
}

}  // namespace sgs
