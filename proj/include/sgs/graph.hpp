#pragma once

// Simple undirected graphs over indexed vertices, bit-packed adjacency rows.
// Construction of commuting graphs and of B-superA graphs over an
// equivalence partition, plus DOT / CSV export.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgs/group.hpp"

namespace sgs {

class Graph {
public:
    Graph() : n_(0), words_(0) {}
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

    static Graph complete(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }

    int vertex_count() const { return n_; }

    bool edge(int i, int j) const {
        return (bits_[row_word(i, j)] >> (j & 63)) & 1u;
    }
    void add_edge(int i, int j) {
        if (i == j) throw std::invalid_argument("self-loops are not allowed");
        bits_[row_word(i, j)] |= uint64_t(1) << (j & 63);
        bits_[row_word(j, i)] |= uint64_t(1) << (i & 63);
    }

    int degree(int i) const {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(bits_[static_cast<size_t>(i) * words_ + w]);
        return d;
    }

    long edge_count() const {
        long twice = 0;
        for (int i = 0; i < n_; ++i) twice += degree(i);
        return twice / 2;
    }

    template <class F>
    void for_each_neighbor(int i, F f) const {
        for (int w = 0; w < words_; ++w) {
            uint64_t word = bits_[static_cast<size_t>(i) * words_ + w];
            while (word) {
                int bit = __builtin_ctzll(word);
                f(w * 64 + bit);
                word &= word - 1;
            }
        }
    }

    // adjacency row with the diagonal bit set: equal rows = true twins
    std::vector<uint64_t> closed_row(int i) const {
        std::vector<uint64_t> r(bits_.begin() + static_cast<size_t>(i) * words_,
                                bits_.begin() + static_cast<size_t>(i + 1) * words_);
        r[i / 64] |= uint64_t(1) << (i & 63);
        return r;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    std::vector<std::string> labels;

private:
    size_t row_word(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("vertex out of range");
        return static_cast<size_t>(i) * words_ + (j >> 6);
    }
    int n_;
    int words_;
    std::vector<uint64_t> bits_;
};

// Commuting graph: vertices are the group elements, edge iff xy = yx, x != y.
inline Graph commuting_graph(const FiniteGroup& g) {
    Graph gr(g.order);
    for (int i = 0; i < g.order; ++i)
        for (int j = i + 1; j < g.order; ++j)
            if (g.mul(i, j) == g.mul(j, i)) gr.add_edge(i, j);
    gr.labels = g.names;
    return gr;
}

// B-superA graph: distinct g, h adjacent iff [g] = [h] or some x in [g] and
// y in [h] are adjacent in the A-graph.
inline Graph super_graph(const Graph& a_graph, const EquivalencePartition& partition) {
    int n = a_graph.vertex_count();
    if (partition.element_count() != n)
        throw std::invalid_argument("super_graph: partition does not cover the vertex set");
    int k = partition.block_count();
    std::vector<std::vector<char>> block_adj(k, std::vector<char>(k, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a_graph.edge(i, j)) {
                int bi = partition.block_of[i], bj = partition.block_of[j];
                block_adj[bi][bj] = block_adj[bj][bi] = 1;
            }
    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int bi = partition.block_of[i], bj = partition.block_of[j];
            if (bi == bj || block_adj[bi][bj]) out.add_edge(i, j);
        }
    out.labels = a_graph.labels;
    return out;
}

// Blocks of vertices with identical closed neighborhoods (true twins). The
// coarsest partition whose blocks are cliques with all-or-nothing adjacency
// across blocks, i.e. the maximal decomposition into complete parts.
inline EquivalencePartition twin_partition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> blocks;
    std::vector<int> rep_block;
    std::vector<std::vector<uint64_t>> rep_rows;
    for (int v = 0; v < n; ++v) {
        auto row = g.closed_row(v);
        bool found = false;
        for (size_t b = 0; b < rep_rows.size() && !found; ++b)
            if (rep_rows[b] == row) {
                blocks[b].push_back(v);
                found = true;
            }
        if (!found) {
            rep_rows.push_back(std::move(row));
            blocks.push_back({v});
        }
    }
    return make_partition(std::move(blocks), n);
}

inline std::string vertex_label(const Graph& g, int v) {
    if (v < static_cast<int>(g.labels.size()) && !g.labels[v].empty()) return g.labels[v];
    return "v" + std::to_string(v);
}

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int i = 0; i < g.vertex_count(); ++i)
        out << "  " << i << " [label=\"" << vertex_label(g, i) << "\"];\n";
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.edge(i, j)) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

// 0/1 adjacency matrix, header row of labels.
inline std::string to_csv(const Graph& g) {
    std::ostringstream out;
    for (int j = 0; j < g.vertex_count(); ++j) {
        if (j) out << ',';
        out << vertex_label(g, j);
    }
    out << "\n";
    for (int i = 0; i < g.vertex_count(); ++i) {
        for (int j = 0; j < g.vertex_count(); ++j) {
            if (j) out << ',';
            out << (g.edge(i, j) ? '1' : '0');
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace sgs
