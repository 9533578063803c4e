#pragma once

// Backtracking graph isomorphism for small instances (skeletons, round-trip
// checks). Vertices may carry colors (part sizes); a valid mapping must
// preserve color, degree and adjacency. Candidate order is pruned by
// iterated neighborhood-color refinement.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "sgs/graph.hpp"

namespace sgs {

namespace detail {

inline bool extend_mapping(const Graph& a, const Graph& b, const std::vector<int>& ca,
                           const std::vector<int>& cb, std::vector<int>& order, size_t pos,
                           std::vector<int>& map_ab, std::vector<char>& used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    int n = a.vertex_count();
    for (int w = 0; w < n; ++w) {
        if (used[w] || ca[v] != cb[w]) continue;
        bool ok = true;
        for (size_t p = 0; p < pos && ok; ++p) {
            int v2 = order[p];
            ok = a.edge(v, v2) == b.edge(w, map_ab[v2]);
        }
        if (!ok) continue;
        map_ab[v] = w;
        used[w] = 1;
        if (extend_mapping(a, b, ca, cb, order, pos + 1, map_ab, used)) return true;
        used[w] = 0;
        map_ab[v] = -1;
    }
    return false;
}

}  // namespace detail

// Isomorphism respecting vertex colors (pass empty vectors for plain
// isomorphism). Intended for small graphs; the shape checks run on skeletons
// with at most a few dozen vertices.
inline bool are_isomorphic(const Graph& a, const Graph& b, std::vector<int> color_a = {},
                           std::vector<int> color_b = {}) {
    int n = a.vertex_count();
    if (n != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (color_a.empty()) color_a.assign(n, 0);
    if (color_b.empty()) color_b.assign(n, 0);
    if (static_cast<int>(color_a.size()) != n || static_cast<int>(color_b.size()) != n)
        throw std::invalid_argument("are_isomorphic: color vector length mismatch");

    // colors must be drawn from a shared palette before refinement
    {
        std::map<int, int> palette;
        for (int c : color_a) palette.emplace(c, 0);
        for (int c : color_b) palette.emplace(c, 0);
        int next = 0;
        for (auto& [c, id] : palette) id = next++;
        for (int& c : color_a) c = palette[c];
        for (int& c : color_b) c = palette[c];
    }
    // joint refinement keeps the palettes aligned across both graphs
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> remap;
        auto signature = [&](const Graph& g, const std::vector<int>& color, int v) {
            std::vector<int> neigh;
            for (int u = 0; u < g.vertex_count(); ++u)
                if (g.edge(v, u)) neigh.push_back(color[u]);
            std::sort(neigh.begin(), neigh.end());
            return std::make_pair(color[v], std::move(neigh));
        };
        std::vector<int> na(n), nb(n);
        for (int v = 0; v < n; ++v) {
            auto sig = signature(a, color_a, v);
            auto it = remap.find(sig);
            if (it == remap.end()) it = remap.emplace(sig, static_cast<int>(remap.size())).first;
            na[v] = it->second;
        }
        for (int v = 0; v < n; ++v) {
            auto sig = signature(b, color_b, v);
            auto it = remap.find(sig);
            if (it == remap.end()) it = remap.emplace(sig, static_cast<int>(remap.size())).first;
            nb[v] = it->second;
        }
        bool stable = na == color_a && nb == color_b;
        color_a = std::move(na);
        color_b = std::move(nb);
        if (stable) break;
    }
    // refined color histograms must agree
    {
        std::vector<int> ha = color_a, hb = color_b;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    // most-constrained first: rare colors, then high degree
    std::map<int, int> color_freq;
    for (int c : color_a) ++color_freq[c];
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (color_freq[color_a[x]] != color_freq[color_a[y]])
            return color_freq[color_a[x]] < color_freq[color_a[y]];
        return a.degree(x) > a.degree(y);
    });
    std::vector<int> map_ab(n, -1);
    std::vector<char> used(n, 0);
    return detail::extend_mapping(a, b, color_a, color_b, order, 0, map_ab, used);
}

}  // namespace sgs
