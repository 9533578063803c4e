#pragma once

// Finite groups as explicit Cayley tables: the dihedral and dicyclic
// families, text-format ingestion with full validation, conjugacy classes,
// element orders, and the equivalence partitions the super graphs are
// built over.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgs {

struct CayleyParseError : std::runtime_error {
    int line;
    CayleyParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct GroupValidationError : std::runtime_error {
    std::string kind;  // "latin-square", "identity", "associativity", "inverse"
    GroupValidationError(std::string kind_, const std::string& what_)
        : std::runtime_error(what_), kind(std::move(kind_)) {}
};

// Multiplication table with named elements; identity is pinned at index 0.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;  // row-major, table[i*order+j] = index of g_i * g_j
    std::vector<std::string> names;

    int mul(int i, int j) const { return table[static_cast<size_t>(i) * order + j]; }
    int& at(int i, int j) { return table[static_cast<size_t>(i) * order + j]; }

    int inverse(int i) const {
        for (int j = 0; j < order; ++j)
            if (mul(i, j) == 0) return j;
        throw GroupValidationError("inverse", "element " + std::to_string(i) + " has no inverse");
    }

    int conjugate(int g, int x) const {  // g x g^{-1}
        return mul(mul(g, x), inverse(g));
    }

    bool operator==(const FiniteGroup& o) const {
        return order == o.order && table == o.table;
    }
};

// Associativity is O(order^3); past this cutoff it runs only on request.
inline constexpr int kAssociativityCheckLimit = 512;

inline void validate_group(const FiniteGroup& g, bool force_associativity_check = false) {
    int n = g.order;
    if (n <= 0) throw GroupValidationError("latin-square", "group order must be positive");
    if (static_cast<int>(g.table.size()) != n * n)
        throw GroupValidationError("latin-square", "table size does not match order");
    for (int e : g.table)
        if (e < 0 || e >= n)
            throw GroupValidationError("latin-square", "table entry out of range");
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[g.mul(i, j)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw GroupValidationError("latin-square", "row " + std::to_string(i) +
                                                           " is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[g.mul(j, i)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw GroupValidationError("latin-square", "column " + std::to_string(i) +
                                                           " is not a permutation");
    }
    for (int j = 0; j < n; ++j)
        if (g.mul(0, j) != j || g.mul(j, 0) != j)
            throw GroupValidationError("identity", "index 0 is not a two-sided identity");
    for (int i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (int j = 0; j < n && !has_inverse; ++j)
            has_inverse = g.mul(i, j) == 0 && g.mul(j, i) == 0;
        if (!has_inverse)
            throw GroupValidationError("inverse",
                                       "element " + std::to_string(i) + " has no two-sided inverse");
    }
    if (n <= kAssociativityCheckLimit || force_associativity_check) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
                        throw GroupValidationError(
                            "associativity", "associativity fails at (" + std::to_string(i) + "," +
                                                 std::to_string(j) + "," + std::to_string(k) + ")");
    }
}

// D_2n = <a, b : a^n = b^2 = e, b a b^{-1} = a^{-1}>.
// Index i < n is a^i, index n+i is a^i b.
inline FiniteGroup dihedral(int n) {
    if (n < 3) throw std::invalid_argument("dihedral: n must be >= 3");
    FiniteGroup g;
    g.order = 2 * n;
    g.table.assign(static_cast<size_t>(g.order) * g.order, 0);
    auto rot = [n](int i) { return ((i % n) + n) % n; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            g.at(i, j) = rot(i + j);              // a^i a^j
            g.at(i, n + j) = n + rot(i + j);      // a^i (a^j b) = a^{i+j} b
            g.at(n + i, j) = n + rot(i - j);      // (a^i b) a^j = a^{i-j} b
            g.at(n + i, n + j) = rot(i - j);      // (a^i b)(a^j b) = a^{i-j}
        }
    g.names.resize(g.order);
    for (int i = 0; i < n; ++i) {
        g.names[i] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
        g.names[n + i] = i == 0 ? "b" : (i == 1 ? "ab" : "a^" + std::to_string(i) + "b");
    }
    return g;
}

// Q_4n = <a, b : a^{2n} = e, a^n = b^2, b a b^{-1} = a^{-1}>.
// Index i < 2n is a^i, index 2n+i is a^i b.
inline FiniteGroup dicyclic(int n) {
    if (n < 2) throw std::invalid_argument("dicyclic: n must be >= 2");
    FiniteGroup g;
    int m = 2 * n;  // order of a
    g.order = 4 * n;
    g.table.assign(static_cast<size_t>(g.order) * g.order, 0);
    auto rot = [m](int i) { return ((i % m) + m) % m; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            g.at(i, j) = rot(i + j);
            g.at(i, m + j) = m + rot(i + j);          // a^i (a^j b) = a^{i+j} b
            g.at(m + i, j) = m + rot(i - j);          // (a^i b) a^j = a^{i-j} b
            g.at(m + i, m + j) = rot(i - j + n);      // (a^i b)(a^j b) = a^{i-j+n}
        }
    g.names.resize(g.order);
    for (int i = 0; i < m; ++i) {
        g.names[i] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
        g.names[m + i] = i == 0 ? "b" : (i == 1 ? "ab" : "a^" + std::to_string(i) + "b");
    }
    return g;
}

inline int element_order(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order) throw std::out_of_range("element_order: index out of range");
    int acc = x, m = 1;
    while (acc != 0) {
        acc = g.mul(acc, x);
        ++m;
    }
    return m;
}

// Disjoint blocks covering 0..n-1 plus the inverse map.
struct EquivalencePartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;

    int element_count() const { return static_cast<int>(block_of.size()); }
    int block_count() const { return static_cast<int>(blocks.size()); }

    std::vector<int> block_sizes() const {
        std::vector<int> s;
        s.reserve(blocks.size());
        for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
        return s;
    }
};

// Canonical form: members sorted, blocks ordered by least member.
inline EquivalencePartition make_partition(std::vector<std::vector<int>> blocks, int n_elements) {
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("partition with empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    EquivalencePartition p;
    p.block_of.assign(n_elements, -1);
    for (size_t bi = 0; bi < blocks.size(); ++bi)
        for (int v : blocks[bi]) {
            if (v < 0 || v >= n_elements || p.block_of[v] != -1)
                throw std::invalid_argument("blocks do not partition the element set");
            p.block_of[v] = static_cast<int>(bi);
        }
    for (int v = 0; v < n_elements; ++v)
        if (p.block_of[v] == -1) throw std::invalid_argument("blocks do not cover the element set");
    p.blocks = std::move(blocks);
    return p;
}

inline EquivalencePartition conjugacy_classes(const FiniteGroup& g) {
    std::vector<std::vector<int>> blocks;
    std::vector<char> placed(g.order, 0);
    std::vector<int> inv(g.order);
    for (int i = 0; i < g.order; ++i) inv[i] = g.inverse(i);
    for (int x = 0; x < g.order; ++x) {
        if (placed[x]) continue;
        std::vector<int> orbit;
        for (int c = 0; c < g.order; ++c) {
            int y = g.mul(g.mul(c, x), inv[c]);
            if (!placed[y]) {
                placed[y] = 1;
                orbit.push_back(y);
            }
        }
        blocks.push_back(std::move(orbit));
    }
    return make_partition(std::move(blocks), g.order);
}

enum class Relation { Equality, Conjugacy, Order };

inline EquivalencePartition equivalence_partition(const FiniteGroup& g, Relation rel) {
    switch (rel) {
        case Relation::Equality: {
            std::vector<std::vector<int>> blocks(g.order);
            for (int i = 0; i < g.order; ++i) blocks[i] = {i};
            return make_partition(std::move(blocks), g.order);
        }
        case Relation::Conjugacy:
            return conjugacy_classes(g);
        case Relation::Order: {
            std::map<int, std::vector<int>> by_order;
            for (int i = 0; i < g.order; ++i) by_order[element_order(g, i)].push_back(i);
            std::vector<std::vector<int>> blocks;
            for (auto& [ord, members] : by_order) blocks.push_back(std::move(members));
            return make_partition(std::move(blocks), g.order);
        }
    }
    throw std::logic_error("unreachable");
}

inline std::string relation_name(Relation rel) {
    switch (rel) {
        case Relation::Equality: return "equality";
        case Relation::Conjugacy: return "conjugacy";
        case Relation::Order: return "order";
    }
    throw std::logic_error("unreachable");
}

inline Relation parse_relation(const std::string& s) {
    if (s == "equality") return Relation::Equality;
    if (s == "conjugacy") return Relation::Conjugacy;
    if (s == "order") return Relation::Order;
    throw std::invalid_argument("unknown relation '" + s + "'");
}

// Text format: line 1 is the order n, lines 2..n+1 are the table rows as
// 0-based indices, optionally followed by "names: e,a,..." on its own line.
// If the identity is not at index 0 the elements are renumbered to put it
// there.
inline FiniteGroup load_cayley_table(const std::string& text, bool force_associativity = false) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                if (!cur.empty() && cur.back() == '\r') cur.pop_back();
                lines.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) {
            if (cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
        }
    }
    size_t li = 0;
    auto next_content_line = [&]() -> std::string* {
        while (li < lines.size()) {
            const std::string& l = lines[li];
            if (l.find_first_not_of(" \t") != std::string::npos) return &lines[li];
            ++li;
        }
        return nullptr;
    };

    std::string* first = next_content_line();
    if (!first) throw CayleyParseError(1, "empty input");
    int n = 0;
    {
        std::istringstream iss(*first);
        if (!(iss >> n) || n <= 0) throw CayleyParseError(static_cast<int>(li + 1), "expected a positive order");
        std::string extra;
        if (iss >> extra) throw CayleyParseError(static_cast<int>(li + 1), "unexpected token after order");
    }
    ++li;

    FiniteGroup g;
    g.order = n;
    g.table.reserve(static_cast<size_t>(n) * n);
    for (int row = 0; row < n; ++row) {
        std::string* line = next_content_line();
        if (!line) throw CayleyParseError(static_cast<int>(lines.size() + 1),
                                          "missing table row " + std::to_string(row));
        std::istringstream iss(*line);
        for (int col = 0; col < n; ++col) {
            int v;
            if (!(iss >> v))
                throw CayleyParseError(static_cast<int>(li + 1),
                                       "row has fewer than " + std::to_string(n) + " entries");
            if (v < 0 || v >= n)
                throw CayleyParseError(static_cast<int>(li + 1), "entry out of range");
            g.table.push_back(v);
        }
        std::string extra;
        if (iss >> extra)
            throw CayleyParseError(static_cast<int>(li + 1), "row has more than " +
                                                                 std::to_string(n) + " entries");
        ++li;
    }

    if (std::string* line = next_content_line()) {
        if (line->rfind("names:", 0) != 0)
            throw CayleyParseError(static_cast<int>(li + 1), "expected 'names:' line or end of file");
        std::string rest = line->substr(6);
        std::vector<std::string> names;
        std::string cur;
        for (char ch : rest) {
            if (ch == ',') {
                names.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        names.push_back(cur);
        for (auto& nm : names) {
            size_t a = nm.find_first_not_of(" \t");
            size_t b = nm.find_last_not_of(" \t");
            nm = a == std::string::npos ? "" : nm.substr(a, b - a + 1);
        }
        if (static_cast<int>(names.size()) != n)
            throw CayleyParseError(static_cast<int>(li + 1), "names list length does not match order");
        g.names = std::move(names);
        ++li;
        if (next_content_line())
            throw CayleyParseError(static_cast<int>(li + 1), "unexpected trailing content");
    }
    if (g.names.empty())
        for (int i = 0; i < n; ++i) g.names.push_back("g" + std::to_string(i));

    // locate the identity and renumber so it sits at index 0
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) ok = g.mul(e, j) == j && g.mul(j, e) == j;
        if (ok) identity = e;
    }
    if (identity < 0) throw GroupValidationError("identity", "table has no two-sided identity");
    if (identity != 0) {
        std::vector<int> perm(n);  // old index -> new index
        perm[identity] = 0;
        int next = 1;
        for (int i = 0; i < n; ++i)
            if (i != identity) perm[i] = next++;
        FiniteGroup h;
        h.order = n;
        h.table.assign(static_cast<size_t>(n) * n, 0);
        h.names.resize(n);
        for (int i = 0; i < n; ++i) {
            h.names[perm[i]] = g.names[i];
            for (int j = 0; j < n; ++j) h.at(perm[i], perm[j]) = perm[g.mul(i, j)];
        }
        g = std::move(h);
    }
    validate_group(g, force_associativity);
    return g;
}

inline std::string serialize_cayley_table(const FiniteGroup& g) {
    std::ostringstream out;
    out << g.order << "\n";
    for (int i = 0; i < g.order; ++i) {
        for (int j = 0; j < g.order; ++j) {
            if (j) out << ' ';
            out << g.mul(i, j);
        }
        out << "\n";
    }
    if (!g.names.empty()) {
        out << "names: ";
        for (int i = 0; i < g.order; ++i) {
            if (i) out << ',';
            out << g.names[i];
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace sgs
