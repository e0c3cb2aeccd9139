#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "treeord/rooted.hpp"
#include "treeord/tree.hpp"

namespace treeord::testing {

// Raw random tree kept separate from ExplicitTree so oracles can recompute
// everything from first principles.
struct RawTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;       // edge e: (origin, terminus)
    std::vector<std::vector<int>> local_orders;   // per vertex, adjacent edges ascending
};

inline RawTree random_raw_tree(std::mt19937& rng, int max_vertices) {
    RawTree raw;
    raw.n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    raw.local_orders.resize(static_cast<std::size_t>(raw.n));
    for (int v = 1; v < raw.n; ++v) {
        const int anchor = std::uniform_int_distribution<int>(0, v - 1)(rng);
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
            raw.edges.emplace_back(anchor, v);
        else
            raw.edges.emplace_back(v, anchor);
    }
    for (int e = 0; e < raw.n - 1; ++e) {
        raw.local_orders[static_cast<std::size_t>(raw.edges[e].first)].push_back(e);
        raw.local_orders[static_cast<std::size_t>(raw.edges[e].second)].push_back(e);
    }
    for (auto& order : raw.local_orders) std::shuffle(order.begin(), order.end(), rng);
    return raw;
}

inline ExplicitTree to_explicit(const RawTree& raw) {
    ExplicitTree::Builder b;
    for (int v = 0; v < raw.n; ++v) b.add_vertex("v" + std::to_string(v));
    for (std::size_t e = 0; e < raw.edges.size(); ++e)
        b.add_edge("e" + std::to_string(e), "v" + std::to_string(raw.edges[e].first),
                   "v" + std::to_string(raw.edges[e].second));
    for (int v = 0; v < raw.n; ++v) {
        if (raw.local_orders[static_cast<std::size_t>(v)].size() < 2) continue;
        std::vector<std::string> names;
        for (const int e : raw.local_orders[static_cast<std::size_t>(v)])
            names.push_back("e" + std::to_string(e));
        b.local_order("v" + std::to_string(v), names);
    }
    return b.build();
}

// Walk-based rise oracle: queue BFS for the path, then per-step orientation
// and rank lookups straight off the raw arrays.
inline std::int64_t oracle_rise(const RawTree& raw, int x, int y) {
    std::vector<int> parent(static_cast<std::size_t>(raw.n), -1);
    std::vector<int> parent_edge(static_cast<std::size_t>(raw.n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(raw.n), false);
    std::queue<int> queue;
    queue.push(x);
    seen[static_cast<std::size_t>(x)] = true;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (const int e : raw.local_orders[static_cast<std::size_t>(v)]) {
            const auto [o, t] = raw.edges[static_cast<std::size_t>(e)];
            const int w = o == v ? t : o;
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            parent[static_cast<std::size_t>(w)] = v;
            parent_edge[static_cast<std::size_t>(w)] = e;
            queue.push(w);
        }
    }
    std::vector<int> path_vertices{y};
    std::vector<int> path_edges;
    for (int v = y; v != x; v = parent[static_cast<std::size_t>(v)]) {
        path_edges.push_back(parent_edge[static_cast<std::size_t>(v)]);
        path_vertices.push_back(parent[static_cast<std::size_t>(v)]);
    }
    std::reverse(path_vertices.begin(), path_vertices.end());
    std::reverse(path_edges.begin(), path_edges.end());

    const auto rank_at = [&](int v, int e) {
        const auto& order = raw.local_orders[static_cast<std::size_t>(v)];
        return std::find(order.begin(), order.end(), e) - order.begin();
    };
    std::int64_t rise = 0;
    for (std::size_t i = 0; i < path_edges.size(); ++i) {
        const auto [o, t] = raw.edges[static_cast<std::size_t>(path_edges[i])];
        rise += t == path_vertices[i + 1] ? +1 : -1;
        if (i > 0) {
            const int at = path_vertices[i];
            rise += rank_at(at, path_edges[i - 1]) < rank_at(at, path_edges[i]) ? +1 : -1;
        }
    }
    return rise;
}

// Raw random rooted tree with a family permutation per vertex.
struct RawRooted {
    int n = 0;
    std::vector<int> parent;                    // parent[0] = -1
    std::vector<std::vector<int>> families;     // per vertex: {v} + children, shuffled
};

inline RawRooted random_raw_rooted(std::mt19937& rng, int max_vertices) {
    RawRooted raw;
    raw.n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    raw.parent.assign(static_cast<std::size_t>(raw.n), -1);
    raw.families.resize(static_cast<std::size_t>(raw.n));
    for (int v = 0; v < raw.n; ++v) raw.families[static_cast<std::size_t>(v)].push_back(v);
    for (int v = 1; v < raw.n; ++v) {
        raw.parent[static_cast<std::size_t>(v)] =
            std::uniform_int_distribution<int>(0, v - 1)(rng);
        raw.families[static_cast<std::size_t>(raw.parent[static_cast<std::size_t>(v)])]
            .push_back(v);
    }
    for (auto& family : raw.families) std::shuffle(family.begin(), family.end(), rng);
    return raw;
}

inline RootedTree to_rooted(const RawRooted& raw) {
    RootedTree::Builder b;
    b.root("n0");
    for (int v = 1; v < raw.n; ++v)
        b.child("n" + std::to_string(raw.parent[static_cast<std::size_t>(v)]),
                "n" + std::to_string(v));
    return b.build();
}

inline FamilyOrder to_family(const RootedTree& tree, const RawRooted& raw) {
    auto fam = FamilyOrder::parent_first(tree);
    for (int v = 0; v < raw.n; ++v)
        fam.set_family(tree, v, raw.families[static_cast<std::size_t>(v)]);
    return fam;
}

// Parent-first variant: keeps the shuffled child order but pins v up front.
inline FamilyOrder to_parent_first_family(const RootedTree& tree, const RawRooted& raw) {
    auto fam = FamilyOrder::parent_first(tree);
    for (int v = 0; v < raw.n; ++v) {
        std::vector<int> items{v};
        for (const int w : raw.families[static_cast<std::size_t>(v)])
            if (w != v) items.push_back(w);
        fam.set_family(tree, v, items);
    }
    return fam;
}

// Recursive generalized-DFS oracle: emit each family in its own order,
// recursing at children.
inline void dfs_oracle_sequence(const RawRooted& raw, int v, std::vector<int>& out) {
    for (const int item : raw.families[static_cast<std::size_t>(v)]) {
        if (item == v)
            out.push_back(v);
        else
            dfs_oracle_sequence(raw, item, out);
    }
}

// Textbook queue BFS: visit the root, then children in family order.
inline std::vector<int> bfs_oracle_sequence(const RawRooted& raw) {
    std::vector<int> out;
    std::queue<int> queue;
    queue.push(0);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        out.push_back(v);
        for (const int item : raw.families[static_cast<std::size_t>(v)])
            if (item != v) queue.push(item);
    }
    return out;
}

}  // namespace treeord::testing
