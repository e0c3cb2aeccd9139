#include "treeord/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace treeord {

int ExplicitTree::Builder::add_vertex(std::string name) {
    if (name.empty()) throw InputError("vertex name must be nonempty");
    auto [it, fresh] = vertex_index_.emplace(name, static_cast<int>(vertex_names_.size()));
    if (!fresh) throw InputError("duplicate vertex '" + name + "'");
    vertex_names_.push_back(std::move(name));
    return it->second;
}

int ExplicitTree::Builder::add_edge(std::string name, std::string_view origin,
                                    std::string_view terminus) {
    if (name.empty()) throw InputError("edge name must be nonempty");
    auto o = vertex_index_.find(std::string(origin));
    if (o == vertex_index_.end())
        throw InputError("unknown vertex '" + std::string(origin) + "'");
    auto t = vertex_index_.find(std::string(terminus));
    if (t == vertex_index_.end())
        throw InputError("unknown vertex '" + std::string(terminus) + "'");
    if (o->second == t->second)
        throw InputError("edge '" + name + "' is a loop at '" + std::string(origin) + "'");
    auto [it, fresh] = edge_index_.emplace(name, static_cast<int>(edge_names_.size()));
    if (!fresh) throw InputError("duplicate edge '" + name + "'");
    edge_names_.push_back(std::move(name));
    ends_.emplace_back(o->second, t->second);
    return it->second;
}

void ExplicitTree::Builder::local_order(std::string_view vertex,
                                        const std::vector<std::string>& edges_ascending) {
    auto v = vertex_index_.find(std::string(vertex));
    if (v == vertex_index_.end())
        throw InputError("unknown vertex '" + std::string(vertex) + "'");
    PendingOrder po;
    po.vertex = v->second;
    for (const auto& en : edges_ascending) {
        auto e = edge_index_.find(en);
        if (e == edge_index_.end()) throw InputError("unknown edge '" + en + "'");
        po.edges.push_back(e->second);
    }
    orders_.push_back(std::move(po));
}

ExplicitTree ExplicitTree::Builder::build() {
    const int n = static_cast<int>(vertex_names_.size());
    const int m = static_cast<int>(edge_names_.size());
    if (n == 0) throw InputError("no vertices");
    if (m < n - 1)
        throw InputError("tree is disconnected: " + std::to_string(n) + " vertices but only " +
                         std::to_string(m) + " edges");
    if (m > n - 1)
        throw InputError("not a tree: " + std::to_string(n) + " vertices but " +
                         std::to_string(m) + " edges");

    ExplicitTree tree;
    tree.vertices_.resize(n);
    tree.edges_.resize(m);
    for (int v = 0; v < n; ++v) tree.vertices_[v].name = vertex_names_[v];
    for (int e = 0; e < m; ++e) {
        tree.edges_[e].name = edge_names_[e];
        tree.edges_[e].origin = ends_[e].first;
        tree.edges_[e].terminus = ends_[e].second;
    }
    tree.vertex_index_ = std::move(vertex_index_);
    tree.edge_index_ = std::move(edge_index_);

    // Default local order: edge insertion order.
    for (int e = 0; e < m; ++e) {
        tree.vertices_[ends_[e].first].link.push_back(e);
        tree.vertices_[ends_[e].second].link.push_back(e);
    }
    std::vector<bool> ordered(n, false);
    for (auto& po : orders_) {
        if (ordered[po.vertex])
            throw InputError("duplicate local order for vertex '" +
                             tree.vertices_[po.vertex].name + "'");
        ordered[po.vertex] = true;
        auto& link = tree.vertices_[po.vertex].link;
        if (po.edges.size() != link.size())
            throw InputError("local order at '" + tree.vertices_[po.vertex].name +
                             "' lists " + std::to_string(po.edges.size()) +
                             " edges, expected " + std::to_string(link.size()));
        std::vector<bool> seen(m, false);
        for (int e : po.edges) {
            const auto& er = tree.edges_[e];
            if (er.origin != po.vertex && er.terminus != po.vertex)
                throw InputError("edge '" + er.name + "' is not adjacent to '" +
                                 tree.vertices_[po.vertex].name + "'");
            if (seen[e])
                throw InputError("edge '" + er.name + "' listed twice in local order at '" +
                                 tree.vertices_[po.vertex].name + "'");
            seen[e] = true;
        }
        link = std::move(po.edges);
    }
    for (int v = 0; v < n; ++v) {
        const auto& link = tree.vertices_[v].link;
        for (int rank = 0; rank < static_cast<int>(link.size()); ++rank) {
            auto& er = tree.edges_[link[rank]];
            if (er.origin == v) er.rank_at_origin = rank;
            else er.rank_at_terminus = rank;
        }
    }

    // Edge count already matches a tree; connectivity rules out cycles.
    std::vector<bool> reached(n, false);
    std::deque<int> queue{0};
    reached[0] = true;
    int count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : tree.vertices_[v].link) {
            int w = tree.other_end(e, v);
            if (!reached[w]) {
                reached[w] = true;
                ++count;
                queue.push_back(w);
            }
        }
    }
    if (count != n) throw InputError("tree is disconnected");
    return tree;
}

void ExplicitTree::check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_count())
        throw InputError("vertex index " + std::to_string(v) + " out of range");
}

ExplicitTree::Vertex ExplicitTree::vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end())
        throw InputError("unknown vertex '" + std::string(name) + "'");
    return it->second;
}

std::optional<ExplicitTree::Vertex> ExplicitTree::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<ExplicitTree::Edge> ExplicitTree::find_edge(std::string_view name) const {
    auto it = edge_index_.find(std::string(name));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

Geodesic<int, int> ExplicitTree::geodesic(Vertex x, Vertex y) const {
    check_vertex(x);
    check_vertex(y);
    Geodesic<Vertex, Edge> path;
    if (x == y) {
        path.vertices.push_back(x);
        return path;
    }

    // Parent pointers from a traversal rooted at x, then walk back from y.
    std::vector<int> parent_edge(vertex_count(), -1);
    std::vector<int> parent_vertex(vertex_count(), -1);
    std::deque<int> queue{x};
    parent_vertex[x] = x;
    while (!queue.empty() && parent_vertex[y] == -1) {
        int v = queue.front();
        queue.pop_front();
        for (int e : vertices_[v].link) {
            int w = other_end(e, v);
            if (parent_vertex[w] == -1) {
                parent_vertex[w] = v;
                parent_edge[w] = e;
                queue.push_back(w);
            }
        }
    }

    std::vector<Vertex> rev_vertices;
    std::vector<EdgeUse<Edge>> rev_steps;
    for (int v = y; v != x; v = parent_vertex[v]) {
        rev_vertices.push_back(v);
        rev_steps.push_back({parent_edge[v],
                             edges_[parent_edge[v]].terminus == v ? +1 : -1});
    }
    rev_vertices.push_back(x);
    path.vertices.assign(rev_vertices.rbegin(), rev_vertices.rend());
    path.steps.assign(rev_steps.rbegin(), rev_steps.rend());
    return path;
}

std::vector<ExplicitTree::Vertex> sort_vertices(const ExplicitTree& tree) {
    std::vector<int> order(tree.vertex_count());
    for (int v = 0; v < tree.vertex_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return compare_vertices(tree, a, b) == Ord::LT;
    });
    return order;
}

AxiomReport check_total_order_axioms(const ExplicitTree& tree) {
    AxiomReport report;
    const int n = tree.vertex_count();
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.failure = std::move(msg);
    };
    auto name = [&](int v) { return tree.vertex_name(v); };

    std::vector<std::int64_t> rise(static_cast<std::size_t>(n) * n);
    auto at = [&](int a, int b) -> std::int64_t& { return rise[a * n + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) at(a, b) = rise_index(tree, a, b).total;

    for (int a = 0; a < n && report.ok; ++a) {
        if (at(a, a) != 0) {
            fail("rise(" + name(a) + "," + name(a) + ") = " + std::to_string(at(a, a)) +
                 ", expected 0");
            break;
        }
    }
    for (int a = 0; a < n && report.ok; ++a) {
        for (int b = a + 1; b < n && report.ok; ++b) {
            ++report.pairs_checked;
            if (at(a, b) % 2 == 0)
                fail("rise(" + name(a) + "," + name(b) + ") = " +
                     std::to_string(at(a, b)) + " is even");
            else if (at(a, b) != -at(b, a))
                fail("rise(" + name(a) + "," + name(b) + ") = " +
                     std::to_string(at(a, b)) + " but rise(" + name(b) + "," +
                     name(a) + ") = " + std::to_string(at(b, a)));
        }
    }

    for (int a = 0; a < n && report.ok; ++a) {
        for (int b = a + 1; b < n && report.ok; ++b) {
            for (int c = b + 1; c < n && report.ok; ++c) {
                ++report.triples_checked;
                const std::int64_t s = at(a, b) + at(b, c) + at(c, a);
                if (s != 1 && s != -1)
                    fail("rise sum over {" + name(a) + "," + name(b) + "," +
                         name(c) + "} = " + std::to_string(s));
            }
        }
    }

    // Transitivity of the induced strict order.
    for (int a = 0; a < n && report.ok; ++a) {
        for (int b = 0; b < n && report.ok; ++b) {
            if (b == a || at(a, b) <= 0) continue;
            for (int c = 0; c < n && report.ok; ++c) {
                if (c == a || c == b || at(b, c) <= 0) continue;
                if (at(a, c) <= 0)
                    fail(name(a) + " < " + name(b) + " < " + name(c) + " but not " +
                         name(a) + " < " + name(c));
            }
        }
    }
    return report;
}

ExplicitTree barycentric_subdivide(const ExplicitTree& tree) {
    ExplicitTree::Builder builder;
    for (int v = 0; v < tree.vertex_count(); ++v)
        builder.add_vertex(tree.vertex_name(v));
    for (int e = 0; e < tree.edge_count(); ++e)
        builder.add_vertex(tree.edge_name(e) + ".0");
    for (int e = 0; e < tree.edge_count(); ++e) {
        const auto& mid = tree.edge_name(e) + ".0";
        builder.add_edge(tree.edge_name(e) + ".minus",
                         tree.vertex_name(tree.origin(e)), mid);
        builder.add_edge(tree.edge_name(e) + ".plus",
                         tree.vertex_name(tree.terminus(e)), mid);
    }
    for (int v = 0; v < tree.vertex_count(); ++v) {
        std::vector<std::string> halves;
        for (int e : tree.link(v))
            halves.push_back(tree.edge_name(e) +
                             (tree.origin(e) == v ? ".minus" : ".plus"));
        if (halves.size() > 1)
            builder.local_order(tree.vertex_name(v), halves);
    }
    for (int e = 0; e < tree.edge_count(); ++e)
        builder.local_order(tree.edge_name(e) + ".0",
                            {tree.edge_name(e) + ".minus", tree.edge_name(e) + ".plus"});
    return builder.build();
}

}  // namespace treeord
