#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "treeord/errors.hpp"
#include "treeord/order.hpp"

namespace treeord {

// One traversal step along a geodesic: an edge together with the direction
// it is crossed. exponent is +1 when the edge is crossed from its origin to
// its terminus and -1 otherwise.
template <typename E>
struct EdgeUse {
    E edge;
    int exponent;  // +1 or -1
};

// The unique reduced path between two vertices. vertices.size() is always
// steps.size() + 1; step i connects vertices[i] to vertices[i + 1].
template <typename V, typename E>
struct Geodesic {
    std::vector<V> vertices;
    std::vector<EdgeUse<E>> steps;

    std::size_t length() const { return steps.size(); }
};

struct RiseBreakdown {
    std::int64_t edge_rise = 0;    // crossings with orientation minus against
    std::int64_t vertex_rise = 0;  // local rises minus falls at interior vertices
    std::int64_t total = 0;        // edge_rise + vertex_rise
};

// An oriented tree with a strict total order on the edges adjacent to each
// vertex. Implementations may be finite and explicit or lazy and infinite;
// the only requirements are geodesics and local edge comparison.
template <typename T>
concept LocallyOrderedTree = requires(const T& t, const typename T::Vertex& v,
                                      const typename T::Edge& e) {
    { t.geodesic(v, v) } -> std::same_as<Geodesic<typename T::Vertex, typename T::Edge>>;
    { t.edge_less(v, e, e) } -> std::same_as<bool>;
    { v == v } -> std::convertible_to<bool>;
};

// Sum of the per-edge and per-interior-vertex up/down counts along the
// geodesic from x to y. Endpoints contribute nothing at the vertex level.
template <LocallyOrderedTree T>
RiseBreakdown rise_index(const T& tree, const typename T::Vertex& x,
                         const typename T::Vertex& y) {
    const auto path = tree.geodesic(x, y);
    RiseBreakdown r;
    for (const auto& step : path.steps) r.edge_rise += step.exponent;
    for (std::size_t i = 1; i < path.steps.size(); ++i) {
        const auto& at = path.vertices[i];
        r.vertex_rise +=
            tree.edge_less(at, path.steps[i - 1].edge, path.steps[i].edge) ? +1 : -1;
    }
    r.total = r.edge_rise + r.vertex_rise;
    return r;
}

// x precedes y exactly when the rise index from x to y is positive. For
// distinct vertices the rise index is odd, hence never zero.
template <LocallyOrderedTree T>
Ord compare_vertices(const T& tree, const typename T::Vertex& x,
                     const typename T::Vertex& y) {
    if (x == y) return Ord::EQ;
    return rise_index(tree, x, y).total > 0 ? Ord::LT : Ord::GT;
}

// Finite oriented tree with explicit adjacency and local orders. Vertices
// and edges are referred to by dense indices; the names used to build the
// tree are kept for I/O.
class ExplicitTree {
public:
    using Vertex = int;
    using Edge = int;

    class Builder {
    public:
        // Returns the new vertex index. Names must be unique.
        int add_vertex(std::string name);
        // Endpoints must already exist and be distinct.
        int add_edge(std::string name, std::string_view origin,
                     std::string_view terminus);
        // Full ranking of the edges adjacent to `vertex`, ascending. May be
        // omitted; the default is edge insertion order.
        void local_order(std::string_view vertex,
                         const std::vector<std::string>& edges_ascending);
        // Validates connectivity and local-order coverage.
        ExplicitTree build();

    private:
        friend class ExplicitTree;
        struct PendingOrder {
            int vertex;
            std::vector<int> edges;
        };
        std::vector<std::string> vertex_names_;
        std::vector<std::string> edge_names_;
        std::vector<std::pair<int, int>> ends_;
        std::vector<PendingOrder> orders_;
        std::unordered_map<std::string, int> vertex_index_;
        std::unordered_map<std::string, int> edge_index_;
    };

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_name(Vertex v) const { return vertices_[v].name; }
    const std::string& edge_name(Edge e) const { return edges_[e].name; }

    // Throws InputError for unknown names.
    Vertex vertex(std::string_view name) const;
    std::optional<Vertex> find_vertex(std::string_view name) const;
    std::optional<Edge> find_edge(std::string_view name) const;

    Vertex origin(Edge e) const { return edges_[e].origin; }
    Vertex terminus(Edge e) const { return edges_[e].terminus; }
    Vertex other_end(Edge e, Vertex v) const {
        return edges_[e].origin == v ? edges_[e].terminus : edges_[e].origin;
    }

    // Adjacent edges of v in ascending local order.
    std::span<const Edge> link(Vertex v) const { return vertices_[v].link; }

    bool edge_less(Vertex v, Edge a, Edge b) const {
        return rank_at(v, a) < rank_at(v, b);
    }

    Geodesic<Vertex, Edge> geodesic(Vertex x, Vertex y) const;

private:
    struct VertexRec {
        std::string name;
        std::vector<Edge> link;  // ascending local order
    };
    struct EdgeRec {
        std::string name;
        Vertex origin;
        Vertex terminus;
        int rank_at_origin;
        int rank_at_terminus;
    };

    int rank_at(Vertex v, Edge e) const {
        return edges_[e].origin == v ? edges_[e].rank_at_origin
                                     : edges_[e].rank_at_terminus;
    }
    void check_vertex(Vertex v) const;

    std::vector<VertexRec> vertices_;
    std::vector<EdgeRec> edges_;
    std::unordered_map<std::string, int> vertex_index_;
    std::unordered_map<std::string, int> edge_index_;
};

// All vertices in strictly ascending rise order.
std::vector<ExplicitTree::Vertex> sort_vertices(const ExplicitTree& tree);

struct AxiomReport {
    bool ok = true;
    std::string failure;  // description of the first violation, empty when ok
    std::int64_t pairs_checked = 0;
    std::int64_t triples_checked = 0;
};

// Exhaustively verifies, over all vertex pairs and triples, that the rise
// index is zero on the diagonal, odd (hence nonzero) off it, antisymmetric,
// sums to +-1 over distinct triples, and that the induced comparison is
// transitive. Stops at the first violation.
AxiomReport check_total_order_axioms(const ExplicitTree& tree);

// Inserts a midpoint vertex into every edge. An edge e from a to b becomes
// a vertex "<e>.0" with edges "<e>.minus": a -> <e>.0 and "<e>.plus":
// b -> <e>.0, ordered minus before plus at the midpoint. Local orders at
// original vertices carry over to the incident half-edges.
ExplicitTree barycentric_subdivide(const ExplicitTree& tree);

}  // namespace treeord
