#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treeord/order.hpp"
#include "treeord/tree.hpp"

namespace treeord {

// A rooted tree with named vertices and an explicit sibling order (the order
// in which children were added).
class RootedTree {
public:
    using Vertex = int;

    class Builder {
    public:
        Builder& root(std::string name);
        // The parent must already exist; this forces tree shape and makes
        // insertion order the sibling order.
        Builder& child(std::string_view parent, std::string name);
        RootedTree build();

    private:
        friend class RootedTree;
        bool has_root_ = false;
        std::vector<std::string> names_;
        std::vector<int> parents_;
    };

    int vertex_count() const { return static_cast<int>(names_.size()); }
    Vertex root() const { return 0; }
    const std::string& name(Vertex v) const { return names_[static_cast<std::size_t>(v)]; }
    Vertex vertex(std::string_view name) const;  // throws on unknown name
    Vertex find_vertex(std::string_view name) const;  // -1 on unknown name

    Vertex parent(Vertex v) const { return parents_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> children(Vertex v) const { return children_[static_cast<std::size_t>(v)]; }
    int depth(Vertex v) const { return depths_[static_cast<std::size_t>(v)]; }

    Vertex lowest_common_ancestor(Vertex x, Vertex y) const;
    // The child of ancestor on the path down to descendant; descendant must
    // lie strictly below ancestor.
    Vertex child_toward(Vertex ancestor, Vertex descendant) const;

private:
    explicit RootedTree(Builder&& b);

    std::vector<std::string> names_;
    std::vector<int> parents_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<int> depths_;
};

// For each vertex v, a strict total ranking of v together with its children.
class FamilyOrder {
public:
    static FamilyOrder parent_first(const RootedTree& t);
    static FamilyOrder parent_last(const RootedTree& t);

    // items must be a permutation of {v} plus children(v).
    void set_family(const RootedTree& t, RootedTree::Vertex v,
                    std::span<const RootedTree::Vertex> items);

    std::span<const RootedTree::Vertex> family(RootedTree::Vertex v) const {
        return families_[static_cast<std::size_t>(v)];
    }
    int rank(RootedTree::Vertex v, RootedTree::Vertex item) const;
    bool less(RootedTree::Vertex v, RootedTree::Vertex a, RootedTree::Vertex b) const {
        return rank(v, a) < rank(v, b);
    }
    // True when every vertex ranks before all of its children.
    bool parent_first_everywhere() const;

private:
    explicit FamilyOrder(std::size_t vertex_count) : families_(vertex_count) {}

    std::vector<std::vector<RootedTree::Vertex>> families_;
};

// Generalized depth-first order: a descendant sorts against its ancestor by
// the ancestor's ranking of the child leading to it, and unrelated vertices
// sort by the children of their nearest common ancestor.
Ord dfs_compare(const RootedTree& t, const FamilyOrder& fam, RootedTree::Vertex x,
                RootedTree::Vertex y);

// Breadth-first order: by depth, then recursively by parent, then by sibling
// rank. Requires a parent-first family order.
Ord bfs_compare(const RootedTree& t, const FamilyOrder& fam, RootedTree::Vertex x,
                RootedTree::Vertex y);

// An oriented, locally ordered tree inducing the same order through the rise
// index. Vertex names carry over; the edge above child c is named "e_<c>".
using Realization = ExplicitTree;

Realization realize_dfs(const RootedTree& t, const FamilyOrder& fam);
Realization realize_bfs(const RootedTree& t, const FamilyOrder& fam);

enum class TraversalMode { Pre, Post, Bfs, Custom };

// 1-based rank of every vertex in the chosen order, indexed by vertex.
// Custom requires fam; Bfs uses fam when given (parent-first) and the
// sibling order otherwise; Pre and Post ignore fam.
std::vector<int> number_traversal(const RootedTree& t, TraversalMode mode,
                                  const FamilyOrder* fam = nullptr);

}  // namespace treeord
