#include "treeord/rooted.hpp"

#include <algorithm>
#include <numeric>

namespace treeord {

namespace {

int find_name(const std::vector<std::string>& names, std::string_view name) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace

RootedTree::Builder& RootedTree::Builder::root(std::string name) {
    if (has_root_) throw InputError("root is already set to '" + names_[0] + "'");
    if (name.empty()) throw InputError("vertex name must be nonempty");
    has_root_ = true;
    names_.push_back(std::move(name));
    parents_.push_back(-1);
    return *this;
}

RootedTree::Builder& RootedTree::Builder::child(std::string_view parent, std::string name) {
    if (!has_root_) throw InputError("root must be declared before children");
    if (name.empty()) throw InputError("vertex name must be nonempty");
    const int p = find_name(names_, parent);
    if (p < 0) throw InputError("unknown parent vertex '" + std::string(parent) + "'");
    if (find_name(names_, name) >= 0)
        throw InputError("vertex '" + name + "' is already defined");
    names_.push_back(std::move(name));
    parents_.push_back(p);
    return *this;
}

RootedTree RootedTree::Builder::build() {
    if (!has_root_) throw InputError("no root vertex");
    return RootedTree(std::move(*this));
}

RootedTree::RootedTree(Builder&& b)
    : names_(std::move(b.names_)), parents_(std::move(b.parents_)) {
    children_.resize(names_.size());
    depths_.assign(names_.size(), 0);
    for (std::size_t v = 1; v < names_.size(); ++v) {
        children_[static_cast<std::size_t>(parents_[v])].push_back(static_cast<Vertex>(v));
        depths_[v] = depths_[static_cast<std::size_t>(parents_[v])] + 1;
    }
}

RootedTree::Vertex RootedTree::vertex(std::string_view name) const {
    const int v = find_name(names_, name);
    if (v < 0) throw InputError("unknown vertex '" + std::string(name) + "'");
    return v;
}

RootedTree::Vertex RootedTree::find_vertex(std::string_view name) const {
    return find_name(names_, name);
}

RootedTree::Vertex RootedTree::lowest_common_ancestor(Vertex x, Vertex y) const {
    while (depth(x) > depth(y)) x = parent(x);
    while (depth(y) > depth(x)) y = parent(y);
    while (x != y) {
        x = parent(x);
        y = parent(y);
    }
    return x;
}

RootedTree::Vertex RootedTree::child_toward(Vertex ancestor, Vertex descendant) const {
    Vertex v = descendant;
    while (v != root() && parent(v) != ancestor) v = parent(v);
    if (v == root() || parent(v) != ancestor)
        throw InputError("'" + name(descendant) + "' is not a strict descendant of '" +
                         name(ancestor) + "'");
    return v;
}

FamilyOrder FamilyOrder::parent_first(const RootedTree& t) {
    FamilyOrder fam(static_cast<std::size_t>(t.vertex_count()));
    for (RootedTree::Vertex v = 0; v < t.vertex_count(); ++v) {
        auto& family = fam.families_[static_cast<std::size_t>(v)];
        family.push_back(v);
        family.insert(family.end(), t.children(v).begin(), t.children(v).end());
    }
    return fam;
}

FamilyOrder FamilyOrder::parent_last(const RootedTree& t) {
    FamilyOrder fam(static_cast<std::size_t>(t.vertex_count()));
    for (RootedTree::Vertex v = 0; v < t.vertex_count(); ++v) {
        auto& family = fam.families_[static_cast<std::size_t>(v)];
        family.insert(family.end(), t.children(v).begin(), t.children(v).end());
        family.push_back(v);
    }
    return fam;
}

void FamilyOrder::set_family(const RootedTree& t, RootedTree::Vertex v,
                             std::span<const RootedTree::Vertex> items) {
    if (families_.size() != static_cast<std::size_t>(t.vertex_count()))
        throw InputError("family order was built for a different tree");
    if (items.size() != t.children(v).size() + 1)
        throw InputError("family of '" + t.name(v) + "' must rank " +
                         std::to_string(t.children(v).size() + 1) + " items, got " +
                         std::to_string(items.size()));
    std::vector<RootedTree::Vertex> sorted(items.begin(), items.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("family of '" + t.name(v) + "' ranks an item twice");
    for (const auto item : items)
        if (item != v && (item < 0 || item >= t.vertex_count() || t.parent(item) != v))
            throw InputError("family of '" + t.name(v) + "' ranks a non-member");
    families_[static_cast<std::size_t>(v)].assign(items.begin(), items.end());
}

int FamilyOrder::rank(RootedTree::Vertex v, RootedTree::Vertex item) const {
    const auto& family = families_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < family.size(); ++i)
        if (family[i] == item) return static_cast<int>(i);
    throw InputError("item is not ranked in the given family");
}

bool FamilyOrder::parent_first_everywhere() const {
    for (std::size_t v = 0; v < families_.size(); ++v)
        if (families_[v].empty() || families_[v][0] != static_cast<RootedTree::Vertex>(v))
            return false;
    return true;
}

Ord dfs_compare(const RootedTree& t, const FamilyOrder& fam, RootedTree::Vertex x,
                RootedTree::Vertex y) {
    if (x == y) return Ord::EQ;
    const auto a = t.lowest_common_ancestor(x, y);
    if (a == y)  // x is a descendant of y
        return fam.less(y, t.child_toward(y, x), y) ? Ord::LT : Ord::GT;
    if (a == x)  // y is a descendant of x
        return fam.less(x, t.child_toward(x, y), x) ? Ord::GT : Ord::LT;
    return fam.less(a, t.child_toward(a, x), t.child_toward(a, y)) ? Ord::LT : Ord::GT;
}

Ord bfs_compare(const RootedTree& t, const FamilyOrder& fam, RootedTree::Vertex x,
                RootedTree::Vertex y) {
    if (!fam.parent_first_everywhere())
        throw InputError("breadth-first order requires a parent-first family order");
    while (true) {
        if (x == y) return Ord::EQ;
        if (t.depth(x) != t.depth(y)) return t.depth(x) < t.depth(y) ? Ord::LT : Ord::GT;
        if (t.parent(x) == t.parent(y))
            return fam.less(t.parent(x), x, y) ? Ord::LT : Ord::GT;
        x = t.parent(x);
        y = t.parent(y);
    }
}

Realization realize_dfs(const RootedTree& t, const FamilyOrder& fam) {
    ExplicitTree::Builder b;
    for (RootedTree::Vertex v = 0; v < t.vertex_count(); ++v) b.add_vertex(t.name(v));
    for (RootedTree::Vertex c = 1; c < t.vertex_count(); ++c) {
        const auto p = t.parent(c);
        if (fam.less(p, c, p))
            b.add_edge("e_" + t.name(c), t.name(c), t.name(p));
        else
            b.add_edge("e_" + t.name(c), t.name(p), t.name(c));
    }
    for (RootedTree::Vertex v = 0; v < t.vertex_count(); ++v) {
        // Greater children ascending, then the parent edge, then smaller
        // children ascending.
        std::vector<std::string> order;
        for (const auto item : fam.family(v))
            if (item != v && !fam.less(v, item, v)) order.push_back("e_" + t.name(item));
        if (v != t.root()) order.push_back("e_" + t.name(v));
        for (const auto item : fam.family(v))
            if (item != v && fam.less(v, item, v)) order.push_back("e_" + t.name(item));
        if (order.size() > 1) b.local_order(t.name(v), order);
    }
    return b.build();
}

Realization realize_bfs(const RootedTree& t, const FamilyOrder& fam) {
    if (!fam.parent_first_everywhere())
        throw InputError("breadth-first order requires a parent-first family order");
    ExplicitTree::Builder b;
    for (RootedTree::Vertex v = 0; v < t.vertex_count(); ++v) b.add_vertex(t.name(v));
    for (RootedTree::Vertex c = 1; c < t.vertex_count(); ++c)
        b.add_edge("e_" + t.name(c), t.name(t.parent(c)), t.name(c));
    for (RootedTree::Vertex v = 0; v < t.vertex_count(); ++v) {
        std::vector<std::string> order;
        if (v != t.root()) order.push_back("e_" + t.name(v));
        for (const auto item : fam.family(v))
            if (item != v) order.push_back("e_" + t.name(item));
        if (order.size() > 1) b.local_order(t.name(v), order);
    }
    return b.build();
}

std::vector<int> number_traversal(const RootedTree& t, TraversalMode mode,
                                  const FamilyOrder* fam) {
    FamilyOrder defaulted = FamilyOrder::parent_first(t);
    const FamilyOrder* effective = &defaulted;
    switch (mode) {
        case TraversalMode::Pre:
            break;
        case TraversalMode::Post:
            defaulted = FamilyOrder::parent_last(t);
            break;
        case TraversalMode::Bfs:
            if (fam != nullptr) effective = fam;
            break;
        case TraversalMode::Custom:
            if (fam == nullptr) throw InputError("custom traversal requires a family order");
            effective = fam;
            break;
    }
    std::vector<RootedTree::Vertex> vertices(static_cast<std::size_t>(t.vertex_count()));
    std::iota(vertices.begin(), vertices.end(), 0);
    const bool bfs = mode == TraversalMode::Bfs;
    std::sort(vertices.begin(), vertices.end(),
              [&](RootedTree::Vertex a, RootedTree::Vertex b) {
                  return (bfs ? bfs_compare(t, *effective, a, b)
                              : dfs_compare(t, *effective, a, b)) == Ord::LT;
              });
    std::vector<int> ranks(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        ranks[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i) + 1;
    return ranks;
}

}  // namespace treeord
