#pragma once

#include <string>
#include <string_view>

#include "treeord/rooted.hpp"
#include "treeord/tree.hpp"

namespace treeord {

// Tree file directives, one per line, '#' starts a comment:
//   vertex <id>
//   edge <eid> <origin> <terminus>
//   order <vid> <eid>...   (ascending local rank)
// Ids must be declared before use. Every vertex with at least two adjacent
// edges needs exactly one order line covering its full link.
ExplicitTree parse_tree(std::string_view text, std::string_view source = "<input>");

// Inverse of parse_tree: vertices, then edges, then one order line per
// vertex of degree at least two. Deterministic.
std::string serialize_tree(const ExplicitTree& tree);

struct ParsedRooted {
    RootedTree tree;
    FamilyOrder order;
    bool has_custom_orders = false;
};

// Rooted file directives:
//   root <id>
//   child <parent> <child>   (file order = sibling order)
//   vorder <vid> <item>...   (child ids plus `self` for <vid>'s own slot)
// The mode fills family orders for vertices without a vorder line; pre and
// post determine them completely and therefore reject vorder lines.
ParsedRooted parse_rooted(std::string_view text, TraversalMode mode,
                          std::string_view source = "<input>");

}  // namespace treeord
