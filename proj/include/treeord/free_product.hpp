#pragma once

#include <cstdint>
#include <vector>

#include "treeord/normal_form.hpp"
#include "treeord/order.hpp"
#include "treeord/tree.hpp"

namespace treeord {

// Syllable-level weight of a free-product element: positive minus negative
// syllables, plus index jumps minus index drops between consecutive
// syllables.
struct TauBreakdown {
    std::int64_t positive = 0;
    std::int64_t negative = 0;
    std::int64_t jumps = 0;
    std::int64_t drops = 0;
    std::int64_t total = 0;  // positive - negative + jumps - drops
};

TauBreakdown tau(const FactorFamily& family, const IndexOrder& index_order,
                 const NormalForm& g);

// g < h exactly when tau(g^-1 h) > 0. Left-invariant; extends each factor's
// own order.
Ord fp_compare(const FactorFamily& family, const IndexOrder& index_order,
               const NormalForm& g, const NormalForm& h);

// The tree on which the free product acts: 0-vertices are the group
// elements, i-vertices the cosets gG_i, and the edge (g, i) joins g to gG_i,
// oriented toward the coset. Local orders come from the index order at
// 0-vertices and from the factor orders at i-vertices. Infinite, realized
// lazily through geodesics.
class BassSerreTree {
public:
    struct Vertex {
        NormalForm rep;  // canonical: for an i-vertex, no trailing i-syllable
        int factor;      // 0 for a 0-vertex

        friend bool operator==(const Vertex&, const Vertex&) = default;
    };
    struct Edge {
        NormalForm element;
        int factor;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    BassSerreTree(FactorFamily family, IndexOrder index_order);

    Vertex element_vertex(NormalForm g) const { return {std::move(g), 0}; }
    // The coset gG_i, canonicalized by stripping a trailing i-syllable.
    Vertex coset_vertex(const NormalForm& g, int factor) const;

    Geodesic<Vertex, Edge> geodesic(const Vertex& x, const Vertex& y) const;
    bool edge_less(const Vertex& v, const Edge& a, const Edge& b) const;

    const FactorFamily& family() const { return family_; }
    const IndexOrder& index_order() const { return index_order_; }

private:
    // The G_i component h of an adjacent edge (rh, i) at the i-vertex with
    // canonical representative rep.
    FactorElement coset_offset(const Vertex& v, const Edge& e) const;

    FactorFamily family_;
    IndexOrder index_order_;
};

// The alternating geodesic of length 2n from the identity 0-vertex to the
// 0-vertex g, where n is the syllable length of g.
Geodesic<BassSerreTree::Vertex, BassSerreTree::Edge> bass_serre_geodesic(
    const BassSerreTree& tree, const NormalForm& g);

// All normal forms over all-Z factors with at most max_syllables syllables
// and exponents in +-1..+-exponent_bound whose weight is positive, sorted
// ascending under fp_compare. Requires every factor to be Z.
std::vector<NormalForm> cone_enumerate(const FactorFamily& family,
                                       const IndexOrder& index_order,
                                       int max_syllables, std::int64_t exponent_bound);

// All normal forms within the same bounds, identity included, in a fixed
// enumeration order (by syllable count, then factor index, then exponent).
std::vector<NormalForm> enumerate_normal_forms(const FactorFamily& family,
                                               int max_syllables,
                                               std::int64_t exponent_bound);

}  // namespace treeord
