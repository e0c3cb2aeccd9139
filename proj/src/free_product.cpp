#include "treeord/free_product.hpp"

#include <algorithm>

namespace treeord {

TauBreakdown tau(const FactorFamily& family, const IndexOrder& index_order,
                 const NormalForm& g) {
    TauBreakdown t;
    for (const auto& s : g.syllables()) {
        if (family.factor(s.factor).is_positive(s.element)) ++t.positive;
        else ++t.negative;
    }
    for (std::size_t j = 0; j + 1 < g.size(); ++j) {
        if (index_order.less(g[j].factor, g[j + 1].factor)) ++t.jumps;
        else ++t.drops;
    }
    t.total = t.positive - t.negative + t.jumps - t.drops;
    return t;
}

Ord fp_compare(const FactorFamily& family, const IndexOrder& index_order,
               const NormalForm& g, const NormalForm& h) {
    if (g == h) return Ord::EQ;
    const auto diff = nf_multiply(family, nf_invert(family, g), h);
    return tau(family, index_order, diff).total > 0 ? Ord::LT : Ord::GT;
}

BassSerreTree::BassSerreTree(FactorFamily family, IndexOrder index_order)
    : family_(std::move(family)), index_order_(std::move(index_order)) {
    for (int i = 1; i <= family_.size(); ++i)
        if (!index_order_.contains(i))
            throw InputError("index order does not cover factor " + std::to_string(i));
}

BassSerreTree::Vertex BassSerreTree::coset_vertex(const NormalForm& g, int factor) const {
    family_.factor(factor);  // range-check
    if (!g.empty() && g[g.size() - 1].factor == factor) {
        auto prefix = g.syllables().first(g.size() - 1);
        return {NormalForm::normalized(family_, prefix), factor};
    }
    return {g, factor};
}

FactorElement BassSerreTree::coset_offset(const Vertex& v, const Edge& e) const {
    const auto diff = nf_multiply(family_, nf_invert(family_, v.rep), e.element);
    if (diff.empty()) return family_.factor(v.factor).identity();
    if (diff.size() == 1 && diff[0].factor == v.factor) return diff[0].element;
    throw InputError("edge is not adjacent to the given coset vertex");
}

bool BassSerreTree::edge_less(const Vertex& v, const Edge& a, const Edge& b) const {
    if (v.factor == 0) {
        if (!(a.element == v.rep) || !(b.element == v.rep))
            throw InputError("edge is not adjacent to the given 0-vertex");
        return index_order_.less(a.factor, b.factor);
    }
    if (a.factor != v.factor || b.factor != v.factor)
        throw InputError("edge is not adjacent to the given coset vertex");
    const auto ha = coset_offset(v, a);
    const auto hb = coset_offset(v, b);
    return family_.factor(v.factor).compare(ha, hb) == std::strong_ordering::less;
}

Geodesic<BassSerreTree::Vertex, BassSerreTree::Edge> BassSerreTree::geodesic(
    const Vertex& x, const Vertex& y) const {
    Geodesic<Vertex, Edge> path;
    if (x == y) {
        path.vertices.push_back(x);
        return path;
    }

    // Peel a coset endpoint down to the adjacent 0-vertex nearest the other
    // endpoint, then the 0-vertex case walks the syllables of x^-1 y.
    if (x.factor != 0) {
        const auto w = nf_multiply(family_, nf_invert(family_, x.rep), y.rep);
        NormalForm exit = x.rep;
        if (!w.empty() && w[0].factor == x.factor)
            exit = nf_multiply(family_, x.rep,
                               NormalForm::syllable(family_, w[0].factor, w[0].element));
        auto rest = geodesic(element_vertex(exit), y);
        path.vertices.push_back(x);
        path.steps.push_back({Edge{exit, x.factor}, -1});
        path.vertices.insert(path.vertices.end(), rest.vertices.begin(), rest.vertices.end());
        path.steps.insert(path.steps.end(), rest.steps.begin(), rest.steps.end());
        return path;
    }
    if (y.factor != 0) {
        const auto w = nf_multiply(family_, nf_invert(family_, x.rep), y.rep);
        NormalForm entry = y.rep;
        if (!w.empty() && w[w.size() - 1].factor == y.factor) {
            const auto& last = w[w.size() - 1];
            entry = nf_multiply(
                family_, y.rep,
                NormalForm::syllable(family_, last.factor,
                                     family_.factor(last.factor).invert(last.element)));
        }
        path = geodesic(x, element_vertex(entry));
        path.steps.push_back({Edge{entry, y.factor}, +1});
        path.vertices.push_back(y);
        return path;
    }

    // Both 0-vertices: alternate up into a coset and back down, once per
    // syllable of x^-1 y.
    const auto w = nf_multiply(family_, nf_invert(family_, x.rep), y.rep);
    NormalForm current = x.rep;
    path.vertices.push_back(x);
    for (const auto& s : w.syllables()) {
        path.steps.push_back({Edge{current, s.factor}, +1});
        path.vertices.push_back(coset_vertex(current, s.factor));
        current = nf_multiply(family_, current,
                              NormalForm::syllable(family_, s.factor, s.element));
        path.steps.push_back({Edge{current, s.factor}, -1});
        path.vertices.push_back(element_vertex(current));
    }
    return path;
}

Geodesic<BassSerreTree::Vertex, BassSerreTree::Edge> bass_serre_geodesic(
    const BassSerreTree& tree, const NormalForm& g) {
    return tree.geodesic(tree.element_vertex(NormalForm()), tree.element_vertex(g));
}

std::vector<NormalForm> enumerate_normal_forms(const FactorFamily& family,
                                               int max_syllables,
                                               std::int64_t exponent_bound) {
    for (int i = 1; i <= family.size(); ++i)
        if (dynamic_cast<const ZFactor*>(&family.factor(i)) == nullptr)
            throw InputError("enumeration requires all factors to be Z, factor " +
                             std::to_string(i) + " is " + family.factor(i).name());
    std::vector<NormalForm> out;
    std::vector<Syllable> current;
    auto extend = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(NormalForm::normalized(family, current));
            return;
        }
        for (int factor = 1; factor <= family.size(); ++factor) {
            if (!current.empty() && current.back().factor == factor) continue;
            for (std::int64_t m = -exponent_bound; m <= exponent_bound; ++m) {
                if (m == 0) continue;
                current.push_back({factor, ZFactor::make(m)});
                self(self, remaining - 1);
                current.pop_back();
            }
        }
    };
    for (int len = 0; len <= max_syllables; ++len) extend(extend, len);
    return out;
}

std::vector<NormalForm> cone_enumerate(const FactorFamily& family,
                                       const IndexOrder& index_order,
                                       int max_syllables, std::int64_t exponent_bound) {
    std::vector<NormalForm> cone;
    for (auto& g : enumerate_normal_forms(family, max_syllables, exponent_bound))
        if (tau(family, index_order, g).total > 0) cone.push_back(std::move(g));
    std::sort(cone.begin(), cone.end(), [&](const NormalForm& a, const NormalForm& b) {
        return fp_compare(family, index_order, a, b) == Ord::LT;
    });
    return cone;
}

}  // namespace treeord
