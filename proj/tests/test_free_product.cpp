#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "treeord/free_product.hpp"
#include "treeord/normal_form.hpp"

using namespace treeord;

namespace {

const FactorFamily zz = FactorFamily::all_z(2);
const IndexOrder zz_order = IndexOrder::natural(2);

NormalForm nf2(const char* text) { return parse_normal_form(zz, text); }

}  // namespace

TEST_CASE("tau counts syllables and index moves") {
    const auto t0 = tau(zz, zz_order, nf2("1"));
    CHECK(t0.total == 0);
    CHECK(t0.positive == 0);
    CHECK(t0.negative == 0);

    CHECK(tau(zz, zz_order, nf2("1:+3")).total == 1);
    CHECK(tau(zz, zz_order, nf2("2:-1")).total == -1);

    const auto t = tau(zz, zz_order, nf2("1:+1 2:-1"));
    CHECK(t.positive == 1);
    CHECK(t.negative == 1);
    CHECK(t.jumps == 1);
    CHECK(t.drops == 0);
    CHECK(t.total == 1);

    const auto back = tau(zz, zz_order, nf2("2:+1 1:-1"));
    CHECK(back.jumps == 0);
    CHECK(back.drops == 1);
    CHECK(back.total == -1);
}

TEST_CASE("tau respects a permuted index order") {
    const IndexOrder reversed({2, 1});
    CHECK(tau(zz, reversed, nf2("1:+1 2:-1")).total == -1);
    CHECK(tau(zz, reversed, nf2("2:+1 1:-1")).total == 1);
}

TEST_CASE("fp_compare is total, extends the factors, and is left-invariant") {
    const auto g = nf2("1:+1 2:-1");
    CHECK(fp_compare(zz, zz_order, g, g) == Ord::EQ);
    CHECK(fp_compare(zz, zz_order, nf2("1"), nf2("1:+1")) == Ord::LT);
    CHECK(fp_compare(zz, zz_order, nf2("1"), nf2("2:-2")) == Ord::GT);

    // single-factor elements compare exactly as in Z
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            if (a == 0 || b == 0 || a == b) continue;
            const auto ga = NormalForm::syllable(zz, 2, ZFactor::make(a));
            const auto gb = NormalForm::syllable(zz, 2, ZFactor::make(b));
            CHECK(fp_compare(zz, zz_order, ga, gb) == (a < b ? Ord::LT : Ord::GT));
        }

    std::mt19937 rng(4242);
    const auto forms = enumerate_normal_forms(zz, 3, 1);
    std::uniform_int_distribution<std::size_t> pick(0, forms.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const auto& f = forms[pick(rng)];
        const auto& g1 = forms[pick(rng)];
        const auto& h1 = forms[pick(rng)];
        CHECK(fp_compare(zz, zz_order, g1, h1) ==
              fp_compare(zz, zz_order, nf_multiply(zz, f, g1), nf_multiply(zz, f, h1)));
    }
}

TEST_CASE("the alternating geodesic has length 2n and edge-rise 0") {
    const BassSerreTree tree(zz, zz_order);

    const auto trivial = bass_serre_geodesic(tree, nf2("1"));
    CHECK(trivial.steps.empty());
    CHECK(trivial.vertices.size() == 1);

    const auto g = nf2("1:+1 2:-1 1:+2");
    const auto p = bass_serre_geodesic(tree, g);
    REQUIRE(p.steps.size() == 6);
    REQUIRE(p.vertices.size() == 7);
    std::int64_t edge_rise = 0;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        CHECK(p.steps[i].exponent == (i % 2 == 0 ? +1 : -1));
        edge_rise += p.steps[i].exponent;
    }
    CHECK(edge_rise == 0);
    CHECK(p.vertices.front() == tree.element_vertex(nf2("1")));
    CHECK(p.vertices.back() == tree.element_vertex(g));
    // odd positions are coset vertices for the syllable factors 1, 2, 1
    CHECK(p.vertices[1].factor == 1);
    CHECK(p.vertices[3].factor == 2);
    CHECK(p.vertices[5].factor == 1);
}

TEST_CASE("tau equals the rise along the tree geodesic") {
    const BassSerreTree tree(zz, zz_order);
    const auto one = tree.element_vertex(nf2("1"));
    for (const auto& g : enumerate_normal_forms(zz, 3, 2)) {
        const auto expected = tau(zz, zz_order, g).total;
        CHECK(rise_index(tree, one, tree.element_vertex(g)).total == expected);
    }
}

TEST_CASE("tau is odd and antisymmetric off the identity") {
    for (const auto& g : enumerate_normal_forms(zz, 3, 2)) {
        const auto t = tau(zz, zz_order, g).total;
        if (g.empty())
            CHECK(t == 0);
        else
            CHECK(t % 2 != 0);
        CHECK(tau(zz, zz_order, nf_invert(zz, g)).total == -t);
    }
}

TEST_CASE("geodesics between arbitrary vertex kinds are consistent") {
    const BassSerreTree tree(zz, zz_order);
    const auto g = nf2("1:+1 2:+1");
    const auto h = nf2("1:-1");

    // 0-vertex to i-vertex and back
    const auto up = tree.geodesic(tree.element_vertex(g), tree.coset_vertex(h, 2));
    const auto down = tree.geodesic(tree.coset_vertex(h, 2), tree.element_vertex(g));
    CHECK(up.steps.size() == down.steps.size());
    REQUIRE(!up.vertices.empty());
    CHECK(up.vertices.front() == tree.element_vertex(g));
    CHECK(up.vertices.back() == tree.coset_vertex(h, 2));
    for (std::size_t i = 0; i < up.vertices.size(); ++i)
        CHECK(up.vertices[i] == down.vertices[down.vertices.size() - 1 - i]);

    // same coset through different representatives
    CHECK(tree.coset_vertex(nf2("1:+1 2:+1"), 2) == tree.coset_vertex(nf2("1:+1 2:-1"), 2));
    CHECK(tree.coset_vertex(nf2("1:+1"), 2) == tree.coset_vertex(nf2("1:+1 2:+3"), 2));
    CHECK(tree.geodesic(tree.coset_vertex(g, 1), tree.coset_vertex(g, 1)).steps.empty());

    // adjacent cosets of the same element are two apart
    const auto between = tree.geodesic(tree.coset_vertex(g, 1), tree.coset_vertex(g, 2));
    CHECK(between.steps.size() == 2);
}

TEST_CASE("the lazy tree matches an explicitly built ball") {
    // Materialize every vertex and edge touched by elements with at most two
    // syllables and unit exponents, then compare rises pairwise.
    const auto elements = enumerate_normal_forms(zz, 2, 1);
    const BassSerreTree lazy(zz, zz_order);

    ExplicitTree::Builder b;
    std::map<std::string, NormalForm> zero_names;
    for (const auto& g : elements) {
        const auto name = "g " + format_normal_form(zz, g);
        b.add_vertex(name);
        zero_names.emplace(name, g);
    }
    struct CosetInfo {
        BassSerreTree::Vertex vertex;
        std::vector<std::pair<std::string, NormalForm>> members;  // adjacent 0-vertices
    };
    std::map<std::string, CosetInfo> cosets;
    for (const auto& g : elements)
        for (int i = 1; i <= 2; ++i) {
            const auto v = lazy.coset_vertex(g, i);
            const auto name =
                "c" + std::to_string(i) + " " + format_normal_form(zz, v.rep);
            auto [it, fresh] = cosets.try_emplace(name, CosetInfo{v, {}});
            if (fresh) b.add_vertex(name);
            it->second.members.emplace_back("g " + format_normal_form(zz, g), g);
        }
    for (auto& [name, info] : cosets)
        for (const auto& [member_name, member] : info.members)
            b.add_edge("e" + std::to_string(info.vertex.factor) + " " +
                           format_normal_form(zz, member),
                       member_name, name);
    // local orders: at 0-vertices by factor index, at coset vertices by the
    // factor's own order on the offsets
    for (const auto& [name, g] : zero_names) {
        const auto suffix = " " + format_normal_form(zz, g);
        b.local_order(name, {"e1" + suffix, "e2" + suffix});
    }
    for (auto& [name, info] : cosets) {
        if (info.members.size() < 2) continue;
        std::sort(info.members.begin(), info.members.end(),
                  [&](const auto& x, const auto& y) {
                      const auto hx = nf_multiply(zz, nf_invert(zz, info.vertex.rep), x.second);
                      const auto hy = nf_multiply(zz, nf_invert(zz, info.vertex.rep), y.second);
                      const auto ex = hx.empty() ? ZFactor().identity() : hx[0].element;
                      const auto ey = hy.empty() ? ZFactor().identity() : hy[0].element;
                      return ZFactor().compare(ex, ey) == std::strong_ordering::less;
                  });
        std::vector<std::string> edge_names;
        for (const auto& [member_name, member] : info.members)
            edge_names.push_back("e" + std::to_string(info.vertex.factor) + " " +
                                 format_normal_form(zz, member));
        b.local_order(name, edge_names);
    }
    const auto explicit_ball = b.build();

    for (const auto& g : elements)
        for (const auto& h : elements) {
            const auto lazy_rise =
                rise_index(lazy, lazy.element_vertex(g), lazy.element_vertex(h));
            const auto explicit_rise =
                rise_index(explicit_ball, explicit_ball.vertex("g " + format_normal_form(zz, g)),
                           explicit_ball.vertex("g " + format_normal_form(zz, h)));
            CHECK(lazy_rise.total == explicit_rise.total);
            CHECK(lazy_rise.edge_rise == explicit_rise.edge_rise);
            CHECK(lazy_rise.vertex_rise == explicit_rise.vertex_rise);
        }
}

TEST_CASE("the group action preserves rises between 0-vertices") {
    const BassSerreTree tree(zz, zz_order);
    const auto forms = enumerate_normal_forms(zz, 2, 1);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, forms.size() - 1);
    for (int i = 0; i < 150; ++i) {
        const auto& f = forms[pick(rng)];
        const auto& x = forms[pick(rng)];
        const auto& y = forms[pick(rng)];
        const auto plain = rise_index(tree, tree.element_vertex(x), tree.element_vertex(y));
        const auto moved = rise_index(tree, tree.element_vertex(nf_multiply(zz, f, x)),
                                      tree.element_vertex(nf_multiply(zz, f, y)));
        CHECK(plain.total == moved.total);
    }
}

TEST_CASE("cone enumeration is positive, sorted, and splits the ball") {
    CHECK(cone_enumerate(zz, zz_order, 0, 0).empty());

    const auto small = cone_enumerate(zz, zz_order, 1, 1);
    REQUIRE(small.size() == 2);
    CHECK(format_normal_form(zz, small[0]) == "1:+1");
    CHECK(format_normal_form(zz, small[1]) == "2:+1");

    const auto cone = cone_enumerate(zz, zz_order, 2, 2);
    for (std::size_t i = 0; i + 1 < cone.size(); ++i)
        CHECK(fp_compare(zz, zz_order, cone[i], cone[i + 1]) == Ord::LT);

    std::size_t positive = 0;
    const auto all = enumerate_normal_forms(zz, 2, 2);
    for (const auto& g : all) {
        if (g.empty()) continue;
        const bool in_cone = tau(zz, zz_order, g).total > 0;
        const bool inverse_in_cone = tau(zz, zz_order, nf_invert(zz, g)).total > 0;
        CHECK(in_cone != inverse_in_cone);
        if (in_cone) ++positive;
    }
    CHECK(cone.size() == positive);

    // products of in-bounds cone members whose product stays in bounds
    for (const auto& g : cone)
        for (const auto& h : cone) {
            const auto product = nf_multiply(zz, g, h);
            bool in_bounds = product.size() <= 2;
            for (const auto& s : product.syllables())
                if (std::abs(ZFactor::value(s.element)) > 2) in_bounds = false;
            if (in_bounds) CHECK(tau(zz, zz_order, product).total > 0);
        }
}

TEST_CASE("enumeration counts match the closed form") {
    // 1 + sum over lengths of (factor patterns) * (exponent choices)
    CHECK(enumerate_normal_forms(zz, 2, 1).size() == 1 + 2 * 2 + 2 * 4);
    const auto zzz = FactorFamily::all_z(3);
    CHECK(enumerate_normal_forms(zzz, 4, 2).size() == 7021);

    FactorFamily mixed;
    mixed.add(std::make_shared<ZFactor>());
    mixed.add(std::make_shared<ZLexFactor>(2));
    CHECK_THROWS_AS(enumerate_normal_forms(mixed, 1, 1), InputError);
    CHECK_THROWS_AS(cone_enumerate(mixed, IndexOrder::natural(2), 1, 1), InputError);
}
