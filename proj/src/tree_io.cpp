#include "treeord/tree_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

namespace treeord {

namespace {

struct Token {
    std::string text;
    int col;  // 1-based
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        ++number;
        Line line{number, {}};
        std::size_t i = pos;
        while (i < eol && text[i] != '#') {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            std::size_t end = i;
            while (end < eol && text[end] != '#' &&
                   !std::isspace(static_cast<unsigned char>(text[end])))
                ++end;
            line.tokens.push_back(
                {std::string(text.substr(i, end - i)), static_cast<int>(i - pos) + 1});
            i = end;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return lines;
}

[[noreturn]] void fail(std::string_view source, const Line& line, int col,
                       const std::string& msg) {
    throw ParseError(std::string(source), line.number, col, msg);
}

void require_arity(std::string_view source, const Line& line, std::size_t arity,
                   const std::string& usage) {
    if (line.tokens.size() != arity)
        fail(source, line, line.tokens[0].col, "expected: " + usage);
}

}  // namespace

ExplicitTree parse_tree(std::string_view text, std::string_view source) {
    struct OrderLine {
        Line line;
        std::string vertex;
        std::vector<std::string> edges;
    };
    std::set<std::string> vertices;
    std::map<std::string, int> degree;
    std::set<std::string> edges;
    std::map<std::string, OrderLine> orders;  // by vertex

    ExplicitTree::Builder builder;
    for (const auto& line : tokenize(text)) {
        const auto& dir = line.tokens[0];
        if (dir.text == "vertex") {
            require_arity(source, line, 2, "vertex <id>");
            const auto& id = line.tokens[1];
            if (!vertices.insert(id.text).second)
                fail(source, line, id.col, "duplicate vertex '" + id.text + "'");
            builder.add_vertex(id.text);
        } else if (dir.text == "edge") {
            require_arity(source, line, 4, "edge <eid> <origin> <terminus>");
            const auto& id = line.tokens[1];
            const auto& origin = line.tokens[2];
            const auto& terminus = line.tokens[3];
            if (!edges.insert(id.text).second)
                fail(source, line, id.col, "duplicate edge '" + id.text + "'");
            for (const auto* end : {&origin, &terminus})
                if (!vertices.contains(end->text))
                    fail(source, line, end->col, "unknown vertex '" + end->text + "'");
            if (origin.text == terminus.text)
                fail(source, line, terminus.col, "edge '" + id.text + "' is a loop");
            builder.add_edge(id.text, origin.text, terminus.text);
            ++degree[origin.text];
            ++degree[terminus.text];
        } else if (dir.text == "order") {
            if (line.tokens.size() < 3)
                fail(source, line, dir.col, "incomplete order line: expected order <vid> <eid>...");
            const auto& vid = line.tokens[1];
            if (!vertices.contains(vid.text))
                fail(source, line, vid.col, "unknown vertex '" + vid.text + "'");
            if (orders.contains(vid.text))
                fail(source, line, vid.col, "duplicate order line for vertex '" + vid.text + "'");
            OrderLine order{line, vid.text, {}};
            std::set<std::string> seen;
            for (std::size_t i = 2; i < line.tokens.size(); ++i) {
                const auto& eid = line.tokens[i];
                if (!edges.contains(eid.text))
                    fail(source, line, eid.col, "unknown edge '" + eid.text + "'");
                if (!seen.insert(eid.text).second)
                    fail(source, line, eid.col, "edge '" + eid.text + "' listed twice");
                order.edges.push_back(eid.text);
            }
            orders.emplace(vid.text, std::move(order));
        } else {
            fail(source, line, dir.col, "unknown directive '" + dir.text + "'");
        }
    }

    for (const auto& [vid, order] : orders) {
        if (order.edges.size() != static_cast<std::size_t>(degree[vid]))
            fail(source, order.line, order.line.tokens[0].col,
                 "incomplete order line: vertex '" + vid + "' has " +
                     std::to_string(degree[vid]) + " adjacent edges, " +
                     std::to_string(order.edges.size()) + " listed");
        builder.local_order(vid, order.edges);
    }
    for (const auto& [vid, d] : degree)
        if (d >= 2 && !orders.contains(vid))
            throw ParseError(std::string(source), 0, 0,
                             "missing order line for vertex '" + vid + "'");

    try {
        return builder.build();
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(std::string(source), 0, 0, e.what());
    }
}

std::string serialize_tree(const ExplicitTree& tree) {
    std::string out;
    for (int v = 0; v < tree.vertex_count(); ++v)
        out += "vertex " + tree.vertex_name(v) + "\n";
    for (int e = 0; e < tree.edge_count(); ++e)
        out += "edge " + tree.edge_name(e) + " " + tree.vertex_name(tree.origin(e)) + " " +
               tree.vertex_name(tree.terminus(e)) + "\n";
    for (int v = 0; v < tree.vertex_count(); ++v) {
        const auto link = tree.link(v);
        if (link.size() < 2) continue;
        out += "order " + tree.vertex_name(v);
        for (const auto e : link) out += " " + tree.edge_name(e);
        out += "\n";
    }
    return out;
}

ParsedRooted parse_rooted(std::string_view text, TraversalMode mode, std::string_view source) {
    struct VorderLine {
        Line line;
        std::vector<Token> items;  // tokens[2..]
    };
    RootedTree::Builder builder;
    std::set<std::string> vertices;
    std::map<std::string, VorderLine> vorders;  // by vertex name
    bool has_root = false;

    for (const auto& line : tokenize(text)) {
        const auto& dir = line.tokens[0];
        if (dir.text == "root") {
            require_arity(source, line, 2, "root <id>");
            if (has_root) fail(source, line, dir.col, "root is already set");
            has_root = true;
            vertices.insert(line.tokens[1].text);
            builder.root(line.tokens[1].text);
        } else if (dir.text == "child") {
            require_arity(source, line, 3, "child <parent> <child>");
            const auto& parent = line.tokens[1];
            const auto& child = line.tokens[2];
            if (!vertices.contains(parent.text))
                fail(source, line, parent.col, "unknown vertex '" + parent.text + "'");
            if (!vertices.insert(child.text).second)
                fail(source, line, child.col, "vertex '" + child.text + "' is already defined");
            builder.child(parent.text, child.text);
        } else if (dir.text == "vorder") {
            if (mode == TraversalMode::Pre || mode == TraversalMode::Post)
                fail(source, line, dir.col,
                     std::string("vorder lines are not allowed with mode ") +
                         (mode == TraversalMode::Pre ? "pre" : "post"));
            if (line.tokens.size() < 3)
                fail(source, line, dir.col, "expected: vorder <vid> <item>...");
            const auto& vid = line.tokens[1];
            if (vorders.contains(vid.text))
                fail(source, line, vid.col, "duplicate vorder line for vertex '" + vid.text + "'");
            VorderLine vorder{line, {line.tokens.begin() + 2, line.tokens.end()}};
            vorders.emplace(vid.text, std::move(vorder));
        } else {
            fail(source, line, dir.col, "unknown directive '" + dir.text + "'");
        }
    }

    RootedTree tree = [&] {
        try {
            return builder.build();
        } catch (const InputError& e) {
            throw ParseError(std::string(source), 0, 0, e.what());
        }
    }();
    FamilyOrder order = mode == TraversalMode::Post ? FamilyOrder::parent_last(tree)
                                                    : FamilyOrder::parent_first(tree);

    for (const auto& [name, vorder] : vorders) {
        const auto& vid = vorder.line.tokens[1];
        const auto v = tree.find_vertex(name);
        if (v < 0) fail(source, vorder.line, vid.col, "unknown vertex '" + name + "'");
        std::vector<RootedTree::Vertex> items;
        for (const auto& item : vorder.items) {
            if (item.text == "self") {
                items.push_back(v);
                continue;
            }
            const auto w = tree.find_vertex(item.text);
            if (w < 0) fail(source, vorder.line, item.col, "unknown vertex '" + item.text + "'");
            items.push_back(w);
        }
        try {
            order.set_family(tree, v, items);
        } catch (const InputError& e) {
            fail(source, vorder.line, vorder.line.tokens[0].col, e.what());
        }
    }
    return {std::move(tree), std::move(order), !vorders.empty()};
}

}  // namespace treeord
