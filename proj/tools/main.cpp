#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treeord/free_group.hpp"
#include "treeord/free_product.hpp"
#include "treeord/rooted.hpp"
#include "treeord/tree.hpp"
#include "treeord/tree_io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace treeord;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(bool json, const ordered_json& record, const std::string& text) {
    if (json)
        std::cout << record.dump() << "\n";
    else
        std::cout << text << "\n";
}

ordered_json rise_json(const RiseBreakdown& r) {
    return {{"edge", r.edge_rise}, {"vertex", r.vertex_rise}, {"total", r.total}};
}

FactorFamily parse_factors(const std::string& spec) {
    int count = 0;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = std::min(spec.find(',', pos), spec.size());
        const std::string token = spec.substr(pos, comma - pos);
        if (token != "Z")
            throw InputError("unsupported factor '" + token + "' in --factors (only Z)");
        ++count;
        if (comma == spec.size()) break;
        pos = comma + 1;
    }
    return FactorFamily::all_z(count);
}

TraversalMode parse_mode(const std::string& mode) {
    if (mode == "pre") return TraversalMode::Pre;
    if (mode == "post") return TraversalMode::Post;
    if (mode == "bfs") return TraversalMode::Bfs;
    if (mode == "custom") return TraversalMode::Custom;
    throw InputError("unknown mode '" + mode + "'");
}

struct TreeArgs {
    std::string file;
    std::string x, y;
};

struct FgArgs {
    int rank = 0;
    std::string word;
    std::string g, h;
    int maxlen = 0;
};

struct FpArgs {
    std::string factors;
    std::string g, h;
    int max_syllables = 0;
    std::int64_t max_exp = 0;
};

struct RootedArgs {
    std::string mode;
    std::string file;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orders on trees induced by orientations and local edge orders"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit line-delimited JSON records");
    int status = 0;

    TreeArgs tree_args;
    auto* sort_cmd = app.add_subcommand("sort", "print all vertices in ascending order");
    sort_cmd->add_option("file", tree_args.file, "tree file")->required();
    sort_cmd->callback([&] {
        const auto tree = parse_tree(read_file(tree_args.file), tree_args.file);
        std::string line;
        ordered_json names = ordered_json::array();
        for (const auto v : sort_vertices(tree)) {
            if (!line.empty()) line += ' ';
            line += tree.vertex_name(v);
            names.push_back(tree.vertex_name(v));
        }
        emit(json, {{"command", "sort"}, {"vertices", names}}, line);
    });

    auto* compare_cmd = app.add_subcommand("compare", "compare two vertices");
    compare_cmd->add_option("file", tree_args.file, "tree file")->required();
    compare_cmd->add_option("x", tree_args.x, "first vertex")->required();
    compare_cmd->add_option("y", tree_args.y, "second vertex")->required();
    compare_cmd->callback([&] {
        const auto tree = parse_tree(read_file(tree_args.file), tree_args.file);
        const auto x = tree.vertex(tree_args.x);
        const auto y = tree.vertex(tree_args.y);
        const auto r = rise_index(tree, x, y);
        const auto ord = compare_vertices(tree, x, y);
        emit(json,
             {{"command", "compare"},
              {"x", tree_args.x},
              {"y", tree_args.y},
              {"result", to_string(ord)},
              {"rise", rise_json(r)}},
             std::string(to_string(ord)) + " " + std::to_string(r.total));
    });

    auto* rise_cmd = app.add_subcommand("rise", "rise index between two vertices");
    rise_cmd->add_option("file", tree_args.file, "tree file")->required();
    rise_cmd->add_option("x", tree_args.x, "first vertex")->required();
    rise_cmd->add_option("y", tree_args.y, "second vertex")->required();
    rise_cmd->callback([&] {
        const auto tree = parse_tree(read_file(tree_args.file), tree_args.file);
        const auto r = rise_index(tree, tree.vertex(tree_args.x), tree.vertex(tree_args.y));
        emit(json,
             {{"command", "rise"}, {"x", tree_args.x}, {"y", tree_args.y}, {"rise", rise_json(r)}},
             std::to_string(r.total) + " (edge " + std::to_string(r.edge_rise) + ", vertex " +
                 std::to_string(r.vertex_rise) + ")");
    });

    auto* check_cmd = app.add_subcommand("check", "verify the total-order axioms");
    check_cmd->add_option("file", tree_args.file, "tree file")->required();
    check_cmd->callback([&] {
        const auto tree = parse_tree(read_file(tree_args.file), tree_args.file);
        const auto report = check_total_order_axioms(tree);
        ordered_json record{{"command", "check"},
                            {"ok", report.ok},
                            {"pairs", report.pairs_checked},
                            {"triples", report.triples_checked}};
        std::string text;
        if (report.ok) {
            text = "OK " + std::to_string(report.pairs_checked) + " pairs " +
                   std::to_string(report.triples_checked) + " triples";
        } else {
            record["failure"] = report.failure;
            text = "FAIL " + report.failure;
            status = 1;
        }
        emit(json, record, text);
    });

    auto* subdivide_cmd = app.add_subcommand("subdivide", "barycentric subdivision");
    subdivide_cmd->add_option("file", tree_args.file, "tree file")->required();
    subdivide_cmd->callback([&] {
        const auto tree = parse_tree(read_file(tree_args.file), tree_args.file);
        const auto text = serialize_tree(barycentric_subdivide(tree));
        if (json)
            std::cout << ordered_json{{"command", "subdivide"}, {"tree", text}}.dump() << "\n";
        else
            std::cout << text;
    });

    FgArgs fg_args;
    auto* fg = app.add_subcommand("fg", "free-group orders from defining words");
    fg->require_subcommand(1);
    auto add_fg_common = [&](CLI::App* cmd) {
        cmd->add_option("-k,--rank", fg_args.rank, "free-group rank")->required();
        cmd->add_option("-u,--word", fg_args.word, "defining word over the 2k letters")
            ->required();
    };
    auto* fg_tau = fg->add_subcommand("tau", "weight of a reduced word");
    add_fg_common(fg_tau);
    fg_tau->add_option("g", fg_args.g, "reduced word")->required();
    fg_tau->callback([&] {
        const auto u = DefiningWord::parse(fg_args.rank, fg_args.word);
        const auto g = parse_word(fg_args.rank, fg_args.g);
        const auto w = tau_u(u, g);
        emit(json,
             {{"command", "fg tau"},
              {"word", format_word(g)},
              {"tau_prime", w.tau_prime},
              {"omega", w.omega},
              {"total", w.total}},
             std::to_string(w.total) + " (tau' " + std::to_string(w.tau_prime) + ", omega " +
                 std::to_string(w.omega) + ")");
    });
    auto* fg_compare_cmd = fg->add_subcommand("compare", "compare two reduced words");
    add_fg_common(fg_compare_cmd);
    fg_compare_cmd->add_option("lhs", fg_args.g, "first word")->required();
    fg_compare_cmd->add_option("rhs", fg_args.h, "second word")->required();
    fg_compare_cmd->callback([&] {
        const auto u = DefiningWord::parse(fg_args.rank, fg_args.word);
        const auto g = parse_word(fg_args.rank, fg_args.g);
        const auto h = parse_word(fg_args.rank, fg_args.h);
        const auto diff = word_multiply(word_invert(g), h);
        const auto w = tau_u(u, diff);
        const auto ord = fg_compare(u, g, h);
        emit(json,
             {{"command", "fg compare"},
              {"g", format_word(g)},
              {"h", format_word(h)},
              {"result", to_string(ord)},
              {"tau", w.total}},
             std::string(to_string(ord)) + " " + std::to_string(w.total));
    });
    auto* fg_cone = fg->add_subcommand("cone", "positive words up to a length bound");
    add_fg_common(fg_cone);
    fg_cone->add_option("--maxlen", fg_args.maxlen, "maximum word length")->required();
    fg_cone->callback([&] {
        const auto u = DefiningWord::parse(fg_args.rank, fg_args.word);
        auto words = enumerate_ball(fg_args.rank, fg_args.maxlen);
        std::erase_if(words, [&](const ReducedWord& g) { return tau_u(u, g).total <= 0; });
        std::sort(words.begin(), words.end(), [&](const ReducedWord& a, const ReducedWord& b) {
            return fg_compare(u, a, b) == Ord::LT;
        });
        for (const auto& g : words)
            emit(json, {{"word", format_word(g)}, {"tau", tau_u(u, g).total}}, format_word(g));
    });
    auto* fg_verify_cmd = fg->add_subcommand("verify", "check tau against the Cayley-tree rise");
    add_fg_common(fg_verify_cmd);
    fg_verify_cmd->add_option("--maxlen", fg_args.maxlen, "maximum word length")->required();
    fg_verify_cmd->callback([&] {
        const auto u = DefiningWord::parse(fg_args.rank, fg_args.word);
        const auto report = fg_verify(u, fg_args.maxlen);
        ordered_json record{
            {"command", "fg verify"}, {"ok", report.ok}, {"words_checked", report.words_checked}};
        std::string text;
        if (report.ok) {
            text = "OK " + std::to_string(report.words_checked) + " words checked";
        } else {
            record["failure"] = report.failure;
            text = "FAIL " + report.failure;
            status = 1;
        }
        emit(json, record, text);
    });

    FpArgs fp_args;
    auto* fp = app.add_subcommand("fp", "free-product orders over ordered factors");
    fp->require_subcommand(1);
    auto add_fp_common = [&](CLI::App* cmd) {
        cmd->add_option("--factors", fp_args.factors, "comma-separated factor list, e.g. Z,Z")
            ->required();
    };
    auto* fp_tau = fp->add_subcommand("tau", "weight of a normal form");
    add_fp_common(fp_tau);
    fp_tau->add_option("g", fp_args.g, "normal form, e.g. \"1:+1 2:-1\"")->required();
    fp_tau->callback([&] {
        const auto family = parse_factors(fp_args.factors);
        const auto order = IndexOrder::natural(family.size());
        const auto g = parse_normal_form(family, fp_args.g);
        const auto t = tau(family, order, g);
        emit(json,
             {{"command", "fp tau"},
              {"form", format_normal_form(family, g)},
              {"pos", t.positive},
              {"neg", t.negative},
              {"jumps", t.jumps},
              {"drops", t.drops},
              {"total", t.total}},
             std::to_string(t.total) + " (pos " + std::to_string(t.positive) + ", neg " +
                 std::to_string(t.negative) + ", jumps " + std::to_string(t.jumps) + ", drops " +
                 std::to_string(t.drops) + ")");
    });
    auto* fp_compare_cmd = fp->add_subcommand("compare", "compare two normal forms");
    add_fp_common(fp_compare_cmd);
    fp_compare_cmd->add_option("lhs", fp_args.g, "first form")->required();
    fp_compare_cmd->add_option("rhs", fp_args.h, "second form")->required();
    fp_compare_cmd->callback([&] {
        const auto family = parse_factors(fp_args.factors);
        const auto order = IndexOrder::natural(family.size());
        const auto g = parse_normal_form(family, fp_args.g);
        const auto h = parse_normal_form(family, fp_args.h);
        const auto diff = nf_multiply(family, nf_invert(family, g), h);
        const auto ord = fp_compare(family, order, g, h);
        emit(json,
             {{"command", "fp compare"},
              {"g", format_normal_form(family, g)},
              {"h", format_normal_form(family, h)},
              {"result", to_string(ord)},
              {"tau", tau(family, order, diff).total}},
             std::string(to_string(ord)) + " " + std::to_string(tau(family, order, diff).total));
    });
    auto* fp_cone = fp->add_subcommand("cone", "positive normal forms within bounds");
    add_fp_common(fp_cone);
    fp_cone->add_option("--max-syllables", fp_args.max_syllables, "syllable-count bound")
        ->required();
    fp_cone->add_option("--max-exp", fp_args.max_exp, "exponent magnitude bound")->required();
    fp_cone->callback([&] {
        const auto family = parse_factors(fp_args.factors);
        const auto order = IndexOrder::natural(family.size());
        for (const auto& g :
             cone_enumerate(family, order, fp_args.max_syllables, fp_args.max_exp))
            emit(json,
                 {{"form", format_normal_form(family, g)}, {"tau", tau(family, order, g).total}},
                 format_normal_form(family, g));
    });

    RootedArgs rooted_args;
    auto* rooted = app.add_subcommand("rooted", "traversal orders on rooted trees");
    rooted->require_subcommand(1);
    auto add_rooted_common = [&](CLI::App* cmd) {
        cmd->add_option("--mode", rooted_args.mode, "pre, post, bfs, or custom")->required();
        cmd->add_option("file", rooted_args.file, "rooted-tree file")->required();
    };
    auto* rooted_number = rooted->add_subcommand("number", "1-based traversal ranks");
    add_rooted_common(rooted_number);
    rooted_number->callback([&] {
        const auto mode = parse_mode(rooted_args.mode);
        const auto parsed = parse_rooted(read_file(rooted_args.file), mode, rooted_args.file);
        const auto ranks = number_traversal(parsed.tree, mode, &parsed.order);
        std::vector<RootedTree::Vertex> by_rank(ranks.size());
        for (std::size_t v = 0; v < ranks.size(); ++v)
            by_rank[static_cast<std::size_t>(ranks[v] - 1)] = static_cast<int>(v);
        for (const auto v : by_rank)
            emit(json, {{"rank", ranks[static_cast<std::size_t>(v)]}, {"name", parsed.tree.name(v)}},
                 std::to_string(ranks[static_cast<std::size_t>(v)]) + " " + parsed.tree.name(v));
    });
    auto* rooted_realize = rooted->add_subcommand(
        "realize", "orientation and local orders inducing the traversal order");
    add_rooted_common(rooted_realize);
    rooted_realize->callback([&] {
        const auto mode = parse_mode(rooted_args.mode);
        const auto parsed = parse_rooted(read_file(rooted_args.file), mode, rooted_args.file);
        const auto realization = mode == TraversalMode::Bfs
                                     ? realize_bfs(parsed.tree, parsed.order)
                                     : realize_dfs(parsed.tree, parsed.order);
        const auto text = serialize_tree(realization);
        if (json)
            std::cout << ordered_json{{"command", "rooted realize"}, {"tree", text}}.dump()
                      << "\n";
        else
            std::cout << text;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
