#include "treeord/free_group.hpp"

#include <cctype>
#include <utility>

namespace treeord {

DefiningWord::DefiningWord(int rank, std::vector<Letter> letters)
    : rank_(rank), letters_(std::move(letters)) {
    if (rank < 1) throw InputError("rank must be at least 1");
    const std::size_t width = 2 * static_cast<std::size_t>(rank);
    if (letters_.size() != width)
        throw InputError("defining word must have exactly " + std::to_string(width) +
                         " letters, got " + std::to_string(letters_.size()));
    position_.assign(width, -1);
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const auto& l = letters_[i];
        if (l.gen < 1 || l.gen > rank)
            throw InputError("letter " + format_letter(l) + " is outside rank " +
                             std::to_string(rank));
        const int code = letter_code(l);
        if (position_[code] != -1)
            throw InputError("letter " + format_letter(l) + " appears twice in defining word");
        position_[code] = static_cast<int>(i);
    }
}

DefiningWord DefiningWord::lex(int rank) {
    std::vector<Letter> letters;
    for (int g = 1; g <= rank; ++g) letters.push_back({g, +1});
    for (int g = rank; g >= 1; --g) letters.push_back({g, -1});
    return DefiningWord(rank, std::move(letters));
}

DefiningWord DefiningWord::parse(int rank, std::string_view text) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        if (end > pos) letters.push_back(parse_letter(rank, text.substr(pos, end - pos)));
        pos = end;
    }
    return DefiningWord(rank, std::move(letters));
}

std::string DefiningWord::str() const {
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += format_letter(l);
    }
    return out;
}

DigramCounts::DigramCounts(int rank, const ReducedWord& g)
    : width_(2 * static_cast<std::size_t>(rank)) {
    if (g.rank() != rank)
        throw InputError("word rank " + std::to_string(g.rank()) +
                         " does not match digram rank " + std::to_string(rank));
    counts_.assign(width_ * width_, 0);
    const auto letters = g.letters();
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        ++counts_[static_cast<std::size_t>(letter_code(letters[i])) * width_ +
                  static_cast<std::size_t>(letter_code(letters[i + 1]))];
        ++total_;
    }
}

WeightBreakdown tau_u(const DefiningWord& u, const ReducedWord& g) {
    if (g.rank() != u.rank())
        throw InputError("word rank " + std::to_string(g.rank()) +
                         " does not match defining word rank " + std::to_string(u.rank()));
    const DigramCounts counts(u.rank(), g);
    std::int64_t s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    for (int a = 1; a <= u.rank(); ++a) {
        for (int b = 1; b <= u.rank(); ++b) {
            const Letter pa{a, +1}, na{a, -1}, pb{b, +1}, nb{b, -1};
            if (u.less(na, nb)) s1 += counts.count(pa, nb);
            if (u.less(pb, pa)) s2 += counts.count(na, pb);
            if (u.less(na, pb)) s3 += counts.count(pa, pb);
            if (u.less(nb, pa)) s4 += counts.count(na, nb);
        }
    }
    WeightBreakdown w;
    w.tau_prime = 2 * (s1 - s2 + s3 - s4);
    w.omega = g.empty() ? 0 : g[g.size() - 1].sign;
    w.total = w.tau_prime + w.omega;
    return w;
}

Ord fg_compare(const DefiningWord& u, const ReducedWord& g, const ReducedWord& h) {
    if (g == h) return Ord::EQ;
    const auto diff = word_multiply(word_invert(g), h);
    return tau_u(u, diff).total > 0 ? Ord::LT : Ord::GT;
}

Letter CayleyTree::edge_letter_at(const Vertex& v, const Edge& e) const {
    if (e.base == v) return {e.gen, +1};
    const Letter label{e.gen, +1};
    const Letter single[] = {label};
    const auto head = word_multiply(e.base, ReducedWord::reduce(v.rank(), single));
    if (head == v) return {e.gen, -1};
    throw InputError("edge is not adjacent to vertex " + format_word(v));
}

bool CayleyTree::edge_less(const Vertex& v, const Edge& a, const Edge& b) const {
    return u_.less(edge_letter_at(v, a), edge_letter_at(v, b));
}

Geodesic<CayleyTree::Vertex, CayleyTree::Edge> CayleyTree::geodesic(const Vertex& x,
                                                                    const Vertex& y) const {
    if (x.rank() != u_.rank() || y.rank() != u_.rank())
        throw InputError("word rank does not match defining word rank " +
                         std::to_string(u_.rank()));
    const auto xs = x.letters();
    const auto ys = y.letters();
    std::size_t common = 0;
    while (common < xs.size() && common < ys.size() && xs[common] == ys[common]) ++common;

    Geodesic<Vertex, Edge> path;
    std::vector<Letter> current(xs.begin(), xs.end());
    auto vertex_of = [&]() { return ReducedWord::reduce(u_.rank(), current); };
    path.vertices.push_back(x);
    // Peel x down to the common prefix, then climb to y. Prefixes of a
    // reduced word are reduced, so no re-reduction ever cancels.
    while (current.size() > common) {
        const Letter dropped = current.back();
        current.pop_back();
        const auto v = vertex_of();
        // dropped spells prev = v * dropped; positive means the edge points
        // from v to prev, so we traversed it against orientation.
        if (dropped.sign > 0)
            path.steps.push_back({Edge{v, dropped.gen}, -1});
        else
            path.steps.push_back({Edge{path.vertices.back(), dropped.gen}, +1});
        path.vertices.push_back(v);
    }
    for (std::size_t i = common; i < ys.size(); ++i) {
        const Letter added = ys[i];
        const auto prev = path.vertices.back();
        current.push_back(added);
        const auto v = vertex_of();
        if (added.sign > 0)
            path.steps.push_back({Edge{prev, added.gen}, +1});
        else
            path.steps.push_back({Edge{v, added.gen}, -1});
        path.vertices.push_back(v);
    }
    return path;
}

Ord cayley_compare(const DefiningWord& u, const ReducedWord& g, const ReducedWord& h) {
    if (g == h) return Ord::EQ;
    const CayleyTree tree(u);
    return rise_index(tree, g, h).total > 0 ? Ord::LT : Ord::GT;
}

FgVerifyReport fg_verify(const DefiningWord& u, int max_len) {
    FgVerifyReport report;
    const CayleyTree tree(u);
    const ReducedWord identity(u.rank());
    for (const auto& g : enumerate_ball(u.rank(), max_len)) {
        const auto weight = tau_u(u, g);
        const auto rise = rise_index(tree, identity, g);
        if (weight.total != rise.total) {
            report.ok = false;
            report.failure = "tau_u(" + format_word(g) + ") = " + std::to_string(weight.total) +
                             " but rise(1, g) = " + std::to_string(rise.total);
            return report;
        }
        const auto inverse_weight = tau_u(u, word_invert(g));
        if (inverse_weight.total != -weight.total) {
            report.ok = false;
            report.failure = "tau_u(" + format_word(g) + "^-1) = " +
                             std::to_string(inverse_weight.total) + ", expected " +
                             std::to_string(-weight.total);
            return report;
        }
        ++report.words_checked;
    }
    return report;
}

}  // namespace treeord
