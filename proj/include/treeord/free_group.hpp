#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeord/order.hpp"
#include "treeord/tree.hpp"
#include "treeord/words.hpp"

namespace treeord {

// One of the (2k)! arrangements of the 2k signed letters of rank k. Induces
// the letter order x < y iff x appears to the left of y.
class DefiningWord {
public:
    DefiningWord(int rank, std::vector<Letter> letters);

    // a1 a2 ... ak ak^-1 ... a1^-1
    static DefiningWord lex(int rank);
    static DefiningWord parse(int rank, std::string_view text);

    int rank() const { return rank_; }
    std::span<const Letter> letters() const { return letters_; }
    int position(const Letter& l) const { return position_[letter_code(l)]; }
    bool less(const Letter& a, const Letter& b) const { return position(a) < position(b); }
    std::string str() const;

private:
    int rank_;
    std::vector<Letter> letters_;
    std::vector<int> position_;  // indexed by letter_code
};

// Occurrence counts of every length-2 factor of a reduced word.
class DigramCounts {
public:
    DigramCounts(int rank, const ReducedWord& g);

    std::int64_t count(const Letter& first, const Letter& second) const {
        return counts_[static_cast<std::size_t>(letter_code(first)) * width_ +
                       static_cast<std::size_t>(letter_code(second))];
    }
    std::int64_t total() const { return total_; }

private:
    std::size_t width_;
    std::vector<std::int64_t> counts_;
    std::int64_t total_ = 0;
};

// Letter-level weight of a reduced word: twice the four signed digram sums,
// plus the sign of the last letter.
struct WeightBreakdown {
    std::int64_t tau_prime = 0;  // always even
    std::int64_t omega = 0;      // 0 only for the empty word
    std::int64_t total = 0;      // tau_prime + omega
};

WeightBreakdown tau_u(const DefiningWord& u, const ReducedWord& g);

// g < h exactly when tau_u(g^-1 h) > 0. Left-invariant.
Ord fg_compare(const DefiningWord& u, const ReducedWord& g, const ReducedWord& h);

// The Cayley tree of the rank-k free group, locally ordered by u: the edge
// labeled a at vertex v runs v -> va; v reads an adjacent edge as the letter
// it spells leaving v (the label when outgoing, its inverse when incoming),
// and its link is ordered by the letter positions in u. Infinite, realized
// lazily through geodesics.
class CayleyTree {
public:
    using Vertex = ReducedWord;
    struct Edge {
        ReducedWord base;  // the edge runs base -> base * a_gen
        int gen;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    explicit CayleyTree(DefiningWord u) : u_(std::move(u)) {}

    Geodesic<Vertex, Edge> geodesic(const Vertex& x, const Vertex& y) const;
    bool edge_less(const Vertex& v, const Edge& a, const Edge& b) const;
    Letter edge_letter_at(const Vertex& v, const Edge& e) const;

    const DefiningWord& defining_word() const { return u_; }

private:
    DefiningWord u_;
};

// Comparison through the tree: sign of rise(g, h) in the u-ordered Cayley
// tree. Independent route to the same order as fg_compare.
Ord cayley_compare(const DefiningWord& u, const ReducedWord& g, const ReducedWord& h);

struct FgVerifyReport {
    bool ok = true;
    std::int64_t words_checked = 0;
    std::string failure;
};

// Checks tau_u(g) = rise(1, g) and tau_u(g^-1) = -tau_u(g) for every reduced
// word of length <= max_len.
FgVerifyReport fg_verify(const DefiningWord& u, int max_len);

}  // namespace treeord
