#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeord/errors.hpp"

namespace treeord {

// A signed generator of a free group: a_gen or a_gen^-1.
struct Letter {
    int gen;   // 1..rank
    int sign;  // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
    Letter inverse() const { return {gen, -sign}; }
};

// Dense code in [0, 2*rank): positive letters at even slots.
inline int letter_code(const Letter& l) { return 2 * (l.gen - 1) + (l.sign < 0 ? 1 : 0); }

// A freely reduced word over the rank-k basis. No adjacent letter is
// followed by its inverse.
class ReducedWord {
public:
    explicit ReducedWord(int rank) : rank_(rank) {
        if (rank < 1) throw InputError("rank must be at least 1");
    }

    // Cancels inverse pairs until no more remain.
    static ReducedWord reduce(int rank, std::span<const Letter> letters);

    int rank() const { return rank_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::span<const Letter> letters() const { return letters_; }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

private:
    int rank_;
    std::vector<Letter> letters_;
};

ReducedWord word_multiply(const ReducedWord& g, const ReducedWord& h);
ReducedWord word_invert(const ReducedWord& g);

// Token syntax: letters are "a<i>" or "a<i>^-1", space-separated; the empty
// word is written "1".
Letter parse_letter(int rank, std::string_view token);
ReducedWord parse_word(int rank, std::string_view text);
std::string format_letter(const Letter& l);
std::string format_word(const ReducedWord& g);

// All reduced words of length <= max_len, by length and then
// lexicographically by (generator, sign). Size grows as 2k(2k-1)^(n-1) per
// sphere; callers keep max_len at desk scale.
std::vector<ReducedWord> enumerate_ball(int rank, int max_len);

}  // namespace treeord
