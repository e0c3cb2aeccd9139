#include "treeord/words.hpp"

#include <charconv>

namespace treeord {

namespace {

void check_letter(int rank, const Letter& l) {
    if (l.gen < 1 || l.gen > rank)
        throw InputError("generator index " + std::to_string(l.gen) +
                         " out of range 1.." + std::to_string(rank));
    if (l.sign != 1 && l.sign != -1)
        throw InputError("letter sign must be +1 or -1");
}

void push_cancelling(std::vector<Letter>& out, const Letter& l) {
    if (!out.empty() && out.back() == l.inverse()) out.pop_back();
    else out.push_back(l);
}

}  // namespace

ReducedWord ReducedWord::reduce(int rank, std::span<const Letter> letters) {
    ReducedWord w(rank);
    for (const auto& l : letters) {
        check_letter(rank, l);
        push_cancelling(w.letters_, l);
    }
    return w;
}

ReducedWord word_multiply(const ReducedWord& g, const ReducedWord& h) {
    if (g.rank() != h.rank())
        throw InputError("rank mismatch: " + std::to_string(g.rank()) + " vs " +
                         std::to_string(h.rank()));
    std::vector<Letter> all(g.letters().begin(), g.letters().end());
    all.insert(all.end(), h.letters().begin(), h.letters().end());
    return ReducedWord::reduce(g.rank(), all);
}

ReducedWord word_invert(const ReducedWord& g) {
    std::vector<Letter> rev;
    rev.reserve(g.size());
    for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it)
        rev.push_back(it->inverse());
    return ReducedWord::reduce(g.rank(), rev);
}

Letter parse_letter(int rank, std::string_view token) {
    if (token.size() < 2 || token[0] != 'a')
        throw InputError("bad letter token '" + std::string(token) + "'");
    int sign = 1;
    std::string_view digits = token.substr(1);
    if (auto pos = digits.find('^'); pos != std::string_view::npos) {
        if (digits.substr(pos) != "^-1")
            throw InputError("bad letter token '" + std::string(token) +
                             "' (only ^-1 is supported)");
        sign = -1;
        digits = digits.substr(0, pos);
    }
    int gen = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), gen);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw InputError("bad letter token '" + std::string(token) + "'");
    Letter l{gen, sign};
    check_letter(rank, l);
    return l;
}

ReducedWord parse_word(int rank, std::string_view text) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    std::vector<std::string_view> tokens;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ') ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    if (tokens.empty()) throw InputError("empty word, write 1 for the identity");
    if (tokens.size() == 1 && tokens[0] == "1") return ReducedWord(rank);
    for (auto t : tokens) letters.push_back(parse_letter(rank, t));
    return ReducedWord::reduce(rank, letters);
}

std::string format_letter(const Letter& l) {
    std::string out = "a" + std::to_string(l.gen);
    if (l.sign < 0) out += "^-1";
    return out;
}

std::string format_word(const ReducedWord& g) {
    if (g.empty()) return "1";
    std::string out;
    for (const auto& l : g.letters()) {
        if (!out.empty()) out += ' ';
        out += format_letter(l);
    }
    return out;
}

std::vector<ReducedWord> enumerate_ball(int rank, int max_len) {
    std::vector<ReducedWord> out;
    std::vector<Letter> current;
    auto emit = [&] { out.push_back(ReducedWord::reduce(rank, current)); };

    // Iterative deepening keeps the by-length ordering without a sort.
    auto extend = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int gen = 1; gen <= rank; ++gen) {
            for (int sign : {+1, -1}) {
                Letter l{gen, sign};
                if (!current.empty() && current.back() == l.inverse()) continue;
                current.push_back(l);
                self(self, remaining - 1);
                current.pop_back();
            }
        }
    };
    for (int len = 0; len <= max_len; ++len) extend(extend, len);
    return out;
}

}  // namespace treeord
