#include "treeord/normal_form.hpp"

#include <cstdlib>

namespace treeord {

namespace {

void push_merging(const FactorFamily& family, std::vector<Syllable>& out, Syllable s) {
    const auto& factor = family.factor(s.factor);
    if (!out.empty() && out.back().factor == s.factor) {
        s.element = factor.compose(out.back().element, s.element);
        out.pop_back();
    }
    if (!factor.is_identity(s.element)) out.push_back(std::move(s));
}

}  // namespace

NormalForm NormalForm::normalized(const FactorFamily& family, std::span<const Syllable> parts) {
    NormalForm nf;
    for (const auto& s : parts) push_merging(family, nf.syllables_, s);
    return nf;
}

NormalForm NormalForm::syllable(const FactorFamily& family, int factor, FactorElement element) {
    Syllable s{factor, std::move(element)};
    return normalized(family, std::span<const Syllable>(&s, 1));
}

NormalForm nf_multiply(const FactorFamily& family, const NormalForm& g, const NormalForm& h) {
    std::vector<Syllable> all(g.syllables().begin(), g.syllables().end());
    all.insert(all.end(), h.syllables().begin(), h.syllables().end());
    return NormalForm::normalized(family, all);
}

NormalForm nf_invert(const FactorFamily& family, const NormalForm& g) {
    std::vector<Syllable> rev;
    rev.reserve(g.size());
    for (auto it = g.syllables().rbegin(); it != g.syllables().rend(); ++it)
        rev.push_back({it->factor, family.factor(it->factor).invert(it->element)});
    return NormalForm::normalized(family, rev);
}

NormalForm parse_normal_form(const FactorFamily& family, std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ') ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    if (tokens.empty()) throw InputError("empty normal form, write 1 for the identity");
    if (tokens.size() == 1 && tokens[0] == "1") return NormalForm();
    std::vector<Syllable> parts;
    for (auto t : tokens) {
        auto colon = t.find(':');
        if (colon == std::string_view::npos || colon == 0 || colon + 1 == t.size())
            throw InputError("bad syllable token '" + std::string(t) +
                             "', expected <index>:<element>");
        int index = 0;
        {
            auto digits = t.substr(0, colon);
            for (char c : digits) {
                if (c < '0' || c > '9')
                    throw InputError("bad factor index in '" + std::string(t) + "'");
                index = index * 10 + (c - '0');
            }
        }
        const auto& factor = family.factor(index);  // range-checks
        FactorElement element = factor.parse(t.substr(colon + 1));
        if (factor.is_identity(element))
            throw InputError("trivial syllable '" + std::string(t) + "'");
        parts.push_back({index, std::move(element)});
    }
    return NormalForm::normalized(family, parts);
}

std::string format_normal_form(const FactorFamily& family, const NormalForm& g) {
    if (g.empty()) return "1";
    std::string out;
    for (const auto& s : g.syllables()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(s.factor) + ":" + family.factor(s.factor).format(s.element);
    }
    return out;
}

ReducedWord to_word(const FactorFamily& family, const NormalForm& g) {
    std::vector<Letter> letters;
    for (const auto& s : g.syllables()) {
        std::int64_t m = ZFactor::value(s.element);
        family.factor(s.factor);  // range-check
        for (std::int64_t i = 0; i < std::abs(m); ++i)
            letters.push_back({s.factor, m > 0 ? +1 : -1});
    }
    return ReducedWord::reduce(family.size(), letters);
}

NormalForm from_word(const FactorFamily& family, const ReducedWord& g) {
    std::vector<Syllable> parts;
    for (const auto& l : g.letters())
        parts.push_back({l.gen, ZFactor::make(l.sign)});
    return NormalForm::normalized(family, parts);
}

}  // namespace treeord
