#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeord/factors.hpp"
#include "treeord/words.hpp"

namespace treeord {

// A maximal factor block of a free-product element.
struct Syllable {
    int factor;  // 1-based index into the family
    FactorElement element;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

// The unique syllable decomposition of a free-product element: adjacent
// syllables lie in distinct factors and every syllable is nontrivial. The
// empty sequence is the identity.
class NormalForm {
public:
    NormalForm() = default;

    // Merges adjacent same-factor syllables and drops identities, so any
    // product of syllables denotes a well-defined element.
    static NormalForm normalized(const FactorFamily& family, std::span<const Syllable> parts);
    static NormalForm syllable(const FactorFamily& family, int factor, FactorElement element);

    std::size_t size() const { return syllables_.size(); }
    bool empty() const { return syllables_.empty(); }
    std::span<const Syllable> syllables() const { return syllables_; }
    const Syllable& operator[](std::size_t i) const { return syllables_[i]; }

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    std::vector<Syllable> syllables_;
};

NormalForm nf_multiply(const FactorFamily& family, const NormalForm& g, const NormalForm& h);
NormalForm nf_invert(const FactorFamily& family, const NormalForm& g);

// Token syntax: "<index>:<element>" per syllable, space-separated; identity
// is "1". For Z factors the element is a signed integer.
NormalForm parse_normal_form(const FactorFamily& family, std::string_view text);
std::string format_normal_form(const FactorFamily& family, const NormalForm& g);

// The bijection with free-group words when every factor is Z: syllable
// (i, m) corresponds to a_i^m.
ReducedWord to_word(const FactorFamily& family, const NormalForm& g);
NormalForm from_word(const FactorFamily& family, const ReducedWord& g);

}  // namespace treeord
