#include <doctest.h>

#include <vector>

#include "treeord/normal_form.hpp"
#include "treeord/words.hpp"

using namespace treeord;

namespace {
const FactorFamily family = FactorFamily::all_z(3);

NormalForm nf(const char* text) { return parse_normal_form(family, text); }
std::string fmt(const NormalForm& g) { return format_normal_form(family, g); }
}  // namespace

TEST_CASE("normalization merges and cancels") {
    CHECK(nf("1").empty());
    CHECK(fmt(nf("1")) == "1");

    const std::vector<Syllable> adjacent{{1, ZFactor::make(2)}, {1, ZFactor::make(3)}};
    CHECK(fmt(NormalForm::normalized(family, adjacent)) == "1:+5");

    const std::vector<Syllable> cancelling{
        {1, ZFactor::make(2)}, {2, ZFactor::make(1)}, {2, ZFactor::make(-1)},
        {1, ZFactor::make(-2)}};
    CHECK(NormalForm::normalized(family, cancelling).empty());

    CHECK(fmt(NormalForm::syllable(family, 2, ZFactor::make(-4))) == "2:-4");
    CHECK(NormalForm::syllable(family, 2, ZFactor::make(0)).empty());
    CHECK_THROWS_AS(NormalForm::syllable(family, 9, ZFactor::make(1)), InputError);
}

TEST_CASE("parsing accepts the syllable syntax and rejects junk") {
    const auto g = nf("1:+1 2:-1");
    REQUIRE(g.size() == 2);
    CHECK(g[0].factor == 1);
    CHECK(ZFactor::value(g[0].element) == 1);
    CHECK(g[1].factor == 2);
    CHECK(ZFactor::value(g[1].element) == -1);
    CHECK(fmt(g) == "1:+1 2:-1");

    // adjacent same-factor syllables merge during parsing
    CHECK(fmt(nf("1:+1 1:+1")) == "1:+2");

    CHECK_THROWS_AS(nf("0:+1"), InputError);
    CHECK_THROWS_AS(nf("4:+1"), InputError);
    CHECK_THROWS_AS(nf("1:+0"), InputError);
    CHECK_THROWS_AS(nf("1:"), InputError);
    CHECK_THROWS_AS(nf(":+1"), InputError);
    CHECK_THROWS_AS(nf("1+1"), InputError);
    CHECK_THROWS_AS(nf(""), InputError);
}

TEST_CASE("multiplication and inversion") {
    const auto g = nf("1:+1 2:-1");
    const auto h = nf("2:+1 1:+3");
    CHECK(fmt(nf_multiply(family, g, h)) == "1:+4");
    CHECK(fmt(nf_invert(family, g)) == "2:+1 1:-1");
    CHECK(nf_multiply(family, g, nf_invert(family, g)).empty());
    CHECK(nf_multiply(family, nf_invert(family, g), g).empty());
    CHECK(fmt(nf_multiply(family, nf("1"), g)) == fmt(g));
}

TEST_CASE("syllable forms map to free-group words and back") {
    const auto g = nf("1:+2 3:-1 2:+1");
    const auto w = to_word(family, g);
    CHECK(format_word(w) == "a1 a1 a3^-1 a2");
    CHECK(from_word(family, w) == g);

    CHECK(to_word(family, nf("1")).empty());
    CHECK(from_word(family, parse_word(3, "1")).empty());

    // round-trip both ways on a slightly longer form
    const auto h = nf("2:-2 1:+1 2:+3 3:-2");
    CHECK(from_word(family, to_word(family, h)) == h);
}
