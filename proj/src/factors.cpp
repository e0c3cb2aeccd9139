#include "treeord/factors.hpp"

#include <algorithm>
#include <charconv>

namespace treeord {

namespace {

std::int64_t parse_int64(std::string_view token, const char* what) {
    std::int64_t value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    if (!token.empty() && token[0] == '+') ++begin;  // from_chars rejects '+'
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end)
        throw InputError(std::string("bad ") + what + " '" + std::string(token) + "'");
    return value;
}

}  // namespace

FactorElement ZFactor::compose(const FactorElement& a, const FactorElement& b) const {
    return {{value(a) + value(b)}};
}

FactorElement ZFactor::invert(const FactorElement& a) const { return {{-value(a)}}; }

std::strong_ordering ZFactor::compare(const FactorElement& a, const FactorElement& b) const {
    return value(a) <=> value(b);
}

std::string ZFactor::format(const FactorElement& a) const {
    std::int64_t n = value(a);
    return (n >= 0 ? "+" : "") + std::to_string(n);
}

FactorElement ZFactor::parse(std::string_view token) const {
    return make(parse_int64(token, "integer"));
}

std::int64_t ZFactor::value(const FactorElement& a) {
    if (a.coords.size() != 1) throw InputError("element is not an integer");
    return a.coords[0];
}

ZLexFactor::ZLexFactor(int dim) : dim_(dim) {
    if (dim < 1) throw InputError("Z^d requires d >= 1");
}

void ZLexFactor::check(const FactorElement& a) const {
    if (static_cast<int>(a.coords.size()) != dim_)
        throw InputError("element has " + std::to_string(a.coords.size()) +
                         " coordinates, expected " + std::to_string(dim_));
}

FactorElement ZLexFactor::identity() const {
    return {std::vector<std::int64_t>(dim_, 0)};
}

FactorElement ZLexFactor::compose(const FactorElement& a, const FactorElement& b) const {
    check(a);
    check(b);
    FactorElement out = a;
    for (int i = 0; i < dim_; ++i) out.coords[i] += b.coords[i];
    return out;
}

FactorElement ZLexFactor::invert(const FactorElement& a) const {
    check(a);
    FactorElement out = a;
    for (auto& c : out.coords) c = -c;
    return out;
}

std::strong_ordering ZLexFactor::compare(const FactorElement& a, const FactorElement& b) const {
    check(a);
    check(b);
    for (int i = 0; i < dim_; ++i)
        if (auto c = a.coords[i] <=> b.coords[i]; c != std::strong_ordering::equal) return c;
    return std::strong_ordering::equal;
}

std::string ZLexFactor::format(const FactorElement& a) const {
    check(a);
    std::string out;
    for (int i = 0; i < dim_; ++i) {
        if (i) out += ',';
        out += (a.coords[i] >= 0 ? "+" : "") + std::to_string(a.coords[i]);
    }
    return out;
}

FactorElement ZLexFactor::parse(std::string_view token) const {
    FactorElement out;
    std::size_t start = 0;
    while (start <= token.size()) {
        std::size_t comma = token.find(',', start);
        std::size_t end = comma == std::string_view::npos ? token.size() : comma;
        out.coords.push_back(parse_int64(token.substr(start, end - start), "coordinate"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    check(out);
    return out;
}

int FactorFamily::add(std::shared_ptr<const OrderedFactor> factor) {
    if (!factor) throw InputError("null factor");
    factors_.push_back(std::move(factor));
    return size();
}

const OrderedFactor& FactorFamily::factor(int index) const {
    if (index < 1 || index > size())
        throw InputError("factor index " + std::to_string(index) + " out of range 1.." +
                         std::to_string(size()));
    return *factors_[index - 1];
}

FactorFamily FactorFamily::all_z(int count) {
    FactorFamily family;
    auto z = std::make_shared<const ZFactor>();
    for (int i = 0; i < count; ++i) family.add(z);
    return family;
}

IndexOrder IndexOrder::natural(int count) {
    std::vector<int> seq(count);
    for (int i = 0; i < count; ++i) seq[i] = i + 1;
    return IndexOrder(std::move(seq));
}

IndexOrder::IndexOrder(std::vector<int> sequence) : sequence_(std::move(sequence)) {
    int max_index = 0;
    for (int i : sequence_) {
        if (i < 1) throw InputError("factor index " + std::to_string(i) + " must be positive");
        max_index = std::max(max_index, i);
    }
    position_.assign(max_index + 1, -1);
    for (int pos = 0; pos < count(); ++pos) {
        int i = sequence_[pos];
        if (position_[i] != -1)
            throw InputError("factor index " + std::to_string(i) + " listed twice");
        position_[i] = pos;
    }
}

void IndexOrder::check(int index) const {
    if (!contains(index))
        throw InputError("factor index " + std::to_string(index) + " not in the index order");
}

bool IndexOrder::contains(int index) const {
    return index >= 1 && index < static_cast<int>(position_.size()) && position_[index] != -1;
}

bool IndexOrder::less(int i, int j) const {
    check(i);
    check(j);
    return position_[i] < position_[j];
}

}  // namespace treeord
