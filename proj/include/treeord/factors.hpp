#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "treeord/errors.hpp"

namespace treeord {

// Opaque element payload interpreted by the owning factor. The stock
// factors use it as integer coordinates; other groups may encode whatever
// state fits, as long as equal elements have equal payloads.
struct FactorElement {
    std::vector<std::int64_t> coords;

    friend bool operator==(const FactorElement&, const FactorElement&) = default;
};

// A left-ordered group plugged into a free product. Implementations supply
// the group operations and a total comparison; left-invariance of the
// comparison is the implementation's contract and is spot-checked in tests,
// not proven here.
class OrderedFactor {
public:
    virtual ~OrderedFactor() = default;

    virtual std::string name() const = 0;
    virtual FactorElement identity() const = 0;
    virtual FactorElement compose(const FactorElement& a, const FactorElement& b) const = 0;
    virtual FactorElement invert(const FactorElement& a) const = 0;
    virtual std::strong_ordering compare(const FactorElement& a, const FactorElement& b) const = 0;
    virtual std::string format(const FactorElement& a) const = 0;
    virtual FactorElement parse(std::string_view token) const = 0;

    bool is_identity(const FactorElement& a) const {
        return compare(a, identity()) == std::strong_ordering::equal;
    }
    bool is_positive(const FactorElement& a) const {
        return compare(identity(), a) == std::strong_ordering::less;
    }
};

// The integers under addition with the natural order.
class ZFactor final : public OrderedFactor {
public:
    std::string name() const override { return "Z"; }
    FactorElement identity() const override { return {{0}}; }
    FactorElement compose(const FactorElement& a, const FactorElement& b) const override;
    FactorElement invert(const FactorElement& a) const override;
    std::strong_ordering compare(const FactorElement& a, const FactorElement& b) const override;
    std::string format(const FactorElement& a) const override;
    FactorElement parse(std::string_view token) const override;

    static std::int64_t value(const FactorElement& a);
    static FactorElement make(std::int64_t n) { return {{n}}; }
};

// Z^dim under componentwise addition, ordered lexicographically.
class ZLexFactor final : public OrderedFactor {
public:
    explicit ZLexFactor(int dim);

    std::string name() const override { return "Z^" + std::to_string(dim_); }
    FactorElement identity() const override;
    FactorElement compose(const FactorElement& a, const FactorElement& b) const override;
    FactorElement invert(const FactorElement& a) const override;
    std::strong_ordering compare(const FactorElement& a, const FactorElement& b) const override;
    std::string format(const FactorElement& a) const override;
    FactorElement parse(std::string_view token) const override;

    int dim() const { return dim_; }

private:
    void check(const FactorElement& a) const;
    int dim_;
};

// The factors of a free product, indexed 1..size(). The trivial base group
// is implicit and carries no index.
class FactorFamily {
public:
    FactorFamily() = default;

    int add(std::shared_ptr<const OrderedFactor> factor);
    int size() const { return static_cast<int>(factors_.size()); }
    const OrderedFactor& factor(int index) const;  // 1-based, throws InputError

    static FactorFamily all_z(int count);

private:
    std::vector<std::shared_ptr<const OrderedFactor>> factors_;
};

// A total order on the factor indices, given by position in a sequence.
class IndexOrder {
public:
    // The listed order 1, 2, ..., count.
    static IndexOrder natural(int count);
    // An arbitrary arrangement of distinct positive indices.
    explicit IndexOrder(std::vector<int> sequence);

    bool contains(int index) const;
    bool less(int i, int j) const;
    int count() const { return static_cast<int>(sequence_.size()); }
    const std::vector<int>& sequence() const { return sequence_; }

private:
    void check(int index) const;
    std::vector<int> sequence_;
    std::vector<int> position_;  // position_[index] or -1
};

}  // namespace treeord
