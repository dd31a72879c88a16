#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "triconflict/errors.hpp"

namespace triconflict {

struct AgentDim {
    static constexpr const char *label = "agents";
};
struct IssueDim {
    static constexpr const char *label = "issues";
};

//! Subjects are enumerated as ascending 64-bit masks, so exhaustive sweeps
//! only work on universes of at most this many elements. Wider sets still
//! support all set algebra through the multi-word representation below.
inline constexpr std::size_t kMaskWidthCap = 64;

//! A subset of a fixed universe, indexed 0..width-1 in table order.
//!
//! The phantom Dim parameter keeps agent sets and issue sets from mixing.
//! Storage is a vector of 64-bit words: a single word for universes of up
//! to 64 elements (the common case, and the only case sweeps enumerate),
//! more words beyond that.
template <typename Dim>
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(std::size_t width)
        : width_(width), words_(word_count(width), 0) {}

    static ElementSet full(std::size_t width) {
        ElementSet s(width);
        for (auto &w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    //! Bit i of mask selects element i. Requires width <= 64.
    static ElementSet from_mask(std::size_t width, std::uint64_t mask) {
        if (width > kMaskWidthCap)
            throw DomainError("universe too wide for a 64-bit mask");
        ElementSet s(width);
        if (width > 0)
            s.words_[0] = mask;
        s.trim();
        return s;
    }

    static ElementSet of(std::size_t width,
                         std::initializer_list<std::size_t> indices) {
        ElementSet s(width);
        for (std::size_t i : indices)
            s.set(i);
        return s;
    }

    std::size_t width() const { return width_; }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool empty() const {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool is_subset_of(const ElementSet &other) const {
        check_same(other);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k])
                return false;
        return true;
    }

    bool intersects(const ElementSet &other) const {
        check_same(other);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k])
                return true;
        return false;
    }

    ElementSet operator&(const ElementSet &o) const {
        return combine(o, [](std::uint64_t a, std::uint64_t b) { return a & b; });
    }
    ElementSet operator|(const ElementSet &o) const {
        return combine(o, [](std::uint64_t a, std::uint64_t b) { return a | b; });
    }
    ElementSet operator^(const ElementSet &o) const {
        return combine(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; });
    }
    //! Set difference: elements of *this not in o.
    ElementSet operator-(const ElementSet &o) const {
        return combine(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; });
    }

    //! Complement within the universe.
    ElementSet complement() const {
        ElementSet r(*this);
        for (auto &w : r.words_)
            w = ~w;
        r.trim();
        return r;
    }
    ElementSet operator~() const { return complement(); }

    friend bool operator==(const ElementSet &a, const ElementSet &b) {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }
    friend bool operator!=(const ElementSet &a, const ElementSet &b) {
        return !(a == b);
    }

    //! The set as a 64-bit mask. Requires width <= 64.
    std::uint64_t mask() const {
        if (width_ > kMaskWidthCap)
            throw DomainError("universe too wide for a 64-bit mask");
        return words_.empty() ? 0 : words_[0];
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    template <typename F>
    void for_each(F &&f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                unsigned bit = static_cast<unsigned>(std::countr_zero(w));
                f(k * 64 + bit);
                w &= w - 1;
            }
        }
    }

private:
    static std::size_t word_count(std::size_t width) {
        return (width + 63) / 64;
    }

    void check_index(std::size_t i) const {
        if (i >= width_)
            throw std::out_of_range("element index out of range");
    }

    void check_same(const ElementSet &other) const {
        if (width_ != other.width_)
            throw DomainError("set operation across different universes");
    }

    template <typename Op>
    ElementSet combine(const ElementSet &o, Op op) const {
        check_same(o);
        ElementSet r(width_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            r.words_[k] = op(words_[k], o.words_[k]);
        return r;
    }

    //! Clear bits at and above width_ in the top word.
    void trim() {
        if (width_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
        if (width_ == 0)
            for (auto &w : words_)
                w = 0;
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

using AgentSet = ElementSet<AgentDim>;
using IssueSet = ElementSet<IssueDim>;

} // namespace triconflict
