#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace packlab {

/// A subset of {0, ..., universe-1}, stored as a packed bitset.
///
/// Binary operations require both operands to share the same universe.
class VertexSet {
public:
    class Iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int *;
        using reference = int;

        Iterator() = default;
        Iterator(const VertexSet * set, int v) : set_(set), v_(v) {}

        int operator*() const { return v_; }
        Iterator & operator++()
        {
            v_ = set_->next(v_);
            return *this;
        }
        Iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const Iterator & other) const { return v_ == other.v_; }

    private:
        const VertexSet * set_ = nullptr;
        int v_ = -1;
    };

    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe)
    {
        for (int v : members)
            insert(v);
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (auto & w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    /// Members {lo, ..., hi-1}.
    static VertexSet range(int universe, int lo, int hi)
    {
        VertexSet s(universe);
        for (int v = lo; v < hi; ++v)
            s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const { return (words_[word(v)] >> bit(v)) & 1U; }
    void insert(int v) { words_[word(v)] |= mask(v); }
    void erase(int v) { words_[word(v)] &= ~mask(v); }

    int size() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Smallest member, or -1.
    int first() const { return scan_from(0); }

    /// Smallest member strictly greater than v, or -1.
    int next(int v) const { return scan_from(v + 1); }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this)
            out.push_back(v);
        return out;
    }

    Iterator begin() const { return {this, first()}; }
    Iterator end() const { return {this, -1}; }

    VertexSet & operator&=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet & operator|=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet & operator-=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }

    /// |this ∩ o| without materialising the intersection.
    int intersection_size(const VertexSet & o) const
    {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool intersects(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    /// Complement within the universe.
    VertexSet complement() const
    {
        VertexSet s(*this);
        for (auto & w : s.words_)
            w = ~w;
        s.trim();
        return s;
    }

    bool operator==(const VertexSet &) const = default;

private:
    static std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }
    static std::size_t word(int v) { return static_cast<std::size_t>(v) >> 6; }
    static unsigned bit(int v) { return static_cast<unsigned>(v) & 63U; }
    static std::uint64_t mask(int v) { return std::uint64_t{1} << bit(v); }

    void trim()
    {
        if (universe_ % 64 != 0 && ! words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    int scan_from(int v) const
    {
        if (v >= universe_)
            return -1;
        std::size_t i = word(v);
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << bit(v));
        while (true) {
            if (w)
                return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            if (++i == words_.size())
                return -1;
            w = words_[i];
        }
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace packlab
