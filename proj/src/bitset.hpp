#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace relmat {

/// Fixed-width subset of {0, ..., n-1}.
///
/// Widths up to 64 live in a single inline word; wider universes fall back to
/// heap storage. Two bitsets are comparable only when their widths match.
/// Canonical ordering is numeric: the set is read as an integer with element
/// i contributing 2^i.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size);

    static Bitset full(std::size_t size);
    /// Width must be <= 64; bits of `mask` beyond `size` must be zero.
    static Bitset from_mask(std::size_t size, std::uint64_t mask);
    static Bitset of(std::size_t size, std::initializer_list<std::size_t> elems);

    std::size_t size() const { return size_; }
    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }

    bool test(std::size_t i) const;
    void set(std::size_t i);
    void reset(std::size_t i);

    Bitset& operator|=(const Bitset& o);
    Bitset& operator&=(const Bitset& o);
    Bitset& operator-=(const Bitset& o);  // set difference
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complemented() const;
    Bitset with(std::size_t i) const;

    bool is_subset_of(const Bitset& o) const;
    bool intersects(const Bitset& o) const;

    bool operator==(const Bitset& o) const;
    bool operator!=(const Bitset& o) const { return !(*this == o); }
    /// Numeric order; total over equal widths.
    bool operator<(const Bitset& o) const;

    /// Requires size() <= 64.
    std::uint64_t to_mask() const;
    std::vector<std::size_t> elements() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        const std::uint64_t* w = words();
        for (std::size_t k = 0; k < word_count(); ++k) {
            std::uint64_t word = w[k];
            while (word != 0) {
                const int bit = __builtin_ctzll(word);
                fn(k * 64 + static_cast<std::size_t>(bit));
                word &= word - 1;
            }
        }
    }

private:
    std::size_t size_ = 0;
    std::uint64_t word_ = 0;              // storage when size_ <= 64
    std::vector<std::uint64_t> heap_;     // storage otherwise

    std::size_t word_count() const { return (size_ + 63) / 64; }
    const std::uint64_t* words() const { return size_ <= 64 ? &word_ : heap_.data(); }
    std::uint64_t* words() { return size_ <= 64 ? &word_ : heap_.data(); }
    void check_index(std::size_t i) const;
    void check_width(const Bitset& o) const;
};

}  // namespace relmat
