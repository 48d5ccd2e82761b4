#include "bitset.hpp"

#include <string>

#include "errors.hpp"

namespace relmat {

Bitset::Bitset(std::size_t size) : size_(size) {
    if (size_ > 64) heap_.assign(word_count(), 0);
}

Bitset Bitset::full(std::size_t size) {
    Bitset b(size);
    std::uint64_t* w = b.words();
    for (std::size_t k = 0; k < b.word_count(); ++k) w[k] = ~std::uint64_t{0};
    if (size % 64 != 0 && size > 0) w[b.word_count() - 1] = (std::uint64_t{1} << (size % 64)) - 1;
    return b;
}

Bitset Bitset::from_mask(std::size_t size, std::uint64_t mask) {
    if (size > 64) throw DomainError("Bitset::from_mask requires width <= 64");
    if (size < 64 && (mask >> size) != 0)
        throw DomainError("Bitset::from_mask: mask has bits beyond width " + std::to_string(size));
    Bitset b(size);
    b.word_ = mask;
    return b;
}

Bitset Bitset::of(std::size_t size, std::initializer_list<std::size_t> elems) {
    Bitset b(size);
    for (std::size_t e : elems) b.set(e);
    return b;
}

void Bitset::check_index(std::size_t i) const {
    if (i >= size_)
        throw DomainError("element " + std::to_string(i) + " outside universe of size " +
                          std::to_string(size_));
}

void Bitset::check_width(const Bitset& o) const {
    if (size_ != o.size_)
        throw DomainError("subset width mismatch: " + std::to_string(size_) + " vs " +
                          std::to_string(o.size_));
}

std::size_t Bitset::count() const {
    std::size_t total = 0;
    const std::uint64_t* w = words();
    for (std::size_t k = 0; k < word_count(); ++k) total += static_cast<std::size_t>(__builtin_popcountll(w[k]));
    return total;
}

bool Bitset::any() const {
    const std::uint64_t* w = words();
    for (std::size_t k = 0; k < word_count(); ++k)
        if (w[k] != 0) return true;
    return false;
}

bool Bitset::test(std::size_t i) const {
    check_index(i);
    return (words()[i / 64] >> (i % 64)) & 1;
}

void Bitset::set(std::size_t i) {
    check_index(i);
    words()[i / 64] |= std::uint64_t{1} << (i % 64);
}

void Bitset::reset(std::size_t i) {
    check_index(i);
    words()[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

Bitset& Bitset::operator|=(const Bitset& o) {
    check_width(o);
    std::uint64_t* a = words();
    const std::uint64_t* b = o.words();
    for (std::size_t k = 0; k < word_count(); ++k) a[k] |= b[k];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    check_width(o);
    std::uint64_t* a = words();
    const std::uint64_t* b = o.words();
    for (std::size_t k = 0; k < word_count(); ++k) a[k] &= b[k];
    return *this;
}

Bitset& Bitset::operator-=(const Bitset& o) {
    check_width(o);
    std::uint64_t* a = words();
    const std::uint64_t* b = o.words();
    for (std::size_t k = 0; k < word_count(); ++k) a[k] &= ~b[k];
    return *this;
}

Bitset Bitset::complemented() const { return full(size_) - *this; }

Bitset Bitset::with(std::size_t i) const {
    Bitset b = *this;
    b.set(i);
    return b;
}

bool Bitset::is_subset_of(const Bitset& o) const {
    check_width(o);
    const std::uint64_t* a = words();
    const std::uint64_t* b = o.words();
    for (std::size_t k = 0; k < word_count(); ++k)
        if ((a[k] & ~b[k]) != 0) return false;
    return true;
}

bool Bitset::intersects(const Bitset& o) const {
    check_width(o);
    const std::uint64_t* a = words();
    const std::uint64_t* b = o.words();
    for (std::size_t k = 0; k < word_count(); ++k)
        if ((a[k] & b[k]) != 0) return true;
    return false;
}

bool Bitset::operator==(const Bitset& o) const {
    if (size_ != o.size_) return false;
    const std::uint64_t* a = words();
    const std::uint64_t* b = o.words();
    for (std::size_t k = 0; k < word_count(); ++k)
        if (a[k] != b[k]) return false;
    return true;
}

bool Bitset::operator<(const Bitset& o) const {
    check_width(o);
    const std::uint64_t* a = words();
    const std::uint64_t* b = o.words();
    for (std::size_t k = word_count(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

std::uint64_t Bitset::to_mask() const {
    if (size_ > 64) throw DomainError("Bitset::to_mask requires width <= 64");
    return word_;
}

std::vector<std::size_t> Bitset::elements() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

}  // namespace relmat
