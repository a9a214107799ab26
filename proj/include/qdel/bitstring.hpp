#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qdel {

/// Fixed-length bit sequence x_1 x_2 ... x_n. Position 1 is the leftmost
/// (most significant) bit, so lexicographic order on the printed string
/// equals ascending order of value().
class BitString {
  public:
    BitString(std::size_t n, std::uint32_t value);

    /// Parse an ASCII string of '0'/'1' characters, e.g. "00001001".
    static BitString parse(std::string_view text);

    std::size_t size() const { return n_; }

    /// Basis index of this string: bit 1 is the most significant bit.
    std::uint32_t value() const { return value_; }

    /// Bit at 1-based position i (leftmost = 1).
    int bit(std::size_t i) const;

    std::string str() const;

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

  private:
    std::size_t n_;
    std::uint32_t value_;
};

/// Remove position i (1-based) from x, yielding a string of length n-1.
BitString delete_at(const BitString& x, std::size_t i);

/// Finite set of equal-length bit strings, iterated in lexicographic order.
class BitStringSet {
  public:
    explicit BitStringSet(std::size_t n);
    /// Rejects duplicates and length mismatches.
    BitStringSet(std::size_t n, std::vector<BitString> elements);

    static BitStringSet parse(std::size_t n, const std::vector<std::string>& texts);

    std::size_t width() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    bool contains(const BitString& x) const;
    /// Set-insert; returns false if already present.
    bool insert(const BitString& x);
    bool erase(const BitString& x);

    /// Elements in lexicographic (= ascending value) order.
    const std::vector<BitString>& elements() const { return elems_; }

    std::vector<std::string> strings() const;

    friend bool operator==(const BitStringSet&, const BitStringSet&) = default;

  private:
    std::size_t n_;
    std::vector<BitString> elems_; // sorted, unique
};

BitStringSet intersect(const BitStringSet& a, const BitStringSet& b);
BitStringSet difference(const BitStringSet& a, const BitStringSet& b);

} // namespace qdel
