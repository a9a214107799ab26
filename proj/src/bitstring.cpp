#include "qdel/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdel {

namespace {

constexpr std::size_t kMaxWidth = 24;

void require_width(std::size_t n) {
    if (n == 0 || n > kMaxWidth)
        throw std::invalid_argument("bit string length must be in [1, 24], got " + std::to_string(n));
}

} // namespace

BitString::BitString(std::size_t n, std::uint32_t value) : n_(n), value_(value) {
    require_width(n);
    if (value >= (std::uint32_t{1} << n))
        throw std::invalid_argument("bit string value out of range for length " + std::to_string(n));
}

BitString BitString::parse(std::string_view text) {
    require_width(text.size());
    std::uint32_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit string may contain only '0' and '1': " + std::string(text));
        v = (v << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return BitString(text.size(), v);
}

int BitString::bit(std::size_t i) const {
    if (i < 1 || i > n_)
        throw std::invalid_argument("bit position " + std::to_string(i) + " out of range [1, " +
                                    std::to_string(n_) + "]");
    return static_cast<int>((value_ >> (n_ - i)) & 1u);
}

std::string BitString::str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if ((value_ >> (n_ - 1 - i)) & 1u)
            s[i] = '1';
    return s;
}

BitString delete_at(const BitString& x, std::size_t i) {
    const std::size_t n = x.size();
    if (n < 2)
        throw std::invalid_argument("cannot delete from a length-1 bit string");
    if (i < 1 || i > n)
        throw std::invalid_argument("deletion position " + std::to_string(i) + " out of range [1, " +
                                    std::to_string(n) + "]");
    const std::size_t low_bits = n - i;
    const std::uint32_t high = x.value() >> (low_bits + 1);
    const std::uint32_t low = x.value() & ((std::uint32_t{1} << low_bits) - 1u);
    return BitString(n - 1, (high << low_bits) | low);
}

BitStringSet::BitStringSet(std::size_t n) : n_(n) { require_width(n); }

BitStringSet::BitStringSet(std::size_t n, std::vector<BitString> elements) : n_(n), elems_(std::move(elements)) {
    require_width(n);
    for (const auto& e : elems_)
        if (e.size() != n_)
            throw std::invalid_argument("set element " + e.str() + " does not have length " + std::to_string(n_));
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
        throw std::invalid_argument("duplicate element in bit string set");
}

BitStringSet BitStringSet::parse(std::size_t n, const std::vector<std::string>& texts) {
    std::vector<BitString> elems;
    elems.reserve(texts.size());
    for (const auto& t : texts)
        elems.push_back(BitString::parse(t));
    return BitStringSet(n, std::move(elems));
}

bool BitStringSet::contains(const BitString& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool BitStringSet::insert(const BitString& x) {
    if (x.size() != n_)
        throw std::invalid_argument("cannot insert string of length " + std::to_string(x.size()) +
                                    " into set of width " + std::to_string(n_));
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it != elems_.end() && *it == x)
        return false;
    elems_.insert(it, x);
    return true;
}

bool BitStringSet::erase(const BitString& x) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || !(*it == x))
        return false;
    elems_.erase(it);
    return true;
}

std::vector<std::string> BitStringSet::strings() const {
    std::vector<std::string> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_)
        out.push_back(e.str());
    return out;
}

namespace {

void require_same_width(const BitStringSet& a, const BitStringSet& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("set widths differ: " + std::to_string(a.width()) + " vs " +
                                    std::to_string(b.width()));
}

} // namespace

BitStringSet intersect(const BitStringSet& a, const BitStringSet& b) {
    require_same_width(a, b);
    std::vector<BitString> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                          std::back_inserter(out));
    return BitStringSet(a.width(), std::move(out));
}

BitStringSet difference(const BitStringSet& a, const BitStringSet& b) {
    require_same_width(a, b);
    std::vector<BitString> out;
    std::set_difference(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
    return BitStringSet(a.width(), std::move(out));
}

} // namespace qdel
