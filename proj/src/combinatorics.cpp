#include "qdel/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace qdel {

CodePair::CodePair(BitStringSet a, BitStringSet b) : n_(a.width()), a_(std::move(a)), b_(std::move(b)) {
    if (n_ < 2)
        throw std::invalid_argument("code length must be at least 2");
    if (b_.width() != n_)
        throw std::invalid_argument("A and B must share the same length");
    if (a_.empty() || b_.empty())
        throw std::invalid_argument("A and B must be nonempty");
    if (!intersect(a_, b_).empty())
        throw std::invalid_argument("A and B must be disjoint");
    lambda_ = std::gcd(a_.size(), b_.size());
    a0_ = a_.size() / lambda_;
    b0_ = b_.size() / lambda_;
}

BitStringSet delta_set(const BitStringSet& s, std::size_t i, int b) {
    if (s.empty())
        throw std::invalid_argument("delta_set requires a nonempty set");
    if (i < 1 || i > s.width())
        throw std::invalid_argument("delta_set position " + std::to_string(i) + " out of range");
    if (b != 0 && b != 1)
        throw std::invalid_argument("delta_set bit must be 0 or 1");
    BitStringSet out(s.width() - 1);
    for (const auto& x : s.elements())
        if (x.bit(i) == b)
            out.insert(delete_at(x, i));
    return out;
}

DeltaTable delta_table(const CodePair& pair) {
    DeltaTable t;
    t.n = pair.n();
    for (std::size_t i = 1; i <= pair.n(); ++i) {
        t.delta_a.push_back({delta_set(pair.A(), i, 0), delta_set(pair.A(), i, 1)});
        t.delta_b.push_back({delta_set(pair.B(), i, 0), delta_set(pair.B(), i, 1)});
    }
    return t;
}

Verdict check_c1(const BitStringSet& a, const BitStringSet& b, std::size_t witness_cap) {
    const std::size_t n = a.width();
    std::vector<std::array<BitStringSet, 2>> da;
    std::vector<std::array<BitStringSet, 2>> db;
    for (std::size_t i = 1; i <= n; ++i) {
        da.push_back({delta_set(a, i, 0), delta_set(a, i, 1)});
        db.push_back({delta_set(b, i, 0), delta_set(b, i, 1)});
    }
    Verdict v;
    for (std::size_t i1 = 1; i1 <= n; ++i1)
        for (std::size_t i2 = 1; i2 <= n; ++i2)
            for (int b1 = 0; b1 <= 1; ++b1)
                for (int b2 = 0; b2 <= 1; ++b2) {
                    auto inter = intersect(da[i1 - 1][static_cast<std::size_t>(b1)],
                                           db[i2 - 1][static_cast<std::size_t>(b2)]);
                    if (inter.empty())
                        continue;
                    v.holds = false;
                    if (v.witnesses.size() < witness_cap)
                        v.witnesses.push_back({i1, i2, b1, b2, inter.elements().front(), std::nullopt});
                }
    return v;
}

Verdict check_c1(const CodePair& pair, std::size_t witness_cap) {
    return check_c1(pair.A(), pair.B(), witness_cap);
}

Verdict check_c2(const BitStringSet& a, const BitStringSet& b, std::size_t witness_cap) {
    const std::size_t n = a.width();
    std::vector<std::array<BitStringSet, 2>> da;
    std::vector<std::array<BitStringSet, 2>> db;
    for (std::size_t i = 1; i <= n; ++i) {
        da.push_back({delta_set(a, i, 0), delta_set(a, i, 1)});
        db.push_back({delta_set(b, i, 0), delta_set(b, i, 1)});
    }
    Verdict v;
    for (std::size_t i1 = 1; i1 <= n; ++i1)
        for (std::size_t i2 = 1; i2 <= n; ++i2)
            for (int bb = 0; bb <= 1; ++bb) {
                const auto sb = static_cast<std::size_t>(bb);
                const std::size_t inter_a = intersect(da[i1 - 1][sb], da[i2 - 1][sb]).size();
                const std::size_t inter_b = intersect(db[i1 - 1][sb], db[i2 - 1][sb]).size();
                if (a.size() * inter_b == b.size() * inter_a)
                    continue;
                v.holds = false;
                if (v.witnesses.size() < witness_cap)
                    v.witnesses.push_back({i1, i2, bb, bb, std::nullopt, std::make_pair(inter_a, inter_b)});
            }
    return v;
}

Verdict check_c2(const CodePair& pair, std::size_t witness_cap) {
    return check_c2(pair.A(), pair.B(), witness_cap);
}

} // namespace qdel
