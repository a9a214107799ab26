#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qdel/bitstring.hpp"

namespace qdel {

/// Two disjoint nonempty sets A, B of n-bit strings together with the
/// derived quantities lambda = gcd(|A|,|B|), a0 = |A|/lambda, b0 = |B|/lambda.
class CodePair {
  public:
    CodePair(BitStringSet a, BitStringSet b);

    std::size_t n() const { return n_; }
    const BitStringSet& A() const { return a_; }
    const BitStringSet& B() const { return b_; }
    std::size_t a0() const { return a0_; }
    std::size_t b0() const { return b0_; }
    std::size_t lambda() const { return lambda_; }

    friend bool operator==(const CodePair&, const CodePair&) = default;

  private:
    std::size_t n_;
    BitStringSet a_;
    BitStringSet b_;
    std::size_t a0_;
    std::size_t b0_;
    std::size_t lambda_;
};

/// One violation of (C1) or (C2). For C1, `element` is a member of the
/// nonempty cross intersection. For C2, `cardinalities` holds
/// (|Delta_{i1,b}(A) ∩ Delta_{i2,b}(A)|, |Delta_{i1,b}(B) ∩ Delta_{i2,b}(B)|)
/// and b1 == b2.
struct ConditionWitness {
    std::size_t i1 = 0;
    std::size_t i2 = 0;
    int b1 = 0;
    int b2 = 0;
    std::optional<BitString> element;
    std::optional<std::pair<std::size_t, std::size_t>> cardinalities;
};

struct Verdict {
    bool holds = true;
    std::vector<ConditionWitness> witnesses;
};

inline constexpr std::size_t kDefaultWitnessCap = 64;

/// { x with position i removed : x in S, bit i of x equals b }.
BitStringSet delta_set(const BitStringSet& s, std::size_t i, int b);

/// All deletion sets of a pair, indexed by position i in [n] and bit b.
struct DeltaTable {
    std::size_t n = 0;
    std::vector<std::array<BitStringSet, 2>> delta_a; // [i-1][b]
    std::vector<std::array<BitStringSet, 2>> delta_b;

    const BitStringSet& a(std::size_t i, int b) const { return delta_a[i - 1][static_cast<std::size_t>(b)]; }
    const BitStringSet& b(std::size_t i, int b) const { return delta_b[i - 1][static_cast<std::size_t>(b)]; }
};

DeltaTable delta_table(const CodePair& pair);

/// Distance condition: every Delta_{i1,b1}(A) is disjoint from every
/// Delta_{i2,b2}(B), over the full quantification including i1 == i2.
Verdict check_c1(const BitStringSet& a, const BitStringSet& b,
                 std::size_t witness_cap = kDefaultWitnessCap);
Verdict check_c1(const CodePair& pair, std::size_t witness_cap = kDefaultWitnessCap);

/// Ratio condition: |A| |Delta_{i1,b}(B) ∩ Delta_{i2,b}(B)| =
/// |B| |Delta_{i1,b}(A) ∩ Delta_{i2,b}(A)| for all i1, i2, b.
Verdict check_c2(const BitStringSet& a, const BitStringSet& b,
                 std::size_t witness_cap = kDefaultWitnessCap);
Verdict check_c2(const CodePair& pair, std::size_t witness_cap = kDefaultWitnessCap);

} // namespace qdel
