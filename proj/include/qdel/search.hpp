#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "qdel/combinatorics.hpp"

namespace qdel {

/// Search space description. Without a universe the candidate strings are
/// all of {0,1}^n; with one, only the listed strings may enter A or B.
struct SearchSpec {
    std::size_t n = 0;
    std::optional<std::size_t> size_a;
    std::optional<std::size_t> size_b;
    std::size_t max_results = 1024;
    bool symmetry_reduce = false;
    bool force = false; // override the candidate-count guard
    std::optional<std::vector<BitString>> universe;

    void validate() const; // 2 <= n <= 10, sizes >= 1
};

struct SearchReport {
    SearchSpec spec;
    std::vector<CodePair> found;
    std::uint64_t states_examined = 0;
    std::chrono::duration<double> elapsed{0};
};

/// Enumerate disjoint nonempty pairs (A, B) in lexicographic order of
/// their sorted string lists, keeping those that satisfy (C1) and (C2).
/// Candidates that already violate (C1) as partial assignments are pruned.
SearchReport enumerate_codes(const SearchSpec& spec);

/// Minimal representative of the pair's class under coordinate
/// permutations, global bit complement, and A<->B swap. Idempotent.
CodePair canonical_form(const CodePair& pair);

/// End-to-end check: roundtrip fidelity 1 within 1e-9 over every deletion
/// position, the six canonical messages, and grid_size seeded random ones.
bool verify_found(const CodePair& pair, std::size_t grid_size);

} // namespace qdel
