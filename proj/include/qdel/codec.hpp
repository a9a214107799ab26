#pragma once

#include <cstdint>
#include <vector>

#include "qdel/combinatorics.hpp"
#include "qdel/linalg.hpp"

namespace qdel {

/// Single-qubit message alpha|0> + beta|1>, |alpha|^2 + |beta|^2 = 1.
class QubitMessage {
  public:
    QubitMessage(cplx alpha, cplx beta);

    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }
    StateVector vector() const;

  private:
    cplx alpha_;
    cplx beta_;
};

/// The six axis messages (1,0), (0,1), (1,±1)/√2, (1,±i)/√2.
std::vector<QubitMessage> canonical_messages();

/// Deterministic pseudo-random unit message for a given seed.
QubitMessage random_message(std::uint64_t seed);

/// Canonical messages plus `extra` seeded random ones (seeds 0..extra-1).
std::vector<QubitMessage> message_grid(std::size_t extra);

/// One projector block of the deletion measurement: a0 recovered A-side
/// strings x_t and b0 B-side strings y_s, all of length n-1.
struct MeasurementBlock {
    std::vector<BitString> xs;
    std::vector<BitString> ys;

    BasisProjector projector(std::size_t qubits) const;
};

/// Ordered projector blocks plus the residual projector covering every
/// basis index not claimed by a block. The residual participates as an
/// outcome only when its index set is nonempty.
struct DeletionMeasurement {
    std::size_t n = 0; // code length; projectors act on n-1 qubits
    std::vector<MeasurementBlock> blocks;
    BasisProjector residual{1, {}};

    std::size_t qubits() const { return n - 1; }
    std::size_t outcome_count() const { return blocks.size() + (residual.empty() ? 0 : 1); }
};

/// One error-correcting unitary per block, aligned by index.
struct CorrectionSet {
    std::vector<UnitaryMatrix> ops;
};

/// Encode alpha|0>+beta|1> as the superposition with amplitude
/// alpha/√|A| on each string of A and beta/√|B| on each string of B.
/// Checks (C1)/(C2) unless enforce_conditions is false.
StateVector encode(const CodePair& pair, const QubitMessage& msg,
                   bool enforce_conditions = true);

/// Deletion channel D_i: partial trace over qubit i.
DensityMatrix delete_qubit(const DensityMatrix& rho, std::size_t i);

/// Deterministic construction of the deletion measurement. Blocks are
/// formed by scanning (i1, i2, b) triples lexicographically (pairs with
/// i1 < i2 first), restarting after every block, taking lexicographically
/// smallest elements; then single-(i, b) sweeps the same way.
DeletionMeasurement build_measurement(const CodePair& pair,
                                      bool enforce_conditions = true);

/// Correction unitaries: block k's normalized A-superposition maps to
/// basis index 0 and B-superposition to index 1.
CorrectionSet build_corrections(const CodePair& pair, const DeletionMeasurement& meas);

/// Everything needed to decode: immutable after construction.
class CodecInstance {
  public:
    static CodecInstance build(const CodePair& pair, bool enforce_conditions = true);

    const CodePair& pair() const { return pair_; }
    const DeletionMeasurement& measurement() const { return meas_; }
    const CorrectionSet& corrections() const { return corr_; }

  private:
    CodecInstance(CodePair pair, DeletionMeasurement meas, CorrectionSet corr);

    CodePair pair_;
    DeletionMeasurement meas_;
    CorrectionSet corr_;
};

struct DecodeResult {
    DensityMatrix message_state; // 1 qubit
    std::size_t outcome = 0;     // 0-based index into the outcome list
};

/// Measure, sample an outcome by seed, apply the block's correction
/// unitary, and trace down to the final qubit. Throws invalid_state if
/// the residual outcome is realized.
DecodeResult decode(const CodecInstance& instance, const DensityMatrix& rho_prime,
                    std::uint64_t seed);

/// Exact outcome probabilities Tr(P_k rho') in outcome-list order
/// (blocks first, residual last when nonempty).
std::vector<double> outcome_distribution(const CodecInstance& instance,
                                         const DensityMatrix& rho_prime);

/// Fidelity of decode(D_i(Enc(msg))) against the original message.
double roundtrip(const CodecInstance& instance, const QubitMessage& msg,
                 std::size_t i, std::uint64_t seed);
double roundtrip(const CodePair& pair, const QubitMessage& msg,
                 std::size_t i, std::uint64_t seed);

} // namespace qdel
