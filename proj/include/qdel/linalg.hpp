#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qdel {

using cplx = std::complex<double>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kOutcomeThreshold = 1e-12; // below this an outcome is impossible
inline constexpr double kPsdTol = -1e-8;

/// Dense row-major complex matrix. Dimensions in this toolkit stay at or
/// below 2^8 = 256, so no sparsity or blocking is attempted.
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix adjoint() const;
    cplx trace() const;

    double max_abs() const;
    double max_abs_diff(const Matrix& other) const;
    bool is_hermitian(double tol) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    Matrix& operator*=(cplx scale);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    /// Debug rendering: one row per line, entries as "re+imi" with six
    /// significant digits.
    std::string debug_string() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> e_;
};

Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps, ascending.
std::vector<double> hermitian_eigenvalues(Matrix a);

/// Pure state of m qubits. amp[j] is the amplitude of the computational
/// basis state whose bit string is the m-bit big-endian expansion of j.
class StateVector {
  public:
    explicit StateVector(std::size_t qubits);
    StateVector(std::size_t qubits, std::vector<cplx> amplitudes);

    std::size_t qubits() const { return qubits_; }
    std::size_t dim() const { return amp_.size(); }
    double norm() const;

    cplx& operator[](std::size_t j) { return amp_[j]; }
    const cplx& operator[](std::size_t j) const { return amp_[j]; }
    const std::vector<cplx>& amplitudes() const { return amp_; }

    cplx inner(const StateVector& other) const; // <this|other>

  private:
    std::size_t qubits_;
    std::vector<cplx> amp_;
};

/// Mixed state of m qubits: Hermitian (1e-10), trace one (1e-10).
/// Positive semidefiniteness is only checked on demand (min_eigenvalue).
class DensityMatrix {
  public:
    DensityMatrix(std::size_t qubits, Matrix entries);

    std::size_t qubits() const { return qubits_; }
    std::size_t dim() const { return m_.rows(); }
    const Matrix& mat() const { return m_; }

    double min_eigenvalue() const;

  private:
    std::size_t qubits_;
    Matrix m_;
};

/// Projector onto a set of computational basis states, stored as the
/// sorted index set. Its dense form has exact 0/1 entries, so P^2 = P and
/// P = P† hold exactly.
class BasisProjector {
  public:
    BasisProjector(std::size_t qubits, std::vector<std::size_t> indices);

    std::size_t qubits() const { return qubits_; }
    std::size_t dim() const { return std::size_t{1} << qubits_; }
    bool empty() const { return indices_.empty(); }
    const std::vector<std::size_t>& indices() const { return indices_; }
    bool contains(std::size_t j) const;

    Matrix dense() const;

  private:
    std::size_t qubits_;
    std::vector<std::size_t> indices_; // sorted, unique
};

/// Square matrix with U†U = I within 1e-10, validated on construction.
class UnitaryMatrix {
  public:
    UnitaryMatrix(std::size_t qubits, Matrix entries);

    std::size_t qubits() const { return qubits_; }
    std::size_t dim() const { return m_.rows(); }
    const Matrix& mat() const { return m_; }

  private:
    std::size_t qubits_;
    Matrix m_;
};

/// |v><v| of a normalized state (norm checked within 1e-12).
DensityMatrix pure_density(const StateVector& v);

/// Tr_i: trace out qubit i (1-based, leftmost = most significant).
DensityMatrix partial_trace_qubit(const DensityMatrix& rho, std::size_t i);

struct ProjectionResult {
    double prob = 0.0;
    std::optional<DensityMatrix> post; // absent when prob <= 1e-12
};

/// Probability Tr(P rho) and post state P rho P / Tr(P rho).
ProjectionResult apply_projector(const BasisProjector& p, const DensityMatrix& rho);

/// Full projection measurement. The projectors must be pairwise disjoint
/// and, together with the optional residual, cover every basis index.
/// Result order: one entry per projector, then the residual if given.
std::vector<ProjectionResult> measure(std::span<const BasisProjector> projectors,
                                      const std::optional<BasisProjector>& residual,
                                      const DensityMatrix& rho);

/// Inverse-CDF draw over the listed order, using one splitmix64 variate.
/// Same seed, same distribution: same outcome.
std::size_t sample_outcome(std::span<const double> distribution, std::uint64_t seed);

struct TargetImage {
    StateVector vector;
    std::size_t image_index;
};

/// Build a unitary U with U vector_t = e_{image_index_t} for every target.
/// Targets must be pairwise orthonormal (1e-10) with distinct images.
/// The remaining rows come from Gram-Schmidt over standard basis vectors
/// in ascending index order, skipping candidates whose residual norm
/// drops below 1e-8.
UnitaryMatrix complete_unitary(std::span<const TargetImage> targets);

/// U rho U†. Skips exactly-zero entries of rho, which makes conjugating
/// post-measurement states (support on a few indices) cheap.
DensityMatrix conjugate_by(const UnitaryMatrix& u, const DensityMatrix& rho);

/// <psi| sigma |psi> for a single-qubit state, clamped to [0, 1].
double fidelity_pure(const DensityMatrix& sigma, const StateVector& psi);

} // namespace qdel
