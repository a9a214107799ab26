#include "qdel/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qdel/errors.hpp"
#include "qdel/rng.hpp"

namespace qdel {

namespace {

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::size_t require_power_of_two_dim(const Matrix& m, std::size_t qubits, const char* what) {
    const std::size_t d = std::size_t{1} << qubits;
    if (m.rows() != d || m.cols() != d)
        throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(d) + "x" +
                                    std::to_string(d) + " matrix for " + std::to_string(qubits) + " qubits");
    return d;
}

// Insert bit t at 1-based position i (from the left) of an (m-1)-bit value.
std::size_t insert_bit(std::size_t v, std::size_t m, std::size_t i, std::size_t t) {
    const std::size_t shift = m - i; // bits to the right of position i
    const std::size_t high = v >> shift;
    const std::size_t low = v & ((std::size_t{1} << shift) - 1);
    return (high << (shift + 1)) | (t << shift) | low;
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, cplx{0.0, 0.0}) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be positive");
}

Matrix Matrix::identity(std::size_t d) {
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j)
        m(j, j) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = std::conj((*this)(r, c));
    return out;
}

cplx Matrix::trace() const {
    if (rows_ != cols_)
        throw std::invalid_argument("trace of a non-square matrix");
    cplx t{0.0, 0.0};
    for (std::size_t j = 0; j < rows_; ++j)
        t += (*this)(j, j);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : e_)
        m = std::max(m, std::abs(z));
    return m;
}

double Matrix::max_abs_diff(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < e_.size(); ++k)
        m = std::max(m, std::abs(e_[k] - other.e_[k]));
    return m;
}

bool Matrix::is_hermitian(double tol) const {
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol)
                return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0})
                continue;
            const cplx* brow = &b.e_[k * b.cols_];
            cplx* orow = &out.e_[i * out.cols_];
            for (std::size_t j = 0; j < b.cols_; ++j)
                orow[j] += aik * brow[j];
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix out = a;
    for (std::size_t k = 0; k < out.e_.size(); ++k)
        out.e_[k] += b.e_[k];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix out = a;
    for (std::size_t k = 0; k < out.e_.size(); ++k)
        out.e_[k] -= b.e_[k];
    return out;
}

Matrix& Matrix::operator*=(cplx scale) {
    for (auto& z : e_)
        z *= scale;
    return *this;
}

std::string Matrix::debug_string() const {
    std::string out;
    char buf[64];
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const cplx z = (*this)(r, c);
            std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
            out += buf;
            out += (c + 1 < cols_) ? ' ' : '\n';
        }
    }
    return out;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const cplx f = a(ra, ca);
            if (f == cplx{0.0, 0.0})
                continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
        }
    return out;
}

// Cyclic Jacobi with complex rotations: each sweep phases the (p, q)
// entry real, then applies the classic 2x2 rotation that annihilates it.
std::vector<double> hermitian_eigenvalues(Matrix a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
    if (!a.is_hermitian(1e-8))
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    const std::size_t d = a.rows();
    double scale = std::max(1.0, a.max_abs());

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q)
                off += std::norm(a(p, q));
        if (std::sqrt(off) <= 1e-14 * scale * static_cast<double>(d))
            break;

        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300)
                    continue;
                const cplx phase = apq / mag; // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                double t;
                if (tau >= 0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- J† A J with J(p,p)=c, J(p,q)=s, J(q,p)=-s e^{-i phi},
                // J(q,q)=c e^{-i phi}.
                const cplx ephi = phase;
                for (std::size_t r = 0; r < d; ++r) {
                    const cplx arp = a(r, p);
                    const cplx arq = a(r, q);
                    a(r, p) = c * arp - s * std::conj(ephi) * arq;
                    a(r, q) = s * arp + c * std::conj(ephi) * arq;
                }
                for (std::size_t col = 0; col < d; ++col) {
                    const cplx apc = a(p, col);
                    const cplx aqc = a(q, col);
                    a(p, col) = c * apc - s * ephi * aqc;
                    a(q, col) = s * apc + c * ephi * aqc;
                }
            }
    }

    std::vector<double> eig(d);
    for (std::size_t j = 0; j < d; ++j)
        eig[j] = a(j, j).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

StateVector::StateVector(std::size_t qubits) : qubits_(qubits), amp_(std::size_t{1} << qubits, cplx{0.0, 0.0}) {
    if (qubits == 0 || qubits > 24)
        throw std::invalid_argument("qubit count must be in [1, 24]");
}

StateVector::StateVector(std::size_t qubits, std::vector<cplx> amplitudes) : qubits_(qubits), amp_(std::move(amplitudes)) {
    if (qubits == 0 || qubits > 24)
        throw std::invalid_argument("qubit count must be in [1, 24]");
    if (amp_.size() != (std::size_t{1} << qubits))
        throw std::invalid_argument("state vector length must be 2^qubits");
    for (const auto& z : amp_)
        if (!is_finite(z))
            throw validation_error("state vector contains a non-finite amplitude");
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& z : amp_)
        s += std::norm(z);
    return std::sqrt(s);
}

cplx StateVector::inner(const StateVector& other) const {
    if (qubits_ != other.qubits_)
        throw std::invalid_argument("inner product dimension mismatch");
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < amp_.size(); ++j)
        s += std::conj(amp_[j]) * other.amp_[j];
    return s;
}

DensityMatrix::DensityMatrix(std::size_t qubits, Matrix entries) : qubits_(qubits), m_(std::move(entries)) {
    require_power_of_two_dim(m_, qubits, "density matrix");
    if (!m_.is_hermitian(kHermitianTol))
        throw validation_error("density matrix is not Hermitian within 1e-10");
    const cplx t = m_.trace();
    if (std::abs(t - cplx{1.0, 0.0}) > kTraceTol)
        throw validation_error("density matrix trace deviates from one by more than 1e-10");
    for (std::size_t r = 0; r < m_.rows(); ++r)
        for (std::size_t c = 0; c < m_.cols(); ++c)
            if (!is_finite(m_(r, c)))
                throw validation_error("density matrix contains a non-finite entry");
}

double DensityMatrix::min_eigenvalue() const {
    return hermitian_eigenvalues(m_).front();
}

BasisProjector::BasisProjector(std::size_t qubits, std::vector<std::size_t> indices)
    : qubits_(qubits), indices_(std::move(indices)) {
    if (qubits == 0 || qubits > 24)
        throw std::invalid_argument("qubit count must be in [1, 24]");
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
        throw std::invalid_argument("projector indices must be distinct");
    if (!indices_.empty() && indices_.back() >= dim())
        throw std::invalid_argument("projector index out of range");
}

bool BasisProjector::contains(std::size_t j) const {
    return std::binary_search(indices_.begin(), indices_.end(), j);
}

Matrix BasisProjector::dense() const {
    Matrix m(dim(), dim());
    for (std::size_t j : indices_)
        m(j, j) = 1.0;
    return m;
}

UnitaryMatrix::UnitaryMatrix(std::size_t qubits, Matrix entries) : qubits_(qubits), m_(std::move(entries)) {
    const std::size_t d = require_power_of_two_dim(m_, qubits, "unitary matrix");
    const Matrix gram = m_.adjoint() * m_;
    if (gram.max_abs_diff(Matrix::identity(d)) > kUnitaryTol)
        throw validation_error("matrix is not unitary within 1e-10");
}

DensityMatrix pure_density(const StateVector& v) {
    if (std::abs(v.norm() - 1.0) > kNormTol)
        throw validation_error("pure_density requires a normalized state (1e-12)");
    const std::size_t d = v.dim();
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        if (v[r] == cplx{0.0, 0.0})
            continue;
        for (std::size_t c = 0; c < d; ++c)
            m(r, c) = v[r] * std::conj(v[c]);
    }
    return DensityMatrix(v.qubits(), std::move(m));
}

DensityMatrix partial_trace_qubit(const DensityMatrix& rho, std::size_t i) {
    const std::size_t m = rho.qubits();
    if (m < 2)
        throw std::invalid_argument("partial trace requires at least 2 qubits");
    if (i < 1 || i > m)
        throw std::invalid_argument("partial trace position out of range");
    const std::size_t dout = std::size_t{1} << (m - 1);
    Matrix out(dout, dout);
    for (std::size_t r = 0; r < dout; ++r)
        for (std::size_t c = 0; c < dout; ++c) {
            cplx acc{0.0, 0.0};
            for (std::size_t t = 0; t < 2; ++t)
                acc += rho.mat()(insert_bit(r, m, i, t), insert_bit(c, m, i, t));
            out(r, c) = acc;
        }
    return DensityMatrix(m - 1, std::move(out));
}

ProjectionResult apply_projector(const BasisProjector& p, const DensityMatrix& rho) {
    if (p.qubits() != rho.qubits())
        throw std::invalid_argument("projector and state dimensions differ");
    double prob = 0.0;
    for (std::size_t j : p.indices())
        prob += rho.mat()(j, j).real();
    if (prob < -kOutcomeThreshold || prob > 1.0 + kOutcomeThreshold)
        throw validation_error("projection probability outside [0, 1] beyond tolerance");
    prob = std::clamp(prob, 0.0, 1.0);

    ProjectionResult result;
    result.prob = prob;
    if (prob > kOutcomeThreshold) {
        const std::size_t d = rho.dim();
        Matrix post(d, d);
        for (std::size_t r : p.indices())
            for (std::size_t c : p.indices())
                post(r, c) = rho.mat()(r, c) / prob;
        result.post = DensityMatrix(rho.qubits(), std::move(post));
    }
    return result;
}

std::vector<ProjectionResult> measure(std::span<const BasisProjector> projectors,
                                      const std::optional<BasisProjector>& residual,
                                      const DensityMatrix& rho) {
    const std::size_t d = rho.dim();
    std::vector<int> coverage(d, 0);
    auto cover = [&](const BasisProjector& p) {
        if (p.qubits() != rho.qubits())
            throw validation_error("measurement projector dimension mismatch");
        for (std::size_t j : p.indices())
            ++coverage[j];
    };
    for (const auto& p : projectors)
        cover(p);
    if (residual)
        cover(*residual);
    for (std::size_t j = 0; j < d; ++j) {
        if (coverage[j] > 1)
            throw validation_error("measurement projectors overlap at basis index " + std::to_string(j));
        if (coverage[j] == 0)
            throw validation_error("measurement does not cover basis index " + std::to_string(j));
    }

    std::vector<ProjectionResult> results;
    results.reserve(projectors.size() + (residual ? 1 : 0));
    for (const auto& p : projectors)
        results.push_back(apply_projector(p, rho));
    if (residual)
        results.push_back(apply_projector(*residual, rho));
    return results;
}

std::size_t sample_outcome(std::span<const double> distribution, std::uint64_t seed) {
    if (distribution.empty())
        throw std::invalid_argument("cannot sample from an empty distribution");
    double total = 0.0;
    for (double p : distribution) {
        if (p < -kOutcomeThreshold)
            throw validation_error("negative probability in distribution");
        total += std::max(p, 0.0);
    }
    if (std::abs(total - 1.0) > 1e-10)
        throw validation_error("distribution probabilities do not sum to one within 1e-10");

    SplitMix64 rng(seed);
    const double u = rng.next_double() * total;
    double cum = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t k = 0; k < distribution.size(); ++k) {
        const double p = std::max(distribution[k], 0.0);
        if (p > 0.0)
            last_nonzero = k;
        cum += p;
        if (u < cum)
            return k;
    }
    return last_nonzero;
}

UnitaryMatrix complete_unitary(std::span<const TargetImage> targets) {
    if (targets.empty())
        throw std::invalid_argument("complete_unitary requires at least one target");
    const std::size_t qubits = targets.front().vector.qubits();
    const std::size_t d = std::size_t{1} << qubits;
    if (targets.size() > d)
        throw std::invalid_argument("more targets than dimensions");

    std::vector<bool> image_used(d, false);
    for (const auto& t : targets) {
        if (t.vector.qubits() != qubits)
            throw std::invalid_argument("complete_unitary targets have mixed dimensions");
        if (t.image_index >= d)
            throw std::invalid_argument("image index out of range");
        if (image_used[t.image_index])
            throw std::invalid_argument("duplicate image index");
        image_used[t.image_index] = true;
    }
    for (std::size_t s = 0; s < targets.size(); ++s)
        for (std::size_t t = s; t < targets.size(); ++t) {
            const cplx g = targets[s].vector.inner(targets[t].vector);
            const cplx want = (s == t) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (std::abs(g - want) > kUnitaryTol)
                throw std::invalid_argument("complete_unitary targets are not orthonormal within 1e-10");
        }

    // Row image_t := conj(v_t); then U v_t = e_{image_t} exactly when all
    // rows are orthonormal under the standard Hermitian inner product.
    Matrix u(d, d);
    std::vector<bool> filled(d, false);
    std::vector<std::vector<cplx>> placed;
    placed.reserve(d);
    for (const auto& t : targets) {
        std::vector<cplx> row(d);
        for (std::size_t c = 0; c < d; ++c) {
            row[c] = std::conj(t.vector[c]);
            u(t.image_index, c) = row[c];
        }
        filled[t.image_index] = true;
        placed.push_back(std::move(row));
    }

    std::size_t next_row = 0;
    auto advance = [&] {
        while (next_row < d && filled[next_row])
            ++next_row;
    };
    advance();

    for (std::size_t j = 0; j < d && next_row < d; ++j) {
        std::vector<cplx> cand(d, cplx{0.0, 0.0});
        cand[j] = 1.0;
        // Two Gram-Schmidt passes keep orthogonality near machine precision.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& w : placed) {
                cplx coef{0.0, 0.0};
                for (std::size_t c = 0; c < d; ++c)
                    coef += std::conj(w[c]) * cand[c];
                for (std::size_t c = 0; c < d; ++c)
                    cand[c] -= coef * w[c];
            }
        double nrm = 0.0;
        for (const auto& z : cand)
            nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-8)
            continue;
        for (auto& z : cand)
            z /= nrm;
        for (std::size_t c = 0; c < d; ++c)
            u(next_row, c) = cand[c];
        filled[next_row] = true;
        placed.push_back(std::move(cand));
        advance();
    }
    if (next_row < d)
        throw validation_error("complete_unitary could not fill all rows");

    UnitaryMatrix result(qubits, std::move(u));
    for (const auto& t : targets) {
        double err = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            cplx got{0.0, 0.0};
            for (std::size_t c = 0; c < d; ++c)
                got += result.mat()(r, c) * t.vector[c];
            const cplx want = (r == t.image_index) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            err = std::max(err, std::abs(got - want));
        }
        if (err > kUnitaryTol)
            throw validation_error("complete_unitary failed to map a target within 1e-10");
    }
    return result;
}

DensityMatrix conjugate_by(const UnitaryMatrix& u, const DensityMatrix& rho) {
    if (u.qubits() != rho.qubits())
        throw std::invalid_argument("conjugate_by dimension mismatch");
    const std::size_t d = rho.dim();
    Matrix out(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            const cplx z = rho.mat()(r, c);
            if (z == cplx{0.0, 0.0})
                continue;
            // out += z * u_col(r) u_col(c)†  where u_col(j) is U's column j.
            for (std::size_t i = 0; i < d; ++i) {
                const cplx uir = u.mat()(i, r);
                if (uir == cplx{0.0, 0.0})
                    continue;
                const cplx f = z * uir;
                for (std::size_t j = 0; j < d; ++j)
                    out(i, j) += f * std::conj(u.mat()(j, c));
            }
        }
    return DensityMatrix(rho.qubits(), std::move(out));
}

double fidelity_pure(const DensityMatrix& sigma, const StateVector& psi) {
    if (sigma.qubits() != 1 || psi.qubits() != 1)
        throw std::invalid_argument("fidelity_pure expects single-qubit arguments");
    if (std::abs(psi.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("fidelity_pure target state must be normalized");
    cplx v{0.0, 0.0};
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            v += std::conj(psi[r]) * sigma.mat()(r, c) * psi[c];
    return std::clamp(v.real(), 0.0, 1.0);
}

} // namespace qdel
