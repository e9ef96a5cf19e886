// types.hpp — Domain types shared by all models: probability vectors,
// density matrices, real symmetric matrices, basis-configuration indexing.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

namespace dephcap {

using Complex = std::complex<double>;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

// Basis configuration j = (j_1,...,j_N): bit k (0-based, least significant)
// holds j_{k+1}, so qubit 1 lives in the least significant bit.
using Config = std::uint32_t;

// Dense eigensolve ceiling: matrices up to 2^kMaxQubits x 2^kMaxQubits.
inline constexpr int kMaxQubits = 12;

// Eigenvalues above -kTolClip are clipped to zero; anything below is a
// genuine PSD violation. Gram matrices of near-parallel environment states
// are numerically rank-deficient, hence the clip.
inline constexpr double kTolClip = 1e-10;

inline constexpr Config config_dim(int n_qubits) {
    return Config{1} << n_qubits;
}

inline constexpr int config_bit(Config j, int k) {
    return static_cast<int>((j >> k) & 1u);
}

// --------------------------- ProbVector --------------------------------------

// Probability vector: nonnegative entries summing to one. Entries slightly
// below zero (>= -kTolClip) are clipped; the sum is renormalized exactly.
class ProbVector {
public:
    explicit ProbVector(RealVector entries);

    static ProbVector uniform(Eigen::Index len);
    static ProbVector point_mass(Eigen::Index len, Eigen::Index i);

    const RealVector& entries() const { return p_; }
    Eigen::Index size() const { return p_.size(); }
    double operator[](Eigen::Index i) const { return p_(i); }

private:
    RealVector p_;
};

// --------------------------- DensityMatrix -----------------------------------

// Complex Hermitian, unit trace, PSD within kTolClip. The PSD eigencheck is
// only run eagerly for dim <= 64; the provably-PSD factories skip it.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix maximally_mixed(Eigen::Index dim);
    static DensityMatrix diagonal(const ProbVector& populations);
    static DensityMatrix pure(const ComplexVector& ket);

    const ComplexMatrix& matrix() const { return rho_; }
    Eigen::Index dim() const { return rho_.rows(); }
    int n_qubits() const;

    RealVector diagonal_populations() const;
    ProbVector diagonal_probs() const;
    bool is_diagonal(double tol = 1e-14) const;

private:
    struct unchecked_tag {};
    DensityMatrix(ComplexMatrix m, unchecked_tag) : rho_(std::move(m)) {}

    ComplexMatrix rho_;
};

// --------------------------- SymmetricMatrix ---------------------------------

// Real symmetric matrix (entropy-exchange W matrices, spin-boson Grams).
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(RealMatrix m);

    const RealMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    double trace() const { return m_.trace(); }

private:
    RealMatrix m_;
};

} // namespace dephcap
