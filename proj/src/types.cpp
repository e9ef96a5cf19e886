#include "dephcap/types.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

namespace dephcap {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;

// Eager PSD eigenchecks are cheap only for small matrices; larger densities
// come from the provably-PSD factories or get caught at entropy time.
constexpr Eigen::Index kEagerPsdDim = 64;

} // namespace

// --------------------------- ProbVector --------------------------------------

ProbVector::ProbVector(RealVector entries) : p_(std::move(entries)) {
    if (p_.size() == 0) {
        throw std::invalid_argument("ProbVector: empty vector");
    }
    for (Eigen::Index i = 0; i < p_.size(); ++i) {
        if (!(p_(i) >= -kTolClip)) {
            throw std::invalid_argument(
                "ProbVector: entry " + std::to_string(i) + " = " +
                std::to_string(p_(i)) + " below -tol_clip");
        }
        if (p_(i) < 0.0) p_(i) = 0.0;
    }
    const double sum = p_.sum();
    if (std::abs(sum - 1.0) > 1e-6) {
        throw std::invalid_argument("ProbVector: entries sum to " +
                                    std::to_string(sum) + ", expected 1");
    }
    p_ /= sum;
}

ProbVector ProbVector::uniform(Eigen::Index len) {
    if (len <= 0) throw std::invalid_argument("ProbVector::uniform: len must be > 0");
    return ProbVector(RealVector::Constant(len, 1.0 / static_cast<double>(len)));
}

ProbVector ProbVector::point_mass(Eigen::Index len, Eigen::Index i) {
    if (len <= 0 || i < 0 || i >= len) {
        throw std::invalid_argument("ProbVector::point_mass: index out of range");
    }
    RealVector p = RealVector::Zero(len);
    p(i) = 1.0;
    return ProbVector(std::move(p));
}

// --------------------------- DensityMatrix -----------------------------------

DensityMatrix::DensityMatrix(ComplexMatrix m) : rho_(std::move(m)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
        throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
    }
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol) {
        throw std::invalid_argument("DensityMatrix: not Hermitian (deviation " +
                                    std::to_string(herm) + ")");
    }
    const Complex tr = rho_.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
        throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                    std::to_string(std::abs(tr - Complex{1.0, 0.0})));
    }
    if (rho_.rows() <= kEagerPsdDim) {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho_, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) {
            throw std::runtime_error("DensityMatrix: eigensolve failed");
        }
        if (es.eigenvalues().minCoeff() < -kTolClip) {
            throw std::invalid_argument("DensityMatrix: minimum eigenvalue " +
                                        std::to_string(es.eigenvalues().minCoeff()) +
                                        " below -tol_clip");
        }
    }
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    if (dim <= 0) throw std::invalid_argument("DensityMatrix::maximally_mixed: dim must be > 0");
    ComplexMatrix m = ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(std::move(m), unchecked_tag{});
}

DensityMatrix DensityMatrix::diagonal(const ProbVector& populations) {
    ComplexMatrix m = ComplexMatrix::Zero(populations.size(), populations.size());
    for (Eigen::Index i = 0; i < populations.size(); ++i) {
        m(i, i) = populations[i];
    }
    return DensityMatrix(std::move(m), unchecked_tag{});
}

DensityMatrix DensityMatrix::pure(const ComplexVector& ket) {
    const double norm = ket.norm();
    if (norm <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
    ComplexVector psi = ket / norm;
    return DensityMatrix(psi * psi.adjoint(), unchecked_tag{});
}

int DensityMatrix::n_qubits() const {
    const Eigen::Index d = dim();
    if ((d & (d - 1)) != 0) {
        throw std::logic_error("DensityMatrix: dimension is not a power of two");
    }
    int n = 0;
    for (Eigen::Index v = d; v > 1; v >>= 1) ++n;
    return n;
}

RealVector DensityMatrix::diagonal_populations() const {
    return rho_.diagonal().real();
}

ProbVector DensityMatrix::diagonal_probs() const {
    return ProbVector(diagonal_populations());
}

bool DensityMatrix::is_diagonal(double tol) const {
    for (Eigen::Index j = 0; j < rho_.rows(); ++j) {
        for (Eigen::Index l = 0; l < rho_.cols(); ++l) {
            if (j != l && std::abs(rho_(j, l)) > tol) return false;
        }
    }
    return true;
}

// --------------------------- SymmetricMatrix ---------------------------------

SymmetricMatrix::SymmetricMatrix(RealMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw std::invalid_argument("SymmetricMatrix: matrix must be square and nonempty");
    }
    const double dev = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
    if (dev > 1e-12) {
        throw std::invalid_argument("SymmetricMatrix: asymmetry " + std::to_string(dev));
    }
}

} // namespace dephcap
