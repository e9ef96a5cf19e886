#include "dephcap/entropy.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

namespace dephcap {

namespace {

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

void check_eigensolve_dim(Eigen::Index dim) {
    if (dim > (Eigen::Index{1} << kMaxQubits)) {
        throw std::invalid_argument("eigensolve dimension " + std::to_string(dim) +
                                    " exceeds 2^" + std::to_string(kMaxQubits));
    }
}

} // namespace

double binary_entropy(double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::domain_error("binary_entropy: q = " + std::to_string(q) +
                                " outside [0, 1]");
    }
    return -xlog2x(q) - xlog2x(1.0 - q);
}

double shannon_entropy(const ProbVector& p) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) h -= xlog2x(p[i]);
    return h;
}

double entropy_of_eigenvalues(const RealVector& eigenvalues) {
    RealVector lam = eigenvalues;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam(i) < -kTolClip) {
            throw std::runtime_error("entropy: eigenvalue " + std::to_string(lam(i)) +
                                     " below -tol_clip (PSD violation)");
        }
        if (lam(i) < 0.0) lam(i) = 0.0;
    }
    const double sum = lam.sum();
    if (std::abs(sum - 1.0) > 1e-12) {
        if (sum <= 0.0) {
            throw std::runtime_error("entropy: spectrum sums to " + std::to_string(sum));
        }
        lam /= sum;
    }
    double h = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) h -= xlog2x(lam(i));
    return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    // Diagonal states dominate this library; skip the eigensolve for them.
    if (rho.is_diagonal()) {
        return entropy_of_eigenvalues(rho.diagonal_populations());
    }
    return hermitian_entropy(rho.matrix());
}

double von_neumann_entropy(const SymmetricMatrix& m) {
    if (std::abs(m.trace() - 1.0) > 1e-9) {
        throw std::invalid_argument("von_neumann_entropy: trace " +
                                    std::to_string(m.trace()) + " is not 1");
    }
    return entropy_of_eigenvalues(symmetric_eigenvalues(m));
}

double hermitian_entropy(const ComplexMatrix& m) {
    check_eigensolve_dim(m.rows());
    if (m.imag().cwiseAbs().maxCoeff() < 1e-14) {
        RealMatrix re = m.real();
        re = 0.5 * (re + re.transpose()).eval();
        return entropy_of_eigenvalues(symmetric_eigenvalues(SymmetricMatrix(std::move(re))));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_entropy: eigensolve failed to converge");
    }
    return entropy_of_eigenvalues(es.eigenvalues());
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    ComplexMatrix diff = a.matrix() - b.matrix();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(diff, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("trace_distance: eigensolve failed to converge");
    }
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double kolmogorov_distance(const ProbVector& p, const ProbVector& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("kolmogorov_distance: length mismatch");
    }
    return 0.5 * (p.entries() - q.entries()).cwiseAbs().sum();
}

RealVector symmetric_eigenvalues(const SymmetricMatrix& m) {
    check_eigensolve_dim(m.dim());
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(m.matrix(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("symmetric_eigenvalues: failed to converge");
    }
    return es.eigenvalues();
}

SymmetricEigensystem symmetric_eigensystem(const SymmetricMatrix& m) {
    check_eigensolve_dim(m.dim());
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(m.matrix());
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("symmetric_eigensystem: failed to converge");
    }
    return {es.eigenvalues(), es.eigenvectors()};
}

} // namespace dephcap
