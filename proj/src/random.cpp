#include "dephcap/random.hpp"

#include <Eigen/QR>

#include <cmath>

namespace dephcap::rng {

namespace {

ComplexMatrix ginibre(Engine& eng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            g(i, j) = Complex{gauss(eng), gauss(eng)};
        }
    }
    return g;
}

} // namespace

DensityMatrix random_density(Engine& eng, Eigen::Index dim) {
    ComplexMatrix g = ginibre(eng, dim, dim);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(std::move(rho));
}

ProbVector random_distribution(Engine& eng, Eigen::Index len) {
    std::exponential_distribution<double> expo(1.0);
    RealVector p(len);
    for (Eigen::Index i = 0; i < len; ++i) p(i) = expo(eng);
    p /= p.sum();
    return ProbVector(std::move(p));
}

DensityMatrix random_diagonal_density(Engine& eng, Eigen::Index dim) {
    return DensityMatrix::diagonal(random_distribution(eng, dim));
}

ComplexMatrix random_unitary(Engine& eng, Eigen::Index dim) {
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(eng, dim, dim));
    ComplexMatrix q = qr.householderQ();
    return q;
}

std::vector<ComplexVector> random_environment_kets(Engine& eng, Eigen::Index count,
                                                   Eigen::Index env_dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<ComplexVector> kets;
    kets.reserve(count);
    for (Eigen::Index j = 0; j < count; ++j) {
        ComplexVector phi(env_dim);
        for (Eigen::Index a = 0; a < env_dim; ++a) {
            phi(a) = Complex{gauss(eng), gauss(eng)};
        }
        phi /= phi.norm();
        kets.push_back(std::move(phi));
    }
    return kets;
}

DephasingKrausFamily random_dephasing_family(Engine& eng, int n_qubits,
                                             Eigen::Index env_dim) {
    const auto dim = Eigen::Index{1} << n_qubits;
    const auto kets = random_environment_kets(eng, dim, env_dim);
    std::vector<ComplexVector> kraus;
    kraus.reserve(env_dim);
    for (Eigen::Index alpha = 0; alpha < env_dim; ++alpha) {
        ComplexVector diag(dim);
        for (Eigen::Index j = 0; j < dim; ++j) diag(j) = kets[j](alpha);
        kraus.push_back(std::move(diag));
    }
    return DephasingKrausFamily::from_kraus_diagonals(n_qubits, std::move(kraus));
}

} // namespace dephcap::rng
