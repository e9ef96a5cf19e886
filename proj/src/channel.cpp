#include "dephcap/channel.hpp"

#include "dephcap/entropy.hpp"

#include <Eigen/Eigenvalues>

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace dephcap {

namespace {

constexpr double kCompletenessTol = 1e-12;

// PSD validation of a supplied table is an eigensolve; only worth it while
// the table is small. Larger tables are validated downstream by the Gram
// entropy clip.
constexpr Eigen::Index kEagerTablePsdDim = 64;

void check_dims(const DephasingKrausFamily& k, const DensityMatrix& rho) {
    if (rho.dim() != k.dim()) {
        throw std::invalid_argument("channel/state dimension mismatch: " +
                                    std::to_string(k.dim()) + " vs " +
                                    std::to_string(rho.dim()));
    }
}

void check_qubit_index(const DensityMatrix& rho, int k) {
    const int n = rho.n_qubits();
    if (k < 1 || k > n) {
        throw std::out_of_range("twirl: qubit index " + std::to_string(k) +
                                " outside 1.." + std::to_string(n));
    }
}

} // namespace

DephasingKrausFamily DephasingKrausFamily::from_kraus_diagonals(
    int n_qubits, std::vector<ComplexVector> kraus) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("DephasingKrausFamily: n_qubits outside 1.." +
                                    std::to_string(kMaxQubits));
    }
    if (kraus.empty()) {
        throw std::invalid_argument("DephasingKrausFamily: empty Kraus family");
    }
    const auto dim = Eigen::Index{1} << n_qubits;
    RealVector completeness = RealVector::Zero(dim);
    for (const auto& a : kraus) {
        if (a.size() != dim) {
            throw std::invalid_argument("DephasingKrausFamily: Kraus diagonal length " +
                                        std::to_string(a.size()) + ", expected " +
                                        std::to_string(dim));
        }
        completeness += a.cwiseAbs2();
    }
    const double dev = (completeness.array() - 1.0).abs().maxCoeff();
    if (dev > kCompletenessTol) {
        throw std::invalid_argument(
            "DephasingKrausFamily: completeness violated by " + std::to_string(dev));
    }
    DephasingKrausFamily f;
    f.n_qubits_ = n_qubits;
    f.kraus_ = std::move(kraus);
    return f;
}

DephasingKrausFamily DephasingKrausFamily::from_decoherence_table(int n_qubits,
                                                                  ComplexMatrix dtable) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("DephasingKrausFamily: n_qubits outside 1.." +
                                    std::to_string(kMaxQubits));
    }
    const auto dim = Eigen::Index{1} << n_qubits;
    if (dtable.rows() != dim || dtable.cols() != dim) {
        throw std::invalid_argument("DephasingKrausFamily: table must be " +
                                    std::to_string(dim) + "x" + std::to_string(dim));
    }
    if ((dtable - dtable.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("DephasingKrausFamily: table not Hermitian");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
        if (std::abs(dtable(j, j) - Complex{1.0, 0.0}) > kCompletenessTol) {
            throw std::invalid_argument(
                "DephasingKrausFamily: D(j,j) != 1 at j = " + std::to_string(j));
        }
    }
    if (dtable.cwiseAbs().maxCoeff() > 1.0 + 1e-12) {
        throw std::invalid_argument("DephasingKrausFamily: |D(j,l)| > 1");
    }
    if (dim <= kEagerTablePsdDim) {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(dtable, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) {
            throw std::runtime_error("DephasingKrausFamily: table eigensolve failed");
        }
        if (es.eigenvalues().minCoeff() < -1e-10) {
            throw std::invalid_argument("DephasingKrausFamily: table is not PSD");
        }
    }
    DephasingKrausFamily f;
    f.n_qubits_ = n_qubits;
    f.dtable_ = std::make_shared<const ComplexMatrix>(std::move(dtable));
    return f;
}

DephasingKrausFamily DephasingKrausFamily::identity(int n_qubits) {
    const auto dim = Eigen::Index{1} << n_qubits;
    std::vector<ComplexVector> kraus;
    kraus.push_back(ComplexVector::Ones(dim));
    return from_kraus_diagonals(n_qubits, std::move(kraus));
}

const std::vector<ComplexVector>& DephasingKrausFamily::kraus_diagonals() const {
    if (!has_kraus()) {
        throw std::logic_error("DephasingKrausFamily: no Kraus-explicit representation");
    }
    return kraus_;
}

const ComplexMatrix& DephasingKrausFamily::decoherence_table() const {
    std::lock_guard<std::mutex> lock(*dtable_mutex_);
    if (!dtable_) {
        const auto dim = this->dim();
        ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
        for (const auto& a : kraus_) {
            d.noalias() += a * a.adjoint();
        }
        dtable_ = std::make_shared<const ComplexMatrix>(std::move(d));
    }
    return *dtable_;
}

DensityMatrix apply_channel(const DephasingKrausFamily& k, const DensityMatrix& rho) {
    check_dims(k, rho);
    return DensityMatrix(k.decoherence_table().cwiseProduct(rho.matrix()));
}

double conjugate_channel_entropy(const DephasingKrausFamily& k, const DensityMatrix& rho) {
    check_dims(k, rho);
    if (k.has_kraus()) {
        // W_{ab} = Tr(A_a rho A_b^dagger) = sum_j A_a(j) rho_{jj} conj(A_b(j))
        const auto& kraus = k.kraus_diagonals();
        const auto n_kraus = static_cast<Eigen::Index>(kraus.size());
        const RealVector q = rho.diagonal_populations();
        ComplexMatrix w(n_kraus, n_kraus);
        for (Eigen::Index a = 0; a < n_kraus; ++a) {
            for (Eigen::Index b = 0; b <= a; ++b) {
                Complex acc{0.0, 0.0};
                for (Eigen::Index j = 0; j < q.size(); ++j) {
                    acc += kraus[a](j) * q(j) * std::conj(kraus[b](j));
                }
                w(a, b) = acc;
                w(b, a) = std::conj(acc);
            }
        }
        return hermitian_entropy(w);
    }
    // M_{jl} = sqrt(q_j q_l) D(l,j): same nonzero spectrum as
    // w = sum_j q_j |phi_j><phi_j|.
    const auto& d = k.decoherence_table();
    const RealVector q = rho.diagonal_populations();
    RealVector root_q = q.cwiseMax(0.0).cwiseSqrt();
    ComplexMatrix gram(q.size(), q.size());
    for (Eigen::Index j = 0; j < q.size(); ++j) {
        for (Eigen::Index l = 0; l < q.size(); ++l) {
            gram(j, l) = root_q(j) * root_q(l) * d(l, j);
        }
    }
    return hermitian_entropy(gram);
}

ChannelOutput coherent_information(const DephasingKrausFamily& k, const DensityMatrix& rho) {
    DensityMatrix out = apply_channel(k, rho);
    const double s_out = von_neumann_entropy(out);
    const double s_e = conjugate_channel_entropy(k, rho);
    return {std::move(out), s_e, s_out - s_e};
}

DensityMatrix z_twirl_step(const DensityMatrix& rho, int k) {
    check_qubit_index(rho, k);
    const Config mask = Config{1} << (k - 1);
    ComplexMatrix m = rho.matrix();
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        for (Eigen::Index l = 0; l < m.cols(); ++l) {
            // (Sz rho Sz)_{jl} = (-1)^{j_k + l_k} rho_{jl}
            if (((static_cast<Config>(j) ^ static_cast<Config>(l)) & mask) != 0) {
                m(j, l) = Complex{0.0, 0.0};
            }
        }
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix x_twirl_step(const DensityMatrix& rho, int k) {
    check_qubit_index(rho, k);
    const Config mask = Config{1} << (k - 1);
    const auto& r = rho.matrix();
    ComplexMatrix m(r.rows(), r.cols());
    for (Eigen::Index j = 0; j < r.rows(); ++j) {
        for (Eigen::Index l = 0; l < r.cols(); ++l) {
            const auto jf = static_cast<Eigen::Index>(static_cast<Config>(j) ^ mask);
            const auto lf = static_cast<Eigen::Index>(static_cast<Config>(l) ^ mask);
            m(j, l) = 0.5 * (r(j, l) + r(jf, lf));
        }
    }
    return DensityMatrix(std::move(m));
}

ComplexVector pauli_z_string_diagonal(int n_qubits, Config z_mask) {
    const auto dim = Eigen::Index{1} << n_qubits;
    if (z_mask >= static_cast<Config>(dim)) {
        throw std::invalid_argument("pauli_z_string_diagonal: mask out of range");
    }
    ComplexVector diag(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const int parity = std::popcount(z_mask & static_cast<Config>(j)) & 1;
        diag(j) = parity ? -1.0 : 1.0;
    }
    return diag;
}

} // namespace dephcap
