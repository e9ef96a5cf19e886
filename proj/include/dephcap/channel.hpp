// channel.hpp — Generic N-qubit dephasing channel: diagonal Kraus families,
// pairwise decoherence tables, conjugate-channel entropy, coherent
// information, and the local sigma_z / sigma_x twirling steps.

#pragma once

#include "dephcap/types.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace dephcap {

// A dephasing channel in either of two equivalent representations:
//  - Kraus-explicit: each Kraus operator is diagonal in the reference basis,
//    stored as its diagonal A_alpha over the 2^N configurations;
//  - decoherence table: D(j,l) = sum_alpha A_alpha(j) conj(A_alpha(l)), the
//    pairwise attenuation of coherences, 2^N x 2^N regardless of Kraus count.
class DephasingKrausFamily {
public:
    static DephasingKrausFamily from_kraus_diagonals(int n_qubits,
                                                     std::vector<ComplexVector> kraus);
    static DephasingKrausFamily from_decoherence_table(int n_qubits, ComplexMatrix dtable);
    static DephasingKrausFamily identity(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return Eigen::Index{1} << n_qubits_; }

    bool has_kraus() const { return !kraus_.empty(); }
    const std::vector<ComplexVector>& kraus_diagonals() const;

    // Lazily computed from the Kraus diagonals when not supplied; cached.
    const ComplexMatrix& decoherence_table() const;

private:
    DephasingKrausFamily() = default;

    int n_qubits_ = 0;
    std::vector<ComplexVector> kraus_;
    mutable std::shared_ptr<const ComplexMatrix> dtable_;
    mutable std::shared_ptr<std::mutex> dtable_mutex_ = std::make_shared<std::mutex>();
};

struct ChannelOutput {
    DensityMatrix rho_out;
    double entropy_exchange;     // bits
    double coherent_information; // bits
};

// rho'_{jl} = D(j,l) rho_{jl}; populations are preserved.
DensityMatrix apply_channel(const DephasingKrausFamily& k, const DensityMatrix& rho);

// Entropy exchange S_e = S(w) of the conditional environment state. The
// Kraus-explicit route diagonalizes W_{ab} = Tr(A_a rho A_b^dagger); the
// table route diagonalizes the Gram M_{jl} = sqrt(q_j q_l) D(l,j) built from
// the populations q = diag(rho), which is all w depends on.
double conjugate_channel_entropy(const DephasingKrausFamily& k, const DensityMatrix& rho);

// I_c = S[E(rho)] - S_e(rho), plus both ingredients.
ChannelOutput coherent_information(const DephasingKrausFamily& k, const DensityMatrix& rho);

// One twirl step (rho + P rho P)/2 with P acting on qubit k (1-based; qubit 1
// is the least significant bit). The full z sweep extracts the diagonal part;
// the full x sweep of a diagonal state yields the maximally mixed state.
DensityMatrix z_twirl_step(const DensityMatrix& rho, int k);
DensityMatrix x_twirl_step(const DensityMatrix& rho, int k);

// Diagonal of sigma_{i_1} x ... x sigma_{i_N} with i_k in {0, z}: entry j is
// (-1)^popcount(z_mask & j). Bit k of z_mask selects sigma_z on qubit k+1.
ComplexVector pauli_z_string_diagonal(int n_qubits, Config z_mask);

} // namespace dephcap
