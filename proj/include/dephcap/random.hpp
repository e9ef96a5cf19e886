// random.hpp — Seeded random states, unitaries, and dephasing families used
// by the property-verification suites.

#pragma once

#include "dephcap/channel.hpp"
#include "dephcap/types.hpp"

#include <random>
#include <vector>

namespace dephcap::rng {

using Engine = std::mt19937_64;

// Ginibre construction: G G^dagger normalized to unit trace.
DensityMatrix random_density(Engine& eng, Eigen::Index dim);

ProbVector random_distribution(Engine& eng, Eigen::Index len);

DensityMatrix random_diagonal_density(Engine& eng, Eigen::Index dim);

// QR of a complex Ginibre matrix.
ComplexMatrix random_unitary(Engine& eng, Eigen::Index dim);

// Haar-ish unit vectors in C^env_dim, one per basis configuration.
std::vector<ComplexVector> random_environment_kets(Engine& eng, Eigen::Index count,
                                                   Eigen::Index env_dim);

// Valid dephasing family from random environment kets: A_alpha(j) is the
// alpha-th amplitude of |phi_j>, so completeness holds by normalization.
DephasingKrausFamily random_dephasing_family(Engine& eng, int n_qubits,
                                             Eigen::Index env_dim);

} // namespace dephcap::rng
