// entropy.hpp — Entropies (base-2), trace/Kolmogorov distances, and the dense
// symmetric eigenvalue facility shared by all noise models.

#pragma once

#include "dephcap/types.hpp"

namespace dephcap {

// Binary Shannon entropy H(q) = -q log2 q - (1-q) log2(1-q), with the
// 0 log 0 = 0 convention. Throws std::domain_error outside [0, 1].
double binary_entropy(double q);

// -sum_i p_i log2 p_i.
double shannon_entropy(const ProbVector& p);

// Von Neumann entropy -Tr[rho log2 rho]. Eigenvalues in (-kTolClip, 0) are
// clipped to zero; anything below throws. The spectrum is renormalized only
// if its sum drifts from 1 by more than 1e-12.
double von_neumann_entropy(const DensityMatrix& rho);

// Same contract for a unit-trace real symmetric matrix (W matrices, Grams).
double von_neumann_entropy(const SymmetricMatrix& m);

// (1/2) sum of singular values of a - b. In [0, 1] for density matrices.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// (1/2) sum_i |p_i - q_i|.
double kolmogorov_distance(const ProbVector& p, const ProbVector& q);

// All eigenvalues of a dense real symmetric matrix (any order). Dim capped
// at 2^kMaxQubits. Throws std::runtime_error on solver non-convergence.
RealVector symmetric_eigenvalues(const SymmetricMatrix& m);

struct SymmetricEigensystem {
    RealVector values;
    RealMatrix vectors; // column i pairs with values(i)
};

SymmetricEigensystem symmetric_eigensystem(const SymmetricMatrix& m);

// Entropy of a unit-trace spectrum: clip, renormalize on drift, sum. Shared
// by the von Neumann overloads and the Hermitian W/Gram paths.
double entropy_of_eigenvalues(const RealVector& eigenvalues);

// Entropy of a unit-trace complex Hermitian matrix (Kraus-overlap W matrices
// and complex Grams; real input dispatches to the symmetric solver).
double hermitian_entropy(const ComplexMatrix& m);

} // namespace dephcap
