// markov.hpp — Markov-chain dephasing noise: stationary joint probabilities,
// closed-form Q_N, capacity, convergence gap, and the forgetfulness check.

#pragma once

#include "dephcap/channel.hpp"
#include "dephcap/types.hpp"

#include <span>

namespace dephcap::markov {

// Stationary chain over {sigma_0, sigma_z} with marginals (p_0, p_z) and
// memory factor mu: staying with the previous operator has probability
// q_{0,z} = (1-mu) p_{0,z} + mu.
struct MarkovParams {
    double p_z;
    double mu;
    int n;

    MarkovParams(double p_z, double mu, int n);

    double p0() const { return 1.0 - p_z; }
    double q0() const { return (1.0 - mu) * p0() + mu; }
    double qz() const { return (1.0 - mu) * p_z + mu; }
};

// Probability of the operator string i_1...i_n; bit k of z_string (0-based,
// least significant = use 1) set means sigma_z on use k+1.
double joint_probability(const MarkovParams& params, Config z_string);

// Same, for an explicit sequence with entries 0 (identity) or 1 (sigma_z).
double joint_probability(const MarkovParams& params, std::span<const int> string);

// Kraus operators sqrt(p_{i_1...i_n}) sigma_{i_1} x ... x sigma_{i_n}, one per
// operator string. Throws when n exceeds kMaxQubits.
DephasingKrausFamily kraus_family(const MarkovParams& params);

// (S_e)_N = (N-1)[p0 H(q0) + pz H(qz)] + H(p0); entropy exchange of the
// maximally mixed input.
double entropy_exchange_closed(const MarkovParams& params);

// Q_N = N - (S_e)_N.
double q_n(const MarkovParams& params);

// Q = 1 - p0 H(q0) - pz H(qz), the N -> infinity limit of Q_N/N.
double capacity(const MarkovParams& params);

// epsilon_N = Q - Q_N/N >= 0; the convergence gap.
double epsilon_n(const MarkovParams& params);

struct ForgetfulnessResult {
    double distance; // Kolmogorov distance, exact by enumeration
    double bound;    // 2 mu^(L+1)
};

// Two blocks of n uses separated by idle_uses idle slots: Kolmogorov distance
// between the exact marginal joint (idle indices summed out of the full
// (2n+L)-length chain) and the factorized block product. Requires
// 2n + idle_uses <= 24 for exhaustive enumeration.
ForgetfulnessResult forgetfulness_check(const MarkovParams& params, int idle_uses);

// Marginal distribution of the two coding blocks, exposed for oracle tests.
ProbVector two_block_marginal(const MarkovParams& params, int idle_uses);
ProbVector factorized_two_block(const MarkovParams& params);

} // namespace dephcap::markov
