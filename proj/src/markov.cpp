#include "dephcap/markov.hpp"

#include "dephcap/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dephcap::markov {

namespace {

constexpr int kMaxChainLength = 24;

double marginal(const MarkovParams& p, int symbol) {
    return symbol ? p.p_z : p.p0();
}

// p(i_k | i_{k-1}) = (1-mu) p(i_k) + mu delta
double transition(const MarkovParams& p, int prev, int cur) {
    return (1.0 - p.mu) * marginal(p, cur) + (prev == cur ? p.mu : 0.0);
}

// Stationary joint of an m-symbol chain segment encoded in the low m bits.
double chain_probability(const MarkovParams& p, Config bits, int m) {
    double prob = marginal(p, config_bit(bits, 0));
    for (int k = 1; k < m; ++k) {
        prob *= transition(p, config_bit(bits, k - 1), config_bit(bits, k));
    }
    return prob;
}

} // namespace

MarkovParams::MarkovParams(double p_z_, double mu_, int n_) : p_z(p_z_), mu(mu_), n(n_) {
    if (!(p_z >= 0.0 && p_z <= 1.0)) {
        throw std::invalid_argument("MarkovParams: p_z outside [0, 1]");
    }
    if (!(mu >= 0.0 && mu <= 1.0)) {
        throw std::invalid_argument("MarkovParams: mu outside [0, 1]");
    }
    if (n < 1) {
        throw std::invalid_argument("MarkovParams: n must be positive");
    }
}

double joint_probability(const MarkovParams& params, Config z_string) {
    if (z_string >= config_dim(params.n)) {
        throw std::invalid_argument("joint_probability: string longer than n uses");
    }
    return chain_probability(params, z_string, params.n);
}

double joint_probability(const MarkovParams& params, std::span<const int> string) {
    if (static_cast<int>(string.size()) != params.n) {
        throw std::invalid_argument("joint_probability: string length != n");
    }
    Config bits = 0;
    for (int k = 0; k < params.n; ++k) {
        if (string[k] != 0 && string[k] != 1) {
            throw std::invalid_argument("joint_probability: symbols must be 0 or 1");
        }
        bits |= static_cast<Config>(string[k]) << k;
    }
    return chain_probability(params, bits, params.n);
}

DephasingKrausFamily kraus_family(const MarkovParams& params) {
    if (params.n > kMaxQubits) {
        throw std::invalid_argument("kraus_family: n = " + std::to_string(params.n) +
                                    " exceeds " + std::to_string(kMaxQubits));
    }
    const Config dim = config_dim(params.n);
    std::vector<ComplexVector> kraus;
    kraus.reserve(dim);
    for (Config s = 0; s < dim; ++s) {
        const double w = std::sqrt(joint_probability(params, s));
        kraus.push_back(w * pauli_z_string_diagonal(params.n, s));
    }
    return DephasingKrausFamily::from_kraus_diagonals(params.n, std::move(kraus));
}

double entropy_exchange_closed(const MarkovParams& params) {
    const double per_use = params.p0() * binary_entropy(params.q0()) +
                           params.p_z * binary_entropy(params.qz());
    return static_cast<double>(params.n - 1) * per_use + binary_entropy(params.p0());
}

double q_n(const MarkovParams& params) {
    return static_cast<double>(params.n) - entropy_exchange_closed(params);
}

double capacity(const MarkovParams& params) {
    return 1.0 - params.p0() * binary_entropy(params.q0()) -
           params.p_z * binary_entropy(params.qz());
}

double epsilon_n(const MarkovParams& params) {
    return capacity(params) - q_n(params) / static_cast<double>(params.n);
}

ProbVector two_block_marginal(const MarkovParams& params, int idle_uses) {
    if (idle_uses < 0) {
        throw std::invalid_argument("two_block_marginal: negative idle count");
    }
    const int total = 2 * params.n + idle_uses;
    if (total > kMaxChainLength) {
        throw std::invalid_argument("two_block_marginal: 2n + L = " + std::to_string(total) +
                                    " exceeds enumeration cap " +
                                    std::to_string(kMaxChainLength));
    }
    const int n = params.n;
    const Config full_dim = Config{1} << total;
    RealVector marg = RealVector::Zero(Eigen::Index{1} << (2 * n));
    const Config block_mask = config_dim(n) - 1;
    for (Config chain = 0; chain < full_dim; ++chain) {
        const Config first = chain & block_mask;
        const Config second = (chain >> (n + idle_uses)) & block_mask;
        marg(static_cast<Eigen::Index>(first | (second << n))) +=
            chain_probability(params, chain, total);
    }
    return ProbVector(std::move(marg));
}

ProbVector factorized_two_block(const MarkovParams& params) {
    const int n = params.n;
    const Config dim = config_dim(n);
    RealVector p = RealVector::Zero(Eigen::Index{1} << (2 * n));
    for (Config first = 0; first < dim; ++first) {
        const double p1 = joint_probability(params, first);
        for (Config second = 0; second < dim; ++second) {
            p(static_cast<Eigen::Index>(first | (second << n))) =
                p1 * joint_probability(params, second);
        }
    }
    return ProbVector(std::move(p));
}

ForgetfulnessResult forgetfulness_check(const MarkovParams& params, int idle_uses) {
    const ProbVector exact = two_block_marginal(params, idle_uses);
    const ProbVector factorized = factorized_two_block(params);
    const double distance = kolmogorov_distance(exact, factorized);
    const double bound = 2.0 * std::pow(params.mu, idle_uses + 1);
    return {distance, bound};
}

} // namespace dephcap::markov
