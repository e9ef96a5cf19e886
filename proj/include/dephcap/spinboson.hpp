// spinboson.hpp — Bosonic-bath dephasing: Lorentzian spectral integrals,
// pairwise decoherence factors, Gram-matrix entropy exchange, coherent
// information of the unpolarized input, balanced-subspace coding, and the
// two-use trace-distance forgetfulness check.

#pragma once

#include "dephcap/quadrature.hpp"
#include "dephcap/types.hpp"

#include <cstdint>
#include <functional>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace dephcap::spinboson {

// Coupling lambda (1/time), bath correlation time tau_c, transit time tau_p
// per carrier, spacing tau between consecutive carriers, n carriers. The
// memory degree is xi = tau_c / (tau + tau_c).
struct SpinBosonParams {
    double lambda;
    double tau_c;
    double tau_p;
    double tau;
    int n;

    SpinBosonParams(double lambda, double tau_c, double tau_p, double tau, int n);

    double xi() const { return tau_c / (tau + tau_c); }
    // xi in (0, 1]; xi = 1 maps to tau = 0, xi -> 0 diverges.
    static double tau_for_xi(double xi, double tau_c);
};

// S(omega) = 2 tau_c / (1 + (omega tau_c)^2).
double lorentzian_spectrum(double omega, double tau_c);

// C(t) = e^{-t/tau_c}, the bath autocorrelation matching the Lorentzian.
double lorentzian_autocorrelation(double t, double tau_c);

// F(t) = integral_0^inf domega/pi S(omega) (1 - cos omega t)/omega^2 for the
// Lorentzian spectrum, closed form tau_c [t - tau_c(1 - e^{-t/tau_c})].
// Verified against base_integral_quadrature by the test suite.
double base_integral(double t, double tau_c);

// Same integral by adaptive quadrature on [0, Omega], Omega chosen so the
// C/omega^4 tail bound contributes below 1e-12.
double base_integral_quadrature(double t, double tau_c, double abs_tol = 1e-10);

// Pluggable-spectrum variant; the caller supplies the cutoff.
using SpectrumFn = std::function<double(double)>;
double base_integral_quadrature(double t, const SpectrumFn& spectrum, double omega_max,
                                const QuadratureOptions& opts);

enum class IntegralMethod { closed_form, quadrature };

struct IntegralSettings {
    IntegralMethod method = IntegralMethod::closed_form;
    double abs_tol = 1e-10; // quadrature only
};

// Single-use dephasing factor g = exp(-lambda^2 F(tau_p)).
double dephasing_factor_single(const SpinBosonParams& params,
                               const IntegralSettings& settings = {});

// d_k = j_k - l_k in {-1, 0, +1} for a pair of basis configurations.
class DifferenceVector {
public:
    explicit DifferenceVector(const std::vector<int>& d);
    static DifferenceVector between(Config j, Config l, int n_qubits);

    int size() const { return n_; }
    int operator[](int k) const;
    int net_weight() const; // sum_k d_k; zero on the balanced subspace
    Config plus_mask() const { return plus_; }
    Config minus_mask() const { return minus_; }

private:
    DifferenceVector(int n, Config plus, Config minus) : n_(n), plus_(plus), minus_(minus) {}
    int n_;
    Config plus_;
    Config minus_;
};

// Pairwise decoherence factors D(j,l) = exp[-lambda^2 sum_{k,m} d_k d_m
// r(|k-m| tau)] with r built from three base-integral evaluations. Factors
// depend on (j,l) only through d, so the cache is keyed by difference
// vector (at most 3^N entries, filled lazily, safe under concurrent reads).
class DecoherenceTable {
public:
    explicit DecoherenceTable(const SpinBosonParams& params,
                              const IntegralSettings& settings = {});

    const SpinBosonParams& params() const { return params_; }

    double factor(const DifferenceVector& d) const;
    double factor(Config j, Config l) const;

    RealMatrix dense() const; // 2^n x 2^n, symmetric, unit diagonal

private:
    double quadratic_form(Config plus, Config minus) const;

    SpinBosonParams params_;
    std::vector<double> pair_integral_; // r(Delta tau), Delta = 0..n-1
    mutable std::unordered_map<std::uint64_t, double> cache_;
    mutable std::mutex cache_mutex_;
};

// Convenience one-shot evaluation of a single factor.
double decoherence_factor(const SpinBosonParams& params, const DifferenceVector& d,
                          const IntegralSettings& settings = {});

// Gram matrix M_{jl} = sqrt(q_j q_l) D(j,l): symmetric PSD, unit trace, same
// nonzero spectrum as the conditional environment state.
RealMatrix exchange_gram(const SpinBosonParams& params, const ProbVector& q,
                         const IntegralSettings& settings = {});

// Entropy exchange for a diagonal input: S of the Gram matrix.
double exchange_entropy(const SpinBosonParams& params, const ProbVector& q,
                        const IntegralSettings& settings = {});

// I_c of the maximally mixed input: N - exchange_entropy(uniform).
double coherent_info_unpolarized(const SpinBosonParams& params,
                                 const IntegralSettings& settings = {});

struct DfsAnalysis {
    std::uint64_t dimension; // C(n, floor(n/2))
    double rate;             // log2(dimension) / n
};

// Balanced-configuration subspace: dimension and rate. Odd n uses the
// largest Hamming-weight class, C(n, floor(n/2)).
DfsAnalysis dfs_analysis(int n);

// Uniform diagonal state over the balanced configurations.
ProbVector dfs_input_state(int n);

// I_c for the balanced-subspace input; equals log2 C(n, floor(n/2)) exactly
// at tau = 0.
double dfs_coherent_info(const SpinBosonParams& params,
                         const IntegralSettings& settings = {});

struct TwoUseResult {
    double distance; // trace distance, exact 4x4 computation
    double bound;    // 4 lambda^2 g^2 tau_c^2 (1 - e^{-tau_p/tau_c})^2 e^{-L tau/tau_c}
    bool holds() const { return bound > 1.0 || distance <= bound; }
};

// Two single-qubit uses (params.n == 1) separated by idle_slots idle slots:
// trace distance between the exact two-use output (cross-correlation kept,
// carrier gap (L+1) tau) and the factorized memoryless output.
TwoUseResult two_use_forgetfulness(const SpinBosonParams& params, int idle_slots,
                                   const DensityMatrix& rho,
                                   const IntegralSettings& settings = {});

} // namespace dephcap::spinboson
