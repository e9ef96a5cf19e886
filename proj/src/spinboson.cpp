#include "dephcap/spinboson.hpp"

#include "dephcap/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dephcap::spinboson {

namespace {

double checked_base_integral(double t, double tau_c, const IntegralSettings& s) {
    const double at = std::abs(t);
    return s.method == IntegralMethod::closed_form
               ? base_integral(at, tau_c)
               : base_integral_quadrature(at, tau_c, s.abs_tol);
}

// r(b) = integral domega/pi S (1-cos omega tau_p) cos(omega b) / omega^2,
// reduced to base integrals via
// (1-cos a) cos b = (1-cos(a+b))/2 + (1-cos(a-b))/2 - (1-cos b).
double pair_integral(double gap, const SpinBosonParams& p, const IntegralSettings& s) {
    return 0.5 * checked_base_integral(p.tau_p + gap, p.tau_c, s) +
           0.5 * checked_base_integral(p.tau_p - gap, p.tau_c, s) -
           checked_base_integral(gap, p.tau_c, s);
}

std::uint64_t cache_key(Config plus, Config minus) {
    // factor(d) = factor(-d): canonicalize the mask order.
    if (plus > minus) std::swap(plus, minus);
    return (static_cast<std::uint64_t>(plus) << 32) | minus;
}

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return c;
}

} // namespace

SpinBosonParams::SpinBosonParams(double lambda_, double tau_c_, double tau_p_, double tau_,
                                 int n_)
    : lambda(lambda_), tau_c(tau_c_), tau_p(tau_p_), tau(tau_), n(n_) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("SpinBosonParams: lambda must be positive and finite");
    }
    if (!(tau_c > 0.0) || !std::isfinite(tau_c)) {
        throw std::invalid_argument("SpinBosonParams: tau_c must be positive and finite");
    }
    if (!(tau_p > 0.0) || !std::isfinite(tau_p)) {
        throw std::invalid_argument("SpinBosonParams: tau_p must be positive and finite");
    }
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("SpinBosonParams: tau must be nonnegative and finite");
    }
    if (n < 1) {
        throw std::invalid_argument("SpinBosonParams: n must be positive");
    }
}

double SpinBosonParams::tau_for_xi(double xi, double tau_c) {
    if (!(xi > 0.0 && xi <= 1.0)) {
        throw std::invalid_argument("tau_for_xi: xi must lie in (0, 1]; xi -> 0 means "
                                    "infinite spacing (use the memoryless value)");
    }
    return tau_c * (1.0 - xi) / xi;
}

double lorentzian_spectrum(double omega, double tau_c) {
    if (omega < 0.0) throw std::domain_error("lorentzian_spectrum: omega must be >= 0");
    const double x = omega * tau_c;
    return 2.0 * tau_c / (1.0 + x * x);
}

double lorentzian_autocorrelation(double t, double tau_c) {
    return std::exp(-std::abs(t) / tau_c);
}

double base_integral(double t, double tau_c) {
    if (t < 0.0) throw std::domain_error("base_integral: t must be >= 0");
    return tau_c * (t + tau_c * std::expm1(-t / tau_c));
}

double base_integral_quadrature(double t, const SpectrumFn& spectrum, double omega_max,
                                const QuadratureOptions& opts) {
    if (t < 0.0) throw std::domain_error("base_integral_quadrature: t must be >= 0");
    if (t == 0.0) return 0.0;
    auto integrand = [&](double w) {
        const double s = std::sin(0.5 * w * t);
        return spectrum(w) * 2.0 * s * s / (M_PI * w * w);
    };
    return integrate_adaptive(integrand, 0.0, omega_max, opts);
}

double base_integral_quadrature(double t, double tau_c, double abs_tol) {
    // Integrand <= 4/(pi tau_c omega^4); cut where the tail drops below 1e-12.
    const double tail_target = std::min(1e-12, 0.1 * abs_tol);
    const double omega_max = std::cbrt(4.0 / (3.0 * M_PI * tau_c * tail_target));
    QuadratureOptions opts;
    opts.abs_tol = abs_tol;
    opts.max_frequency = t;
    opts.smooth_scale = 1.0 / tau_c;
    return base_integral_quadrature(
        t, [tau_c](double w) { return lorentzian_spectrum(w, tau_c); }, omega_max, opts);
}

double dephasing_factor_single(const SpinBosonParams& params, const IntegralSettings& settings) {
    const double f = checked_base_integral(params.tau_p, params.tau_c, settings);
    return std::exp(-params.lambda * params.lambda * f);
}

// --------------------------- DifferenceVector --------------------------------

DifferenceVector::DifferenceVector(const std::vector<int>& d)
    : n_(static_cast<int>(d.size())), plus_(0), minus_(0) {
    if (d.empty() || d.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("DifferenceVector: length outside 1.." +
                                    std::to_string(kMaxQubits));
    }
    for (int k = 0; k < n_; ++k) {
        if (d[k] == 1) {
            plus_ |= Config{1} << k;
        } else if (d[k] == -1) {
            minus_ |= Config{1} << k;
        } else if (d[k] != 0) {
            throw std::invalid_argument("DifferenceVector: entries must be -1, 0, or +1");
        }
    }
}

DifferenceVector DifferenceVector::between(Config j, Config l, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("DifferenceVector::between: bad qubit count");
    }
    const Config mask = config_dim(n_qubits) - 1;
    if (j > mask || l > mask) {
        throw std::invalid_argument("DifferenceVector::between: config out of range");
    }
    return DifferenceVector(n_qubits, j & ~l, l & ~j);
}

int DifferenceVector::operator[](int k) const {
    if (k < 0 || k >= n_) throw std::out_of_range("DifferenceVector: index out of range");
    const Config bit = Config{1} << k;
    if (plus_ & bit) return 1;
    if (minus_ & bit) return -1;
    return 0;
}

int DifferenceVector::net_weight() const {
    return std::popcount(plus_) - std::popcount(minus_);
}

// --------------------------- DecoherenceTable --------------------------------

DecoherenceTable::DecoherenceTable(const SpinBosonParams& params,
                                   const IntegralSettings& settings)
    : params_(params) {
    if (params_.n > kMaxQubits) {
        throw std::invalid_argument("DecoherenceTable: n exceeds " +
                                    std::to_string(kMaxQubits));
    }
    pair_integral_.resize(params_.n);
    for (int delta = 0; delta < params_.n; ++delta) {
        pair_integral_[delta] =
            pair_integral(static_cast<double>(delta) * params_.tau, params_, settings);
    }
}

double DecoherenceTable::quadratic_form(Config plus, Config minus) const {
    // sum_{k,m} d_k d_m r(|k-m| tau) over the nonzero entries of d.
    int idx[2 * kMaxQubits];
    int sgn[2 * kMaxQubits];
    int cnt = 0;
    for (int k = 0; k < params_.n; ++k) {
        const Config bit = Config{1} << k;
        if (plus & bit) {
            idx[cnt] = k;
            sgn[cnt++] = 1;
        } else if (minus & bit) {
            idx[cnt] = k;
            sgn[cnt++] = -1;
        }
    }
    double acc = 0.0;
    for (int a = 0; a < cnt; ++a) {
        acc += pair_integral_[0];
        for (int b = a + 1; b < cnt; ++b) {
            acc += 2.0 * sgn[a] * sgn[b] * pair_integral_[idx[b] - idx[a]];
        }
    }
    // The quadratic form is an integral of a nonnegative integrand; tiny
    // negative values are roundoff.
    return std::max(acc, 0.0);
}

double DecoherenceTable::factor(const DifferenceVector& d) const {
    if (d.size() != params_.n) {
        throw std::invalid_argument("DecoherenceTable::factor: length mismatch");
    }
    const std::uint64_t key = cache_key(d.plus_mask(), d.minus_mask());
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    const double value = std::exp(-params_.lambda * params_.lambda *
                                  quadratic_form(d.plus_mask(), d.minus_mask()));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(key, value);
    return value;
}

double DecoherenceTable::factor(Config j, Config l) const {
    return factor(DifferenceVector::between(j, l, params_.n));
}

RealMatrix DecoherenceTable::dense() const {
    const auto dim = static_cast<Eigen::Index>(config_dim(params_.n));
    RealMatrix d(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        d(j, j) = 1.0;
        for (Eigen::Index l = 0; l < j; ++l) {
            const double f = factor(static_cast<Config>(j), static_cast<Config>(l));
            d(j, l) = f;
            d(l, j) = f;
        }
    }
    return d;
}

double decoherence_factor(const SpinBosonParams& params, const DifferenceVector& d,
                          const IntegralSettings& settings) {
    return DecoherenceTable(params, settings).factor(d);
}

// --------------------------- Entropy exchange --------------------------------

RealMatrix exchange_gram(const SpinBosonParams& params, const ProbVector& q,
                         const IntegralSettings& settings) {
    const auto dim = static_cast<Eigen::Index>(config_dim(params.n));
    if (q.size() != dim) {
        throw std::invalid_argument("exchange_gram: state length " +
                                    std::to_string(q.size()) + ", expected " +
                                    std::to_string(dim));
    }
    const DecoherenceTable table(params, settings);
    RealVector root_q(dim);
    for (Eigen::Index j = 0; j < dim; ++j) root_q(j) = std::sqrt(q[j]);
    RealMatrix gram(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        gram(j, j) = q[j];
        for (Eigen::Index l = 0; l < j; ++l) {
            const double m = root_q(j) * root_q(l) *
                             table.factor(static_cast<Config>(j), static_cast<Config>(l));
            gram(j, l) = m;
            gram(l, j) = m;
        }
    }
    return gram;
}

double exchange_entropy(const SpinBosonParams& params, const ProbVector& q,
                        const IntegralSettings& settings) {
    return entropy_of_eigenvalues(
        symmetric_eigenvalues(SymmetricMatrix(exchange_gram(params, q, settings))));
}

double coherent_info_unpolarized(const SpinBosonParams& params,
                                 const IntegralSettings& settings) {
    const auto dim = static_cast<Eigen::Index>(config_dim(params.n));
    return static_cast<double>(params.n) -
           exchange_entropy(params, ProbVector::uniform(dim), settings);
}

// --------------------------- Balanced-subspace coding ------------------------

DfsAnalysis dfs_analysis(int n) {
    if (n < 1 || n > 62) {
        throw std::invalid_argument("dfs_analysis: n outside 1..62");
    }
    const std::uint64_t dim = binomial_u64(n, n / 2);
    return {dim, std::log2(static_cast<double>(dim)) / static_cast<double>(n)};
}

ProbVector dfs_input_state(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("dfs_input_state: n outside 1.." +
                                    std::to_string(kMaxQubits));
    }
    const auto dim = static_cast<Eigen::Index>(config_dim(n));
    const int weight = n / 2;
    RealVector q = RealVector::Zero(dim);
    const double w = 1.0 / static_cast<double>(binomial_u64(n, weight));
    for (Eigen::Index j = 0; j < dim; ++j) {
        if (std::popcount(static_cast<Config>(j)) == weight) q(j) = w;
    }
    return ProbVector(std::move(q));
}

double dfs_coherent_info(const SpinBosonParams& params, const IntegralSettings& settings) {
    const ProbVector q = dfs_input_state(params.n);
    // Diagonal inputs pass through unchanged, so S(output) = H(q).
    return shannon_entropy(q) - exchange_entropy(params, q, settings);
}

// --------------------------- Two-use forgetfulness ---------------------------

TwoUseResult two_use_forgetfulness(const SpinBosonParams& params, int idle_slots,
                                   const DensityMatrix& rho,
                                   const IntegralSettings& settings) {
    if (params.n != 1) {
        throw std::invalid_argument("two_use_forgetfulness: params must describe a "
                                    "single use (n = 1)");
    }
    if (idle_slots < 0) {
        throw std::invalid_argument("two_use_forgetfulness: negative idle count");
    }
    if (rho.dim() != 4) {
        throw std::invalid_argument("two_use_forgetfulness: expects a two-qubit state");
    }
    // The second carrier enters (L+1) tau after the first.
    const SpinBosonParams pair(params.lambda, params.tau_c, params.tau_p,
                               static_cast<double>(idle_slots + 1) * params.tau, 2);
    const DecoherenceTable exact(pair, settings);
    const double g = dephasing_factor_single(params, settings);

    ComplexMatrix out_exact(4, 4);
    ComplexMatrix out_memoryless(4, 4);
    for (Eigen::Index j = 0; j < 4; ++j) {
        for (Eigen::Index l = 0; l < 4; ++l) {
            const auto d = DifferenceVector::between(static_cast<Config>(j),
                                                     static_cast<Config>(l), 2);
            const int weight = std::popcount(d.plus_mask() | d.minus_mask());
            out_exact(j, l) = exact.factor(d) * rho.matrix()(j, l);
            out_memoryless(j, l) = std::pow(g, weight) * rho.matrix()(j, l);
        }
    }
    const double distance = trace_distance(DensityMatrix(std::move(out_exact)),
                                           DensityMatrix(std::move(out_memoryless)));
    const double lg = params.lambda * g;
    const double ramp = -std::expm1(-params.tau_p / params.tau_c);
    const double bound = 4.0 * lg * lg * params.tau_c * params.tau_c * ramp * ramp *
                         std::exp(-static_cast<double>(idle_slots) * params.tau / params.tau_c);
    return {distance, bound};
}

} // namespace dephcap::spinboson
