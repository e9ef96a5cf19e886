#include "dephcap/channel.hpp"
#include "dephcap/entropy.hpp"
#include "dephcap/markov.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

using namespace dephcap;
using markov::MarkovParams;

namespace {

// Oracle for the two-block marginal: the idle uses collapse analytically to
// an (L+1)-step transition T^m(i|i') = p_i + mu^m (delta - p_i).
double two_block_oracle_entry(const MarkovParams& p, Config blocks, int idle) {
    const int n = p.n;
    const auto sym = [&](int pos) { return config_bit(blocks, pos); };
    const auto marginal = [&](int s) { return s ? p.p_z : p.p0(); };
    const auto step = [&](int prev, int cur) {
        return (1.0 - p.mu) * marginal(cur) + (prev == cur ? p.mu : 0.0);
    };
    double prob = marginal(sym(0));
    for (int k = 1; k < n; ++k) prob *= step(sym(k - 1), sym(k));
    const double hop = std::pow(p.mu, idle + 1);
    const int bridge_from = sym(n - 1);
    const int bridge_to = sym(n);
    prob *= marginal(bridge_to) + hop * ((bridge_from == bridge_to ? 1.0 : 0.0) -
                                         marginal(bridge_to));
    for (int k = n + 1; k < 2 * n; ++k) prob *= step(sym(k - 1), sym(k));
    return prob;
}

} // namespace

TEST_CASE("joint probability: marginals, memoryless factorization, perfect memory") {
    const MarkovParams p1(0.15, 0.3, 1);
    CHECK(markov::joint_probability(p1, Config{0}) == doctest::Approx(0.85).epsilon(1e-15));
    CHECK(markov::joint_probability(p1, Config{1}) == doctest::Approx(0.15).epsilon(1e-15));

    const MarkovParams memoryless(0.15, 0.0, 3);
    for (Config s = 0; s < 8; ++s) {
        double product = 1.0;
        for (int k = 0; k < 3; ++k) product *= config_bit(s, k) ? 0.15 : 0.85;
        CHECK(markov::joint_probability(memoryless, s) ==
              doctest::Approx(product).epsilon(1e-14));
    }

    const MarkovParams perfect(0.15, 1.0, 2);
    CHECK(markov::joint_probability(perfect, Config{0b01}) == 0.0);
    CHECK(markov::joint_probability(perfect, Config{0b10}) == 0.0);
    CHECK(markov::joint_probability(perfect, Config{0b00}) ==
          doctest::Approx(0.85).epsilon(1e-15));

    const std::array<int, 2> seq{0, 1};
    CHECK(markov::joint_probability(MarkovParams(0.15, 0.5, 2), std::span<const int>(seq)) ==
          doctest::Approx(0.85 * 0.075).epsilon(1e-14));
}

TEST_CASE("joint probabilities sum to one and the chain is reversible") {
    for (double mu : {0.0, 0.3, 0.7, 1.0}) {
        const MarkovParams p(0.15, mu, 4);
        double sum = 0.0;
        for (Config s = 0; s < 16; ++s) sum += markov::joint_probability(p, s);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
    }
    // Stationarity makes the two-use joint symmetric: p(0,z) = p(z,0).
    const MarkovParams p(0.15, 0.5, 2);
    CHECK(markov::joint_probability(p, Config{0b01}) ==
          doctest::Approx(markov::joint_probability(p, Config{0b10})).epsilon(1e-14));
}

TEST_CASE("N=2 joint weights, evaluated by hand from the propagator") {
    // p0 = 0.85, mu = 0.5: q0 = 0.925, qz = 0.575; staying weights use the
    // conditional of the current symbol, leaving weights its complement.
    const MarkovParams p(0.15, 0.5, 2);
    CHECK(markov::joint_probability(p, Config{0b00}) ==
          doctest::Approx(0.85 * 0.925).epsilon(1e-14));
    CHECK(markov::joint_probability(p, Config{0b10}) ==
          doctest::Approx(0.85 * 0.075).epsilon(1e-14)); // 0 then z
    CHECK(markov::joint_probability(p, Config{0b01}) ==
          doctest::Approx(0.15 * 0.425).epsilon(1e-14)); // z then 0
    CHECK(markov::joint_probability(p, Config{0b11}) ==
          doctest::Approx(0.15 * 0.575).epsilon(1e-14));
}

TEST_CASE("kraus family: single use reduces to the {I, sigma_z} pair") {
    const auto family = markov::kraus_family(MarkovParams(0.15, 0.4, 1));
    REQUIRE(family.has_kraus());
    REQUIRE(family.kraus_diagonals().size() == 2);
    const auto& a0 = family.kraus_diagonals()[0];
    const auto& az = family.kraus_diagonals()[1];
    CHECK(std::real(a0(0)) == doctest::Approx(std::sqrt(0.85)).epsilon(1e-15));
    CHECK(std::real(a0(1)) == doctest::Approx(std::sqrt(0.85)).epsilon(1e-15));
    CHECK(std::real(az(0)) == doctest::Approx(std::sqrt(0.15)).epsilon(1e-15));
    CHECK(std::real(az(1)) == doctest::Approx(-std::sqrt(0.15)).epsilon(1e-15));
}

TEST_CASE("kraus family: perfect memory keeps only the aligned strings") {
    const auto family = markov::kraus_family(MarkovParams(0.15, 1.0, 2));
    const auto& k = family.kraus_diagonals();
    REQUIRE(k.size() == 4);
    CHECK(k[0b00].norm() > 0.0);
    CHECK(k[0b01].norm() == 0.0);
    CHECK(k[0b10].norm() == 0.0);
    CHECK(k[0b11].norm() > 0.0);
}

TEST_CASE("kraus family size cap") {
    CHECK_THROWS_AS((void)markov::kraus_family(MarkovParams(0.15, 0.0, 13)),
                    std::invalid_argument);
}

TEST_CASE("entropy exchange closed form: base cases and brute-force oracle") {
    CHECK(markov::entropy_exchange_closed(MarkovParams(0.15, 0.7, 1)) ==
          doctest::Approx(binary_entropy(0.85)).epsilon(1e-14));
    for (int n : {1, 3, 7}) {
        CHECK(markov::entropy_exchange_closed(MarkovParams(0.15, 0.0, n)) ==
              doctest::Approx(n * binary_entropy(0.85)).epsilon(1e-12));
    }
    // N=4, mu=0.3: Shannon entropy of all 16 enumerated joint probabilities.
    const MarkovParams p(0.15, 0.3, 4);
    RealVector joint(16);
    for (Config s = 0; s < 16; ++s) {
        joint(static_cast<Eigen::Index>(s)) = markov::joint_probability(p, s);
    }
    CHECK(markov::entropy_exchange_closed(p) ==
          doctest::Approx(shannon_entropy(ProbVector(joint))).epsilon(1e-12));
}

TEST_CASE("closed form matches brute force across the parameter grid") {
    for (double p0 : {0.6, 0.85}) {
        for (double mu : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            for (int n = 1; n <= 8; ++n) {
                const MarkovParams p(1.0 - p0, mu, n);
                RealVector joint(Eigen::Index{1} << n);
                for (Config s = 0; s < config_dim(n); ++s) {
                    joint(static_cast<Eigen::Index>(s)) = markov::joint_probability(p, s);
                }
                CHECK(std::abs(markov::entropy_exchange_closed(p) -
                               shannon_entropy(ProbVector(joint))) < 1e-9);
            }
        }
    }
}

TEST_CASE("Q_N: base cases and the perfect-memory line") {
    CHECK(markov::q_n(MarkovParams(0.15, 0.6, 1)) ==
          doctest::Approx(1.0 - binary_entropy(0.85)).epsilon(1e-12));
    for (int n : {1, 2, 10}) {
        CHECK(markov::q_n(MarkovParams(0.15, 1.0, n)) ==
              doctest::Approx(n - binary_entropy(0.85)).epsilon(1e-12));
    }
}

TEST_CASE("capacity: memoryless, perfect memory, and noiseless limits") {
    CHECK(markov::capacity(MarkovParams(0.15, 0.0, 1)) ==
          doctest::Approx(1.0 - binary_entropy(0.85)).epsilon(1e-12));
    CHECK(std::abs(markov::capacity(MarkovParams(0.15, 0.0, 1)) - 0.39015) < 1e-4);
    CHECK(markov::capacity(MarkovParams(0.15, 1.0, 1)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(markov::capacity(MarkovParams(0.0, 0.37, 1)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("epsilon_N: limits and the small-mu quadratic law") {
    for (int n : {1, 5, 20}) {
        CHECK(markov::epsilon_n(MarkovParams(0.15, 0.0, n)) ==
              doctest::Approx(0.0).epsilon(1e-14));
        CHECK(markov::epsilon_n(MarkovParams(0.15, 1.0, n)) ==
              doctest::Approx(binary_entropy(0.85) / n).epsilon(1e-12));
    }
    const double mu = 0.05;
    const double law = mu * mu / (2.0 * std::log(2.0) * 10.0);
    const double eps = markov::epsilon_n(MarkovParams(0.15, mu, 10));
    CHECK(std::abs(eps - law) / eps < 0.2);
}

TEST_CASE("forgetfulness: zero memory factorizes exactly") {
    for (int n : {1, 2}) {
        for (int idle : {0, 2}) {
            const auto r = markov::forgetfulness_check(MarkovParams(0.15, 0.0, n), idle);
            CHECK(r.distance == doctest::Approx(0.0).epsilon(1e-14));
            CHECK(r.bound == 0.0);
        }
    }
}

TEST_CASE("forgetfulness: single-use brute force over the four index pairs") {
    const MarkovParams p(0.15, 0.5, 1);
    const auto r = markov::forgetfulness_check(p, 0);
    double expected = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double pa = a ? 0.15 : 0.85;
            const double pb = b ? 0.15 : 0.85;
            const double joint = pa * ((1.0 - 0.5) * pb + (a == b ? 0.5 : 0.0));
            expected += std::abs(joint - pa * pb);
        }
    }
    expected *= 0.5;
    CHECK(r.distance == doctest::Approx(expected).epsilon(1e-13));
    CHECK(r.distance <= 1.0);
    CHECK(r.bound == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("forgetfulness: exhaustive marginalization matches the analytic bridge") {
    for (double mu : {0.2, 0.8}) {
        for (int n : {1, 2, 3}) {
            for (int idle : {0, 1, 3}) {
                const MarkovParams p(0.15, mu, n);
                const auto marginal = markov::two_block_marginal(p, idle);
                for (Config blocks = 0; blocks < config_dim(2 * n); ++blocks) {
                    CHECK(marginal[static_cast<Eigen::Index>(blocks)] ==
                          doctest::Approx(two_block_oracle_entry(p, blocks, idle))
                              .epsilon(1e-11));
                }
            }
        }
    }
}

TEST_CASE("forgetfulness: distance within the 2 mu^(L+1) bound") {
    const auto r = markov::forgetfulness_check(MarkovParams(0.15, 0.8, 2), 3);
    CHECK(r.bound == doctest::Approx(2.0 * std::pow(0.8, 4)).epsilon(1e-15));
    CHECK(r.distance <= r.bound);
    CHECK(r.distance > 0.0);
}

TEST_CASE("forgetfulness: enumeration cap") {
    CHECK_THROWS_AS((void)markov::forgetfulness_check(MarkovParams(0.15, 0.5, 11), 6),
                    std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(MarkovParams(-0.1, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(MarkovParams(0.15, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(MarkovParams(0.15, 0.5, 0), std::invalid_argument);
}
