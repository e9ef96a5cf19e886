#include "dephcap/entropy.hpp"
#include "dephcap/sweep.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace dephcap;
using namespace dephcap::sweep;

namespace {

double find_y(const std::vector<CurvePoint>& points, double x, const std::string& token) {
    for (const auto& p : points) {
        if (p.n_token == token && std::abs(p.x - x) < 1e-12) return p.y;
    }
    FAIL("missing point");
    return 0.0;
}

} // namespace

TEST_CASE("markov sweep: endpoints of the capacity figure") {
    SweepConfig cfg;
    cfg.model = Model::markov;
    cfg.sweep_name = "mu";
    cfg.lo = 0.0;
    cfg.hi = 1.0;
    cfg.count = 5;
    cfg.p0 = 0.85;
    cfg.n_list = {"2", "10", "100", "inf"};
    const auto points = run_markov_sweep(cfg);

    // mu = 0: every curve collapses onto the memoryless capacity.
    const double memoryless = 1.0 - binary_entropy(0.85);
    for (const auto& token : cfg.n_list) {
        CHECK(find_y(points, 0.0, token) == doctest::Approx(memoryless).epsilon(1e-12));
    }
    CHECK(std::abs(find_y(points, 0.0, "inf") - 0.39015) < 1e-4);

    // mu = 1: capacity one, finite blocks pay H(p0)/N.
    CHECK(find_y(points, 1.0, "inf") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(find_y(points, 1.0, "10") ==
          doctest::Approx(1.0 - binary_entropy(0.85) / 10.0).epsilon(1e-12));
    CHECK(std::abs(find_y(points, 1.0, "10") - 0.93902) < 1e-4);

    // The reference row tracks 1 - H(p0) at every x.
    CHECK(find_y(points, 0.5, "ref") == doctest::Approx(memoryless).epsilon(1e-12));

    // All y values stay inside the unit interval.
    for (const auto& p : points) {
        CHECK(p.y >= 0.0);
        CHECK(p.y <= 1.0);
    }
}

TEST_CASE("markov sweep: curve count and deterministic ordering") {
    SweepConfig cfg;
    cfg.model = Model::markov;
    cfg.count = 3;
    cfg.n_list = {"2", "inf"};
    const auto points = run_markov_sweep(cfg);
    REQUIRE(points.size() == 3 * 3); // two tokens + ref per x
    CHECK(points[0].n_token == "2");
    CHECK(points[1].n_token == "inf");
    CHECK(points[2].n_token == "ref");
    CHECK(points[0].x == 0.0);
    CHECK(points[3].x == 0.5);
}

TEST_CASE("spinboson sweep: memoryless plateau and the packed limit") {
    SweepConfig cfg;
    cfg.model = Model::spinboson;
    cfg.sweep_name = "xi";
    cfg.lo = 0.02;
    cfg.hi = 0.999;
    cfg.count = 2;
    cfg.n_list = {"2"};
    const auto points = run_spinboson_sweep(cfg);

    const double g = std::exp(-std::exp(-1.0));
    const double memoryless = 1.0 - binary_entropy(0.5 * (1.0 + g));
    CHECK(std::abs(find_y(points, 0.02, "2") - memoryless) < 1e-2);
    CHECK(find_y(points, 0.999, "2") >= 0.5);
    CHECK(find_y(points, 0.02, "ref") == doctest::Approx(memoryless).epsilon(1e-9));
}

TEST_CASE("spinboson sweep rejects xi = 0 and inf tokens") {
    SweepConfig cfg;
    cfg.model = Model::spinboson;
    cfg.sweep_name = "xi";
    cfg.lo = 0.0;
    cfg.hi = 1.0;
    cfg.count = 3;
    try {
        (void)run_spinboson_sweep(cfg);
        FAIL("xi = 0 was accepted");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("memoryless") != std::string::npos);
    }

    cfg.lo = 0.1;
    cfg.n_list = {"2", "inf"};
    CHECK_THROWS_AS((void)run_spinboson_sweep(cfg), std::invalid_argument);
}

TEST_CASE("sweep validation: model, name, range, count") {
    SweepConfig cfg;
    cfg.model = Model::markov;
    cfg.sweep_name = "xi";
    CHECK_THROWS_AS((void)run_markov_sweep(cfg), std::invalid_argument);
    cfg.sweep_name = "mu";
    cfg.hi = 1.5;
    CHECK_THROWS_AS((void)run_markov_sweep(cfg), std::invalid_argument);
    cfg.hi = 1.0;
    cfg.n_list = {"0"};
    CHECK_THROWS_AS((void)run_markov_sweep(cfg), std::invalid_argument);
    CHECK_THROWS_AS(linspace(0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("csv emission: schema, 12 significant digits, determinism") {
    SweepConfig cfg;
    cfg.model = Model::markov;
    cfg.count = 4;
    cfg.n_list = {"3", "inf"};
    const auto points = run_markov_sweep(cfg);

    const std::string csv = csv_string(cfg, points);
    std::istringstream is(csv);
    std::string header;
    std::getline(is, header);
    CHECK(header == "model,x_name,x,N,y,y_name");
    std::string line;
    std::getline(is, line);
    CHECK(line.substr(0, 10) == "markov,mu,");

    CHECK(csv == csv_string(cfg, run_markov_sweep(cfg))); // bit-stable

    // 12 significant digits survive a round trip.
    const double y = points[0].y;
    std::istringstream first_line(line);
    std::string field;
    for (int i = 0; i < 5; ++i) std::getline(first_line, field, ',');
    CHECK(std::abs(std::stod(field) - y) <= 1e-12 * std::max(1.0, std::abs(y)));
}

TEST_CASE("markov sweep is unaffected by quadrature settings") {
    SweepConfig cfg;
    cfg.model = Model::markov;
    cfg.count = 3;
    cfg.n_list = {"4"};
    const auto base = csv_string(cfg, run_markov_sweep(cfg));
    cfg.integral.method = spinboson::IntegralMethod::quadrature;
    cfg.integral.abs_tol = 1e-8;
    CHECK(csv_string(cfg, run_markov_sweep(cfg)) == base);
}

TEST_CASE("spinboson sweep: halving the quadrature tolerance moves nothing past 1e-6") {
    SweepConfig cfg;
    cfg.model = Model::spinboson;
    cfg.sweep_name = "xi";
    cfg.lo = 0.2;
    cfg.hi = 1.0;
    cfg.count = 4;
    cfg.n_list = {"2", "3"};
    cfg.integral.method = spinboson::IntegralMethod::quadrature;
    cfg.integral.abs_tol = 1e-9;
    const auto coarse = run_spinboson_sweep(cfg);
    cfg.integral.abs_tol = 5e-10;
    const auto fine = run_spinboson_sweep(cfg);
    REQUIRE(coarse.size() == fine.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        CHECK(std::abs(coarse[i].y - fine[i].y) <= 1e-6);
    }
    // The closed-form default is bit-stable by construction.
    cfg.integral.method = spinboson::IntegralMethod::closed_form;
    CHECK(csv_string(cfg, run_spinboson_sweep(cfg)) ==
          csv_string(cfg, run_spinboson_sweep(cfg)));
}

TEST_CASE("json config parsing with overrides and unknown-key rejection") {
    const std::string text = R"({
        "model": "spinboson",
        "sweep": {"name": "xi", "lo": 0.05, "hi": 1.0, "count": 20},
        "n_list": [2, 4, "6"],
        "lambda": 1.0,
        "tau_c": 1.0,
        "tau_p": 1.0,
        "out": "figure2.csv",
        "gnuplot_stub": true
    })";
    const auto cfg = config_from_json_text(text);
    CHECK(cfg.model == Model::spinboson);
    CHECK(cfg.sweep_name == "xi");
    CHECK(cfg.count == 20);
    REQUIRE(cfg.n_list.size() == 3);
    CHECK(cfg.n_list[1] == "4");
    CHECK(cfg.out_path == "figure2.csv");
    CHECK(cfg.gnuplot_stub);

    CHECK_THROWS_AS((void)config_from_json_text(R"({"mode": "markov"})"),
                    std::invalid_argument);

    SweepConfig flags = cfg;
    apply_sweep_spec(flags, "xi:0.1:0.9:7");
    CHECK(flags.lo == doctest::Approx(0.1));
    CHECK(flags.count == 7);
    apply_n_list(flags, "2,8");
    REQUIRE(flags.n_list.size() == 2);
    CHECK(flags.n_list[1] == "8");
    CHECK_THROWS_AS(apply_sweep_spec(flags, "mu:0:1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_n_list(flags, "2,,4"), std::invalid_argument);
}

TEST_CASE("gnuplot stub references every curve and the reference line") {
    SweepConfig cfg;
    cfg.model = Model::markov;
    cfg.n_list = {"2", "inf"};
    const std::string stub = gnuplot_stub(cfg, "out.csv");
    CHECK(stub.find("set datafile separator ','") != std::string::npos);
    CHECK(stub.find("'N=2'") != std::string::npos);
    CHECK(stub.find("'N=inf'") != std::string::npos);
    CHECK(stub.find("memoryless") != std::string::npos);
}
