#include "dephcap/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace dephcap;

TEST_CASE("verify suites pass in quick mode and report slack per property") {
    verify::Options opts;
    opts.seed = 999;
    opts.quick = true;

    for (const std::string suite : {"channel", "markov", "spinboson"}) {
        const auto results = verify::verify_suite(suite, opts);
        REQUIRE(!results.empty());
        for (const auto& r : results) {
            INFO(r.suite, ".", r.name, " slack=", r.slack, " ", r.detail);
            CHECK(r.pass);
            CHECK(r.suite == suite);
        }
    }
}

TEST_CASE("verify: the all suite concatenates the three modules") {
    verify::Options opts;
    opts.quick = true;
    const auto all = verify::verify_suite("all", opts);
    const auto channel = verify::verify_suite("channel", opts);
    const auto markov = verify::verify_suite("markov", opts);
    const auto spinboson = verify::verify_suite("spinboson", opts);
    CHECK(all.size() == channel.size() + markov.size() + spinboson.size());
    CHECK(verify::all_pass(all));

    CHECK_THROWS_AS((void)verify::verify_suite("bogus", opts), std::invalid_argument);
}

TEST_CASE("verify report prints one machine-readable line per property") {
    verify::Options opts;
    opts.quick = true;
    const auto results = verify::verify_markov(opts);
    std::ostringstream os;
    verify::print_report(os, results);
    std::istringstream is(os.str());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(is, line)) {
        ++lines;
        CHECK(line.rfind("PASS ", 0) == 0);
        CHECK(line.find("slack=") != std::string::npos);
    }
    CHECK(lines == results.size());
}
