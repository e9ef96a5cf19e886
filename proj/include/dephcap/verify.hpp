// verify.hpp — Executable property suites behind the --verify flag: each
// module's invariants checked with measured worst-case slack.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dephcap::verify {

struct PropertyResult {
    std::string suite;
    std::string name;
    bool pass;
    double slack;       // worst-case remaining margin; negative means violated
    std::string detail; // what the slack measures, worst case location
};

struct Options {
    unsigned seed = 12345;
    bool quick = false; // reduced grids for smoke testing
};

std::vector<PropertyResult> verify_channel(const Options& opts = {});
std::vector<PropertyResult> verify_markov(const Options& opts = {});
std::vector<PropertyResult> verify_spinboson(const Options& opts = {});

// suite: markov | spinboson | channel | all
std::vector<PropertyResult> verify_suite(const std::string& suite, const Options& opts = {});

bool all_pass(const std::vector<PropertyResult>& results);

// One line per property: "PASS <suite>.<name> slack=<s> <detail>".
void print_report(std::ostream& os, const std::vector<PropertyResult>& results);

} // namespace dephcap::verify
