// sweep.hpp — Parameter sweeps over the noise models, CSV emission, and the
// declarative config file behind the command-line runner.

#pragma once

#include "dephcap/spinboson.hpp"
#include "dephcap/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dephcap::sweep {

enum class Model { markov, spinboson };

std::string to_string(Model m);
Model model_from_string(const std::string& s);

struct SweepConfig {
    Model model = Model::markov;

    // Swept parameter: markov sweeps "mu" or "p0", spinboson sweeps "xi".
    std::string sweep_name = "mu";
    double lo = 0.0;
    double hi = 1.0;
    int count = 51; // >= 2

    // N tokens: positive integers, or "inf" (markov only) for the capacity.
    std::vector<std::string> n_list = {"2", "4", "6", "8", "10"};

    // Fixed markov parameters.
    double p0 = 0.85;
    double mu = 0.0;

    // Fixed spin-boson parameters.
    double lambda = 1.0;
    double tau_c = 1.0;
    double tau_p = 1.0;

    spinboson::IntegralSettings integral;

    std::string out_path; // empty = stdout
    unsigned seed = 0;
    bool gnuplot_stub = false;
};

struct CurvePoint {
    double x;
    std::string n_token; // integer, "inf", or "ref"
    double y;            // bits per use, in [0, 1]
    std::string y_name;
};

std::vector<double> linspace(double lo, double hi, int count);

// Q_N/N per N token (capacity for "inf") plus a memoryless reference row
// 1 - H(p0) per swept value. Throws std::invalid_argument on bad config.
std::vector<CurvePoint> run_markov_sweep(const SweepConfig& cfg);

// I_c/N per N plus the memoryless reference 1 - H((1+g)/2). xi = 0 is
// rejected (infinite spacing); use the analytic memoryless value instead.
std::vector<CurvePoint> run_spinboson_sweep(const SweepConfig& cfg);

std::vector<CurvePoint> run_sweep(const SweepConfig& cfg);

// Schema: model,x_name,x,N,y,y_name with 12-significant-digit floats.
void write_csv(std::ostream& os, const SweepConfig& cfg,
               const std::vector<CurvePoint>& points);

std::string csv_string(const SweepConfig& cfg, const std::vector<CurvePoint>& points);

// Companion gnuplot script for a CSV written to csv_path.
std::string gnuplot_stub(const SweepConfig& cfg, const std::string& csv_path);

// Declarative JSON config; unknown keys are rejected.
SweepConfig config_from_json_text(const std::string& text);
SweepConfig load_config(const std::string& path);

// "name:lo:hi:count" as accepted by the --sweep flag.
void apply_sweep_spec(SweepConfig& cfg, const std::string& spec);

// Comma-separated N tokens as accepted by --n-list.
void apply_n_list(SweepConfig& cfg, const std::string& list);

std::string x_name(const SweepConfig& cfg);

} // namespace dephcap::sweep
