#include "dephcap/sweep.hpp"

#include "dephcap/entropy.hpp"
#include "dephcap/markov.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dephcap::sweep {

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

int parse_n_token(const std::string& token) {
    // Returns -1 for "inf", otherwise the positive integer value.
    if (token == "inf") return -1;
    std::size_t pos = 0;
    int n = 0;
    try {
        n = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad N token '" + token + "'");
    }
    if (pos != token.size() || n < 1) {
        throw std::invalid_argument("bad N token '" + token + "'");
    }
    return n;
}

void check_unit_interval(const std::string& name, double y) {
    if (!(y >= -1e-12 && y <= 1.0 + 1e-12)) {
        throw std::logic_error(name + " = " + std::to_string(y) + " outside [0, 1]");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::string to_string(Model m) {
    return m == Model::markov ? "markov" : "spinboson";
}

Model model_from_string(const std::string& s) {
    if (s == "markov") return Model::markov;
    if (s == "spinboson") return Model::spinboson;
    throw std::invalid_argument("unknown model '" + s + "' (markov|spinboson)");
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 2) throw std::invalid_argument("linspace: need at least 2 points");
    std::vector<double> xs(count);
    xs.front() = lo;
    xs.back() = hi; // endpoints exact, no rounding drift past the domain edge
    for (int i = 1; i + 1 < count; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return xs;
}

std::string x_name(const SweepConfig& cfg) {
    return cfg.sweep_name;
}

std::vector<CurvePoint> run_markov_sweep(const SweepConfig& cfg) {
    if (cfg.model != Model::markov) {
        throw std::invalid_argument("run_markov_sweep: config model is not markov");
    }
    const bool sweep_mu = cfg.sweep_name == "mu";
    if (!sweep_mu && cfg.sweep_name != "p0") {
        throw std::invalid_argument("markov sweeps support 'mu' or 'p0', got '" +
                                    cfg.sweep_name + "'");
    }
    if (!(cfg.lo >= 0.0 && cfg.hi <= 1.0 && cfg.lo <= cfg.hi)) {
        throw std::invalid_argument("markov sweep range must lie inside [0, 1]");
    }
    if (cfg.n_list.empty()) throw std::invalid_argument("empty N list");

    std::vector<CurvePoint> points;
    for (double x : linspace(cfg.lo, cfg.hi, cfg.count)) {
        const double p0 = sweep_mu ? cfg.p0 : x;
        const double mu = sweep_mu ? x : cfg.mu;
        for (const auto& token : cfg.n_list) {
            const int n = parse_n_token(token);
            double y;
            std::string y_name;
            if (n < 0) {
                y = markov::capacity(markov::MarkovParams(1.0 - p0, mu, 1));
                y_name = "Q";
            } else {
                const markov::MarkovParams params(1.0 - p0, mu, n);
                y = markov::q_n(params) / static_cast<double>(n);
                y_name = "QN_over_N";
            }
            check_unit_interval("Q_N/N", y);
            points.push_back({x, token, y, y_name});
        }
        points.push_back({x, "ref", 1.0 - binary_entropy(p0), "Q1_memoryless"});
    }
    return points;
}

std::vector<CurvePoint> run_spinboson_sweep(const SweepConfig& cfg) {
    if (cfg.model != Model::spinboson) {
        throw std::invalid_argument("run_spinboson_sweep: config model is not spinboson");
    }
    if (cfg.sweep_name != "xi") {
        throw std::invalid_argument("spinboson sweeps support 'xi', got '" +
                                    cfg.sweep_name + "'");
    }
    if (cfg.lo <= 0.0) {
        throw std::invalid_argument(
            "xi = 0 means infinite carrier spacing; use the analytic memoryless value "
            "1 - H((1+g)/2) instead of sweeping it");
    }
    if (cfg.hi > 1.0 || cfg.lo > cfg.hi) {
        throw std::invalid_argument("spinboson sweep range must lie inside (0, 1]");
    }
    if (cfg.n_list.empty()) throw std::invalid_argument("empty N list");

    std::vector<int> ns;
    for (const auto& token : cfg.n_list) {
        const int n = parse_n_token(token);
        if (n < 0) {
            throw std::invalid_argument("N=inf is not available for the spinboson model; "
                                        "the limit is not computed in closed form");
        }
        if (n > kMaxQubits) {
            throw std::invalid_argument("N exceeds " + std::to_string(kMaxQubits));
        }
        ns.push_back(n);
    }

    const spinboson::SpinBosonParams single(cfg.lambda, cfg.tau_c, cfg.tau_p, 0.0, 1);
    const double g = spinboson::dephasing_factor_single(single, cfg.integral);
    const double memoryless = 1.0 - binary_entropy(0.5 * (1.0 + g));

    std::vector<CurvePoint> points;
    for (double xi : linspace(cfg.lo, cfg.hi, cfg.count)) {
        const double tau = spinboson::SpinBosonParams::tau_for_xi(xi, cfg.tau_c);
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const spinboson::SpinBosonParams params(cfg.lambda, cfg.tau_c, cfg.tau_p, tau,
                                                    ns[i]);
            const double y = spinboson::coherent_info_unpolarized(params, cfg.integral) /
                             static_cast<double>(ns[i]);
            check_unit_interval("I_c/N", y);
            points.push_back({xi, cfg.n_list[i], y, "Ic_over_N"});
        }
        points.push_back({xi, "ref", memoryless, "Q1_memoryless"});
    }
    return points;
}

std::vector<CurvePoint> run_sweep(const SweepConfig& cfg) {
    return cfg.model == Model::markov ? run_markov_sweep(cfg) : run_spinboson_sweep(cfg);
}

void write_csv(std::ostream& os, const SweepConfig& cfg,
               const std::vector<CurvePoint>& points) {
    os << "model,x_name,x,N,y,y_name\n";
    const std::string model = to_string(cfg.model);
    const std::string xn = x_name(cfg);
    for (const auto& p : points) {
        os << model << ',' << xn << ',' << fmt12(p.x) << ',' << p.n_token << ','
           << fmt12(p.y) << ',' << p.y_name << '\n';
    }
}

std::string csv_string(const SweepConfig& cfg, const std::vector<CurvePoint>& points) {
    std::ostringstream oss;
    write_csv(oss, cfg, points);
    return oss.str();
}

std::string gnuplot_stub(const SweepConfig& cfg, const std::string& csv_path) {
    std::ostringstream os;
    os << "# gnuplot script for " << csv_path << "\n";
    os << "set datafile separator ','\n";
    os << "set key left top\n";
    os << "set xlabel '" << x_name(cfg) << "'\n";
    os << "set ylabel '" << (cfg.model == Model::markov ? "Q_N/N" : "I_c/N") << "'\n";
    os << "plot \\\n";
    for (const auto& token : cfg.n_list) {
        os << "  '" << csv_path << "' using 3:(strcol(4) eq '" << token
           << "' ? $5 : NaN) with lines title 'N=" << token << "', \\\n";
    }
    os << "  '" << csv_path
       << "' using 3:(strcol(4) eq 'ref' ? $5 : NaN) with lines dt 2 title 'memoryless'\n";
    return os.str();
}

SweepConfig config_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SweepConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "model") {
            cfg.model = model_from_string(value.get<std::string>());
        } else if (key == "sweep") {
            cfg.sweep_name = value.at("name").get<std::string>();
            cfg.lo = value.at("lo").get<double>();
            cfg.hi = value.at("hi").get<double>();
            cfg.count = value.at("count").get<int>();
        } else if (key == "n_list") {
            cfg.n_list.clear();
            for (const auto& tok : value) {
                cfg.n_list.push_back(tok.is_string() ? tok.get<std::string>()
                                                     : std::to_string(tok.get<int>()));
            }
        } else if (key == "p0") {
            cfg.p0 = value.get<double>();
        } else if (key == "mu") {
            cfg.mu = value.get<double>();
        } else if (key == "lambda") {
            cfg.lambda = value.get<double>();
        } else if (key == "tau_c") {
            cfg.tau_c = value.get<double>();
        } else if (key == "tau_p") {
            cfg.tau_p = value.get<double>();
        } else if (key == "out") {
            cfg.out_path = value.get<std::string>();
        } else if (key == "seed") {
            cfg.seed = value.get<unsigned>();
        } else if (key == "gnuplot_stub") {
            cfg.gnuplot_stub = value.get<bool>();
        } else if (key == "quadrature") {
            cfg.integral.method = value.get<bool>()
                                      ? spinboson::IntegralMethod::quadrature
                                      : spinboson::IntegralMethod::closed_form;
        } else if (key == "quad_tol") {
            cfg.integral.abs_tol = value.get<double>();
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    if (cfg.count < 2) throw std::invalid_argument("sweep count must be >= 2");
    return cfg;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str());
}

void apply_sweep_spec(SweepConfig& cfg, const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 4) {
        throw std::invalid_argument("--sweep expects <name>:<lo>:<hi>:<count>, got '" +
                                    spec + "'");
    }
    cfg.sweep_name = parts[0];
    try {
        cfg.lo = std::stod(parts[1]);
        cfg.hi = std::stod(parts[2]);
        cfg.count = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw std::invalid_argument("--sweep expects numeric lo:hi:count, got '" + spec +
                                    "'");
    }
    if (cfg.count < 2) throw std::invalid_argument("sweep count must be >= 2");
}

void apply_n_list(SweepConfig& cfg, const std::string& list) {
    cfg.n_list.clear();
    for (const auto& token : split(list, ',')) {
        if (token.empty()) throw std::invalid_argument("--n-list has an empty token");
        parse_n_token(token); // validates
        cfg.n_list.push_back(token);
    }
}

} // namespace dephcap::sweep
