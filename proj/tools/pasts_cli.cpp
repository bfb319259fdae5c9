// pasts: command-line front end for the photon-added squeezed thermal state
// library. Exit codes: 0 ok, 1 validation failure, 2 bad input, 3 I/O error.
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pasts/analytics.hpp"
#include "pasts/decoherence.hpp"
#include "pasts/errors.hpp"
#include "pasts/gaussianity.hpp"
#include "pasts/grid.hpp"
#include "pasts/run_config.hpp"
#include "pasts/validation.hpp"

namespace {

using nlohmann::json;
using pasts::cli::RunConfig;

constexpr int kExitValidation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;

struct Flags {
    double lambda = 0.0;
    double nc = 0.0;
    int m = 0;
    double bath = 0.0;
    double kt = 0.0;
    std::string grid;
    int oracle_dim = 0;
    std::string out;
    std::string config;
    bool quick = false;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--lambda", f.lambda, "squeezing parameter (>= 0)");
    sub->add_option("--nc", f.nc, "thermal mean photon number (>= 0)");
    sub->add_option("--m", f.m, "number of added photons (>= 0)");
    sub->add_option("--config", f.config, "JSON config file; explicit flags override it");
    sub->add_option("--out", f.out, "write output to this file instead of stdout");
}

void add_channel(CLI::App* sub, Flags& f) {
    sub->add_option("--N", f.bath, "bath mean photon number (>= 0)");
    sub->add_option("--kt", f.kt, "dimensionless time kappa*t (>= 0)");
}

RunConfig resolve(const CLI::App* sub, const Flags& f) {
    RunConfig cfg;
    if (sub->count("--config") > 0) cfg = pasts::cli::load_config_file(f.config, cfg);
    if (sub->count("--lambda") > 0) cfg.state.lambda = f.lambda;
    if (sub->count("--nc") > 0) cfg.state.n_c = f.nc;
    if (sub->count("--m") > 0) cfg.state.m = f.m;
    if (sub->get_option_no_throw("--N") != nullptr) {
        if (!cfg.channel) cfg.channel = pasts::ChannelSpec{0.0, 0.0};
        if (sub->count("--N") > 0) cfg.channel->bath_mean = f.bath;
        if (sub->count("--kt") > 0) cfg.channel->kt = f.kt;
    }
    if (sub->get_option_no_throw("--grid") != nullptr && sub->count("--grid") > 0) {
        cfg.grid = pasts::cli::parse_grid(f.grid);
    }
    if (sub->get_option_no_throw("--oracle-dim") != nullptr && sub->count("--oracle-dim") > 0) {
        cfg.oracle_dim = f.oracle_dim;
    }
    if (sub->get_option_no_throw("--quick") != nullptr && sub->count("--quick") > 0) {
        cfg.quick = true;
    }
    if (sub->count("--out") > 0) cfg.output_path = f.out;
    cfg.validate();
    return cfg;
}

json state_inputs(const RunConfig& cfg) {
    return {{"lambda", cfg.state.lambda}, {"nc", cfg.state.n_c}, {"m", cfg.state.m}};
}

json channel_inputs(const RunConfig& cfg) {
    json in = state_inputs(cfg);
    in["N"] = cfg.channel->bath_mean;
    in["kt"] = cfg.channel->kt;
    return in;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed writing to standard output");
    } else {
        pasts::cli::write_file(cfg.output_path, text);
    }
}

void emit_json(const RunConfig& cfg, const json& j) { emit(cfg, j.dump() + "\n"); }

int run(const std::string& name, const CLI::App* sub, const Flags& f) {
    const RunConfig cfg = resolve(sub, f);
    const json in = state_inputs(cfg);
    namespace a = pasts::analytics;
    namespace d = pasts::decoherence;
    namespace g = pasts::gaussianity;

    if (name == "norm") {
        emit_json(cfg, pasts::cli::scalar_record("normalization", in, a::normalization(cfg.state)));
    } else if (name == "mean") {
        emit_json(cfg, pasts::cli::scalar_record("mean_photon", in, a::mean_photon(cfg.state)));
    } else if (name == "q") {
        emit_json(cfg, pasts::cli::scalar_record("mandel_q", in, a::mandel_q(cfg.state)));
    } else if (name == "pnd") {
        emit(cfg, pasts::cli::pnd_csv(a::pnd_distribution(cfg.state), in));
    } else if (name == "wigner") {
        json meta = in;
        meta["grid"] = pasts::cli::to_json(cfg)["grid"];
        emit(cfg, pasts::cli::wigner_csv(pasts::grid::sample_wigner(cfg.grid, cfg.state), meta));
    } else if (name == "wigner-evolved") {
        json meta = channel_inputs(cfg);
        meta["grid"] = pasts::cli::to_json(cfg)["grid"];
        emit(cfg, pasts::cli::wigner_csv(
                      pasts::grid::sample_evolved_wigner(cfg.grid, cfg.state, *cfg.channel), meta));
    } else if (name == "threshold") {
        const json tin{{"N", cfg.channel->bath_mean}};
        emit_json(cfg, pasts::cli::scalar_record("threshold_added", tin,
                                                 d::threshold_added(cfg.channel->bath_mean)));
    } else if (name == "threshold-sub") {
        const json tin{{"N", cfg.channel->bath_mean}, {"nc", cfg.state.n_c}, {"lambda", cfg.state.lambda}};
        json rec;
        try {
            const double v = d::threshold_subtracted(cfg.channel->bath_mean, cfg.state.n_c,
                                                     cfg.state.lambda);
            rec = pasts::cli::scalar_record("threshold_subtracted", tin, v);
            rec["status"] = v > 0.0 ? "finite" : "never_negative";
        } catch (const pasts::DomainError& e) {
            rec = pasts::cli::scalar_record("threshold_subtracted", tin, nullptr);
            rec["status"] = "no_finite_threshold";
            rec["detail"] = e.what();
        }
        emit_json(cfg, rec);
    } else if (name == "fidelity") {
        emit_json(cfg, pasts::cli::scalar_record("fidelity", in, g::fidelity(cfg.state)));
    } else if (name == "ratio") {
        emit_json(cfg, pasts::cli::scalar_record("fidelity_ratio", in, g::fidelity_ratio(cfg.state)));
    } else if (name == "validate") {
        pasts::validation::ValidationOptions opt;
        opt.oracle_dim = cfg.oracle_dim;
        opt.quick = cfg.quick;
        opt.state = cfg.state;
        const auto results = pasts::validation::run_validation(opt);
        std::ostringstream os;
        pasts::validation::print_report(os, results);
        const bool ok = pasts::validation::all_passed(results);
        os << (ok ? "all checks passed\n" : "validation FAILED\n");
        emit(cfg, os.str());
        return ok ? 0 : kExitValidation;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon-added squeezed thermal states: closed forms and a Fock-space check"};
    app.require_subcommand(1);
    Flags f;

    struct Entry {
        const char* name;
        const char* help;
        bool channel;
        bool grid;
    };
    const Entry entries[] = {
        {"norm", "normalization C_{a,m}", false, false},
        {"mean", "mean photon number", false, false},
        {"q", "Mandel Q parameter", false, false},
        {"pnd", "photon-number distribution as CSV", false, false},
        {"wigner", "Wigner function on a grid as CSV", false, true},
        {"wigner-evolved", "Wigner function after a thermal channel as CSV", true, true},
        {"threshold", "time at which the m=1 origin negativity vanishes", true, false},
        {"threshold-sub", "same threshold for the photon-subtracted state", true, false},
        {"fidelity", "overlap fidelity with the squeezed thermal reference", false, false},
        {"ratio", "added/subtracted fidelity ratio", false, false},
        {"validate", "run the self-check suite against the Fock-space oracle", false, false},
    };
    for (const Entry& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        add_common(sub, f);
        if (e.channel) add_channel(sub, f);
        if (e.grid) sub->add_option("--grid", f.grid, "min:max:n or min:max:n,min:max:n");
        if (std::string(e.name) == "validate") {
            sub->add_option("--oracle-dim", f.oracle_dim, "Fock-space dimension of the oracle");
            sub->add_flag("--quick", f.quick, "skip the master-equation checks");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    const CLI::App* sub = app.get_subcommands().front();
    try {
        return run(sub->get_name(), sub, f);
    } catch (const pasts::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const pasts::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const pasts::UndefinedMoment& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const pasts::TruncationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const pasts::IntegrationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const pasts::ConsistencyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}
