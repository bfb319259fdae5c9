#include "pasts/run_config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pasts/errors.hpp"

namespace pasts::cli {

namespace {

using nlohmann::json;

double parse_number(std::string_view text, std::string_view what) {
    const std::string s(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw InvalidParameter("bad " + std::string(what) + " '" + s + "' in grid spec");
    }
    return v;
}

void parse_axis(std::string_view text, double& lo, double& hi, int& n) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string_view::npos ? c1 : c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
        text.find(':', c2 + 1) != std::string_view::npos) {
        throw InvalidParameter("grid axis must be min:max:n, got '" + std::string(text) + "'");
    }
    lo = parse_number(text.substr(0, c1), "min");
    hi = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "max");
    const double count = parse_number(text.substr(c2 + 1), "n");
    if (count != static_cast<double>(static_cast<int>(count)) || count < 1) {
        throw InvalidParameter("grid n must be a positive integer");
    }
    n = static_cast<int>(count);
}

template <class T>
T get_as(const json& doc, const char* key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidParameter(std::string("config key '") + key + "': " + e.what());
    }
}

ChannelSpec& channel_of(RunConfig& cfg) {
    if (!cfg.channel) cfg.channel = ChannelSpec{};
    return *cfg.channel;
}

}  // namespace

void RunConfig::validate() const {
    state.validate();
    if (channel) channel->validate();
    grid.validate();
    if (oracle_dim < 2) throw InvalidParameter("oracle_dim must be >= 2");
}

grid::GridSpec parse_grid(std::string_view text) {
    grid::GridSpec g;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        parse_axis(text, g.min_re, g.max_re, g.n_re);
        g.min_im = g.min_re;
        g.max_im = g.max_re;
        g.n_im = g.n_re;
    } else {
        parse_axis(text.substr(0, comma), g.min_re, g.max_re, g.n_re);
        parse_axis(text.substr(comma + 1), g.min_im, g.max_im, g.n_im);
    }
    g.validate();
    return g;
}

RunConfig apply_json(const json& doc, RunConfig base) {
    if (!doc.is_object()) throw InvalidParameter("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "lambda") {
            base.state.lambda = get_as<double>(doc, "lambda");
        } else if (key == "nc") {
            base.state.n_c = get_as<double>(doc, "nc");
        } else if (key == "m") {
            base.state.m = get_as<int>(doc, "m");
        } else if (key == "N") {
            channel_of(base).bath_mean = get_as<double>(doc, "N");
        } else if (key == "kt") {
            channel_of(base).kt = get_as<double>(doc, "kt");
        } else if (key == "grid") {
            if (value.is_string()) {
                base.grid = parse_grid(value.get<std::string>());
            } else {
                grid::GridSpec g;
                g.min_re = get_as<double>(value, "min_re");
                g.max_re = get_as<double>(value, "max_re");
                g.n_re = get_as<int>(value, "n_re");
                g.min_im = get_as<double>(value, "min_im");
                g.max_im = get_as<double>(value, "max_im");
                g.n_im = get_as<int>(value, "n_im");
                base.grid = g;
            }
        } else if (key == "oracle_dim") {
            base.oracle_dim = get_as<int>(doc, "oracle_dim");
        } else if (key == "out") {
            base.output_path = get_as<std::string>(doc, "out");
        } else if (key == "quick") {
            base.quick = get_as<bool>(doc, "quick");
        } else {
            throw InvalidParameter("unknown config key '" + key + "'");
        }
    }
    return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidParameter("config file '" + path + "': " + e.what());
    }
    return apply_json(doc, std::move(base));
}

json to_json(const RunConfig& config) {
    json j;
    j["lambda"] = config.state.lambda;
    j["nc"] = config.state.n_c;
    j["m"] = config.state.m;
    if (config.channel) {
        j["N"] = config.channel->bath_mean;
        j["kt"] = config.channel->kt;
    }
    const auto& g = config.grid;
    j["grid"] = {{"min_re", g.min_re}, {"max_re", g.max_re}, {"n_re", g.n_re},
                 {"min_im", g.min_im}, {"max_im", g.max_im}, {"n_im", g.n_im}};
    j["oracle_dim"] = config.oracle_dim;
    return j;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string wigner_csv(const grid::WignerGrid& g, const json& meta) {
    std::string out;
    out.reserve(g.values.size() * 64 + 256);
    out += "# meta: " + meta.dump() + "\n";
    out += "re,im,w\n";
    for (int i = 0; i < g.spec.n_re; ++i) {
        const std::string re = format_double(g.spec.re_at(i));
        for (int j = 0; j < g.spec.n_im; ++j) {
            out += re;
            out += ',';
            out += format_double(g.spec.im_at(j));
            out += ',';
            out += format_double(g.at(i, j));
            out += '\n';
        }
    }
    return out;
}

std::string pnd_csv(const std::vector<double>& pnd, const json& meta) {
    std::string out = "# meta: " + meta.dump() + "\n";
    out += "n,p\n";
    for (std::size_t n = 0; n < pnd.size(); ++n) {
        out += std::to_string(n);
        out += ',';
        out += format_double(pnd[n]);
        out += '\n';
    }
    return out;
}

json scalar_record(std::string_view kind, const json& inputs, const json& value) {
    return json{{"kind", std::string(kind)}, {"inputs", inputs}, {"value", value}};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace pasts::cli
