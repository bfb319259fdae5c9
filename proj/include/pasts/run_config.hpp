#pragma once

// Configuration and output formatting for the command-line tool. Lives in
// the library so the CLI stays a thin shell and every value it prints can be
// reproduced through this API.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pasts/fock_oracle.hpp"
#include "pasts/grid.hpp"
#include "pasts/states.hpp"

namespace pasts::cli {

struct RunConfig {
    StateSpec state{0.3, 0.1, 1};
    std::optional<ChannelSpec> channel;
    grid::GridSpec grid{};
    int oracle_dim = fock::kDefaultDim;
    std::string output_path;  // empty: standard output
    bool quick = false;

    /// Validates the state, channel (if any), grid and oracle_dim.
    void validate() const;
};

/// "min:max:n" for both axes or "min:max:n,min:max:n" for (re, im).
/// Throws InvalidParameter on malformed text.
[[nodiscard]] grid::GridSpec parse_grid(std::string_view text);

/// Overlays the keys present in `doc` onto `base`. Recognized keys: lambda,
/// nc, m, N, kt, grid (string or {min_re,max_re,n_re,min_im,max_im,n_im}),
/// oracle_dim, out, quick. Unknown keys throw InvalidParameter.
[[nodiscard]] RunConfig apply_json(const nlohmann::json& doc, RunConfig base);

/// Reads and applies a JSON config file. Throws std::runtime_error if the file
/// cannot be read, InvalidParameter on bad content.
[[nodiscard]] RunConfig load_config_file(const std::string& path, RunConfig base);

[[nodiscard]] nlohmann::json to_json(const RunConfig& config);

/// Round-trip exact, locale-independent: printf "%.17g".
[[nodiscard]] std::string format_double(double v);

/// "# meta: {...}" line, then "re,im,w" rows with im varying fastest.
[[nodiscard]] std::string wigner_csv(const grid::WignerGrid& grid, const nlohmann::json& meta);

/// "# meta: {...}" line, then "n,p" rows.
[[nodiscard]] std::string pnd_csv(const std::vector<double>& pnd, const nlohmann::json& meta);

/// {"kind": ..., "inputs": {...}, "value": ...}
[[nodiscard]] nlohmann::json scalar_record(std::string_view kind, const nlohmann::json& inputs,
                                           const nlohmann::json& value);

/// Writes text to path. Throws std::runtime_error on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace pasts::cli
