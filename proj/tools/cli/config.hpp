#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "hirota/grid.hpp"
#include "hirota/medium.hpp"
#include "hirota/soliton.hpp"

namespace hirota::cli {

/// Malformed or invalid run configuration (exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    double tolerance = 1e-8;
    int series_order = 20;
    std::uint64_t seed = 42;

    friend bool operator==(const Options&, const Options&) = default;
};

struct RunConfig {
    Medium medium{1.0, 1.0, 8.0};
    SolitonSet solitons;
    std::optional<GridSpec> grid;
    Options options;

    /// Throws ConfigError when the config has no grid.
    const GridSpec& require_grid() const;
};

/// Parses the JSON schema
///
///   {"medium":{"rho":R,"sigma":S,"lambda":L},
///    "solitons":[{"p":[re,im],"a0":[re,im]}, ...],
///    "grid":{"x":[min,max,n],"t":[min,max,n]},
///    "options":{"tolerance":1e-8,"series_order":20,"seed":42}}
///
/// "grid" and "options" (and each option) may be omitted. Unknown keys,
/// wrong types and invariant violations raise ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical text: fixed key order, two-space indentation, reals printed
/// with 17 significant digits. dump(parse(dump(c))) == dump(c).
std::string dump_config(const RunConfig& config);

/// "%.17g", with negative zero printed as 0.
std::string format_real(double v);

}  // namespace hirota::cli
