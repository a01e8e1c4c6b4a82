#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cli/config.hpp"
#include "hirota/verify.hpp"

namespace hirota::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 1,
    kDegenerate = 2,
    kToleranceFailure = 3,
};

enum class FieldFormat { csv, json };

/// Throws ConfigError for anything other than "csv" or "json".
FieldFormat parse_field_format(const std::string& name);

/// Field rows (t-major, x ascending) with columns x,t,re_psi,im_psi,abs_psi.
/// Degenerate points are left out and counted on `err`.
int write_field(const RunConfig& config, FieldFormat format, std::ostream& out,
                std::ostream& err);
int cmd_field(const RunConfig& config, const std::string& out_path, FieldFormat format,
              std::ostream& err);

int cmd_residual(const RunConfig& config, EquationKind equation, bool fd_check,
                 std::ostream& out, std::ostream& err);

int cmd_series(const RunConfig& config, SpaceTimePoint point, int max_order, std::ostream& out,
               std::ostream& err);

int cmd_identity(int n_max, int trials, std::uint64_t seed, std::ostream& out, std::ostream& err);

int cmd_collide(const RunConfig& config, double t_far, std::ostream& out, std::ostream& err);

/// Parses "X,T".
SpaceTimePoint parse_point(const std::string& text);

}  // namespace hirota::cli
