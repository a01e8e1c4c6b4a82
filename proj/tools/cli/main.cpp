// hirota: N-envelope-soliton fields of the Hirota equation and their checks.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace cli = hirota::cli;

int main(int argc, char** argv) {
    CLI::App app{"Trace-method N-envelope-soliton solutions of the Hirota equation"};
    app.require_subcommand(1);

    std::string config_path;
    bool dump = false;
    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* opt = sub->add_option("--config", config_path, "JSON run configuration");
        if (config_required) opt->required();
        sub->add_flag("--dump-config", dump, "print the canonical configuration and exit");
    };

    auto* field = app.add_subcommand("field", "evaluate psi on the config grid");
    std::string out_path;
    std::string format = "csv";
    add_common(field, true);
    field->add_option("--out", out_path, "output file")->required();
    field->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* residual = app.add_subcommand("residual", "PDE residual report over the grid");
    std::string equation = "hirota";
    bool fd_check = false;
    add_common(residual, true);
    residual->add_option("--equation", equation, "hirota, nls or mkdv")
        ->check(CLI::IsMember({"hirota", "nls", "mkdv"}));
    residual->add_flag("--fd-check", fd_check, "append the finite-difference order estimate");

    auto* series = app.add_subcommand("series", "Neumann partial sums against the closed form");
    std::string point;
    int max_order = -1;
    add_common(series, true);
    series->add_option("--point", point, "X,T")->required();
    series->add_option("--max-order", max_order, "highest series order (default: options)");

    auto* identity = app.add_subcommand("identity", "exact checks of the sum identities");
    int n_max = 3;
    int trials = 100;
    long long seed = -1;
    add_common(identity, false);
    identity->add_option("--n-max", n_max, "largest n");
    identity->add_option("--trials", trials, "random tuples per identity and n");
    identity->add_option("--seed", seed, "generator seed (default: options or 42)");

    auto* collide = app.add_subcommand("collide", "two-soliton peak amplitudes across a collision");
    double t_far = 20.0;
    add_common(collide, true);
    collide->add_option("--t-far", t_far, "evaluate at -t_far and +t_far");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? cli::kOk : cli::kConfigError;
    }

    try {
        cli::RunConfig config;
        const bool have_config = !config_path.empty();
        if (have_config) config = cli::load_config(config_path);
        if (dump) {
            if (!have_config) throw cli::ConfigError("--dump-config needs --config");
            std::cout << cli::dump_config(config);
            return cli::kOk;
        }

        if (field->parsed())
            return cli::cmd_field(config, out_path, cli::parse_field_format(format), std::cerr);
        if (residual->parsed())
            return cli::cmd_residual(config, hirota::parse_equation_kind(equation), fd_check,
                                     std::cout, std::cerr);
        if (series->parsed())
            return cli::cmd_series(config, cli::parse_point(point),
                                   max_order >= 0 ? max_order : config.options.series_order,
                                   std::cout, std::cerr);
        if (identity->parsed()) {
            const auto s = seed >= 0 ? static_cast<std::uint64_t>(seed) : config.options.seed;
            return cli::cmd_identity(n_max, trials, s, std::cout, std::cerr);
        }
        if (collide->parsed()) return cli::cmd_collide(config, t_far, std::cout, std::cerr);
    } catch (const cli::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return cli::kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kConfigError;
    }
    return cli::kOk;
}
