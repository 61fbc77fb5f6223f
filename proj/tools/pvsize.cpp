// pvsize: size grid-connected monofacial / bifacial PV plants.
//
//   pvsize config init [--out config.json]
//   pvsize simulate --config c.json --n-pv 10000 [--out dir] [--svg] [--dump-hourly]
//   pvsize optimize --config c.json [--seed N] [--out dir] [--svg] [--dump-hourly]
//   pvsize compare  --config c.json [--config other.json] [--seed N] [--out dir] [--svg] [--dump-hourly]
//
// Exit codes: 0 success, 2 config error, 3 data error, 4 numerical failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pvsize/errors.hpp"
#include "pvsize/report.hpp"
#include "pvsize/scenario.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

struct CommonFlags {
    std::vector<std::string> configs;
    std::string out = "out";
    std::optional<std::uint64_t> seed;
    bool svg = false;
    bool dump_hourly = false;
};

void add_common(CLI::App& cmd, CommonFlags& flags, bool allow_pair) {
    auto* opt = cmd.add_option("--config", flags.configs, "Scenario config file")->required();
    opt->expected(1, allow_pair ? 2 : 1);
    if (allow_pair) opt->allow_extra_args(false)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    cmd.add_option("--out", flags.out, "Output directory")->capture_default_str();
    cmd.add_option("--seed", flags.seed, "Override the optimizer seed");
    cmd.add_flag("--svg", flags.svg, "Also write SVG charts");
    cmd.add_flag("--dump-hourly", flags.dump_hourly, "Also write hourly CSV tables");
}

pvsize::ScenarioConfig configure(const std::string& path, const CommonFlags& flags,
                                 std::optional<pvsize::Technology> tech = std::nullopt) {
    auto config = pvsize::load_config(path, tech);
    if (flags.seed) config.woa.options.seed = *flags.seed;
    return config;
}

pvsize::SizingModel make_model(pvsize::ScenarioConfig config) {
    auto inputs = std::make_shared<const pvsize::ScenarioInputs>(pvsize::load_inputs(config));
    return pvsize::SizingModel(std::move(config), std::move(inputs));
}

int run(int argc, char** argv) {
    CLI::App app{"Size utility-scale monofacial and bifacial PV plants against an hourly load"};
    app.require_subcommand(1);

    auto* config_cmd = app.add_subcommand("config", "Configuration helpers");
    config_cmd->require_subcommand(1);
    auto* init_cmd = config_cmd->add_subcommand("init", "Write a commented configuration template");
    std::string init_out;
    init_cmd->add_option("--out", init_out, "Destination file (stdout when omitted)");

    CommonFlags sim_flags;
    std::int64_t n_pv = 0;
    auto* sim_cmd = app.add_subcommand("simulate", "Evaluate one fixed panel count");
    add_common(*sim_cmd, sim_flags, false);
    sim_cmd->add_option("--n-pv", n_pv, "Number of panels")->required()->check(CLI::NonNegativeNumber);

    CommonFlags opt_flags;
    auto* opt_cmd = app.add_subcommand("optimize", "Minimize LPSP over the panel count");
    add_common(*opt_cmd, opt_flags, false);

    CommonFlags cmp_flags;
    auto* cmp_cmd = app.add_subcommand(
        "compare", "Optimize two scenarios side by side; a single config is run as monofacial and bifacial");
    add_common(*cmp_cmd, cmp_flags, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (init_cmd->parsed()) {
        const std::string text = pvsize::config_template();
        if (init_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(init_out);
            if (!out) throw pvsize::ConfigError("cannot write '" + init_out + "'");
            out << text;
            std::cout << "wrote " << init_out << '\n';
        }
        return 0;
    }

    if (sim_cmd->parsed()) {
        const auto model = make_model(configure(sim_flags.configs.front(), sim_flags));
        const auto report = pvsize::run_simulate(model, n_pv);
        pvsize::write_simulation_outputs(sim_flags.out, model, report, {sim_flags.svg, sim_flags.dump_hourly});
        std::cout << pvsize::format_report_text(report);
        return 0;
    }

    if (opt_cmd->parsed()) {
        const auto model = make_model(configure(opt_flags.configs.front(), opt_flags));
        const auto report = pvsize::run_optimize(model);
        pvsize::write_optimization_outputs(opt_flags.out, model, report, {opt_flags.svg, opt_flags.dump_hourly});
        std::cout << pvsize::format_report_text(report.at_optimum, &report.outcome);
        return 0;
    }

    if (cmp_cmd->parsed()) {
        pvsize::ScenarioConfig first;
        pvsize::ScenarioConfig second;
        if (cmp_flags.configs.size() == 1) {
            first = configure(cmp_flags.configs[0], cmp_flags, pvsize::Technology::monofacial);
            second = configure(cmp_flags.configs[0], cmp_flags, pvsize::Technology::bifacial);
        } else {
            first = configure(cmp_flags.configs[0], cmp_flags);
            second = configure(cmp_flags.configs[1], cmp_flags);
        }
        const auto model_a = make_model(std::move(first));
        const auto model_b = make_model(std::move(second));
        const auto report = pvsize::run_compare(model_a, model_b);
        pvsize::write_comparison_outputs(cmp_flags.out, model_a, model_b, report,
                                         {cmp_flags.svg, cmp_flags.dump_hourly});
        std::cout << pvsize::format_comparison_text(report);
        return 0;
    }
    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pvsize::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const pvsize::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const pvsize::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
