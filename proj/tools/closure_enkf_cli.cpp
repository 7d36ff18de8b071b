// Command-line front end. Talks to the library exclusively through the C API.

#include "closure_enkf.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct ConfigDeleter {
    void operator()(ce_config* c) const { ce_config_free(c); }
};
using ConfigPtr = std::unique_ptr<ce_config, ConfigDeleter>;

int fail(const std::string& context) {
    std::cerr << "error: " << context << ": " << ce_last_error() << "\n";
    return 1;
}

struct CommonOptions {
    std::string preset;
    std::string config_path;
    std::vector<std::string> overrides;
    std::uint64_t seed = 42;
    std::string out_dir;
    bool desk = false;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool config_required) {
    auto* preset_opt = cmd->add_option("--preset", opt.preset, "Built-in preset name");
    auto* config_opt =
        cmd->add_option("--config", opt.config_path, "Path to a JSON config file");
    preset_opt->excludes(config_opt);
    if (config_required) {
        // exactly one of --preset / --config
        cmd->callback([&opt, cmd] {
            if (opt.preset.empty() && opt.config_path.empty())
                throw CLI::RequiredError("--preset or --config");
        });
    }
    cmd->add_option("--set", opt.overrides, "Config override key=value (repeatable)");
    cmd->add_option("--seed", opt.seed, "Master seed (default 42)");
    cmd->add_option("--out", opt.out_dir, "Output directory (default ./out)");
    cmd->add_flag("--desk", opt.desk, "Apply the desk-scale reduction");
    cmd->add_option("--threads", opt.threads, "Forecast threads (default 1)");
}

std::string resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("CLOSURE_ENKF_OUT"); env && *env) return env;
    return "./out";
}

int build_config(const CommonOptions& opt, ConfigPtr& out) {
    ce_config* raw = nullptr;
    if (!opt.preset.empty()) {
        if (ce_config_from_preset(opt.preset.c_str(), &raw) != CE_OK)
            return fail("preset '" + opt.preset + "'");
    } else {
        if (ce_config_from_file(opt.config_path.c_str(), &raw) != CE_OK)
            return fail("config '" + opt.config_path + "'");
    }
    out.reset(raw);
    if (opt.desk && ce_config_desk_scale(out.get()) != CE_OK) return fail("desk scaling");
    for (const std::string& kv : opt.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: override '" << kv << "' is not of the form key=value\n";
            return 1;
        }
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        if (ce_config_set(out.get(), key.c_str(), value.c_str()) != CE_OK)
            return fail("override '" + key + "'");
    }
    return 0;
}

int run_stage(const CommonOptions& opt, const std::string& stage) {
    ConfigPtr config;
    if (int rc = build_config(opt, config); rc != 0) return rc;
    const std::string out_dir = resolve_out_dir(opt.out_dir);
    if (ce_run(config.get(), stage.c_str(), opt.seed, out_dir.c_str(), opt.threads) != CE_OK)
        return fail(stage + " run");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closure-term estimation for PDE models via a stochastic ensemble Kalman "
                 "filter with basis-coefficient state augmentation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ce_version()));

    CommonOptions opt;
    const std::vector<std::string> stages = {"truth", "observe", "filter", "search",
                                             "experiment"};
    const std::vector<std::string> descriptions = {
        "Solve and persist the ground-truth trajectory",
        "Truth plus synthetic noisy observations",
        "Full pipeline through the ensemble Kalman filter",
        "Hyperparameter grid search over (sigma, M)",
        "Full pipeline plus plot-ready report files"};
    for (std::size_t i = 0; i < stages.size(); ++i) {
        CLI::App* cmd = app.add_subcommand(stages[i], descriptions[i]);
        add_common(cmd, opt, /*config_required=*/true);
    }
    CLI::App* report = app.add_subcommand("report", "Derive plot-ready files from a finished run");
    report->add_option("--out", opt.out_dir, "Run directory (default ./out)");

    CLI11_PARSE(app, argc, argv);

    try {
        const CLI::App* sub = app.get_subcommands().at(0);
        const std::string name = sub->get_name();
        if (name == "report") {
            const std::string dir = resolve_out_dir(opt.out_dir);
            if (ce_report(dir.c_str()) != CE_OK) return fail("report on '" + dir + "'");
            return 0;
        }
        return run_stage(opt, name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
