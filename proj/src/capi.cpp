#include "closure_enkf.h"

#include "closure/errors.hpp"
#include "closure/experiment.hpp"
#include "closure/report.hpp"

#include <cstring>
#include <fstream>
#include <string>

namespace {

thread_local std::string g_last_error;

struct ConfigHandle {
    closure::ExperimentConfig config;
};

closure::ExperimentConfig& unwrap(ce_config* h) {
    return reinterpret_cast<ConfigHandle*>(h)->config;
}

const closure::ExperimentConfig& unwrap(const ce_config* h) {
    return reinterpret_cast<const ConfigHandle*>(h)->config;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating exceptions into status codes + the thread-local message.
template <typename Fn>
ce_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CE_OK;
    } catch (const closure::ConfigError& e) {
        g_last_error = e.what();
        if (g_last_error.find("unknown preset") != std::string::npos)
            return CE_ERR_UNKNOWN_PRESET;
        if (g_last_error.find("unknown config key") != std::string::npos)
            return CE_ERR_UNKNOWN_KEY;
        if (g_last_error.find("cannot open") != std::string::npos ||
            g_last_error.find("write failed") != std::string::npos)
            return CE_ERR_IO;
        return CE_ERR_CONFIG;
    } catch (const closure::DimensionError& e) {
        g_last_error = e.what();
        return CE_ERR_CONFIG;
    } catch (const closure::SingularityError& e) {
        g_last_error = e.what();
        return CE_ERR_NUMERIC;
    } catch (const closure::NumericError& e) {
        g_last_error = e.what();
        return CE_ERR_NUMERIC;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CE_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CE_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* ce_version(void) { return "0.1.0"; }

const char* ce_last_error(void) { return g_last_error.c_str(); }

ce_status ce_preset_names(char** out_names) {
    if (!out_names) {
        g_last_error = "out_names is null";
        return CE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::string joined;
        for (const auto& name : closure::preset_names()) {
            if (!joined.empty()) joined += "\n";
            joined += name;
        }
        *out_names = copy_string(joined);
    });
}

ce_status ce_config_from_preset(const char* name, ce_config** out_config) {
    if (!name || !out_config) {
        g_last_error = "null argument";
        return CE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        auto* handle = new ConfigHandle{closure::preset(name)};
        *out_config = reinterpret_cast<ce_config*>(handle);
    });
}

ce_status ce_config_from_file(const char* path, ce_config** out_config) {
    if (!path || !out_config) {
        g_last_error = "null argument";
        return CE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::ifstream in(path);
        if (!in) throw closure::ConfigError(std::string("cannot open config file ") + path);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw closure::ConfigError(std::string("invalid config JSON: ") + e.what());
        }
        auto* handle = new ConfigHandle{closure::config_from_json(doc)};
        *out_config = reinterpret_cast<ce_config*>(handle);
    });
}

void ce_config_free(ce_config* config) {
    delete reinterpret_cast<ConfigHandle*>(config);
}

ce_status ce_config_set(ce_config* config, const char* dotted_key, const char* value) {
    if (!config || !dotted_key || !value) {
        g_last_error = "null argument";
        return CE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { unwrap(config) = closure::apply_override(unwrap(config), dotted_key, value); });
}

ce_status ce_config_desk_scale(ce_config* config) {
    if (!config) {
        g_last_error = "null argument";
        return CE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { unwrap(config) = closure::desk_scale(unwrap(config)); });
}

ce_status ce_config_to_json(const ce_config* config, char** out_json) {
    if (!config || !out_json) {
        g_last_error = "null argument";
        return CE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out_json = copy_string(closure::config_to_json(unwrap(config)).dump(2)); });
}

ce_status ce_run(const ce_config* config, const char* stage, uint64_t seed, const char* out_dir,
                 int threads) {
    if (!config || !stage || !out_dir) {
        g_last_error = "null argument";
        return CE_ERR_INVALID_ARGUMENT;
    }
    closure::RunStage run_stage;
    const std::string s = stage;
    if (s == "truth")
        run_stage = closure::RunStage::Truth;
    else if (s == "observe")
        run_stage = closure::RunStage::Observe;
    else if (s == "filter")
        run_stage = closure::RunStage::Filter;
    else if (s == "search")
        run_stage = closure::RunStage::Search;
    else if (s == "experiment")
        run_stage = closure::RunStage::Experiment;
    else {
        g_last_error = "unknown stage: " + s;
        return CE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        closure::run_experiment(unwrap(config), out_dir, seed, threads < 1 ? 1 : threads,
                                run_stage);
    });
}

ce_status ce_report(const char* run_dir) {
    if (!run_dir) {
        g_last_error = "null argument";
        return CE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { closure::emit_report(run_dir); });
}

void ce_string_free(char* s) { std::free(s); }

}  // extern "C"
