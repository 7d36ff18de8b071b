#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "closure_enkf.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("closure_capi_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("version and preset listing") {
    const char* v = ce_version();
    REQUIRE(v != nullptr);
    CHECK(std::strlen(v) > 0);

    char* names = nullptr;
    REQUIRE(ce_preset_names(&names) == CE_OK);
    REQUIRE(names != nullptr);
    std::string list(names);
    ce_string_free(names);
    CHECK(list.find("kpp-1d-dense") != std::string::npos);
    CHECK(list.find("advdiff-2d-dominant") != std::string::npos);
    CHECK(list.find('\n') != std::string::npos);
}

TEST_CASE("error codes and last-error text") {
    ce_config* cfg = nullptr;
    CHECK(ce_config_from_preset("does-not-exist", &cfg) == CE_ERR_UNKNOWN_PRESET);
    CHECK(cfg == nullptr);
    CHECK(std::string(ce_last_error()).find("does-not-exist") != std::string::npos);

    REQUIRE(ce_config_from_preset("kpp-1d-dense", &cfg) == CE_OK);
    REQUIRE(cfg != nullptr);
    CHECK(ce_config_set(cfg, "no.such.key", "1") == CE_ERR_UNKNOWN_KEY);
    CHECK(std::string(ce_last_error()).find("no.such.key") != std::string::npos);
    CHECK(ce_config_set(cfg, "hyper.sigma", "oops") == CE_ERR_CONFIG);

    CHECK(ce_config_from_preset(nullptr, &cfg) == CE_ERR_INVALID_ARGUMENT);
    CHECK(ce_run(nullptr, "filter", 1, "/tmp/x", 1) == CE_ERR_INVALID_ARGUMENT);
    CHECK(ce_report("/definitely/not/a/dir") != CE_OK);

    ce_config_free(cfg);
}

TEST_CASE("config manipulation and JSON round-trip") {
    ce_config* cfg = nullptr;
    REQUIRE(ce_config_from_preset("kpp-1d-dense", &cfg) == CE_OK);
    REQUIRE(ce_config_set(cfg, "hyper.sigma", "0.4") == CE_OK);
    REQUIRE(ce_config_desk_scale(cfg) == CE_OK);

    char* json = nullptr;
    REQUIRE(ce_config_to_json(cfg, &json) == CE_OK);
    std::string doc(json);
    ce_string_free(json);
    CHECK(doc.find("\"sigma\"") != std::string::npos);
    CHECK(doc.find("0.4") != std::string::npos);
    CHECK(doc.find("desk") != std::string::npos);

    // write to disk, load back, serialize again: identical
    fs::path dir = fresh_dir("roundtrip");
    fs::path file = dir / "config.json";
    std::ofstream(file) << doc;
    ce_config* loaded = nullptr;
    REQUIRE(ce_config_from_file(file.string().c_str(), &loaded) == CE_OK);
    char* json2 = nullptr;
    REQUIRE(ce_config_to_json(loaded, &json2) == CE_OK);
    CHECK(doc == std::string(json2));
    ce_string_free(json2);
    ce_config_free(loaded);
    ce_config_free(cfg);

    ce_config* missing = nullptr;
    CHECK(ce_config_from_file((dir / "nope.json").string().c_str(), &missing) == CE_ERR_IO);
    fs::remove_all(dir);
}

TEST_CASE("end-to-end run through the C surface") {
    ce_config* cfg = nullptr;
    REQUIRE(ce_config_from_preset("kpp-1d-dense", &cfg) == CE_OK);
    REQUIRE(ce_config_desk_scale(cfg) == CE_OK);
    REQUIRE(ce_config_set(cfg, "hyper.ensemble_size", "40") == CE_OK);
    REQUIRE(ce_config_set(cfg, "time.num_observations", "4") == CE_OK);
    REQUIRE(ce_config_set(cfg, "observation.num_locations", "40") == CE_OK);

    fs::path dir = fresh_dir("run");
    REQUIRE(ce_run(cfg, "filter", 42, dir.string().c_str(), 1) == CE_OK);
    CHECK(fs::exists(dir / "summary.json"));
    CHECK(fs::exists(dir / "closure_t0003.csv"));
    CHECK_FALSE(fs::exists(dir / "band_t0000.csv"));

    REQUIRE(ce_report(dir.string().c_str()) == CE_OK);
    CHECK(fs::exists(dir / "band_t0003.csv"));

    CHECK(ce_run(cfg, "not-a-stage", 42, dir.string().c_str(), 1) == CE_ERR_INVALID_ARGUMENT);

    ce_config_free(cfg);
    fs::remove_all(dir);
}
