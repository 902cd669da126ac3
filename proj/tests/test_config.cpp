#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "bcdisk/config.hpp"

using namespace bcdisk;

namespace {

const char* no_env(const char*) { return nullptr; }

std::string temp_file(const std::string& text) {
    const std::string path = ::testing::TempDir() + "bcdisk_cfg_" +
                             ::testing::UnitTest::GetInstance()->current_test_info()->name() + ".cfg";
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Config, DefaultsAreValid) {
    RunConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_EQ(cfg.n_theta, 512);
    EXPECT_EQ(cfg.series_cap, 40);
    EXPECT_EQ(cfg.radii.size(), 4u);
}

TEST(Config, EveryKeyCanBeSet) {
    RunConfig cfg;
    for (const auto& [k, v] : cfg.entries()) EXPECT_NO_THROW(cfg.set(k, v)) << k;
    cfg.set("n_theta", "1024");
    cfg.set("tol_pde", "2e-5");
    cfg.set("radii", "0.1, 0.2");
    cfg.set("seed", "18446744073709551615");
    EXPECT_EQ(cfg.n_theta, 1024);
    EXPECT_EQ(cfg.tol_pde, 2e-5);
    EXPECT_EQ(cfg.radii, (std::vector<double>{0.1, 0.2}));
    EXPECT_EQ(cfg.seed, 18446744073709551615ull);
    EXPECT_THROW(cfg.set("nope", "1"), std::invalid_argument);
    EXPECT_THROW(cfg.set("n_r", "1.5"), std::invalid_argument);
    EXPECT_THROW(cfg.set("seed", "-3"), std::invalid_argument);
}

TEST(Config, EntriesRoundTrip) {
    RunConfig a;
    a.tol_pde = 1.0 / 3.0;
    a.radii = {0.25, 0.7};
    a.seed = 99;
    RunConfig b;
    for (const auto& [k, v] : a.entries()) b.set(k, v);
    EXPECT_EQ(a.entries(), b.entries());
    EXPECT_EQ(b.tol_pde, a.tol_pde);
}

TEST(Config, Validation) {
    auto invalid = [](const std::string& k, const std::string& v) {
        RunConfig c;
        c.set(k, v);
        EXPECT_THROW(c.validate(), std::invalid_argument) << k << "=" << v;
    };
    invalid("n_theta", "100");
    invalid("n_theta", "32");
    invalid("tol_pde", "-1");
    invalid("radii", "0.9,0.5");
    invalid("radii", "0.5,1.0");
    invalid("series_cap", "0");
    RunConfig zero;
    zero.tol_pde = 0.0;
    EXPECT_NO_THROW(zero.validate());
}

TEST(Config, FileThenOverrides) {
    const std::string path = temp_file("# comment\nn_r = 64  # trailing\n\ntol_pde=1e-6\n");
    const RunConfig cfg = load_config(path, {"tol_pde=3e-6", "seed = 5"}, no_env);
    EXPECT_EQ(cfg.n_r, 64);
    EXPECT_EQ(cfg.tol_pde, 3e-6);
    EXPECT_EQ(cfg.seed, 5u);
    std::remove(path.c_str());
}

TEST(Config, EnvironmentFallback) {
    const std::string path = temp_file("series_cap = 12\n");
    auto env = [&](const char* k) -> const char* { return std::string(k) == "BCDISK_CONFIG" ? path.c_str() : nullptr; };
    EXPECT_EQ(load_config("", {}, env).series_cap, 12);
    EXPECT_EQ(load_config("", {}, no_env).series_cap, 40);
    std::remove(path.c_str());
}

TEST(Config, Errors) {
    EXPECT_THROW(load_config("/nonexistent/x.cfg", {}, no_env), IoError);
    EXPECT_THROW(load_config("", {"n_theta"}, no_env), std::invalid_argument);
    EXPECT_THROW(load_config("", {"n_theta=100"}, no_env), std::invalid_argument);
    RunConfig cfg;
    std::istringstream bad("n_r 5\n");
    EXPECT_THROW(apply_config(cfg, bad), std::invalid_argument);
}
