#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "pasts/errors.hpp"
#include "pasts/run_config.hpp"

namespace c = pasts::cli;
using nlohmann::json;

TEST(ParseGrid, SingleAndDoubleAxis) {
    const auto a = c::parse_grid("-3:3:61");
    EXPECT_EQ(a.min_re, -3.0);
    EXPECT_EQ(a.max_im, 3.0);
    EXPECT_EQ(a.n_im, 61);
    const auto b = c::parse_grid("-1:1:5,-2:2.5:7");
    EXPECT_EQ(b.n_re, 5);
    EXPECT_EQ(b.max_im, 2.5);
    EXPECT_EQ(b.n_im, 7);
}

TEST(ParseGrid, RejectsMalformed) {
    for (const char* bad : {"", "1:2", "1:2:3:4", "a:1:3", "-1:1:2.5", "1:-1:3", "0:1:0", "0:1:3,"}) {
        EXPECT_THROW((void)c::parse_grid(bad), pasts::InvalidParameter) << bad;
    }
}

TEST(ApplyJson, OverlaysKeys) {
    const auto cfg = c::apply_json(json::parse(R"({"lambda":0.5,"nc":0.2,"m":3,"N":0.1,"kt":0.4,
                                                   "grid":"-2:2:11","oracle_dim":60,"quick":true})"),
                                   c::RunConfig{});
    EXPECT_EQ(cfg.state.lambda, 0.5);
    EXPECT_EQ(cfg.state.m, 3);
    ASSERT_TRUE(cfg.channel.has_value());
    EXPECT_EQ(cfg.channel->kt, 0.4);
    EXPECT_EQ(cfg.grid.n_re, 11);
    EXPECT_EQ(cfg.oracle_dim, 60);
    EXPECT_TRUE(cfg.quick);
    EXPECT_NO_THROW(cfg.validate());
}

TEST(ApplyJson, GridObjectAndErrors) {
    const auto cfg = c::apply_json(
        json::parse(R"({"grid":{"min_re":-1,"max_re":1,"n_re":3,"min_im":0,"max_im":2,"n_im":5}})"),
        c::RunConfig{});
    EXPECT_EQ(cfg.grid.n_im, 5);
    EXPECT_THROW((void)c::apply_json(json::parse(R"({"lambd":1})"), {}), pasts::InvalidParameter);
    EXPECT_THROW((void)c::apply_json(json::parse(R"({"m":"two"})"), {}), pasts::InvalidParameter);
    EXPECT_THROW((void)c::apply_json(json::parse("[1,2]"), {}), pasts::InvalidParameter);
    EXPECT_THROW(c::apply_json(json::parse(R"({"lambda":-1})"), {}).validate(),
                 pasts::InvalidParameter);
}

TEST(ConfigFile, ReadAndMissing) {
    const std::string path = ::testing::TempDir() + "pasts_cfg_test.json";
    {
        std::ofstream out(path);
        out << R"({"lambda": 0.25, "m": 2})";
    }
    const auto cfg = c::load_config_file(path, {});
    EXPECT_EQ(cfg.state.lambda, 0.25);
    EXPECT_EQ(cfg.state.m, 2);
    std::remove(path.c_str());
    EXPECT_THROW((void)c::load_config_file(path, {}), std::runtime_error);
}

TEST(FormatDouble, RoundTrips) {
    for (double v : {0.1, -0.217663943565967, 1e-300, 123456789.123456789}) {
        EXPECT_EQ(std::strtod(c::format_double(v).c_str(), nullptr), v);
    }
    EXPECT_EQ(c::format_double(0.5), "0.5");
}

TEST(Csv, WignerLayout) {
    const pasts::grid::WignerGrid g{{0, 1, 2, 0, 0, 1}, {0.25, -0.5}};
    EXPECT_EQ(c::wigner_csv(g, json{{"m", 1}}), "# meta: {\"m\":1}\nre,im,w\n0,0,0.25\n1,0,-0.5\n");
}

TEST(Csv, PndLayout) {
    EXPECT_EQ(c::pnd_csv({0.0, 0.75}, json::object()), "# meta: {}\nn,p\n0,0\n1,0.75\n");
}

TEST(ScalarRecord, Shape) {
    const json r = c::scalar_record("fidelity", {{"m", 1}}, 0.5);
    EXPECT_EQ(r["kind"], "fidelity");
    EXPECT_EQ(r["value"], 0.5);
    EXPECT_EQ(r["inputs"]["m"], 1);
}

TEST(WriteFile, FailsOnBadPath) {
    EXPECT_THROW(c::write_file("/nonexistent-dir/x.csv", "x"), std::runtime_error);
}
