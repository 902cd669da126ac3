#include <gtest/gtest.h>

#include "bcdisk/suite.hpp"

using namespace bcdisk;

TEST(Metric, Comparisons) {
    EXPECT_TRUE((Metric{"a", 1.0, 1.0, Compare::at_most}).pass());
    EXPECT_FALSE((Metric{"a", 1.1, 1.0, Compare::at_most}).pass());
    EXPECT_TRUE((Metric{"a", 2.0, 1.0, Compare::at_least}).pass());
    EXPECT_FALSE((Metric{"a", std::nan(""), 1.0, Compare::at_most}).pass());
    EXPECT_TRUE((Metric{"a", std::nan(""), 0.0, Compare::info}).pass());
}

TEST(Suite, FastCriteriaPassWithDefaults) {
    const RunConfig cfg;
    for (auto fn : {criterion_algebra, criterion_operators, criterion_series_decay, criterion_hoib, criterion_vekua,
                    criterion_hardy, criterion_manufactured_schwarz}) {
        const CriterionResult c = fn(cfg);
        EXPECT_TRUE(c.pass()) << criterion_line(c);
    }
}

TEST(Suite, ZeroPdeToleranceFailsResidualCriteria) {
    RunConfig cfg;
    cfg.tol_pde = 0.0;
    EXPECT_FALSE(criterion_manufactured_schwarz(cfg).pass());
    EXPECT_FALSE(criterion_vekua(cfg).pass());
    EXPECT_TRUE(criterion_algebra(cfg).pass());
}

TEST(Suite, SeedChangesDrawsNotVerdicts) {
    RunConfig a, b;
    b.seed = a.seed + 17;
    for (auto fn : {criterion_algebra, criterion_operators, criterion_hoib}) {
        const CriterionResult x = fn(a), y = fn(b);
        EXPECT_EQ(x.pass(), y.pass()) << x.name;
        bool differs = false;
        for (std::size_t i = 0; i < x.metrics.size(); ++i) differs = differs || x.metrics[i].value != y.metrics[i].value;
        EXPECT_TRUE(differs) << x.name;
    }
}

TEST(Suite, CriterionIsBitReproducible) {
    const RunConfig cfg;
    const CriterionResult x = criterion_operators(cfg), y = criterion_operators(cfg);
    ASSERT_EQ(x.metrics.size(), y.metrics.size());
    for (std::size_t i = 0; i < x.metrics.size(); ++i) EXPECT_EQ(x.metrics[i].value, y.metrics[i].value);
}

TEST(Suite, SummaryIsSortedAndTimingFree) {
    SuiteResult r;
    r.seed = 3;
    CriterionResult a, b;
    a.id = 2;
    a.name = "two";
    a.runtime_s = 1.5;
    a.metrics = {{"m", 0.5, 1.0, Compare::at_most}};
    b.id = 1;
    b.name = "one";
    r.criteria = {a, b};
    const nlohmann::json j = summary_json(r);
    const std::string text = j.dump();
    EXPECT_EQ(text.find("runtime"), std::string::npos);
    EXPECT_EQ(j["criteria"][0]["id"], 1);
    EXPECT_EQ(j["criteria"][1]["id"], 2);
    EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Suite, CriterionLineFormat) {
    CriterionResult c;
    c.id = 4;
    c.name = "demo";
    c.runtime_s = 0.25;
    c.limit_s = 10.0;
    c.metrics = {{"err", 2e-3, 1e-3, Compare::at_most}, {"note", 7.0, 0.0, Compare::info}};
    const std::string line = criterion_line(c);
    EXPECT_EQ(line.rfind("FAIL criterion 4: demo (0.25 s, limit 10 s)", 0), 0u) << line;
    EXPECT_NE(line.find("err=0.002<=0.001!"), std::string::npos);
    EXPECT_NE(line.find("note=7"), std::string::npos);
}

TEST(Suite, SlowCriterionFailsOnTime) {
    CriterionResult c;
    c.metrics = {{"m", 0.0, 1.0, Compare::at_most}};
    c.limit_s = 1.0;
    c.runtime_s = 2.0;
    EXPECT_FALSE(c.pass());
    c.runtime_s = 0.5;
    EXPECT_TRUE(c.pass());
}
