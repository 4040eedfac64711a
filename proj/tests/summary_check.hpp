#pragma once

#include <gtest/gtest.h>

#include "alphalab/alpha.hpp"
#include "fixtures.hpp"

// Compares a survey with a summary fixture: every fail flag and inflation
// column, plus row coverage (each character listed exactly once).
inline void expectSummaryMatches(const alphalab::AlphaEngine& e, const alphalab::SurveyReport& report,
                                 const std::string& type) {
    auto fx = fixtures::load("summary_" + type + ".txt");
    const int fu = fx.column("fails_unimodal"), fs = fx.column("fails_sign"), fp = fx.column("fails_positive");
    ASSERT_GE(fu, 0) << type;
    std::set<int> seen;
    for (const auto& row : fx.rows) {
        const int i = e.table().index(row[0]);
        EXPECT_TRUE(seen.insert(i).second) << type << " " << row[0];
        const auto& c = report.perChar[i];
        EXPECT_EQ(c.failsUnimodal, row[fu] == "1") << type << " " << row[0];
        EXPECT_EQ(c.failsSign, row[fs] == "1") << type << " " << row[0];
        EXPECT_EQ(c.failsPositive, row[fp] == "1") << type << " " << row[0];
        for (std::size_t k = 0; k < fx.header.size(); ++k)
            if (fx.header[k].rfind("inflated_", 0) == 0)
                EXPECT_EQ(c.inflated.at(fx.header[k].substr(9)), row[k] == "1") << type << " " << row[0] << " " << fx.header[k];
    }
    EXPECT_EQ(seen.size(), e.table().size()) << type;
}
