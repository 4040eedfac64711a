#include <gtest/gtest.h>

#include "alphalab/alpha.hpp"

using namespace alphalab;

namespace {

const std::vector<std::string> kRankAtMostFour{"A1", "A2", "A3", "A4", "B2", "G2", "B3", "C3", "B4", "C4", "D4"};

std::string why(const Verdict& v) { return v.notes.empty() ? v.name : v.name + ": " + v.notes.front(); }

}  // namespace

TEST(Theorems, ClosedFormsAndCellVanishing) {
    for (const auto& n : kRankAtMostFour) {
        const AlphaEngine e(computeAlphaData(CartanType::parse(n)));
        const auto c = checkClosedForms(e);
        EXPECT_TRUE(c.ok) << why(c);
        const auto v = checkCellVanishing(e);
        EXPECT_TRUE(v.ok) << why(v);
        const auto t = checkTauPositivity(e, {});
        EXPECT_TRUE(t.ok) << why(t);
    }
}

TEST(Theorems, ClosedFormValues) {
    const AlphaEngine e(computeAlphaData(CartanType::parse("B2")));
    const auto& t = e.table();
    const auto top = e.alpha(e.group().longest()).alphas;
    EXPECT_EQ(top[t.trivialIndex()], parseCompact("(10202)"));
    const auto bottom = e.alpha(e.group().identity()).alphas;
    for (std::size_t i = 0; i < t.size(); ++i)
        EXPECT_EQ(bottom[i], LaurentPoly(static_cast<int>(i) == t.signIndex() ? 1 : 0)) << t.row(i).label;
}

TEST(Theorems, GreenAndExoticParabolic) {
    for (const auto& n : kRankAtMostFour) {
        const AlphaData d = computeAlphaData(CartanType::parse(n));
        const auto g = checkGreenTable(d);
        EXPECT_TRUE(g.ok) << why(g);
        const auto f = checkExoticParabolic(d);
        EXPECT_TRUE(f.ok) << why(f);
    }
}

// The checks report failures on corrupted input rather than passing.
TEST(Theorems, ChecksDetectCorruption) {
    AlphaData d = computeAlphaData(CartanType::parse("B3"));
    auto f = d.fourier;
    std::swap(d.fourier[0], d.fourier[1]);
    EXPECT_FALSE(checkExoticParabolic(d).ok);
    d.fourier = f;
    auto g = *d.green;
    g.P[1][0] += LaurentPoly(1);
    d.green = std::make_shared<const GreenTable>(g);
    EXPECT_FALSE(checkGreenTable(d).ok);
}
