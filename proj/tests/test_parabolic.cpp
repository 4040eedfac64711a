#include <gtest/gtest.h>

#include "alphalab/alpha.hpp"

using namespace alphalab;

namespace {

struct Pair {
    std::shared_ptr<const WeylGroup> big;
    Parabolic p;
    std::unique_ptr<AlphaEngine> W, Wp;
};

// Standard parabolic of B3 of the given type.
Pair pair(const std::string& sub) {
    Pair r;
    r.big = std::make_shared<const WeylGroup>(CartanType::parse("B3"));
    for (const auto& p : standardParabolics(*r.big))
        if (p.subset.size() == 2 && p.group->type().name() == sub) r.p = p;
    EXPECT_TRUE(r.p.group) << sub;
    r.W = std::make_unique<AlphaEngine>(computeAlphaData(r.big));
    r.Wp = std::make_unique<AlphaEngine>(computeAlphaData(r.p.group));
    return r;
}

int springerIndex(const AlphaEngine& e, const std::string& label) {
    const auto& pc = e.data().springer.perChar;
    for (std::size_t i = 0; i < pc.size(); ++i)
        if (pc[i].label() == label) return static_cast<int>(i);
    ADD_FAILURE() << "no Springer label " << label;
    return 0;
}

}  // namespace

TEST(Parabolic, B2InB3) {
    auto r = pair("B2");
    const auto v = checkParabolic(*r.W, *r.Wp, r.p);
    EXPECT_TRUE(v.ok) << (v.notes.empty() ? "" : v.notes.front());
}

TEST(Parabolic, A2InB3) {
    auto r = pair("A2");
    const auto v = checkParabolic(*r.W, *r.Wp, r.p);
    EXPECT_TRUE(v.ok) << (v.notes.empty() ? "" : v.notes.front());
}

TEST(Parabolic, InductionTableB2ToB3) {
    auto r = pair("B2");
    const CharTable& T = r.W->table();
    const CharTable& t = r.Wp->table();
    const std::map<std::string, std::vector<std::string>> expected{
        {"2.", {"3.", "21.", "2.1"}},
        {"11.", {"21.", "11.1", "111."}},
        {"1.1", {"2.1", "1.2", "11.1", "1.11"}},
        {".2", {"1.2", ".3", ".21"}},
        {".11", {"1.11", ".21", ".111"}},
    };
    for (const auto& [small, bigs] : expected) {
        const auto d = decompose(T, induceFromParabolic(*r.big, r.p, t.classFunction(t.index(small))));
        for (std::size_t chi = 0; chi < T.size(); ++chi) {
            const bool in = std::find(bigs.begin(), bigs.end(), T.row(chi).label) != bigs.end();
            EXPECT_EQ(d[chi], LaurentPoly(in ? 1 : 0)) << small << " -> " << T.row(chi).label;
        }
    }
}

TEST(Parabolic, InducedSpringerB2ToB3) {
    auto r = pair("B2");
    const auto m = inducedSpringerCoordinates(*r.W, *r.Wp, r.p);
    auto unit = [&](const std::string& from, const std::string& to) {
        const int a = springerIndex(*r.Wp, from), b = springerIndex(*r.W, to);
        for (std::size_t k = 0; k < m[a].size(); ++k) EXPECT_EQ(m[a][k], k == static_cast<std::size_t>(b) ? 1 : 0) << from;
    };
    unit("311", "31111");
    unit("311(11)", "31111(11)");
}
