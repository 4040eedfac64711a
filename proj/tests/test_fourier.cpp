#include <gtest/gtest.h>

#include "alphalab/fourier.hpp"

using namespace alphalab;

namespace {

void checkParabolicIdentity(const std::string& name) {
    WeylGroup w(CartanType::parse(name));
    auto t = characterTable(w);
    const auto F = exoticFourier(*t);
    for (const auto& p : standardParabolics(w)) {
        std::vector<long> m(t->size());
        for (std::size_t i = 0; i < t->size(); ++i) m[i] = trivialMultiplicityOnParabolic(w, p, t->row(i).values);
        for (std::size_t psi = 0; psi < t->size(); ++psi) {
            Rational s = 0;
            for (std::size_t chi = 0; chi < t->size(); ++chi) s += F[chi][psi] * m[chi];
            EXPECT_EQ(s, Rational(m[psi])) << name << " " << t->row(psi).label << " parabolic of size " << p.group->size();
        }
    }
}

}  // namespace

TEST(Fourier, FamiliesTypeB) {
    WeylGroup w(CartanType::parse("B2"));
    auto t = characterTable(w);
    auto fam = familyPartition(*t);
    ASSERT_EQ(fam.size(), 3u);
    std::vector<std::string> big;
    for (const auto& f : fam)
        if (f.members.size() == 3)
            for (int m : f.members) big.push_back(t->row(m).label);
    std::sort(big.begin(), big.end());
    EXPECT_EQ(big, (std::vector<std::string>{".2", "1.1", "11."}));
    auto a = aInvariants(*t);
    EXPECT_EQ(a[t->index("1.1")], 1);
    EXPECT_EQ(a[t->index(".2")], 1);
    EXPECT_EQ(a[t->index(".11")], 4);
}

TEST(Fourier, MatrixSymmetricWithUnitDiagonalOnSingletons) {
    for (const char* n : {"B3", "C3", "D4", "G2"}) {
        WeylGroup w(CartanType::parse(n));
        auto t = characterTable(w);
        auto F = exoticFourier(*t);
        for (const auto& f : familyPartition(*t))
            if (f.members.size() == 1) EXPECT_EQ(F[f.members[0]][f.members[0]], Rational(1)) << n;
        for (std::size_t i = 0; i < t->size(); ++i)
            for (std::size_t j = 0; j < t->size(); ++j) EXPECT_EQ(F[i][j], F[j][i]) << n;
    }
}

TEST(Fourier, G2Block) {
    WeylGroup w(CartanType::parse("G2"));
    auto t = characterTable(w);
    auto F = exoticFourier(*t);
    const int a = t->index("phi2,1"), b = t->index("phi2,2");
    EXPECT_EQ(F[a][a], Rational(1, 6));
    EXPECT_EQ(F[a][b], Rational(1, 2));
    EXPECT_EQ(F[b][b], Rational(1, 2));
}

TEST(Fourier, ParabolicIdentityRankAtMostFour) {
    for (const char* n : {"A1", "A2", "A3", "A4", "B2", "G2", "B3", "C3", "B4", "C4", "D4"}) checkParabolicIdentity(n);
}
