#include <gtest/gtest.h>

#include "alphalab/characters.hpp"
#include "alphalab/errors.hpp"
#include "alphalab/seminormal.hpp"

using namespace alphalab;
using modp::u64;

namespace {

using Mat = std::vector<std::vector<u64>>;

Mat mul(const Mat& a, const Mat& b, u64 p) {
    const std::size_t n = a.size();
    Mat c(n, std::vector<u64>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    return c;
}

// Checks T^2 = (q-1)T + q and the braid relations at several points.
void checkRelations(const WeylGroup& w, const SeminormalModel& m) {
    const u64 p = modp::prime(0);
    const auto& a = w.cartan();
    int checked = 0;
    for (u64 q0 = 2; checked < 4; ++q0) {
        if (!goodPoint(q0, m.maxK, p)) continue;
        ++checked;
        std::vector<Mat> g;
        for (int s = 0; s < w.rank(); ++s) g.push_back(denseGenerator(m, s, q0, p));
        const std::size_t d = m.dim();
        for (int s = 0; s < w.rank(); ++s) {
            Mat sq = mul(g[s], g[s], p);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    u64 rhs = (q0 - 1) * g[s][i][j] % p;
                    if (i == j) rhs = (rhs + q0) % p;
                    ASSERT_EQ(sq[i][j], rhs) << "quadratic relation, generator " << s + 1;
                }
        }
        for (int s = 0; s < w.rank(); ++s)
            for (int t = s + 1; t < w.rank(); ++t) {
                const int prod = a[s][t] * a[t][s];
                const int order = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
                Mat x = g[s], y = g[t];
                for (int k = 1; k < order; ++k) {
                    x = mul(x, g[k % 2 ? t : s], p);
                    y = mul(y, g[k % 2 ? s : t], p);
                }
                ASSERT_EQ(x, y) << "braid relation " << s + 1 << "," << t + 1;
            }
    }
}

void checkType(const std::string& name) {
    WeylGroup w(CartanType::parse(name));
    auto t = characterTable(w);
    long sum = 0;
    for (const auto& r : t->rows()) sum += r.degree * r.degree;
    EXPECT_EQ(static_cast<std::size_t>(sum), w.size()) << name;
    EXPECT_EQ(t->size(), w.numClasses()) << name;
    std::vector<SeminormalModel> models;
    for (std::size_t i = 0; i < t->size(); ++i) {
        models.push_back(seminormalModel(w.type(), t->param(i)));
        checkRelations(w, models.back());
    }
    // Specializing q -> 1 gives the ordinary characters.
    auto vals = classRepresentativeValues(w, models, -1);
    for (std::size_t i = 0; i < t->size(); ++i)
        for (std::size_t c = 0; c < w.numClasses(); ++c) {
            long s = 0;
            for (auto x : vals[i][c]) s += x;
            EXPECT_EQ(s, t->row(i).values[c]) << name << " " << t->row(i).label << " class " << w.classes()[c].name;
        }
}

}  // namespace

TEST(Characters, TablesAndModelsSmallTypes) {
    for (const char* n : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"}) checkType(n);
}

TEST(Characters, TablesAndModelsRankFive) {
    for (const char* n : {"A4", "B4", "D5"}) checkType(n);
}

TEST(Characters, TrivialAndSign) {
    WeylGroup w(CartanType::parse("B3"));
    auto t = characterTable(w);
    EXPECT_EQ(t->row(t->trivialIndex()).label, "3.");
    EXPECT_EQ(t->row(t->signIndex()).label, ".111");
    WeylGroup d(CartanType::parse("D4"));
    auto td = characterTable(d);
    EXPECT_EQ(td->row(td->trivialIndex()).label, ".4");
    EXPECT_EQ(td->row(td->signIndex()).label, ".1111");
    EXPECT_TRUE(td->find("2·+").has_value());
    EXPECT_TRUE(td->find("11·-").has_value());
}

TEST(Characters, G2Labels) {
    WeylGroup w(CartanType::parse("G2"));
    auto t = characterTable(w);
    std::vector<std::string> labels;
    for (const auto& r : t->rows()) labels.push_back(r.label);
    EXPECT_EQ(labels, (std::vector<std::string>{"phi1,0", "phi1,3'", "phi2,1", "phi2,2", "phi1,3''", "phi1,6"}));
    EXPECT_EQ(t->row(t->index("phi2,2")).b, 2);
    EXPECT_EQ(t->row(t->index("phi1,3'")).b, 3);
    EXPECT_EQ(t->row(t->index("phi2,1")).a, 1);
}

TEST(Characters, InvariantsTypeB) {
    WeylGroup w(CartanType::parse("B3"));
    auto t = characterTable(w);
    EXPECT_EQ(t->row(t->index("3.")).b, 0);
    EXPECT_EQ(t->row(t->index(".111")).b, 9);
    EXPECT_EQ(t->row(t->index("2.1")).b, 1);
    EXPECT_EQ(t->row(t->index(".3")).b, 3);
}

TEST(Characters, ScalarProductsAndInduction) {
    WeylGroup w(CartanType::parse("B3"));
    auto t = characterTable(w);
    Parabolic b2 = makeParabolic(w, {0, 1});
    auto t2 = characterTable(*b2.group);
    auto ind = [&](const std::string& label) {
        return decompose(*t, induceFromParabolic(w, b2, t2->classFunction(t2->index(label))));
    };
    auto expect = [&](const std::string& label, std::vector<std::string> parts) {
        auto d = ind(label);
        for (std::size_t i = 0; i < t->size(); ++i) {
            long want = std::count(parts.begin(), parts.end(), t->row(i).label);
            EXPECT_EQ(d[i], LaurentPoly(want)) << label << " -> " << t->row(i).label;
        }
    };
    expect("2.", {"3.", "21.", "2.1"});
    expect("11.", {"21.", "11.1", "111."});
    expect("1.1", {"2.1", "1.2", "11.1", "1.11"});
    // Frobenius reciprocity for the trivial character.
    auto triv = induceFromParabolic(w, b2, trivialCharacter(*b2.group));
    EXPECT_EQ(scalarProduct(w, trivialCharacter(w), triv), LaurentPoly(1));
    // Transitivity A1 < B2 < B3.
    Parabolic a1 = makeParabolic(w, {0});
    Parabolic a1in = makeParabolic(*b2.group, {0});
    auto sgn1 = signCharacter(*a1.group);
    EXPECT_EQ(induceFromParabolic(w, a1, sgn1),
              induceFromParabolic(w, b2, induceFromParabolic(*b2.group, a1in, sgn1)));
}

TEST(Characters, ReducibleTypesRefused) {
    WeylGroup w(CartanType::parse("A1xA1"));
    EXPECT_THROW(characterTable(w), CapabilityError);
}
