#include "alphalab/fourier.hpp"

#include <algorithm>
#include <map>

#include "alphalab/errors.hpp"

namespace alphalab {

namespace {

// Row of a symbol: parts of p in increasing order, zero-padded to len, with
// step * i added to the i-th entry.
std::vector<int> symbolRow(const Partition& p, int len, int step) {
    std::vector<int> r(len, 0);
    const int k = static_cast<int>(p.size());
    for (int i = 0; i < k; ++i) r[len - k + i] = p[k - 1 - i];
    for (int i = 0; i < len; ++i) r[i] += step * i;
    return r;
}

struct Symbol {
    std::vector<int> top, bottom;
    std::vector<int> entries() const {
        std::vector<int> e = top;
        e.insert(e.end(), bottom.begin(), bottom.end());
        std::sort(e.begin(), e.end());
        return e;
    }
};

Symbol lusztigSymbol(char fam, const Bipartition& b, int n) {
    if (fam == 'D') return {symbolRow(b.xi, n, 1), symbolRow(b.eta, n, 1)};
    return {symbolRow(b.xi, n + 1, 1), symbolRow(b.eta, n, 1)};
}

std::vector<int> singles(const std::vector<int>& entries) {
    std::map<int, int> cnt;
    for (int x : entries) ++cnt[x];
    std::vector<int> s;
    for (auto [x, c] : cnt)
        if (c == 1) s.push_back(x);
    return s;
}

const Rational kG2Block[4][4] = {
    {Rational(1, 6), Rational(1, 3), Rational(1, 2), Rational(1, 3)},
    {Rational(1, 3), Rational(2, 3), Rational(0), Rational(-1, 3)},
    {Rational(1, 2), Rational(0), Rational(1, 2), Rational(0)},
    {Rational(1, 3), Rational(-1, 3), Rational(0), Rational(2, 3)},
};

}  // namespace

std::vector<Family> familyPartition(const CharTable& t) {
    const CartanType& type = t.group().type();
    const char fam = type.family();
    const int n = type.n();
    std::vector<Family> out;
    auto finishSpecial = [&](Family& f) {
        int best = f.members[0];
        for (int m : f.members)
            if (t.row(m).b < t.row(best).b) best = m;
        f.special = best;
    };

    if (fam == 'A') {
        for (std::size_t i = 0; i < t.size(); ++i) {
            Family f;
            f.members = {static_cast<int>(i)};
            f.special = static_cast<int>(i);
            f.block = {{Rational(1)}};
            out.push_back(f);
        }
        return out;
    }
    if (fam == 'G') {
        // Order in the table: phi1,0 phi1,3' phi2,1 phi2,2 phi1,3'' phi1,6.
        Family triv, sgn, big;
        triv.members = {0};
        sgn.members = {5};
        triv.block = sgn.block = {{Rational(1)}};
        triv.special = 0;
        sgn.special = 5;
        big.members = {1, 2, 3, 4};
        // Positions in the 4x4 block: phi2,1, phi1,3', phi2,2, phi1,3''.
        const int pos[4] = {1, 0, 2, 3};  // member k of big.members -> block index
        big.block.assign(4, std::vector<Rational>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) big.block[i][j] = kG2Block[pos[i]][pos[j]];
        big.special = 2;
        out = {triv, big, sgn};
        return out;
    }
    if (fam != 'B' && fam != 'C' && fam != 'D') throw CapabilityError("families of " + type.name() + " need the data backend");

    std::map<std::vector<int>, std::vector<int>> byEntries;
    std::vector<Symbol> symbols(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const CharParam& p = t.param(i);
        symbols[i] = lusztigSymbol(fam, p.bip, n);
        std::vector<int> key = symbols[i].entries();
        if (p.split != 0) key.push_back(1000 + p.split);  // split characters are alone
        byEntries[key].push_back(static_cast<int>(i));
    }
    for (auto& [key, members] : byEntries) {
        Family f;
        f.members = members;
        std::sort(f.members.begin(), f.members.end());
        const std::vector<int> z = singles(symbols[f.members[0]].entries());
        const int k = static_cast<int>(f.members.size());
        f.block.assign(k, std::vector<Rational>(k));
        if (z.empty()) {
            f.block[0][0] = 1;
        } else {
            std::vector<int> m0;
            for (std::size_t i = 1; i < z.size(); i += 2) m0.push_back(z[i]);
            const int d = static_cast<int>(z.size() / 2);
            const int scale = fam == 'D' ? d - 1 : d;
            // M# = (bottom singles) symmetric-difference M0, as a bit mask over z.
            std::vector<std::uint64_t> sharp(k);
            for (int a = 0; a < k; ++a) {
                const auto& bottom = symbols[f.members[a]].bottom;
                std::uint64_t mask = 0;
                for (std::size_t j = 0; j < z.size(); ++j) {
                    bool inM = std::count(bottom.begin(), bottom.end(), z[j]) == 1 &&
                               std::count(symbols[f.members[a]].top.begin(), symbols[f.members[a]].top.end(), z[j]) == 0;
                    bool inM0 = std::find(m0.begin(), m0.end(), z[j]) != m0.end();
                    if (inM != inM0) mask |= 1ULL << j;
                }
                sharp[a] = mask;
            }
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) {
                    int sgn = __builtin_popcountll(sharp[a] & sharp[b]) % 2 ? -1 : 1;
                    f.block[a][b] = Rational(sgn, 1) / Rational(Integer(1) << scale);
                }
        }
        finishSpecial(f);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Family& a, const Family& b) { return a.members[0] < b.members[0]; });
    return out;
}

std::vector<int> aInvariants(const CharTable& t) {
    std::vector<int> a(t.size(), 0);
    for (const auto& f : familyPartition(t))
        for (int m : f.members) a[m] = t.row(f.special).b;
    return a;
}

RationalMatrix exoticFourier(const CharTable& t) {
    RationalMatrix m(t.size(), std::vector<Rational>(t.size(), Rational(0)));
    for (const auto& f : familyPartition(t))
        for (std::size_t i = 0; i < f.members.size(); ++i)
            for (std::size_t j = 0; j < f.members.size(); ++j) m[f.members[i]][f.members[j]] = f.block[i][j];
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) throw ConsistencyError("Fourier matrix not symmetric");
    return m;
}

}  // namespace alphalab
