#include "alphalab/springer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "alphalab/errors.hpp"
#include "alphalab/modp.hpp"

namespace alphalab {

using modp::u64;

int springerFibreDimension(char family, const Partition& lambda) {
    if (family == 'A') return nInvariant(lambda);
    const Partition dual = conjugate(lambda);
    long sq = 0;
    for (int x : dual) sq += static_cast<long>(x) * x;
    long odd = 0;
    for (int x : lambda) odd += x % 2;
    const int total = size(lambda);
    const long dimC = family == 'C' ? (sq + odd) / 2 : (sq - odd) / 2;
    const int rank = total / 2;
    return static_cast<int>((dimC - rank) / 2);
}

namespace {

Partition fromIncreasing(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= static_cast<int>(i);
    Partition p;
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (*it > 0) p.push_back(*it);
    return p;
}

// Splits lambda + (0, 1, 2, ...) (increasing, padded to the given parity of
// the number of parts) into its odd and even entries.
std::pair<Partition, Partition> leaderRows(const Partition& lam, bool oddCount) {
    std::vector<int> l(lam.rbegin(), lam.rend());
    if ((l.size() % 2 == 1) != oddCount) l.insert(l.begin(), 0);
    std::vector<int> odd, even;
    for (std::size_t i = 0; i < l.size(); ++i) {
        const int x = l[i] + static_cast<int>(i);
        if (x % 2) odd.push_back((x - 1) / 2);
        else even.push_back(x / 2);
    }
    return {fromIncreasing(odd), fromIncreasing(even)};
}

std::vector<int> row(const Partition& p, int len, int step, int offset) {
    std::vector<int> r(len, 0);
    const int k = static_cast<int>(p.size());
    if (k > len) throw ConsistencyError("symbol row too short");
    for (int i = 0; i < k; ++i) r[len - k + i] = p[k - 1 - i];
    for (int i = 0; i < len; ++i) r[i] += step * i + offset;
    return r;
}

struct SpringerSymbol {
    std::vector<int> top, bottom;
    std::vector<int> key() const {
        std::vector<int> e = top;
        e.insert(e.end(), bottom.begin(), bottom.end());
        std::sort(e.begin(), e.end());
        return e;
    }
};

SpringerSymbol springerSymbol(char fam, const Bipartition& b, int n) {
    const int m = n + 1;
    if (fam == 'B') return {row(b.xi, m + 1, 2, 0), row(b.eta, m, 2, 0)};
    if (fam == 'C') return {row(b.xi, m + 1, 2, 0), row(b.eta, m, 2, 1)};
    return {row(b.xi, m, 2, 0), row(b.eta, m, 2, 0)};
}

bool validJordanType(char fam, const Partition& lam) {
    std::map<int, int> mult;
    for (int x : lam) ++mult[x];
    for (auto [x, c] : mult) {
        if (fam == 'C' && x % 2 == 1 && c % 2 == 1) return false;
        if (fam != 'C' && x % 2 == 0 && c % 2 == 1) return false;
    }
    return true;
}

std::string dLabel(const Bipartition& b) {
    const int sx = size(b.xi), se = size(b.eta);
    if (sx < se || (sx == se && b.xi <= b.eta)) return bipartitionLabel(b);
    return bipartitionLabel({b.eta, b.xi});
}

// Local-system label of a member of a block relative to its leader: maximal
// runs of consecutive single entries are swapped between the rows.
std::string kappaLabel(char fam, const SpringerSymbol& leader, std::vector<SpringerSymbol> orientations) {
    std::vector<int> all = leader.key();
    std::map<int, int> cnt;
    for (int x : all) ++cnt[x];
    std::vector<std::vector<int>> intervals;
    for (auto [x, c] : cnt) {
        if (c != 1) continue;
        if (!intervals.empty() && intervals.back().back() == x - 1) intervals.back().push_back(x);
        else intervals.push_back({x});
    }
    auto inTop = [](const SpringerSymbol& s, int x) { return std::count(s.top.begin(), s.top.end(), x) > 0; };
    for (const auto& sym : orientations) {
        std::vector<bool> swapped;
        bool consistent = true;
        for (const auto& iv : intervals) {
            bool sw = inTop(sym, iv[0]) != inTop(leader, iv[0]);
            for (int x : iv) consistent = consistent && ((inTop(sym, x) != inTop(leader, x)) == sw);
            swapped.push_back(sw);
        }
        if (!consistent) continue;
        if (swapped[0]) {
            if (fam == 'D') continue;  // the other orientation covers it
            for (std::size_t i = 0; i < swapped.size(); ++i) swapped[i] = !swapped[i];
        }
        bool trivial = true;
        std::string lab = "(";
        for (std::size_t i = 1; i < swapped.size(); ++i) {
            if (i > 1) lab += ",";
            lab += swapped[i] ? "11" : "2";
            trivial = trivial && !swapped[i];
        }
        return trivial ? "" : lab + ")";
    }
    throw ConsistencyError("member of a Springer block is not an interval swap of its leader");
}

}  // namespace

SpringerDatum springerCorrespondence(const CharTable& t) {
    const CartanType& type = t.group().type();
    const char fam = type.family();
    const int n = type.n();
    SpringerDatum sd;
    sd.perChar.resize(t.size());

    if (fam == 'G') {
        const char* cls[6] = {"G_2", "G_2(a_1)", "G_2(a_1)", "~A_1", "A_1", "1"};
        const char* kap[6] = {"", "(21)", "", "", "", ""};
        const int du[6] = {0, 1, 1, 2, 3, 6};
        for (int i = 0; i < 6; ++i) sd.perChar[i] = {cls[i], kap[i], -1, du[i], kap[i][0] == 0};
        sd.convention = "G2: phi1,3' is the nontrivial local system on G_2(a_1)";
    } else if (fam == 'A') {
        for (std::size_t i = 0; i < t.size(); ++i) {
            const Partition& lam = t.param(i).lambda;
            sd.perChar[i] = {partitionLabel(lam), "", -1, springerFibreDimension('A', lam), true};
        }
        sd.convention = "A: chi_lambda (trivial = (n)) on the class of Jordan type lambda";
    } else if (fam == 'B' || fam == 'C' || fam == 'D') {
        const int total = fam == 'B' ? 2 * n + 1 : 2 * n;
        std::map<std::vector<int>, int> keyToLeader;  // symbol key -> character index of leader
        std::map<int, Partition> leaderClass;
        std::map<int, std::string> leaderLabel;
        for (const auto& lam : partitions(total)) {
            if (!validJordanType(fam, lam)) continue;
            bool veryEven = fam == 'D' && std::all_of(lam.begin(), lam.end(), [](int x) { return x % 2 == 0; });
            auto [odd, even] = leaderRows(lam, fam != 'D');
            Bipartition b = fam == 'C' ? Bipartition{even, odd} : Bipartition{odd, even};
            std::vector<std::pair<int, std::string>> leaders;  // (char, class label)
            if (veryEven) {
                if (b.xi != b.eta) throw ConsistencyError("very even class without a degenerate symbol");
                // The split character "xi·s" goes to class "lambda·s'" with
                // s' = s for n = 2 mod 4 and s' = -s for n = 0 mod 4.
                for (int s : {1, -1}) {
                    const int cs = n % 4 == 0 ? -s : s;
                    leaders.emplace_back(t.index(partitionLabel(b.xi) + (s > 0 ? "·+" : "·-")),
                                         partitionLabel(lam) + (cs > 0 ? "·+" : "·-"));
                }
            } else {
                const std::string lab = fam == 'D' ? dLabel(b) : bipartitionLabel(b);
                leaders.emplace_back(t.index(lab), partitionLabel(lam));
            }
            for (auto [ci, clab] : leaders) {
                std::vector<int> key = springerSymbol(fam, t.param(ci).bip, n).key();
                if (t.param(ci).split) key.push_back(1000 + t.param(ci).split);
                if (!keyToLeader.emplace(key, ci).second) throw ConsistencyError("two classes share a Springer symbol");
                leaderClass[ci] = lam;
                leaderLabel[ci] = clab;
                const int du = springerFibreDimension(fam, lam);
                sd.perChar[ci] = {clab, "", -1, du, true};
            }
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
            const CharParam& p = t.param(i);
            std::vector<int> key = springerSymbol(fam, p.bip, n).key();
            if (p.split) key.push_back(1000 + p.split);
            auto it = keyToLeader.find(key);
            if (it == keyToLeader.end()) throw ConsistencyError("no Springer class for " + t.row(i).label);
            if (it->second == static_cast<int>(i)) continue;
            const int li = it->second;
            const SpringerSymbol leader = springerSymbol(fam, t.param(li).bip, n);
            std::vector<SpringerSymbol> orient{springerSymbol(fam, p.bip, n)};
            if (fam == 'D') orient.push_back(springerSymbol(fam, {p.bip.eta, p.bip.xi}, n));
            sd.perChar[i] = {leaderLabel[li], kappaLabel(fam, leader, orient), -1, sd.perChar[li].du, false};
        }
        sd.convention = fam == 'B'   ? "B: leader of lambda from the odd/even split of lambda_i + i (odd entries -> xi)"
                        : fam == 'C' ? "C: leader of lambda from the odd/even split of lambda_i + i (even entries -> xi)"
                                     : "D: unordered leader pair; split xi·s on the very even class lambda·(-1)^{n/2+1}s";
    } else {
        throw CapabilityError("Springer correspondence of " + type.name() + " needs the data backend");
    }

    // Blocks and order.
    std::map<std::string, std::vector<int>> byClass;
    for (std::size_t i = 0; i < t.size(); ++i) byClass[sd.perChar[i].classLabel].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> blocks;
    for (auto& [lab, members] : byClass) {
        int leader = -1;
        for (int m : members)
            if (sd.perChar[m].leader) leader = m;
        if (leader < 0) throw ConsistencyError("Springer block " + lab + " without a leader");
        std::vector<int> rest;
        for (int m : members)
            if (m != leader) rest.push_back(m);
        std::sort(rest.begin(), rest.end(), [&](int a, int b) { return t.row(a).label < t.row(b).label; });
        rest.push_back(leader);
        for (int m : rest)
            if (sd.perChar[m].du != sd.perChar[leader].du) throw ConsistencyError("d_u differs inside a block");
        if (sd.perChar[leader].du != t.row(leader).b)
            throw ConsistencyError("d_u of " + lab + " differs from b of " + t.row(leader).label);
        blocks.push_back(rest);
    }
    std::sort(blocks.begin(), blocks.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        const auto& la = sd.perChar[a.back()];
        const auto& lb = sd.perChar[b.back()];
        if (la.du != lb.du) return la.du < lb.du;
        if (t.row(a.back()).a != t.row(b.back()).a) return t.row(a.back()).a < t.row(b.back()).a;
        return la.classLabel < lb.classLabel;
    });
    sd.blocks = blocks;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        for (int m : blocks[bi]) {
            sd.perChar[m].block = static_cast<int>(bi);
            sd.order.push_back(m);
        }
    return sd;
}

// ---------------------------------------------------------------------------
// Green functions

namespace {

using ZPoly = std::vector<Integer>;

LaurentPoly toLaurent(const ZPoly& p) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r.addTerm(static_cast<int>(i), p[i]);
    return r;
}

u64 evalMod(const LaurentPoly& f, u64 q0, u64 p) {
    u64 s = 0;
    for (const auto& [e, c] : f.terms()) {
        Integer r = c % Integer(static_cast<unsigned long>(p));
        if (r < 0) r += Integer(static_cast<unsigned long>(p));
        s = (s + modp::mulmod(r.get_ui(), modp::powmod(q0, e, p), p)) % p;
    }
    return s;
}

using ModMat = std::vector<std::vector<u64>>;

bool invertMod(ModMat a, ModMat& inv, u64 p) {
    const std::size_t n = a.size();
    inv.assign(n, std::vector<u64>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        const u64 iv = modp::invmod(a[c][c], p);
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] = modp::mulmod(a[c][j], iv, p);
            inv[c][j] = modp::mulmod(inv[c][j], iv, p);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const u64 f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = (a[r][j] + p - modp::mulmod(f, a[c][j], p)) % p;
                inv[r][j] = (inv[r][j] + p - modp::mulmod(f, inv[c][j], p)) % p;
            }
        }
    }
    return true;
}

// Solve at one point; matrices are in Springer-order positions.  Returns false
// if some Lambda block is singular here.
bool solveAt(const ModMat& omega, const std::vector<std::pair<int, int>>& blockRange, const std::vector<int>& du, u64 q0,
             u64 p, ModMat& P, ModMat& L) {
    const std::size_t n = omega.size();
    ModMat r = omega;
    P.assign(n, std::vector<u64>(n, 0));
    L.assign(n, std::vector<u64>(n, 0));
    for (std::size_t bi = blockRange.size(); bi-- > 0;) {
        const auto [s, e] = blockRange[bi];
        const int k = e - s;
        const u64 qd = modp::powmod(q0, du[bi], p);
        const u64 qdi = modp::invmod(qd, p);
        const u64 q2di = modp::mulmod(qdi, qdi, p);
        ModMat lc(k, std::vector<u64>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lc[i][j] = modp::mulmod(r[s + i][s + j], q2di, p);
        ModMat li;
        if (!invertMod(lc, li, p)) return false;
        for (int i = 0; i < k; ++i) {
            P[s + i][s + i] = qd;
            for (int j = 0; j < k; ++j) L[s + i][s + j] = lc[i][j];
        }
        // P[a][c] = R[a][c] Lc^{-1} q^{-d};  Y[a] = P[a][c] Lc = R[a][c] q^{-d}
        std::vector<std::vector<u64>> y(s, std::vector<u64>(k));
        for (int a = 0; a < s; ++a) {
            for (int j = 0; j < k; ++j) y[a][j] = modp::mulmod(r[a][s + j], qdi, p);
            for (int j = 0; j < k; ++j) {
                u64 acc = 0;
                for (int i = 0; i < k; ++i) acc = (acc + modp::mulmod(r[a][s + i], li[i][j], p)) % p;
                P[a][s + j] = modp::mulmod(acc, qdi, p);
            }
        }
        for (int a = 0; a < s; ++a)
            for (int b = a; b < s; ++b) {
                u64 acc = 0;
                for (int j = 0; j < k; ++j) acc = (acc + modp::mulmod(y[a][j], P[b][s + j], p)) % p;
                r[a][b] = (r[a][b] + p - acc) % p;
                r[b][a] = r[a][b];
            }
    }
    return true;
}

}  // namespace

PolyMatrix omegaMatrix(const CharTable& t) {
    const WeylGroup& w = t.group();
    const auto traces = coinvariantTraces(w);
    const int N = w.numPositiveRoots();
    const std::size_t nc = w.numClasses(), n = t.size();
    int maxDeg = 0;
    for (const auto& f : traces) maxDeg = std::max(maxDeg, f.maxExp());
    std::vector<std::vector<__int128>> tr(nc, std::vector<__int128>(maxDeg + 1, 0));
    for (std::size_t c = 0; c < nc; ++c) {
        const long sgn = w.length(w.classes()[c].rep) % 2 ? -1 : 1;
        for (const auto& [e, v] : traces[c].terms())
            tr[c][e] = static_cast<__int128>(v.get_si()) * sgn * static_cast<long>(w.classes()[c].size);
    }
    PolyMatrix om(n, std::vector<LaurentPoly>(n));
    const __int128 order = static_cast<__int128>(w.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            LaurentPoly f;
            for (int e = 0; e <= maxDeg; ++e) {
                __int128 s = 0;
                for (std::size_t c = 0; c < nc; ++c)
                    s += tr[c][e] * (static_cast<__int128>(t.row(i).values[c]) * t.row(j).values[c]);
                if (s % order != 0) throw ConsistencyError("Omega entry not integral");
                s /= order;
                if (s != 0) f.addTerm(e + N, Integer(static_cast<long>(s)));
            }
            om[i][j] = om[j][i] = f;
        }
    return om;
}

GreenTable greenTable(const CharTable& t, const SpringerDatum& sd) {
    const WeylGroup& w = t.group();
    const std::size_t n = t.size();
    const int N = w.numPositiveRoots();
    const PolyMatrix omega = omegaMatrix(t);
    const auto& order = sd.order;
    std::vector<std::pair<int, int>> ranges;
    std::vector<int> du;
    int pos = 0;
    for (const auto& b : sd.blocks) {
        ranges.emplace_back(pos, pos + static_cast<int>(b.size()));
        pos += static_cast<int>(b.size());
        du.push_back(sd.perChar[b.back()].du);
    }
    const int npts = 2 * N + 1;
    // residues layout: P entries (n*n) then L entries (n*n), each npts coefficients.
    modp::CrtAccumulator crt;
    for (int pi = 0;; ++pi) {
        const u64 p = modp::prime(pi);
        std::vector<u64> xs;
        std::vector<ModMat> Ps, Ls;
        for (u64 q0 = 2; static_cast<int>(xs.size()) < npts; ++q0) {
            ModMat om(n, std::vector<u64>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) om[i][j] = evalMod(omega[order[i]][order[j]], q0, p);
            ModMat P, L;
            if (!solveAt(om, ranges, du, q0, p, P, L)) continue;
            xs.push_back(q0);
            Ps.push_back(std::move(P));
            Ls.push_back(std::move(L));
        }
        std::vector<u64> residues;
        residues.reserve(2 * n * n * npts);
        std::vector<u64> ys(npts);
        for (int which = 0; which < 2; ++which)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    for (int k = 0; k < npts; ++k) ys[k] = which == 0 ? Ps[k][i][j] : Ls[k][i][j];
                    auto c = modp::interpolate(xs, ys, p);
                    residues.insert(residues.end(), c.begin(), c.end());
                }
        if (crt.add(residues, p) && pi >= 1) break;
        if (pi > 12) throw ConsistencyError("Green functions did not stabilize");
    }
    GreenTable g;
    g.P.assign(n, std::vector<LaurentPoly>(n));
    g.Lambda.assign(n, std::vector<LaurentPoly>(n));
    const auto& vals = crt.values();
    std::size_t at = 0;
    for (int which = 0; which < 2; ++which)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ZPoly z(vals.begin() + at, vals.begin() + at + npts);
                at += npts;
                (which == 0 ? g.P : g.Lambda)[order[i]][order[j]] = toLaurent(z);
            }
    g.ungradedP.assign(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.ungradedP[i][j] = g.P[i][j].atOne().get_si();
    return g;
}

bool verifyGreenTable(const CharTable& t, const GreenTable& g) {
    const std::size_t n = t.size();
    const PolyMatrix omega = omegaMatrix(t);
    auto l1 = [](const LaurentPoly& f) {
        Integer s = 0;
        for (const auto& [e, c] : f.terms()) s += abs(c);
        return s;
    };
    Integer maxP = 0, maxL = 0, maxO = 0;
    int deg = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            maxP = std::max(maxP, l1(g.P[i][j]));
            maxL = std::max(maxL, l1(g.Lambda[i][j]));
            maxO = std::max(maxO, l1(omega[i][j]));
            if (g.P[i][j].minExp() < 0 || g.Lambda[i][j].minExp() < 0) return false;
            deg = std::max({deg, 2 * g.P[i][j].maxExp() + g.Lambda[i][j].maxExp(), omega[i][j].maxExp()});
        }
    // Bound on any coefficient of P Lambda P^T - Omega.
    const Integer bound = Integer(static_cast<unsigned long>(n * n)) * maxP * maxP * maxL + maxO;
    Integer modulus = 1;
    for (int pi = 0; modulus <= 2 * bound; ++pi) {
        const u64 p = modp::prime(20 + pi);
        modulus *= Integer(static_cast<unsigned long>(p));
        for (int k = 0; k <= deg; ++k) {
            const u64 q0 = static_cast<u64>(k) + 2;
            ModMat P(n, std::vector<u64>(n)), L(n, std::vector<u64>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    P[i][j] = evalMod(g.P[i][j], q0, p);
                    L[i][j] = evalMod(g.Lambda[i][j], q0, p);
                }
            ModMat PL(n, std::vector<u64>(n, 0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t m = 0; m < n; ++m)
                    if (P[i][m])
                        for (std::size_t j = 0; j < n; ++j) PL[i][j] = (PL[i][j] + P[i][m] * L[m][j]) % p;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    u64 s = 0;
                    for (std::size_t m = 0; m < n; ++m) s = (s + PL[i][m] * P[j][m]) % p;
                    if (s != evalMod(omega[i][j], q0, p)) return false;
                }
        }
    }
    return true;
}

ClassFunction sprFunction(const CharTable& t, const GreenTable& g, int psi) {
    std::vector<long> v(t.group().numClasses(), 0);
    for (std::size_t chi = 0; chi < t.size(); ++chi)
        for (std::size_t c = 0; c < v.size(); ++c) v[c] += g.ungradedP[chi][psi] * t.row(chi).values[c];
    return classFunction(v);
}

}  // namespace alphalab
