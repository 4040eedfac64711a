#include "alphalab/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "alphalab/errors.hpp"

namespace alphalab {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1000)) * 1099511628211ull;
        return h;
    }
};

Matrix irreducibleCartan(char fam, int n) {
    Matrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (fam) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[0][1] = -2;
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[1][0] = -2;
            break;
        case 'D':
            link(0, 2);
            for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'G':
            a[0][1] = -1;
            a[1][0] = -3;
            break;
        case 'F':
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[2][1] = -2;
            break;
        case 'E':
            link(0, 2);
            link(1, 3);
            link(2, 3);
            for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
            break;
        default:
            throw CapabilityError(std::string("unknown family ") + fam);
    }
    return a;
}

// Coefficients c_0..c_r of det(1 - q M) via Faddeev-LeVerrier.
std::vector<long long> detOneMinusQ(const Matrix& m) {
    const int r = static_cast<int>(m.size());
    std::vector<long long> c(r + 1, 0);
    c[0] = 1;
    std::vector<std::vector<long long>> mk(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i) mk[i][i] = 1;
    for (int k = 1; k <= r; ++k) {
        std::vector<std::vector<long long>> am(r, std::vector<long long>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int l = 0; l < r; ++l) {
                if (mk[i][l] == 0) continue;
                for (int j = 0; j < r; ++j) am[i][j] += mk[i][l] * m[l][j];
            }
        long long tr = 0;
        for (int i = 0; i < r; ++i) tr += am[i][i];
        if (tr % k != 0) throw ConsistencyError("characteristic polynomial: inexact division");
        c[k] = -tr / k;
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) mk[i][j] = am[i][j];
            mk[i][i] += c[k];
        }
    }
    // det(xI - M) = sum c_k x^{r-k}; det(1 - qM) = sum c_k q^k.
    return c;
}

}  // namespace

CartanType CartanType::parse(const std::string& text) {
    std::vector<CartanComponent> comps;
    std::size_t i = 0;
    if (text.empty()) throw ParseError("empty Cartan type");
    while (i < text.size()) {
        char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        if (fam == 'H' || fam == 'I') throw CapabilityError("non-crystallographic types unsupported");
        if (fam < 'A' || fam > 'G') throw ParseError("bad Cartan type '" + text + "' at position " + std::to_string(i));
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ParseError("missing rank in Cartan type '" + text + "'");
        int n = std::stoi(text.substr(start, i - start));
        bool ok = (fam == 'A' && n >= 1) || ((fam == 'B' || fam == 'C') && n >= 2) || (fam == 'D' && n >= 4) ||
                  (fam == 'G' && n == 2) || (fam == 'F' && n == 4) || (fam == 'E' && n >= 6 && n <= 8);
        if (!ok) throw ParseError("no Cartan type " + text.substr(start - 1, i - start + 1));
        comps.push_back({fam, n});
        if (i < text.size()) {
            if (text[i] != 'x' && text[i] != '*') throw ParseError("bad separator in Cartan type '" + text + "'");
            ++i;
        }
    }
    return CartanType(std::move(comps));
}

std::string CartanType::name() const {
    if (components_.empty()) return "A0";
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) s += "x";
        s += components_[i].family;
        s += std::to_string(components_[i].rank);
    }
    return s;
}

int CartanType::rank() const {
    int r = 0;
    for (const auto& c : components_) r += c.rank;
    return r;
}

bool CartanType::isComputed() const {
    for (const auto& c : components_)
        if (c.family == 'E' || c.family == 'F' || c.rank > 7) return false;
    return true;
}

Matrix cartanMatrix(const CartanType& t) {
    const int r = t.rank();
    Matrix a(r, std::vector<int>(r, 0));
    int off = 0;
    for (const auto& c : t.components()) {
        Matrix b = irreducibleCartan(c.family, c.rank);
        for (int i = 0; i < c.rank; ++i)
            for (int j = 0; j < c.rank; ++j) a[off + i][off + j] = b[i][j];
        off += c.rank;
    }
    return a;
}

CartanType recognizeCartan(const Matrix& a) {
    const int r = static_cast<int>(a.size());
    std::vector<int> comp(r, -1);
    std::vector<CartanComponent> out;
    for (int i = 0; i < r; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> nodes{i};
        comp[i] = i;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (int j = 0; j < r; ++j)
                if (a[nodes[k]][j] != 0 && comp[j] < 0) {
                    comp[j] = i;
                    nodes.push_back(j);
                }
        const int n = static_cast<int>(nodes.size());
        int maxDeg = 0, branch = -1;
        bool triple = false, dbl = false;
        std::vector<int> deg(r, 0);
        for (int x : nodes)
            for (int y : nodes) {
                if (x == y || a[x][y] == 0) continue;
                ++deg[x];
                if (a[x][y] == -3) triple = true;
                if (a[x][y] == -2) dbl = true;
            }
        for (int x : nodes) {
            maxDeg = std::max(maxDeg, deg[x]);
            if (deg[x] == 3) branch = x;
        }
        char fam = 'A';
        if (triple) {
            fam = 'G';
        } else if (dbl) {
            if (n == 2) {
                fam = a[nodes[0]][nodes[1]] == -2 ? 'B' : 'C';
            } else {
                // Count the short roots: the simply-laced piece on the short side of the bond.
                int sideShort = 0;
                for (int x : nodes)
                    for (int y : nodes)
                        if (a[x][y] == -2) sideShort = x;
                // Flood from the short end of the double bond avoiding the bond.
                std::vector<bool> seen(r, false);
                std::vector<int> stack{sideShort};
                seen[sideShort] = true;
                int count = 0;
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    ++count;
                    for (int y : nodes)
                        if (!seen[y] && a[x][y] == -1 && a[y][x] == -1) {
                            seen[y] = true;
                            stack.push_back(y);
                        }
                }
                if (n == 4 && count == 2)
                    fam = 'F';
                else
                    fam = count == 1 ? 'B' : 'C';
            }
        } else if (maxDeg <= 2) {
            fam = 'A';
        } else {
            std::vector<int> arms;
            for (int y : nodes) {
                if (y == branch || a[branch][y] == 0) continue;
                int len = 1, prev = branch, cur = y;
                while (true) {
                    int nxt = -1;
                    for (int z : nodes)
                        if (z != prev && z != cur && a[cur][z] != 0) nxt = z;
                    if (nxt < 0) break;
                    prev = cur;
                    cur = nxt;
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            fam = (arms[0] == 1 && arms[1] == 1) ? 'D' : 'E';
        }
        out.push_back({fam, n});
    }
    return CartanType(std::move(out));
}

WeylGroup::WeylGroup(const CartanType& t) : WeylGroup(t, cartanMatrix(t)) {}

WeylGroup::WeylGroup(const CartanType& t, const Matrix& cartan) : type_(t), cartan_(cartan) {
    rank_ = static_cast<int>(cartan_.size());
    if (rank_ > 8) throw CapabilityError("rank too large for enumeration");
    build();
    buildRoots();
    buildClasses();
}

void WeylGroup::build() {
    const int r = rank_;
    // Orbit of rho in fundamental-weight coordinates.  s_j(l) = l - l_j * alpha_j,
    // alpha_j having coordinates cartan[i][j].
    std::unordered_map<std::vector<int>, Elt, VecHash> index;
    std::vector<std::vector<int>> pts;
    std::vector<int> len;
    pts.emplace_back(r, 1);
    len.push_back(0);
    index.emplace(pts[0], 0);
    std::vector<std::vector<Elt>> lm(r);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        for (int s = 0; s < r; ++s) {
            std::vector<int> p = pts[k];
            int c = p[s];
            for (int i = 0; i < r; ++i) p[i] -= c * cartan_[i][s];
            auto it = index.find(p);
            Elt id;
            if (it == index.end()) {
                id = static_cast<Elt>(pts.size());
                index.emplace(p, id);
                pts.push_back(std::move(p));
                len.push_back(len[k] + 1);
            } else {
                id = it->second;
            }
            lm[s].push_back(id);
        }
        if (pts.size() > 50'000'000) throw CapabilityError("group too large");
    }
    const std::size_t n = pts.size();
    // Canonical words in BFS order: first letter is the least left descent.
    std::vector<std::vector<std::uint8_t>> wd(n);
    for (std::size_t k = 1; k < n; ++k) {
        int s = 0;
        while (pts[k][s] >= 0) ++s;
        const auto& rest = wd[lm[s][k]];
        wd[k].reserve(rest.size() + 1);
        wd[k].push_back(static_cast<std::uint8_t>(s));
        wd[k].insert(wd[k].end(), rest.begin(), rest.end());
    }
    std::vector<Elt> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Elt a, Elt b) {
        if (len[a] != len[b]) return len[a] < len[b];
        return wd[a] < wd[b];
    });
    std::vector<Elt> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = static_cast<Elt>(k);

    length_.resize(n);
    wordOffset_.resize(n + 1);
    lmul_.resize(r * n);
    std::uint64_t off = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Elt old = order[k];
        length_[k] = static_cast<std::uint8_t>(len[old]);
        wordOffset_[k] = off;
        off += wd[old].size();
        for (int s = 0; s < r; ++s) lmul_[s * n + k] = pos[lm[s][old]];
    }
    wordOffset_[n] = off;
    words_.resize(off);
    for (std::size_t k = 0; k < n; ++k) std::copy(wd[order[k]].begin(), wd[order[k]].end(), words_.begin() + wordOffset_[k]);

    inv_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        Elt x = 0;
        for (std::uint64_t j = wordOffset_[k]; j < wordOffset_[k + 1]; ++j) x = lmul(words_[j], x);
        inv_[k] = x;
    }
    rmul_.resize(r * n);
    for (int s = 0; s < r; ++s)
        for (std::size_t k = 0; k < n; ++k) rmul_[s * n + k] = inv_[lmul(s, inv_[k])];
}

void WeylGroup::buildRoots() {
    const int r = rank_;
    std::vector<std::vector<int>> roots;
    std::unordered_map<std::vector<int>, int, VecHash> seen;
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        seen.emplace(e, 0);
        roots.push_back(e);
    }
    for (std::size_t k = 0; k < roots.size(); ++k)
        for (int s = 0; s < r; ++s) {
            std::vector<int> b = roots[k];
            int c = 0;
            for (int j = 0; j < r; ++j) c += cartan_[s][j] * b[j];
            b[s] -= c;
            if (seen.emplace(b, 0).second) roots.push_back(b);
        }
    for (auto& b : roots)
        if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) posRoots_.push_back(b);
    std::sort(posRoots_.begin(), posRoots_.end(), [](const auto& a, const auto& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    // Exponents are the partition dual to the numbers of roots of each height.
    std::vector<int> byHeight;
    for (const auto& b : posRoots_) {
        int h = std::accumulate(b.begin(), b.end(), 0);
        if (static_cast<int>(byHeight.size()) < h) byHeight.resize(h, 0);
        ++byHeight[h - 1];
    }
    for (int i = 0; i < r; ++i) {
        int m = 0;
        for (int c : byHeight)
            if (c > i) ++m;
        degrees_.push_back(m + 1);
    }
    std::sort(degrees_.begin(), degrees_.end());
}

void WeylGroup::buildClasses() {
    const std::size_t n = size();
    std::vector<Elt> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<Elt(Elt)> find = [&](Elt x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int s = 0; s < rank_; ++s)
        for (Elt w = 0; w < n; ++w) {
            Elt a = find(w), b = find(lmul(s, rmul(w, s)));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    classOf_.assign(n, -1);
    std::vector<int> rootToClass(n, -1);
    for (Elt w = 0; w < n; ++w) {
        Elt root = find(w);
        if (rootToClass[root] < 0) {
            rootToClass[root] = static_cast<int>(classes_.size());
            classes_.push_back({w, 0, wordString(w)});
        }
        classOf_[w] = rootToClass[root];
        ++classes_[classOf_[w]].size;
    }
}

std::vector<int> WeylGroup::word(Elt w) const {
    return std::vector<int>(words_.begin() + wordOffset_[w], words_.begin() + wordOffset_[w + 1]);
}

std::string WeylGroup::wordString(Elt w) const {
    if (w == 0) return "e";
    std::string s;
    for (std::uint64_t j = wordOffset_[w]; j < wordOffset_[w + 1]; ++j) s += static_cast<char>('1' + words_[j]);
    return s;
}

Elt WeylGroup::multiply(Elt a, Elt b) const {
    auto wa = word(a);
    Elt x = b;
    for (auto it = wa.rbegin(); it != wa.rend(); ++it) x = lmul(*it, x);
    return x;
}

Elt WeylGroup::fromWord(const std::vector<int>& gens) const {
    Elt x = 0;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
        if (*it < 0 || *it >= rank_) throw ParseError("generator index out of range");
        x = lmul(*it, x);
    }
    return x;
}

Elt WeylGroup::parseWord(const std::string& text) const {
    if (text == "e" || text == "1_W" || text.empty()) return 0;
    if (text == "w0" || text == "w_0") return longest();
    std::vector<int> g;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c < '1' || c > '9' || c - '1' >= rank_)
            throw ParseError("bad element word '" + text + "' at position " + std::to_string(i));
        g.push_back(c - '1');
    }
    return fromWord(g);
}

std::uint32_t WeylGroup::leftDescents(Elt w) const {
    std::uint32_t m = 0;
    for (int s = 0; s < rank_; ++s)
        if (isLeftDescent(s, w)) m |= 1u << s;
    return m;
}

std::uint32_t WeylGroup::rightDescents(Elt w) const {
    std::uint32_t m = 0;
    for (int s = 0; s < rank_; ++s)
        if (isRightDescent(w, s)) m |= 1u << s;
    return m;
}

int WeylGroup::firstLeftDescent(Elt w) const {
    for (int s = 0; s < rank_; ++s)
        if (isLeftDescent(s, w)) return s;
    return -1;
}

bool WeylGroup::bruhatLeq(Elt y, Elt z) const {
    while (true) {
        if (y == z || y == 0) return true;
        if (length_[y] >= length_[z]) return false;
        int s = firstLeftDescent(z);
        z = lmul(s, z);
        if (isLeftDescent(s, y)) y = lmul(s, y);
    }
}

std::vector<bool> WeylGroup::lowerIntervalMask(Elt z) const {
    std::vector<bool> in(size(), false);
    std::vector<Elt> members{0};
    in[0] = true;
    auto wd = word(z);
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) {
        const std::size_t cur = members.size();
        for (std::size_t k = 0; k < cur; ++k) {
            Elt x = lmul(*it, members[k]);
            if (!in[x]) {
                in[x] = true;
                members.push_back(x);
            }
        }
    }
    return in;
}

std::vector<Elt> WeylGroup::lowerInterval(Elt z) const {
    auto in = lowerIntervalMask(z);
    std::vector<Elt> out;
    for (Elt x = 0; x <= z; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

bool WeylGroup::isRationallySmoothByInterval(Elt z) const {
    auto in = lowerIntervalMask(z);
    std::vector<long> counts(length_[z] + 1, 0);
    for (Elt x = 0; x <= z; ++x)
        if (in[x]) ++counts[length_[x]];
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != counts[counts.size() - 1 - i]) return false;
    return true;
}

Matrix WeylGroup::reflectionMatrix(Elt w) const {
    const int r = rank_;
    Matrix m(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 1;
    // Column j holds w(alpha_j).  Left-multiply by s_i for the word read right to left.
    auto wd = word(w);
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) {
        int s = *it;
        for (int j = 0; j < r; ++j) {
            int c = 0;
            for (int k = 0; k < r; ++k) c += cartan_[s][k] * m[k][j];
            m[s][j] -= c;
        }
    }
    return m;
}

LaurentPoly WeylGroup::charPolyReflection(Elt w) const {
    auto c = detOneMinusQ(reflectionMatrix(w));
    LaurentPoly p;
    for (std::size_t k = 0; k < c.size(); ++k) p.addTerm(static_cast<int>(k), Integer(static_cast<long>(c[k])));
    return p;
}

int WeylGroup::inversionCount(Elt w) const {
    Matrix m = reflectionMatrix(w);
    int count = 0;
    for (const auto& b : posRoots_) {
        bool neg = false;
        for (int i = 0; i < rank_; ++i) {
            long c = 0;
            for (int j = 0; j < rank_; ++j) c += static_cast<long>(m[i][j]) * b[j];
            if (c < 0) neg = true;
        }
        if (neg) ++count;
    }
    return count;
}

LaurentPoly WeylGroup::poincarePolynomial() const {
    std::vector<long> c(length_.empty() ? 1 : length_.back() + 1, 0);
    for (auto l : length_) ++c[l];
    return LaurentPoly::fromCoeffs(c);
}

Parabolic makeParabolic(const WeylGroup& w, const std::vector<int>& subset) {
    Parabolic p;
    p.subset = subset;
    const int k = static_cast<int>(subset.size());
    Matrix sub(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = w.cartan()[subset[i]][subset[j]];
    CartanType t = recognizeCartan(sub);
    auto g = std::make_shared<WeylGroup>(t, sub);
    p.embed.resize(g->size());
    for (Elt x = 0; x < g->size(); ++x) {
        auto wd = g->word(x);
        for (int& s : wd) s = subset[s];
        p.embed[x] = w.fromWord(wd);
    }
    p.fusion.resize(g->numClasses());
    for (std::size_t c = 0; c < g->numClasses(); ++c) p.fusion[c] = w.classOf(p.embed[g->classes()[c].rep]);
    p.group = std::move(g);
    return p;
}

std::vector<Parabolic> standardParabolics(const WeylGroup& w) {
    std::vector<Parabolic> out;
    const int r = w.rank();
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) subset.push_back(i);
        out.push_back(makeParabolic(w, subset));
    }
    return out;
}

}  // namespace alphalab
