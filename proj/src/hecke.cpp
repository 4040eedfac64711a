#include "alphalab/hecke.hpp"

#include <algorithm>
#include <functional>

#include "alphalab/errors.hpp"

namespace alphalab {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

LaurentPoly toLaurent(const QPoly& p) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r.addTerm(static_cast<int>(i), Integer(static_cast<long>(p[i])));
    return r;
}

HeckeElt HeckeElt::basis(const WeylGroup& w, Elt x) {
    HeckeElt h(w);
    h.add(x, LaurentPoly(1));
    return h;
}

LaurentPoly HeckeElt::coeff(Elt x) const {
    auto it = coords_.find(x);
    return it == coords_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(Elt x, const LaurentPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = coords_.emplace(x, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) coords_.erase(it);
    }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
    if (o.group_ != group_) throw ConsistencyError("Hecke elements of different groups");
    for (const auto& [x, c] : o.coords_) add(x, c);
    return *this;
}

HeckeElt& HeckeElt::operator*=(const LaurentPoly& c) {
    HeckeElt r(*group_);
    for (const auto& [x, a] : coords_) r.add(x, a * c);
    coords_ = std::move(r.coords_);
    return *this;
}

HeckeElt HeckeElt::timesSimple(int s) const {
    static const LaurentPoly vv = LaurentPoly::monomial(1, 2);
    static const LaurentPoly vvm1 = LaurentPoly::monomial(1, 2) - LaurentPoly(1);
    HeckeElt r(*group_);
    for (const auto& [w, c] : coords_) {
        Elt ws = group_->rmul(w, s);
        if (group_->length(ws) > group_->length(w)) {
            r.add(ws, c);
        } else {
            r.add(w, c * vvm1);
            r.add(ws, c * vv);
        }
    }
    return r;
}

HeckeElt heckeMultiply(const HeckeElt& a, const HeckeElt& b) {
    if (&a.group() != &b.group()) throw ConsistencyError("Hecke elements of different groups");
    const WeylGroup& w = a.group();
    HeckeElt out(w);
    for (const auto& [y, c] : b.coords()) {
        HeckeElt t = a;
        for (int s : w.word(y)) t = t.timesSimple(s);
        t *= c;
        out += t;
    }
    return out;
}

std::uint32_t KLTable::intern(const QPoly& p) {
    auto it = index_.find(p);
    if (it != index_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(pool_.size());
    pool_.push_back(p);
    index_.emplace(p, id);
    return id;
}

KLTable::KLTable(const WeylGroup& w) : group_(&w), n_(w.size()) {
    if (n_ > kMaxSize) throw CapabilityError("KL table limited to groups of order <= " + std::to_string(kMaxSize));
    intern(QPoly{});
    intern(QPoly{1});
    table_.assign(n_ * n_, 0);
    muLists_.resize(n_);
    table_[0] = 1;

    QPoly acc;
    for (Elt z = 1; z < n_; ++z) {
        const int s = w.firstLeftDescent(z);
        const Elt v = w.lmul(s, z);
        const int lz = w.length(z);
        std::uint32_t* rowZ = &table_[static_cast<std::size_t>(z) * n_];
        const std::uint32_t* rowV = &table_[static_cast<std::size_t>(v) * n_];
        std::vector<std::pair<Elt, long>> terms;
        for (const auto& [y, m] : muLists_[v])
            if (w.isLeftDescent(s, y)) terms.emplace_back(y, m);
        for (Elt x = 0; x <= z; ++x) {
            if (!w.isLeftDescent(s, x)) continue;
            const Elt sx = w.lmul(s, x);
            if (rowV[sx] == 0) continue;
            acc.assign(lz / 2 + 2, 0);
            const QPoly& a = pool_[rowV[sx]];
            for (std::size_t i = 0; i < a.size(); ++i) acc[i] += a[i];
            const QPoly& b = pool_[rowV[x]];
            for (std::size_t i = 0; i < b.size(); ++i) acc[i + 1] += b[i];
            for (const auto& [y, m] : terms) {
                std::uint32_t id = table_[static_cast<std::size_t>(y) * n_ + x];
                if (id == 0) continue;
                const QPoly& c = pool_[id];
                const int sh = (lz - w.length(y)) / 2;
                for (std::size_t i = 0; i < c.size(); ++i) acc[i + sh] -= m * c[i];
            }
            trim(acc);
            if (acc.empty() || acc[0] != 1) throw ConsistencyError("KL polynomial with constant term != 1");
            if (x != z && 2 * (static_cast<int>(acc.size()) - 1) > lz - w.length(x) - 1)
                throw ConsistencyError("KL polynomial degree bound violated");
            std::uint32_t id = intern(acc);
            rowZ[x] = id;
            rowZ[sx] = id;
        }
        for (Elt y = 0; y < z; ++y) {
            const int d = lz - w.length(y);
            if (rowZ[y] == 0 || d % 2 == 0) continue;
            const QPoly& p = pool_[rowZ[y]];
            if (static_cast<int>(p.size()) - 1 == (d - 1) / 2) muLists_[z].emplace_back(y, static_cast<long>(p.back()));
        }
    }
}

long KLTable::mu(Elt y, Elt z) const {
    if (y == z) return 0;
    if (y > z) std::swap(y, z);
    for (const auto& [x, m] : muLists_[z])
        if (x == y) return m;
    return 0;
}

bool KLTable::isRationallySmooth(Elt z) const {
    const std::uint32_t* row = &table_[static_cast<std::size_t>(z) * n_];
    for (std::size_t x = 0; x < n_; ++x)
        if (row[x] > 1) return false;
    return true;
}

HeckeElt klBasisElement(const KLTable& kl, Elt z) {
    const WeylGroup& w = kl.group();
    HeckeElt h(w);
    const int lz = w.length(z);
    for (Elt y = 0; y <= z; ++y) {
        if (!kl.leq(y, z)) continue;
        h.add(y, kl.klPolynomial(y, z).substitutePower(2).shifted(-lz));
    }
    return h;
}

CellPartition computeCells(const KLTable& kl, std::size_t maxSize) {
    const WeylGroup& w = kl.group();
    const std::size_t n = w.size();
    if (n > maxSize) throw CapabilityError("cell computation limited to groups of order <= " + std::to_string(maxSize));
    // Arc x -> y means x <=_LR y.
    std::vector<std::vector<Elt>> arcs(n);
    auto relate = [&](Elt x, Elt y) {
        const std::uint32_t lx = w.leftDescents(x), ly = w.leftDescents(y);
        const std::uint32_t rx = w.rightDescents(x), ry = w.rightDescents(y);
        if ((lx & ~ly) || (rx & ~ry)) arcs[x].push_back(y);
    };
    for (Elt y = 0; y < n; ++y)
        for (const auto& [x, m] : kl.muList(y)) {
            relate(x, y);
            relate(y, x);
        }
    // Tarjan's strongly connected components.
    std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> onStack(n, false);
    std::vector<Elt> stack;
    int counter = 0, ncomp = 0;
    std::function<void(Elt)> dfs = [&](Elt u) {
        idx[u] = low[u] = counter++;
        stack.push_back(u);
        onStack[u] = true;
        for (Elt t : arcs[u]) {
            if (idx[t] < 0) {
                dfs(t);
                low[u] = std::min(low[u], low[t]);
            } else if (onStack[t]) {
                low[u] = std::min(low[u], idx[t]);
            }
        }
        if (low[u] == idx[u]) {
            while (true) {
                Elt t = stack.back();
                stack.pop_back();
                onStack[t] = false;
                comp[t] = ncomp;
                if (t == u) break;
            }
            ++ncomp;
        }
    };
    for (Elt u = 0; u < n; ++u)
        if (idx[u] < 0) dfs(u);
    // Renumber cells by smallest element.
    std::vector<int> renum(ncomp, -1);
    CellPartition cp;
    cp.cellOf.resize(n);
    for (Elt u = 0; u < n; ++u) {
        if (renum[comp[u]] < 0) {
            renum[comp[u]] = static_cast<int>(cp.blocks.size());
            cp.blocks.emplace_back();
        }
        cp.cellOf[u] = renum[comp[u]];
        cp.blocks[cp.cellOf[u]].push_back(u);
    }
    const std::size_t k = cp.blocks.size();
    cp.leq.assign(k, std::vector<bool>(k, false));
    std::vector<std::vector<int>> succ(k);
    for (Elt u = 0; u < n; ++u)
        for (Elt t : arcs[u])
            if (cp.cellOf[u] != cp.cellOf[t]) succ[cp.cellOf[u]].push_back(cp.cellOf[t]);
    for (std::size_t a = 0; a < k; ++a) {
        std::vector<int> todo{static_cast<int>(a)};
        cp.leq[a][a] = true;
        while (!todo.empty()) {
            int c = todo.back();
            todo.pop_back();
            for (int d : succ[c])
                if (!cp.leq[a][d]) {
                    cp.leq[a][d] = true;
                    todo.push_back(d);
                }
        }
    }
    return cp;
}

}  // namespace alphalab
