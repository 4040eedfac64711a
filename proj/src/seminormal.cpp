#include "alphalab/seminormal.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "alphalab/errors.hpp"

namespace alphalab {

using modp::u64;

u64 SnEntry::eval(u64 q, u64 p) const {
    u64 val = 0;
    auto ratio = [&](int kk) {
        u64 r = modp::powmod(q, kk, p);
        return sigma < 0 ? (p - r) % p : r;
    };
    auto x = [&](u64 r) {
        u64 num = modp::mulmod((q + p - 1) % p, r, p);
        return modp::mulmod(num, modp::invmod((r + p - 1) % p, p), p);
    };
    switch (kind) {
        case Zero:
            return 0;
        case Poly: {
            u64 pw = 1;
            for (long c : poly) {
                val = (val + modp::mulmod(modp::reduce(c, p), pw, p)) % p;
                pw = modp::mulmod(pw, q, p);
            }
            break;
        }
        case Diag:
            val = x(ratio(k));
            break;
        case Partner:
            val = (modp::mulmod(x(ratio(k)), x(ratio(-k)), p) + q) % p;
            break;
        case HalfQ1:
            val = modp::mulmod((q + 1) % p, modp::invmod(2, p), p);
            break;
    }
    return mult < 0 ? (p - val) % p : val;
}

namespace {

struct Box {
    int comp, row, col;
    bool operator<(const Box& o) const { return std::tie(comp, row, col) < std::tie(o.comp, o.row, o.col); }
    bool operator==(const Box& o) const = default;
};

using Tableau = std::vector<Box>;  // position of each letter

std::vector<Tableau> standardBitableaux(const Partition& xi, const Partition& eta) {
    const int n = size(xi) + size(eta);
    std::vector<Tableau> out;
    std::vector<int> fill[2] = {std::vector<int>(xi.size(), 0), std::vector<int>(eta.size(), 0)};
    const Partition* shape[2] = {&xi, &eta};
    Tableau cur;
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int c = 0; c < 2; ++c)
            for (std::size_t r = 0; r < shape[c]->size(); ++r) {
                if (fill[c][r] >= (*shape[c])[r]) continue;
                if (r > 0 && fill[c][r - 1] <= fill[c][r]) continue;
                cur.push_back({c, static_cast<int>(r), fill[c][r]});
                ++fill[c][r];
                rec();
                --fill[c][r];
                cur.pop_back();
            }
    };
    rec();
    return out;
}

SnEntry poly(std::vector<long> c) {
    SnEntry e;
    e.kind = SnEntry::Poly;
    e.poly = std::move(c);
    return e;
}

struct TableauModel {
    std::vector<Tableau> tabs;
    std::map<Tableau, int> index;
    int qExp;  // exponent of Q on the first component: 1 for Q = q, 0 for Q = 1

    int exponent(const Box& b) const { return (b.comp == 0 ? qExp : 0) + b.col - b.row; }

    // Column of T for the transposition of letters a, a + 1 at tableau j.
    SeminormalModel::Column swapColumn(int j, int a, int& maxK) const {
        SeminormalModel::Column col;
        const Box& x = tabs[j][a];
        const Box& y = tabs[j][a + 1];
        if (x.comp == y.comp && x.row == y.row) {
            col.diag = poly({0, 1});
            return col;
        }
        if (x.comp == y.comp && x.col == y.col) {
            col.diag = poly({-1});
            return col;
        }
        Tableau t = tabs[j];
        std::swap(t[a], t[a + 1]);
        col.partner = index.at(t);
        const int sigma = (x.comp == 0 ? 1 : -1) * (y.comp == 0 ? 1 : -1);
        const int k = exponent(y) - exponent(x);
        maxK = std::max(maxK, std::abs(k));
        col.diag.kind = SnEntry::Diag;
        col.diag.sigma = static_cast<std::int8_t>(sigma);
        col.diag.k = static_cast<std::int16_t>(k);
        if (k == 0) {
            if (sigma != -1) throw ConsistencyError("seminormal ratio 1");
            col.off.kind = SnEntry::HalfQ1;
        } else if (k > 0) {
            col.off = poly({1});
        } else {
            col.off.kind = SnEntry::Partner;
            col.off.sigma = static_cast<std::int8_t>(sigma);
            col.off.k = static_cast<std::int16_t>(k);
        }
        return col;
    }
};

TableauModel makeTableaux(const Partition& xi, const Partition& eta, int qExp) {
    TableauModel m;
    m.tabs = standardBitableaux(xi, eta);
    for (std::size_t i = 0; i < m.tabs.size(); ++i) m.index.emplace(m.tabs[i], static_cast<int>(i));
    m.qExp = qExp;
    return m;
}

SeminormalModel g2Model(int which) {
    // Fixed order: phi1,0  phi1,3'  phi2,1  phi2,2  phi1,3''  phi1,6
    auto oneDim = [](long t1, long t2) {
        SeminormalModel m(1, 2);
        m.generator(0)[0].diag = t1 > 0 ? poly({0, 1}) : poly({-1});
        m.generator(1)[0].diag = t2 > 0 ? poly({0, 1}) : poly({-1});
        return m;
    };
    switch (which) {
        case 0: return oneDim(1, 1);
        case 1: return oneDim(-1, 1);
        case 4: return oneDim(1, -1);
        case 5: return oneDim(-1, -1);
        default: break;
    }
    // T1 = [[-1, 0], [1, q]], T2 = [[q, d], [0, -1]] with d = 3q or q.
    SeminormalModel m(2, 2);
    auto& t1 = m.generator(0);
    t1[0].diag = poly({-1});
    t1[0].partner = 1;
    t1[0].off = poly({1});
    t1[1].diag = poly({0, 1});
    auto& t2 = m.generator(1);
    t2[0].diag = poly({0, 1});
    t2[1].diag = poly({-1});
    t2[1].partner = 0;
    t2[1].off = poly({0, which == 2 ? 3 : 1});
    return m;
}

}  // namespace

SeminormalModel seminormalModel(const CartanType& t, const CharParam& param) {
    if (!t.isIrreducible()) throw CapabilityError("seminormal models only for irreducible types");
    const char fam = t.family();
    const int rank = t.n();
    if (fam == 'G') return g2Model(param.g2);
    if (fam == 'A') {
        TableauModel tm = makeTableaux(param.lambda, {}, 0);
        SeminormalModel m(static_cast<int>(tm.tabs.size()), rank);
        for (int s = 0; s < rank; ++s)
            for (int j = 0; j < m.dim(); ++j) m.generator(s)[j] = tm.swapColumn(j, s, m.maxK);
        return m;
    }
    if (fam == 'B' || fam == 'C') {
        TableauModel tm = makeTableaux(param.bip.xi, param.bip.eta, 1);
        SeminormalModel m(static_cast<int>(tm.tabs.size()), rank);
        for (int j = 0; j < m.dim(); ++j) m.generator(0)[j].diag = tm.tabs[j][0].comp == 0 ? poly({0, 1}) : poly({-1});
        for (int s = 1; s < rank; ++s)
            for (int j = 0; j < m.dim(); ++j) m.generator(s)[j] = tm.swapColumn(j, s - 1, m.maxK);
        return m;
    }
    if (fam == 'D') {
        TableauModel tm = makeTableaux(param.bip.xi, param.bip.eta, 0);
        SeminormalModel m(static_cast<int>(tm.tabs.size()), rank);
        auto eps = [&](int j) { return tm.tabs[j][0].comp == 0 ? 1 : -1; };
        for (int j = 0; j < m.dim(); ++j) {
            auto c = tm.swapColumn(j, 0, m.maxK);
            m.generator(1)[j] = c;
            if (c.partner >= 0 && eps(j) * eps(c.partner) < 0) c.off.mult = static_cast<std::int8_t>(-c.off.mult);
            m.generator(0)[j] = c;
        }
        for (int s = 2; s < rank; ++s)
            for (int j = 0; j < m.dim(); ++j) m.generator(s)[j] = tm.swapColumn(j, s - 1, m.maxK);
        if (param.split != 0) {
            m.splitSign = param.split;
            m.phi.resize(m.dim());
            for (int j = 0; j < m.dim(); ++j) {
                Tableau tt = tm.tabs[j];
                for (auto& b : tt) b.comp = 1 - b.comp;
                m.phi[j] = tm.index.at(tt);
            }
        }
        return m;
    }
    throw CapabilityError("no seminormal model for type " + t.name());
}

std::vector<std::vector<u64>> denseGenerator(const SeminormalModel& m, int s, u64 q0, u64 p) {
    std::vector<std::vector<u64>> a(m.dim(), std::vector<u64>(m.dim(), 0));
    const auto& g = m.generator(s);
    for (int j = 0; j < m.dim(); ++j) {
        a[j][j] = g[j].diag.eval(q0, p);
        if (g[j].partner >= 0) a[g[j].partner][j] = g[j].off.eval(q0, p);
    }
    return a;
}

bool goodPoint(u64 q0, int maxK, u64 p) {
    if (q0 % p == 0) return false;
    u64 pw = 1;
    for (int k = 1; k <= maxK; ++k) {
        pw = modp::mulmod(pw, q0, p);
        if (pw == 1 || pw == p - 1) return false;
    }
    return (q0 + 1) % p != 0;
}

namespace {

struct EvaluatedGen {
    std::vector<u64> diag, off;
    std::vector<int> partner;
};

EvaluatedGen evaluate(const SeminormalModel& m, int s, u64 q0, u64 p) {
    EvaluatedGen e;
    const auto& g = m.generator(s);
    const int d = m.dim();
    e.diag.resize(d);
    e.off.resize(d);
    e.partner.resize(d);
    for (int j = 0; j < d; ++j) {
        e.diag[j] = g[j].diag.eval(q0, p);
        e.partner[j] = g[j].partner;
        e.off[j] = g[j].partner >= 0 ? g[j].off.eval(q0, p) : 0;
    }
    return e;
}

// Trace of the product of evaluated generators along word.
u64 traceProduct(const SeminormalModel& m, const std::vector<EvaluatedGen>& gens, const std::vector<int>& word,
                 u64 p, std::vector<u64>& a, std::vector<u64>& b) {
    const int d = m.dim();
    a.assign(static_cast<std::size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(i) * d + i] = 1;
    b.resize(a.size());
    for (int s : word) {
        const auto& g = gens[s];
        // b = a * G, column j of G has diag[j] at row j and off[j] at row partner[j].
        for (int i = 0; i < d; ++i) {
            const u64* ra = &a[static_cast<std::size_t>(i) * d];
            u64* rb = &b[static_cast<std::size_t>(i) * d];
            for (int j = 0; j < d; ++j) {
                u64 v = ra[j] * g.diag[j];
                if (g.partner[j] >= 0) v += ra[g.partner[j]] * g.off[j] % p;
                rb[j] = v % p;
            }
        }
        std::swap(a, b);
    }
    u64 tr = 0;
    for (int i = 0; i < d; ++i) tr += a[static_cast<std::size_t>(i) * d + i];
    tr %= p;
    if (m.splitSign != 0) {
        u64 tp = 0;
        for (int j = 0; j < d; ++j) tp += a[static_cast<std::size_t>(m.phi[j]) * d + j];
        tp %= p;
        if (m.splitSign < 0) tp = (p - tp) % p;
        tr = modp::mulmod((tr + tp) % p, modp::invmod(2, p), p);
    }
    return tr;
}

}  // namespace

u64 traceOfWord(const SeminormalModel& m, const std::vector<int>& word, u64 q0, u64 p) {
    std::vector<EvaluatedGen> gens;
    for (int s = 0; s < m.numGenerators(); ++s) gens.push_back(evaluate(m, s, q0, p));
    std::vector<u64> a, b;
    return traceProduct(m, gens, word, p, a, b);
}

std::vector<std::vector<QPoly>> classRepresentativeValues(const WeylGroup& w,
                                                          const std::vector<SeminormalModel>& models,
                                                          int maxLength, int jobs) {
    const auto& classes = w.classes();
    std::vector<int> included;
    int maxLen = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const int l = w.length(classes[c].rep);
        if (maxLength >= 0 && l > maxLength) continue;
        included.push_back(static_cast<int>(c));
        maxLen = std::max(maxLen, l);
    }
    std::vector<std::vector<QPoly>> out(models.size(), std::vector<QPoly>(classes.size()));
    std::vector<std::vector<int>> words;
    for (int c : included) words.push_back(w.word(classes[c].rep));

    auto work = [&](std::size_t mi) {
        const SeminormalModel& m = models[mi];
        modp::CrtAccumulator crt;
        std::vector<u64> a, b;
        for (int pi = 0;; ++pi) {
            const u64 p = modp::prime(pi);
            std::vector<u64> xs;
            for (u64 q0 = 2; static_cast<int>(xs.size()) <= maxLen; ++q0)
                if (goodPoint(q0, m.maxK, p)) xs.push_back(q0);
            // values[point][class]
            std::vector<std::vector<u64>> vals(xs.size(), std::vector<u64>(included.size()));
            for (std::size_t k = 0; k < xs.size(); ++k) {
                std::vector<EvaluatedGen> gens;
                for (int s = 0; s < m.numGenerators(); ++s) gens.push_back(evaluate(m, s, xs[k], p));
                for (std::size_t ci = 0; ci < included.size(); ++ci) {
                    if (static_cast<int>(words[ci].size()) + 1 <= static_cast<int>(k)) continue;
                    vals[k][ci] = traceProduct(m, gens, words[ci], p, a, b);
                }
            }
            std::vector<u64> residues;
            for (std::size_t ci = 0; ci < included.size(); ++ci) {
                const std::size_t npts = words[ci].size() + 1;
                std::vector<u64> px(xs.begin(), xs.begin() + npts), py(npts);
                for (std::size_t k = 0; k < npts; ++k) py[k] = vals[k][ci];
                auto coeffs = modp::interpolate(px, py, p);
                residues.insert(residues.end(), coeffs.begin(), coeffs.end());
            }
            if (crt.add(residues, p) && pi >= 1) break;
            if (pi > 8) throw ConsistencyError("Hecke character values did not stabilize");
        }
        std::size_t pos = 0;
        for (std::size_t ci = 0; ci < included.size(); ++ci) {
            QPoly q(words[ci].size() + 1);
            for (auto& c : q) {
                const Integer& z = crt.values()[pos++];
                if (!z.fits_slong_p()) throw ConsistencyError("Hecke character value exceeds 64 bits");
                c = z.get_si();
            }
            trim(q);
            out[mi][included[ci]] = std::move(q);
        }
    };

    std::atomic<std::size_t> next{0};
    auto runner = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < models.size();) work(i);
    };
    const int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(models.size())));
    if (nthreads == 1) {
        runner();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex mu;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                try {
                    runner();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                    next = models.size();
                }
            });
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    }
    return out;
}

}  // namespace alphalab
