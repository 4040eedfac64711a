#include "alphalab/alpha.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "alphalab/errors.hpp"
#include "alphalab/seminormal.hpp"

namespace alphalab {

AlphaData computeAlphaData(const CartanType& type, int maxLength, int jobs) {
    if (!type.isComputed()) throw CapabilityError(type.name() + " is available only through the data backend");
    return computeAlphaData(std::make_shared<const WeylGroup>(type), maxLength, jobs);
}

AlphaData computeAlphaData(std::shared_ptr<const WeylGroup> group, int maxLength, int jobs) {
    const CartanType& type = group->type();
    if (!type.isComputed()) throw CapabilityError(type.name() + " is available only through the data backend");
    if (group->cartan() != cartanMatrix(type))
        throw CapabilityError("generators of this " + type.name() + " are not in the standard numbering");
    AlphaData d;
    d.group = std::move(group);
    d.table = characterTable(*d.group);
    d.fourier = exoticFourier(*d.table);
    d.springer = springerCorrespondence(*d.table);
    d.green = std::make_shared<const GreenTable>(greenTable(*d.table, d.springer));
    std::vector<SeminormalModel> models;
    for (std::size_t i = 0; i < d.table->size(); ++i) models.push_back(seminormalModel(type, d.table->param(i)));
    d.classValues = classRepresentativeValues(*d.group, models, maxLength, jobs);
    for (const char* k : {"CharTable", "HeckeValues", "FourierBlocks", "SpringerData", "GreenTable"})
        d.provenance[k] = "computed";
    return d;
}

Properties properties(const LaurentPoly& a) {
    Properties p;
    if (a.isZero()) return p;
    const SignClass s = signClass(a);
    p.unimodal = isUnimodalAbs(a);
    p.sign = s != SignClass::Mixed;
    p.positive = s == SignClass::AllPositive;
    return p;
}

AlphaEngine::AlphaEngine(AlphaData data, EngineOptions opt) : data_(std::move(data)), opt_(opt) {
    const WeylGroup& w = *data_.group;
    const CharTable& t = *data_.table;
    if (opt_.useKL && w.size() <= KLTable::kMaxSize) kl_ = std::make_unique<KLTable>(w);
    hecke_ = std::make_unique<HeckeValues>(w, data_.classValues, opt_.maxLength);

    const std::size_t n = t.size();
    fourierDen_ = 1;
    for (const auto& r : data_.fourier)
        for (const auto& x : r) fourierDen_ = lcm(fourierDen_, Integer(x.get_den()));
    fourierScaled_.assign(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = data_.fourier[i][j] * Rational(fourierDen_);
            fourierScaled_[i][j] = s.get_num();
        }

    // ungradedP must be unitriangular in the Springer order.
    const auto& P = data_.green->ungradedP;
    const auto& order = data_.springer.order;
    if (order.size() != n) throw ConsistencyError("Springer order does not cover the character table");
    for (std::size_t a = 0; a < n; ++a) {
        if (P[order[a]][order[a]] != 1) throw ConsistencyError("ungraded Green matrix is not unipotent");
        for (std::size_t b = 0; b < a; ++b)
            if (P[order[a]][order[b]] != 0) throw ConsistencyError("ungraded Green matrix is not triangular");
    }
}

bool AlphaEngine::covers(Elt z) const {
    if (z >= hecke_->numElements()) return false;
    return kl_ || group().isRationallySmoothByInterval(z);
}

std::vector<LaurentPoly> AlphaEngine::cValues(Elt z) const {
    if (z >= hecke_->numElements())
        throw CapabilityError("z = " + group().wordString(z) + " is longer than the configured length cap");
    if (!kl_ && !group().isRationallySmoothByInterval(z))
        throw CapabilityError("Kazhdan-Lusztig polynomials of " + group().type().name() +
                              " are not tabulated; only rationally smooth z are available");
    return hecke_->cValues(z, kl_.get());
}

TauVector AlphaEngine::tau(Elt z) const {
    const auto c = cValues(z);
    const std::size_t n = table().size();
    TauVector out{z, std::vector<LaurentPoly>(n)};
    for (std::size_t chi = 0; chi < n; ++chi) {
        LaurentPoly s;
        for (std::size_t psi = 0; psi < n; ++psi)
            if (fourierScaled_[chi][psi] != 0 && !c[psi].isZero()) s += c[psi] * fourierScaled_[chi][psi];
        auto q = s.exactDivide(fourierDen_);
        if (!q) throw ConsistencyError("tau coefficient not integral at " + group().wordString(z));
        out.coeffs[chi] = *q;
    }
    return out;
}

std::vector<LaurentPoly> AlphaEngine::solve(const std::vector<LaurentPoly>& tau) const {
    const auto& P = data_.green->ungradedP;
    const auto& order = data_.springer.order;
    const std::size_t n = order.size();
    std::vector<LaurentPoly> a(n);
    for (std::size_t pos = n; pos-- > 0;) {
        const int chi = order[pos];
        LaurentPoly s = tau[chi];
        for (std::size_t later = pos + 1; later < n; ++later) {
            const int psi = order[later];
            if (P[chi][psi] != 0 && !a[psi].isZero()) s -= a[psi] * Integer(P[chi][psi]);
        }
        a[chi] = s;
    }
    for (std::size_t chi = 0; chi < n; ++chi) {
        LaurentPoly s;
        for (std::size_t psi = 0; psi < n; ++psi)
            if (P[chi][psi] != 0) s += a[psi] * Integer(P[chi][psi]);
        if (s != tau[chi]) throw ConsistencyError("residual of the triangular solve is nonzero");
    }
    return a;
}

AlphaTable AlphaEngine::alpha(Elt z) const {
    AlphaTable t;
    t.z = z;
    t.alphas = solve(tau(z).coeffs);
    for (const auto& a : t.alphas) {
        if (!isPalindromic(a)) throw ConsistencyError("alpha not palindromic at " + group().wordString(z));
        t.flags.push_back(properties(a));
    }
    return t;
}

bool tauIsPositiveEven(const WeylGroup& w, const TauVector& t) {
    const int l = w.length(t.z);
    for (const auto& c : t.coeffs) {
        const LaurentPoly f = c.shifted(l);
        for (const auto& [e, x] : f.terms())
            if (e < 0 || e > 2 * l || e % 2 != 0 || x < 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

Integer factorial(int k) {
    Integer r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

// Fills image/order/g2ToA2 from kernelClasses.
void classify(const CharTable& t, Quotient& q) {
    const WeylGroup& w = t.group();
    std::size_t kernel = 0;
    for (std::size_t c = 0; c < w.numClasses(); ++c)
        if (q.kernelClasses[c]) kernel += w.classes()[c].size;
    q.order = w.size() / kernel;
    auto inN = [&](Elt x) { return static_cast<bool>(q.kernelClasses[w.classOf(x)]); };
    auto gen = [&](int s) { return w.lmul(s, w.identity()); };
    std::vector<int> reps;
    for (int s = 0; s < w.rank(); ++s) {
        if (inN(gen(s))) continue;
        bool dup = false;
        for (int r : reps) dup = dup || inN(w.multiply(gen(r), gen(s)));
        if (!dup) reps.push_back(s);
    }
    const int k = static_cast<int>(reps.size());
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Elt x = w.multiply(gen(reps[i]), gen(reps[j]));
            Elt y = x;
            int m = 1;
            while (!inN(y)) {
                y = w.multiply(y, x);
                ++m;
            }
            if (m > 3) return;
            if (m == 3) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    // Components must be paths.
    std::vector<int> comp(k, -1);
    std::vector<int> sizes;
    for (int i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        int nodes = 0, edges = 0;
        std::vector<int> stack{i};
        comp[i] = static_cast<int>(sizes.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++nodes;
            if (adj[u].size() > 2) return;
            edges += static_cast<int>(adj[u].size());
            for (int v : adj[u])
                if (comp[v] < 0) {
                    comp[v] = comp[i];
                    stack.push_back(v);
                }
        }
        if (edges / 2 != nodes - 1) return;
        sizes.push_back(nodes);
    }
    Integer prod = 1;
    std::string image;
    for (int s : sizes) {
        prod *= factorial(s + 1);
        image += (image.empty() ? "A" : "xA") + std::to_string(s);
    }
    if (prod != Integer(static_cast<unsigned long>(q.order))) return;
    q.image = sizes.empty() ? "1" : image;
    q.g2ToA2 = w.type().family() == 'G' && q.order == 6 && inN(w.longest());
}

std::vector<bool> kernelOf(const CharTable& t, int chi) {
    std::vector<bool> k(t.group().numClasses());
    const auto& v = t.row(chi).values;
    for (std::size_t c = 0; c < k.size(); ++c) k[c] = v[c] == t.row(chi).degree;
    return k;
}

}  // namespace

std::vector<Quotient> symmetricQuotients(const CharTable& t) {
    std::set<std::vector<bool>> normals;
    for (std::size_t chi = 0; chi < t.size(); ++chi) normals.insert(kernelOf(t, static_cast<int>(chi)));
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::vector<bool>> cur(normals.begin(), normals.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<bool> m(cur[i].size());
                for (std::size_t c = 0; c < m.size(); ++c) m[c] = cur[i][c] && cur[j][c];
                grew = normals.insert(m).second || grew;
            }
    }
    std::vector<Quotient> out;
    for (const auto& k : normals) {
        Quotient q;
        q.kernelClasses = k;
        classify(t, q);
        if (!q.image.empty()) out.push_back(q);
    }
    std::stable_sort(out.begin(), out.end(), [](const Quotient& a, const Quotient& b) {
        if (a.order != b.order) return a.order > b.order;
        return a.kernelClasses < b.kernelClasses;
    });
    std::map<std::string, int> seen;
    for (auto& q : out) {
        const int k = seen[q.image]++;
        q.name = "onto " + q.image + (k ? " #" + std::to_string(k + 1) : "");
    }
    return out;
}

Quotient quotientByElement(const CharTable& t, Elt x, const std::string& name) {
    Quotient q;
    q.name = name;
    q.kernelClasses.assign(t.group().numClasses(), true);
    const int cx = t.group().classOf(x);
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
        auto k = kernelOf(t, static_cast<int>(chi));
        if (!k[cx]) continue;
        for (std::size_t c = 0; c < k.size(); ++c) q.kernelClasses[c] = q.kernelClasses[c] && k[c];
    }
    classify(t, q);
    return q;
}

bool isInflated(const CharTable& t, int psi, const Quotient& q) {
    const auto k = kernelOf(t, psi);
    for (std::size_t c = 0; c < k.size(); ++c)
        if (q.kernelClasses[c] && !k[c]) return false;
    return true;
}

namespace {

// Quotients named in the summary tables: the normal closures of 1212 (of 12
// in type D) and of a central w0.
std::vector<Quotient> namedQuotients(const CharTable& t) {
    const WeylGroup& w = t.group();
    std::vector<Quotient> out;
    const char fam = w.type().family();
    if (fam == 'A') return out;
    if (fam == 'D') out.push_back(quotientByElement(t, w.parseWord("12"), "12"));
    else out.push_back(quotientByElement(t, w.parseWord("1212"), "1212"));
    if (w.classes()[w.classOf(w.longest())].size == 1) out.push_back(quotientByElement(t, w.longest(), "o"));
    return out;
}

template <class F>
void parallelFor(std::size_t count, int jobs, F f) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex m;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            try {
                for (std::size_t i; (i = next++) < count;) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!error) error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<Elt> surveyElements(const AlphaEngine& e, const SurveyOptions& opt) {
    const WeylGroup& w = e.group();
    std::vector<Elt> zs;
    for (Elt z = 0; z < w.size(); ++z) {
        if (opt.maxLength >= 0 && w.length(z) > opt.maxLength) break;
        if (opt.coverage == Coverage::RationallySmooth) {
            const bool rs = e.kl() ? e.kl()->isRationallySmooth(z) : w.isRationallySmoothByInterval(z);
            if (!rs) continue;
        } else if (!e.kl()) {
            throw CapabilityError("a survey over all elements of " + w.type().name() +
                                  " needs Kazhdan-Lusztig polynomials; use --rationally-smooth");
        }
        zs.push_back(z);
    }
    return zs;
}

SurveyReport classifySurvey(const AlphaEngine& e, const SurveyOptions& opt) {
    const WeylGroup& w = e.group();
    const CharTable& t = e.table();
    SurveyReport r;
    r.type = w.type().name();
    r.coverage = opt.coverage;
    r.maxLength = opt.maxLength;
    const std::vector<Elt> zs = surveyElements(e, opt);
    r.elementsCovered = zs.size();
    std::vector<std::vector<Properties>> flags(zs.size());
    parallelFor(zs.size(), opt.jobs, [&](std::size_t i) { flags[i] = e.alpha(zs[i]).flags; });

    r.perChar.resize(t.size());
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t psi = 0; psi < t.size(); ++psi) {
            auto& c = r.perChar[psi];
            const auto& f = flags[i][psi];
            if (!f.unimodal && !c.failsUnimodal) c.failsUnimodal = true, c.unimodalWitness = zs[i];
            if (!f.sign && !c.failsSign) c.failsSign = true, c.signWitness = zs[i];
            if (!f.positive && !c.failsPositive) c.failsPositive = true, c.positiveWitness = zs[i];
        }
    for (const auto& q : namedQuotients(t)) {
        r.quotientNames.push_back(q.name);
        for (std::size_t psi = 0; psi < t.size(); ++psi)
            r.perChar[psi].inflated[q.name] = isInflated(t, static_cast<int>(psi), q);
    }
    return r;
}

Verdict verifyConjectureMain(const AlphaEngine& e, const SurveyReport& s) {
    const CharTable& t = e.table();
    const WeylGroup& w = e.group();
    Verdict v{"conjecture " + w.type().name(), true, {}};
    const auto quotients = symmetricQuotients(t);
    for (std::size_t psi = 0; psi < t.size(); ++psi) {
        std::vector<const Quotient*> wit;
        for (const auto& q : quotients)
            if (isInflated(t, static_cast<int>(psi), q)) wit.push_back(&q);
        if (wit.empty()) continue;
        const auto& c = s.perChar[psi];
        const std::string& lab = t.row(psi).label;
        auto where = [&](const std::optional<Elt>& z) { return z ? " at z = " + w.wordString(*z) : std::string(); };
        if (c.failsUnimodal) v.fail(lab + " (inflated " + wit.front()->name + ") fails unimodality" + where(c.unimodalWitness));
        if (c.failsSign) v.fail(lab + " (inflated " + wit.front()->name + ") fails sign-uniformity" + where(c.signWitness));
        if (c.failsPositive) {
            const bool exempt = std::any_of(wit.begin(), wit.end(), [](const Quotient* q) { return q->g2ToA2; });
            if (exempt)
                v.notes.push_back(lab + " fails positivity" + where(c.positiveWitness) +
                                  "; exempt, it descends to the G2-to-A2 quotient");
            else
                v.fail(lab + " (inflated " + wit.front()->name + ") fails positivity" + where(c.positiveWitness));
        }
    }
    v.notes.push_back("characters not inflated from a product of symmetric groups failing positivity: " +
                      std::to_string(nonInflatedPositiveFailures(e, s)));
    return v;
}

Verdict checkExoticParabolic(const AlphaData& d) {
    const WeylGroup& w = *d.group;
    const CharTable& t = *d.table;
    Verdict v{"exotic parabolic identity " + w.type().name(), true, {}};
    for (const auto& p : standardParabolics(w)) {
        std::vector<long> m(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) m[i] = trivialMultiplicityOnParabolic(w, p, t.row(i).values);
        for (std::size_t psi = 0; psi < t.size(); ++psi) {
            Rational s = 0;
            for (std::size_t chi = 0; chi < t.size(); ++chi) s += d.fourier[chi][psi] * m[chi];
            if (s != m[psi]) {
                std::string sub;
                for (int i : p.subset) sub += std::to_string(i + 1);
                v.fail(t.row(psi).label + " on the parabolic {" + sub + "}: " + s.get_str() + " != " + std::to_string(m[psi]));
            }
        }
    }
    return v;
}

Verdict checkGreenTable(const AlphaData& d) {
    const CharTable& t = *d.table;
    const GreenTable& g = *d.green;
    const auto& sd = d.springer;
    Verdict v{"Green functions " + t.group().type().name(), true, {}};
    if (g.P.empty()) {
        v.notes.push_back("graded P unavailable; only P(1) checked");
    } else {
        if (!verifyGreenTable(t, g)) v.fail("P Lambda P^T != Omega");
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j)
                for (const auto& [e, c] : g.P[i][j].terms())
                    if (c < 0) v.fail("negative coefficient in P at (" + t.row(i).label + ", " + t.row(j).label + ")");
    }
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) {
            const int bi = sd.perChar[i].block, bj = sd.perChar[j].block;
            const long want = i == j ? 1 : (bi >= bj ? 0 : g.ungradedP[i][j]);
            if (g.ungradedP[i][j] != want)
                v.fail("P(1) not unitriangular at (" + t.row(i).label + ", " + t.row(j).label + ")");
        }
    return v;
}

Verdict checkTauPositivity(const AlphaEngine& e, const SurveyOptions& opt) {
    const WeylGroup& w = e.group();
    Verdict v{"tau positivity " + w.type().name(), true, {}};
    const auto zs = surveyElements(e, opt);
    std::vector<char> ok(zs.size(), 1);
    parallelFor(zs.size(), opt.jobs, [&](std::size_t i) { ok[i] = tauIsPositiveEven(w, e.tau(zs[i])); });
    for (std::size_t i = 0; i < zs.size(); ++i)
        if (!ok[i]) v.fail("v^l(z) tau_z not in Z>=0[v^2] of degree <= 2l(z) at z = " + w.wordString(zs[i]));
    v.notes.push_back(std::to_string(zs.size()) + " elements checked");
    return v;
}

int nonInflatedPositiveFailures(const AlphaEngine& e, const SurveyReport& s) {
    const CharTable& t = e.table();
    const auto quotients = symmetricQuotients(t);
    int count = 0;
    for (std::size_t psi = 0; psi < t.size(); ++psi) {
        if (!s.perChar[psi].failsPositive) continue;
        bool inflated = false;
        for (const auto& q : quotients) inflated = inflated || isInflated(t, static_cast<int>(psi), q);
        if (!inflated) ++count;
    }
    return count;
}

Verdict checkClosedForms(const AlphaEngine& e) {
    const WeylGroup& w = e.group();
    const CharTable& t = e.table();
    Verdict v{"closed forms " + w.type().name(), true, {}};
    const int one = t.trivialIndex(), eps = t.signIndex();
    const Elt w0 = w.longest();
    for (Elt z = 0; z < w.size(); ++z) {
        if (!e.covers(z)) continue;
        const auto a = e.alpha(z).alphas;
        if (z == w.identity()) {
            if (a[eps] != LaurentPoly(1)) v.fail("alpha_eps^e = " + a[eps].toString());
        } else if (!a[eps].isZero()) {
            v.fail("alpha_eps^z nonzero at z = " + w.wordString(z));
        }
        if (z == w0) {
            LaurentPoly expect;
            for (Elt y = 0; y < w.size(); ++y) expect.addTerm(2 * w.length(y) - w.length(w0), 1);
            if (a[one] != expect) v.fail("alpha_1^{w0} = " + a[one].toString());
            for (std::size_t psi = 0; psi < t.size(); ++psi)
                if (static_cast<int>(psi) != one && !a[psi].isZero())
                    v.fail("alpha_" + t.row(psi).label + "^{w0} nonzero");
        }
    }
    return v;
}

Verdict checkCellVanishing(const AlphaEngine& e) {
    const WeylGroup& w = e.group();
    const CharTable& t = e.table();
    Verdict v{"cell vanishing " + w.type().name(), true, {}};
    if (!e.kl()) {
        v.fail("two-sided cells need Kazhdan-Lusztig polynomials");
        return v;
    }
    const CellPartition cells = computeCells(*e.kl());
    const std::size_t nc = cells.blocks.size(), n = t.size();
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(nc, false));
    std::vector<std::vector<LaurentPoly>> alphas(w.size());
    for (Elt z = 0; z < w.size(); ++z) {
        const auto c = e.cValues(z);
        for (std::size_t psi = 0; psi < n; ++psi)
            if (!c[psi].isZero()) seen[psi][cells.cellOf[z]] = true;
        alphas[z] = e.alpha(z).alphas;
    }
    for (std::size_t psi = 0; psi < n; ++psi) {
        // The bottommost cell on which psi_v(c_z) is not identically zero.
        int bottom = -1;
        for (std::size_t a = 0; a < nc; ++a) {
            if (!seen[psi][a]) continue;
            bool below = true;
            for (std::size_t b = 0; b < nc; ++b)
                if (seen[psi][b] && !cells.leq[a][b]) below = false;
            if (below) bottom = static_cast<int>(a);
        }
        if (bottom < 0) {
            v.fail("no bottommost cell for " + t.row(psi).label);
            continue;
        }
        for (Elt z = 0; z < w.size(); ++z) {
            const int cz = cells.cellOf[z];
            if (cz != bottom && cells.leq[cz][bottom] && !alphas[z][psi].isZero())
                v.fail("alpha_" + t.row(psi).label + "^" + w.wordString(z) + " nonzero below its cell");
        }
    }
    return v;
}

std::vector<std::vector<Integer>> inducedSpringerCoordinates(const AlphaEngine& big, const AlphaEngine& small,
                                                             const Parabolic& p) {
    const CharTable& T = big.table();
    const CharTable& t = small.table();
    const auto& P1 = small.data().green->ungradedP;
    std::vector<std::vector<Integer>> m(t.size(), std::vector<Integer>(T.size()));
    for (std::size_t psi = 0; psi < t.size(); ++psi) {
        std::vector<long> vals(small.group().numClasses(), 0);
        for (std::size_t chi = 0; chi < t.size(); ++chi)
            for (std::size_t c = 0; c < vals.size(); ++c) vals[c] += P1[chi][psi] * t.row(chi).values[c];
        const auto d = decompose(T, induceFromParabolic(big.group(), p, classFunction(vals)));
        const auto coords = big.solve(d);
        for (std::size_t k = 0; k < T.size(); ++k) {
            if (!coords[k].isConstant()) throw ConsistencyError("induced Springer coordinate is not an integer");
            m[psi][k] = coords[k].coeff(0);
        }
    }
    return m;
}

Verdict checkParabolic(const AlphaEngine& big, const AlphaEngine& small, const Parabolic& p) {
    const WeylGroup& W = big.group();
    const CharTable& T = big.table();
    const CharTable& t = small.table();
    Verdict v{"parabolic " + small.group().type().name() + " in " + W.type().name(), true, {}};
    const auto m = inducedSpringerCoordinates(big, small, p);
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m[a].size(); ++b)
            if (m[a][b] < 0)
                v.fail("Ind spr_" + t.row(a).label + " has coordinate " + m[a][b].get_str() + " at " + T.row(b).label);
    for (Elt zp = 0; zp < small.group().size(); ++zp) {
        const Elt z = p.embed[zp];
        const std::string name = small.group().wordString(zp);
        const auto tauSmall = small.tau(zp);
        ClassFunction f{std::vector<LaurentPoly>(small.group().numClasses())};
        for (std::size_t chi = 0; chi < t.size(); ++chi)
            for (std::size_t c = 0; c < f.values.size(); ++c)
                f.values[c] += tauSmall.coeffs[chi] * Integer(t.row(chi).values[c]);
        const auto induced = decompose(T, induceFromParabolic(W, p, f));
        const auto tauBig = big.tau(z);
        if (induced != tauBig.coeffs) v.fail("tau differs from the induced tau at z = " + name);
        const auto aSmall = small.solve(tauSmall.coeffs);
        const auto aBig = big.solve(tauBig.coeffs);
        for (std::size_t psi = 0; psi < T.size(); ++psi) {
            LaurentPoly s;
            for (std::size_t q = 0; q < t.size(); ++q)
                if (m[q][psi] != 0) s += aSmall[q] * m[q][psi];
            if (s != aBig[psi]) v.fail("alpha_" + T.row(psi).label + " is not the induced combination at z = " + name);
        }
    }
    return v;
}

}  // namespace alphalab
