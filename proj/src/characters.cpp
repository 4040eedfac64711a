#include "alphalab/characters.hpp"

#include <mutex>

#include "alphalab/errors.hpp"
#include "alphalab/fourier.hpp"
#include "alphalab/seminormal.hpp"

namespace alphalab {

CharTable::CharTable(const WeylGroup& w, std::vector<CharRow> rows, std::vector<CharParam> params)
    : group_(&w), rows_(std::move(rows)), params_(std::move(params)) {
    const auto& classes = w.classes();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!labelIndex_.emplace(rows_[i].label, static_cast<int>(i)).second)
            throw ConsistencyError("duplicate character label " + rows_[i].label);
        bool triv = true, sgn = true;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            triv = triv && rows_[i].values[c] == 1;
            sgn = sgn && rows_[i].values[c] == (w.length(classes[c].rep) % 2 ? -1 : 1);
        }
        if (triv) trivial_ = static_cast<int>(i);
        if (sgn) sign_ = static_cast<int>(i);
    }
    // Orthogonality.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = i; j < rows_.size(); ++j) {
            Rational s = scalarProduct(w, rows_[i].values, rows_[j].values);
            if (s != (i == j ? 1 : 0))
                throw ConsistencyError("character table not orthonormal at " + rows_[i].label + ", " + rows_[j].label);
        }
    const auto traces = coinvariantTraces(w);
    for (auto& r : rows_) {
        LaurentPoly f;
        for (std::size_t c = 0; c < classes.size(); ++c)
            f += traces[c] * Integer(static_cast<long>(classes[c].size) * r.values[c]);
        auto q = f.exactDivide(Integer(static_cast<unsigned long>(w.size())));
        if (!q) throw ConsistencyError("fake degree not integral for " + r.label);
        fake_.push_back(*q);
        r.b = q->minExp();
        r.degree = r.values[0];
    }
}

std::optional<int> CharTable::find(const std::string& label) const {
    auto it = labelIndex_.find(label);
    if (it != labelIndex_.end()) return it->second;
    // D_n: xi.eta and eta.xi name the same character.
    const auto dot = label.find('.');
    if (group_->type().family() == 'D' && dot != std::string::npos && label.find("·") == std::string::npos) {
        it = labelIndex_.find(label.substr(dot + 1) + "." + label.substr(0, dot));
        if (it != labelIndex_.end()) return it->second;
    }
    return std::nullopt;
}

int CharTable::index(const std::string& label) const {
    auto i = find(label);
    if (!i) throw ParseError("unknown character label '" + label + "' for " + group_->type().name());
    return *i;
}

ClassFunction CharTable::classFunction(std::size_t i) const { return alphalab::classFunction(rows_[i].values); }

void CharTable::setAInvariants(const std::vector<int>& a) {
    for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i].a = a[i];
}

SignedPerm signedPermutation(const WeylGroup& w, Elt x) {
    const CartanType& t = w.type();
    if (!t.isIrreducible()) throw CapabilityError("signed permutations need an irreducible type");
    const char fam = t.family();
    const int r = t.n();
    if (fam != 'A' && fam != 'B' && fam != 'C' && fam != 'D') throw CapabilityError("no signed permutation model for " + t.name());
    const int n = fam == 'A' ? r + 1 : r;
    auto gen = [&](int s) {
        SignedPerm g(n);
        for (int i = 0; i < n; ++i) g[i] = i + 1;
        if (fam == 'A') {
            std::swap(g[s], g[s + 1]);
        } else if (s == 0 && fam == 'D') {
            g[0] = -2;
            g[1] = -1;
        } else if (s == 0) {
            g[0] = -1;
        } else {
            std::swap(g[s - 1], g[s]);
        }
        return g;
    };
    SignedPerm p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    for (int s : w.word(x)) p = composeSigned(p, gen(s));
    return p;
}

std::vector<LaurentPoly> coinvariantTraces(const WeylGroup& w) {
    LaurentPoly num(1);
    for (int d : w.degrees()) num *= LaurentPoly(1) - LaurentPoly::monomial(1, d);
    std::vector<LaurentPoly> out;
    for (const auto& c : w.classes()) {
        auto q = num.exactDivide(w.charPolyReflection(c.rep));
        if (!q) throw ConsistencyError("coinvariant trace not polynomial");
        out.push_back(*q);
    }
    return out;
}

ClassFunction classFunction(const std::vector<long>& values) {
    ClassFunction f;
    for (long v : values) f.values.emplace_back(v);
    return f;
}

ClassFunction trivialCharacter(const WeylGroup& w) { return classFunction(std::vector<long>(w.numClasses(), 1)); }

ClassFunction signCharacter(const WeylGroup& w) {
    std::vector<long> v;
    for (const auto& c : w.classes()) v.push_back(w.length(c.rep) % 2 ? -1 : 1);
    return classFunction(v);
}

LaurentPoly scalarProduct(const WeylGroup& w, const ClassFunction& f, const ClassFunction& g) {
    if (f.values.size() != w.numClasses() || g.values.size() != w.numClasses())
        throw ConsistencyError("class function of a different group");
    LaurentPoly s;
    for (std::size_t c = 0; c < w.numClasses(); ++c)
        s += f.values[c] * g.values[c] * Integer(static_cast<unsigned long>(w.classes()[c].size));
    auto q = s.exactDivide(Integer(static_cast<unsigned long>(w.size())));
    if (!q) throw ConsistencyError("scalar product not integral");
    return *q;
}

Rational scalarProduct(const WeylGroup& w, const std::vector<long>& f, const std::vector<long>& g) {
    Integer s = 0;
    for (std::size_t c = 0; c < w.numClasses(); ++c)
        s += Integer(f[c]) * g[c] * Integer(static_cast<unsigned long>(w.classes()[c].size));
    Rational r(s, Integer(static_cast<unsigned long>(w.size())));
    r.canonicalize();
    return r;
}

ClassFunction induceFromParabolic(const WeylGroup& w, const Parabolic& p, const ClassFunction& f) {
    const WeylGroup& sub = *p.group;
    if (f.values.size() != sub.numClasses()) throw ConsistencyError("class function not on the parabolic");
    if (p.fusion.size() != sub.numClasses()) throw ConsistencyError("parabolic without fusion map");
    std::vector<LaurentPoly> acc(w.numClasses());
    for (std::size_t c = 0; c < sub.numClasses(); ++c)
        acc[p.fusion[c]] += f.values[c] * Integer(static_cast<unsigned long>(sub.classes()[c].size));
    ClassFunction out;
    for (std::size_t c = 0; c < w.numClasses(); ++c) {
        // Ind f(C) = |W| / (|W'| |C|) * sum_{C' in C} |C'| f(C')
        const Integer den = Integer(static_cast<unsigned long>(sub.size())) * Integer(static_cast<unsigned long>(w.classes()[c].size));
        auto q = (acc[c] * Integer(static_cast<unsigned long>(w.size()))).exactDivide(den);
        if (!q) throw ConsistencyError("induced class function not integral");
        out.values.push_back(*q);
    }
    return out;
}

ClassFunction restrictToParabolic(const Parabolic& p, const ClassFunction& f) {
    ClassFunction out;
    for (int c : p.fusion) out.values.push_back(f.values[c]);
    return out;
}

long trivialMultiplicityOnParabolic(const WeylGroup& w, const Parabolic& p, const std::vector<long>& chi) {
    (void)w;
    const WeylGroup& sub = *p.group;
    Integer s = 0;
    for (std::size_t c = 0; c < sub.numClasses(); ++c)
        s += Integer(static_cast<unsigned long>(sub.classes()[c].size)) * chi[p.fusion[c]];
    if (s % Integer(static_cast<unsigned long>(sub.size())) != 0) throw ConsistencyError("multiplicity not integral");
    return Integer(s / Integer(static_cast<unsigned long>(sub.size()))).get_si();
}

std::vector<LaurentPoly> decompose(const CharTable& t, const ClassFunction& f) {
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(scalarProduct(t.group(), t.classFunction(i), f));
    return out;
}

namespace {

const char* const kG2Labels[] = {"phi1,0", "phi1,3'", "phi2,1", "phi2,2", "phi1,3''", "phi1,6"};

// Values on the classes e, s1, s2, s1s2, (s1s2)^2, w0; s1 is the long root.
const long kG2Values[6][6] = {
    {1, 1, 1, 1, 1, 1},  {1, -1, 1, -1, 1, -1}, {2, 0, 0, 1, -1, -2},
    {2, 0, 0, -1, -1, 2}, {1, 1, -1, -1, 1, -1}, {1, -1, -1, 1, 1, 1},
};

int g2ClassSlot(const WeylGroup& w, Elt rep) {
    const int l = w.length(rep);
    if (l == 0) return 0;
    if (l == 1) return w.word(rep)[0] == 0 ? 1 : 2;
    if (l == 2) return 3;
    if (l == 4) return 4;
    if (l == 6) return 5;
    throw ConsistencyError("unexpected G2 class representative " + w.wordString(rep));
}

bool dCanonical(const Bipartition& b) {
    const int sx = size(b.xi), se = size(b.eta);
    return sx < se || (sx == se && b.xi <= b.eta);
}

std::shared_ptr<const CharTable> buildTable(const WeylGroup& w) {
    const CartanType& t = w.type();
    if (!t.isIrreducible()) throw CapabilityError("character tables are computed for irreducible types only (got " + t.name() + ")");
    const char fam = t.family();
    const int n = t.n();
    const auto& classes = w.classes();
    std::vector<CharRow> rows;
    std::vector<CharParam> params;

    if (fam == 'G') {
        for (int i = 0; i < 6; ++i) {
            CharRow r;
            r.label = kG2Labels[i];
            for (const auto& c : classes) r.values.push_back(kG2Values[i][g2ClassSlot(w, c.rep)]);
            rows.push_back(r);
            CharParam p;
            p.g2 = i;
            params.push_back(p);
        }
    } else if (fam == 'A' || fam == 'B' || fam == 'C' || fam == 'D') {
        std::vector<std::pair<Partition, Partition>> types;
        for (const auto& c : classes) types.push_back(signedCycleType(signedPermutation(w, c.rep)));
        if (fam == 'A') {
            for (const auto& lam : partitions(n + 1)) {
                CharRow r;
                r.label = partitionLabel(lam);
                for (const auto& ct : types) r.values.push_back(symmetricCharacter(lam, ct.first));
                rows.push_back(r);
                CharParam p;
                p.lambda = lam;
                params.push_back(p);
            }
        } else if (fam == 'B' || fam == 'C') {
            for (const auto& b : bipartitions(n)) {
                CharRow r;
                r.label = bipartitionLabel(b);
                for (const auto& ct : types) r.values.push_back(hyperoctahedralCharacter(b, ct.first, ct.second));
                rows.push_back(r);
                CharParam p;
                p.bip = b;
                params.push_back(p);
            }
        } else {
            std::vector<SeminormalModel> splitModels;
            std::vector<std::size_t> splitRows;
            for (const auto& b : bipartitions(n)) {
                if (!dCanonical(b)) continue;
                if (b.xi == b.eta) {
                    for (int sgn : {1, -1}) {
                        CharRow r;
                        r.label = partitionLabel(b.xi) + (sgn > 0 ? "·+" : "·-");
                        CharParam p;
                        p.bip = b;
                        p.split = sgn;
                        splitRows.push_back(rows.size());
                        splitModels.push_back(seminormalModel(t, p));
                        rows.push_back(r);
                        params.push_back(p);
                    }
                    continue;
                }
                CharRow r;
                r.label = bipartitionLabel(b);
                for (const auto& ct : types) r.values.push_back(hyperoctahedralCharacter(b, ct.first, ct.second));
                rows.push_back(r);
                CharParam p;
                p.bip = b;
                params.push_back(p);
            }
            if (!splitModels.empty()) {
                auto vals = classRepresentativeValues(w, splitModels, -1);
                for (std::size_t i = 0; i < splitRows.size(); ++i)
                    for (const auto& qp : vals[i]) {
                        long s = 0;
                        for (auto c : qp) s += c;
                        rows[splitRows[i]].values.push_back(s);
                    }
            }
        }
    } else {
        throw CapabilityError("type " + t.name() + " is only available through the data backend");
    }
    auto table = std::make_shared<CharTable>(w, std::move(rows), std::move(params));
    table->setAInvariants(aInvariants(*table));
    return table;
}

}  // namespace

std::shared_ptr<const CharTable> characterTable(const WeylGroup& w) {
    static std::mutex mu;
    static std::map<std::pair<const WeylGroup*, std::string>, std::shared_ptr<const CharTable>> cache;
    const auto key = std::make_pair(&w, w.type().name());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->size() == w.numClasses()) return it->second;
    }
    auto t = buildTable(w);
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = t;
    return t;
}

}  // namespace alphalab
