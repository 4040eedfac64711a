#include "alphalab/heckechar.hpp"

#include <map>
#include <numeric>

#include "alphalab/errors.hpp"
#include "alphalab/seminormal.hpp"

namespace alphalab {

namespace {

std::vector<std::vector<QPoly>> modelValues(const WeylGroup& w, const CharTable& t, int maxLength, int jobs) {
    std::vector<SeminormalModel> models;
    for (std::size_t i = 0; i < t.size(); ++i) models.push_back(seminormalModel(w.type(), t.param(i)));
    return classRepresentativeValues(w, models, maxLength, jobs);
}

}  // namespace

HeckeValues::HeckeValues(const WeylGroup& w, const CharTable& t, int maxLength, int jobs)
    : HeckeValues(w, modelValues(w, t, maxLength, jobs), maxLength) {}

HeckeValues::HeckeValues(const WeylGroup& w, const std::vector<std::vector<QPoly>>& reps, int maxLength)
    : group_(&w), numChars_(static_cast<int>(reps.size())), maxLength_(maxLength) {
    std::size_t count = 0;
    while (count < w.size() && (maxLength < 0 || w.length(static_cast<Elt>(count)) <= maxLength)) ++count;
    offset_.resize(count + 1);
    offset_[0] = 0;
    for (std::size_t x = 0; x < count; ++x)
        offset_[x + 1] = offset_[x] + static_cast<std::size_t>(numChars_) * (w.length(static_cast<Elt>(x)) + 1);
    data_.assign(offset_[count], 0);

    auto slot = [&](Elt x, int psi) { return &data_[offset_[x] + static_cast<std::size_t>(psi) * (w.length(x) + 1)]; };

    // Union-find over elements of one length joined by s x s of equal length.
    std::vector<Elt> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Elt x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t start = 0;
    while (start < count) {
        const int l = w.length(static_cast<Elt>(start));
        std::size_t end = start;
        while (end < count && w.length(static_cast<Elt>(end)) == l) ++end;
        // reducer[root] = (element, s) with l(s x s) = l - 2
        std::map<Elt, std::pair<Elt, int>> reducer;
        for (std::size_t xi = start; xi < end; ++xi) {
            const Elt x = static_cast<Elt>(xi);
            for (int s = 0; s < w.rank(); ++s) {
                const Elt sx = w.lmul(s, x);
                const Elt sxs = w.rmul(sx, s);
                if (w.length(sxs) == l && sxs != x) {
                    Elt a = find(x), b = find(sxs);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }
        for (std::size_t xi = start; xi < end; ++xi) {
            const Elt x = static_cast<Elt>(xi);
            const Elt root = find(x);
            if (reducer.count(root)) continue;
            for (int s = 0; s < w.rank(); ++s) {
                const Elt sx = w.lmul(s, x);
                if (w.length(sx) < l && w.length(w.rmul(sx, s)) == l - 2) {
                    reducer[root] = {x, s};
                    break;
                }
            }
        }
        for (std::size_t xi = start; xi < end; ++xi) {
            const Elt x = static_cast<Elt>(xi);
            const Elt root = find(x);
            if (root != x) continue;
            auto it = reducer.find(root);
            for (int psi = 0; psi < numChars_; ++psi) {
                std::int64_t* out = slot(x, psi);
                if (it != reducer.end()) {
                    // psi(T_y) = (q - 1) psi(T_{sy}) + q psi(T_{sys}) for l(sys) = l(y) - 2
                    const Elt y = it->second.first;
                    const int s = it->second.second;
                    const Elt sy = w.lmul(s, y);
                    const Elt sys = w.rmul(sy, s);
                    const std::int64_t* a = slot(sy, psi);
                    const std::int64_t* b = slot(sys, psi);
                    for (int i = 0; i < l; ++i) {
                        out[i] -= a[i];
                        out[i + 1] += a[i];
                    }
                    for (int i = 0; i + 1 < l; ++i) out[i + 1] += b[i];
                } else {
                    const int c = w.classOf(x);
                    if (w.length(w.classes()[c].rep) != l)
                        throw ConsistencyError("cyclic-shift class of " + w.wordString(x) + " has no reduction");
                    const QPoly& v = reps[psi][c];
                    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
                }
            }
        }
        for (std::size_t xi = start; xi < end; ++xi) {
            const Elt x = static_cast<Elt>(xi);
            const Elt root = find(x);
            if (root == x) continue;
            for (int psi = 0; psi < numChars_; ++psi) {
                const std::int64_t* src = slot(root, psi);
                std::copy(src, src + l + 1, slot(x, psi));
            }
        }
        start = end;
    }
}

QPoly HeckeValues::value(Elt w, int psi) const {
    if (w >= numElements()) throw CapabilityError("Hecke values computed only up to length " + std::to_string(maxLength_));
    const std::int64_t* v = values(w, psi);
    QPoly q(v, v + group_->length(w) + 1);
    trim(q);
    return q;
}

LaurentPoly HeckeValues::deltaValue(Elt w, int psi) const { return toLaurent(value(w, psi)).substitutePower(2); }

std::vector<LaurentPoly> HeckeValues::cValues(Elt z, const KLTable* kl) const {
    const WeylGroup& w = *group_;
    if (z >= numElements()) throw CapabilityError("Hecke values computed only up to length " + std::to_string(maxLength_));
    const int lz = w.length(z);
    const std::size_t stride = lz + 1;
    // Accumulators: one for p = 1 and one per distinct nontrivial KL polynomial.
    std::map<const QPoly*, std::vector<__int128>> acc;
    std::vector<__int128> ones(static_cast<std::size_t>(numChars_) * stride, 0);
    auto addInto = [&](std::vector<__int128>& dst, Elt y) {
        const int ly = w.length(y);
        const std::int64_t* src = &data_[offset_[y]];
        for (int psi = 0; psi < numChars_; ++psi) {
            __int128* d = &dst[static_cast<std::size_t>(psi) * stride];
            const std::int64_t* s = src + static_cast<std::size_t>(psi) * (ly + 1);
            for (int i = 0; i <= ly; ++i) d[i] += s[i];
        }
    };
    if (kl) {
        for (Elt y = 0; y <= z; ++y) {
            if (!kl->leq(y, z)) continue;
            const QPoly& p = kl->p(y, z);
            if (p.size() == 1 && p[0] == 1) {
                addInto(ones, y);
            } else {
                auto& v = acc[&p];
                if (v.empty()) v.assign(ones.size(), 0);
                addInto(v, y);
            }
        }
    } else {
        auto mask = w.lowerIntervalMask(z);
        std::vector<long> counts(lz + 1, 0);
        for (Elt y = 0; y <= z; ++y)
            if (mask[y]) ++counts[w.length(y)];
        for (int i = 0; i <= lz; ++i)
            if (counts[i] != counts[lz - i]) throw ConsistencyError(w.wordString(z) + " is not rationally smooth");
        for (Elt y = 0; y <= z; ++y)
            if (mask[y]) addInto(ones, y);
    }
    std::vector<LaurentPoly> out(numChars_);
    auto toInt = [](__int128 x) {
        Integer r = static_cast<long>(x % 1000000000000000000LL);
        Integer hi = static_cast<long>(x / 1000000000000000000LL);
        return Integer(hi * Integer("1000000000000000000") + r);
    };
    for (int psi = 0; psi < numChars_; ++psi) {
        LaurentPoly q;
        const __int128* o = &ones[static_cast<std::size_t>(psi) * stride];
        for (int i = 0; i <= lz; ++i)
            if (o[i] != 0) q.addTerm(i, toInt(o[i]));
        for (const auto& [p, v] : acc) {
            LaurentPoly part;
            const __int128* o2 = &v[static_cast<std::size_t>(psi) * stride];
            for (int i = 0; i <= lz; ++i)
                if (o2[i] != 0) part.addTerm(i, toInt(o2[i]));
            q += part * toLaurent(*p);
        }
        // v^{-l(z)} Q(v^2)
        out[psi] = q.substitutePower(2).shifted(-lz);
    }
    return out;
}

}  // namespace alphalab
