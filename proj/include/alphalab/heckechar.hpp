#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "alphalab/characters.hpp"
#include "alphalab/hecke.hpp"

namespace alphalab {

// psi(T_w) for every irreducible psi and every w of length <= maxLength, as
// polynomials in q (T_s^2 = (q-1) T_s + q; with q = v^2, T_w = delta_w).
// Class representatives come from the seminormal models; every other element
// is reached by cyclic shifts or reduced by s x s of length l(x) - 2.
class HeckeValues {
public:
    HeckeValues(const WeylGroup& w, const CharTable& t, int maxLength = -1, int jobs = 1);
    // From given values on the class representatives, indexed [char][class].
    HeckeValues(const WeylGroup& w, const std::vector<std::vector<QPoly>>& classValues, int maxLength = -1);

    const WeylGroup& group() const { return *group_; }
    int maxLength() const { return maxLength_; }
    std::size_t numElements() const { return offset_.size() - 1; }
    // Coefficients of psi(T_w), length l(w) + 1 (not trimmed).
    const std::int64_t* values(Elt w, int psi) const {
        return &data_[offset_[w] + static_cast<std::size_t>(psi) * (group_->length(w) + 1)];
    }
    QPoly value(Elt w, int psi) const;
    // psi_v(delta_w) as a Laurent polynomial in v.
    LaurentPoly deltaValue(Elt w, int psi) const;

    // psi_v(c_z) for every psi.  With kl == nullptr, z must be rationally
    // smooth (p_{y,z} = 1 for all y <= z); this is checked by the interval.
    std::vector<LaurentPoly> cValues(Elt z, const KLTable* kl) const;

private:
    const WeylGroup* group_;
    int numChars_;
    int maxLength_;
    std::vector<std::size_t> offset_;
    std::vector<std::int64_t> data_;
};

}  // namespace alphalab
