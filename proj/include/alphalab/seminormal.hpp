#pragma once

#include <cstdint>
#include <vector>

#include "alphalab/characters.hpp"
#include "alphalab/hecke.hpp"
#include "alphalab/modp.hpp"

namespace alphalab {

// A matrix entry of a seminormal generator as a rational function of q.
struct SnEntry {
    enum Kind : std::uint8_t {
        Zero,
        Poly,      // sum poly[i] q^i
        Diag,      // (q - 1) r / (r - 1), r = sigma q^k
        Partner,   // x(r) x(1/r) + q
        HalfQ1,    // (q + 1) / 2
    };
    Kind kind = Zero;
    std::int8_t sigma = 1;
    std::int16_t k = 0;
    std::int8_t mult = 1;  // overall sign
    std::vector<long> poly;

    modp::u64 eval(modp::u64 q, modp::u64 p) const;
};

// Generators T_s of the Hecke algebra (T_s^2 = (q-1) T_s + q) acting on a
// basis in which every column has at most two nonzero entries: the diagonal
// and the entry in the row of a partner basis vector.
class SeminormalModel {
public:
    struct Column {
        SnEntry diag;
        int partner = -1;
        SnEntry off;  // entry (partner, column)
    };

    SeminormalModel(int dim, int numGens) : dim_(dim), gens_(numGens, std::vector<Column>(dim)) {}

    int dim() const { return dim_; }
    int numGenerators() const { return static_cast<int>(gens_.size()); }
    const std::vector<Column>& generator(int s) const { return gens_[s]; }
    std::vector<Column>& generator(int s) { return gens_[s]; }

    // Involution of the basis commuting with every generator; the model then
    // carries the character (Tr M + splitSign * Tr(Phi M)) / 2.
    std::vector<int> phi;
    int splitSign = 0;
    // Largest |k| among Diag/Partner entries; evaluation points must avoid
    // q^k = +-1 for k up to this bound.
    int maxK = 0;

private:
    int dim_;
    std::vector<std::vector<Column>> gens_;
};

// Model for one row of the character table of an irreducible computed type.
SeminormalModel seminormalModel(const CartanType& t, const CharParam& param);

// Dense matrices of the generators at q = q0 mod p (for relation checks).
std::vector<std::vector<modp::u64>> denseGenerator(const SeminormalModel& m, int s, modp::u64 q0, modp::u64 p);

// True when q0 is a legal evaluation point for a model with the given maxK.
bool goodPoint(modp::u64 q0, int maxK, modp::u64 p);

// Character values psi(T_w) for the class representatives of w with
// length(rep) <= maxLength (others are left empty), as polynomials in q.
// Result indexed [model][class].
std::vector<std::vector<QPoly>> classRepresentativeValues(const WeylGroup& w,
                                                          const std::vector<SeminormalModel>& models,
                                                          int maxLength, int jobs = 1);

// Trace of T_{word} at q0 mod p (with the split correction); used by tests.
modp::u64 traceOfWord(const SeminormalModel& m, const std::vector<int>& word, modp::u64 q0, modp::u64 p);

}  // namespace alphalab
