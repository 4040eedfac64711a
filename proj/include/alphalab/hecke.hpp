#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "alphalab/laurent.hpp"
#include "alphalab/weyl.hpp"

namespace alphalab {

// Polynomial in q with machine-integer coefficients, index = exponent.
// Trailing zeros are trimmed; the empty vector is 0.
using QPoly = std::vector<std::int64_t>;

void trim(QPoly& p);
LaurentPoly toLaurent(const QPoly& p);  // in q

// Element of the Hecke algebra in the standard basis delta_w, with
// delta_s^2 = (v^2 - 1) delta_s + v^2.
class HeckeElt {
public:
    explicit HeckeElt(const WeylGroup& w) : group_(&w) {}
    static HeckeElt basis(const WeylGroup& w, Elt x);

    const WeylGroup& group() const { return *group_; }
    const std::map<Elt, LaurentPoly>& coords() const { return coords_; }
    LaurentPoly coeff(Elt x) const;
    void add(Elt x, const LaurentPoly& c);

    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator*=(const LaurentPoly& c);
    friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.group_ == b.group_ && a.coords_ == b.coords_; }

    // this * delta_s
    HeckeElt timesSimple(int s) const;

private:
    const WeylGroup* group_;
    std::map<Elt, LaurentPoly> coords_;
};

HeckeElt heckeMultiply(const HeckeElt& a, const HeckeElt& b);

// Kazhdan-Lusztig polynomials p_{y,z} for all pairs, computed by the standard
// recursion.  Polynomials are interned; the table is |W|^2 indices.
class KLTable {
public:
    static constexpr std::size_t kMaxSize = 5000;

    explicit KLTable(const WeylGroup& w);

    const WeylGroup& group() const { return *group_; }
    const QPoly& p(Elt y, Elt z) const { return pool_[table_[static_cast<std::size_t>(z) * n_ + y]]; }
    bool leq(Elt y, Elt z) const { return table_[static_cast<std::size_t>(z) * n_ + y] != 0; }
    LaurentPoly klPolynomial(Elt y, Elt z) const { return toLaurent(p(y, z)); }
    // Top coefficient mu(y, z), symmetric; 0 unless y, z are comparable.
    long mu(Elt y, Elt z) const;
    // Pairs (y, mu(y, z)) with y < z and mu != 0.
    const std::vector<std::pair<Elt, long>>& muList(Elt z) const { return muLists_[z]; }
    bool isRationallySmooth(Elt z) const;
    std::size_t poolSize() const { return pool_.size(); }

private:
    std::uint32_t intern(const QPoly& p);

    const WeylGroup* group_;
    std::size_t n_;
    std::vector<QPoly> pool_;
    std::map<QPoly, std::uint32_t> index_;
    std::vector<std::uint32_t> table_;
    std::vector<std::vector<std::pair<Elt, long>>> muLists_;
};

// c_z = v^{-l(z)} sum_{y <= z} p_{y,z}(v^2) delta_y
HeckeElt klBasisElement(const KLTable& kl, Elt z);

// Two-sided cells.  leq[a][b] means cell a <=_LR cell b; {e} is the top.
struct CellPartition {
    std::vector<int> cellOf;
    std::vector<std::vector<Elt>> blocks;  // sorted by smallest element
    std::vector<std::vector<bool>> leq;
    std::vector<int> charToCell;  // filled by assignCharacterCells
    bool lessOrEqual(int a, int b) const { return leq[a][b]; }
};

CellPartition computeCells(const KLTable& kl, std::size_t maxSize = 1152);

}  // namespace alphalab
