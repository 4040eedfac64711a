#pragma once

#include <string>
#include <vector>

#include "alphalab/characters.hpp"

namespace alphalab {

struct SpringerEntry {
    std::string classLabel;  // "311", "G_2(a_1)", "44·+"
    std::string kappa;       // "" for the trivial local system, else e.g. "(11)" or "(2,11)"
    int block = -1;          // index into SpringerDatum::blocks
    int du = 0;              // dimension of the Springer fibre
    bool leader = false;     // trivial local system
    std::string label() const { return classLabel + kappa; }
};

struct SpringerDatum {
    std::vector<SpringerEntry> perChar;
    // Characters sharing a unipotent class, blocks ordered by (d_u, a, class
    // label); inside a block the nontrivial local systems come first.
    std::vector<std::vector<int>> blocks;
    std::vector<int> order;  // concatenation of blocks
    std::string convention;
};

SpringerDatum springerCorrespondence(const CharTable& t);

// Dimension of the Springer fibre of the unipotent class with Jordan type
// lambda in SO_{2n+1} ('B'), Sp_{2n} ('C'), SO_{2n} ('D') or GL_n ('A').
int springerFibreDimension(char family, const Partition& lambda);

// Polynomial matrix indexed by character-table rows; entries in q.
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

struct GreenTable {
    PolyMatrix P;       // (chi, psi): sum_i (chi, H^{2i}(B_u)_kappa) q^i
    PolyMatrix Lambda;  // block diagonal
    std::vector<std::vector<long>> ungradedP;  // P at q = 1
};

// Omega_{chi,chi'} = q^N sum_i (chi (x) chi' (x) sign, R_i) q^i, R the coinvariant algebra.
PolyMatrix omegaMatrix(const CharTable& t);

// Lusztig-Shoji solve of Omega = P Lambda P^T with P block triangular in the
// Springer order and q^{d_u} on the diagonal blocks.
GreenTable greenTable(const CharTable& t, const SpringerDatum& s);

// Exact check of P Lambda P^T == Omega (modular evaluation at enough points
// and enough primes to bound every coefficient).
bool verifyGreenTable(const CharTable& t, const GreenTable& g);

// spr_psi = sum_chi P(1)[chi][psi] chi
ClassFunction sprFunction(const CharTable& t, const GreenTable& g, int psi);

}  // namespace alphalab
