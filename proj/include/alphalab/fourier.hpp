#pragma once

#include <vector>

#include "alphalab/characters.hpp"

namespace alphalab {

struct Family {
    std::vector<int> members;  // character indices, increasing
    int special = -1;
    std::vector<std::vector<Rational>> block;  // indexed like members
};

// Families of a computed type, ordered by their smallest member.
std::vector<Family> familyPartition(const CharTable& t);
// a-invariant per character: the b-invariant of the special member.
std::vector<int> aInvariants(const CharTable& t);

// Full matrix {chi, psi} indexed by character-table rows.
using RationalMatrix = std::vector<std::vector<Rational>>;
RationalMatrix exoticFourier(const CharTable& t);

}  // namespace alphalab
