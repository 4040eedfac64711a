#pragma once

#include <string>
#include <vector>

namespace alphalab {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

struct Bipartition {
    Partition xi, eta;
    bool operator==(const Bipartition&) const = default;
};

int size(const Partition& p);
// All partitions of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);
std::vector<Bipartition> bipartitions(int n);
Partition conjugate(const Partition& p);
// n(p) = sum (i-1) p_i
int nInvariant(const Partition& p);

// "21", "" for the empty partition; parts >= 10 are bracketed ("[11]1").
std::string partitionLabel(const Partition& p);
Partition parsePartition(const std::string& s);
std::string bipartitionLabel(const Bipartition& b);  // "2.1"
Bipartition parseBipartition(const std::string& s);

// Murnaghan-Nakayama: chi^lambda on the class of cycle type mu.
long symmetricCharacter(const Partition& lambda, const Partition& mu);
// Characters of the hyperoctahedral group: (xi, eta) on the class with positive
// cycles alpha and negative cycles beta.  xi is the component on which the sign
// change of one coordinate acts by +1.
long hyperoctahedralCharacter(const Bipartition& b, const Partition& alpha, const Partition& beta);

long numStandardTableaux(const Partition& p);
long kostkaNumber(const Partition& lambda, const Partition& mu);

// Signed permutation: images[i] = +-(j+1) means e_i -> +-e_j.
using SignedPerm = std::vector<int>;
// Positive and negative cycle lengths.
std::pair<Partition, Partition> signedCycleType(const SignedPerm& w);
SignedPerm composeSigned(const SignedPerm& a, const SignedPerm& b);  // a after b

}  // namespace alphalab
