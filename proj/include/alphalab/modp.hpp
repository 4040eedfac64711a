#pragma once

#include <cstdint>
#include <vector>

#include "alphalab/laurent.hpp"

namespace alphalab::modp {

using u64 = std::uint64_t;

// Primes just below 2^31, largest first.
u64 prime(int index);

inline u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }
u64 powmod(u64 a, std::int64_t e, u64 p);  // negative e uses the inverse
u64 invmod(u64 a, u64 p);
inline u64 reduce(std::int64_t x, u64 p) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

// Coefficients (low to high) of the polynomial of degree < xs.size() through
// the points (xs[i], ys[i]) mod p.
std::vector<u64> interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);

// Chinese remaindering of coefficient vectors into symmetric-range integers.
class CrtAccumulator {
public:
    // Adds residues for one more prime; returns true if the integer lift is
    // unchanged by this prime (so it has stabilized).
    bool add(const std::vector<u64>& residues, u64 p);
    const std::vector<Integer>& values() const { return values_; }

private:
    Integer modulus_ = 1;
    std::vector<Integer> residue_;  // in [0, modulus)
    std::vector<Integer> values_;   // symmetric lift
};

}  // namespace alphalab::modp
