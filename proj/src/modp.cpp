#include "alphalab/modp.hpp"

#include <stdexcept>

namespace alphalab::modp {

namespace {

bool isPrime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

u64 prime(int index) {
    static std::vector<u64> cache;
    static u64 next = (1ULL << 31) - 1;
    while (static_cast<int>(cache.size()) <= index) {
        while (!isPrime(next)) --next;
        cache.push_back(next--);
    }
    return cache[index];
}

u64 powmod(u64 a, std::int64_t e, u64 p) {
    if (e < 0) return powmod(invmod(a, p), -e, p);
    u64 r = 1 % p, b = a % p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return powmod(a, static_cast<std::int64_t>(p - 2), p);
}

std::vector<u64> interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
    const std::size_t n = xs.size();
    // Newton divided differences, then expand.
    std::vector<u64> c = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            u64 num = (c[i] + p - c[i - 1]) % p;
            u64 den = (xs[i] + p - xs[i - j]) % p;
            c[i] = mulmod(num, invmod(den, p), p);
        }
    std::vector<u64> poly(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        // poly = poly * (x - xs[k]) + c[k]
        for (std::size_t i = n - 1; i > 0; --i)
            poly[i] = (poly[i - 1] + p - mulmod(poly[i], xs[k], p)) % p;
        poly[0] = (p - mulmod(poly[0], xs[k], p) + c[k]) % p;
    }
    return poly;
}

bool CrtAccumulator::add(const std::vector<u64>& residues, u64 p) {
    if (residue_.empty()) {
        residue_.assign(residues.size(), 0);
        values_.assign(residues.size(), 0);
    }
    if (residues.size() != residue_.size()) throw std::invalid_argument("CRT length mismatch");
    const Integer P(static_cast<unsigned long>(p));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(modulus_ % P).get_mpz_t(), P.get_mpz_t());
    const Integer newMod = modulus_ * P;
    const Integer half = newMod / 2;
    bool stable = true;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        Integer r = residue_[i];
        Integer diff = (Integer(static_cast<unsigned long>(residues[i])) - r % P) % P;
        if (diff < 0) diff += P;
        Integer t = diff * inv % P;
        r += modulus_ * t;
        residue_[i] = r;
        Integer lifted = r > half ? Integer(r - newMod) : r;
        if (lifted != values_[i]) stable = false;
        values_[i] = lifted;
    }
    modulus_ = newMod;
    return stable;
}

}  // namespace alphalab::modp
