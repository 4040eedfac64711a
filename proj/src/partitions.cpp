#include "alphalab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "alphalab/errors.hpp"

namespace alphalab {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int maxPart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, maxPart); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Bipartition> bipartitions(int n) {
    std::vector<Bipartition> out;
    for (int k = n; k >= 0; --k)
        for (const auto& a : partitions(k))
            for (const auto& b : partitions(n - k)) out.push_back({a, b});
    return out;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int x : p)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

int nInvariant(const Partition& p) {
    int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

std::string partitionLabel(const Partition& p) {
    std::string s;
    for (int x : p) s += x >= 10 ? "[" + std::to_string(x) + "]" : std::to_string(x);
    return s;
}

Partition parsePartition(const std::string& s) {
    Partition p;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[') {
            std::size_t j = s.find(']', i);
            if (j == std::string::npos) throw ParseError("unclosed bracket in partition '" + s + "'");
            p.push_back(std::stoi(s.substr(i + 1, j - i - 1)));
            i = j;
        } else if (s[i] >= '1' && s[i] <= '9') {
            p.push_back(s[i] - '0');
        } else {
            throw ParseError("bad partition '" + s + "' at position " + std::to_string(i));
        }
    }
    if (!std::is_sorted(p.rbegin(), p.rend())) throw ParseError("partition parts must decrease: '" + s + "'");
    return p;
}

std::string bipartitionLabel(const Bipartition& b) { return partitionLabel(b.xi) + "." + partitionLabel(b.eta); }

Bipartition parseBipartition(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) throw ParseError("bipartition label needs a '.': '" + s + "'");
    return {parsePartition(s.substr(0, dot)), parsePartition(s.substr(dot + 1))};
}

namespace {

// Beta-set of lambda with m beads (m >= number of parts).
std::vector<int> betaSet(const Partition& p, int m) {
    std::vector<int> b(m);
    for (int i = 0; i < m; ++i) b[i] = (i < static_cast<int>(p.size()) ? p[i] : 0) + (m - 1 - i);
    return b;
}

// Ways to remove a k-rim hook: (new beta set, sign).
std::vector<std::pair<std::vector<int>, int>> removeHooks(const std::vector<int>& beta, int k) {
    std::vector<std::pair<std::vector<int>, int>> out;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > target && x < beta[i]) ++between;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        out.emplace_back(std::move(nb), between % 2 ? -1 : 1);
    }
    return out;
}

bool betaEmpty(const std::vector<int>& beta) {
    const int m = static_cast<int>(beta.size());
    for (int i = 0; i < m; ++i)
        if (beta[i] != m - 1 - i) return false;
    return true;
}

long mnRec(const std::vector<int>& beta, const Partition& mu, std::size_t idx) {
    if (idx == mu.size()) return betaEmpty(beta) ? 1 : 0;
    long total = 0;
    for (const auto& [nb, sign] : removeHooks(beta, mu[idx])) total += sign * mnRec(nb, mu, idx + 1);
    return total;
}

long bnRec(const std::vector<int>& bx, const std::vector<int>& be, const std::vector<std::pair<int, int>>& cycles,
           std::size_t idx) {
    if (idx == cycles.size()) return (betaEmpty(bx) && betaEmpty(be)) ? 1 : 0;
    const auto [k, sgn] = cycles[idx];
    long total = 0;
    for (const auto& [nb, sign] : removeHooks(bx, k)) total += sign * bnRec(nb, be, cycles, idx + 1);
    for (const auto& [nb, sign] : removeHooks(be, k)) total += sign * sgn * bnRec(bx, nb, cycles, idx + 1);
    return total;
}

}  // namespace

long symmetricCharacter(const Partition& lambda, const Partition& mu) {
    if (size(lambda) != size(mu)) throw ConsistencyError("partition sizes differ");
    Partition m = mu;
    std::sort(m.rbegin(), m.rend());
    return mnRec(betaSet(lambda, static_cast<int>(lambda.size()) + 1), m, 0);
}

long hyperoctahedralCharacter(const Bipartition& b, const Partition& alpha, const Partition& beta) {
    std::vector<std::pair<int, int>> cycles;
    for (int x : alpha) cycles.emplace_back(x, 1);
    for (int x : beta) cycles.emplace_back(x, -1);
    std::sort(cycles.rbegin(), cycles.rend());
    return bnRec(betaSet(b.xi, static_cast<int>(b.xi.size()) + 1), betaSet(b.eta, static_cast<int>(b.eta.size()) + 1),
                 cycles, 0);
}

long numStandardTableaux(const Partition& p) {
    const int n = size(p);
    Partition c = conjugate(p);
    long double num = 1;
    long hooks = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) hooks *= (p[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1;
    for (int k = 2; k <= n; ++k) num *= k;
    return static_cast<long>(num / hooks + 0.5L);
}

long kostkaNumber(const Partition& lambda, const Partition& mu) {
    // Count semistandard tableaux of shape lambda and content mu by adding
    // horizontal strips of sizes mu_1, mu_2, ...
    std::map<Partition, long> cur{{Partition{}, 1}};
    for (int m : mu) {
        std::map<Partition, long> next;
        for (const auto& [shape, cnt] : cur) {
            Partition s = shape;
            s.resize(lambda.size(), 0);
            std::function<void(std::size_t, int, Partition&)> rec = [&](std::size_t row, int left, Partition& t) {
                if (row == t.size()) {
                    if (left == 0) {
                        Partition u;
                        for (int x : t)
                            if (x > 0) u.push_back(x);
                        next[u] += cnt;
                    }
                    return;
                }
                int maxAdd = lambda[row] - s[row];
                if (row > 0) maxAdd = std::min(maxAdd, s[row - 1] - s[row]);
                for (int a = 0; a <= std::min(maxAdd, left); ++a) {
                    t[row] = s[row] + a;
                    rec(row + 1, left - a, t);
                }
                t[row] = s[row];
            };
            Partition t = s;
            rec(0, m, t);
        }
        cur = std::move(next);
    }
    auto it = cur.find(lambda);
    return it == cur.end() ? 0 : it->second;
}

std::pair<Partition, Partition> signedCycleType(const SignedPerm& w) {
    const int n = static_cast<int>(w.size());
    std::vector<bool> seen(n, false);
    Partition pos, neg;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, sign = 1, j = i;
        while (!seen[j]) {
            seen[j] = true;
            ++len;
            sign *= w[j] > 0 ? 1 : -1;
            j = std::abs(w[j]) - 1;
        }
        (sign > 0 ? pos : neg).push_back(len);
    }
    std::sort(pos.rbegin(), pos.rend());
    std::sort(neg.rbegin(), neg.rend());
    return {pos, neg};
}

SignedPerm composeSigned(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        int j = std::abs(b[i]) - 1;
        c[i] = (b[i] > 0 ? 1 : -1) * a[j];
    }
    return c;
}

}  // namespace alphalab
