#include "alphalab/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "alphalab/errors.hpp"

namespace alphalab {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
    if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exp, c);
    return p;
}

LaurentPoly LaurentPoly::fromCoeffs(const std::vector<long>& coeffs, int lowExp) {
    LaurentPoly p;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) p.terms_.emplace(lowExp + static_cast<int>(i), Integer(coeffs[i]));
    return p;
}

bool LaurentPoly::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Integer LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::setCoeff(int exp, const Integer& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

void LaurentPoly::addTerm(int exp, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly::minExp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::maxExp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.addTerm(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, x] : r.terms_) x = -x;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

LaurentPoly LaurentPoly::substitutePower(int k) const {
    if (k == 0) throw std::invalid_argument("substitutePower: exponent 0");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
    return r;
}

LaurentPoly LaurentPoly::halveExponents() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        if (e % 2 != 0) throw std::domain_error("halveExponents: odd exponent present");
        r.terms_.emplace_hint(r.terms_.end(), e / 2, c);
    }
    return r;
}

Integer LaurentPoly::atOne() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Integer LaurentPoly::evaluate(const Integer& x) const {
    if (minExp() < 0) throw std::domain_error("evaluate: negative exponent");
    Integer s = 0;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        // Horner over the gaps.
        auto next = std::next(it);
        s += it->second;
        int gap = it->first - (next == terms_.rend() ? 0 : next->first);
        for (int i = 0; i < gap; ++i) s *= x;
    }
    return s;
}

std::optional<LaurentPoly> LaurentPoly::exactDivide(const Integer& d) const {
    if (d == 0) throw std::domain_error("division by zero");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        r.terms_.emplace_hint(r.terms_.end(), e, q);
    }
    return r;
}

std::optional<LaurentPoly> LaurentPoly::exactDivide(const LaurentPoly& d) const {
    if (d.isZero()) throw std::domain_error("division by zero polynomial");
    if (isZero()) return LaurentPoly();
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dmax = d.maxExp();
    const int dmin = d.minExp();
    const Integer& lead = d.terms_.rbegin()->second;
    while (!rem.isZero()) {
        int e = rem.maxExp();
        if (e - dmax < rem.minExp() - dmin) return std::nullopt;
        const Integer& c = rem.terms_.rbegin()->second;
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
        LaurentPoly t = LaurentPoly::monomial(q, e - dmax);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

std::string LaurentPoly::toString(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Integer c = it->second;
        int e = it->first;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

nlohmann::json LaurentPoly::toJson() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : terms_) j[std::to_string(e)] = c.get_str();
    return j;
}

LaurentPoly LaurentPoly::fromJson(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("polynomial must be a JSON object");
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int e;
        try {
            size_t pos = 0;
            e = std::stoi(it.key(), &pos);
            if (pos != it.key().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("bad exponent key '" + it.key() + "'");
        }
        if (!it.value().is_string()) throw ParseError("coefficient for exponent " + it.key() + " must be a decimal string");
        p.addTerm(e, integerFromDecimal(it.value().get<std::string>()));
    }
    return p;
}

const char* toString(SignClass s) {
    switch (s) {
        case SignClass::Zero: return "Zero";
        case SignClass::AllPositive: return "AllPositive";
        case SignClass::AllNegative: return "AllNegative";
        case SignClass::Mixed: return "Mixed";
    }
    return "?";
}

bool isPalindromic(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (p.coeff(-e) != c) return false;
    return true;
}

SignClass signClass(const LaurentPoly& p) {
    if (p.isZero()) return SignClass::Zero;
    bool pos = false, neg = false;
    for (const auto& [e, c] : p.terms()) (c > 0 ? pos : neg) = true;
    if (pos && neg) return SignClass::Mixed;
    return pos ? SignClass::AllPositive : SignClass::AllNegative;
}

bool isUnimodalAbs(const LaurentPoly& p) {
    bool falling = false;
    Integer prev = 0;
    bool havePrev = false;
    for (const auto& [e, c] : p.terms()) {
        Integer a = abs(c);
        if (havePrev) {
            if (a > prev) {
                if (falling) return false;
            } else if (a < prev) {
                falling = true;
            }
        }
        prev = a;
        havePrev = true;
    }
    return true;
}

std::string toDecimal(const Integer& z) { return z.get_str(); }

Integer integerFromDecimal(const std::string& s) {
    size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("empty integer literal");
    for (size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw ParseError("bad integer literal '" + s + "'");
    return Integer(s, 10);
}

namespace {

[[noreturn]] void codecError(const std::string& code, size_t pos, const std::string& what) {
    throw ParseError("compact code \"" + code + "\": " + what + " at position " + std::to_string(pos));
}

}  // namespace

LaurentPoly parseCompact(const std::string& code) {
    size_t pos = 0;
    bool negate = false;
    if (pos < code.size() && code[pos] == '-') {
        negate = true;
        ++pos;
    }
    if (pos >= code.size()) codecError(code, pos, "unexpected end");
    LaurentPoly p;
    if (code[pos] != '(') {
        size_t start = pos;
        while (pos < code.size() && code[pos] >= '0' && code[pos] <= '9') ++pos;
        if (pos == start) codecError(code, pos, "expected '(' or a digit");
        if (pos != code.size()) codecError(code, pos, "unexpected character");
        p = LaurentPoly(Integer(code.substr(start, pos - start), 10));
        return negate ? -p : p;
    }
    ++pos;
    std::vector<Integer> digits;
    while (true) {
        if (pos >= code.size()) codecError(code, pos, "missing ')'");
        char ch = code[pos];
        if (ch == ')') {
            ++pos;
            break;
        }
        if (ch >= '0' && ch <= '9') {
            digits.emplace_back(ch - '0');
            ++pos;
        } else if (ch == '[') {
            size_t start = ++pos;
            if (pos < code.size() && code[pos] == '-') ++pos;
            size_t digitStart = pos;
            while (pos < code.size() && code[pos] >= '0' && code[pos] <= '9') ++pos;
            if (pos == digitStart) codecError(code, pos, "expected digits inside brackets");
            if (pos >= code.size() || code[pos] != ']') codecError(code, pos, "missing ']'");
            digits.emplace_back(code.substr(start, pos - start), 10);
            ++pos;
        } else {
            codecError(code, pos, std::string("unexpected character '") + ch + "'");
        }
    }
    if (pos != code.size()) codecError(code, pos, "trailing characters");
    if (digits.empty()) codecError(code, pos - 1, "empty digit list");
    const int m = static_cast<int>(digits.size()) - 1;
    for (int k = 0; k <= m; ++k) {
        const Integer& c = digits[m - k];
        p.addTerm(k, c);
        if (k != 0) p.addTerm(-k, c);
    }
    return negate ? -p : p;
}

std::string emitCompact(const LaurentPoly& p) {
    if (p.isZero()) return "0";
    if (!isPalindromic(p)) throw std::domain_error("emitCompact: polynomial is not palindromic: " + p.toString());
    if (p.isConstant()) return p.coeff(0).get_str();
    const bool negate = signClass(p) == SignClass::AllNegative;
    const int m = p.maxExp();
    std::string out = negate ? "-(" : "(";
    for (int k = m; k >= 0; --k) {
        Integer c = p.coeff(k);
        if (negate) c = -c;
        if (c >= 0 && c <= 9)
            out += static_cast<char>('0' + c.get_si());
        else
            out += "[" + c.get_str() + "]";
    }
    out += ")";
    return out;
}

}  // namespace alphalab
