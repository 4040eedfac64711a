#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace alphalab {

using Integer = mpz_class;
using Rational = mpq_class;

// Exact Laurent polynomial in one variable with arbitrary-precision integer
// coefficients.  Only nonzero coefficients are stored.
class LaurentPoly {
public:
    using Terms = std::map<int, Integer>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: constants convert implicitly
    LaurentPoly(const Integer& c);  // NOLINT

    static LaurentPoly monomial(const Integer& c, int exp);
    static LaurentPoly fromCoeffs(const std::vector<long>& coeffs, int lowExp = 0);

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    Integer coeff(int exp) const;
    void setCoeff(int exp, const Integer& c);
    void addTerm(int exp, const Integer& c);

    int minExp() const;  // 0 for the zero polynomial
    int maxExp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Integer& c);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Multiply by x^k.
    LaurentPoly shifted(int k) const;
    // x -> x^k for k != 0 (k = 2 is the substitution v -> v^2, k = -1 is the bar map).
    LaurentPoly substitutePower(int k) const;
    // Inverse of substitutePower(2); throws if an odd exponent is present.
    LaurentPoly halveExponents() const;
    // Value at x = 1.
    Integer atOne() const;
    Integer evaluate(const Integer& x) const;  // requires minExp() >= 0

    // Exact division in Z[x^{+-1}]; nullopt if the quotient is not integral.
    std::optional<LaurentPoly> exactDivide(const LaurentPoly& d) const;
    // Exact division by an integer; nullopt if some coefficient is not divisible.
    std::optional<LaurentPoly> exactDivide(const Integer& d) const;

    // Human-readable form, e.g. "v^2 - 1 + v^-2".
    std::string toString(const std::string& var = "v") const;

    nlohmann::json toJson() const;
    static LaurentPoly fromJson(const nlohmann::json& j);

private:
    Terms terms_;
};

enum class SignClass { Zero, AllPositive, AllNegative, Mixed };

const char* toString(SignClass s);

bool isPalindromic(const LaurentPoly& p);
SignClass signClass(const LaurentPoly& p);
bool isUnimodalAbs(const LaurentPoly& p);

// Compact palindromic codec: "(a_m...a_1a_0)" stands for
// a_m v^m + ... + a_1 v + a_0 + a_1 v^-1 + ... + a_m v^-m.
LaurentPoly parseCompact(const std::string& code);
std::string emitCompact(const LaurentPoly& p);

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.toString(); }

std::string toDecimal(const Integer& z);
Integer integerFromDecimal(const std::string& s);

}  // namespace alphalab
