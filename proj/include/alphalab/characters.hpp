#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alphalab/laurent.hpp"
#include "alphalab/partitions.hpp"
#include "alphalab/weyl.hpp"

namespace alphalab {

// One value per conjugacy class of the group it was built for.
struct ClassFunction {
    std::vector<LaurentPoly> values;
    bool operator==(const ClassFunction&) const = default;
};

struct CharRow {
    std::string label;
    std::vector<long> values;  // per class
    long degree = 0;
    int b = 0;  // lowest degree in the fake degree
    int a = 0;  // a-invariant (b of the special member of the family)
};

// Which combinatorial object labels a row.  For type D the pair is unordered
// and `split` is +1/-1 for the two halves of a pair with xi == eta.
struct CharParam {
    Partition lambda;   // type A
    Bipartition bip;    // types B, C, D
    int split = 0;
    int g2 = -1;        // type G2: position in the fixed G2 order
};

class CharTable {
public:
    CharTable(const WeylGroup& w, std::vector<CharRow> rows, std::vector<CharParam> params);

    const WeylGroup& group() const { return *group_; }
    std::size_t size() const { return rows_.size(); }
    const CharRow& row(std::size_t i) const { return rows_[i]; }
    const std::vector<CharRow>& rows() const { return rows_; }
    const CharParam& param(std::size_t i) const { return params_[i]; }
    std::optional<int> find(const std::string& label) const;
    int index(const std::string& label) const;  // throws ParseError for unknown labels
    int trivialIndex() const { return trivial_; }
    int signIndex() const { return sign_; }
    ClassFunction classFunction(std::size_t i) const;
    const std::vector<LaurentPoly>& fakeDegrees() const { return fake_; }

    void setAInvariants(const std::vector<int>& a);

private:
    const WeylGroup* group_;
    std::vector<CharRow> rows_;
    std::vector<CharParam> params_;
    std::map<std::string, int> labelIndex_;
    std::vector<LaurentPoly> fake_;
    int trivial_ = -1, sign_ = -1;
};

// Character table of an irreducible computed type, with labels in the usual
// CHEVIE style: partitions for A, "xi.eta" for B/C, unordered pairs for D
// ("1.3", split pairs "2+" / "2-" printed with a middle dot), phi-names for G2.
// Cached per group object.
std::shared_ptr<const CharTable> characterTable(const WeylGroup& w);

// Signed permutation of e_1..e_n induced by w (types A, B, C, D only).
SignedPerm signedPermutation(const WeylGroup& w, Elt x);

// prod_i (1 - q^{d_i}) / det(1 - q w_c) per class: the graded trace of w_c on
// the coinvariant algebra.
std::vector<LaurentPoly> coinvariantTraces(const WeylGroup& w);

ClassFunction classFunction(const std::vector<long>& values);
ClassFunction signCharacter(const WeylGroup& w);
ClassFunction trivialCharacter(const WeylGroup& w);
// (1/|W|) sum_c |c| f(c) g(c); the characters involved are real.
LaurentPoly scalarProduct(const WeylGroup& w, const ClassFunction& f, const ClassFunction& g);
// Exact rational scalar product of integer class functions.
Rational scalarProduct(const WeylGroup& w, const std::vector<long>& f, const std::vector<long>& g);
ClassFunction induceFromParabolic(const WeylGroup& w, const Parabolic& p, const ClassFunction& f);
// (1_{W'}, Res chi)
long trivialMultiplicityOnParabolic(const WeylGroup& w, const Parabolic& p, const std::vector<long>& chi);
// Restriction of a class function of W to W'.
ClassFunction restrictToParabolic(const Parabolic& p, const ClassFunction& f);

// Decomposition of a class function into irreducibles; throws if not integral.
std::vector<LaurentPoly> decompose(const CharTable& t, const ClassFunction& f);

}  // namespace alphalab
