#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alphalab/laurent.hpp"

namespace alphalab {

using Matrix = std::vector<std::vector<int>>;

struct CartanComponent {
    char family = 'A';
    int rank = 1;
    bool operator==(const CartanComponent&) const = default;
};

// Cartan type, possibly reducible ("A1xA2").  B and C are distinct values
// even though they share the Weyl group.
class CartanType {
public:
    CartanType() = default;
    explicit CartanType(std::vector<CartanComponent> comps) : components_(std::move(comps)) {}
    CartanType(char family, int rank) : components_{{family, rank}} {}

    // Accepts "B3", "G2", "A1xA2" (also "A1*A2").  H and I raise CapabilityError.
    static CartanType parse(const std::string& text);

    const std::vector<CartanComponent>& components() const { return components_; }
    std::string name() const;
    int rank() const;
    bool isIrreducible() const { return components_.size() == 1; }
    // Families A, B, C, D, G with rank <= 7; F and E only through the data backend.
    bool isComputed() const;
    char family() const { return components_.at(0).family; }
    int n() const { return components_.at(0).rank; }

    bool operator==(const CartanType&) const = default;

private:
    std::vector<CartanComponent> components_;
};

// Cartan matrix with cartan[i][j] = <alpha_i^vee, alpha_j>, CHEVIE numbering.
Matrix cartanMatrix(const CartanType& t);

// Identifies the families of a Cartan matrix (components in order of their
// smallest index).  The numbering may differ from cartanMatrix(result); compare
// the matrices when the CHEVIE numbering matters.
CartanType recognizeCartan(const Matrix& a);

using Elt = std::uint32_t;

struct ConjClass {
    Elt rep = 0;        // ShortLex-least element of minimal length
    std::size_t size = 0;
    std::string name;  // reduced word of rep, "e" for the identity
};

// A finite Weyl group with all elements enumerated.  Elements are indices
// 0..size()-1 sorted by (length, ShortLex word); index 0 is the identity.
// Generators are 0-based internally and printed 1-based.
class WeylGroup {
public:
    explicit WeylGroup(const CartanType& t);
    WeylGroup(const CartanType& t, const Matrix& cartan);

    const CartanType& type() const { return type_; }
    int rank() const { return rank_; }
    const Matrix& cartan() const { return cartan_; }

    // Root data in simple-root coordinates.
    const std::vector<std::vector<int>>& positiveRoots() const { return posRoots_; }
    int numPositiveRoots() const { return static_cast<int>(posRoots_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }

    std::size_t size() const { return length_.size(); }
    Elt identity() const { return 0; }
    Elt longest() const { return static_cast<Elt>(size() - 1); }
    int length(Elt w) const { return length_[w]; }
    std::vector<int> word(Elt w) const;
    std::string wordString(Elt w) const;  // "e" for identity

    Elt lmul(int s, Elt w) const { return lmul_[s * size() + w]; }
    Elt rmul(Elt w, int s) const { return rmul_[s * size() + w]; }
    Elt inverse(Elt w) const { return inv_[w]; }
    Elt multiply(Elt a, Elt b) const;
    Elt fromWord(const std::vector<int>& gens) const;  // any word, 0-based
    // "e", "w0" or a digit string of 1-based generators.
    Elt parseWord(const std::string& text) const;

    bool isLeftDescent(int s, Elt w) const { return length_[lmul(s, w)] < length_[w]; }
    bool isRightDescent(Elt w, int s) const { return length_[rmul(w, s)] < length_[w]; }
    std::uint32_t leftDescents(Elt w) const;
    std::uint32_t rightDescents(Elt w) const;
    int firstLeftDescent(Elt w) const;

    bool bruhatLeq(Elt y, Elt z) const;
    // Membership vector of the lower Bruhat interval [e, z].
    std::vector<bool> lowerIntervalMask(Elt z) const;
    std::vector<Elt> lowerInterval(Elt z) const;
    // Carrell-Peterson: [e, z] has palindromic rank generating function.
    bool isRationallySmoothByInterval(Elt z) const;

    // Matrix of w on the root lattice in the simple-root basis.
    Matrix reflectionMatrix(Elt w) const;
    // det(1 - q w) on the reflection representation, as a polynomial in q.
    LaurentPoly charPolyReflection(Elt w) const;
    int inversionCount(Elt w) const;  // positive roots sent negative

    // Poincare polynomial sum_w q^{l(w)}.
    LaurentPoly poincarePolynomial() const;

    const std::vector<ConjClass>& classes() const { return classes_; }
    int classOf(Elt w) const { return classOf_[w]; }
    std::size_t numClasses() const { return classes_.size(); }

private:
    void build();
    void buildRoots();
    void buildClasses();

    CartanType type_;
    Matrix cartan_;
    int rank_ = 0;
    std::vector<std::vector<int>> posRoots_;
    std::vector<int> degrees_;
    std::vector<std::uint8_t> length_;
    std::vector<std::uint64_t> wordOffset_;
    std::vector<std::uint8_t> words_;
    std::vector<Elt> lmul_, rmul_, inv_;
    std::vector<ConjClass> classes_;
    std::vector<int> classOf_;
};

// Standard parabolic subgroup W_J of W.
struct Parabolic {
    std::vector<int> subset;                 // 0-based simple indices of W
    std::shared_ptr<const WeylGroup> group;  // W_J with its own numbering
    std::vector<Elt> embed;                  // element of W_J -> element of W
    std::vector<int> fusion;                 // class of W_J -> class of W
};

Parabolic makeParabolic(const WeylGroup& w, const std::vector<int>& subset);
std::vector<Parabolic> standardParabolics(const WeylGroup& w);

}  // namespace alphalab
