#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alphalab/characters.hpp"
#include "alphalab/fourier.hpp"
#include "alphalab/hecke.hpp"
#include "alphalab/heckechar.hpp"
#include "alphalab/springer.hpp"

namespace alphalab {

// Everything the alpha pipeline consumes, from either backend.
struct AlphaData {
    std::shared_ptr<const WeylGroup> group;
    std::shared_ptr<const CharTable> table;
    RationalMatrix fourier;                      // {chi, psi}
    SpringerDatum springer;                      // order and labels
    std::shared_ptr<const GreenTable> green;     // may hold only ungradedP
    std::vector<std::vector<QPoly>> classValues;  // psi(T_w) on class representatives, [char][class]
    std::map<std::string, std::string> provenance;  // table kind -> "computed" or the bundle it came from
};

// Computed backend.  maxLength bounds the class representatives evaluated
// (all of them when negative).
AlphaData computeAlphaData(const CartanType& type, int maxLength = -1, int jobs = 1);
// Same on an existing group (e.g. a standard parabolic); its Cartan matrix must
// be the standard one of its type.
AlphaData computeAlphaData(std::shared_ptr<const WeylGroup> group, int maxLength = -1, int jobs = 1);

struct TauVector {
    Elt z = 0;
    std::vector<LaurentPoly> coeffs;  // (chi, tau_{z,v}), indexed like the character table
};

struct Properties {
    bool unimodal = true;  // nonzero coefficients unimodal in absolute value
    bool sign = true;      // nonzero coefficients of one sign
    bool positive = true;  // nonzero coefficients positive
};
Properties properties(const LaurentPoly& alpha);

struct AlphaTable {
    Elt z = 0;
    std::vector<LaurentPoly> alphas;  // indexed like the character table
    std::vector<Properties> flags;
};

struct EngineOptions {
    int maxLength = -1;  // Hecke values are kept up to this length
    int jobs = 1;
    bool useKL = true;   // without KL polynomials only rationally smooth z work
};

class AlphaEngine {
public:
    explicit AlphaEngine(AlphaData data, EngineOptions opt = {});

    const WeylGroup& group() const { return *data_.group; }
    const CharTable& table() const { return *data_.table; }
    const AlphaData& data() const { return data_; }
    const KLTable* kl() const { return kl_.get(); }
    const HeckeValues& hecke() const { return *hecke_; }
    bool covers(Elt z) const;

    // psi_v(c_z) for every psi.
    std::vector<LaurentPoly> cValues(Elt z) const;
    TauVector tau(Elt z) const;
    AlphaTable alpha(Elt z) const;
    // Solves tau = sum_psi alpha_psi spr_psi; throws if the residual is nonzero.
    std::vector<LaurentPoly> solve(const std::vector<LaurentPoly>& tau) const;

private:
    AlphaData data_;
    EngineOptions opt_;
    std::unique_ptr<KLTable> kl_;
    std::unique_ptr<HeckeValues> hecke_;
    std::vector<std::vector<Integer>> fourierScaled_;
    Integer fourierDen_;
};

// Property checks on tau: v^{l(z)} tau_chi in Z>=0[v^2] of degree <= 2 l(z).
bool tauIsPositiveEven(const WeylGroup& w, const TauVector& t);

// ---------------------------------------------------------------------------
// Quotients onto products of symmetric groups

struct Quotient {
    std::string name;                 // "mod 1212", "mod w0", "onto A1xA2" ...
    std::vector<bool> kernelClasses;  // classes contained in the kernel
    std::size_t order = 0;            // |W/N|
    std::string image;                // "A1xA2", "" for the trivial group
    bool g2ToA2 = false;              // W(G2) onto S3
};

// All normal subgroups N (intersections of character kernels) with W/N a
// product of symmetric groups generated by the images of the simple
// reflections, ordered by decreasing |W/N|.
std::vector<Quotient> symmetricQuotients(const CharTable& t);
// Quotient by the normal closure of one element; image may be empty when the
// quotient is not a product of symmetric groups.
Quotient quotientByElement(const CharTable& t, Elt x, const std::string& name);
bool isInflated(const CharTable& t, int psi, const Quotient& q);

// ---------------------------------------------------------------------------
// Surveys

enum class Coverage { AllElements, RationallySmooth };

struct SurveyOptions {
    Coverage coverage = Coverage::AllElements;
    int maxLength = -1;  // cap on l(z) for RationallySmooth
    int jobs = 1;
};

struct CharacterSurvey {
    bool failsUnimodal = false, failsSign = false, failsPositive = false;
    // ShortLex-least witnesses
    std::optional<Elt> unimodalWitness, signWitness, positiveWitness;
    std::map<std::string, bool> inflated;  // quotient name -> inflated
};

struct SurveyReport {
    std::string type;
    Coverage coverage = Coverage::AllElements;
    int maxLength = -1;
    std::size_t elementsCovered = 0;
    std::vector<CharacterSurvey> perChar;  // indexed like the character table
    std::vector<std::string> quotientNames;
};

// Elements covered by a survey, in ShortLex order.
std::vector<Elt> surveyElements(const AlphaEngine& e, const SurveyOptions& opt);
SurveyReport classifySurvey(const AlphaEngine& e, const SurveyOptions& opt);

// ---------------------------------------------------------------------------
// Self-checks.  Failures are data: ok == false with a message.

struct Verdict {
    std::string name;
    bool ok = true;
    std::vector<std::string> notes;
    void fail(const std::string& why) {
        ok = false;
        notes.push_back(why);
    }
};

// Conjecture check: characters inflated from a product of symmetric groups
// satisfy all three properties, except (+) when the only witnessing quotient
// is W(G2) onto S3.
Verdict verifyConjectureMain(const AlphaEngine& e, const SurveyReport& s);
// Number of characters failing (+) that are not inflated from any quotient.
int nonInflatedPositiveFailures(const AlphaEngine& e, const SurveyReport& s);

// alpha_eps^z = 0 for z != e, alpha_eps^e = 1, alpha_psi^{w0} = 0 for psi != 1,
// alpha_1^{w0} = sum_w v^{2l(w) - l(w0)}.
Verdict checkClosedForms(const AlphaEngine& e);
// alpha_psi^z = 0 when the cell of z lies strictly below the cell of psi.
Verdict checkCellVanishing(const AlphaEngine& e);

// sum_chi {chi, psi} (1, Res chi) = (1, Res psi) for every standard parabolic.
Verdict checkExoticParabolic(const AlphaData& d);
// P Lambda P^T = Omega, P(1) unitriangular in the Springer order, P >= 0.
Verdict checkGreenTable(const AlphaData& d);
// tauIsPositiveEven for every covered z.
Verdict checkTauPositivity(const AlphaEngine& e, const SurveyOptions& opt);

// Coordinates m[psi'][psi] of Ind spr'_{psi'} in the spr basis of W.
std::vector<std::vector<Integer>> inducedSpringerCoordinates(const AlphaEngine& big, const AlphaEngine& small,
                                                             const Parabolic& p);
// tau^W_z = Ind tau^{W'}_z and alpha^W_z = m^T alpha^{W'}_z with m >= 0, for every z in W'.
Verdict checkParabolic(const AlphaEngine& big, const AlphaEngine& small, const Parabolic& p);

}  // namespace alphalab
