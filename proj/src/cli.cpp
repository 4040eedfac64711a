#include "alphalab/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <sstream>

#include "alphalab/alpha.hpp"
#include "alphalab/errors.hpp"
#include "alphalab/io.hpp"

namespace alphalab {

namespace {

using io::json;

enum class Format { Text, Csv, Json };

struct Globals {
    std::string format = "text";
    int jobs = 1;
    std::string backend = "computed";
    std::string dataDir;

    Format fmt() const { return format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Text; }
};

struct Context {
    Globals g;
    std::ostream& out;
    std::ostream& err;

    io::BundleStore store() const {
        return io::BundleStore(g.dataDir.empty() ? io::BundleStore::defaultDir() : std::filesystem::path(g.dataDir));
    }

    AlphaData data(const CartanType& t, int maxLength) const {
        return io::assembleAlphaData(t, io::parseBackend(g.backend), store(), io::TableCache::fromEnvironment(),
                                     maxLength, g.jobs);
    }

    AlphaEngine engine(const CartanType& t, int maxLength) const {
        EngineOptions o;
        o.maxLength = maxLength;
        o.jobs = g.jobs;
        return AlphaEngine(data(t, maxLength), o);
    }
};

std::string num(long x) { return std::to_string(x); }

json provenanceJson(const Context& c, const AlphaData& d) {
    json tables = json::object();
    for (const auto& [k, v] : d.provenance) tables[k] = v;
    return {{"engine", io::TableCache::engineVersion()}, {"backend", c.g.backend}, {"tables", tables}};
}

void textProvenance(std::ostream& os, const Context& c, const AlphaData& d) {
    os << "# engine " << io::TableCache::engineVersion().substr(0, 16) << ", backend " << c.g.backend << "\n";
    for (const auto& [k, v] : d.provenance) os << "# " << k << ": " << v << "\n";
}

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string coverageName(const SurveyReport& r) {
    if (r.coverage == Coverage::AllElements) return "all";
    return "rationally-smooth" + (r.maxLength >= 0 ? ", length <= " + num(r.maxLength) : std::string());
}

std::optional<std::string> witness(const WeylGroup& w, const std::optional<Elt>& z) {
    if (!z) return std::nullopt;
    return w.wordString(*z);
}

json verdictJson(const Verdict& v) { return {{"name", v.name}, {"ok", v.ok}, {"notes", v.notes}}; }

void textVerdict(std::ostream& os, const Verdict& v) {
    os << (v.ok ? "PASS " : "FAIL ") << v.name << "\n";
    for (const auto& n : v.notes) os << "  " << n << "\n";
}

// ---------------------------------------------------------------------------

int cmdTable(const Context& c, const std::string& typeName, const std::string& word) {
    const CartanType type = CartanType::parse(typeName);
    const WeylGroup probe(type);
    const int len = probe.length(probe.parseWord(word));
    const AlphaEngine e = c.engine(type, len);
    const WeylGroup& w = e.group();
    const Elt z = w.parseWord(word);
    const AlphaTable a = e.alpha(z);
    const CharTable& t = e.table();
    switch (c.g.fmt()) {
        case Format::Text:
            c.out << "# alpha " << type.name() << " z = " << w.wordString(z) << ", l(z) = " << len << "\n";
            for (std::size_t i = 0; i < t.size(); ++i)
                if (!a.alphas[i].isZero()) c.out << t.row(i).label << ": " << emitCompact(a.alphas[i]) << "\n";
            textProvenance(c.out, c, e.data());
            break;
        case Format::Csv:
            c.out << "psi,alpha,unimodal,sign,positive\n";
            for (std::size_t i = 0; i < t.size(); ++i)
                c.out << csvField(t.row(i).label) << "," << emitCompact(a.alphas[i]) << "," << a.flags[i].unimodal << ","
                      << a.flags[i].sign << "," << a.flags[i].positive << "\n";
            break;
        case Format::Json: {
            json rows = json::array();
            for (std::size_t i = 0; i < t.size(); ++i)
                rows.push_back({{"psi", t.row(i).label},
                                {"alpha", a.alphas[i].toJson()},
                                {"code", emitCompact(a.alphas[i])},
                                {"unimodal", a.flags[i].unimodal},
                                {"sign", a.flags[i].sign},
                                {"positive", a.flags[i].positive}});
            c.out << json{{"command", "table"}, {"type", type.name()}, {"z", w.wordString(z)}, {"length", num(len)},
                          {"alphas", rows}, {"provenance", provenanceJson(c, e.data())}}
                         .dump(1)
                  << "\n";
            break;
        }
    }
    return 0;
}

int cmdTau(const Context& c, const std::string& typeName, const std::string& word) {
    const CartanType type = CartanType::parse(typeName);
    const WeylGroup probe(type);
    const int len = probe.length(probe.parseWord(word));
    const AlphaEngine e = c.engine(type, len);
    const WeylGroup& w = e.group();
    const Elt z = w.parseWord(word);
    const TauVector tau = e.tau(z);
    const CharTable& t = e.table();
    switch (c.g.fmt()) {
        case Format::Text:
            c.out << "# tau " << type.name() << " z = " << w.wordString(z) << ", l(z) = " << len << "\n";
            for (std::size_t i = 0; i < t.size(); ++i)
                if (!tau.coeffs[i].isZero()) c.out << t.row(i).label << ": " << tau.coeffs[i].toString() << "\n";
            textProvenance(c.out, c, e.data());
            break;
        case Format::Csv:
            c.out << "chi,tau\n";
            for (std::size_t i = 0; i < t.size(); ++i)
                c.out << csvField(t.row(i).label) << "," << csvField(tau.coeffs[i].toString()) << "\n";
            break;
        case Format::Json: {
            json rows = json::array();
            for (std::size_t i = 0; i < t.size(); ++i) rows.push_back({{"chi", t.row(i).label}, {"tau", tau.coeffs[i].toJson()}});
            c.out << json{{"command", "tau"}, {"type", type.name()}, {"z", w.wordString(z)}, {"length", num(len)},
                          {"coefficients", rows}, {"provenance", provenanceJson(c, e.data())}}
                         .dump(1)
                  << "\n";
            break;
        }
    }
    return 0;
}

struct SurveyArgs {
    bool rationallySmooth = false;
    int maxLength = -1;
};

SurveyOptions surveyOptions(const Context& c, const SurveyArgs& s) {
    SurveyOptions o;
    o.coverage = s.rationallySmooth ? Coverage::RationallySmooth : Coverage::AllElements;
    o.maxLength = s.maxLength;
    o.jobs = c.g.jobs;
    return o;
}

json surveyJson(const AlphaEngine& e, const SurveyReport& r) {
    const CharTable& t = e.table();
    const WeylGroup& w = e.group();
    json rows = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& s = r.perChar[i];
        auto wit = [&](const std::optional<Elt>& z) { return z ? json(w.wordString(*z)) : json(nullptr); };
        rows.push_back({{"psi", t.row(i).label},
                        {"springer", e.data().springer.perChar[i].label()},
                        {"failsUnimodal", s.failsUnimodal},
                        {"failsSign", s.failsSign},
                        {"failsPositive", s.failsPositive},
                        {"witnesses", {{"unimodal", wit(s.unimodalWitness)}, {"sign", wit(s.signWitness)}, {"positive", wit(s.positiveWitness)}}},
                        {"inflated", s.inflated}});
    }
    return {{"coverage", r.coverage == Coverage::AllElements ? "all" : "rationally-smooth"},
            {"maxLength", r.maxLength >= 0 ? json(num(r.maxLength)) : json(nullptr)},
            {"elementsCovered", num(static_cast<long>(r.elementsCovered))},
            {"quotients", r.quotientNames},
            {"characters", rows}};
}

int cmdSurvey(const Context& c, const std::string& typeName, const SurveyArgs& sa) {
    const CartanType type = CartanType::parse(typeName);
    const AlphaEngine e = c.engine(type, sa.rationallySmooth ? sa.maxLength : -1);
    const SurveyReport r = classifySurvey(e, surveyOptions(c, sa));
    const CharTable& t = e.table();
    const WeylGroup& w = e.group();
    switch (c.g.fmt()) {
        case Format::Text: {
            c.out << "# survey " << type.name() << ", z: " << coverageName(r) << " (" << r.elementsCovered << " elements)\n";
            std::size_t lw = 5, sw = 8;
            for (std::size_t i = 0; i < t.size(); ++i) {
                lw = std::max(lw, t.row(i).label.size());
                sw = std::max(sw, e.data().springer.perChar[i].label().size());
            }
            auto emit = [&](std::ostringstream& line) {
                std::string l = line.str();
                l.erase(l.find_last_not_of(' ') + 1);
                c.out << l << "\n";
            };
            std::ostringstream head;
            head << std::left << std::setw(static_cast<int>(lw)) << "psi" << "  " << std::setw(static_cast<int>(sw))
                 << "springer" << "  !unimodal  !sign  !positive";
            for (const auto& q : r.quotientNames) head << "  inflated_" << q;
            emit(head);
            for (std::size_t i : e.data().springer.order) {
                const auto& s = r.perChar[i];
                std::ostringstream line;
                line << std::left << std::setw(static_cast<int>(lw)) << t.row(i).label << "  "
                     << std::setw(static_cast<int>(sw)) << e.data().springer.perChar[i].label() << "  " << std::setw(9)
                     << (s.failsUnimodal ? "x" : "") << "  " << std::setw(5) << (s.failsSign ? "x" : "") << "  "
                     << std::setw(9) << (s.failsPositive ? "x" : "");
                for (const auto& q : r.quotientNames)
                    line << "  " << std::setw(static_cast<int>(q.size() + 9)) << (s.inflated.at(q) ? "x" : "");
                emit(line);
            }
            bool inclusion = true;
            for (const auto& s : r.perChar) inclusion = inclusion && (!s.failsUnimodal || s.failsPositive);
            c.out << "# every character satisfying (+) satisfies unimodality: " << (inclusion ? "yes" : "no") << "\n";
            textProvenance(c.out, c, e.data());
            break;
        }
        case Format::Csv:
            c.out << "psi,springer,fails_unimodal,fails_sign,fails_positive";
            for (const auto& q : r.quotientNames) c.out << ",inflated_" << q;
            c.out << ",witness_unimodal,witness_sign,witness_positive\n";
            for (std::size_t i : e.data().springer.order) {
                const auto& s = r.perChar[i];
                c.out << csvField(t.row(i).label) << "," << csvField(e.data().springer.perChar[i].label()) << ","
                      << s.failsUnimodal << "," << s.failsSign << "," << s.failsPositive;
                for (const auto& q : r.quotientNames) c.out << "," << s.inflated.at(q);
                for (const auto* z : {&s.unimodalWitness, &s.signWitness, &s.positiveWitness})
                    c.out << "," << witness(w, *z).value_or("");
                c.out << "\n";
            }
            break;
        case Format::Json: {
            json j = surveyJson(e, r);
            j["command"] = "survey";
            j["type"] = type.name();
            j["provenance"] = provenanceJson(c, e.data());
            c.out << j.dump(1) << "\n";
            break;
        }
    }
    return 0;
}

int emitVerdicts(const Context& c, const std::string& command, const std::string& type, const std::vector<Verdict>& vs,
                 const AlphaData& d) {
    bool ok = true;
    for (const auto& v : vs) ok = ok && v.ok;
    switch (c.g.fmt()) {
        case Format::Text:
            for (const auto& v : vs) textVerdict(c.out, v);
            textProvenance(c.out, c, d);
            break;
        case Format::Csv:
            c.out << "check,ok,notes\n";
            for (const auto& v : vs) {
                std::string notes;
                for (const auto& n : v.notes) notes += (notes.empty() ? "" : "; ") + n;
                c.out << csvField(v.name) << "," << v.ok << "," << csvField(notes) << "\n";
            }
            break;
        case Format::Json: {
            json arr = json::array();
            for (const auto& v : vs) arr.push_back(verdictJson(v));
            c.out << json{{"command", command}, {"type", type}, {"ok", ok}, {"verdicts", arr}, {"provenance", provenanceJson(c, d)}}
                         .dump(1)
                  << "\n";
            break;
        }
    }
    return ok ? 0 : 1;
}

int cmdConjecture(const Context& c, const std::string& typeName, const SurveyArgs& sa) {
    const CartanType type = CartanType::parse(typeName);
    const AlphaEngine e = c.engine(type, sa.rationallySmooth ? sa.maxLength : -1);
    const SurveyReport r = classifySurvey(e, surveyOptions(c, sa));
    Verdict v = verifyConjectureMain(e, r);
    v.notes.insert(v.notes.begin(), "z: " + coverageName(r) + " (" + num(static_cast<long>(r.elementsCovered)) + " elements)");
    return emitVerdicts(c, "conjecture", type.name(), {v}, e.data());
}

int cmdVerify(const Context& c, const std::string& typeName, int maxLength) {
    const CartanType type = CartanType::parse(typeName);
    const AlphaEngine e = c.engine(type, -1);
    const AlphaData& d = e.data();
    std::vector<Verdict> vs;
    vs.push_back(checkGreenTable(d));
    vs.push_back(checkExoticParabolic(d));
    vs.push_back(checkClosedForms(e));
    SurveyOptions o;
    o.jobs = c.g.jobs;
    if (!e.kl()) {
        o.coverage = Coverage::RationallySmooth;
        o.maxLength = maxLength;
    }
    vs.push_back(checkTauPositivity(e, o));
    if (e.kl() && e.group().size() <= 1152) {
        vs.push_back(checkCellVanishing(e));
    } else {
        Verdict skip{"cell vanishing " + type.name(), true, {"skipped: cells are computed for |W| <= 1152"}};
        vs.push_back(skip);
    }
    if (e.kl() && type.isComputed()) {
        const WeylGroup& w = e.group();
        for (int drop = 0; drop < w.rank(); ++drop) {
            std::vector<int> sub;
            for (int i = 0; i < w.rank(); ++i)
                if (i != drop) sub.push_back(i);
            Parabolic p = makeParabolic(w, sub);
            if (!p.group->type().isIrreducible() || p.group->cartan() != cartanMatrix(p.group->type())) continue;
            const AlphaEngine small(computeAlphaData(p.group, -1, c.g.jobs));
            vs.push_back(checkParabolic(e, small, p));
        }
    }
    return emitVerdicts(c, "verify", type.name(), vs, d);
}

int cmdExport(const Context& c, const std::string& typeName, const std::string& kind, const std::string& output) {
    const CartanType type = CartanType::parse(typeName);
    const io::PayloadKind k = io::parseKind(kind);
    const AlphaData d = c.data(type, -1);
    const io::DataBundle b = io::exportBundle(d, k);
    if (output.empty()) {
        c.out << io::toJson(b).dump(1) << "\n";
    } else {
        io::writeBundle(b, output);
        c.err << "wrote " << output << "\n";
    }
    return 0;
}

int cmdIngest(const Context& c, const std::string& path) {
    const io::DataBundle b = io::readBundle(path);
    io::BundleStore store = c.store();
    store.add(b);
    const std::string dest = store.path(b.type, b.kind).string();
    if (c.g.fmt() == Format::Json)
        c.out << json{{"command", "ingest"}, {"type", b.type.name()}, {"payloadKind", io::kindName(b.kind)},
                      {"checksum", b.checksum}, {"path", dest}}
                     .dump(1)
              << "\n";
    else
        c.out << "registered " << b.type.name() << " " << io::kindName(b.kind) << " at " << dest << "\n";
    return 0;
}

int cmdCache(const Context& c, const std::string& action) {
    io::BundleStore store = c.store();
    const io::TableCache cache = io::TableCache::fromEnvironment();
    if (action == "clear") {
        const std::size_t nb = store.clear();
        const std::size_t nc = cache.clear();
        if (c.g.fmt() == Format::Json)
            c.out << json{{"command", "cache"}, {"action", "clear"}, {"bundlesRemoved", num(static_cast<long>(nb))},
                          {"tablesRemoved", num(static_cast<long>(nc))}}
                         .dump(1)
                  << "\n";
        else
            c.out << "removed " << nb << " bundles and " << nc << " cached tables\n";
        return 0;
    }
    const auto bundles = store.list();
    const auto entries = cache.entries();
    if (c.g.fmt() == Format::Json) {
        json bs = json::array();
        for (const auto& b : bundles)
            bs.push_back({{"type", b.type.name()}, {"payloadKind", io::kindName(b.kind)}, {"checksum", b.checksum},
                          {"provenance", b.provenance}});
        json es = json::array();
        for (const auto& p : entries) es.push_back(p.filename().string());
        c.out << json{{"command", "cache"}, {"action", "status"}, {"engine", io::TableCache::engineVersion()},
                      {"dataDir", store.dir().string()}, {"bundles", bs}, {"tableCacheEnabled", cache.enabled()},
                      {"tables", es}}
                     .dump(1)
              << "\n";
    } else {
        c.out << "engine " << io::TableCache::engineVersion() << "\n";
        c.out << "data dir " << store.dir().string() << ": " << bundles.size() << " bundles\n";
        for (const auto& b : bundles)
            c.out << "  " << b.type.name() << " " << io::kindName(b.kind) << " " << b.checksum.substr(0, 16) << "\n";
        c.out << "table cache " << (cache.enabled() ? "enabled" : "disabled (set ALPHALAB_CACHE_DIR)") << ": "
              << entries.size() << " entries\n";
    }
    return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Alpha polynomials of finite Weyl groups", "alphalab"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--backend", g.backend, "Table source")->check(CLI::IsMember({"computed", "data", "auto"}));
    app.add_option("--data-dir", g.dataDir, "Directory of ingested bundles");

    std::string type, word, kind, output, path, action;
    SurveyArgs sa;
    int verifyCap = 10;

    auto* table = app.add_subcommand("table", "Alpha polynomials at one element");
    table->add_option("type", type)->required();
    table->add_option("z", word, "Reduced word, e or w0")->required();
    auto* tau = app.add_subcommand("tau", "Graded class function tau at one element");
    tau->add_option("type", type)->required();
    tau->add_option("z", word)->required();
    auto addSurvey = [&](CLI::App* s) {
        s->add_option("type", type)->required();
        s->add_flag("--rationally-smooth", sa.rationallySmooth, "Only rationally smooth z");
        s->add_option("--max-length", sa.maxLength, "Length cap for --rationally-smooth")->check(CLI::NonNegativeNumber);
    };
    auto* survey = app.add_subcommand("survey", "Classify every character over the covered z");
    addSurvey(survey);
    auto* conj = app.add_subcommand("conjecture", "Check the conjecture on inflated characters");
    addSurvey(conj);
    auto* verify = app.add_subcommand("verify", "Run the theorem self-checks");
    verify->add_option("type", type)->required();
    verify->add_option("--max-length", verifyCap, "Length cap for tau checks without KL polynomials");
    auto* exp = app.add_subcommand("export", "Write a data bundle of computed tables");
    exp->add_option("type", type)->required();
    exp->add_option("--kind", kind, "CharTable, HeckeValues, FourierBlocks, SpringerData or GreenTable")->required();
    exp->add_option("-o,--output", output, "File (default stdout)");
    auto* ingest = app.add_subcommand("ingest", "Validate and register a data bundle");
    ingest->add_option("path", path)->required();
    auto* cache = app.add_subcommand("cache", "Inspect or clear stored bundles and cached tables");
    cache->add_option("action", action)->required()->check(CLI::IsMember({"status", "clear"}));
    for (auto* s : app.get_subcommands({})) s->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (survey->parsed() || conj->parsed())
        if (sa.maxLength >= 0 && !sa.rationallySmooth) {
            err << "error: --max-length needs --rationally-smooth\n";
            return 2;
        }

    const Context c{g, out, err};
    try {
        if (table->parsed()) return cmdTable(c, type, word);
        if (tau->parsed()) return cmdTau(c, type, word);
        if (survey->parsed()) return cmdSurvey(c, type, sa);
        if (conj->parsed()) return cmdConjecture(c, type, sa);
        if (verify->parsed()) return cmdVerify(c, type, verifyCap);
        if (exp->parsed()) return cmdExport(c, type, kind, output);
        if (ingest->parsed()) return cmdIngest(c, path);
        if (cache->parsed()) return cmdCache(c, action);
    } catch (const CapabilityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IntegrityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace alphalab
