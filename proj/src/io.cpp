#include "alphalab/io.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "alphalab/engine_version.hpp"
#include "alphalab/errors.hpp"
#include "alphalab/seminormal.hpp"

namespace alphalab::io {

namespace fs = std::filesystem;

const std::vector<PayloadKind>& allKinds() {
    static const std::vector<PayloadKind> k{PayloadKind::CharTable, PayloadKind::HeckeValues, PayloadKind::FourierBlocks,
                                            PayloadKind::SpringerData, PayloadKind::GreenTable};
    return k;
}

std::string kindName(PayloadKind k) {
    switch (k) {
        case PayloadKind::CharTable: return "CharTable";
        case PayloadKind::HeckeValues: return "HeckeValues";
        case PayloadKind::FourierBlocks: return "FourierBlocks";
        case PayloadKind::SpringerData: return "SpringerData";
        case PayloadKind::GreenTable: return "GreenTable";
    }
    return "?";
}

PayloadKind parseKind(const std::string& s) {
    for (auto k : allKinds())
        if (kindName(k) == s) return k;
    throw ParseError("unknown payload kind '" + s + "' (expected CharTable, HeckeValues, FourierBlocks, SpringerData or GreenTable)");
}

std::string sha256Hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string payloadChecksum(const json& payload) { return sha256Hex(payload.dump()); }

// ---------------------------------------------------------------------------
// Schema helpers

namespace {

[[noreturn]] void violation(const std::string& ptr, const std::string& what) {
    throw ParseError("schema violation at " + (ptr.empty() ? std::string("/") : ptr) + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& ptr) {
    if (!j.is_object()) violation(ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) violation(ptr + "/" + key, "missing");
    return *it;
}

const json& array(const json& j, const std::string& ptr) {
    if (!j.is_array()) violation(ptr, "expected an array");
    return j;
}

std::string str(const json& j, const std::string& ptr) {
    if (!j.is_string()) violation(ptr, "expected a string");
    return j.get<std::string>();
}

Integer integer(const json& j, const std::string& ptr) {
    try {
        return integerFromDecimal(str(j, ptr));
    } catch (const ParseError&) {
        violation(ptr, "expected a decimal integer string");
    }
}

long smallInt(const json& j, const std::string& ptr) {
    Integer z = integer(j, ptr);
    if (!z.fits_slong_p()) violation(ptr, "integer out of range");
    return z.get_si();
}

LaurentPoly poly(const json& j, const std::string& ptr) {
    try {
        return LaurentPoly::fromJson(j);
    } catch (const ParseError& e) {
        violation(ptr, e.what());
    }
}

json rationalJson(const Rational& r) { return json::array({r.get_num().get_str(), r.get_den().get_str()}); }

Rational rational(const json& j, const std::string& ptr) {
    if (!j.is_array() || j.size() != 2) violation(ptr, "expected [numerator, denominator]");
    Integer den = integer(j[1], ptr + "/1");
    if (den == 0) violation(ptr + "/1", "zero denominator");
    Rational r(integer(j[0], ptr + "/0"), den);
    r.canonicalize();
    return r;
}

json qpolyJson(const QPoly& q) { return toLaurent(q).toJson(); }

QPoly qpoly(const json& j, const std::string& ptr) {
    LaurentPoly p = poly(j, ptr);
    if (p.minExp() < 0) violation(ptr, "negative exponent in a polynomial in q");
    QPoly q(p.isZero() ? 0 : p.maxExp() + 1, 0);
    for (const auto& [e, c] : p.terms()) {
        if (!c.fits_slong_p()) violation(ptr, "coefficient out of range");
        q[e] = c.get_si();
    }
    return q;
}

std::vector<std::string> labelsOf(const CharTable& t) {
    std::vector<std::string> l;
    for (const auto& r : t.rows()) l.push_back(r.label);
    return l;
}

// Maps bundle labels to table indices; throws listing every unresolved label.
std::vector<int> resolveLabels(const CharTable& t, const std::vector<std::string>& labels, const std::string& what) {
    std::vector<int> idx;
    std::vector<std::string> missing;
    for (const auto& l : labels) {
        auto i = t.find(l);
        if (i) idx.push_back(*i);
        else missing.push_back(l);
    }
    if (!missing.empty()) {
        std::string m;
        for (const auto& s : missing) m += (m.empty() ? "" : ", ") + s;
        throw ParseError(what + ": unresolved character labels " + m);
    }
    if (std::set<int>(idx.begin(), idx.end()).size() != idx.size()) throw ParseError(what + ": repeated character labels");
    return idx;
}

// Class words of a bundle mapped to class indices of w (a bijection).
std::vector<int> resolveClasses(const WeylGroup& w, const std::vector<std::string>& words, const std::string& ptr) {
    std::vector<int> cls;
    std::set<int> seen;
    for (std::size_t i = 0; i < words.size(); ++i) {
        Elt x;
        try {
            x = w.parseWord(words[i]);
        } catch (const ParseError& e) {
            violation(ptr + "/" + std::to_string(i), e.what());
        }
        const int c = w.classOf(x);
        if (!seen.insert(c).second) violation(ptr + "/" + std::to_string(i), "two entries for one conjugacy class");
        cls.push_back(c);
    }
    if (cls.size() != w.numClasses())
        violation(ptr, "expected " + std::to_string(w.numClasses()) + " classes, got " + std::to_string(cls.size()));
    return cls;
}

std::vector<std::string> stringArray(const json& j, const std::string& ptr) {
    std::vector<std::string> out;
    const json& a = array(j, ptr);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(str(a[i], ptr + "/" + std::to_string(i)));
    return out;
}

// Structural check of a payload (no group needed).
void checkPayload(PayloadKind k, const json& p) {
    const std::string b = "/payload";
    auto checkChars = [&](bool polys) {
        const json& chars = array(field(p, "characters", b), b + "/characters");
        const std::size_t nc = array(field(p, "classes", b), b + "/classes").size();
        for (std::size_t i = 0; i < chars.size(); ++i) {
            const std::string ci = b + "/characters/" + std::to_string(i);
            str(field(chars[i], "label", ci), ci + "/label");
            const json& v = array(field(chars[i], "values", ci), ci + "/values");
            if (v.size() != nc) violation(ci + "/values", "expected one value per class");
            for (std::size_t c = 0; c < v.size(); ++c) {
                const std::string vp = ci + "/values/" + std::to_string(c);
                if (polys) {
                    if (!v[c].is_null()) qpoly(v[c], vp);
                } else {
                    smallInt(v[c], vp);
                }
            }
        }
    };
    switch (k) {
        case PayloadKind::CharTable: {
            const json& cls = array(field(p, "classes", b), b + "/classes");
            for (std::size_t i = 0; i < cls.size(); ++i) {
                const std::string ci = b + "/classes/" + std::to_string(i);
                str(field(cls[i], "word", ci), ci + "/word");
                smallInt(field(cls[i], "size", ci), ci + "/size");
            }
            checkChars(false);
            break;
        }
        case PayloadKind::HeckeValues:
            stringArray(field(p, "classes", b), b + "/classes");
            checkChars(true);
            break;
        case PayloadKind::FourierBlocks: {
            const json& fams = array(field(p, "families", b), b + "/families");
            for (std::size_t i = 0; i < fams.size(); ++i) {
                const std::string fi = b + "/families/" + std::to_string(i);
                const auto mem = stringArray(field(fams[i], "members", fi), fi + "/members");
                str(field(fams[i], "special", fi), fi + "/special");
                const json& m = array(field(fams[i], "matrix", fi), fi + "/matrix");
                if (m.size() != mem.size()) violation(fi + "/matrix", "expected one row per member");
                for (std::size_t r = 0; r < m.size(); ++r) {
                    const std::string ri = fi + "/matrix/" + std::to_string(r);
                    if (array(m[r], ri).size() != mem.size()) violation(ri, "expected one entry per member");
                    for (std::size_t c = 0; c < m[r].size(); ++c) rational(m[r][c], ri + "/" + std::to_string(c));
                }
            }
            break;
        }
        case PayloadKind::SpringerData: {
            str(field(p, "convention", b), b + "/convention");
            const auto order = stringArray(field(p, "ordering", b), b + "/ordering");
            const json& blocks = array(field(p, "blocks", b), b + "/blocks");
            for (std::size_t i = 0; i < blocks.size(); ++i)
                stringArray(blocks[i], b + "/blocks/" + std::to_string(i));
            const json& per = field(p, "perCharacter", b);
            if (!per.is_object()) violation(b + "/perCharacter", "expected an object");
            for (const auto& l : order) {
                const std::string pi = b + "/perCharacter/" + l;
                const json& e = field(per, l, b + "/perCharacter");
                str(field(e, "classLabel", pi), pi + "/classLabel");
                str(field(e, "localSystem", pi), pi + "/localSystem");
                smallInt(field(e, "du", pi), pi + "/du");
            }
            break;
        }
        case PayloadKind::GreenTable: {
            const auto labels = stringArray(field(p, "labels", b), b + "/labels");
            for (const char* key : {"P", "Lambda"}) {
                const std::string mp = b + "/" + key;
                const json& m = array(field(p, key, b), mp);
                if (m.size() != labels.size()) violation(mp, "expected one row per label");
                for (std::size_t r = 0; r < m.size(); ++r) {
                    const std::string rp = mp + "/" + std::to_string(r);
                    if (array(m[r], rp).size() != labels.size()) violation(rp, "expected one entry per label");
                    for (std::size_t c = 0; c < m[r].size(); ++c) qpoly(m[r][c], rp + "/" + std::to_string(c));
                }
            }
            break;
        }
    }
}

}  // namespace

json toJson(const DataBundle& b) {
    return json{{"cartanType", b.type.name()},
                {"schemaVersion", b.schemaVersion},
                {"payloadKind", kindName(b.kind)},
                {"payload", b.payload},
                {"provenance", b.provenance},
                {"checksum", b.checksum}};
}

DataBundle bundleFromJson(const json& j) {
    DataBundle b;
    if (!j.is_object()) violation("", "expected an object");
    try {
        b.type = CartanType::parse(str(field(j, "cartanType", ""), "/cartanType"));
    } catch (const CapabilityError&) {
        throw;
    }
    const json& v = field(j, "schemaVersion", "");
    if (!v.is_number_integer()) violation("/schemaVersion", "expected an integer");
    b.schemaVersion = v.get<int>();
    if (b.schemaVersion != kSchemaVersion)
        throw ParseError("unsupported schemaVersion " + std::to_string(b.schemaVersion) + " (supported: " +
                         std::to_string(kSchemaVersion) + ")");
    b.kind = parseKind(str(field(j, "payloadKind", ""), "/payloadKind"));
    b.payload = field(j, "payload", "");
    b.provenance = str(field(j, "provenance", ""), "/provenance");
    b.checksum = str(field(j, "checksum", ""), "/checksum");
    checkPayload(b.kind, b.payload);
    if (payloadChecksum(b.payload) != b.checksum)
        throw IntegrityError("checksum mismatch for " + b.type.name() + " " + kindName(b.kind) + " bundle");
    return b;
}

DataBundle readBundle(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ParseError("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    json j;
    try {
        j = json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw ParseError("schema violation at /: " + p.string() + " is not valid JSON (" + e.what() + ")");
    }
    return bundleFromJson(j);
}

void writeBundle(const DataBundle& b, const fs::path& p) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    const fs::path tmp = p.string() + "." + std::to_string(::getpid()) + ".tmp";  // rename is atomic
    {
        std::ofstream out(tmp, std::ios::binary);
        out << toJson(b).dump(1) << "\n";
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, p);
}

// ---------------------------------------------------------------------------
// Export

DataBundle exportBundle(const AlphaData& d, PayloadKind k) {
    const WeylGroup& w = *d.group;
    const CharTable& t = *d.table;
    const auto labels = labelsOf(t);
    json p;
    std::vector<std::string> words;
    for (const auto& c : w.classes()) words.push_back(w.wordString(c.rep));
    switch (k) {
        case PayloadKind::CharTable: {
            p["classes"] = json::array();
            for (const auto& c : w.classes())
                p["classes"].push_back({{"word", w.wordString(c.rep)}, {"size", std::to_string(c.size)}});
            p["characters"] = json::array();
            for (const auto& r : t.rows()) {
                json v = json::array();
                for (long x : r.values) v.push_back(std::to_string(x));
                p["characters"].push_back({{"label", r.label}, {"values", v}});
            }
            break;
        }
        case PayloadKind::HeckeValues: {
            p["classes"] = words;
            p["characters"] = json::array();
            for (std::size_t i = 0; i < t.size(); ++i) {
                json v = json::array();
                for (std::size_t c = 0; c < w.numClasses(); ++c) {
                    const QPoly& q = d.classValues[i][c];
                    v.push_back(q.empty() ? json(nullptr) : qpolyJson(q));
                }
                p["characters"].push_back({{"label", labels[i]}, {"values", v}});
            }
            break;
        }
        case PayloadKind::FourierBlocks: {
            p["families"] = json::array();
            // Families are the connected components of the support of the matrix.
            std::vector<int> comp(t.size(), -1);
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (comp[i] >= 0) continue;
                std::vector<std::size_t> stack{i};
                comp[i] = static_cast<int>(i);
                while (!stack.empty()) {
                    const std::size_t a = stack.back();
                    stack.pop_back();
                    for (std::size_t b = 0; b < t.size(); ++b)
                        if (comp[b] < 0 && (d.fourier[a][b] != 0 || d.fourier[b][a] != 0)) {
                            comp[b] = static_cast<int>(i);
                            stack.push_back(b);
                        }
                }
            }
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (comp[i] != static_cast<int>(i)) continue;
                std::vector<int> mem;
                for (std::size_t j = 0; j < t.size(); ++j)
                    if (comp[j] == static_cast<int>(i)) mem.push_back(static_cast<int>(j));
                json f;
                f["members"] = json::array();
                f["matrix"] = json::array();
                int special = mem.front();
                for (int m : mem) {
                    f["members"].push_back(labels[m]);
                    if (t.row(m).b == t.row(m).a) special = m;
                    json row = json::array();
                    for (int m2 : mem) row.push_back(rationalJson(d.fourier[m][m2]));
                    f["matrix"].push_back(row);
                }
                f["special"] = labels[special];
                p["families"].push_back(f);
            }
            break;
        }
        case PayloadKind::SpringerData: {
            const auto& s = d.springer;
            p["convention"] = s.convention;
            p["ordering"] = json::array();
            for (int i : s.order) p["ordering"].push_back(labels[i]);
            p["blocks"] = json::array();
            for (const auto& blk : s.blocks) {
                json a = json::array();
                for (int i : blk) a.push_back(labels[i]);
                p["blocks"].push_back(a);
            }
            p["perCharacter"] = json::object();
            for (std::size_t i = 0; i < t.size(); ++i) {
                const auto& e = s.perChar[i];
                p["perCharacter"][labels[i]] = {
                    {"classLabel", e.classLabel}, {"localSystem", e.kappa}, {"du", std::to_string(e.du)}};
            }
            break;
        }
        case PayloadKind::GreenTable: {
            if (d.green->P.empty()) throw CapabilityError("Green table holds only the ungraded matrix");
            p["labels"] = labels;
            for (const char* key : {"P", "Lambda"}) {
                const PolyMatrix& m = std::string(key) == "P" ? d.green->P : d.green->Lambda;
                json rows = json::array();
                for (const auto& r : m) {
                    json row = json::array();
                    for (const auto& x : r) row.push_back(x.toJson());
                    rows.push_back(row);
                }
                p[key] = rows;
            }
            break;
        }
    }
    DataBundle b;
    b.type = w.type();
    b.kind = k;
    b.payload = p;
    auto it = d.provenance.find(kindName(k));
    b.provenance = it == d.provenance.end() ? "computed" : it->second;
    if (b.provenance == "computed") b.provenance = "computed by alphalab engine " + TableCache::engineVersion().substr(0, 16);
    b.checksum = payloadChecksum(p);
    return b;
}

// ---------------------------------------------------------------------------
// Import

namespace {

std::shared_ptr<CharTable> buildCharTable(const WeylGroup& w, const DataBundle& b) {
    const json& p = b.payload;
    std::vector<std::string> words;
    for (const auto& c : p["classes"]) words.push_back(c["word"].get<std::string>());
    const auto cls = resolveClasses(w, words, "/payload/classes");
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (static_cast<std::size_t>(smallInt(p["classes"][i]["size"], "")) != w.classes()[cls[i]].size)
            violation("/payload/classes/" + std::to_string(i) + "/size", "class size disagrees with the group");
    std::vector<CharRow> rows;
    std::vector<CharParam> params;
    for (const auto& c : p["characters"]) {
        CharRow r;
        r.label = c["label"].get<std::string>();
        r.values.assign(w.numClasses(), 0);
        for (std::size_t i = 0; i < cls.size(); ++i) r.values[cls[i]] = smallInt(c["values"][i], "");
        rows.push_back(r);
        params.emplace_back();
    }
    if (rows.size() != w.numClasses()) throw ParseError("CharTable bundle: expected one character per class");
    auto t = std::make_shared<CharTable>(w, rows, params);
    if (w.type().isComputed()) {
        // Labels must name the same characters as the computed table.
        auto ref = characterTable(w);
        const auto idx = resolveLabels(*ref, labelsOf(*t), "CharTable bundle");
        for (std::size_t i = 0; i < idx.size(); ++i)
            if (ref->row(idx[i]).values != t->row(i).values)
                throw ParseError("CharTable bundle: values of " + t->row(i).label + " disagree with the computed table");
    }
    return t;
}

}  // namespace

std::shared_ptr<const CharTable> charTableFromBundle(const WeylGroup& w, const DataBundle& b) {
    return buildCharTable(w, b);
}

namespace {

void validateLabels(const DataBundle& b) {
    if (!b.type.isComputed() || b.kind == PayloadKind::CharTable) return;
    WeylGroup w(b.type);
    auto t = characterTable(w);
    std::vector<std::string> labels;
    const json& p = b.payload;
    switch (b.kind) {
        case PayloadKind::HeckeValues:
            for (const auto& c : p["characters"]) labels.push_back(c["label"].get<std::string>());
            break;
        case PayloadKind::FourierBlocks:
            for (const auto& f : p["families"])
                for (const auto& m : f["members"]) labels.push_back(m.get<std::string>());
            break;
        case PayloadKind::SpringerData:
            for (const auto& l : p["ordering"]) labels.push_back(l.get<std::string>());
            break;
        case PayloadKind::GreenTable:
            for (const auto& l : p["labels"]) labels.push_back(l.get<std::string>());
            break;
        default:
            break;
    }
    const auto idx = resolveLabels(*t, labels, kindName(b.kind) + " bundle");
    if (idx.size() != t->size()) throw ParseError(kindName(b.kind) + " bundle: expected every character exactly once");
}

RationalMatrix fourierFromBundle(const CharTable& t, const DataBundle& b) {
    RationalMatrix f(t.size(), std::vector<Rational>(t.size(), 0));
    std::set<int> seen;
    for (const auto& fam : b.payload["families"]) {
        std::vector<std::string> mem;
        for (const auto& m : fam["members"]) mem.push_back(m.get<std::string>());
        const auto idx = resolveLabels(t, mem, "FourierBlocks bundle");
        for (std::size_t r = 0; r < idx.size(); ++r) {
            if (!seen.insert(idx[r]).second) throw ParseError("FourierBlocks bundle: " + mem[r] + " in two families");
            for (std::size_t c = 0; c < idx.size(); ++c) f[idx[r]][idx[c]] = rational(fam["matrix"][r][c], "");
        }
    }
    if (seen.size() != t.size()) throw ParseError("FourierBlocks bundle: families do not cover every character");
    return f;
}

SpringerDatum springerFromBundle(const CharTable& t, const DataBundle& b) {
    const json& p = b.payload;
    SpringerDatum s;
    s.convention = p["convention"].get<std::string>();
    s.perChar.resize(t.size());
    std::vector<std::string> order;
    for (const auto& l : p["ordering"]) order.push_back(l.get<std::string>());
    s.order = resolveLabels(t, order, "SpringerData bundle");
    if (s.order.size() != t.size()) throw ParseError("SpringerData bundle: ordering must list every character");
    std::size_t pos = 0;
    for (const auto& blk : p["blocks"]) {
        std::vector<std::string> mem;
        for (const auto& l : blk) mem.push_back(l.get<std::string>());
        const auto idx = resolveLabels(t, mem, "SpringerData bundle");
        for (int i : idx) {
            if (pos >= s.order.size() || s.order[pos] != i)
                throw ParseError("SpringerData bundle: blocks are not consecutive in the ordering");
            s.perChar[i].block = static_cast<int>(s.blocks.size());
            ++pos;
        }
        s.blocks.push_back(idx);
    }
    if (pos != s.order.size()) throw ParseError("SpringerData bundle: blocks do not cover the ordering");
    for (std::size_t k = 0; k < order.size(); ++k) {
        const json& e = p["perCharacter"][order[k]];
        auto& en = s.perChar[s.order[k]];
        en.classLabel = e["classLabel"].get<std::string>();
        en.kappa = e["localSystem"].get<std::string>();
        en.du = static_cast<int>(smallInt(e["du"], ""));
        en.leader = en.kappa.empty();
    }
    return s;
}

std::shared_ptr<const GreenTable> greenFromBundle(const CharTable& t, const DataBundle& b) {
    const json& p = b.payload;
    std::vector<std::string> labels;
    for (const auto& l : p["labels"]) labels.push_back(l.get<std::string>());
    const auto idx = resolveLabels(t, labels, "GreenTable bundle");
    if (idx.size() != t.size()) throw ParseError("GreenTable bundle: expected every character exactly once");
    auto g = std::make_shared<GreenTable>();
    const std::size_t n = t.size();
    g->P.assign(n, std::vector<LaurentPoly>(n));
    g->Lambda.assign(n, std::vector<LaurentPoly>(n));
    g->ungradedP.assign(n, std::vector<long>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            g->P[idx[r]][idx[c]] = poly(p["P"][r][c], "");
            g->Lambda[idx[r]][idx[c]] = poly(p["Lambda"][r][c], "");
            g->ungradedP[idx[r]][idx[c]] = g->P[idx[r]][idx[c]].atOne().get_si();
        }
    return g;
}

std::vector<std::vector<QPoly>> heckeFromBundle(const WeylGroup& w, const CharTable& t, const DataBundle& b) {
    const json& p = b.payload;
    std::vector<std::string> words;
    for (const auto& c : p["classes"]) words.push_back(c.get<std::string>());
    const auto cls = resolveClasses(w, words, "/payload/classes");
    std::vector<std::string> labels;
    for (const auto& c : p["characters"]) labels.push_back(c["label"].get<std::string>());
    const auto idx = resolveLabels(t, labels, "HeckeValues bundle");
    if (idx.size() != t.size()) throw ParseError("HeckeValues bundle: expected every character exactly once");
    std::vector<std::vector<QPoly>> v(t.size(), std::vector<QPoly>(w.numClasses()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cls.size(); ++c) {
            const json& x = p["characters"][i]["values"][c];
            if (!x.is_null()) v[idx[i]][cls[c]] = qpoly(x, "");
        }
    return v;
}

std::string envOr(const char* name) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : std::string();
}

}  // namespace

// ---------------------------------------------------------------------------
// Store and cache

fs::path BundleStore::defaultDir() {
    if (auto d = envOr("ALPHALAB_CACHE_DIR"); !d.empty()) return d;
    if (auto d = envOr("XDG_CACHE_HOME"); !d.empty()) return fs::path(d) / "alphalab";
    if (auto d = envOr("HOME"); !d.empty()) return fs::path(d) / ".cache" / "alphalab";
    return fs::temp_directory_path() / "alphalab";
}

fs::path BundleStore::path(const CartanType& t, PayloadKind k) const {
    return dir_ / "bundles" / t.name() / (kindName(k) + ".json");
}

void BundleStore::add(const DataBundle& b) {
    validateLabels(b);
    if (b.kind == PayloadKind::CharTable) {
        WeylGroup w(b.type);
        charTableFromBundle(w, b);
    }
    writeBundle(b, path(b.type, b.kind));
}

std::optional<DataBundle> BundleStore::find(const CartanType& t, PayloadKind k) const {
    const fs::path p = path(t, k);
    if (!fs::exists(p)) return std::nullopt;
    return readBundle(p);
}

std::vector<DataBundle> BundleStore::list() const {
    std::vector<DataBundle> out;
    const fs::path root = dir_ / "bundles";
    if (!fs::exists(root)) return out;
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(readBundle(f));
    return out;
}

std::size_t BundleStore::clear() {
    const fs::path root = dir_ / "bundles";
    if (!fs::exists(root)) return 0;
    std::size_t n = 0;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file()) ++n;
    fs::remove_all(root);
    return n;
}

TableCache TableCache::fromEnvironment() {
    const auto d = envOr("ALPHALAB_CACHE_DIR");
    if (d.empty()) return TableCache(std::nullopt);
    return TableCache(fs::path(d));
}

std::string TableCache::engineVersion() { return ALPHALAB_ENGINE_HASH; }

fs::path TableCache::file(const CartanType& t, PayloadKind k, const std::string& params) const {
    const std::string key = engineVersion() + "|" + t.name() + "|" + kindName(k) + "|" + params;
    return *dir_ / "tables" / (t.name() + "-" + kindName(k) + "-" + sha256Hex(key).substr(0, 24) + ".json");
}

std::optional<DataBundle> TableCache::load(const CartanType& t, PayloadKind k, const std::string& params) const {
    if (!dir_) return std::nullopt;
    const fs::path p = file(t, k, params);
    if (!fs::exists(p)) return std::nullopt;
    try {
        return readBundle(p);
    } catch (const std::exception&) {
        return std::nullopt;  // damaged entries are recomputed and overwritten
    }
}

void TableCache::store(const DataBundle& b, const std::string& params) const {
    if (!dir_) return;
    writeBundle(b, file(b.type, b.kind, params));
}

std::vector<fs::path> TableCache::entries() const {
    std::vector<fs::path> out;
    if (!dir_ || !fs::exists(*dir_ / "tables")) return out;
    for (const auto& e : fs::directory_iterator(*dir_ / "tables"))
        if (e.is_regular_file()) out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t TableCache::clear() const {
    const auto e = entries();
    if (dir_) fs::remove_all(*dir_ / "tables");
    return e.size();
}

Backend parseBackend(const std::string& s) {
    if (s == "computed") return Backend::Computed;
    if (s == "data") return Backend::Data;
    if (s == "auto") return Backend::Auto;
    throw ParseError("unknown backend '" + s + "' (expected computed, data or auto)");
}

AlphaData assembleAlphaData(const CartanType& type, Backend backend, const BundleStore& store, const TableCache& cache,
                            int maxLength, int jobs) {
    if (!type.isIrreducible()) throw CapabilityError("reducible types are not supported; give one irreducible component");
    const bool computable = type.isComputed();
    if (backend == Backend::Computed && !computable)
        throw CapabilityError(type.name() + " is available only through the data backend (ingest bundles and use --backend data or auto)");
    const bool useData = backend == Backend::Data || !computable;
    auto need = [&](PayloadKind k) {
        auto b = store.find(type, k);
        if (!b) throw CapabilityError("no ingested " + kindName(k) + " bundle for " + type.name());
        return *b;
    };

    AlphaData d;
    d.group = std::make_shared<const WeylGroup>(type);
    const WeylGroup& w = *d.group;
    if (!useData) {
        d.table = characterTable(w);
        d.fourier = exoticFourier(*d.table);
        d.springer = springerCorrespondence(*d.table);
        if (auto b = cache.load(type, PayloadKind::GreenTable, "")) {
            d.green = greenFromBundle(*d.table, *b);
        } else {
            d.green = std::make_shared<const GreenTable>(greenTable(*d.table, d.springer));
            d.provenance["GreenTable"] = "computed";
            cache.store(exportBundle(d, PayloadKind::GreenTable), "");
        }
        const std::string hp = "maxLength=" + std::to_string(maxLength);
        if (auto b = cache.load(type, PayloadKind::HeckeValues, hp)) {
            d.classValues = heckeFromBundle(w, *d.table, *b);
        } else {
            std::vector<SeminormalModel> models;
            for (std::size_t i = 0; i < d.table->size(); ++i) models.push_back(seminormalModel(type, d.table->param(i)));
            d.classValues = classRepresentativeValues(w, models, maxLength, jobs);
            cache.store(exportBundle(d, PayloadKind::HeckeValues), hp);
        }
        for (auto k : allKinds()) d.provenance[kindName(k)] = "computed";
        return d;
    }
    const DataBundle ct = need(PayloadKind::CharTable);
    auto table = buildCharTable(w, ct);
    const DataBundle hv = need(PayloadKind::HeckeValues);
    const DataBundle fb = need(PayloadKind::FourierBlocks);
    const DataBundle sp = need(PayloadKind::SpringerData);
    const DataBundle gt = need(PayloadKind::GreenTable);
    d.fourier = fourierFromBundle(*table, fb);
    // a-invariant: b of the special member of the family.
    std::vector<int> a(table->size(), 0);
    for (const auto& fam : fb.payload["families"]) {
        const int special = table->index(fam["special"].get<std::string>());
        for (const auto& m : fam["members"]) a[table->index(m.get<std::string>())] = table->row(special).b;
    }
    table->setAInvariants(a);
    d.table = table;
    d.classValues = heckeFromBundle(w, *d.table, hv);
    d.springer = springerFromBundle(*d.table, sp);
    d.green = greenFromBundle(*d.table, gt);
    for (const auto* b : {&ct, &hv, &fb, &sp, &gt})
        d.provenance[kindName(b->kind)] = "data: " + store.path(type, b->kind).string() + " (" + b->provenance + ")";
    return d;
}

}  // namespace alphalab::io
