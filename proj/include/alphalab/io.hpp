#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphalab/alpha.hpp"

namespace alphalab {

// Bundle checksum does not match its payload.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace io {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

enum class PayloadKind { CharTable, HeckeValues, FourierBlocks, SpringerData, GreenTable };
const std::vector<PayloadKind>& allKinds();
std::string kindName(PayloadKind k);
PayloadKind parseKind(const std::string& s);  // ParseError on unknown names

struct DataBundle {
    CartanType type;
    int schemaVersion = kSchemaVersion;
    PayloadKind kind = PayloadKind::CharTable;
    json payload;
    std::string provenance;
    std::string checksum;  // hex SHA-256 of payload.dump()
};

std::string sha256Hex(const std::string& bytes);
std::string payloadChecksum(const json& payload);

json toJson(const DataBundle& b);
// Validates the envelope, the payload schema and the checksum.  Schema
// violations raise ParseError naming the JSON pointer of the offending value.
DataBundle bundleFromJson(const json& j);
DataBundle readBundle(const std::filesystem::path& p);
void writeBundle(const DataBundle& b, const std::filesystem::path& p);

// Payloads of the computed backend.
DataBundle exportBundle(const AlphaData& d, PayloadKind k);

// Ingested bundles, one per (type, kind), kept under <dir>/bundles.
class BundleStore {
public:
    explicit BundleStore(std::filesystem::path dir) : dir_(std::move(dir)) {}
    // Default: $ALPHALAB_CACHE_DIR, else $XDG_CACHE_HOME/alphalab, else ~/.cache/alphalab.
    static std::filesystem::path defaultDir();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path(const CartanType& t, PayloadKind k) const;
    // Validates labels against the computed table when the type is computed.
    void add(const DataBundle& b);
    std::optional<DataBundle> find(const CartanType& t, PayloadKind k) const;
    std::vector<DataBundle> list() const;
    std::size_t clear();

private:
    std::filesystem::path dir_;
};

// Content-addressed cache of expensive computed tables (Green functions and
// Hecke values on class representatives), enabled by $ALPHALAB_CACHE_DIR.
class TableCache {
public:
    explicit TableCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}
    static TableCache fromEnvironment();
    bool enabled() const { return dir_.has_value(); }
    std::optional<DataBundle> load(const CartanType& t, PayloadKind k, const std::string& params) const;
    void store(const DataBundle& b, const std::string& params) const;
    std::vector<std::filesystem::path> entries() const;
    std::size_t clear() const;
    static std::string engineVersion();

private:
    std::filesystem::path file(const CartanType& t, PayloadKind k, const std::string& params) const;
    std::optional<std::filesystem::path> dir_;
};

enum class Backend { Computed, Data, Auto };
Backend parseBackend(const std::string& s);

// Assembles the pipeline inputs.  Computed: everything computed (capability
// error for data-only types).  Data: every table from the store.  Auto:
// computed where possible, otherwise from the store, per table kind.
AlphaData assembleAlphaData(const CartanType& type, Backend backend, const BundleStore& store,
                            const TableCache& cache, int maxLength = -1, int jobs = 1);

// Pieces of AlphaData rebuilt from individual bundles.
std::shared_ptr<const CharTable> charTableFromBundle(const WeylGroup& w, const DataBundle& b);

}  // namespace io
}  // namespace alphalab
