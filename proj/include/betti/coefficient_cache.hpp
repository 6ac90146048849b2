#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>

#include "betti/tensor_rules.hpp"

namespace betti {

enum class CoefficientKind { LR, NL };

const char* to_string(CoefficientKind kind);

// Memo table of product expansions keyed by an unordered pair of factors.
// Values are pure memo: any entry can be recomputed and a cold or missing
// cache never changes results. Safe for concurrent readers and writers; the
// first writer of a key wins and later writers observe the same value.
//
// Persistence is one record per coefficient:
//   <kind>\t<lambda>\t<mu>\t<nu>\t<value>
// after a header line carrying the format version. Partitions are comma-joined
// part lists (empty string for the empty partition). Only complete expansions
// are written, so every (kind, mu, nu) group in a file is a full product.
class CoefficientCache {
public:
    static constexpr int format_version = 1;
    static constexpr const char* file_name = "coefficients-v1.tsv";

    std::shared_ptr<const Expansion> find(CoefficientKind kind, const Partition& mu, const Partition& nu) const;
    // Returns the stored value, which is `value` unless another writer got there first.
    std::shared_ptr<const Expansion> insert(CoefficientKind kind, const Partition& mu, const Partition& nu,
                                            Expansion value);

    std::size_t size(CoefficientKind kind) const;
    void clear();

    // Missing, unreadable or version-mismatched files are ignored (returns false).
    bool load(const std::filesystem::path& dir);
    // Writes atomically (temp file + rename). Returns false on I/O failure.
    bool save(const std::filesystem::path& dir) const;

    // $STABLE_BETTI_CACHE_DIR, then $XDG_CACHE_HOME/stable-betti, then
    // $HOME/.cache/stable-betti. Empty when none is available.
    static std::optional<std::filesystem::path> default_directory();

private:
    using Key = std::pair<Partition, Partition>;
    static Key make_key(const Partition& mu, const Partition& nu);
    std::map<Key, std::shared_ptr<const Expansion>>& table(CoefficientKind kind);
    const std::map<Key, std::shared_ptr<const Expansion>>& table(CoefficientKind kind) const;

    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const Expansion>> lr_;
    std::map<Key, std::shared_ptr<const Expansion>> nl_;
};

// Process-wide cache used by lr_product / nl_product.
CoefficientCache& coefficient_cache();

} // namespace betti
