#include "betti/coefficient_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace betti {

namespace {

constexpr const char* header_tag = "stable-betti-coefficient-cache";

std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos)
            break;
        start = tab + 1;
    }
    return out;
}

} // namespace

const char* to_string(CoefficientKind kind)
{
    return kind == CoefficientKind::LR ? "LR" : "NL";
}

CoefficientCache::Key CoefficientCache::make_key(const Partition& mu, const Partition& nu)
{
    return mu <= nu ? Key{mu, nu} : Key{nu, mu};
}

std::map<CoefficientCache::Key, std::shared_ptr<const Expansion>>& CoefficientCache::table(CoefficientKind kind)
{
    return kind == CoefficientKind::LR ? lr_ : nl_;
}

const std::map<CoefficientCache::Key, std::shared_ptr<const Expansion>>&
CoefficientCache::table(CoefficientKind kind) const
{
    return kind == CoefficientKind::LR ? lr_ : nl_;
}

std::shared_ptr<const Expansion> CoefficientCache::find(CoefficientKind kind, const Partition& mu,
                                                        const Partition& nu) const
{
    std::shared_lock lock(mutex_);
    const auto& t = table(kind);
    auto it = t.find(make_key(mu, nu));
    return it == t.end() ? nullptr : it->second;
}

std::shared_ptr<const Expansion> CoefficientCache::insert(CoefficientKind kind, const Partition& mu,
                                                          const Partition& nu, Expansion value)
{
    auto ptr = std::make_shared<const Expansion>(std::move(value));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table(kind).emplace(make_key(mu, nu), ptr);
    return it->second;
}

std::size_t CoefficientCache::size(CoefficientKind kind) const
{
    std::shared_lock lock(mutex_);
    return table(kind).size();
}

void CoefficientCache::clear()
{
    std::unique_lock lock(mutex_);
    lr_.clear();
    nl_.clear();
}

bool CoefficientCache::load(const std::filesystem::path& dir)
{
    std::ifstream in(dir / file_name);
    if (!in)
        return false;
    std::string line;
    if (!std::getline(in, line))
        return false;
    {
        auto fields = split_tabs(line);
        if (fields.size() != 2 || fields[0] != header_tag || fields[1] != "version=" + std::to_string(format_version))
            return false;
    }
    // Parse everything first so a corrupt file leaves the cache untouched.
    std::map<Key, Expansion> lr, nl;
    try {
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            auto fields = split_tabs(line);
            if (fields.size() != 5)
                return false;
            CoefficientKind kind;
            if (fields[0] == "LR")
                kind = CoefficientKind::LR;
            else if (fields[0] == "NL")
                kind = CoefficientKind::NL;
            else
                return false;
            auto lambda = Partition::parse(fields[1]);
            auto mu = Partition::parse(fields[2]);
            auto nu = Partition::parse(fields[3]);
            std::size_t used = 0;
            Count value = std::stoull(fields[4], &used);
            if (used != fields[4].size())
                return false;
            auto& target = kind == CoefficientKind::LR ? lr : nl;
            // Groups with no terms are stored as a record with empty lambda and value 0.
            auto& expansion = target[make_key(mu, nu)];
            if (value != 0)
                expansion[lambda] = value;
        }
    } catch (const std::exception&) {
        return false;
    }
    for (auto& [key, value] : lr)
        insert(CoefficientKind::LR, key.first, key.second, std::move(value));
    for (auto& [key, value] : nl)
        insert(CoefficientKind::NL, key.first, key.second, std::move(value));
    return true;
}

bool CoefficientCache::save(const std::filesystem::path& dir) const
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        return false;
    const auto target = dir / file_name;
    auto temp = target;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::trunc);
        if (!out)
            return false;
        out << header_tag << "\tversion=" << format_version << '\n';
        std::shared_lock lock(mutex_);
        for (CoefficientKind kind : {CoefficientKind::LR, CoefficientKind::NL}) {
            for (const auto& [key, expansion] : table(kind)) {
                const auto mu = key.first.to_string();
                const auto nu = key.second.to_string();
                if (expansion->empty()) {
                    out << to_string(kind) << "\t\t" << mu << '\t' << nu << "\t0\n";
                    continue;
                }
                for (const auto& [lambda, value] : *expansion)
                    out << to_string(kind) << '\t' << lambda.to_string() << '\t' << mu << '\t' << nu << '\t'
                        << value << '\n';
            }
        }
        if (!out)
            return false;
    }
    std::filesystem::rename(temp, target, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        return false;
    }
    return true;
}

std::optional<std::filesystem::path> CoefficientCache::default_directory()
{
    if (const char* dir = std::getenv("STABLE_BETTI_CACHE_DIR"); dir && *dir)
        return std::filesystem::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "stable-betti";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "stable-betti";
    return std::nullopt;
}

CoefficientCache& coefficient_cache()
{
    static CoefficientCache cache;
    return cache;
}

} // namespace betti
