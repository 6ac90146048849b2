#include "betti/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "betti/coefficient_cache.hpp"

namespace betti::cli {

namespace {

std::string cell_name(Group g, int n, int degree)
{
    return std::string("(") + to_string(g) + ", n=" + std::to_string(n) + ", deg " + std::to_string(degree) + ")";
}

} // namespace

std::string render(const BettiReport& report, Format format)
{
    std::ostringstream os;
    const auto& betti = report.betti;
    switch (format) {
    case Format::Table: {
        int width = 5;
        for (int k = 0; k <= report.max_degree; k += 2)
            width = std::max(width, static_cast<int>(betti[k].str().size()));
        os << "group " << to_string(report.group) << ", rank " << report.rank << ", degree class "
           << (report.degree_class ? std::to_string(*report.degree_class) : std::string("-")) << '\n';
        os << std::setw(6) << "degree" << "  " << std::setw(width) << "betti" << '\n';
        for (int k = 0; k <= report.max_degree; k += 2)
            os << std::setw(6) << k << "  " << std::setw(width) << betti[k].str() << '\n';
        os << "min_valid_genus " << report.min_valid_genus << '\n';
        os << "oracle " << report.oracle_version << '\n';
        break;
    }
    case Format::Csv:
        os << "degree,betti\n";
        for (int k = 0; k <= report.max_degree; ++k)
            os << k << ',' << betti[k].str() << '\n';
        break;
    case Format::Json: {
        nlohmann::ordered_json j;
        j["group"] = to_string(report.group);
        j["rank"] = report.rank;
        j["degree_class"] = report.degree_class ? nlohmann::ordered_json(*report.degree_class) : nlohmann::ordered_json();
        j["max_degree"] = report.max_degree;
        auto arr = nlohmann::ordered_json::array();
        for (int k = 0; k <= report.max_degree; ++k)
            arr.push_back(betti[k].str());
        j["betti"] = arr;
        j["min_valid_genus"] = report.min_valid_genus;
        j["oracle_version"] = report.oracle_version;
        os << j.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

int verify_figure1(const Figure1Table& table, const StableOracle& oracle, int jobs, std::ostream& out)
{
    int total = 0, compared = 0, matched = 0;
    std::vector<std::string> mismatches;
    std::vector<std::string> gaps;
    int gap_cells = 0;

    for (const auto& row : table) {
        total += static_cast<int>(row.values.size());
        PoincareSeries computed(figure1_max_degree);
        std::optional<PoincareSeries> closed;
        try {
            computed = betti_series(row.group, row.rank, figure1_max_degree, oracle, jobs);
            if (row.rank == 2)
                closed = closed_form_n2(row.group, figure1_max_degree, oracle);
        } catch (const OracleCapabilityExceeded& e) {
            std::ostringstream os;
            os << to_string(row.group) << " n=" << row.rank << ": uncomputable, oracle " << oracle.version()
               << " lacks";
            for (const auto& p : e.partitions)
                os << " (" << p.to_string() << ')';
            gaps.push_back(os.str());
            gap_cells += static_cast<int>(row.values.size());
            out << "capability gap: " << gaps.back() << '\n';
            continue;
        }
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            const int degree = 2 * static_cast<int>(i);
            const BigInt expected = row.values[i];
            const BigInt& got = computed[degree];
            bool ok = got == expected;
            ++compared;
            out << std::left << std::setw(4) << to_string(row.group) << std::right << " n=" << row.rank << " deg "
                << std::setw(2) << degree << "  expected " << std::setw(5) << expected.str() << "  computed "
                << std::setw(5) << got.str();
            if (closed) {
                out << "  closed form " << std::setw(5) << (*closed)[degree].str();
                ok = ok && (*closed)[degree] == expected;
            }
            out << (ok ? "  ok" : "  MISMATCH") << '\n';
            if (ok)
                ++matched;
            else
                mismatches.push_back(cell_name(row.group, row.rank, degree));
        }
    }

    out << matched << '/' << compared << " match\n";
    if (!mismatches.empty()) {
        out << mismatches.size() << (mismatches.size() == 1 ? " mismatch at " : " mismatches at ");
        for (std::size_t i = 0; i < mismatches.size(); ++i)
            out << (i ? ", " : "") << mismatches[i];
        out << '\n';
    }
    if (!gaps.empty())
        out << "capability gap: " << gap_cells << " of " << total << " cells not computed\n";
    if (!mismatches.empty())
        return exit_mismatch;
    if (!gaps.empty())
        return exit_capability;
    return exit_ok;
}

void render_stable_range(int max_degree, std::ostream& out)
{
    out << "max_degree " << max_degree << '\n';
    out << std::setw(4) << "n" << "  " << "min_valid_genus" << '\n';
    for (int n = 2; n <= 7; ++n)
        out << std::setw(4) << n << "  " << min_valid_genus(n, max_degree) << '\n';
}

namespace {

struct CacheOptions {
    std::string dir;
    bool disabled = false;
};

std::optional<std::filesystem::path> cache_dir(const CacheOptions& opts)
{
    if (opts.disabled)
        return std::nullopt;
    if (!opts.dir.empty())
        return std::filesystem::path(opts.dir);
    return CoefficientCache::default_directory();
}

void add_cache_flags(CLI::App* app, CacheOptions& opts)
{
    app->add_option("--cache-dir", opts.dir, "Coefficient cache directory");
    app->add_flag("--no-cache", opts.disabled, "Do not read or write the coefficient cache");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Stable Betti numbers of PGL/SL/GL character varieties over moduli of curves", "stable-betti"};
    app.require_subcommand(1);

    std::string group_text = "pgl";
    int rank = 2;
    std::optional<int> degree_class;
    int max_degree = 20;
    std::string format_text = "table";
    int jobs = 1;
    std::string oracle_text = "general";
    CacheOptions cache_opts;

    const std::map<std::string, OracleKind> oracle_names{{"general", OracleKind::General}, {"column", OracleKind::Column}};
    const std::map<std::string, Format> format_names{{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};

    auto* betti = app.add_subcommand("betti", "Compute the stable Betti numbers of one group and rank");
    betti->add_option("--group", group_text, "pgl, sl or gl")->check(CLI::IsMember({"pgl", "sl", "gl"}, CLI::ignore_case));
    betti->add_option("--rank", rank, "Rank n (at least 2)");
    betti->add_option("--degree-class", degree_class, "Degree class d, coprime to n (label only)");
    betti->add_option("--max-degree", max_degree, "Largest cohomological degree")->check(CLI::NonNegativeNumber);
    betti->add_option("--format", format_text, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    betti->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    betti->add_option("--oracle", oracle_text, "general or column")->check(CLI::IsMember({"general", "column"}));
    add_cache_flags(betti, cache_opts);

    auto* verify = app.add_subcommand("verify-figure1", "Recompute the embedded reference table");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--oracle", oracle_text, "general or column")->check(CLI::IsMember({"general", "column"}));
    add_cache_flags(verify, cache_opts);

    auto* range = app.add_subcommand("stable-range", "Minimal genus per rank for a degree bound");
    range->add_option("--max-degree", max_degree, "Largest cohomological degree")->check(CLI::NonNegativeNumber);

    auto* cache = app.add_subcommand("cache", "Inspect or clear the coefficient cache");
    cache->require_subcommand(1);
    cache->fallthrough();
    add_cache_flags(cache, cache_opts);
    auto* cache_info = cache->add_subcommand("info", "Show location and entry counts");
    auto* cache_clear = cache->add_subcommand("clear", "Delete the cache file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help(e.get_name().empty() ? "" : e.get_name());
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? exit_ok : exit_usage;
    }

    const auto dir = cache_dir(cache_opts);
    auto load_cache = [&] {
        if (dir)
            coefficient_cache().load(*dir);
    };
    auto save_cache = [&] {
        if (dir && !coefficient_cache().save(*dir))
            err << "warning: could not write coefficient cache in " << dir->string() << '\n';
    };

    try {
        if (betti->parsed()) {
            if (rank < 2) {
                err << "error: rank too small: n must be at least 2\n";
                return exit_usage;
            }
            if (degree_class && std::gcd(*degree_class, rank) != 1) {
                err << "error: degree class must be coprime to rank\n";
                return exit_usage;
            }
            const Group group = *parse_group(group_text);
            const auto oracle = make_oracle(oracle_names.at(oracle_text));
            load_cache();
            BettiReport report;
            try {
                report = make_report(group, rank, degree_class, max_degree, *oracle, jobs);
            } catch (const OracleCapabilityExceeded& e) {
                err << "error: " << e.what() << '\n';
                return exit_capability;
            }
            save_cache();
            out << render(report, format_names.at(format_text));
            return exit_ok;
        }
        if (verify->parsed()) {
            const auto oracle = make_oracle(oracle_names.at(oracle_text));
            load_cache();
            const int code = verify_figure1(figure1, *oracle, jobs, out);
            save_cache();
            return code;
        }
        if (range->parsed()) {
            render_stable_range(max_degree, out);
            return exit_ok;
        }
        if (cache->parsed()) {
            if (!dir) {
                out << "cache disabled\n";
                return exit_ok;
            }
            const auto file = *dir / CoefficientCache::file_name;
            if (cache_info->parsed()) {
                const bool loaded = coefficient_cache().load(*dir);
                out << "path " << file.string() << '\n';
                out << "present " << (loaded ? "yes" : "no") << '\n';
                out << "format_version " << CoefficientCache::format_version << '\n';
                out << "lr_products " << coefficient_cache().size(CoefficientKind::LR) << '\n';
                out << "nl_products " << coefficient_cache().size(CoefficientKind::NL) << '\n';
            } else if (cache_clear->parsed()) {
                std::error_code ec;
                const bool removed = std::filesystem::remove(file, ec);
                out << (removed ? "removed " : "nothing to remove at ") << file.string() << '\n';
            }
            return exit_ok;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace betti::cli
