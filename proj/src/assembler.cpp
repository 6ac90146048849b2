#include "betti/assembler.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace betti {

namespace {

std::string list_partitions(const std::vector<Partition>& ps)
{
    std::string out;
    for (const auto& p : ps) {
        if (!out.empty())
            out += ' ';
        out += '(' + p.to_string() + ')';
    }
    return out;
}

} // namespace

OracleCapabilityExceeded::OracleCapabilityExceeded(std::vector<Partition> unsupported)
    : std::runtime_error("oracle capability exceeded for partitions " + list_partitions(unsupported)),
      partitions(std::move(unsupported))
{
}

BaseSpace base_for(Group group)
{
    return group == Group::PGL ? BaseSpace::Mg : BaseSpace::Mg1;
}

PoincareSeries assemble(const GradedIrrepSum& coefficients, BaseSpace base, int n, const StableOracle& oracle,
                        int jobs)
{
    const int D = coefficients.max_degree();
    std::vector<Partition> missing;
    std::vector<std::pair<Partition, int>> requests;
    for (const auto& [key, m] : coefficients.terms()) {
        if (!oracle.supports(key.lambda)) {
            if (std::find(missing.begin(), missing.end(), key.lambda) == missing.end())
                missing.push_back(key.lambda);
            continue;
        }
        requests.emplace_back(key.lambda, D - key.degree);
    }
    if (!missing.empty()) {
        std::sort(missing.begin(), missing.end());
        throw OracleCapabilityExceeded(std::move(missing));
    }
    oracle.prepare(base, requests);

    const std::vector<std::pair<GradedKey, BigInt>> terms(coefficients.terms().begin(), coefficients.terms().end());
    std::vector<PoincareSeries> pieces(terms.size(), PoincareSeries(D));
    auto one = [&](std::size_t idx) {
        const auto& [key, m] = terms[idx];
        auto s = oracle.series(key.lambda, base, D - key.degree);
        PoincareSeries piece(D);
        for (int k = 0; k + key.degree <= D; ++k)
            piece[k + key.degree] = m * s[k];
        pieces[idx] = std::move(piece);
    };

    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, jobs)), terms.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < terms.size(); ++i)
            one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < terms.size();) {
                    try {
                        one(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : threads)
            t.join();
        if (error)
            std::rethrow_exception(error);
    }

    // Summed in term order, independent of which worker finished first.
    PoincareSeries total(D);
    for (const auto& p : pieces)
        total += p;
    return total * sym_series(n, D);
}

PoincareSeries betti_series(Group group, int n, int max_degree, const StableOracle& oracle, int jobs)
{
    if (n < 2)
        throw std::invalid_argument("rank too small: n must be at least 2");
    const auto coefficients = coefficient_system(group, n, max_degree, jobs);
    return assemble(coefficients, base_for(group), n, oracle, jobs);
}

namespace {

// Q[alpha_2, beta_4].
PoincareSeries alpha_beta(int D)
{
    auto s = PoincareSeries::one(D);
    s.divide_one_minus(2);
    s.divide_one_minus(4);
    return s;
}

// (sum_{lambda |- j} F_lambda) tensor base, to degree `top`.
PoincareSeries column_block(int j, BaseSpace b, int top)
{
    PoincareSeries sum(top);
    for (const auto& lambda : enumerate_partitions(j))
        sum += b == BaseSpace::Mg ? E_series(lambda, top) : E_tilde_series(lambda, top);
    return sum * base_series(b, top);
}

PoincareSeries closed_form_rank_one_block(Group group, int D)
{
    const BaseSpace b = group == Group::PGL ? BaseSpace::Mg : BaseSpace::Mg1;
    const auto sym = alpha_beta(D);
    // Column sizes used: j = 2i <= r or 2i - 1 <= r with 3r <= D.
    const int r_max = D / 3;
    std::vector<PoincareSeries> block;
    for (int j = 0; j <= r_max + 1; ++j)
        block.push_back(column_block(j, b, D + j));

    PoincareSeries out(D);
    for (int k = 0; k <= D; ++k) {
        BigInt value = 0;
        for (int r = 0; 3 * r <= k; ++r) {
            for (int m = 0; 3 * r + m <= k; ++m) {
                BigInt inner = 0;
                if (r % 2 == 0) {
                    for (int i = 0; i <= r / 2; ++i)
                        inner += block[static_cast<std::size_t>(2 * i)][k - 3 * r - m + 2 * i];
                } else {
                    for (int i = 1; i <= (r + 1) / 2; ++i)
                        inner += block[static_cast<std::size_t>(2 * i - 1)][k - 3 * r - m + 2 * i - 1];
                }
                value += inner * sym[m];
            }
        }
        out[k] = value;
    }
    return out;
}

PoincareSeries closed_form_gl(int D, const StableOracle& oracle)
{
    const auto sym = alpha_beta(D);
    std::map<Partition, PoincareSeries> h;
    auto coefficient = [&](const Partition& lambda) -> const PoincareSeries& {
        auto it = h.find(lambda);
        if (it != h.end())
            return it->second;
        PoincareSeries s = lambda.is_column() ? column_block(lambda.size(), BaseSpace::Mg1, D + lambda.size()).lowered(lambda.size())
                                               : oracle.series(lambda, BaseSpace::Mg1, D);
        return h.emplace(lambda, std::move(s)).first->second;
    };

    PoincareSeries out(D);
    for (int r1 = 0; r1 <= D; ++r1) {
        for (int r2 = 0; r1 + 3 * r2 <= D; ++r2) {
            // sum over i, j, a, b of H^*(M_{g,1}; S<2^{a-b} 1^{i+j-2a}>).
            PoincareSeries inner(D);
            for (int i = r1 % 2; i <= r1; i += 2)
                for (int j = r2 % 2; j <= r2; j += 2)
                    for (int a = 0; a <= std::min(i, j); ++a)
                        for (int b = 0; b <= a; ++b) {
                            std::vector<int> parts(static_cast<std::size_t>(a - b), 2);
                            parts.insert(parts.end(), static_cast<std::size_t>(i + j - 2 * a), 1);
                            inner += coefficient(Partition(std::move(parts)));
                        }
            for (int k = r1 + 3 * r2; k <= D; ++k)
                for (int m = 0; r1 + 3 * r2 + m <= k; ++m)
                    out[k] += inner[k - m - r1 - 3 * r2] * sym[m];
        }
    }
    return out;
}

} // namespace

PoincareSeries closed_form_n2(Group group, int max_degree, const StableOracle& oracle)
{
    if (group == Group::GL)
        return closed_form_gl(max_degree, oracle);
    return closed_form_rank_one_block(group, max_degree);
}

int min_valid_genus(int n, int max_degree)
{
    if (n < 2)
        throw std::invalid_argument("rank too small: n must be at least 2");
    if (max_degree < 0)
        throw std::invalid_argument("max degree must be non-negative");
    for (long long g = 2;; ++g) {
        const bool stable = 3LL * max_degree <= 2 * g - 2;
        const bool twisted = max_degree <= 2 * (g - 1) * (n - 1) + 2;
        if (stable && twisted)
            return static_cast<int>(g);
    }
}

BettiReport make_report(Group group, int n, std::optional<int> degree_class, int max_degree,
                        const StableOracle& oracle, int jobs)
{
    auto series = betti_series(group, n, max_degree, oracle, jobs);
    return BettiReport{group, n, degree_class, max_degree, std::move(series), min_valid_genus(n, max_degree),
                       oracle.version()};
}

} // namespace betti
