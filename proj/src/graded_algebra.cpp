#include "betti/graded_algebra.hpp"

#include <stdexcept>
#include <thread>

#include "betti/tensor_rules.hpp"

namespace betti {

GradedIrrepSum::GradedIrrepSum(int max_degree) : max_degree_(max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("truncation degree must be non-negative");
}

GradedIrrepSum GradedIrrepSum::unit(int max_degree)
{
    GradedIrrepSum s(max_degree);
    s.add(Partition{}, 0, 1);
    return s;
}

BigInt GradedIrrepSum::multiplicity(const Partition& lambda, int degree) const
{
    auto it = terms_.find(GradedKey{degree, lambda});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void GradedIrrepSum::add(const Partition& lambda, int degree, const BigInt& m)
{
    if (degree < 0)
        throw std::invalid_argument("negative cohomological degree");
    if (m == 0)
        return;
    if (degree > max_degree_) {
        truncated_ = true;
        return;
    }
    auto& slot = terms_[GradedKey{degree, lambda}];
    slot += m;
    if (slot == 0)
        terms_.erase(GradedKey{degree, lambda});
}

std::ostream& operator<<(std::ostream& os, const GradedIrrepSum& s)
{
    os << '{';
    bool first = true;
    for (const auto& [key, m] : s.terms()) {
        if (!first)
            os << ", ";
        first = false;
        os << key.lambda << '[' << key.degree << "]x" << m;
    }
    return os << '}';
}

namespace {

using TermList = std::vector<std::pair<GradedKey, BigInt>>;

std::map<GradedKey, BigInt> tensor_slice(const TermList& left, std::size_t begin, std::size_t end,
                                         const TermList& right, int max_degree, bool& dropped)
{
    std::map<GradedKey, BigInt> out;
    for (std::size_t i = begin; i < end; ++i) {
        const auto& [ka, ma] = left[i];
        for (const auto& [kb, mb] : right) {
            const int degree = ka.degree + kb.degree;
            if (degree > max_degree) {
                dropped = true;
                continue;
            }
            const BigInt weight = ma * mb;
            for (const auto& [lambda, c] : *nl_product(ka.lambda, kb.lambda))
                out[GradedKey{degree, lambda}] += weight * c;
        }
    }
    return out;
}

} // namespace

GradedIrrepSum tensor(const GradedIrrepSum& a, const GradedIrrepSum& b, int jobs)
{
    if (a.max_degree() != b.max_degree())
        throw TruncationMismatch("tensor: truncation degrees differ");
    const TermList left(a.terms().begin(), a.terms().end());
    const TermList right(b.terms().begin(), b.terms().end());
    const int D = a.max_degree();

    std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
    workers = std::min(workers, std::max<std::size_t>(1, left.size()));
    std::vector<std::map<GradedKey, BigInt>> parts(workers);
    std::vector<char> dropped(workers, 0);
    auto run = [&](std::size_t w) {
        bool d = false;
        const std::size_t begin = left.size() * w / workers;
        const std::size_t end = left.size() * (w + 1) / workers;
        parts[w] = tensor_slice(left, begin, end, right, D, d);
        dropped[w] = d;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w)
            threads.emplace_back(run, w);
        for (auto& t : threads)
            t.join();
    }

    // Merge in slice order so the result is independent of scheduling.
    GradedIrrepSum out(D);
    bool any_dropped = a.truncated() || b.truncated();
    for (std::size_t w = 0; w < workers; ++w) {
        any_dropped = any_dropped || dropped[w];
        for (const auto& [key, m] : parts[w])
            out.add(key.lambda, key.degree, m);
    }
    if (any_dropped)
        out.mark_truncated();
    return out;
}

std::vector<Partition> exterior_column_decomposition(int r)
{
    if (r < 0)
        throw std::invalid_argument("exterior power must be non-negative");
    std::vector<Partition> out;
    for (int k = r % 2; k <= r; k += 2)
        out.push_back(Partition::column(k));
    return out;
}

GradedIrrepSum exterior_algebra_shifted(int s, int max_degree)
{
    if (s < 0 || s % 2 != 0)
        throw std::invalid_argument("shift must be even and non-negative");
    GradedIrrepSum out(max_degree);
    for (int r = 0;; ++r) {
        const int degree = r * (s + 1);
        if (degree > max_degree) {
            // wedge^r never vanishes in the stable range, so something was cut.
            out.mark_truncated();
            break;
        }
        for (const auto& lambda : exterior_column_decomposition(r))
            out.add(lambda, degree, 1);
    }
    return out;
}

GradedIrrepSum coefficient_system(Group group, int n, int max_degree, int jobs)
{
    if (n < 2)
        throw std::invalid_argument("rank too small: n must be at least 2");
    GradedIrrepSum out = GradedIrrepSum::unit(max_degree);
    for (int i = 1; i < n; ++i)
        out = tensor(out, exterior_algebra_shifted(2 * i, max_degree), jobs);
    if (group == Group::GL)
        out = tensor(out, exterior_algebra_shifted(0, max_degree), jobs);
    return out;
}

PoincareSeries sym_series(int n, int max_degree)
{
    if (n < 2)
        throw std::invalid_argument("rank too small: n must be at least 2");
    auto s = PoincareSeries::one(max_degree);
    for (int i = 1; i < n; ++i) {
        s.divide_one_minus(2 * i);
        s.divide_one_minus(2 * i + 2);
    }
    return s;
}

} // namespace betti
