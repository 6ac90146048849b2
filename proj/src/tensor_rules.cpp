#include "betti/tensor_rules.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "betti/coefficient_cache.hpp"

namespace betti {

namespace {

// Row-by-row enumeration of Littlewood-Richardson skew tableaux.
//
// A filling is described by n[r][k], the number of letters k in row r. Within
// a row letters are weakly increasing, so the filling is semistandard iff for
// every row r > 0 and letter k
//   inner[r] + #{letters <= k in row r} <= inner[r-1] + #{letters < k in row r-1},
// and the reverse reading word is a lattice word iff for every k >= 1
//   #{k in rows <= r} <= #{k-1 in rows < r}.
// Either the outer shape or the content may be left free.
class LrSearch {
public:
    using Visit = std::function<void(const std::vector<int>& outer, const std::vector<int>& content)>;

    LrSearch(const Partition& inner, const Partition* outer, const Partition* content, Visit visit)
        : visit_(std::move(visit))
    {
        fixed_outer_ = outer != nullptr;
        fixed_content_ = content != nullptr;
        if (fixed_outer_) {
            valid_ = outer->contains(inner);
            rows_ = outer->length();
            remaining_ = outer->size() - inner.size();
            for (int r = 0; r < rows_; ++r)
                outer_.push_back((*outer)[static_cast<std::size_t>(r)]);
        } else {
            rows_ = inner.length() + content->length();
            remaining_ = content->size();
        }
        letters_ = fixed_content_ ? content->length() : rows_;
        if (fixed_content_)
            content_ = content->parts();
        for (int r = 0; r < rows_; ++r)
            inner_.push_back(inner[static_cast<std::size_t>(r)]);
        counts_.assign(static_cast<std::size_t>(letters_), 0);
        row_.assign(static_cast<std::size_t>(letters_), 0);
        prev_below_.assign(static_cast<std::size_t>(letters_) + 1, 0);
    }

    void run()
    {
        if (valid_ && remaining_ >= 0)
            row_step(0, remaining_);
    }

private:
    int at(const std::vector<int>& v, int i) const { return v[static_cast<std::size_t>(i)]; }

    void row_step(int r, int remaining)
    {
        if (remaining == 0) {
            finish(r);
            return;
        }
        if (r >= rows_)
            return;
        std::fill(row_.begin(), row_.end(), 0);
        letter_step(r, 0, 0, remaining);
    }

    // Rows from r on get no letters.
    void finish(int r)
    {
        if (fixed_outer_) {
            for (int i = r; i < rows_; ++i)
                if (at(outer_, i) != at(inner_, i))
                    return;
        }
        if (fixed_content_)
            for (int k = 0; k < letters_; ++k)
                if (at(counts_, k) != at(content_, k))
                    return;
        if (fixed_outer_) {
            visit_(outer_, counts_);
            return;
        }
        std::vector<int> outer = shape_;
        for (int i = r; i < rows_; ++i)
            outer.push_back(at(inner_, i));
        visit_(outer, counts_);
    }

    void letter_step(int r, int k, int placed, int remaining)
    {
        if (k > std::min(r, letters_ - 1)) {
            close_row(r, placed, remaining);
            return;
        }
        const auto uk = static_cast<std::size_t>(k);
        int bound = remaining - placed;
        if (fixed_content_)
            bound = std::min(bound, content_[uk] - counts_[uk]);
        if (k >= 1)
            bound = std::min(bound, counts_[uk - 1] - counts_[uk]);
        if (r > 0)
            bound = std::min(bound, at(inner_, r - 1) + prev_below_[uk] - at(inner_, r) - placed);
        if (fixed_outer_)
            bound = std::min(bound, at(outer_, r) - at(inner_, r) - placed);
        for (int v = 0; v <= bound; ++v) {
            row_[uk] = v;
            letter_step(r, k + 1, placed + v, remaining);
        }
        row_[uk] = 0;
    }

    void close_row(int r, int placed, int remaining)
    {
        const int length = at(inner_, r) + placed;
        if (fixed_outer_ && length != at(outer_, r))
            return;
        if (!fixed_outer_ && r > 0 && length > shape_.back())
            return;
        const auto saved_counts = counts_;
        const auto saved_below = prev_below_;
        const auto saved_row = row_;
        for (int k = 0; k < letters_; ++k) {
            const auto uk = static_cast<std::size_t>(k);
            counts_[uk] += row_[uk];
            prev_below_[uk + 1] = prev_below_[uk] + row_[uk];
        }
        shape_.push_back(length);
        row_step(r + 1, remaining - placed);
        shape_.pop_back();
        counts_ = saved_counts;
        prev_below_ = saved_below;
        row_ = saved_row;
    }

    std::vector<int> inner_;
    std::vector<int> outer_;
    std::vector<int> content_;
    bool fixed_outer_ = false;
    bool fixed_content_ = false;
    bool valid_ = true;
    int rows_ = 0;
    int letters_ = 0;
    int remaining_ = 0;
    // counts_[k]: letters k placed in finished rows.
    std::vector<int> counts_;
    std::vector<int> row_;
    // prev_below_[k]: letters < k in the previous row.
    std::vector<int> prev_below_;
    std::vector<int> shape_;
    Visit visit_;
};

Count checked_mul(Count a, Count b)
{
    Count out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("coefficient overflow");
    return out;
}

Count checked_add(Count a, Count b)
{
    Count out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("coefficient overflow");
    return out;
}

} // namespace

Count lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu))
        return 0;
    if (auto cached = coefficient_cache().find(CoefficientKind::LR, mu, nu)) {
        auto it = cached->find(lambda);
        return it == cached->end() ? 0 : it->second;
    }
    Count total = 0;
    LrSearch search(mu, &lambda, &nu, [&](const std::vector<int>&, const std::vector<int>&) { ++total; });
    search.run();
    return total;
}

std::shared_ptr<const Expansion> lr_product(const Partition& mu, const Partition& nu)
{
    if (auto cached = coefficient_cache().find(CoefficientKind::LR, mu, nu))
        return cached;
    // c^lambda_{mu nu} is symmetric; fill the shorter content into the larger shape.
    const Partition& inner = mu.size() >= nu.size() ? mu : nu;
    const Partition& content = mu.size() >= nu.size() ? nu : mu;
    Expansion out;
    LrSearch search(inner, nullptr, &content, [&](const std::vector<int>& outer, const std::vector<int>&) {
        ++out[Partition(outer)];
    });
    search.run();
    return coefficient_cache().insert(CoefficientKind::LR, mu, nu, std::move(out));
}

Expansion lr_skew(const Partition& lambda, const Partition& mu)
{
    Expansion out;
    if (!lambda.contains(mu))
        return out;
    LrSearch search(mu, &lambda, nullptr, [&](const std::vector<int>&, const std::vector<int>& content) {
        ++out[Partition(content)];
    });
    search.run();
    return out;
}

std::shared_ptr<const Expansion> nl_product(const Partition& mu, const Partition& nu)
{
    if (auto cached = coefficient_cache().find(CoefficientKind::NL, mu, nu))
        return cached;
    Expansion out;
    for (const auto& alpha : enumerate_contained(intersection(mu, nu))) {
        const auto left = lr_skew(mu, alpha);
        const auto right = lr_skew(nu, alpha);
        for (const auto& [beta, cb] : left) {
            for (const auto& [gamma, cg] : right) {
                const Count weight = checked_mul(cb, cg);
                for (const auto& [lambda, cl] : *lr_product(beta, gamma))
                    out[lambda] = checked_add(out[lambda], checked_mul(weight, cl));
            }
        }
    }
    return coefficient_cache().insert(CoefficientKind::NL, mu, nu, std::move(out));
}

Count nl_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    const int total = mu.size() + nu.size();
    if (lambda.size() > total || (total - lambda.size()) % 2 != 0)
        return 0;
    const auto product = nl_product(mu, nu);
    auto it = product->find(lambda);
    return it == product->end() ? 0 : it->second;
}

std::vector<Partition> sp_tensor_columns(int i, int j)
{
    if (i < 0 || j < 0)
        throw std::invalid_argument("sp_tensor_columns: column heights must be non-negative");
    std::vector<Partition> out;
    for (int a = 0; a <= std::min(i, j); ++a) {
        for (int b = 0; b <= a; ++b) {
            std::vector<int> parts(static_cast<std::size_t>(a - b), 2);
            parts.insert(parts.end(), static_cast<std::size_t>(i + j - 2 * a), 1);
            out.emplace_back(std::move(parts));
        }
    }
    return out;
}

} // namespace betti
