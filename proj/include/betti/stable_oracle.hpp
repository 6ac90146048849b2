#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "betti/partition.hpp"
#include "betti/poincare_series.hpp"

namespace betti {

enum class BaseSpace { Mg, Mg1 };

const char* to_string(BaseSpace b);

// Mg: prod_{i>=1} 1/(1 - t^{2i}). Mg1: that times 1/(1 - t^2).
PoincareSeries base_series(BaseSpace b, int max_degree);

// prod_t t^{2 l_t max(2, t-1)} prod_{s=1}^{l_t} 1/(1 - t^{2s}), l_t the multiplicity of t in lambda.
PoincareSeries E_series(const Partition& lambda, int max_degree);
// Same with exponent l_t (t - 1 + sigma(t)), sigma(t) = 1 for t in {1, 2} and 0 otherwise.
PoincareSeries E_tilde_series(const Partition& lambda, int max_degree);

// Stable H^*(b; S<1^j>) as t^{-j} (sum_{mu |- j} F_mu) base(b), F = E for Mg and E~ for Mg1.
// Throws std::domain_error if the shift would leave a nonzero coefficient in negative
// degree, std::logic_error if a coefficient of parity opposite to j is nonzero.
PoincareSeries oracle_column(int j, BaseSpace b, int max_degree);

struct UnsupportedPartition : std::runtime_error {
    explicit UnsupportedPartition(Partition p);
    Partition lambda;
};

// Stable twisted cohomology H^*(b; S<lambda>) as a Poincare series.
// Implementations must be safe to call concurrently.
class StableOracle {
public:
    virtual ~StableOracle() = default;
    virtual std::string version() const = 0;
    virtual bool supports(const Partition& lambda) const = 0;
    // Throws UnsupportedPartition when !supports(lambda).
    virtual PoincareSeries series(const Partition& lambda, BaseSpace b, int max_degree) const = 0;
    // Hint: (lambda, max_degree) pairs about to be requested. Optional.
    virtual void prepare(BaseSpace, const std::vector<std::pair<Partition, int>>&) const {}
};

// Memo of series keyed by (lambda, base), keeping the deepest truncation seen.
class SeriesMemo {
public:
    template <class Compute>
    PoincareSeries get(const Partition& lambda, BaseSpace b, int max_degree, Compute&& compute) const
    {
        const Key key{lambda, b};
        {
            std::shared_lock lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end() && it->second.max_degree() >= max_degree)
                return it->second.truncated(max_degree);
        }
        PoincareSeries value = compute();
        std::unique_lock lock(mutex_);
        auto& slot = memo_.try_emplace(key, value).first->second;
        if (slot.max_degree() < value.max_degree())
            slot = value;
        return value;
    }

private:
    using Key = std::pair<Partition, BaseSpace>;
    mutable std::shared_mutex mutex_;
    mutable std::map<Key, PoincareSeries> memo_;
};

// Only single columns <1^j>, via oracle_column.
class ColumnOracle : public StableOracle {
public:
    std::string version() const override { return "column-1"; }
    bool supports(const Partition& lambda) const override { return lambda.is_column(); }
    PoincareSeries series(const Partition& lambda, BaseSpace b, int max_degree) const override;

private:
    SeriesMemo memo_;
};

// All partitions. The twisted cohomology is read off from a plethystic generating
// function: with labels (t, d) running over blocks of size t >= 1 carrying a class
// of degree d = 2(i + t - 1), i >= 0, d >= 2 (and d >= 4 when t = 1 over Mg),
//   G = prod_{(t,d)} H[x^d h_t] * H[-x^2 h_2],
// the degree-|lambda| shifted series of S<lambda> is <G, s_{lambda'}> times base(b).
// On columns this reproduces oracle_column.
class WeightedPartitionOracle : public StableOracle {
public:
    WeightedPartitionOracle();
    ~WeightedPartitionOracle() override;

    std::string version() const override { return "weighted-partition-1"; }
    bool supports(const Partition&) const override { return true; }
    PoincareSeries series(const Partition& lambda, BaseSpace b, int max_degree) const override;
    // Builds each generating-function table once at its final size.
    void prepare(BaseSpace b, const std::vector<std::pair<Partition, int>>& requests) const override;

    // Partitions whose series had a nonzero coefficient of parity opposite to |lambda|.
    // Reported, not fatal.
    std::vector<Partition> parity_warnings() const;

private:
    struct Tables;
    PoincareSeries compute(const Partition& lambda, BaseSpace b, int max_degree) const;

    std::unique_ptr<Tables> tables_;
    SeriesMemo memo_;
    mutable std::mutex warn_mutex_;
    mutable std::vector<Partition> parity_warnings_;
};

enum class OracleKind { General, Column };

std::shared_ptr<const StableOracle> make_oracle(OracleKind kind);

} // namespace betti
