#include "betti/stable_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace betti {

const char* to_string(BaseSpace b)
{
    return b == BaseSpace::Mg ? "Mg" : "Mg1";
}

PoincareSeries base_series(BaseSpace b, int max_degree)
{
    auto s = PoincareSeries::one(max_degree);
    for (int i = 1; 2 * i <= max_degree; ++i)
        s.divide_one_minus(2 * i);
    if (b == BaseSpace::Mg1 && max_degree >= 2)
        s.divide_one_minus(2);
    return s;
}

namespace {

PoincareSeries e_like(const Partition& lambda, int max_degree, int (*exponent)(int t))
{
    auto s = PoincareSeries::one(max_degree);
    for (const auto& [t, count] : multiplicity_form(lambda)) {
        const long long shift = 2LL * count * exponent(t);
        if (shift > max_degree)
            return PoincareSeries(max_degree);
        s = s.shifted(static_cast<int>(shift));
        for (int k = 1; k <= count && 2 * k <= max_degree; ++k)
            s.divide_one_minus(2 * k);
    }
    return s;
}

int e_exponent(int t)
{
    return std::max(2, t - 1);
}

int e_tilde_exponent(int t)
{
    return t - 1 + (t <= 2 ? 1 : 0);
}

bool parity_clean(const PoincareSeries& s, int parity)
{
    for (int k = 0; k <= s.max_degree(); ++k)
        if ((k % 2) != parity && s[k] != 0)
            return false;
    return true;
}

} // namespace

PoincareSeries E_series(const Partition& lambda, int max_degree)
{
    return e_like(lambda, max_degree, e_exponent);
}

PoincareSeries E_tilde_series(const Partition& lambda, int max_degree)
{
    return e_like(lambda, max_degree, e_tilde_exponent);
}

PoincareSeries oracle_column(int j, BaseSpace b, int max_degree)
{
    if (j < 0)
        throw std::invalid_argument("oracle_column: negative column height");
    const int top = max_degree + j;
    PoincareSeries sum(top);
    for (const auto& mu : enumerate_partitions(j))
        sum += b == BaseSpace::Mg ? E_series(mu, top) : E_tilde_series(mu, top);
    sum *= base_series(b, top);
    auto out = sum.lowered(j);
    if (!parity_clean(out, j % 2))
        throw std::logic_error("oracle_column: coefficient of the wrong parity for j = " + std::to_string(j));
    return out;
}

UnsupportedPartition::UnsupportedPartition(Partition p)
    : std::runtime_error("unsupported partition shape " + p.to_string()), lambda(std::move(p))
{
}

PoincareSeries ColumnOracle::series(const Partition& lambda, BaseSpace b, int max_degree) const
{
    if (!supports(lambda))
        throw UnsupportedPartition(lambda);
    return memo_.get(lambda, b, max_degree, [&] { return oracle_column(lambda.size(), b, max_degree); });
}

// ---------------------------------------------------------------------------
// Generating function tables for the general oracle.

namespace {

using Wide = __int128;

Wide add_checked(Wide a, Wide b)
{
    Wide r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("stable oracle: 128-bit overflow");
    return r;
}

Wide sub_checked(Wide a, Wide b)
{
    Wide r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("stable oracle: 128-bit overflow");
    return r;
}

BigInt to_big(Wide v)
{
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return negative ? BigInt(-out) : out;
}

// Coefficients of G(x; z_1..z_l) for z-monomials of total degree <= N, as x-series to degree Dx.
struct GTable {
    int vars = 0;
    int N = -1;
    int Dx = -1;
    std::vector<std::vector<int>> monomials;   // sorted by total degree
    std::map<std::vector<int>, std::size_t> index;
    std::vector<Wide> data;                    // monomials.size() rows of Dx + 1

    Wide* row(std::size_t m) { return data.data() + m * static_cast<std::size_t>(Dx + 1); }

    const Wide* find(const std::vector<int>& e) const
    {
        auto it = index.find(e);
        return it == index.end() ? nullptr : data.data() + it->second * static_cast<std::size_t>(Dx + 1);
    }

    std::vector<long> predecessors(const std::vector<int>& alpha) const
    {
        std::vector<long> pred(monomials.size(), -1);
        std::vector<int> prev(static_cast<std::size_t>(vars));
        for (std::size_t m = 0; m < monomials.size(); ++m) {
            bool ok = true;
            for (int v = 0; v < vars && ok; ++v) {
                prev[static_cast<std::size_t>(v)] = monomials[m][static_cast<std::size_t>(v)] - alpha[static_cast<std::size_t>(v)];
                ok = prev[static_cast<std::size_t>(v)] >= 0;
            }
            if (ok)
                pred[m] = static_cast<long>(index.at(prev));
        }
        return pred;
    }
};

void monomials_of_degree(int vars, int total, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(current.size()) == vars - 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int a = total; a >= 0; --a) {
        current.push_back(a);
        monomials_of_degree(vars, total - a, current, out);
        current.pop_back();
    }
}

GTable build_table(BaseSpace b, int vars, int N, int Dx)
{
    GTable g;
    g.vars = vars;
    g.N = N;
    g.Dx = Dx;
    std::vector<int> current;
    for (int t = 0; t <= N; ++t)
        monomials_of_degree(vars, t, current, g.monomials);
    for (std::size_t m = 0; m < g.monomials.size(); ++m)
        g.index.emplace(g.monomials[m], m);
    const std::size_t width = static_cast<std::size_t>(Dx + 1);
    g.data.assign(g.monomials.size() * width, 0);
    g.row(0)[0] = 1;

    // H[x^d h_t] = prod_{|alpha| = t} 1/(1 - x^d z^alpha): ascending in-place update.
    for (int t = 1; t <= N; ++t) {
        int i0 = t >= 2 ? 0 : 1;
        if (b == BaseSpace::Mg && t == 1)
            i0 = 2;
        std::vector<std::vector<int>> alphas;
        monomials_of_degree(vars, t, current, alphas);
        for (const auto& alpha : alphas) {
            const auto pred = g.predecessors(alpha);
            for (int i = i0; 2 * (i + t - 1) <= Dx; ++i) {
                const int d = 2 * (i + t - 1);
                for (std::size_t m = 0; m < g.monomials.size(); ++m) {
                    if (pred[m] < 0)
                        continue;
                    Wide* dst = g.row(m);
                    const Wide* src = g.row(static_cast<std::size_t>(pred[m]));
                    for (int k = d; k <= Dx; ++k)
                        if (src[k - d] != 0)
                            dst[k] = add_checked(dst[k], src[k - d]);
                }
            }
        }
    }

    // H[-x^2 h_2] = prod_{i<=j} (1 - x^2 z_i z_j): descending in-place update.
    if (Dx >= 2) {
        for (int i = 0; i < vars; ++i) {
            for (int j = i; j < vars; ++j) {
                std::vector<int> alpha(static_cast<std::size_t>(vars), 0);
                ++alpha[static_cast<std::size_t>(i)];
                ++alpha[static_cast<std::size_t>(j)];
                const auto pred = g.predecessors(alpha);
                for (std::size_t m = g.monomials.size(); m-- > 0;) {
                    if (pred[m] < 0)
                        continue;
                    Wide* dst = g.row(m);
                    const Wide* src = g.row(static_cast<std::size_t>(pred[m]));
                    for (int k = 2; k <= Dx; ++k)
                        if (src[k - 2] != 0)
                            dst[k] = sub_checked(dst[k], src[k - 2]);
                }
            }
        }
    }
    return g;
}

} // namespace

struct WeightedPartitionOracle::Tables {
    struct Slot {
        std::mutex mutex;
        std::shared_ptr<const GTable> table;
    };
    std::mutex mutex;
    std::map<std::pair<BaseSpace, int>, std::unique_ptr<Slot>> slots;

    // A table covering (N, Dx); built or grown on demand.
    std::shared_ptr<const GTable> get(BaseSpace b, int vars, int N, int Dx)
    {
        Slot* slot;
        {
            std::lock_guard lock(mutex);
            auto& p = slots[{b, vars}];
            if (!p)
                p = std::make_unique<Slot>();
            slot = p.get();
        }
        std::lock_guard lock(slot->mutex);
        if (slot->table && slot->table->N >= N && slot->table->Dx >= Dx)
            return slot->table;
        int n = N, dx = Dx;
        if (slot->table) {
            n = std::max(n, slot->table->N);
            dx = std::max(dx, slot->table->Dx);
        }
        slot->table = std::make_shared<const GTable>(build_table(b, vars, n, dx));
        return slot->table;
    }
};

WeightedPartitionOracle::WeightedPartitionOracle() : tables_(std::make_unique<Tables>()) {}

WeightedPartitionOracle::~WeightedPartitionOracle() = default;

PoincareSeries WeightedPartitionOracle::series(const Partition& lambda, BaseSpace b, int max_degree) const
{
    return memo_.get(lambda, b, max_degree, [&] { return compute(lambda, b, max_degree); });
}

void WeightedPartitionOracle::prepare(BaseSpace b, const std::vector<std::pair<Partition, int>>& requests) const
{
    std::map<int, std::pair<int, int>> need;
    for (const auto& [lambda, max_degree] : requests) {
        if (lambda.empty())
            continue;
        auto [it, fresh] = need.try_emplace(lambda.largest(), lambda.size(), max_degree + lambda.size());
        if (!fresh) {
            it->second.first = std::max(it->second.first, lambda.size());
            it->second.second = std::max(it->second.second, max_degree + lambda.size());
        }
    }
    for (const auto& [vars, size] : need)
        tables_->get(b, vars, size.first, size.second);
}

std::vector<Partition> WeightedPartitionOracle::parity_warnings() const
{
    std::lock_guard lock(warn_mutex_);
    return parity_warnings_;
}

PoincareSeries WeightedPartitionOracle::compute(const Partition& lambda, BaseSpace b, int max_degree) const
{
    if (lambda.empty())
        return base_series(b, max_degree);
    const int N = lambda.size();
    const int Dx = max_degree + N;
    const Partition nu = conjugate(lambda);
    const int vars = nu.length();
    const auto table = tables_->get(b, vars, N, Dx);

    // <G, s_nu> = sum_sigma sgn(sigma) [z^{nu + delta - sigma(delta)}] G.
    std::vector<Wide> acc(static_cast<std::size_t>(Dx + 1), 0);
    std::vector<int> perm(static_cast<std::size_t>(vars));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> e(static_cast<std::size_t>(vars));
    do {
        bool ok = true;
        for (int i = 0; i < vars && ok; ++i) {
            const int delta_i = vars - 1 - i;
            const int delta_p = vars - 1 - perm[static_cast<std::size_t>(i)];
            e[static_cast<std::size_t>(i)] = nu[static_cast<std::size_t>(i)] + delta_i - delta_p;
            ok = e[static_cast<std::size_t>(i)] >= 0;
        }
        if (!ok)
            continue;
        const Wide* coeffs = table->find(e);
        if (!coeffs)
            continue;
        int inversions = 0;
        for (int i = 0; i < vars; ++i)
            for (int j = i + 1; j < vars; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        for (int k = 0; k <= Dx; ++k)
            acc[static_cast<std::size_t>(k)] = inversions % 2 ? sub_checked(acc[static_cast<std::size_t>(k)], coeffs[k])
                                                              : add_checked(acc[static_cast<std::size_t>(k)], coeffs[k]);
    } while (std::next_permutation(perm.begin(), perm.end()));

    PoincareSeries shifted(Dx);
    for (int k = 0; k <= Dx; ++k)
        shifted[k] = to_big(acc[static_cast<std::size_t>(k)]);
    shifted *= base_series(b, Dx);
    auto out = shifted.lowered(N);
    if (!out.non_negative())
        throw std::logic_error("stable oracle: negative coefficient for " + lambda.to_string());
    if (!parity_clean(out, N % 2)) {
        std::lock_guard lock(warn_mutex_);
        parity_warnings_.push_back(lambda);
    }
    return out;
}

std::shared_ptr<const StableOracle> make_oracle(OracleKind kind)
{
    if (kind == OracleKind::Column)
        return std::make_shared<ColumnOracle>();
    return std::make_shared<WeightedPartitionOracle>();
}

} // namespace betti
