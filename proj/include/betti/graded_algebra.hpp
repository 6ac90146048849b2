#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "betti/group.hpp"
#include "betti/partition.hpp"
#include "betti/poincare_series.hpp"

namespace betti {

// A term S<lambda>[-d]: irreducible lambda placed in cohomological degree d.
struct GradedKey {
    int degree;
    Partition lambda;

    friend bool operator==(const GradedKey&, const GradedKey&) = default;
    friend auto operator<=>(const GradedKey& a, const GradedKey& b)
    {
        if (auto c = a.degree <=> b.degree; c != 0)
            return c;
        return a.lambda <=> b.lambda;
    }
};

// Finite sum of shifted symplectic irreducibles, known up to degree D.
class GradedIrrepSum {
public:
    explicit GradedIrrepSum(int max_degree);
    static GradedIrrepSum unit(int max_degree);

    int max_degree() const noexcept { return max_degree_; }
    // True once some term above D has been dropped.
    bool truncated() const noexcept { return truncated_; }
    const std::map<GradedKey, BigInt>& terms() const noexcept { return terms_; }
    BigInt multiplicity(const Partition& lambda, int degree) const;

    // Adds m copies of S<lambda>[-degree]; terms above D are dropped.
    void add(const Partition& lambda, int degree, const BigInt& m);
    void mark_truncated() noexcept { truncated_ = true; }

    // Forgets structure: sum of dim(lambda) t^d for a given dimension function.
    template <class DimFn>
    PoincareSeries graded_dimension(DimFn&& dim) const
    {
        PoincareSeries out(max_degree_);
        for (const auto& [key, m] : terms_)
            out[key.degree] += m * dim(key.lambda);
        return out;
    }

    friend bool operator==(const GradedIrrepSum& a, const GradedIrrepSum& b)
    {
        return a.max_degree_ == b.max_degree_ && a.terms_ == b.terms_;
    }

private:
    int max_degree_;
    bool truncated_ = false;
    std::map<GradedKey, BigInt> terms_;
};

std::ostream& operator<<(std::ostream& os, const GradedIrrepSum& s);

// Bilinear extension of S<mu>[-d1] (x) S<nu>[-d2] = sum N^lambda_{mu nu} S<lambda>[-d1-d2].
// Work is split over `jobs` threads; the result does not depend on it.
GradedIrrepSum tensor(const GradedIrrepSum& a, const GradedIrrepSum& b, int jobs = 1);

// Stable decomposition of the r-th exterior power of the standard representation:
// columns <1^k> with k <= r, k = r mod 2.
std::vector<Partition> exterior_column_decomposition(int r);

// Exterior algebra on V[-s] (V in degree 1), with wedge^r in degree r(s+1).
GradedIrrepSum exterior_algebra_shifted(int s, int max_degree);

// PGL, SL: tensor over i = 1..n-1 of exterior_algebra_shifted(2i, D).
// GL: additionally tensored with exterior_algebra_shifted(0, D).
GradedIrrepSum coefficient_system(Group group, int n, int max_degree, int jobs = 1);

// prod_{i=1}^{n-1} 1/((1 - t^{2i})(1 - t^{2i+2})).
PoincareSeries sym_series(int n, int max_degree);

} // namespace betti
