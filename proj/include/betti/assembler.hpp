#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "betti/graded_algebra.hpp"
#include "betti/group.hpp"
#include "betti/poincare_series.hpp"
#include "betti/stable_oracle.hpp"

namespace betti {

struct OracleCapabilityExceeded : std::runtime_error {
    explicit OracleCapabilityExceeded(std::vector<Partition> unsupported);
    std::vector<Partition> partitions;
};

struct BettiReport {
    Group group;
    int rank;
    std::optional<int> degree_class;   // label only
    int max_degree;
    PoincareSeries betti;
    int min_valid_genus;
    std::string oracle_version;
};

// Mg for PGL, Mg1 for SL and GL.
BaseSpace base_for(Group group);

// sum over terms (lambda, d, m): m t^d oracle(lambda, base), then times sym_series(n, D).
PoincareSeries assemble(const GradedIrrepSum& coefficients, BaseSpace base, int n, const StableOracle& oracle,
                        int jobs = 1);

// Stable Poincare series of the character variety through degree D.
// Throws std::invalid_argument for n < 2, OracleCapabilityExceeded when the oracle
// lacks some partition of the coefficient system.
PoincareSeries betti_series(Group group, int n, int max_degree, const StableOracle& oracle, int jobs = 1);

// Rank-2 answer by the explicit sums over (r, m, i) (PGL, SL) and
// (r1, r2, m, i, j, a, b) (GL). GL needs two-column shapes, taken from `oracle`.
PoincareSeries closed_form_n2(Group group, int max_degree, const StableOracle& oracle);

// Least g >= 2 with 3D <= 2g - 2 and D <= 2(g-1)(n-1) + 2.
int min_valid_genus(int n, int max_degree);

BettiReport make_report(Group group, int n, std::optional<int> degree_class, int max_degree,
                        const StableOracle& oracle, int jobs = 1);

} // namespace betti
