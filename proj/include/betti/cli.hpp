#pragma once

#include <ostream>
#include <string>

#include "betti/assembler.hpp"
#include "betti/figure1.hpp"
#include "betti/stable_oracle.hpp"

namespace betti::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_mismatch = 2,
    exit_capability = 3,
};

enum class Format { Table, Csv, Json };

std::string render(const BettiReport& report, Format format);

// Recomputes every cell of `table` and prints one line per cell plus a summary.
// Rank-2 rows are also checked against closed_form_n2.
int verify_figure1(const Figure1Table& table, const StableOracle& oracle, int jobs, std::ostream& out);

void render_stable_range(int max_degree, std::ostream& out);

// Entry point of the stable-betti tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace betti::cli
