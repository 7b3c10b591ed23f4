#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgap/gapcore.hpp"
#include "cgap/measure.hpp"

namespace cgap {

enum class Distribution { uniform, binomial };

std::string_view to_string(Distribution d) noexcept;
// Accepts "uniform" or "binomial"; throws domain_error otherwise.
Distribution parse_distribution(std::string_view name);

// One simulated gap stream. k is the log2 of the gap range (1..30).
struct SimSpec {
    Distribution dist = Distribution::uniform;
    unsigned k = 1;
    std::uint64_t n = 100000;
    std::uint64_t seed = 1;
};

// Gaps uniform over [1, 2^k + 1]. The universe is the sum of the gaps, so the
// last element is u-1.
GapStream uniform_gaps(const SimSpec& spec);

// Gaps 1 + Binomial(2^k, 1/2), universe as above.
GapStream binomial_gaps(const SimSpec& spec);

GapStream generate_gaps(const SimSpec& spec);

// Seed of one (dist, k) row, derived from the table seed so rows are independent
// of each other and of evaluation order.
std::uint64_t row_seed(std::uint64_t seed, Distribution dist, unsigned k) noexcept;

struct TableRow {
    Distribution dist;
    unsigned k;
    MeasureReport report;
};

// One row per k in [k_min, k_max]. Throws domain_error on an invalid range.
std::vector<TableRow> simulate_table(Distribution dist, unsigned k_min, unsigned k_max, std::uint64_t n,
                                     std::uint64_t seed);

// dist,k,n,u,d,gap,gap_zdelta,uh0,nh0g,nh0g_zdelta,nh0g_zdelta_cb
std::string table_csv_header();
std::string table_csv_row(const TableRow& row);
void write_table_csv(std::ostream& out, std::span<const TableRow> rows);

} // namespace cgap
